//! Executing scenario jobs into records.

use std::sync::Arc;
use std::time::Instant;

use cyclic_bar::bar::{shear_record, wedge_tuples, Comparison, CyclicBar, CyclicWedge, IntermediateT, Nerve, PointedWedge, Side as ShearSide, WedgeRow};
use cyclic_bar::checks::{
    corrupted_nerve, cyclic_pi0_check, gluing_suite, partial_monoid_counterexample, realization_suite,
    semidirect_check, suspension_check, wedge_nerve_iso, CheckError, SUITE_TRUNCATION,
};
use cyclic_bar::homology::{homology_table, HomologyRow};
use cyclic_bar::loopgroup::kan_loop_group;
use cyclic_bar::report::{Record, Status};
use cyclic_bar::BigInt;
use cyclic_bar::sset::build::{
    boundary_simplex, cone, minimal_sphere, point, product, simplicial_circle, smash, std_simplex, wedge,
};
use cyclic_bar::sset::{
    check_identities, materialize_capped, validate_identities, Diagonal, SimplicialObject, SimplicialSet, SsetError,
};
use rayon::prelude::*;

use crate::scenario::{Job, JobBody, Scenario, Side, SpaceExpr, VerifyJob};

#[derive(Clone, Copy, Debug, Default)]
pub struct RunConfig {
    pub parallel: bool,
    /// Attach wall-clock times; reports stop being byte-reproducible.
    pub timing: bool,
}

#[derive(Clone, Debug)]
pub struct JobReport {
    /// 1-based position in the scenario.
    pub index: usize,
    pub line: usize,
    pub text: String,
    pub records: Vec<Record>,
    pub table: Option<Vec<HomologyRow>>,
    pub counts: Option<Vec<usize>>,
    pub elapsed_ms: Option<u128>,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub jobs: Vec<JobReport>,
}

impl Report {
    pub fn records(&self) -> impl Iterator<Item = &Record> {
        self.jobs.iter().flat_map(|j| j.records.iter())
    }

    pub fn count(&self, status: Status) -> usize {
        self.records().filter(|r| r.status == status).count()
    }

    pub fn failed(&self) -> bool {
        self.count(Status::Fail) > 0
    }
}

/// Apply the simplex cap to a set built by a construction without its own
/// cap, reporting the first degree where the running total crosses it.
fn capped(x: SimplicialSet, cap: usize) -> Result<Arc<SimplicialSet>, SsetError> {
    let mut seen = 0usize;
    for (degree, c) in x.nondegenerate_counts().into_iter().enumerate() {
        seen = seen.saturating_add(c);
        if seen > cap {
            return Err(SsetError::CapExceeded { cap, degree });
        }
    }
    Ok(Arc::new(x))
}

fn materialized<O: SimplicialObject>(obj: &O, cap: usize) -> Result<Arc<SimplicialSet>, SsetError> {
    Ok(Arc::new(materialize_capped(obj, cap)?.set))
}

fn given(x: &SimplicialSet, n: usize) -> Arc<SimplicialSet> {
    if x.truncation() > n {
        Arc::new(x.retruncate(n))
    } else {
        Arc::new(x.clone())
    }
}

/// Build a space truncated at `n`. Given sets are cut down to `n` but never
/// extended; homology marks the missing degrees unreliable.
pub fn build_space(expr: &SpaceExpr, n: usize, cap: usize) -> Result<Arc<SimplicialSet>, SsetError> {
    let sub = |e: &SpaceExpr| build_space(e, n, cap);
    match expr {
        SpaceExpr::Point => Ok(Arc::new(point(n))),
        SpaceExpr::Circle => Ok(Arc::new(simplicial_circle(n))),
        SpaceExpr::Simplex(k) => capped(std_simplex(*k, n)?, cap),
        SpaceExpr::Boundary(k) => capped(boundary_simplex(*k, n)?, cap),
        SpaceExpr::Sphere(k) => capped(minimal_sphere(*k, n)?, cap),
        SpaceExpr::Nerve(m) => materialized(
            &Nerve {
                monoid: m.clone(),
                truncation: n,
            },
            cap,
        ),
        SpaceExpr::CyclicBar(a) => materialized(
            &CyclicBar {
                action: a.clone(),
                truncation: n,
            },
            cap,
        ),
        SpaceExpr::Wedge(a, b) => capped(wedge(&*sub(a)?, &*sub(b)?)?, cap),
        SpaceExpr::Product(a, b) => capped(product(&*sub(a)?, &*sub(b)?)?, cap),
        SpaceExpr::Smash(a, b) => capped(smash(&*sub(a)?, &*sub(b)?)?, cap),
        SpaceExpr::Skeleton(a, k) => Ok(Arc::new(sub(a)?.skeleton(*k))),
        SpaceExpr::Cone(a) => capped(cone(&*sub(a)?)?, cap),
        SpaceExpr::PointedWedge(a) => materialized(&Diagonal(PointedWedge::new(sub(a)?, n)?), cap),
        SpaceExpr::GeneralizedWedge(s) => materialized(
            &WedgeRow {
                sit: s.clone(),
                truncation: n,
            },
            cap,
        ),
        SpaceExpr::Intermediate(a) => {
            let t = IntermediateT {
                aug: a.clone(),
                truncation: n,
            };
            if let Some(v) = check_identities(&t, n).into_iter().next() {
                return Err(SsetError::Invalid(v.to_string()));
            }
            materialized(&t, cap)
        }
        SpaceExpr::CyclicWedge(a) => materialized(
            &CyclicWedge {
                aug: a.clone(),
                truncation: n,
            },
            cap,
        ),
        SpaceExpr::Given(x) => Ok(given(x, n)),
        SpaceExpr::CorruptedNerve => Ok(given(&corrupted_nerve(), n)),
    }
}

/// Errors inside a job become records: a cap overrun is flagged, anything
/// else fails the job.
fn error_record(check: &str, instance: &str, degrees: usize, err: CheckError) -> Record {
    match err {
        CheckError::Sset(SsetError::CapExceeded { cap, degree }) => Record::new(check, instance, degrees, Status::Flagged)
            .with_note(&format!("simplex cap {cap} exceeded in degree {degree}")),
        e => Record::new(check, instance, degrees, Status::Fail).with_witness(format!("error: {e}")),
    }
}

struct Output {
    records: Vec<Record>,
    table: Option<Vec<HomologyRow>>,
    counts: Option<Vec<usize>>,
}

impl From<Record> for Output {
    fn from(r: Record) -> Self {
        Output {
            records: vec![r],
            table: None,
            counts: None,
        }
    }
}

fn catch(check: &str, instance: &str, degrees: usize, f: impl FnOnce() -> Result<Output, CheckError>) -> Output {
    f().unwrap_or_else(|e| error_record(check, instance, degrees, e).into())
}

/// First degree at which the comparison would enumerate more than `cap`
/// elements of `G^k × ⋁^k`.
fn comparison_cap(c: &Comparison, cap: usize) -> Option<usize> {
    let g = c.aug.g().size();
    let mut total = 0usize;
    for k in 0..=c.truncation {
        let gs = g.checked_pow(k as u32).filter(|&n| n <= cap);
        let count = gs.and_then(|n| n.checked_mul(wedge_tuples(c.aug.sit(), k).len()));
        total = match count.and_then(|n| total.checked_add(n)) {
            Some(t) if t <= cap => t,
            _ => return Some(k),
        };
    }
    None
}

fn run_verify(v: &VerifyJob, sc: &Scenario) -> Output {
    let (trunc, cap, seed) = (sc.trunc, sc.cap, sc.seed);
    match v {
        VerifyJob::Identities(space) => catch("simplicial identities", &space.label, trunc, || {
            let x = build_space(&space.expr, trunc, cap)?;
            let found = validate_identities(&x);
            let rec = Record::from_witness(
                "simplicial identities",
                &space.label,
                x.truncation(),
                found.first().map(|v| v.to_string()),
            )
            .with_note(&format!("{} violations", found.len()));
            Ok(rec.into())
        }),
        VerifyJob::Comparison(aug, upto) | VerifyJob::Bijection(aug, upto) => {
            let n = upto.unwrap_or(trunc);
            let check = if matches!(v, VerifyJob::Comparison(..)) {
                "comparison"
            } else {
                "u bijective"
            };
            catch(check, &aug.label, n, || {
                let c = Comparison::new(aug.aug.clone(), n)?;
                if let Some(d) = comparison_cap(&c, cap) {
                    return Err(SsetError::CapExceeded { cap, degree: d }.into());
                }
                let records = if matches!(v, VerifyJob::Comparison(..)) {
                    c.verify()
                } else {
                    vec![c.check_bijective()]
                };
                Ok(Output {
                    records,
                    table: None,
                    counts: None,
                })
            })
        }
        VerifyJob::Shear(_, act, side) => {
            let side = match side {
                Side::Left => ShearSide::Left,
                Side::Right => ShearSide::Right,
            };
            shear_record(act, side).into()
        }
        VerifyJob::WedgeNerve(m, upto) => wedge_nerve_iso(m.clone(), upto.unwrap_or(trunc)).into(),
        VerifyJob::Suspension(space, upto) => {
            let n = upto.unwrap_or(trunc);
            catch("wedge is a suspension", &space.label, n, || {
                let m = build_space(&space.expr, n + 1, cap)?;
                Ok(suspension_check(m, &space.label, n)?.into())
            })
        }
        VerifyJob::CyclicComponents(g) => catch("cyclic bar components are conjugacy classes", g.name(), 1, || {
            Ok(cyclic_pi0_check(g.clone())?.into())
        }),
        VerifyJob::Semidirect(aug) => semidirect_check(&aug.aug, &aug.label).into(),
        VerifyJob::LoopGroup(space, samples) => {
            let instance = format!("loop group of {}", space.label);
            catch("loop group identities", &instance, trunc, || {
                let x = build_space(&space.expr, trunc, cap)?;
                match kan_loop_group(x) {
                    Ok(l) => Ok(l.with_label(&space.label).sample_identity_check(*samples, seed).into()),
                    Err(e) => Ok(Record::new("loop group identities", &instance, trunc, Status::Flagged)
                        .with_note(&e.to_string())
                        .into()),
                }
            })
        }
        VerifyJob::Gluing(k) => catch("homological gluing", "suite", SUITE_TRUNCATION, || {
            Ok(gluing_suite(seed, *k)?.to_record("homological gluing", seed, SUITE_TRUNCATION).into())
        }),
        VerifyJob::Realization(k) => catch("homological realization", "suite", SUITE_TRUNCATION, || {
            Ok(realization_suite(seed, *k)?.to_record("homological realization", seed, SUITE_TRUNCATION).into())
        }),
    }
}

fn run_body(body: &JobBody, sc: &Scenario) -> Output {
    let (trunc, cap) = (sc.trunc, sc.cap);
    match body {
        JobBody::Build(space) => catch("build", &space.label, trunc, || {
            let x = build_space(&space.expr, trunc, cap)?;
            let counts = x.nondegenerate_counts();
            let total: usize = counts.iter().sum();
            let rec = Record::new("build", &space.label, x.truncation(), Status::Pass)
                .with_note(&format!("{total} nondegenerate simplices"));
            Ok(Output {
                records: vec![rec],
                table: None,
                counts: Some(counts),
            })
        }),
        JobBody::Homology {
            space,
            upto,
            reduced,
            expect,
        } => {
            let n = upto.unwrap_or(trunc);
            catch("homology", &space.label, n, || {
                let x = build_space(&space.expr, n + 1, cap)?;
                let mut table = homology_table::<BigInt>(&x, *reduced);
                table.truncate(n + 1);
                let unreliable: Vec<usize> = table.iter().filter(|r| !r.reliable).map(|r| r.degree).collect();
                let mut rec = Record::new("homology", &space.label, n, Status::Pass);
                if let Some(expect) = expect {
                    let got: Vec<String> = table.iter().map(HomologyRow::group).collect();
                    let mismatch = expect.iter().enumerate().find(|&(q, e)| got.get(q) != Some(e));
                    if let Some((q, e)) = mismatch {
                        let found = got.get(q).map_or("not computed", String::as_str);
                        rec = Record::new("homology", &space.label, n, Status::Fail)
                            .with_witness(format!("H_{q} is {found}, expected {e}"));
                    }
                }
                if rec.status == Status::Pass && !unreliable.is_empty() {
                    rec.status = Status::Flagged;
                    rec = rec.with_note(&format!("degrees {unreliable:?} sit at the input truncation"));
                }
                Ok(Output {
                    records: vec![rec],
                    table: Some(table),
                    counts: None,
                })
            })
        }
        JobBody::Verify(v) => run_verify(v, sc),
        JobBody::PartialMonoid(sit, p) => {
            let (m, elems) = sit.partial.as_ref().expect("checked at parse time");
            let refs: Vec<&str> = elems.iter().map(String::as_str).collect();
            catch("partial monoid nerve differs from the wedge", &sit.label, *p, || {
                Ok(partial_monoid_counterexample(m, &refs, *p)?.into())
            })
        }
    }
}

fn run_job(index: usize, job: &Job, sc: &Scenario, cfg: RunConfig) -> JobReport {
    let start = Instant::now();
    let out = run_body(&job.body, sc);
    JobReport {
        index: index + 1,
        line: job.line,
        text: job.text.clone(),
        records: out.records,
        table: out.table,
        counts: out.counts,
        elapsed_ms: cfg.timing.then(|| start.elapsed().as_millis()),
    }
}

/// Run the jobs of `sc` accepted by `keep`; the report lists them in
/// scenario order either way.
pub fn run_filtered(sc: &Scenario, cfg: RunConfig, keep: impl Fn(&Job) -> bool) -> Report {
    let jobs: Vec<(usize, &Job)> = sc.jobs.iter().enumerate().filter(|(_, j)| keep(j)).collect();
    let jobs = if cfg.parallel {
        jobs.par_iter().map(|&(k, j)| run_job(k, j, sc, cfg)).collect()
    } else {
        jobs.iter().map(|&(k, j)| run_job(k, j, sc, cfg)).collect()
    };
    Report { jobs }
}

pub fn run(sc: &Scenario, cfg: RunConfig) -> Report {
    run_filtered(sc, cfg, |_| true)
}
