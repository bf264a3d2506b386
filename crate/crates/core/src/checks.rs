//! Self-contained verification routines. Each returns report records so the
//! command line and the test suites share one implementation.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{
    check_action, semidirect_monoid, semidirect_opsit, AlgebraError, DiscreteMonoid, GAugmentedSituation,
    OperationSituation,
};
use crate::bar::{composable_tuples, wedge_tuples, Nerve, PointedWedge, WedgeRow};
use crate::homology::{
    map_homological_connectivity, normalized_chains, Connectivity, HomologyError, HomologyGroup,
};
use crate::report::{Record, Status};
use crate::sset::build::{from_facets, inclusion_by_name, pushout, pushout_map, Pushout};
use crate::sset::random::{cylinder, random_complex, random_facets, random_subcomplex, vertex_lists, vertex_map};
use crate::sset::{
    check_map, materialize, Diagonal, ExternalProduct, SimplicialMap, SimplicialObject, SimplicialSet, SsetError,
};
use crate::sset::bisimplicial::Row;

#[derive(Debug, Error)]
pub enum CheckError {
    #[error(transparent)]
    Sset(#[from] SsetError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// The guaranteed part of a connectivity value.
pub fn lower_bound(c: Connectivity) -> i64 {
    match c {
        Connectivity::Exactly(k) | Connectivity::AtLeast(k) => k,
    }
}

/// `⋁(H ⋎ H)` against the nerve of `H`: the identity on tuples must be a
/// simplicial bijection in every degree up to `n`.
pub fn wedge_nerve_iso(h: Arc<DiscreteMonoid>, n: usize) -> Record {
    let sit = Arc::new(OperationSituation::of_monoid(h.clone()));
    let wedge = WedgeRow {
        sit: sit.clone(),
        truncation: n,
    };
    let nerve = Nerve {
        monoid: h.clone(),
        truncation: n,
    };
    let f = |t: &Vec<usize>| -> Vec<usize> { t.iter().map(|&x| sit.in_h(x).expect("wedge of H ⋎ H")).collect() };
    let mut witness = check_map(&wedge, &nerve, f, n).first().map(|v| v.to_string());
    for k in 0..=n {
        if witness.is_some() {
            break;
        }
        let src = wedge.elements(k);
        let images: BTreeSet<Vec<usize>> = src.iter().map(f).collect();
        let target = nerve.elements(k).len();
        if images.len() != src.len() || images.len() != target {
            witness = Some(format!(
                "degree {k}: {} wedge tuples, {} distinct images, {target} nerve simplices",
                src.len(),
                images.len()
            ));
        }
    }
    Record::from_witness("wedge is the nerve", h.name(), n, witness)
}

fn groups(list: &[HomologyGroup<BigInt>]) -> String {
    list.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

/// Suspension: reduced `H_{q+1}` of the diagonal of `⋁(* ⋎ M)` against reduced
/// `H_q(M)` for `q + 1 <= upto`. Needs `M` known up to degree `upto + 1`.
pub fn suspension_check(m: Arc<SimplicialSet>, instance: &str, upto: usize) -> Result<Record, CheckError> {
    const CHECK: &str = "wedge is a suspension";
    if m.truncation() <= upto {
        return Ok(Record::new(CHECK, instance, m.truncation(), Status::Flagged).with_note(&format!(
            "the carrier is truncated at {}; degree {upto} needs {}",
            m.truncation(),
            upto + 1
        )));
    }
    let m = Arc::new(m.retruncate(upto + 1));
    let wedge = PointedWedge::new(m.clone(), upto + 1)?;
    let diag = materialize(&Diagonal(wedge))?.set;
    let cm = normalized_chains::<BigInt>(&m);
    let cd = normalized_chains::<BigInt>(&diag);
    let hm: Vec<_> = (0..upto).map(|q| cm.reduced_homology(q)).collect();
    let hd: Vec<_> = (0..=upto).map(|q| cd.reduced_homology(q)).collect();
    let witness = (0..upto).find(|&q| hd[q + 1] != hm[q]).map(|q| {
        format!(
            "reduced H_{} of the wedge is {} but reduced H_{q} of the carrier is {}",
            q + 1,
            hd[q + 1],
            hm[q]
        )
    });
    let witness = witness.or_else(|| (!hd[0].is_zero()).then(|| "the wedge is not connected".to_string()));
    Ok(Record::from_witness(CHECK, instance, upto, witness)
        .with_note(&format!("carrier: [{}]; wedge: [{}]", groups(&hm), groups(&hd))))
}

/// Tuples composable in the partial monoid of `m` relative to the submonoid
/// `a` that are missing from the degree-`p` wedge of `A ⋎ M`. Pass when such a
/// tuple exists. The witness prefers tuples whose two ends lie outside `A`.
pub fn partial_monoid_counterexample(m: &Arc<DiscreteMonoid>, a: &[&str], p: usize) -> Result<Record, CheckError> {
    const CHECK: &str = "partial monoid nerve differs from the wedge";
    let sit = OperationSituation::submonoid(m, a)?;
    let a_idx: Vec<usize> = a
        .iter()
        .map(|s| m.index(s).ok_or_else(|| AlgebraError::UnknownElement(s.to_string())))
        .collect::<Result<_, _>>()?;
    let name = |t: &[usize], names: &dyn Fn(usize) -> String| -> String {
        format!("({})", t.iter().map(|&x| names(x)).collect::<Vec<_>>().join(","))
    };
    let comp: BTreeMap<String, Vec<usize>> = composable_tuples(m, &a_idx, p)
        .into_iter()
        .map(|t| (name(&t, &|x| m.elem_name(x).to_string()), t))
        .collect();
    let roster: BTreeSet<String> = wedge_tuples(&sit, p)
        .iter()
        .map(|t| name(t, &|x| sit.m().name(x).to_string()))
        .collect();
    let mut missing: Vec<(&String, &Vec<usize>)> = comp.iter().filter(|(k, _)| !roster.contains(*k)).collect();
    let ends_in_a = |t: &[usize]| [t.first(), t.last()].iter().flatten().filter(|x| a_idx.contains(x)).count();
    missing.sort_by_key(|(_, t)| ends_in_a(t));
    let instance = format!("{} relative to {{{}}}", m.name(), a.join(","));
    let mut listed: Vec<&str> = missing.iter().take(8).map(|(k, _)| k.as_str()).collect();
    listed.sort_unstable();
    let note = format!(
        "{} composable tuples, {} wedge tuples, {} composable but not in the wedge: {}",
        comp.len(),
        roster.len(),
        missing.len(),
        listed.join(" ")
    );
    Ok(match missing.first() {
        Some((t, _)) => Record::new(CHECK, &instance, p, Status::Pass)
            .with_witness(format!("{t} is composable but not in the degree {p} wedge"))
            .with_note(&note),
        None => Record::new(CHECK, &instance, p, Status::Flagged)
            .with_note(&format!("no counterexample in degree {p}; {note}")),
    })
}

/// Number of components of the cyclic bar construction of `G` acting on itself
/// by translation, against the number of conjugacy classes.
pub fn cyclic_pi0_check(g: Arc<DiscreteMonoid>) -> Result<Record, CheckError> {
    const CHECK: &str = "cyclic bar components are conjugacy classes";
    let Some(classes) = g.conjugacy_classes() else {
        return Ok(Record::new(CHECK, g.name(), 1, Status::Flagged).with_note("conjugacy needs inverses"));
    };
    let act = Arc::new(crate::algebra::TwoSidedAction::translation(g.clone()));
    let n = crate::bar::cyclic_bar(act, 1)?;
    let comps = crate::sset::build::pi0(&n);
    let witness = (comps != classes).then(|| format!("{comps} components but {classes} conjugacy classes"));
    Ok(Record::from_witness(CHECK, g.name(), 1, witness).with_note(&format!("{comps} components")))
}

/// `Z/2` acting on a group `H` by inversion from the left and trivially from
/// the right, on `H ⋎ H`. Requires `H` commutative.
pub fn inversion_augmentation(h: Arc<DiscreteMonoid>) -> Result<GAugmentedSituation, AlgebraError> {
    let z2 = Arc::new(crate::algebra::cyclic(2));
    let sit = OperationSituation::of_monoid(h.clone());
    let inv = |g: usize, x: usize| if g == z2.unit() { x } else { h.inverse(x).unwrap_or(x) };
    let on_h = check_action(z2.clone(), Arc::new(h.as_set().clone()), inv, |x, _| x)?;
    let on_m = check_action(z2.clone(), sit.m().clone(), inv, |x, _| x)?;
    GAugmentedSituation::new(sit, on_h, on_m)
}

/// Build `G ⋉ H` and `(G ⋉ H) ⋎ (G × M)`; both constructors re-validate.
pub fn semidirect_check(aug: &GAugmentedSituation, instance: &str) -> Record {
    const CHECK: &str = "semidirect product";
    let gh = match semidirect_monoid(aug.on_h(), aug.sit().h()) {
        Ok(m) => m,
        Err(e) => return Record::new(CHECK, instance, 0, Status::Fail).with_witness(e.to_string()),
    };
    if let Err(e) = semidirect_opsit(aug) {
        return Record::new(CHECK, instance, 0, Status::Fail).with_witness(e.to_string());
    }
    let shape = match gh.noncommuting_pair() {
        Some((a, b)) => format!(
            "noncommutative: {}{} != {}{}",
            gh.elem_name(a),
            gh.elem_name(b),
            gh.elem_name(b),
            gh.elem_name(a)
        ),
        None => "commutative".to_string(),
    };
    Record::new(CHECK, instance, 0, Status::Pass).with_note(&format!("order {}, {shape}", gh.size()))
}

/// The nerve of `Z/2` up to degree 3 with face 0 of its nondegenerate
/// 3-simplex replaced by the degenerate `s_0` of the edge.
pub fn corrupted_nerve() -> SimplicialSet {
    let n = crate::bar::nerve(Arc::new(crate::algebra::cyclic(2)), 3).expect("nerve of Z/2");
    let top = n.roster(3)[0];
    let edge = crate::sset::Simplex::nondegenerate(n.roster(1)[0]).degenerate(0);
    n.with_replaced_face(top, 0, edge)
}

/// Outcome of a randomized property suite.
#[derive(Clone, Debug, Default)]
pub struct SuiteSummary {
    pub instances: usize,
    /// Instances whose hypothesis carries no information (connectivity below 0).
    pub vacuous: usize,
    pub violations: usize,
    /// Instances where the conclusion is exactly the hypothesis bound.
    pub tight: usize,
    pub first_violation: Option<String>,
}

impl SuiteSummary {
    fn record(&mut self, hypothesis: i64, conclusion: Connectivity, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if hypothesis < 0 {
            self.vacuous += 1;
        }
        if conclusion == Connectivity::Exactly(hypothesis) {
            self.tight += 1;
        }
        if lower_bound(conclusion) < hypothesis {
            self.violations += 1;
            if self.first_violation.is_none() {
                self.first_violation = Some(format!(
                    "{}: conclusion {conclusion} below hypothesis {hypothesis}",
                    describe()
                ));
            }
        }
    }

    pub fn to_record(&self, check: &str, seed: u64, degrees: usize) -> Record {
        let instance = format!("seed {seed}, {} instances", self.instances);
        Record::from_witness(check, &instance, degrees, self.first_violation.clone()).with_note(&format!(
            "{} violations, {} vacuous, {} tight; connectivity compared on reliable degrees",
            self.violations, self.vacuous, self.tight
        ))
    }
}

/// Truncation used by both suites; connectivity is read below it.
pub const SUITE_TRUNCATION: usize = 3;

fn conn(f: &SimplicialMap) -> Result<Connectivity, CheckError> {
    Ok(map_homological_connectivity::<BigInt>(f)?)
}

/// One square `B <- A -> C`, with `A -> B` a subcomplex inclusion and
/// `A -> C` induced by a clamping vertex map.
struct Square {
    a: Arc<SimplicialSet>,
    b: Arc<SimplicialSet>,
    c: Arc<SimplicialSet>,
    clamp: usize,
}

impl Square {
    fn random<R: Rng>(rng: &mut R) -> Result<Self, CheckError> {
        let t = SUITE_TRUNCATION;
        let v = rng.gen_range(3..=5);
        let b = Arc::new(random_complex(rng, v, 2, t)?);
        let (a, _) = random_subcomplex(rng, &b)?;
        let clamp = if rng.gen_bool(0.5) { rng.gen_range(1..v) } else { usize::MAX };
        let nv = v + rng.gen_range(0..=2);
        let mut facets: Vec<Vec<usize>> = vertex_lists(&a)?
            .into_iter()
            .map(|vs| vs.into_iter().map(|x| x.min(clamp)).collect())
            .collect();
        let count = rng.gen_range(1..=3);
        facets.extend(random_facets(rng, nv, 2, count));
        let c = Arc::new(from_facets(&facets, t)?);
        Ok(Square { a, b, c, clamp })
    }

    fn pushout(&self) -> Result<Pushout, CheckError> {
        let f = inclusion_by_name(self.a.clone(), self.b.clone())?;
        let clamp = self.clamp;
        let g = vertex_map(self.a.clone(), self.c.clone(), move |x| x.min(clamp))?;
        Ok(pushout(&f, &g)?)
    }

    fn skeleton(&self, m: usize) -> Self {
        Square {
            a: Arc::new(self.a.skeleton(m)),
            b: Arc::new(self.b.skeleton(m)),
            c: Arc::new(self.c.skeleton(m)),
            clamp: self.clamp,
        }
    }

    fn cylinder(&self) -> Result<Self, CheckError> {
        Ok(Square {
            a: Arc::new(cylinder(&self.a)?),
            b: Arc::new(cylinder(&self.b)?),
            c: Arc::new(cylinder(&self.c)?),
            clamp: self.clamp,
        })
    }

    fn describe(&self) -> String {
        format!(
            "A {:?}, B {:?}, C {:?}",
            self.a.nondegenerate_counts(),
            self.b.nondegenerate_counts(),
            self.c.nondegenerate_counts()
        )
    }
}

/// The clamp acts on the vertex coding `2v + e` of a cylinder levelwise.
fn cylinder_pushout(sq: &Square, cyl: &Square) -> Result<Pushout, CheckError> {
    let f = inclusion_by_name(cyl.a.clone(), cyl.b.clone())?;
    let clamp = sq.clamp;
    let g = vertex_map(cyl.a.clone(), cyl.c.clone(), move |w| 2 * (w / 2).min(clamp) + w % 2)?;
    Ok(pushout(&f, &g)?)
}

/// Gluing: for a map of pushout squares along cofibrations whose three
/// components are `n`-connected, the induced map of pushouts is `n`-connected.
/// Squares are random ordered complexes; the maps of squares are skeleton
/// inclusions, cylinder projections and bottom inclusions into cylinders.
pub fn gluing_suite(seed: u64, instances: usize) -> Result<SuiteSummary, CheckError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = SuiteSummary::default();
    for k in 0..instances {
        let sq = Square::random(&mut rng)?;
        let p = sq.pushout()?;
        let family = k % 3;
        let (hyp, induced) = match family {
            0 => {
                let m = rng.gen_range(0..=2);
                let sk = sq.skeleton(m);
                let ps = sk.pushout()?;
                let maps = [
                    inclusion_by_name(sk.a.clone(), sq.a.clone())?,
                    inclusion_by_name(sk.b.clone(), sq.b.clone())?,
                    inclusion_by_name(sk.c.clone(), sq.c.clone())?,
                ];
                let hyp = min_conn(&maps)?;
                (hyp, pushout_map(&ps, &p, &maps[1], &maps[2])?)
            }
            1 => {
                let cyl = sq.cylinder()?;
                let pc = cylinder_pushout(&sq, &cyl)?;
                let maps = [
                    vertex_map(cyl.a.clone(), sq.a.clone(), |w| w / 2)?,
                    vertex_map(cyl.b.clone(), sq.b.clone(), |w| w / 2)?,
                    vertex_map(cyl.c.clone(), sq.c.clone(), |w| w / 2)?,
                ];
                let hyp = min_conn(&maps)?;
                (hyp, pushout_map(&pc, &p, &maps[1], &maps[2])?)
            }
            _ => {
                let cyl = sq.cylinder()?;
                let pc = cylinder_pushout(&sq, &cyl)?;
                let maps = [
                    vertex_map(sq.a.clone(), cyl.a.clone(), |v| 2 * v)?,
                    vertex_map(sq.b.clone(), cyl.b.clone(), |v| 2 * v)?,
                    vertex_map(sq.c.clone(), cyl.c.clone(), |v| 2 * v)?,
                ];
                let hyp = min_conn(&maps)?;
                (hyp, pushout_map(&p, &pc, &maps[1], &maps[2])?)
            }
        };
        summary.record(hyp, conn(&induced)?, || format!("instance {k} (family {family}), {}", sq.describe()));
    }
    Ok(summary)
}

fn min_conn(maps: &[SimplicialMap]) -> Result<i64, CheckError> {
    let mut out = i64::MAX;
    for f in maps {
        out = out.min(lower_bound(conn(f)?));
    }
    Ok(out)
}

/// A random map `g: Y -> Y'` of ordered complexes: a skeleton inclusion, the
/// bottom inclusion into the cylinder, the cylinder projection or a clamp.
fn random_map<R: Rng>(rng: &mut R, family: usize) -> Result<SimplicialMap, CheckError> {
    let t = SUITE_TRUNCATION;
    let v = rng.gen_range(2..=3);
    let y = Arc::new(random_complex(rng, v, 2, t)?);
    Ok(match family {
        0 => {
            let m = rng.gen_range(0..=1);
            inclusion_by_name(Arc::new(y.skeleton(m)), y)?
        }
        1 => vertex_map(y.clone(), Arc::new(cylinder(&y)?), |x| 2 * x)?,
        2 => vertex_map(Arc::new(cylinder(&y)?), y, |w| w / 2)?,
        _ => {
            let clamp = rng.gen_range(0..v);
            let facets: Vec<Vec<usize>> = vertex_lists(&y)?
                .into_iter()
                .map(|vs| vs.into_iter().map(|x| x.min(clamp)).collect())
                .collect();
            let target = Arc::new(from_facets(&facets, t)?);
            vertex_map(y, target, move |x| x.min(clamp))?
        }
    })
}

/// Realization: for a map of bisimplicial sets that is `n`-connected on every
/// row, the map of diagonals is `n`-connected. Instances are `X ⊠ g` for random
/// complexes `X` and random maps `g`.
pub fn realization_suite(seed: u64, instances: usize) -> Result<SuiteSummary, CheckError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = SuiteSummary::default();
    for k in 0..instances {
        let vx = rng.gen_range(1..=3);
        let x = Arc::new(random_complex(&mut rng, vx, 2, SUITE_TRUNCATION)?);
        let family = k % 4;
        let g = random_map(&mut rng, family)?;
        let src = ExternalProduct {
            x: x.clone(),
            y: g.source().clone(),
        };
        let tgt = ExternalProduct {
            x: x.clone(),
            y: g.target().clone(),
        };
        let along = |e: &(crate::sset::Simplex, crate::sset::Simplex)| (e.0.clone(), g.apply(&e.1));
        let mut hyp = i64::MAX;
        for p in 0..=SUITE_TRUNCATION {
            let s = materialize(&Row { b: &src, p })?;
            let t = materialize(&Row { b: &tgt, p })?;
            let f = SimplicialMap::from_materialized(&s, &t, along)?;
            hyp = hyp.min(lower_bound(conn(&f)?));
        }
        let s = materialize(&Diagonal(src.clone()))?;
        let t = materialize(&Diagonal(tgt.clone()))?;
        let f = SimplicialMap::from_materialized(&s, &t, along)?;
        summary.record(hyp, conn(&f)?, || {
            format!(
                "instance {k} (family {family}), X {:?}, Y {:?}, Y' {:?}",
                x.nondegenerate_counts(),
                g.source().nondegenerate_counts(),
                g.target().nondegenerate_counts()
            )
        });
    }
    Ok(summary)
}
