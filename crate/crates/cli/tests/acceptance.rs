//! One line per acceptance criterion, each with its own time limit. Exits
//! nonzero if any criterion fails or runs over.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use cyclic_bar::algebra::{cyclic, semidirect_monoid, semidirect_opsit, symmetric, with_zero, DiscreteMonoid};
use cyclic_bar::algebra::{GAugmentedSituation, OperationSituation, TwoSidedAction};
use cyclic_bar::bar::{composable_tuples, intermediate_t, nerve, shear_record, wedge_tuples, Comparison, Side};
use cyclic_bar::checks::{
    cyclic_pi0_check, gluing_suite, inversion_augmentation, partial_monoid_counterexample, realization_suite,
    semidirect_check, suspension_check, wedge_nerve_iso,
};
use cyclic_bar::homology::{normalized_chains, smith_normal_form, DenseMatrix};
use cyclic_bar::report::Status;
use cyclic_bar::sset::build::{simplicial_circle, wedge};
use cyclic_bar::sset::{validate_identities, SimplicialObject};
use cyclic_bar::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn groups() -> Vec<Arc<DiscreteMonoid>> {
    vec![cyclic(2), cyclic(3), cyclic(4), symmetric(3)].into_iter().map(Arc::new).collect()
}

// ---- oracles -------------------------------------------------------------

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `Z <-0- Z <-n- Z <-0- Z <-n- ...` read off by hand: `H_0 = Z`, odd degrees
/// `Z/n`, positive even degrees `0`.
fn periodic_resolution(n: usize, k: usize) -> String {
    match k {
        0 => "Z".into(),
        k if k % 2 == 1 => format!("Z/{n}"),
        _ => "0".into(),
    }
}

/// Commuting pairs over the order.
fn burnside_classes(g: &DiscreteMonoid) -> usize {
    let commuting = g
        .elements()
        .flat_map(|a| g.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| g.mul(a, b) == g.mul(b, a))
        .count();
    commuting / g.size()
}

/// Diagonalize over i128 by repeated pivot remainders, then fix up the
/// divisibility chain with gcd/lcm sweeps.
fn naive_snf(rows: &[Vec<i64>]) -> Vec<i128> {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let (m, n) = (a.len(), a[0].len());
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pr, pc)) = (t..m).flat_map(|r| (t..n).map(move |c| (r, c))).find(|&(r, c)| a[r][c] != 0) else {
            break;
        };
        a.swap(t, pr);
        a.iter_mut().for_each(|row| row.swap(t, pc));
        loop {
            let p = a[t][t];
            let pivot_row = a[t].clone();
            for row in a.iter_mut().skip(t + 1) {
                let q = row[t] / p;
                row.iter_mut().zip(&pivot_row).for_each(|(x, y)| *x -= q * y);
            }
            for c in t + 1..n {
                let q = a[t][c] / p;
                for row in a.iter_mut() {
                    row[c] -= q * row[t];
                }
            }
            if let Some(r) = (t + 1..m).find(|&r| a[r][t] != 0) {
                a.swap(t, r);
            } else if let Some(c) = (t + 1..n).find(|&c| a[t][c] != 0) {
                a.iter_mut().for_each(|row| row.swap(t, c));
            } else {
                break;
            }
        }
        diag.push(a[t][t].abs());
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let (x, y) = (diag[i], diag[j]);
            let g = gcd(x, y);
            diag[i] = g;
            diag[j] = x / g * y;
        }
    }
    diag
}

// ---- criteria ------------------------------------------------------------

fn comparison() -> Outcome {
    let mut records = 0;
    for g in groups() {
        let k = g.size();
        let c = Comparison::new(Arc::new(GAugmentedSituation::translation(g.clone())), 4).map_err(|e| e.to_string())?;
        for r in c.verify() {
            ensure(r.passed(), || r.to_string())?;
            records += 1;
        }
        for n in 0..=4u32 {
            let expect = k.pow(n) * (1 + n as usize * k);
            let (s, t) = (c.source().elements(n as usize).len(), c.target_wedge().elements(n as usize).len());
            ensure(s == expect && t == expect, || format!("{}: degree {n} has {s} -> {t}, expected {expect}", g.name()))?;
        }
    }
    Ok(format!("4 groups, degree 4, {records} records"))
}

fn t_identities() -> Outcome {
    for g in groups() {
        let aug = Arc::new(GAugmentedSituation::translation(g.clone()));
        let r = Comparison::new(aug.clone(), 4).map_err(|e| e.to_string())?.check_t();
        ensure(r.passed(), || r.to_string())?;
        let t = intermediate_t(aug, 4).map_err(|e| e.to_string())?;
        let v = validate_identities(&t);
        ensure(v.is_empty(), || format!("{}: {}", g.name(), v[0]))?;
    }
    Ok("materialized T valid for 4 groups".into())
}

fn wedge_is_nerve() -> Outcome {
    for h in [cyclic(2), cyclic(3), with_zero()] {
        let r = wedge_nerve_iso(Arc::new(h), 4);
        ensure(r.passed(), || r.to_string())?;
    }
    Ok("Z/2, Z/3, {1,x,0} up to degree 4".into())
}

fn suspension() -> Outcome {
    let circle = simplicial_circle(4);
    let eight = wedge(&circle, &circle).map_err(|e| e.to_string())?;
    let rp = nerve(Arc::new(cyclic(2)), 4).map_err(|e| e.to_string())?.skeleton(3);
    // reduced homology of each carrier in degrees 0..2, by hand
    let cases = [
        ("circle", circle, ["0", "Z", "0"]),
        ("figure eight", eight, ["0", "Z^2", "0"]),
        ("sk3 nerve Z/2", rp, ["0", "Z/2", "0"]),
    ];
    for (name, m, carrier) in cases {
        let r = suspension_check(Arc::new(m), name, 3).map_err(|e| e.to_string())?;
        ensure(r.passed(), || r.to_string())?;
        let expect = format!("carrier: [{}]; wedge: [0, {}]", carrier.join(", "), carrier.join(", "));
        ensure(r.note.as_deref() == Some(expect.as_str()), || format!("{name}: {:?} vs {expect}", r.note))?;
    }
    Ok("3 carriers, q + 1 <= 3".into())
}

fn partial_monoid() -> Outcome {
    let m = Arc::new(with_zero());
    let (x, z, one) = (m.index("x").unwrap(), m.index("0").unwrap(), m.unit());
    // (x,0,x): x*0 = 0 and 0*x = 0, so the left-to-right products exist
    ensure(m.mul(x, z) == z && m.mul(m.mul(x, z), x) == z, || "table".into())?;
    ensure(composable_tuples(&m, &[one, z], 3).contains(&vec![x, z, x]), || "(x,0,x) not composable".into())?;
    let sit = OperationSituation::submonoid(&m, &["1", "0"]).map_err(|e| e.to_string())?;
    let (xm, zm) = (sit.m().index("x").unwrap(), sit.m().index("0").unwrap());
    ensure(!wedge_tuples(&sit, 3).contains(&vec![xm, zm, xm]), || "(x,0,x) is in the wedge".into())?;
    let r = partial_monoid_counterexample(&m, &["1", "0"], 3).map_err(|e| e.to_string())?;
    ensure(r.passed(), || r.to_string())?;
    Ok(r.witness.unwrap_or_default())
}

fn group_homology() -> Outcome {
    for n in [2usize, 3, 4] {
        let x = nerve(Arc::new(cyclic(n)), 4).map_err(|e| e.to_string())?;
        let c = normalized_chains::<BigInt>(&x);
        for k in 0..=3 {
            let got = c.homology(k).to_string();
            let expect = periodic_resolution(n, k);
            ensure(got == expect, || format!("H_{k}(nerve Z/{n}) = {got}, expected {expect}"))?;
        }
    }
    Ok("(Z, Z/n, 0, Z/n) for n = 2, 3, 4".into())
}

fn cyclic_components() -> Outcome {
    let mut counts = Vec::new();
    for g in [cyclic(2), cyclic(4), symmetric(3)] {
        let expect = burnside_classes(&g);
        let name = g.name().to_string();
        let r = cyclic_pi0_check(Arc::new(g)).map_err(|e| e.to_string())?;
        ensure(r.passed(), || r.to_string())?;
        ensure(r.note.as_deref() == Some(format!("{expect} components").as_str()), || r.to_string())?;
        counts.push(format!("{name}: {expect}"));
    }
    Ok(counts.join(", "))
}

fn shears() -> Outcome {
    for g in groups() {
        let act = TwoSidedAction::translation(g);
        for side in [Side::Left, Side::Right] {
            let r = shear_record(&act, side);
            ensure(r.passed(), || r.to_string())?;
        }
    }
    let r = shear_record(&TwoSidedAction::translation(Arc::new(with_zero())), Side::Left);
    ensure(r.status == Status::Fail && r.witness.is_some(), || r.to_string())?;
    Ok(format!("groups bijective; {{1,x,0}}: {}", r.witness.unwrap()))
}

fn semidirect() -> Outcome {
    let aug = inversion_augmentation(Arc::new(cyclic(3))).map_err(|e| e.to_string())?;
    let gh = semidirect_monoid(aug.on_h(), aug.sit().h()).map_err(|e| e.to_string())?;
    let noncommuting = gh.elements().any(|a| gh.elements().any(|b| gh.mul(a, b) != gh.mul(b, a)));
    ensure(gh.size() == 6 && noncommuting, || format!("order {}, noncommuting {noncommuting}", gh.size()))?;
    let r = semidirect_check(&aug, "Z/2 on Z/3");
    ensure(r.passed(), || r.to_string())?;
    for g in groups() {
        let aug = GAugmentedSituation::translation(g);
        let s = semidirect_opsit(&aug).map_err(|e| e.to_string())?;
        let iota: Vec<usize> = s.h().elements().map(|a| s.iota(a)).collect();
        OperationSituation::new(s.action().clone(), iota).map_err(|e| e.to_string())?;
    }
    Ok("order 6, nonabelian; translation opsits re-validate".into())
}

fn suites() -> Outcome {
    let g = gluing_suite(7, 60).map_err(|e| e.to_string())?;
    let r = realization_suite(7, 60).map_err(|e| e.to_string())?;
    for (name, s) in [("gluing", &g), ("realization", &r)] {
        ensure(s.instances >= 50 && s.violations == 0, || {
            format!("{name}: {} instances, {:?}", s.instances, s.first_violation)
        })?;
    }
    Ok(format!(
        "gluing {} instances ({} tight), realization {} instances ({} tight), 0 violations",
        g.instances, g.tight, r.instances, r.tight
    ))
}

fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let (r, c) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
    if rng.gen_bool(1.0 / 3.0) {
        let k = rng.gen_range(1..=r.min(c));
        let a: Vec<Vec<i64>> = (0..r).map(|_| (0..k).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let b: Vec<Vec<i64>> = (0..k).map(|_| (0..c).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        (0..r).map(|i| (0..c).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
    } else {
        (0..r).map(|_| (0..c).map(|_| rng.gen_range(-20..=20)).collect()).collect()
    }
}

fn cli_records(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_cybar"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    Ok(out.stdout)
}

fn snf_and_determinism() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    for case in 0..500 {
        let a = random_matrix(&mut rng);
        let m = DenseMatrix::from_rows(a.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(), a[0].len());
        let got: Vec<i128> = smith_normal_form(&m).factors.iter().map(|d| i128::try_from(d).unwrap()).collect();
        ensure(got == naive_snf(&a), || format!("case {case}: {a:?}"))?;
    }
    let args = ["selftest", "--format", "records", "--seed", "11"];
    let first = cli_records(&args)?;
    let second = cli_records(&args)?;
    let parallel = cli_records(&["selftest", "--format", "records", "--seed", "11", "--parallel"])?;
    ensure(first == second && first == parallel, || "selftest records differ between runs".into())?;
    Ok(format!("500 matrices; {} identical record lines x3", first.split(|&b| b == b'\n').count() - 1))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("comparison isomorphism u = w v", 10, comparison),
        ("T well-formed", 5, t_identities),
        ("wedge of H with itself is the nerve", 5, wedge_is_nerve),
        ("wedge over a point suspends", 30, suspension),
        ("partial-monoid counterexample", 1, partial_monoid),
        ("cyclic group homology", 10, group_homology),
        ("cyclic bar components", 5, cyclic_components),
        ("shear dichotomy", 1, shears),
        ("semidirect validity", 1, semidirect),
        ("gluing and realization suites", 60, suites),
        ("Smith normal form and CLI determinism", 30, snf_and_determinism),
    ];
    let mut failed = 0;
    for (k, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let over = took > Duration::from_secs(*limit);
        let (tag, detail) = match (&result, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the time limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("{tag} [{:>2}] {name}: {detail} ({:.2?} of {limit} s)", k + 1, took);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
