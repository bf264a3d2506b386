use std::sync::Arc;

use cyclic_bar::algebra::cyclic;
use cyclic_bar::bar::nerve;
use cyclic_bar::homology::{
    chain_map, homological_connectivity, map_homological_connectivity, mapping_cone, normalized_chains,
    smith_normal_form, Connectivity, DenseMatrix, HomologyGroup,
};
use cyclic_bar::sset::build::{
    boundary_simplex, cone_inclusion, pi0, point, product, pushout, simplicial_circle, smash, std_simplex,
    subcomplex, wedge,
};
use cyclic_bar::sset::{SimplicialMap, SimplicialSet};
use cyclic_bar::{Complex, Homology, Matrix};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn big(rows: &[&[i64]]) -> Matrix {
    let cols = rows.first().map_or(0, |r| r.len());
    DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(), cols)
}

fn h(x: &SimplicialSet, n: usize) -> Homology {
    let c: Complex = normalized_chains(x);
    assert!(c.is_reliable(n), "H_{n} requested at the truncation");
    c.homology(n)
}

fn rh(x: &SimplicialSet, n: usize) -> Homology {
    let c: Complex = normalized_chains(x);
    assert!(c.is_reliable(n));
    c.reduced_homology(n)
}

fn z(b: usize) -> Homology {
    HomologyGroup::free(b)
}

fn zero() -> Homology {
    z(0)
}

// ---- oracles -------------------------------------------------------------

/// Homology of `Z ⊗ (periodic resolution of Z over Z/n)`: the complex
/// `Z <-0- Z <-n- Z <-0- Z <-n- …`, computed by hand for 1x1 boundaries.
fn periodic_resolution_oracle(n: i64, k: usize) -> (usize, Option<i64>) {
    let boundary = |d: usize| -> i64 {
        if d == 0 || d % 2 == 1 {
            0
        } else {
            n
        }
    };
    let kernel_rank = if boundary(k) == 0 { 1 } else { 0 };
    let image = boundary(k + 1);
    match (kernel_rank, image) {
        (0, _) => (0, None),
        (1, 0) => (1, None),
        (_, m) if m.abs() == 1 => (0, None),
        (_, m) => (0, Some(m.abs())),
    }
}

/// Naive diagonalization over i128: first nonzero pivot, truncated-division
/// remainders, and gcd/lcm sweeps on the final diagonal. Overflow panics.
fn naive_snf(rows: &[Vec<i64>]) -> Vec<i128> {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        let pivot = (t..m).flat_map(|r| (t..n).map(move |c| (r, c))).find(|&(r, c)| a[r][c] != 0);
        let Some((pr, pc)) = pivot else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let p = a[t][t];
            for r in t + 1..m {
                let q = a[r][t] / p;
                for c in 0..n {
                    a[r][c] = a[r][c].checked_sub(q.checked_mul(a[t][c]).unwrap()).unwrap();
                }
            }
            for c in t + 1..n {
                let q = a[t][c] / p;
                for row in a.iter_mut() {
                    row[c] = row[c].checked_sub(q.checked_mul(row[t]).unwrap()).unwrap();
                }
            }
            if let Some(r) = (t + 1..m).find(|&r| a[r][t] != 0) {
                a.swap(t, r);
            } else if let Some(c) = (t + 1..n).find(|&c| a[t][c] != 0) {
                for row in a.iter_mut() {
                    row.swap(t, c);
                }
            } else {
                break;
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    let k = diag.len();
    for i in 0..k {
        for j in i + 1..k {
            let (x, y) = (diag[i], diag[j]);
            diag[i] = x.gcd(&y);
            diag[j] = x.lcm(&y);
        }
    }
    diag
}

fn det_i128(mut a: Vec<Vec<i128>>) -> i128 {
    // Bareiss fraction-free elimination
    let n = a.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Determinantal divisors `D_k = gcd of k×k minors`; factors are `D_k / D_{k-1}`.
fn determinantal_factors(rows: &[Vec<i64>]) -> Vec<i128> {
    let m = rows.len();
    let n = rows.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=m.min(n) {
        let mut g = 0i128;
        for rs in subsets(m, k) {
            for cs in subsets(n, k) {
                let minor = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| rows[r][c] as i128).collect())
                    .collect();
                g = g.gcd(&det_i128(minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let (r, c) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
    // a third of the instances are low rank, to exercise torsion and kernels
    let low = rng.gen_bool(1.0 / 3.0);
    if low {
        let k = rng.gen_range(1..=r.min(c));
        let a: Vec<Vec<i64>> = (0..r).map(|_| (0..k).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let b: Vec<Vec<i64>> = (0..k).map(|_| (0..c).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        (0..r)
            .map(|i| (0..c).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum::<i64>().clamp(-20, 20)).collect())
            .collect()
    } else {
        (0..r).map(|_| (0..c).map(|_| rng.gen_range(-20..=20)).collect()).collect()
    }
}

fn snf_factors(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let cols = rows.first().map_or(0, |r| r.len());
    let m = DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(), cols);
    smith_normal_form(&m).factors
}

// ---- Smith normal form ---------------------------------------------------

#[test]
fn snf_small_examples() {
    let s = smith_normal_form(&big(&[&[2, 4], &[6, 8]]));
    assert_eq!(s.factors, vec![BigInt::from(2), BigInt::from(4)]);
    assert_eq!(smith_normal_form(&Matrix::zeros(3, 2)).rank(), 0);
    let id = smith_normal_form(&Matrix::identity(4));
    assert_eq!(id.factors, vec![BigInt::from(1); 4]);
}

#[test]
fn snf_agrees_with_oracles_on_500_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for case in 0..500 {
        let a = random_matrix(&mut rng);
        let got: Vec<i128> = snf_factors(&a).iter().map(|d| i128::try_from(d).unwrap()).collect();
        assert_eq!(got, naive_snf(&a), "case {case}: {a:?}");
        for w in got.windows(2) {
            assert_eq!(w[1] % w[0], 0, "divisibility chain broken in case {case}");
        }
        if a.len().max(a[0].len()) <= 5 {
            assert_eq!(got, determinantal_factors(&a), "case {case}: {a:?}");
        }
    }
}

#[test]
fn snf_survives_entry_growth() {
    // a matrix whose naive elimination overflows 64-bit intermediates
    let n = 12;
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(((i * 7 + j * 13) % 23) as i64 - 11).pow((1 + (i + j) % 3) as u32)).collect())
        .collect();
    let m = DenseMatrix::from_rows(rows, n);
    let s = smith_normal_form(&m);
    for w in s.factors.windows(2) {
        assert!(w[1].is_multiple_of(&w[0]));
    }
}

proptest! {
    #[test]
    fn snf_product_is_the_determinant(rows in prop::collection::vec(prop::collection::vec(-20i64..=20, 4), 4)) {
        let got = snf_factors(&rows);
        let det = det_i128(rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect());
        if det != 0 {
            let prod: BigInt = got.iter().product();
            prop_assert_eq!(prod, BigInt::from(det.abs()));
        } else {
            prop_assert!(got.len() < 4);
        }
    }

    #[test]
    fn snf_is_invariant_under_transpose(rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 5), 3)) {
        let cols = 5;
        let m = DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(), cols);
        prop_assert_eq!(smith_normal_form(&m).factors, smith_normal_form(&m.transpose()).factors);
    }
}

// ---- homology of standard objects ---------------------------------------

#[test]
fn circle_boundary_is_zero() {
    let c: Complex = normalized_chains(&simplicial_circle(2));
    assert_eq!(c.boundary(1), &big(&[&[0]]));
    assert_eq!(rh(&simplicial_circle(2), 1), z(1));
    assert_eq!(homological_connectivity::<BigInt>(&simplicial_circle(3)), Connectivity::Exactly(0));
}

#[test]
fn point_has_no_higher_chains() {
    let p = point(3);
    let c: Complex = normalized_chains(&p);
    for n in 1..=3 {
        assert_eq!(c.dim(n), 0);
    }
    assert_eq!(homological_connectivity::<BigInt>(&p), Connectivity::AtLeast(2));
}

#[test]
fn nerve_z2_boundaries_alternate() {
    let x = nerve(Arc::new(cyclic(2)), 4).unwrap();
    let c: Complex = normalized_chains(&x);
    let expect = [0, 0, 2, 0, 2];
    for n in 1..=4 {
        assert_eq!(c.boundary(n), &big(&[&[expect[n]]]), "degree {n}");
    }
}

#[test]
fn cyclic_group_homology_matches_periodic_resolution() {
    for n in [2i64, 3, 4] {
        let x = nerve(Arc::new(cyclic(n as usize)), 4).unwrap();
        for k in 0..=3 {
            let (b, t) = periodic_resolution_oracle(n, k);
            let expect = match t {
                Some(d) => HomologyGroup::cyclic(BigInt::from(d)),
                None => z(b),
            };
            assert_eq!(h(&x, k), expect, "H_{k}(B Z/{n})");
        }
    }
    let x = nerve(Arc::new(cyclic(3)), 4).unwrap();
    let shown: Vec<String> = (0..4).map(|k| h(&x, k).to_string()).collect();
    assert_eq!(shown, ["Z", "Z/3", "0", "Z/3"]);
}

#[test]
fn products_wedges_and_smashes() {
    let s1 = simplicial_circle(3);
    let t = product(&s1, &s1).unwrap();
    assert_eq!(h(&t, 1), z(2));
    assert_eq!(h(&t, 2), z(1));
    let i = std_simplex(1, 2).unwrap();
    assert_eq!(product(&i, &i).unwrap().nondegenerate_counts()[2], 2);
    assert_eq!(h(&wedge(&s1, &s1).unwrap(), 1), z(2));
    let sm = smash(&s1, &s1).unwrap();
    assert_eq!(rh(&sm, 2), z(1));
    assert_eq!(rh(&sm, 1), zero());
    assert_eq!(rh(&sm, 0), zero());
}

fn inclusion_of_boundary(n: usize, trunc: usize) -> SimplicialMap {
    let simplex = Arc::new(std_simplex(n, trunc).unwrap());
    let bd = boundary_simplex(n, trunc).unwrap();
    let keep: Vec<_> = (0..n).flat_map(|d| simplex.roster(d).to_vec()).collect();
    let (sub, inc) = subcomplex(&simplex, &keep).unwrap();
    assert_eq!(sub.nondegenerate_counts(), bd.nondegenerate_counts());
    inc
}

#[test]
fn pushouts() {
    let inc = inclusion_of_boundary(1, 3);
    let to_pt = SimplicialMap::to_point(inc.source().clone(), Arc::new(point(3))).unwrap();
    let p = pushout(&inc, &to_pt).unwrap();
    assert_eq!(h(&p.object, 1), z(1));
    assert_eq!(h(&p.object, 0), z(1));
    let id = SimplicialMap::identity(inc.source().clone());
    let q = pushout(&id, &inc).unwrap();
    assert_eq!(q.object.nondegenerate_counts(), inc.target().nondegenerate_counts());

    // two cones on S^0 glued along S^0
    let s0 = Arc::new(boundary_simplex(1, 3).unwrap());
    let (_, c1) = cone_inclusion(&s0).unwrap();
    let (_, c2) = cone_inclusion(&s0).unwrap();
    let susp = pushout(&c1, &c2).unwrap();
    assert_eq!(h(&susp.object, 1), z(1));
    assert_eq!(pi0(&susp.object), 1);
}

// ---- chain maps and cones ------------------------------------------------

#[test]
fn identity_and_collapse() {
    let s1 = Arc::new(simplicial_circle(3));
    let id = chain_map::<BigInt>(&SimplicialMap::identity(s1.clone())).unwrap();
    for n in 0..=3 {
        assert_eq!(id.matrix(n), &Matrix::identity(s1.roster(n).len()));
    }
    let collapse = SimplicialMap::to_point(s1.clone(), Arc::new(point(3))).unwrap();
    assert!(chain_map::<BigInt>(&collapse).unwrap().matrix(1).is_zero());
    assert_eq!(
        map_homological_connectivity::<BigInt>(&SimplicialMap::identity(s1.clone())).unwrap(),
        Connectivity::AtLeast(2)
    );
    assert_eq!(map_homological_connectivity::<BigInt>(&collapse).unwrap(), Connectivity::Exactly(1));
    let f = chain_map::<BigInt>(&collapse).unwrap();
    let c: Complex = normalized_chains(&s1);
    let d: Complex = normalized_chains(&point(3));
    let cone = mapping_cone(&c, &d, &f);
    assert_eq!(cone.homology(2), z(1));
}

#[test]
fn chain_maps_compose() {
    let s1 = Arc::new(simplicial_circle(3));
    let (c, inc) = cone_inclusion(&s1).unwrap();
    let to_pt = SimplicialMap::to_point(c, Arc::new(point(3))).unwrap();
    let both = inc.compose(&to_pt).unwrap();
    let lhs = chain_map::<BigInt>(&both).unwrap();
    let rhs = chain_map::<BigInt>(&inc).unwrap().then(&chain_map::<BigInt>(&to_pt).unwrap());
    assert_eq!(lhs, rhs);
}

#[test]
fn euler_characteristic_and_components() {
    let s1 = simplicial_circle(4);
    let objects = vec![
        s1.clone(),
        product(&s1, &s1).unwrap(),
        wedge(&s1, &s1).unwrap(),
        boundary_simplex(3, 4).unwrap(),
        std_simplex(2, 4).unwrap(),
        smash(&s1, &s1).unwrap(),
    ];
    for x in objects {
        let top = x.top_degree().unwrap();
        assert!(top < x.truncation());
        let chi: i64 = x
            .nondegenerate_counts()
            .iter()
            .enumerate()
            .map(|(n, &k)| if n % 2 == 0 { k as i64 } else { -(k as i64) })
            .sum();
        let c: Complex = normalized_chains(&x);
        let betti: i64 = (0..x.truncation())
            .map(|n| {
                let b = c.homology(n).betti as i64;
                if n % 2 == 0 {
                    b
                } else {
                    -b
                }
            })
            .sum();
        assert_eq!(chi, betti);
        assert_eq!(c.homology(0).betti, pi0(&x));
    }
}

#[test]
fn boundary_squared_vanishes() {
    let s1 = simplicial_circle(4);
    for x in [nerve(Arc::new(cyclic(3)), 4).unwrap(), product(&s1, &s1).unwrap()] {
        let c: Complex = normalized_chains(&x);
        for n in 2..=x.truncation() {
            assert!(c.boundary(n - 1).mul(c.boundary(n)).is_zero());
        }
    }
}
