use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cyclic_bar::algebra::{cyclic, symmetric};
use cyclic_bar::bar::nerve;
use cyclic_bar::checks::corrupted_nerve;
use cyclic_bar::sset::build::{product, simplicial_circle, std_simplex};
use cyclic_bar::sset::format::{from_text, to_text};
use cyclic_bar::sset::random::{cylinder, random_complex, vertex_lists, vertex_map};
use cyclic_bar::sset::{validate_identities, Identity};

#[test]
fn standard_sets_are_valid() {
    let sets = [
        nerve(Arc::new(symmetric(3)), 3).unwrap(),
        simplicial_circle(4),
        product(&std_simplex(1, 3).unwrap(), &std_simplex(2, 3).unwrap()).unwrap(),
    ];
    for x in &sets {
        assert!(validate_identities(x).is_empty());
    }
}

/// `x = [g/g/g]` with `d_0 x = s_0[g] = [1/g]`: `d_0 d_1 x = [g] = d_0 d_0 x` still
/// holds, but `d_0 d_2 x = d_0[g/1] = [1]` while `d_1 d_0 x = d_1[1/g] = [g]`.
#[test]
fn corrupted_nerve_has_one_violation() {
    let v = validate_identities(&corrupted_nerve());
    assert_eq!(v.len(), 1, "{v:?}");
    assert_eq!(v[0].identity, Identity::FaceFace { i: 0, j: 2 });
    assert_eq!(v[0].degree, 3);
}

/// Chains in the product poset of the vertex order with `{0 < 1}` whose
/// projection spans a simplex.
fn prism_counts(simplices: &[Vec<usize>], top: usize) -> Vec<usize> {
    let faces: std::collections::HashSet<Vec<usize>> = simplices.iter().cloned().collect();
    let verts: Vec<(usize, usize)> = simplices
        .iter()
        .filter(|s| s.len() == 1)
        .flat_map(|s| [(s[0], 0), (s[0], 1)])
        .collect();
    let mut counts = vec![0; top + 1];
    let n = verts.len();
    for mask in 1u32..(1 << n) {
        let mut chain: Vec<(usize, usize)> = (0..n).filter(|&k| mask & (1 << k) != 0).map(|k| verts[k]).collect();
        chain.sort();
        let d = chain.len() - 1;
        if d > top {
            continue;
        }
        let ordered = chain.windows(2).all(|p| p[0].0 <= p[1].0 && p[0].1 <= p[1].1);
        let mut proj: Vec<usize> = chain.iter().map(|c| c.0).collect();
        proj.dedup();
        if ordered && faces.contains(&proj) {
            counts[d] += 1;
        }
    }
    counts
}

#[test]
fn cylinders_match_the_product_poset() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let x = random_complex(&mut rng, 4, 2, 3).unwrap();
        let c = cylinder(&x).unwrap();
        assert!(validate_identities(&c).is_empty());
        assert_eq!(c.nondegenerate_counts(), prism_counts(&vertex_lists(&x).unwrap(), 3));
        let x = Arc::new(x);
        let c = Arc::new(c);
        vertex_map(c.clone(), x.clone(), |w| w / 2).unwrap();
        vertex_map(x, c, |v| 2 * v + 1).unwrap();
    }
}

proptest! {
    #[test]
    fn text_format_round_trips(seed in any::<u64>(), v in 1usize..6, d in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_complex(&mut rng, v, d, 3).unwrap();
        let t = to_text(&x).unwrap();
        let y = from_text(&t).unwrap();
        prop_assert_eq!(to_text(&y).unwrap(), t);
        prop_assert_eq!(y.nondegenerate_counts(), x.nondegenerate_counts());
    }

    #[test]
    fn nerves_round_trip(n in 2usize..4, t in 1usize..4) {
        let x = nerve(Arc::new(cyclic(n)), t).unwrap();
        let text = to_text(&x).unwrap();
        let y = from_text(&text).unwrap();
        prop_assert!(validate_identities(&y).is_empty());
        prop_assert_eq!(y.nondegenerate_counts(), x.nondegenerate_counts());
    }
}
