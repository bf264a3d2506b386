//! Seeded random finite ordered simplicial complexes for property suites.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use super::build::{from_facets, subcomplex};
use super::map::SimplicialMap;
use super::set::{SimplicialSet, SsetError};
use super::simplex::{DegeneracyWord, Simplex, SimplexId};

/// Random facets on vertices `0..vertices`, each of dimension at most `max_dim`.
pub fn random_facets<R: Rng>(rng: &mut R, vertices: usize, max_dim: usize, count: usize) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..vertices).collect();
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=(max_dim + 1).min(vertices));
            let mut f: Vec<usize> = all.choose_multiple(rng, k).copied().collect();
            f.sort_unstable();
            f
        })
        .collect()
}

/// A random complex; every vertex is used so the vertex set is `0..vertices`.
pub fn random_complex<R: Rng>(
    rng: &mut R,
    vertices: usize,
    max_dim: usize,
    truncation: usize,
) -> Result<SimplicialSet, SsetError> {
    let count = rng.gen_range(1..=vertices + 1);
    let mut facets = random_facets(rng, vertices, max_dim, count);
    facets.extend((0..vertices).map(|v| vec![v]));
    from_facets(&facets, truncation)
}

/// A random subcomplex generated by some of the faces of `x`, always containing
/// the first vertex so that basepoints survive.
pub fn random_subcomplex<R: Rng>(
    rng: &mut R,
    x: &Arc<SimplicialSet>,
) -> Result<(Arc<SimplicialSet>, SimplicialMap), SsetError> {
    let mut keep: BTreeSet<_> = BTreeSet::new();
    let mut stack = vec![x.roster(0)[0]];
    for n in 0..=x.truncation() {
        for &id in x.roster(n) {
            if rng.gen_bool(0.4) {
                stack.push(id);
            }
        }
    }
    while let Some(id) = stack.pop() {
        if keep.insert(id) {
            stack.extend(x.nondegenerate_faces(id).iter().map(|f| f.id));
        }
    }
    let keep: Vec<_> = keep.into_iter().collect();
    subcomplex(x, &keep)
}

/// Vertex lists of the nondegenerate simplices of a complex built by
/// [`from_facets`], read back from the names.
pub fn vertex_lists(x: &SimplicialSet) -> Result<Vec<Vec<usize>>, SsetError> {
    (0..x.simplex_count())
        .map(|k| parse_vertices(x.name(SimplexId(k as u32))))
        .collect()
}

fn parse_vertices(name: &str) -> Result<Vec<usize>, SsetError> {
    name.split('-')
        .map(|v| v.parse().map_err(|_| SsetError::Invalid(format!("`{name}` is not a vertex list"))))
        .collect()
}

/// The map of ordered complexes induced by an order-preserving vertex map.
/// Repeated images become degeneracies.
pub fn vertex_map<F: Fn(usize) -> usize>(
    x: Arc<SimplicialSet>,
    y: Arc<SimplicialSet>,
    f: F,
) -> Result<SimplicialMap, SsetError> {
    let mut images = Vec::with_capacity(x.simplex_count());
    for vs in vertex_lists(&x)? {
        let ws: Vec<usize> = vs.iter().map(|&v| f(v)).collect();
        if ws.windows(2).any(|w| w[0] > w[1]) {
            return Err(SsetError::Invalid("vertex map is not order preserving".into()));
        }
        let repeats: Vec<usize> = (0..ws.len().saturating_sub(1)).filter(|&j| ws[j] == ws[j + 1]).collect();
        let mut base = ws.clone();
        base.dedup();
        let name = base.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("-");
        let id = y.id(&name).ok_or(SsetError::UnknownId(name))?;
        images.push(Simplex::nondegenerate(id).with_outer(&DegeneracyWord::from_index_set(repeats)));
    }
    SimplicialMap::checked(x, y, images)
}

/// `X × Δ¹` for an ordered complex, triangulated by prisms on the vertices
/// `2v` (bottom) and `2v + 1` (top).
pub fn cylinder(x: &SimplicialSet) -> Result<SimplicialSet, SsetError> {
    let mut facets = Vec::new();
    for vs in vertex_lists(x)? {
        for i in 0..vs.len() {
            let mut f: Vec<usize> = vs[..=i].iter().map(|&v| 2 * v).collect();
            f.extend(vs[i..].iter().map(|&v| 2 * v + 1));
            facets.push(f);
        }
    }
    from_facets(&facets, x.truncation())
}
