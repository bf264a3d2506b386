//! Standard finite simplicial sets and the pointed/categorical constructions.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use itertools::Itertools;

use super::map::SimplicialMap;
use super::object::{materialize, SimplicialObject};
use super::set::{SimplicialSet, SimplicialSetBuilder, SsetError};
use super::simplex::{DegeneracyWord, Simplex, SimplexId};

fn vertex_name(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).join("-")
}

/// Nerve of a finite ordered simplicial complex given by its facets; the
/// nondegenerate simplices are the increasing vertex lists.
pub fn from_facets(facets: &[Vec<usize>], truncation: usize) -> Result<SimplicialSet, SsetError> {
    let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
    for f in facets {
        let mut f = f.clone();
        f.sort_unstable();
        f.dedup();
        for k in 1..=f.len() {
            for c in f.iter().copied().combinations(k) {
                all.insert(c);
            }
        }
    }
    let mut b = SimplicialSetBuilder::new(truncation);
    let mut ids: HashMap<Vec<usize>, SimplexId> = HashMap::new();
    let by_dim = all.into_iter().into_group_map_by(|s| s.len() - 1);
    for n in 0..=truncation {
        let Some(list) = by_dim.get(&n) else { continue };
        for s in list {
            let faces = if n == 0 {
                Vec::new()
            } else {
                (0..=n)
                    .map(|i| {
                        let mut t = s.clone();
                        t.remove(i);
                        Simplex::nondegenerate(ids[&t])
                    })
                    .collect()
            };
            let id = b.add(&vertex_name(s), n, faces)?;
            ids.insert(s.clone(), id);
        }
    }
    Ok(b.pointed().build())
}

/// The standard `n`-simplex, known up to `truncation`.
pub fn std_simplex(n: usize, truncation: usize) -> Result<SimplicialSet, SsetError> {
    if n > truncation {
        return Err(SsetError::BeyondTruncation {
            requested: n,
            truncation,
        });
    }
    from_facets(&[(0..=n).collect()], truncation)
}

/// Boundary of the standard `n`-simplex (`n >= 1`).
pub fn boundary_simplex(n: usize, truncation: usize) -> Result<SimplicialSet, SsetError> {
    if n == 0 {
        return Err(SsetError::Invalid("the boundary of a point is empty".into()));
    }
    let facets: Vec<Vec<usize>> = (0..=n)
        .map(|i| (0..=n).filter(|&v| v != i).collect())
        .collect();
    from_facets(&facets, truncation)
}

pub fn point(truncation: usize) -> SimplicialSet {
    std_simplex(0, truncation).expect("a point fits any truncation")
}

/// `Δ¹/∂Δ¹`: one vertex `*` and one edge `e` with both faces at `*`.
pub fn simplicial_circle(truncation: usize) -> SimplicialSet {
    let mut b = SimplicialSetBuilder::new(truncation.max(1)).pointed();
    let star = b.vertex("*").unwrap();
    b.add(
        "e",
        1,
        vec![Simplex::nondegenerate(star), Simplex::nondegenerate(star)],
    )
    .unwrap();
    b.build()
}

/// Minimal model of the 2-sphere: a vertex and one 2-simplex with all faces degenerate.
pub fn minimal_sphere(dim: usize, truncation: usize) -> Result<SimplicialSet, SsetError> {
    let mut b = SimplicialSetBuilder::new(truncation).pointed();
    let star = b.vertex("*")?;
    if dim == 0 {
        b.vertex("x")?;
        return Ok(b.build());
    }
    let deg = Simplex {
        id: star,
        word: DegeneracyWord::from_index_set((0..dim - 1).collect()),
    };
    b.add(&format!("sigma{dim}"), dim, vec![deg; dim + 1])?;
    Ok(b.build())
}

struct Product<'a> {
    x: &'a SimplicialSet,
    y: &'a SimplicialSet,
}

impl SimplicialObject for Product<'_> {
    type Elem = (Simplex, Simplex);
    fn truncation(&self) -> usize {
        self.x.truncation().min(self.y.truncation())
    }
    fn degree(&self, e: &Self::Elem) -> usize {
        self.x.degree(&e.0)
    }
    fn elements(&self, n: usize) -> Vec<Self::Elem> {
        let ys = self.y.simplices(n);
        self.x
            .simplices(n)
            .into_iter()
            .flat_map(|a| ys.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    }
    fn face(&self, i: usize, e: &Self::Elem) -> Self::Elem {
        (self.x.face(i, &e.0), self.y.face(i, &e.1))
    }
    fn degeneracy(&self, j: usize, e: &Self::Elem) -> Self::Elem {
        (e.0.degenerate(j), e.1.degenerate(j))
    }
    fn label(&self, e: &Self::Elem) -> String {
        format!("({}&{})", self.x.label(&e.0), self.y.label(&e.1))
    }
    fn basepoint(&self) -> Option<Self::Elem> {
        Some((
            Simplex::nondegenerate(self.x.basepoint()?),
            Simplex::nondegenerate(self.y.basepoint()?),
        ))
    }
}

/// Product with its two projections.
#[derive(Clone, Debug)]
pub struct ProductWithProjections {
    pub product: Arc<SimplicialSet>,
    pub first: SimplicialMap,
    pub second: SimplicialMap,
}

pub fn product_with_projections(
    x: &SimplicialSet,
    y: &SimplicialSet,
) -> Result<ProductWithProjections, SsetError> {
    let m = materialize(&Product { x, y })?;
    let product = Arc::new(m.set.clone());
    let xa = Arc::new(x.retruncate(product.truncation()));
    let ya = Arc::new(y.retruncate(product.truncation()));
    let first = SimplicialMap::new(
        product.clone(),
        xa,
        m.elements.iter().map(|e| e.0.clone()).collect(),
    )?;
    let second = SimplicialMap::new(
        product.clone(),
        ya,
        m.elements.iter().map(|e| e.1.clone()).collect(),
    )?;
    Ok(ProductWithProjections {
        product,
        first,
        second,
    })
}

pub fn product(x: &SimplicialSet, y: &SimplicialSet) -> Result<SimplicialSet, SsetError> {
    Ok(materialize(&Product { x, y })?.set)
}

/// Disjoint union; simplices are renamed `inl(..)` and `inr(..)`.
pub fn disjoint_union(x: &SimplicialSet, y: &SimplicialSet) -> Result<SimplicialSet, SsetError> {
    let trunc = x.truncation().min(y.truncation());
    let mut b = SimplicialSetBuilder::new(trunc);
    let mut left = HashMap::new();
    let mut right = HashMap::new();
    for n in 0..=trunc {
        for (src, tag, map) in [(x, "inl", &mut left), (y, "inr", &mut right)] {
            for &id in src.roster(n) {
                let faces = src
                    .nondegenerate_faces(id)
                    .iter()
                    .map(|f| Simplex {
                        id: map[&f.id],
                        word: f.word.clone(),
                    })
                    .collect();
                let new = b.add(&format!("{tag}({})", src.name(id)), n, faces)?;
                map.insert(id, new);
            }
        }
    }
    Ok(b.build())
}

fn fresh_name(x: &SimplicialSet, base: &str) -> String {
    let mut name = base.to_string();
    while x.id(&name).is_some() {
        name.push('\'');
    }
    name
}

/// Collapse the subset `a` (nondegenerate ids, closed under faces) to a basepoint.
///
/// Quotienting by the empty subset adjoins a disjoint basepoint.
pub fn quotient(x: &SimplicialSet, a: &[SimplexId]) -> Result<SimplicialSet, SsetError> {
    let a: HashSet<SimplexId> = a.iter().copied().collect();
    for &id in &a {
        for (i, f) in x.nondegenerate_faces(id).iter().enumerate() {
            if !a.contains(&f.id) {
                return Err(SsetError::NotClosed {
                    id: x.name(id).to_string(),
                    index: i,
                });
            }
        }
    }
    let trunc = x.truncation();
    let mut b = SimplicialSetBuilder::new(trunc).pointed();
    let star = b.vertex(&fresh_name(x, "*"))?;
    let mut map = HashMap::new();
    for n in 0..=trunc {
        for &id in x.roster(n) {
            if a.contains(&id) {
                continue;
            }
            let faces = x
                .nondegenerate_faces(id)
                .iter()
                .map(|f| {
                    if a.contains(&f.id) {
                        Simplex {
                            id: star,
                            word: DegeneracyWord::from_index_set((0..n - 1).collect()),
                        }
                    } else {
                        Simplex {
                            id: map[&f.id],
                            word: f.word.clone(),
                        }
                    }
                })
                .collect();
            let new = b.add(x.name(id), n, faces)?;
            map.insert(id, new);
        }
    }
    Ok(b.build())
}

fn require_base(x: &SimplicialSet, what: &str) -> Result<SimplexId, SsetError> {
    x.basepoint().ok_or_else(|| SsetError::Unpointed(what.to_string()))
}

pub fn wedge(x: &SimplicialSet, y: &SimplicialSet) -> Result<SimplicialSet, SsetError> {
    let x0 = require_base(x, "left wedge summand")?;
    let y0 = require_base(y, "right wedge summand")?;
    let u = disjoint_union(x, y)?;
    let a = [
        u.id(&format!("inl({})", x.name(x0))).unwrap(),
        u.id(&format!("inr({})", y.name(y0))).unwrap(),
    ];
    quotient(&u, &a)
}

pub fn smash(x: &SimplicialSet, y: &SimplicialSet) -> Result<SimplicialSet, SsetError> {
    let x0 = require_base(x, "left smash factor")?;
    let y0 = require_base(y, "right smash factor")?;
    let m = materialize(&Product { x, y })?;
    let collapse: Vec<SimplexId> = m
        .elements
        .iter()
        .enumerate()
        .filter(|(_, (a, b))| a.id == x0 || b.id == y0)
        .map(|(k, _)| SimplexId(k as u32))
        .collect();
    quotient(&m.set, &collapse)
}

/// Right cone `X * v`: adds an apex and a simplex `c(x)` of one degree higher
/// for each nondegenerate `x`, with last face `x`.
pub fn cone(x: &SimplicialSet) -> Result<SimplicialSet, SsetError> {
    let trunc = x.truncation();
    let mut b = SimplicialSetBuilder::new(trunc);
    let mut same = HashMap::new();
    let mut coned = HashMap::new();
    for n in 0..=trunc {
        for &id in x.roster(n) {
            let faces = x
                .nondegenerate_faces(id)
                .iter()
                .map(|f| Simplex {
                    id: same[&f.id],
                    word: f.word.clone(),
                })
                .collect();
            same.insert(id, b.add(x.name(id), n, faces)?);
        }
    }
    let apex = b.vertex(&fresh_name(x, "apex"))?;
    for n in 0..trunc {
        for &id in x.roster(n) {
            let mut faces = Vec::with_capacity(n + 2);
            if n == 0 {
                faces.push(Simplex::nondegenerate(apex));
            } else {
                // c(s_I y) = s_I c(y)
                for f in x.nondegenerate_faces(id) {
                    faces.push(Simplex {
                        id: coned[&f.id],
                        word: f.word.clone(),
                    });
                }
            }
            faces.push(Simplex::nondegenerate(same[&id]));
            coned.insert(id, b.add(&format!("c({})", x.name(id)), n + 1, faces)?);
        }
    }
    Ok(b.build())
}

/// Inclusion of `x` as the base of [`cone`].
pub fn cone_inclusion(x: &Arc<SimplicialSet>) -> Result<(Arc<SimplicialSet>, SimplicialMap), SsetError> {
    let c = Arc::new(cone(x)?);
    let images = (0..x.simplex_count())
        .map(|k| Simplex::nondegenerate(c.id(x.name(SimplexId(k as u32))).unwrap()))
        .collect();
    let inc = SimplicialMap::new(x.clone(), c.clone(), images)?;
    Ok((c, inc))
}

/// Pushout of `B <-f- A -g-> C` with `f` injective.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub object: Arc<SimplicialSet>,
    /// `B -> P`
    pub from_b: SimplicialMap,
    /// `C -> P`
    pub from_c: SimplicialMap,
}

pub fn pushout(f: &SimplicialMap, g: &SimplicialMap) -> Result<Pushout, SsetError> {
    let a = f.source();
    if **a != **g.source() {
        return Err(SsetError::Invalid("pushout legs have different sources".into()));
    }
    if let Some((degree, p, q)) = f.injectivity_witness(a.truncation()) {
        return Err(SsetError::NotInjective {
            degree,
            a: a.label(&p),
            b: a.label(&q),
        });
    }
    let bset = f.target();
    let cset = g.target();
    let trunc = bset.truncation().min(cset.truncation()).min(a.truncation());
    // nondegenerate simplices of B hit by f, and their preimages
    let mut preimage: HashMap<SimplexId, SimplexId> = HashMap::new();
    for k in 0..a.simplex_count() {
        let img = f.image_of(SimplexId(k as u32));
        preimage.insert(img.id, SimplexId(k as u32));
    }
    let mut bld = SimplicialSetBuilder::new(trunc);
    let mut from_c_ids = HashMap::new();
    let mut from_b_ids: HashMap<SimplexId, Simplex> = HashMap::new();
    for n in 0..=trunc {
        for &id in cset.roster(n) {
            let faces = cset
                .nondegenerate_faces(id)
                .iter()
                .map(|s| Simplex {
                    id: from_c_ids[&s.id],
                    word: s.word.clone(),
                })
                .collect();
            let name = format!("C({})", cset.name(id));
            from_c_ids.insert(id, bld.add(&name, n, faces)?);
        }
    }
    let c_image = |s: &Simplex| -> Simplex {
        Simplex {
            id: from_c_ids[&s.id],
            word: s.word.clone(),
        }
    };
    for n in 0..=trunc {
        for &id in bset.roster(n) {
            if let Some(&pre) = preimage.get(&id) {
                let via_g = g.apply(&Simplex::nondegenerate(pre));
                from_b_ids.insert(id, c_image(&via_g));
                continue;
            }
            let faces = bset
                .nondegenerate_faces(id)
                .iter()
                .map(|s| from_b_ids[&s.id].with_outer(&s.word))
                .collect();
            let name = format!("B({})", bset.name(id));
            let new = bld.add(&name, n, faces)?;
            from_b_ids.insert(id, Simplex::nondegenerate(new));
        }
    }
    let object = Arc::new(bld.build());
    let b_images = (0..bset.simplex_count())
        .map(|k| from_b_ids[&SimplexId(k as u32)].clone())
        .collect();
    let c_images = (0..cset.simplex_count())
        .map(|k| Simplex::nondegenerate(from_c_ids[&SimplexId(k as u32)]))
        .collect();
    Ok(Pushout {
        from_b: SimplicialMap::new(
            Arc::new(bset.retruncate(trunc)),
            object.clone(),
            b_images,
        )?,
        from_c: SimplicialMap::new(Arc::new(cset.retruncate(trunc)), object.clone(), c_images)?,
        object,
    })
}

/// Inclusion of a sub-simplicial set given by nondegenerate ids closed under faces.
pub fn subcomplex(
    x: &Arc<SimplicialSet>,
    keep: &[SimplexId],
) -> Result<(Arc<SimplicialSet>, SimplicialMap), SsetError> {
    let keep: HashSet<SimplexId> = keep.iter().copied().collect();
    let mut b = SimplicialSetBuilder::new(x.truncation());
    let mut map = HashMap::new();
    let mut images = Vec::new();
    for n in 0..=x.truncation() {
        for &id in x.roster(n) {
            if !keep.contains(&id) {
                continue;
            }
            let mut faces = Vec::new();
            for (i, f) in x.nondegenerate_faces(id).iter().enumerate() {
                let Some(&nid) = map.get(&f.id) else {
                    return Err(SsetError::NotClosed {
                        id: x.name(id).to_string(),
                        index: i,
                    });
                };
                faces.push(Simplex {
                    id: nid,
                    word: f.word.clone(),
                });
            }
            map.insert(id, b.add(x.name(id), n, faces)?);
            images.push(Simplex::nondegenerate(id));
        }
    }
    if x.basepoint().is_some_and(|p| keep.contains(&p)) {
        b.set_pointed(true);
    }
    let sub = Arc::new(b.build());
    let inc = SimplicialMap::new(sub.clone(), x.clone(), images)?;
    Ok((sub, inc))
}

/// Number of connected components of the 1-skeleton.
pub fn pi0(x: &SimplicialSet) -> usize {
    let verts = x.roster(0);
    let pos: HashMap<SimplexId, usize> = verts.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    for &e in x.roster(1) {
        let f = x.nondegenerate_faces(e);
        let (a, b) = (pos[&f[0].id], pos[&f[1].id]);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    (0..verts.len()).filter(|&k| find(&mut parent, k) == k).count()
}

/// The map sending each nondegenerate simplex of `sub` to the simplex of `x`
/// with the same name.
pub fn inclusion_by_name(sub: Arc<SimplicialSet>, x: Arc<SimplicialSet>) -> Result<SimplicialMap, SsetError> {
    let images = (0..sub.simplex_count())
        .map(|k| {
            let name = sub.name(SimplexId(k as u32));
            x.id(name)
                .map(Simplex::nondegenerate)
                .ok_or_else(|| SsetError::UnknownId(name.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    SimplicialMap::checked(sub, x, images)
}

/// The map of pushouts induced by maps `b: B -> B'` and `c: C -> C'` that are
/// compatible with the legs (checked: the result must be simplicial).
pub fn pushout_map(
    source: &Pushout,
    target: &Pushout,
    b: &SimplicialMap,
    c: &SimplicialMap,
) -> Result<SimplicialMap, SsetError> {
    let p = &source.object;
    let mut images: Vec<Option<Simplex>> = vec![None; p.simplex_count()];
    for k in 0..source.from_c.source().simplex_count() {
        let y = Simplex::nondegenerate(SimplexId(k as u32));
        let z = source.from_c.image_of(y.id);
        if z.word.is_empty() {
            images[z.id.index()] = Some(target.from_c.apply(&c.apply(&y)));
        }
    }
    for k in 0..source.from_b.source().simplex_count() {
        let y = Simplex::nondegenerate(SimplexId(k as u32));
        let z = source.from_b.image_of(y.id);
        if z.word.is_empty() && images[z.id.index()].is_none() {
            images[z.id.index()] = Some(target.from_b.apply(&b.apply(&y)));
        }
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(k, s)| s.ok_or_else(|| SsetError::Invalid(format!("{} has no preimage", p.name(SimplexId(k as u32))))))
        .collect::<Result<Vec<_>, _>>()?;
    SimplicialMap::checked(p.clone(), target.object.clone(), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::validate_identities;

    #[test]
    fn simplex_counts() {
        assert_eq!(std_simplex(1, 3).unwrap().nondegenerate_counts(), vec![2, 1, 0, 0]);
        assert_eq!(std_simplex(2, 2).unwrap().nondegenerate_counts(), vec![3, 3, 1]);
        assert_eq!(point(3).nondegenerate_counts(), vec![1, 0, 0, 0]);
        assert!(matches!(
            std_simplex(3, 2),
            Err(SsetError::BeyondTruncation { .. })
        ));
    }

    #[test]
    fn point_has_one_simplex_per_degree() {
        let p = point(4);
        for n in 0..=4 {
            assert_eq!(p.simplices(n).len(), 1);
        }
    }

    #[test]
    fn circle_and_quotient_agree() {
        let c = simplicial_circle(3);
        assert_eq!(c.nondegenerate_counts(), vec![1, 1, 0, 0]);
        assert_eq!(pi0(&c), 1);
        let d = std_simplex(1, 3).unwrap();
        let ends = [d.id("0").unwrap(), d.id("1").unwrap()];
        let q = quotient(&d, &ends).unwrap();
        assert_eq!(q.nondegenerate_counts(), c.nondegenerate_counts());
        let e = q.id("0-1").unwrap();
        let star = q.basepoint().unwrap();
        assert!(q.nondegenerate_faces(e).iter().all(|f| f.id == star));
    }

    #[test]
    fn product_of_intervals_has_two_triangles() {
        let d = std_simplex(1, 3).unwrap();
        let p = product(&d, &d).unwrap();
        assert_eq!(p.nondegenerate_counts(), vec![4, 5, 2, 0]);
        assert!(validate_identities(&p).is_empty());
    }

    #[test]
    fn product_with_point_is_unchanged() {
        let d = std_simplex(2, 3).unwrap();
        let p = product(&d, &point(3)).unwrap();
        assert_eq!(p.nondegenerate_counts(), d.nondegenerate_counts());
    }

    #[test]
    fn quotient_rejects_open_subsets() {
        let d = std_simplex(1, 2).unwrap();
        let e = d.id("0-1").unwrap();
        assert!(matches!(quotient(&d, &[e]), Err(SsetError::NotClosed { .. })));
    }

    #[test]
    fn pi0_of_two_circles() {
        let c = simplicial_circle(2);
        assert_eq!(pi0(&disjoint_union(&c, &c).unwrap()), 2);
        assert_eq!(pi0(&wedge(&c, &c).unwrap()), 1);
    }

    #[test]
    fn cone_is_valid() {
        let c = cone(&boundary_simplex(2, 3).unwrap()).unwrap();
        assert!(validate_identities(&c).is_empty());
        assert_eq!(c.nondegenerate_counts(), vec![4, 6, 3, 0]);
    }

    #[test]
    fn pushout_rejects_non_injective_leg() {
        let x = Arc::new(boundary_simplex(1, 2).unwrap());
        let p = Arc::new(point(2));
        let to_pt = SimplicialMap::to_point(x.clone(), p).unwrap();
        assert!(matches!(
            pushout(&to_pt, &to_pt),
            Err(SsetError::NotInjective { .. })
        ));
    }
}
