//! Simplicial objects given by explicit elements and structure functions.
//!
//! Most constructions here (nerves, wedges, cyclic bar constructions) are
//! naturally described by formulas on tuples. They implement
//! [`SimplicialObject`], are checked exhaustively at that level, and are turned
//! into canonical [`SimplicialSet`]s by [`materialize`].

use std::collections::HashMap;
use std::fmt::{self, Debug};
use std::hash::Hash;

use serde::Serialize;

use super::set::{SimplicialSet, SimplicialSetBuilder, SsetError};
use super::simplex::{DegeneracyWord, Simplex};

/// A simplicial object whose simplices can be enumerated degree by degree.
pub trait SimplicialObject {
    type Elem: Clone + Eq + Hash + Debug;

    fn truncation(&self) -> usize;
    fn degree(&self, e: &Self::Elem) -> usize;
    /// All simplices of degree `n`, degenerate ones included.
    fn elements(&self, n: usize) -> Vec<Self::Elem>;
    fn face(&self, i: usize, e: &Self::Elem) -> Self::Elem;
    fn degeneracy(&self, j: usize, e: &Self::Elem) -> Self::Elem;
    /// Stable, whitespace-free name used when materializing.
    fn label(&self, e: &Self::Elem) -> String;
    /// Degree-0 basepoint, for pointed objects.
    fn basepoint(&self) -> Option<Self::Elem> {
        None
    }
}

impl SimplicialObject for SimplicialSet {
    type Elem = Simplex;

    fn truncation(&self) -> usize {
        SimplicialSet::truncation(self)
    }
    fn degree(&self, e: &Simplex) -> usize {
        SimplicialSet::degree(self, e)
    }
    fn elements(&self, n: usize) -> Vec<Simplex> {
        self.simplices(n)
    }
    fn face(&self, i: usize, e: &Simplex) -> Simplex {
        SimplicialSet::face(self, i, e)
    }
    fn degeneracy(&self, j: usize, e: &Simplex) -> Simplex {
        SimplicialSet::degeneracy(self, j, e)
    }
    fn label(&self, e: &Simplex) -> String {
        SimplicialSet::label(self, e)
    }
    fn basepoint(&self) -> Option<Simplex> {
        SimplicialSet::basepoint(self).map(Simplex::nondegenerate)
    }
}

impl<T: SimplicialObject + ?Sized> SimplicialObject for &T {
    type Elem = T::Elem;
    fn truncation(&self) -> usize {
        (**self).truncation()
    }
    fn degree(&self, e: &T::Elem) -> usize {
        (**self).degree(e)
    }
    fn elements(&self, n: usize) -> Vec<T::Elem> {
        (**self).elements(n)
    }
    fn face(&self, i: usize, e: &T::Elem) -> T::Elem {
        (**self).face(i, e)
    }
    fn degeneracy(&self, j: usize, e: &T::Elem) -> T::Elem {
        (**self).degeneracy(j, e)
    }
    fn label(&self, e: &T::Elem) -> String {
        (**self).label(e)
    }
    fn basepoint(&self) -> Option<T::Elem> {
        (**self).basepoint()
    }
}

/// Result of [`materialize`]: the canonical set plus the element dictionary.
#[derive(Clone, Debug)]
pub struct Materialized<E> {
    pub set: SimplicialSet,
    /// Canonical form of every element up to the truncation level.
    pub index: HashMap<E, Simplex>,
    /// Element behind each nondegenerate id.
    pub elements: Vec<E>,
}

impl<E: Eq + Hash> Materialized<E> {
    pub fn simplex(&self, e: &E) -> Option<&Simplex> {
        self.index.get(e)
    }
}

/// Indices `j < n` with `s_j d_j e = e`: the degeneracy index set of `e`.
pub fn degeneracy_set<O: SimplicialObject>(obj: &O, e: &O::Elem) -> Vec<usize> {
    let n = obj.degree(e);
    (0..n)
        .filter(|&j| obj.degeneracy(j, &obj.face(j, e)) == *e)
        .collect()
}

/// Convert an explicit simplicial object into Eilenberg–Zilber form.
pub fn materialize<O: SimplicialObject>(obj: &O) -> Result<Materialized<O::Elem>, SsetError> {
    materialize_capped(obj, usize::MAX)
}

/// As [`materialize`], failing once more than `cap` elements have been enumerated.
pub fn materialize_capped<O: SimplicialObject>(
    obj: &O,
    cap: usize,
) -> Result<Materialized<O::Elem>, SsetError> {
    let trunc = obj.truncation();
    let mut builder = SimplicialSetBuilder::new(trunc);
    let mut index: HashMap<O::Elem, Simplex> = HashMap::new();
    let mut elements = Vec::new();
    let mut seen = 0usize;
    let base = obj.basepoint();
    for n in 0..=trunc {
        let mut elems = obj.elements(n);
        seen = seen.saturating_add(elems.len());
        if seen > cap {
            return Err(SsetError::CapExceeded { cap, degree: n });
        }
        if n == 0 {
            if let Some(b) = &base {
                if let Some(pos) = elems.iter().position(|e| e == b) {
                    let b = elems.remove(pos);
                    elems.insert(0, b);
                    builder.set_pointed(true);
                }
            }
        }
        for e in elems {
            let degs = degeneracy_set(obj, &e);
            let simplex = if let Some(&j) = degs.last() {
                let lower = obj.face(j, &e);
                let Some(s) = index.get(&lower) else {
                    return Err(SsetError::Invalid(format!(
                        "face d_{j} of `{}` is not among the enumerated elements",
                        obj.label(&e)
                    )));
                };
                s.degenerate(j)
            } else {
                let mut faces = Vec::with_capacity(n + 1);
                if n > 0 {
                    for i in 0..=n {
                        let f = obj.face(i, &e);
                        match index.get(&f) {
                            Some(s) => faces.push(s.clone()),
                            None => {
                                return Err(SsetError::Invalid(format!(
                                    "face d_{i} of `{}` is `{}`, which is not an element of degree {}",
                                    obj.label(&e),
                                    obj.label(&f),
                                    n - 1
                                )))
                            }
                        }
                    }
                }
                let label = obj.label(&e);
                let id = builder.add(&label, n, faces).map_err(|err| match err {
                    SsetError::DuplicateId(l) => SsetError::DuplicateLabel(l),
                    other => other,
                })?;
                elements.push(e.clone());
                Simplex::nondegenerate(id)
            };
            if index.insert(e.clone(), simplex).is_some() {
                return Err(SsetError::DuplicateLabel(obj.label(&e)));
            }
        }
    }
    Ok(Materialized {
        set: builder.build(),
        index,
        elements,
    })
}

/// Which simplicial identity failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Identity {
    /// `d_i d_j = d_{j-1} d_i` for `i < j`.
    FaceFace { i: usize, j: usize },
    /// `d_i s_j` rules.
    FaceDegeneracy { i: usize, j: usize },
    /// `s_i s_j = s_{j+1} s_i` for `i <= j`.
    DegeneracyDegeneracy { i: usize, j: usize },
    /// A structure map left the object or changed degree incorrectly.
    Closure,
    /// Horizontal and vertical operators of a bisimplicial object fail to commute.
    Interchange,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identity::FaceFace { i, j } => write!(f, "d{i}d{j}"),
            Identity::FaceDegeneracy { i, j } => write!(f, "d{i}s{j}"),
            Identity::DegeneracyDegeneracy { i, j } => write!(f, "s{i}s{j}"),
            Identity::Closure => write!(f, "closure"),
            Identity::Interchange => write!(f, "interchange"),
        }
    }
}

/// A witness that some simplicial identity fails on some simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub identity: Identity,
    pub degree: usize,
    pub simplex: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails on {} (degree {}): {} != {}",
            self.identity, self.simplex, self.degree, self.lhs, self.rhs
        )
    }
}

/// Exhaustively check the simplicial identities on every element of degree at
/// most `up_to` (clamped to the truncation level).
pub fn check_identities<O: SimplicialObject>(obj: &O, up_to: usize) -> Vec<Violation> {
    let top = up_to.min(obj.truncation());
    let mut out = Vec::new();
    for n in 0..=top {
        for e in obj.elements(n) {
            check_element(obj, &e, n, top, &mut out);
        }
    }
    out
}

fn check_element<O: SimplicialObject>(
    obj: &O,
    e: &O::Elem,
    n: usize,
    top: usize,
    out: &mut Vec<Violation>,
) {
    let mut report = |identity, lhs: &O::Elem, rhs: &O::Elem| {
        out.push(Violation {
            identity,
            degree: n,
            simplex: obj.label(e),
            lhs: obj.label(lhs),
            rhs: obj.label(rhs),
        })
    };
    if obj.degree(e) != n {
        report(Identity::Closure, e, e);
        return;
    }
    if n >= 1 {
        for i in 0..=n {
            let f = obj.face(i, e);
            if obj.degree(&f) + 1 != n {
                report(Identity::Closure, &f, e);
            }
        }
    }
    if n >= 2 {
        for j in 1..=n {
            let dj = obj.face(j, e);
            for i in 0..j {
                let lhs = obj.face(i, &dj);
                let rhs = obj.face(j - 1, &obj.face(i, e));
                if lhs != rhs {
                    report(Identity::FaceFace { i, j }, &lhs, &rhs);
                }
            }
        }
    }
    if n < top {
        let degs: Vec<_> = (0..=n).map(|j| obj.degeneracy(j, e)).collect();
        for (j, sj) in degs.iter().enumerate() {
            if obj.degree(sj) != n + 1 {
                report(Identity::Closure, sj, e);
                continue;
            }
            for i in 0..=n + 1 {
                let lhs = obj.face(i, sj);
                let rhs = if i < j {
                    obj.degeneracy(j - 1, &obj.face(i, e))
                } else if i == j || i == j + 1 {
                    e.clone()
                } else {
                    obj.degeneracy(j, &obj.face(i - 1, e))
                };
                if lhs != rhs {
                    report(Identity::FaceDegeneracy { i, j }, &lhs, &rhs);
                }
            }
        }
        if n + 1 < top {
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = obj.degeneracy(i, &degs[j]);
                    let rhs = obj.degeneracy(j + 1, &degs[i]);
                    if lhs != rhs {
                        report(Identity::DegeneracyDegeneracy { i, j }, &lhs, &rhs);
                    }
                }
            }
        }
    }
}

/// A structure map that a degreewise function fails to commute with.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapViolation {
    /// `"d{i}"`, `"s{j}"` or `"degree"`.
    pub operator: String,
    pub degree: usize,
    pub simplex: String,
    pub detail: String,
}

impl fmt::Display for MapViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "map does not commute with {} on {} (degree {}): {}",
            self.operator, self.simplex, self.degree, self.detail
        )
    }
}

/// Check that `f` commutes with every face and degeneracy on all elements of
/// `source` up to `up_to`, and preserves degree.
pub fn check_map<S, T, F>(source: &S, target: &T, f: F, up_to: usize) -> Vec<MapViolation>
where
    S: SimplicialObject,
    T: SimplicialObject,
    F: Fn(&S::Elem) -> T::Elem,
{
    let top = up_to.min(source.truncation()).min(target.truncation());
    let mut out = Vec::new();
    for n in 0..=top {
        for e in source.elements(n) {
            let image = f(&e);
            if target.degree(&image) != n {
                out.push(MapViolation {
                    operator: "degree".into(),
                    degree: n,
                    simplex: source.label(&e),
                    detail: format!("image {} has the wrong degree", target.label(&image)),
                });
                continue;
            }
            if n >= 1 {
                for i in 0..=n {
                    let lhs = f(&source.face(i, &e));
                    let rhs = target.face(i, &image);
                    if lhs != rhs {
                        out.push(MapViolation {
                            operator: format!("d{i}"),
                            degree: n,
                            simplex: source.label(&e),
                            detail: format!("{} != {}", target.label(&lhs), target.label(&rhs)),
                        });
                    }
                }
            }
            if n < top {
                for j in 0..=n {
                    let lhs = f(&source.degeneracy(j, &e));
                    let rhs = target.degeneracy(j, &image);
                    if lhs != rhs {
                        out.push(MapViolation {
                            operator: format!("s{j}"),
                            degree: n,
                            simplex: source.label(&e),
                            detail: format!("{} != {}", target.label(&lhs), target.label(&rhs)),
                        });
                    }
                }
            }
        }
    }
    out
}

/// The canonical word of an element, computed from the explicit structure maps.
pub fn canonical_word<O: SimplicialObject>(obj: &O, e: &O::Elem) -> (DegeneracyWord, O::Elem) {
    let mut degs = degeneracy_set(obj, e);
    let word = DegeneracyWord::from_index_set(degs.clone());
    let mut x = e.clone();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    for j in degs {
        x = obj.face(j, &x);
    }
    (word, x)
}
