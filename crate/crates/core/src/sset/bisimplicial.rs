//! Bisimplicial and trisimplicial objects, diagonals and the materialized
//! table form of a bisimplicial set.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use super::object::{check_identities, Identity, SimplicialObject, Violation};
use super::set::{SimplicialSet, SsetError};
use super::simplex::Simplex;

/// A doubly graded object; "horizontal" is the first index, "vertical" the second.
pub trait BisimplicialObject {
    type Elem: Clone + Eq + Hash + Debug;

    fn truncation(&self) -> (usize, usize);
    fn bidegree(&self, e: &Self::Elem) -> (usize, usize);
    fn elements(&self, p: usize, q: usize) -> Vec<Self::Elem>;
    fn hface(&self, i: usize, e: &Self::Elem) -> Self::Elem;
    fn vface(&self, i: usize, e: &Self::Elem) -> Self::Elem;
    fn hdegeneracy(&self, j: usize, e: &Self::Elem) -> Self::Elem;
    fn vdegeneracy(&self, j: usize, e: &Self::Elem) -> Self::Elem;
    fn label(&self, e: &Self::Elem) -> String;
    fn basepoint(&self) -> Option<Self::Elem> {
        None
    }
}

/// The diagonal: degree `n` is bidegree `(n, n)` and `d_i = d_i^h d_i^v`.
#[derive(Clone, Debug)]
pub struct Diagonal<B>(pub B);

impl<B: BisimplicialObject> SimplicialObject for Diagonal<B> {
    type Elem = B::Elem;
    fn truncation(&self) -> usize {
        let (n, m) = self.0.truncation();
        n.min(m)
    }
    fn degree(&self, e: &B::Elem) -> usize {
        self.0.bidegree(e).0
    }
    fn elements(&self, n: usize) -> Vec<B::Elem> {
        self.0.elements(n, n)
    }
    fn face(&self, i: usize, e: &B::Elem) -> B::Elem {
        self.0.hface(i, &self.0.vface(i, e))
    }
    fn degeneracy(&self, j: usize, e: &B::Elem) -> B::Elem {
        self.0.hdegeneracy(j, &self.0.vdegeneracy(j, e))
    }
    fn label(&self, e: &B::Elem) -> String {
        self.0.label(e)
    }
    fn basepoint(&self) -> Option<B::Elem> {
        self.0.basepoint()
    }
}

/// The vertical simplicial object at horizontal degree `p`.
#[derive(Clone, Debug)]
pub struct Row<'a, B> {
    pub b: &'a B,
    pub p: usize,
}

impl<B: BisimplicialObject> SimplicialObject for Row<'_, B> {
    type Elem = B::Elem;
    fn truncation(&self) -> usize {
        self.b.truncation().1
    }
    fn degree(&self, e: &B::Elem) -> usize {
        self.b.bidegree(e).1
    }
    fn elements(&self, n: usize) -> Vec<B::Elem> {
        self.b.elements(self.p, n)
    }
    fn face(&self, i: usize, e: &B::Elem) -> B::Elem {
        self.b.vface(i, e)
    }
    fn degeneracy(&self, j: usize, e: &B::Elem) -> B::Elem {
        self.b.vdegeneracy(j, e)
    }
    fn label(&self, e: &B::Elem) -> String {
        self.b.label(e)
    }
}

/// The horizontal simplicial object at vertical degree `q`.
#[derive(Clone, Debug)]
pub struct Column<'a, B> {
    pub b: &'a B,
    pub q: usize,
}

impl<B: BisimplicialObject> SimplicialObject for Column<'_, B> {
    type Elem = B::Elem;
    fn truncation(&self) -> usize {
        self.b.truncation().0
    }
    fn degree(&self, e: &B::Elem) -> usize {
        self.b.bidegree(e).0
    }
    fn elements(&self, n: usize) -> Vec<B::Elem> {
        self.b.elements(n, self.q)
    }
    fn face(&self, i: usize, e: &B::Elem) -> B::Elem {
        self.b.hface(i, e)
    }
    fn degeneracy(&self, j: usize, e: &B::Elem) -> B::Elem {
        self.b.hdegeneracy(j, e)
    }
    fn label(&self, e: &B::Elem) -> String {
        self.b.label(e)
    }
}

/// Check both simplicial structures and the interchange laws between them.
pub fn validate_bisimplicial<B: BisimplicialObject>(b: &B) -> Vec<Violation> {
    let (tn, tm) = b.truncation();
    let mut out = Vec::new();
    for p in 0..=tn {
        for mut v in check_identities(&Row { b, p }, tm) {
            v.simplex = format!("vertical {}", v.simplex);
            out.push(v);
        }
    }
    for q in 0..=tm {
        for mut v in check_identities(&Column { b, q }, tn) {
            v.simplex = format!("horizontal {}", v.simplex);
            out.push(v);
        }
    }
    for p in 0..=tn {
        for q in 0..=tm {
            for e in b.elements(p, q) {
                let mut pairs: Vec<(String, B::Elem, B::Elem)> = Vec::new();
                let hf = |i| b.hface(i, &e);
                if p >= 1 && q >= 1 {
                    for i in 0..=p {
                        for j in 0..=q {
                            pairs.push((
                                format!("dh{i} dv{j}"),
                                b.hface(i, &b.vface(j, &e)),
                                b.vface(j, &hf(i)),
                            ));
                        }
                    }
                }
                if p >= 1 && q < tm {
                    for i in 0..=p {
                        for j in 0..=q {
                            pairs.push((
                                format!("dh{i} sv{j}"),
                                b.hface(i, &b.vdegeneracy(j, &e)),
                                b.vdegeneracy(j, &hf(i)),
                            ));
                        }
                    }
                }
                if p < tn && q >= 1 {
                    for i in 0..=p {
                        for j in 0..=q {
                            pairs.push((
                                format!("sh{i} dv{j}"),
                                b.hdegeneracy(i, &b.vface(j, &e)),
                                b.vface(j, &b.hdegeneracy(i, &e)),
                            ));
                        }
                    }
                }
                if p < tn && q < tm {
                    for i in 0..=p {
                        for j in 0..=q {
                            pairs.push((
                                format!("sh{i} sv{j}"),
                                b.hdegeneracy(i, &b.vdegeneracy(j, &e)),
                                b.vdegeneracy(j, &b.hdegeneracy(i, &e)),
                            ));
                        }
                    }
                }
                for (ops, lhs, rhs) in pairs {
                    if lhs != rhs {
                        out.push(Violation {
                            identity: Identity::Interchange,
                            degree: p + q,
                            simplex: format!("{ops} on {}", b.label(&e)),
                            lhs: b.label(&lhs),
                            rhs: b.label(&rhs),
                        });
                    }
                }
            }
        }
    }
    out
}

/// A simplex of a materialized bisimplicial set: bidegree and position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiSimplex {
    pub p: usize,
    pub q: usize,
    pub k: usize,
}

#[derive(Clone, Debug, Default)]
struct Cell {
    labels: Vec<String>,
    hface: Vec<Vec<usize>>,
    vface: Vec<Vec<usize>>,
    hdeg: Vec<Vec<usize>>,
    vdeg: Vec<Vec<usize>>,
}

/// A bisimplicial set stored as explicit tables, degenerate simplices included.
#[derive(Clone, Debug)]
pub struct BisimplicialSet {
    truncation: (usize, usize),
    cells: Vec<Vec<Cell>>,
    base: Option<BiSimplex>,
}

impl BisimplicialSet {
    pub fn roster_size(&self, p: usize, q: usize) -> usize {
        self.cells[p][q].labels.len()
    }

    /// Every simplex in bidegree `(p, q)`, with its label.
    pub fn roster(&self, p: usize, q: usize) -> &[String] {
        &self.cells[p][q].labels
    }
}

impl BisimplicialObject for BisimplicialSet {
    type Elem = BiSimplex;
    fn truncation(&self) -> (usize, usize) {
        self.truncation
    }
    fn bidegree(&self, e: &BiSimplex) -> (usize, usize) {
        (e.p, e.q)
    }
    fn elements(&self, p: usize, q: usize) -> Vec<BiSimplex> {
        (0..self.roster_size(p, q))
            .map(|k| BiSimplex { p, q, k })
            .collect()
    }
    fn hface(&self, i: usize, e: &BiSimplex) -> BiSimplex {
        BiSimplex {
            p: e.p - 1,
            q: e.q,
            k: self.cells[e.p][e.q].hface[e.k][i],
        }
    }
    fn vface(&self, i: usize, e: &BiSimplex) -> BiSimplex {
        BiSimplex {
            p: e.p,
            q: e.q - 1,
            k: self.cells[e.p][e.q].vface[e.k][i],
        }
    }
    fn hdegeneracy(&self, j: usize, e: &BiSimplex) -> BiSimplex {
        BiSimplex {
            p: e.p + 1,
            q: e.q,
            k: self.cells[e.p][e.q].hdeg[e.k][j],
        }
    }
    fn vdegeneracy(&self, j: usize, e: &BiSimplex) -> BiSimplex {
        BiSimplex {
            p: e.p,
            q: e.q + 1,
            k: self.cells[e.p][e.q].vdeg[e.k][j],
        }
    }
    fn label(&self, e: &BiSimplex) -> String {
        self.cells[e.p][e.q].labels[e.k].clone()
    }
    fn basepoint(&self) -> Option<BiSimplex> {
        self.base
    }
}

/// Tabulate a bisimplicial object up to its truncation, failing once more than
/// `cap` simplices have been enumerated or if a structure map leaves the
/// enumerated simplices.
pub fn materialize_bisimplicial<B: BisimplicialObject>(
    b: &B,
    cap: usize,
) -> Result<BisimplicialSet, SsetError> {
    let (tn, tm) = b.truncation();
    let mut index: HashMap<B::Elem, usize> = HashMap::new();
    let mut elems: Vec<Vec<Vec<B::Elem>>> = Vec::new();
    let mut seen = 0usize;
    for p in 0..=tn {
        let mut row = Vec::new();
        for q in 0..=tm {
            let es = b.elements(p, q);
            seen = seen.saturating_add(es.len());
            if seen > cap {
                return Err(SsetError::CapExceeded { cap, degree: p + q });
            }
            for (k, e) in es.iter().enumerate() {
                if index.insert(e.clone(), k).is_some() {
                    return Err(SsetError::DuplicateLabel(b.label(e)));
                }
            }
            row.push(es);
        }
        elems.push(row);
    }
    let find = |e: &B::Elem, want: (usize, usize), what: &str| -> Result<usize, SsetError> {
        if b.bidegree(e) != want {
            return Err(SsetError::Invalid(format!(
                "{what} of bisimplex lands in bidegree {:?}, expected {want:?}",
                b.bidegree(e)
            )));
        }
        index
            .get(e)
            .copied()
            .ok_or_else(|| SsetError::Invalid(format!("{what} `{}` was not enumerated", b.label(e))))
    };
    let mut cells = Vec::new();
    for p in 0..=tn {
        let mut row = Vec::new();
        for q in 0..=tm {
            let mut cell = Cell::default();
            for e in &elems[p][q] {
                cell.labels.push(b.label(e));
                let mut hf = Vec::new();
                if p > 0 {
                    for i in 0..=p {
                        hf.push(find(&b.hface(i, e), (p - 1, q), "horizontal face")?);
                    }
                }
                let mut vf = Vec::new();
                if q > 0 {
                    for i in 0..=q {
                        vf.push(find(&b.vface(i, e), (p, q - 1), "vertical face")?);
                    }
                }
                let mut hd = Vec::new();
                if p < tn {
                    for j in 0..=p {
                        hd.push(find(&b.hdegeneracy(j, e), (p + 1, q), "horizontal degeneracy")?);
                    }
                }
                let mut vd = Vec::new();
                if q < tm {
                    for j in 0..=q {
                        vd.push(find(&b.vdegeneracy(j, e), (p, q + 1), "vertical degeneracy")?);
                    }
                }
                cell.hface.push(hf);
                cell.vface.push(vf);
                cell.hdeg.push(hd);
                cell.vdeg.push(vd);
            }
            row.push(cell);
        }
        cells.push(row);
    }
    let base = match b.basepoint() {
        Some(e) => Some(BiSimplex {
            p: 0,
            q: 0,
            k: find(&e, (0, 0), "basepoint")?,
        }),
        None => None,
    };
    Ok(BisimplicialSet {
        truncation: (tn, tm),
        cells,
        base,
    })
}

/// `X ⊠ Y`: bidegree `(p, q)` is `X_p × Y_q`.
#[derive(Clone, Debug)]
pub struct ExternalProduct {
    pub x: Arc<SimplicialSet>,
    pub y: Arc<SimplicialSet>,
}

impl BisimplicialObject for ExternalProduct {
    type Elem = (Simplex, Simplex);
    fn truncation(&self) -> (usize, usize) {
        (self.x.truncation(), self.y.truncation())
    }
    fn bidegree(&self, e: &Self::Elem) -> (usize, usize) {
        (self.x.degree(&e.0), self.y.degree(&e.1))
    }
    fn elements(&self, p: usize, q: usize) -> Vec<Self::Elem> {
        let ys = self.y.simplices(q);
        self.x
            .simplices(p)
            .into_iter()
            .flat_map(|a| ys.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    }
    fn hface(&self, i: usize, e: &Self::Elem) -> Self::Elem {
        (self.x.face(i, &e.0), e.1.clone())
    }
    fn vface(&self, i: usize, e: &Self::Elem) -> Self::Elem {
        (e.0.clone(), self.y.face(i, &e.1))
    }
    fn hdegeneracy(&self, j: usize, e: &Self::Elem) -> Self::Elem {
        (e.0.degenerate(j), e.1.clone())
    }
    fn vdegeneracy(&self, j: usize, e: &Self::Elem) -> Self::Elem {
        (e.0.clone(), e.1.degenerate(j))
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

/// `X ⊠ Y` with `X ⊠ * ∪ * ⊠ Y` collapsed to a single basepoint (`None`).
#[derive(Clone, Debug)]
pub struct ExternalSmash {
    pub x: Arc<SimplicialSet>,
    pub y: Arc<SimplicialSet>,
}

impl ExternalSmash {
    fn collapse(&self, e: (Simplex, Simplex)) -> Option<(Simplex, Simplex)> {
        let (x0, y0) = (self.x.basepoint()?, self.y.basepoint()?);
        (e.0.id != x0 && e.1.id != y0).then_some(e)
    }

    fn bidegree_of_base(&self, e: &Option<(Simplex, Simplex)>) -> Option<(usize, usize)> {
        e.as_ref()
            .map(|(a, b)| (self.x.degree(a), self.y.degree(b)))
    }
}

/// Simplices of the smash carry their bidegree so that the basepoint of each
/// bidegree is a distinct element.
pub type SmashElem = ((usize, usize), Option<(Simplex, Simplex)>);

impl BisimplicialObject for ExternalSmash {
    type Elem = SmashElem;
    fn truncation(&self) -> (usize, usize) {
        (self.x.truncation(), self.y.truncation())
    }
    fn bidegree(&self, e: &SmashElem) -> (usize, usize) {
        self.bidegree_of_base(&e.1).unwrap_or(e.0)
    }
    fn elements(&self, p: usize, q: usize) -> Vec<SmashElem> {
        let mut out = vec![((p, q), None)];
        let ys = self.y.simplices(q);
        for a in self.x.simplices(p) {
            for b in &ys {
                if let Some(e) = self.collapse((a.clone(), b.clone())) {
                    out.push(((p, q), Some(e)));
                }
            }
        }
        out
    }
    fn hface(&self, i: usize, e: &SmashElem) -> SmashElem {
        let (p, q) = e.0;
        let inner = e.1.as_ref().and_then(|(a, b)| self.collapse((self.x.face(i, a), b.clone())));
        ((p - 1, q), inner)
    }
    fn vface(&self, i: usize, e: &SmashElem) -> SmashElem {
        let (p, q) = e.0;
        let inner = e.1.as_ref().and_then(|(a, b)| self.collapse((a.clone(), self.y.face(i, b))));
        ((p, q - 1), inner)
    }
    fn hdegeneracy(&self, j: usize, e: &SmashElem) -> SmashElem {
        let (p, q) = e.0;
        ((p + 1, q), e.1.as_ref().map(|(a, b)| (a.degenerate(j), b.clone())))
    }
    fn vdegeneracy(&self, j: usize, e: &SmashElem) -> SmashElem {
        let (p, q) = e.0;
        ((p, q + 1), e.1.as_ref().map(|(a, b)| (a.clone(), b.degenerate(j))))
    }
    fn label(&self, e: &SmashElem) -> String {
        match &e.1 {
            None => format!("*{}{}", e.0 .0, e.0 .1),
            Some((a, b)) => format!("({}^{})", self.x.label(a), self.y.label(b)),
        }
    }
    fn basepoint(&self) -> Option<SmashElem> {
        Some(((0, 0), None))
    }
}

/// The three directions of a cyclic bar construction on a generalized wedge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    CyclicBar,
    Wedge,
    Internal,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::CyclicBar, Axis::Wedge, Axis::Internal];

    pub fn index(self) -> usize {
        match self {
            Axis::CyclicBar => 0,
            Axis::Wedge => 1,
            Axis::Internal => 2,
        }
    }
}

pub trait TrisimplicialObject {
    type Elem: Clone + Eq + Hash + Debug;

    /// Truncation per axis, indexed by [`Axis::index`].
    fn truncation(&self) -> [usize; 3];
    fn tridegree(&self, e: &Self::Elem) -> [usize; 3];
    fn elements(&self, d: [usize; 3]) -> Vec<Self::Elem>;
    fn face(&self, axis: Axis, i: usize, e: &Self::Elem) -> Self::Elem;
    fn degeneracy(&self, axis: Axis, j: usize, e: &Self::Elem) -> Self::Elem;
    fn label(&self, e: &Self::Elem) -> String;
    fn basepoint(&self) -> Option<Self::Elem> {
        None
    }
}

/// Diagonalize two axes of a trisimplicial object; the result is
/// bisimplicial with the diagonal as horizontal and the third axis as vertical.
#[derive(Clone, Debug)]
pub struct PartialDiagonal<T> {
    pub t: T,
    axes: (Axis, Axis),
    rest: Axis,
}

pub fn partial_diagonal<T: TrisimplicialObject>(
    t: T,
    a: Axis,
    b: Axis,
) -> Result<PartialDiagonal<T>, SsetError> {
    if a == b {
        return Err(SsetError::Invalid(format!(
            "cannot diagonalize the {a:?} axis with itself"
        )));
    }
    let rest = *Axis::ALL.iter().find(|&&x| x != a && x != b).unwrap();
    Ok(PartialDiagonal {
        t,
        axes: (a, b),
        rest,
    })
}

impl<T: TrisimplicialObject> BisimplicialObject for PartialDiagonal<T> {
    type Elem = T::Elem;
    fn truncation(&self) -> (usize, usize) {
        let tr = self.t.truncation();
        (
            tr[self.axes.0.index()].min(tr[self.axes.1.index()]),
            tr[self.rest.index()],
        )
    }
    fn bidegree(&self, e: &T::Elem) -> (usize, usize) {
        let d = self.t.tridegree(e);
        (d[self.axes.0.index()], d[self.rest.index()])
    }
    fn elements(&self, p: usize, q: usize) -> Vec<T::Elem> {
        let mut d = [0; 3];
        d[self.axes.0.index()] = p;
        d[self.axes.1.index()] = p;
        d[self.rest.index()] = q;
        self.t.elements(d)
    }
    fn hface(&self, i: usize, e: &T::Elem) -> T::Elem {
        self.t.face(self.axes.0, i, &self.t.face(self.axes.1, i, e))
    }
    fn vface(&self, i: usize, e: &T::Elem) -> T::Elem {
        self.t.face(self.rest, i, e)
    }
    fn hdegeneracy(&self, j: usize, e: &T::Elem) -> T::Elem {
        self.t.degeneracy(self.axes.0, j, &self.t.degeneracy(self.axes.1, j, e))
    }
    fn vdegeneracy(&self, j: usize, e: &T::Elem) -> T::Elem {
        self.t.degeneracy(self.rest, j, e)
    }
    fn label(&self, e: &T::Elem) -> String {
        self.t.label(e)
    }
    fn basepoint(&self) -> Option<T::Elem> {
        self.t.basepoint()
    }
}

/// Diagonal of all three axes at once.
#[derive(Clone, Debug)]
pub struct TripleDiagonal<T>(pub T);

impl<T: TrisimplicialObject> SimplicialObject for TripleDiagonal<T> {
    type Elem = T::Elem;
    fn truncation(&self) -> usize {
        *self.0.truncation().iter().min().unwrap()
    }
    fn degree(&self, e: &T::Elem) -> usize {
        self.0.tridegree(e)[0]
    }
    fn elements(&self, n: usize) -> Vec<T::Elem> {
        self.0.elements([n; 3])
    }
    fn face(&self, i: usize, e: &T::Elem) -> T::Elem {
        Axis::ALL
            .iter()
            .fold(e.clone(), |acc, &a| self.0.face(a, i, &acc))
    }
    fn degeneracy(&self, j: usize, e: &T::Elem) -> T::Elem {
        Axis::ALL
            .iter()
            .fold(e.clone(), |acc, &a| self.0.degeneracy(a, j, &acc))
    }
    fn label(&self, e: &T::Elem) -> String {
        self.0.label(e)
    }
    fn basepoint(&self) -> Option<T::Elem> {
        self.0.basepoint()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::build::{product, simplicial_circle, std_simplex};
    use crate::sset::{materialize, validate_identities};

    #[test]
    fn diagonal_of_external_product_is_product() {
        let x = Arc::new(std_simplex(1, 3).unwrap());
        let y = Arc::new(simplicial_circle(3));
        let ext = ExternalProduct {
            x: x.clone(),
            y: y.clone(),
        };
        assert!(validate_bisimplicial(&ext).is_empty());
        let d = materialize(&Diagonal(ext)).unwrap().set;
        let p = product(&x, &y).unwrap();
        assert_eq!(d.nondegenerate_counts(), p.nondegenerate_counts());
        assert!(validate_identities(&d).is_empty());
    }

    #[test]
    fn external_smash_is_bisimplicial() {
        let c = Arc::new(simplicial_circle(3));
        let sm = ExternalSmash { x: c.clone(), y: c };
        assert!(validate_bisimplicial(&sm).is_empty());
        let d = materialize(&Diagonal(sm.clone())).unwrap().set;
        // the diagonal edge (e, e) survives; one triangle per shuffle
        assert_eq!(d.nondegenerate_counts(), vec![1, 1, 2, 0]);
        let t = materialize_bisimplicial(&sm, usize::MAX).unwrap();
        assert_eq!(t.roster_size(1, 1), 2);
        assert!(validate_bisimplicial(&t).is_empty());
    }

    #[test]
    fn identical_axes_are_rejected() {
        struct Nothing;
        impl TrisimplicialObject for Nothing {
            type Elem = ();
            fn truncation(&self) -> [usize; 3] {
                [0; 3]
            }
            fn tridegree(&self, _: &()) -> [usize; 3] {
                [0; 3]
            }
            fn elements(&self, _: [usize; 3]) -> Vec<()> {
                vec![()]
            }
            fn face(&self, _: Axis, _: usize, _: &()) {}
            fn degeneracy(&self, _: Axis, _: usize, _: &()) {}
            fn label(&self, _: &()) -> String {
                "()".into()
            }
        }
        assert!(partial_diagonal(Nothing, Axis::Wedge, Axis::Wedge).is_err());
        assert!(partial_diagonal(Nothing, Axis::Wedge, Axis::Internal).is_ok());
    }
}
