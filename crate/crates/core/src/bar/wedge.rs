use std::sync::Arc;

use crate::algebra::{check_action, AlgebraError, DiscreteMonoid, FiniteSet, GAugmentedSituation, OperationSituation, TwoSidedAction};
use crate::sset::{
    materialize_bisimplicial, BisimplicialObject, BisimplicialSet, DegeneracyWord, Simplex,
    SimplicialObject, SimplicialSet, SsetError,
};

use super::nerve::{bracket, tuples};

/// Degree-`p` tuples of `M` with at most one coordinate outside `ι(H)`,
/// in lexicographic order.
pub fn wedge_tuples(sit: &OperationSituation, p: usize) -> Vec<Vec<usize>> {
    let hs: Vec<usize> = (0..sit.h().size()).map(|a| sit.iota(a)).collect();
    let outside: Vec<usize> = (0..sit.m().len()).filter(|&x| sit.in_h(x).is_none()).collect();
    let mut out: Vec<Vec<usize>> = tuples(hs.len(), p)
        .into_iter()
        .map(|t| t.into_iter().map(|a| hs[a]).collect())
        .collect();
    if p > 0 {
        for base in tuples(hs.len(), p - 1) {
            for pos in 0..p {
                for &x in &outside {
                    let mut t: Vec<usize> = base.iter().map(|&a| hs[a]).collect();
                    t.insert(pos, x);
                    out.push(t);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub(crate) fn wedge_face(sit: &OperationSituation, i: usize, e: &[usize]) -> Vec<usize> {
    let p = e.len();
    let mut v = e.to_vec();
    if i == 0 {
        v.remove(0);
    } else if i == p {
        v.pop();
    } else {
        let b = v.remove(i);
        v[i - 1] = sit
            .dot(v[i - 1], b)
            .expect("adjacent wedge coordinates outside H");
    }
    v
}

/// The generalized wedge of a discrete operation situation, as a simplicial
/// set along the wedge direction.
#[derive(Clone, Debug)]
pub struct WedgeRow {
    pub sit: Arc<OperationSituation>,
    pub truncation: usize,
}

impl SimplicialObject for WedgeRow {
    type Elem = Vec<usize>;
    fn truncation(&self) -> usize {
        self.truncation
    }
    fn degree(&self, e: &Vec<usize>) -> usize {
        e.len()
    }
    fn elements(&self, n: usize) -> Vec<Vec<usize>> {
        wedge_tuples(&self.sit, n)
    }
    fn face(&self, i: usize, e: &Vec<usize>) -> Vec<usize> {
        wedge_face(&self.sit, i, e)
    }
    fn degeneracy(&self, j: usize, e: &Vec<usize>) -> Vec<usize> {
        let mut v = e.clone();
        v.insert(j, self.sit.base());
        v
    }
    fn label(&self, e: &Vec<usize>) -> String {
        bracket(e.iter().map(|&x| self.sit.m().name(x)))
    }
    fn basepoint(&self) -> Option<Vec<usize>> {
        Some(Vec::new())
    }
}

/// The generalized wedge of a discrete situation as a bisimplicial object
/// whose internal (vertical) direction is constant.
#[derive(Clone, Debug)]
pub struct DiscreteWedge {
    pub sit: Arc<OperationSituation>,
    pub truncation: (usize, usize),
}

impl BisimplicialObject for DiscreteWedge {
    type Elem = (usize, Vec<usize>);
    fn truncation(&self) -> (usize, usize) {
        self.truncation
    }
    fn bidegree(&self, e: &Self::Elem) -> (usize, usize) {
        (e.1.len(), e.0)
    }
    fn elements(&self, p: usize, q: usize) -> Vec<Self::Elem> {
        wedge_tuples(&self.sit, p).into_iter().map(|t| (q, t)).collect()
    }
    fn hface(&self, i: usize, e: &Self::Elem) -> Self::Elem {
        (e.0, wedge_face(&self.sit, i, &e.1))
    }
    fn vface(&self, _i: usize, e: &Self::Elem) -> Self::Elem {
        (e.0 - 1, e.1.clone())
    }
    fn hdegeneracy(&self, j: usize, e: &Self::Elem) -> Self::Elem {
        let mut v = e.1.clone();
        v.insert(j, self.sit.base());
        (e.0, v)
    }
    fn vdegeneracy(&self, _j: usize, e: &Self::Elem) -> Self::Elem {
        (e.0 + 1, e.1.clone())
    }
    fn label(&self, e: &Self::Elem) -> String {
        bracket(e.1.iter().map(|&x| self.sit.m().name(x)))
    }
    fn basepoint(&self) -> Option<Self::Elem> {
        Some((0, Vec::new()))
    }
}

/// Tabulated generalized wedge, wedge degrees up to `p` and internal degrees up to `n`.
pub fn generalized_wedge(
    sit: Arc<OperationSituation>,
    p: usize,
    n: usize,
    cap: usize,
) -> Result<BisimplicialSet, SsetError> {
    materialize_bisimplicial(
        &DiscreteWedge {
            sit,
            truncation: (p, n),
        },
        cap,
    )
}

/// The generalized wedge `⋁(* ⋎ M)` of a pointed simplicial set `M`:
/// bidegree `(p, q)` is the `p`-tuples of `q`-simplices of `M` with at most one
/// coordinate off the basepoint.
#[derive(Clone, Debug)]
pub struct PointedWedge {
    pub m: Arc<SimplicialSet>,
    pub truncation: (usize, usize),
}

impl PointedWedge {
    pub fn new(m: Arc<SimplicialSet>, p: usize) -> Result<Self, SsetError> {
        if m.basepoint().is_none() {
            return Err(SsetError::Unpointed("wedge carrier".into()));
        }
        let q = m.truncation();
        Ok(PointedWedge {
            m,
            truncation: (p, q),
        })
    }

    fn base(&self, q: usize) -> Simplex {
        Simplex {
            id: self.m.basepoint().unwrap(),
            word: DegeneracyWord::from_index_set((0..q).collect()),
        }
    }

    fn is_base(&self, s: &Simplex) -> bool {
        Some(s.id) == self.m.basepoint()
    }
}

/// Internal degree plus the coordinates.
pub type PointedWedgeElem = (usize, Vec<Simplex>);

impl BisimplicialObject for PointedWedge {
    type Elem = PointedWedgeElem;
    fn truncation(&self) -> (usize, usize) {
        self.truncation
    }
    fn bidegree(&self, e: &Self::Elem) -> (usize, usize) {
        (e.1.len(), e.0)
    }
    fn elements(&self, p: usize, q: usize) -> Vec<Self::Elem> {
        let base = self.base(q);
        let mut out = vec![(q, vec![base.clone(); p])];
        for s in self.m.simplices(q) {
            if self.is_base(&s) {
                continue;
            }
            for pos in 0..p {
                let mut t = vec![base.clone(); p];
                t[pos] = s.clone();
                out.push((q, t));
            }
        }
        out
    }
    fn hface(&self, i: usize, e: &Self::Elem) -> Self::Elem {
        let p = e.1.len();
        let mut v = e.1.clone();
        if i == 0 {
            v.remove(0);
        } else if i == p {
            v.pop();
        } else {
            // the trivial monoid acts trivially: keep whichever is off the basepoint
            let b = v.remove(i);
            if self.is_base(&v[i - 1]) {
                v[i - 1] = b;
            }
        }
        (e.0, v)
    }
    fn vface(&self, i: usize, e: &Self::Elem) -> Self::Elem {
        (e.0 - 1, e.1.iter().map(|s| self.m.face(i, s)).collect())
    }
    fn hdegeneracy(&self, j: usize, e: &Self::Elem) -> Self::Elem {
        let mut v = e.1.clone();
        v.insert(j, self.base(e.0));
        (e.0, v)
    }
    fn vdegeneracy(&self, j: usize, e: &Self::Elem) -> Self::Elem {
        (e.0 + 1, e.1.iter().map(|s| s.degenerate(j)).collect())
    }
    fn label(&self, e: &Self::Elem) -> String {
        bracket(e.1.iter().map(|s| self.m.label(s)))
    }
    fn basepoint(&self) -> Option<Self::Elem> {
        Some((0, Vec::new()))
    }
}

/// Tuples whose left-to-right iterated product is defined in the partial
/// monoid where `x*y` is defined iff `x` or `y` lies in the submonoid `a`.
pub fn composable_tuples(m: &DiscreteMonoid, a: &[usize], p: usize) -> Vec<Vec<usize>> {
    let in_a = |x: usize| a.contains(&x);
    tuples(m.size(), p)
        .into_iter()
        .filter(|t| {
            let mut acc = match t.first() {
                Some(&x) => x,
                None => return true,
            };
            for &y in &t[1..] {
                if !in_a(acc) && !in_a(y) {
                    return false;
                }
                acc = m.mul(acc, y);
            }
            true
        })
        .collect()
}

/// The coordinatewise action of `G` on the degree-`p` wedge tuples.
pub fn wedge_action(aug: &GAugmentedSituation, p: usize) -> Result<(TwoSidedAction, Vec<Vec<usize>>), AlgebraError> {
    let sit = aug.sit();
    let elems = wedge_tuples(sit, p);
    let pos: std::collections::HashMap<&Vec<usize>, usize> =
        elems.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let names: Vec<String> = elems
        .iter()
        .map(|t| bracket(t.iter().map(|&x| sit.m().name(x))))
        .collect();
    let base = names[pos[&vec![sit.base(); p]]].clone();
    let carrier = Arc::new(FiniteSet::new(&names, Some(&base))?);
    let on_m = aug.on_m();
    let lookup = |t: Vec<usize>| pos.get(&t).copied().unwrap_or(usize::MAX);
    let act = check_action(
        aug.g().clone(),
        carrier,
        |g, k| lookup(elems[k].iter().map(|&x| on_m.left(g, x)).collect()),
        |k, g| lookup(elems[k].iter().map(|&x| on_m.right(x, g)).collect()),
    )?;
    Ok((act, elems))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic, submonoid, with_zero};
    use crate::sset::{check_identities, validate_bisimplicial};

    fn z2_in_z4() -> OperationSituation {
        OperationSituation::submonoid(&Arc::new(cyclic(4)), &["0", "2"]).unwrap()
    }

    #[test]
    fn low_degree_rosters() {
        let sit = z2_in_z4();
        assert_eq!(wedge_tuples(&sit, 0).len(), 1);
        assert_eq!(wedge_tuples(&sit, 1).len(), 4);
        // inclusion-exclusion: 4*2 + 2*4 - 2*2
        assert_eq!(wedge_tuples(&sit, 2).len(), 12);
    }

    #[test]
    fn wedge_is_simplicial() {
        let row = WedgeRow {
            sit: Arc::new(z2_in_z4()),
            truncation: 4,
        };
        assert!(check_identities(&row, 4).is_empty());
        let sit = Arc::new(OperationSituation::submonoid(&Arc::new(with_zero()), &["1", "0"]).unwrap());
        let row = WedgeRow {
            sit: sit.clone(),
            truncation: 4,
        };
        assert!(check_identities(&row, 4).is_empty());
        let b = DiscreteWedge {
            sit,
            truncation: (3, 2),
        };
        assert!(validate_bisimplicial(&b).is_empty());
    }

    #[test]
    fn partial_monoid_tuple() {
        let m = with_zero();
        let (_, a) = submonoid(&m, &["1", "0"]).unwrap();
        let (x, zero) = (m.index("x").unwrap(), m.index("0").unwrap());
        let comp = composable_tuples(&m, &a, 3);
        assert!(comp.contains(&vec![x, zero, x]));
        let sit = OperationSituation::submonoid(&Arc::new(m.clone()), &["1", "0"]).unwrap();
        assert!(!wedge_tuples(&sit, 3).contains(&vec![x, zero, x]));
        assert_eq!(composable_tuples(&m, &a, 1).len(), 3);
        assert_eq!(composable_tuples(&m, &[0, 1, 2], 3).len(), 27);
    }

    #[test]
    fn translation_acts_coordinatewise() {
        let aug = GAugmentedSituation::translation(Arc::new(cyclic(2)));
        let (act, elems) = wedge_action(&aug, 2).unwrap();
        assert_eq!(elems.len(), 1 + 2 * 2);
        for (k, t) in elems.iter().enumerate() {
            let moved: Vec<usize> = t.iter().map(|&x| aug.on_m().left(1, x)).collect();
            assert_eq!(elems[act.left(1, k)], moved);
        }
    }
}
