//! The comparison between the diagonal of `N^cy(G, ⋁(H ⋎ M))` and the
//! generalized wedge of `(G ⋉ H) ⋎ (G × M)`.

use std::collections::HashSet;
use std::sync::Arc;

use crate::algebra::{semidirect_opsit, AlgebraError, GAugmentedSituation, MonoidMap, OperationSituation, SituationMap};
use crate::report::{Record, Status};
use crate::sset::{check_identities, check_map, materialize, validate_identities, SimplicialMap, SimplicialObject, SsetError};

use super::cyclic::{pair_degeneracy, pair_elements, pair_label, CyclicWedge, PairElem};
use super::wedge::WedgeRow;

/// The intermediate object `T`: degree `k` is `G^k × ⋁^k(H ⋎ M)` with
/// `d_0` dropping the first entry of both tuples,
/// `d_i = (.., g_i g_{i+1}, ..; .., (m_i g_{i+1})·m_{i+1}, ..)` and
/// `d_k = (g_1..g_{k-1}; g_k m_1, .., g_k m_{k-1})`.
#[derive(Clone, Debug)]
pub struct IntermediateT {
    pub aug: Arc<GAugmentedSituation>,
    pub truncation: usize,
}

impl SimplicialObject for IntermediateT {
    type Elem = PairElem;
    fn truncation(&self) -> usize {
        self.truncation
    }
    fn degree(&self, e: &PairElem) -> usize {
        e.0.len()
    }
    fn elements(&self, n: usize) -> Vec<PairElem> {
        pair_elements(&self.aug, n)
    }
    fn face(&self, i: usize, e: &PairElem) -> PairElem {
        let (mut gs, mut ms) = e.clone();
        let k = gs.len();
        let on_m = self.aug.on_m();
        if i == 0 {
            gs.remove(0);
            ms.remove(0);
        } else if i == k {
            let gk = gs.pop().unwrap();
            ms.pop();
            ms.iter_mut().for_each(|x| *x = on_m.left(gk, *x));
        } else {
            let b = gs.remove(i);
            let a = gs[i - 1];
            gs[i - 1] = self.aug.g().mul(a, b);
            let y = ms.remove(i);
            let x = on_m.right(ms[i - 1], b);
            ms[i - 1] = self
                .aug
                .sit()
                .dot(x, y)
                .expect("adjacent wedge coordinates outside H");
        }
        (gs, ms)
    }
    fn degeneracy(&self, j: usize, e: &PairElem) -> PairElem {
        pair_degeneracy(&self.aug, j, e)
    }
    fn label(&self, e: &PairElem) -> String {
        pair_label(&self.aug, e)
    }
    fn basepoint(&self) -> Option<PairElem> {
        Some((Vec::new(), Vec::new()))
    }
}

/// The maps `u = w ∘ v` and their shear factors for one augmented situation.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub aug: Arc<GAugmentedSituation>,
    pub target: Arc<OperationSituation>,
    pub truncation: usize,
}

impl Comparison {
    pub fn new(aug: Arc<GAugmentedSituation>, truncation: usize) -> Result<Self, AlgebraError> {
        let target = Arc::new(semidirect_opsit(&aug)?);
        Ok(Comparison {
            aug,
            target,
            truncation,
        })
    }

    pub fn source(&self) -> CyclicWedge {
        CyclicWedge {
            aug: self.aug.clone(),
            truncation: self.truncation,
        }
    }

    pub fn intermediate(&self) -> IntermediateT {
        IntermediateT {
            aug: self.aug.clone(),
            truncation: self.truncation,
        }
    }

    pub fn target_wedge(&self) -> WedgeRow {
        WedgeRow {
            sit: self.target.clone(),
            truncation: self.truncation,
        }
    }

    /// `v(g; m)_i = m_i g_1⋯g_i`.
    pub fn v(&self, e: &PairElem) -> PairElem {
        let g = self.aug.g();
        let mut acc = g.unit();
        let ms = e
            .0
            .iter()
            .zip(&e.1)
            .map(|(&gi, &mi)| {
                acc = g.mul(acc, gi);
                self.aug.on_m().right(mi, acc)
            })
            .collect();
        (e.0.clone(), ms)
    }

    /// `w(g; m)_i = (g_i, g_i⋯g_n m_i)`.
    pub fn w(&self, e: &PairElem) -> Vec<usize> {
        let g = self.aug.g();
        let mut acc = g.unit();
        let mut ms = vec![0; e.1.len()];
        for i in (0..e.0.len()).rev() {
            acc = g.mul(e.0[i], acc);
            ms[i] = self.aug.on_m().left(acc, e.1[i]);
        }
        self.package(&(e.0.clone(), ms))
    }

    /// `u(g; m)_i = (g_i, (g_i⋯g_n) m_i (g_1⋯g_i))`, computed directly.
    pub fn u(&self, e: &PairElem) -> Vec<usize> {
        let g = self.aug.g();
        let n = e.0.len();
        let ms: Vec<usize> = (0..n)
            .map(|i| {
                let before = g.product(e.0[..=i].iter().copied());
                let after = g.product(e.0[i..].iter().copied());
                let on_m = self.aug.on_m();
                on_m.left(after, on_m.right(e.1[i], before))
            })
            .collect();
        self.package(&(e.0.clone(), ms))
    }

    /// Pair up coordinates as carrier elements `(g_i; m_i)` of the target.
    pub fn package(&self, e: &PairElem) -> Vec<usize> {
        let nm = self.aug.sit().m().len();
        e.0.iter().zip(&e.1).map(|(&g, &m)| g * nm + m).collect()
    }

    /// `r_i` (1-based): right-multiply wedge coordinates `i..n` by `g_i`.
    pub fn r(&self, i: usize, e: &PairElem) -> PairElem {
        let gi = e.0[i - 1];
        let mut ms = e.1.clone();
        ms[i - 1..]
            .iter_mut()
            .for_each(|x| *x = self.aug.on_m().right(*x, gi));
        (e.0.clone(), ms)
    }

    /// `l_i` (1-based): left-multiply wedge coordinates `1..i` by `g_i`.
    pub fn l(&self, i: usize, e: &PairElem) -> PairElem {
        let gi = e.0[i - 1];
        let mut ms = e.1.clone();
        ms[..i]
            .iter_mut()
            .for_each(|x| *x = self.aug.on_m().left(gi, *x));
        (e.0.clone(), ms)
    }

    /// `v` as the composite of the `r_i`, `r_1` applied first.
    pub fn v_by_shears(&self, e: &PairElem) -> PairElem {
        (1..=e.0.len()).fold(e.clone(), |acc, i| self.r(i, &acc))
    }

    /// `w` as the composite of the `l_i`, `l_n` applied first.
    pub fn w_by_shears(&self, e: &PairElem) -> Vec<usize> {
        let x = (1..=e.0.len()).rev().fold(e.clone(), |acc, i| self.l(i, &acc));
        self.package(&x)
    }

    fn instance(&self) -> String {
        self.aug.describe()
    }

    /// `validate_identities` on the materialized `T`, plus the identities on
    /// the explicit formulas.
    pub fn check_t(&self) -> Record {
        let t = self.intermediate();
        let explicit = check_identities(&t, self.truncation);
        let witness = match explicit.first() {
            Some(v) => Some(v.to_string()),
            None => match materialize(&t) {
                Ok(m) => validate_identities(&m.set).first().map(|v| v.to_string()),
                Err(e) => Some(e.to_string()),
            },
        };
        Record::from_witness("T simplicial identities", &self.instance(), self.truncation, witness)
    }

    pub fn check_simplicial(&self) -> Vec<Record> {
        let (s, t, w) = (self.source(), self.intermediate(), self.target_wedge());
        let p = self.truncation;
        let first = |v: Vec<crate::sset::MapViolation>| v.first().map(|x| x.to_string());
        vec![
            Record::from_witness("source simplicial identities", &self.instance(), p, check_identities(&s, p).first().map(|x| x.to_string())),
            Record::from_witness("target simplicial identities", &self.instance(), p, check_identities(&w, p).first().map(|x| x.to_string())),
            Record::from_witness("v simplicial", &self.instance(), p, first(check_map(&s, &t, |e| self.v(e), p))),
            Record::from_witness("w simplicial", &self.instance(), p, first(check_map(&t, &w, |e| self.w(e), p))),
            Record::from_witness("u simplicial", &self.instance(), p, first(check_map(&s, &w, |e| self.u(e), p))),
        ]
    }

    /// `u = w v`, `v = r_n ∘ … ∘ r_1` and `w = l_1 ∘ … ∘ l_n` on every element.
    pub fn check_factorizations(&self) -> Vec<Record> {
        let s = self.source();
        let mut uwv = None;
        let mut vr = None;
        let mut wl = None;
        for n in 0..=self.truncation {
            for e in s.elements(n) {
                let v = self.v(&e);
                let u = self.u(&e);
                if uwv.is_none() && u != self.w(&v) {
                    uwv = Some(format!("u{} differs from w(v{})", s.label(&e), s.label(&e)));
                }
                if vr.is_none() && v != self.v_by_shears(&e) {
                    vr = Some(format!("v{} differs from the r-composite", s.label(&e)));
                }
                if wl.is_none() && self.w(&e) != self.w_by_shears(&e) {
                    wl = Some(format!("w{} differs from the l-composite", s.label(&e)));
                }
            }
        }
        let i = self.instance();
        let p = self.truncation;
        vec![
            Record::from_witness("u = w v", &i, p, uwv),
            Record::from_witness("v = r_1 ... r_n", &i, p, vr),
            Record::from_witness("w = l_n ... l_1", &i, p, wl),
        ]
    }

    /// First pair of distinct source elements with the same image under `u`,
    /// or a count mismatch; `None` when `u` is a bijection up to truncation.
    pub fn bijectivity_witness(&self) -> Option<String> {
        let s = self.source();
        let w = self.target_wedge();
        for n in 0..=self.truncation {
            let mut seen = std::collections::HashMap::new();
            let src = s.elements(n);
            for e in &src {
                if let Some(prev) = seen.insert(self.u(e), e.clone()) {
                    return Some(format!(
                        "u{} = u{} in degree {n}",
                        s.label(&prev),
                        s.label(e)
                    ));
                }
            }
            if let Some(missed) = w.elements(n).iter().find(|t| !seen.contains_key(*t)) {
                return Some(format!("{} is not hit in degree {n}", w.label(missed)));
            }
        }
        None
    }

    /// Bijectivity of `u`. When `G` is not a group a failure is expected and
    /// the record is flagged instead.
    pub fn check_bijective(&self) -> Record {
        let witness = self.bijectivity_witness();
        let mut rec = Record::from_witness("u bijective", &self.instance(), self.truncation, witness);
        if !rec.passed() && !self.aug.g().is_group() {
            rec.status = Status::Flagged;
            rec.note = Some("G does not act invertibly".into());
        }
        rec
    }

    /// Every `r_i` and `l_i` is bijective on each degree.
    pub fn check_shears_bijective(&self) -> Record {
        let s = self.source();
        let mut witness = None;
        'outer: for n in 1..=self.truncation {
            let elems = s.elements(n);
            for i in 1..=n {
                let rs: HashSet<PairElem> = elems.iter().map(|e| self.r(i, e)).collect();
                let ls: HashSet<PairElem> = elems.iter().map(|e| self.l(i, e)).collect();
                if rs.len() != elems.len() {
                    witness = Some(format!("r_{i} is not injective in degree {n}"));
                    break 'outer;
                }
                if ls.len() != elems.len() {
                    witness = Some(format!("l_{i} is not injective in degree {n}"));
                    break 'outer;
                }
            }
        }
        Record::from_witness("r_i, l_i bijective", &self.instance(), self.truncation, witness)
    }

    /// All comparison checks in a fixed order.
    pub fn verify(&self) -> Vec<Record> {
        let mut out = vec![self.check_t()];
        out.extend(self.check_simplicial());
        out.extend(self.check_factorizations());
        out.push(self.check_bijective());
        if self.aug.g().is_group() {
            out.push(self.check_shears_bijective());
        }
        out
    }
}

pub fn intermediate_t(aug: Arc<GAugmentedSituation>, truncation: usize) -> Result<crate::sset::SimplicialSet, SsetError> {
    let t = IntermediateT { aug, truncation };
    if let Some(v) = check_identities(&t, truncation).into_iter().next() {
        return Err(SsetError::Invalid(v.to_string()));
    }
    Ok(materialize(&t)?.set)
}

fn as_simplicial_map<S, T>(s: &S, t: &T, f: impl Fn(&S::Elem) -> T::Elem) -> Result<SimplicialMap, SsetError>
where
    S: SimplicialObject,
    T: SimplicialObject,
    S::Elem: Clone + Eq + std::hash::Hash,
    T::Elem: Clone + Eq + std::hash::Hash,
{
    if let Some(v) = check_map(s, t, &f, s.truncation()).into_iter().next() {
        return Err(SsetError::Invalid(v.to_string()));
    }
    SimplicialMap::from_materialized(&materialize(s)?, &materialize(t)?, f)
}

pub fn map_v(c: &Comparison) -> Result<SimplicialMap, SsetError> {
    as_simplicial_map(&c.source(), &c.intermediate(), |e| c.v(e))
}

pub fn map_w(c: &Comparison) -> Result<SimplicialMap, SsetError> {
    as_simplicial_map(&c.intermediate(), &c.target_wedge(), |e| c.w(e))
}

pub fn map_u(c: &Comparison) -> Result<SimplicialMap, SsetError> {
    as_simplicial_map(&c.source(), &c.target_wedge(), |e| c.u(e))
}

/// Does `u` commute with the maps induced by `a: G -> G'` and a map of
/// situations `f` that is equivariant along `a`?
pub fn naturality_check(
    a: &MonoidMap,
    f: &SituationMap,
    source: &Comparison,
    target: &Comparison,
) -> Record {
    let inst = format!("{} -> {}", source.instance(), target.instance());
    let p = source.truncation.min(target.truncation);
    let (sa, ta) = (&source.aug, &target.aug);
    if let Some(w) = equivariance_witness(a, f, sa, ta) {
        return Record::new("u natural", &inst, p, Status::Fail).with_witness(w);
    }
    let s = source.source();
    let tw = target.target_wedge();
    let nm = sa.sit().m().len();
    let nm2 = ta.sit().m().len();
    let induced = |e: &PairElem| -> PairElem {
        (
            e.0.iter().map(|&g| a.apply(g)).collect(),
            e.1.iter().map(|&m| f.fm[m]).collect(),
        )
    };
    let induced_semidirect =
        |t: &Vec<usize>| -> Vec<usize> { t.iter().map(|&x| a.apply(x / nm) * nm2 + f.fm[x % nm]).collect() };
    for n in 0..=p {
        for e in s.elements(n) {
            let lhs = target.u(&induced(&e));
            let rhs = induced_semidirect(&source.u(&e));
            if lhs != rhs {
                return Record::new("u natural", &inst, p, Status::Fail).with_witness(format!(
                    "on {}: {} != {}",
                    s.label(&e),
                    tw.label(&lhs),
                    tw.label(&rhs)
                ));
            }
        }
    }
    Record::new("u natural", &inst, p, Status::Pass)
}

fn equivariance_witness(
    a: &MonoidMap,
    f: &SituationMap,
    sa: &GAugmentedSituation,
    ta: &GAugmentedSituation,
) -> Option<String> {
    if a.source.as_ref() != sa.g().as_ref() || a.target.as_ref() != ta.g().as_ref() {
        return Some("the monoid map does not match the acting monoids".into());
    }
    let (hs, ms) = (sa.sit().h(), sa.sit().m());
    for g in sa.g().elements() {
        let ag = a.apply(g);
        for h in hs.elements() {
            let l = f.fh.apply(sa.on_h().left(g, h));
            let r = f.fh.apply(sa.on_h().right(h, g));
            if l != ta.on_h().left(ag, f.fh.apply(h)) || r != ta.on_h().right(f.fh.apply(h), ag) {
                return Some(format!(
                    "f is not equivariant on ({}, {})",
                    sa.g().elem_name(g),
                    hs.elem_name(h)
                ));
            }
        }
        for m in 0..ms.len() {
            let l = f.fm[sa.on_m().left(g, m)];
            let r = f.fm[sa.on_m().right(m, g)];
            if l != ta.on_m().left(ag, f.fm[m]) || r != ta.on_m().right(f.fm[m], ag) {
                return Some(format!(
                    "f is not equivariant on ({}, {})",
                    sa.g().elem_name(g),
                    ms.name(m)
                ));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic, symmetric, trivial, with_zero, OperationSituation};

    fn translation(g: crate::algebra::DiscreteMonoid, p: usize) -> Comparison {
        Comparison::new(Arc::new(GAugmentedSituation::translation(Arc::new(g))), p).unwrap()
    }

    #[test]
    fn z2_comparison_passes_everything() {
        let c = translation(cyclic(2), 3);
        for r in c.verify() {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn u_in_degree_one() {
        let c = translation(symmetric(3), 1);
        let g = c.aug.g().clone();
        let nm = c.aug.sit().m().len();
        for a in g.elements() {
            for m in 0..g.size() {
                let expect = g.mul(g.mul(a, m), a);
                assert_eq!(c.u(&(vec![a], vec![m])), vec![a * nm + expect]);
            }
        }
    }

    #[test]
    fn t_faces_on_the_last_coordinate() {
        let c = translation(cyclic(3), 2);
        let t = c.intermediate();
        // d_2 (1,2; 0,+) = (1; 2·0)
        let plus = 3;
        assert_eq!(t.face(2, &(vec![1, 2], vec![0, plus])), (vec![1], vec![2]));
    }

    #[test]
    fn trivial_g_gives_the_wedge() {
        let m = Arc::new(cyclic(4));
        let sit = OperationSituation::submonoid(&m, &["0", "2"]).unwrap();
        let aug = Arc::new(GAugmentedSituation::trivial(Arc::new(trivial()), sit.clone()));
        let t = intermediate_t(aug, 3).unwrap();
        let w = WedgeRow {
            sit: Arc::new(sit),
            truncation: 3,
        };
        let w = materialize(&w).unwrap().set;
        assert_eq!(t.nondegenerate_counts(), w.nondegenerate_counts());
        assert_eq!(t.nondegenerate_counts()[..3], [1, 3, 5]);
    }

    #[test]
    fn monoid_action_is_not_bijective() {
        let c = translation(with_zero(), 2);
        let rec = c.check_bijective();
        assert_eq!(rec.status, Status::Flagged);
        assert!(rec.witness.is_some());
        for r in c.check_simplicial() {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn natural_along_z2_into_z4() {
        let z2 = Arc::new(cyclic(2));
        let z4 = Arc::new(cyclic(4));
        let a = MonoidMap::new(z2, z4.clone(), vec![0, 2]).unwrap();
        let aug4 = Arc::new(GAugmentedSituation::translation(z4));
        let aug2 = Arc::new(aug4.restrict(&a).unwrap());
        let src = Comparison::new(aug2, 3).unwrap();
        let tgt = Comparison::new(aug4.clone(), 3).unwrap();
        let f = SituationMap::identity(aug4.sit());
        let rec = naturality_check(&a, &f, &src, &tgt);
        assert!(rec.passed(), "{rec}");
        let id = MonoidMap::identity(tgt.aug.g().clone());
        assert!(naturality_check(&id, &f, &tgt, &tgt).passed());
    }
}
