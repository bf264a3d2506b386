use std::sync::Arc;

use crate::algebra::{GAugmentedSituation, TwoSidedAction};
use crate::sset::{materialize, Axis, SimplicialObject, SimplicialSet, SsetError, TrisimplicialObject};

use super::nerve::{bracket, tuples};
use super::wedge::{wedge_face, wedge_tuples};

/// `N^cy(G, X)` for a two-sided action of `G` on a finite set `X`:
/// degree `k` is `G^k × X` with
/// `d_0 = (g_2..g_k, x g_1)`, inner faces multiplying and `d_k = (g_1..g_{k-1}, g_k x)`.
#[derive(Clone, Debug)]
pub struct CyclicBar {
    pub action: Arc<TwoSidedAction>,
    pub truncation: usize,
}

impl SimplicialObject for CyclicBar {
    type Elem = (Vec<usize>, usize);
    fn truncation(&self) -> usize {
        self.truncation
    }
    fn degree(&self, e: &Self::Elem) -> usize {
        e.0.len()
    }
    fn elements(&self, n: usize) -> Vec<Self::Elem> {
        let nx = self.action.carrier().len();
        tuples(self.action.monoid().size(), n)
            .into_iter()
            .flat_map(|g| (0..nx).map(move |x| (g.clone(), x)))
            .collect()
    }
    fn face(&self, i: usize, e: &Self::Elem) -> Self::Elem {
        let g = self.action.monoid();
        let (mut gs, mut x) = e.clone();
        let k = gs.len();
        if i == 0 {
            let g1 = gs.remove(0);
            x = self.action.right(x, g1);
        } else if i == k {
            let gk = gs.pop().unwrap();
            x = self.action.left(gk, x);
        } else {
            let b = gs.remove(i);
            gs[i - 1] = g.mul(gs[i - 1], b);
        }
        (gs, x)
    }
    fn degeneracy(&self, j: usize, e: &Self::Elem) -> Self::Elem {
        let mut gs = e.0.clone();
        gs.insert(j, self.action.monoid().unit());
        (gs, e.1)
    }
    fn label(&self, e: &Self::Elem) -> String {
        let g = self.action.monoid();
        let gs = bracket(e.0.iter().map(|&a| g.elem_name(a)));
        format!("{};{}]", &gs[..gs.len() - 1], self.action.carrier().name(e.1))
    }
}

pub fn cyclic_bar(action: Arc<TwoSidedAction>, truncation: usize) -> Result<SimplicialSet, SsetError> {
    Ok(materialize(&CyclicBar { action, truncation })?.set)
}

/// `N^cy(G, ⋁(H ⋎ M))` as a trisimplicial object; the internal axis is constant.
#[derive(Clone, Debug)]
pub struct CyclicBarOfWedge {
    pub aug: Arc<GAugmentedSituation>,
    pub truncation: [usize; 3],
}

/// `(g_1..g_k; m_1..m_p)` in internal degree `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriElem {
    pub gs: Vec<usize>,
    pub ms: Vec<usize>,
    pub q: usize,
}

impl TrisimplicialObject for CyclicBarOfWedge {
    type Elem = TriElem;
    fn truncation(&self) -> [usize; 3] {
        self.truncation
    }
    fn tridegree(&self, e: &TriElem) -> [usize; 3] {
        [e.gs.len(), e.ms.len(), e.q]
    }
    fn elements(&self, d: [usize; 3]) -> Vec<TriElem> {
        let ws = wedge_tuples(self.aug.sit(), d[1]);
        let mut out = Vec::new();
        for gs in tuples(self.aug.g().size(), d[0]) {
            for ms in &ws {
                out.push(TriElem {
                    gs: gs.clone(),
                    ms: ms.clone(),
                    q: d[2],
                });
            }
        }
        out
    }
    fn face(&self, axis: Axis, i: usize, e: &TriElem) -> TriElem {
        let mut e = e.clone();
        match axis {
            Axis::CyclicBar => {
                let on_m = self.aug.on_m();
                let k = e.gs.len();
                if i == 0 {
                    let g1 = e.gs.remove(0);
                    e.ms.iter_mut().for_each(|x| *x = on_m.right(*x, g1));
                } else if i == k {
                    let gk = e.gs.pop().unwrap();
                    e.ms.iter_mut().for_each(|x| *x = on_m.left(gk, *x));
                } else {
                    let b = e.gs.remove(i);
                    e.gs[i - 1] = self.aug.g().mul(e.gs[i - 1], b);
                }
            }
            Axis::Wedge => e.ms = wedge_face(self.aug.sit(), i, &e.ms),
            Axis::Internal => e.q -= 1,
        }
        e
    }
    fn degeneracy(&self, axis: Axis, j: usize, e: &TriElem) -> TriElem {
        let mut e = e.clone();
        match axis {
            Axis::CyclicBar => e.gs.insert(j, self.aug.g().unit()),
            Axis::Wedge => e.ms.insert(j, self.aug.sit().base()),
            Axis::Internal => e.q += 1,
        }
        e
    }
    fn label(&self, e: &TriElem) -> String {
        let g = self.aug.g();
        let m = self.aug.sit().m();
        let gs = e.gs.iter().map(|&a| g.elem_name(a)).collect::<Vec<_>>().join("/");
        let ms = e.ms.iter().map(|&x| m.name(x)).collect::<Vec<_>>().join("/");
        format!("[{gs};{ms}]")
    }
}

/// The diagonal of the cyclic-bar and wedge directions, written out directly:
/// degree `k` is `G^k × ⋁^k(H ⋎ M)` with
/// `d_0 = (g_2..g_k; m_2 g_1, .., m_k g_1)`,
/// `d_j = (.., g_j g_{j+1}, ..; .., m_j·m_{j+1}, ..)`,
/// `d_k = (g_1..g_{k-1}; g_k m_1, .., g_k m_{k-1})`.
#[derive(Clone, Debug)]
pub struct CyclicWedge {
    pub aug: Arc<GAugmentedSituation>,
    pub truncation: usize,
}

pub type PairElem = (Vec<usize>, Vec<usize>);

pub(crate) fn pair_label(aug: &GAugmentedSituation, e: &PairElem) -> String {
    let g = aug.g();
    let m = aug.sit().m();
    let gs = e.0.iter().map(|&a| g.elem_name(a)).collect::<Vec<_>>().join("/");
    let ms = e.1.iter().map(|&x| m.name(x)).collect::<Vec<_>>().join("/");
    format!("[{gs};{ms}]")
}

pub(crate) fn pair_elements(aug: &GAugmentedSituation, n: usize) -> Vec<PairElem> {
    let ws = wedge_tuples(aug.sit(), n);
    let mut out = Vec::new();
    for gs in tuples(aug.g().size(), n) {
        for ms in &ws {
            out.push((gs.clone(), ms.clone()));
        }
    }
    out
}

pub(crate) fn pair_degeneracy(aug: &GAugmentedSituation, j: usize, e: &PairElem) -> PairElem {
    let (mut gs, mut ms) = e.clone();
    gs.insert(j, aug.g().unit());
    ms.insert(j, aug.sit().base());
    (gs, ms)
}

impl SimplicialObject for CyclicWedge {
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
            let g1 = gs.remove(0);
            ms.remove(0);
            ms.iter_mut().for_each(|x| *x = on_m.right(*x, g1));
        } else if i == k {
            let gk = gs.pop().unwrap();
            ms.pop();
            ms.iter_mut().for_each(|x| *x = on_m.left(gk, *x));
        } else {
            let b = gs.remove(i);
            gs[i - 1] = self.aug.g().mul(gs[i - 1], b);
            ms = wedge_face(self.aug.sit(), i, &ms);
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
