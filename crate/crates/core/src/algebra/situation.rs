use std::sync::Arc;

use super::action::{check_action, TwoSidedAction};
use super::monoid::{monoid_from_fn, violation, AlgebraError, DiscreteMonoid, FiniteSet, MonoidMap};
use crate::sset::SimplicialObject;

/// A monoid `H` acting two-sidedly on `M`, with an injective equivariant
/// embedding `ι: H -> M`. The basepoint of `M` is `ι(1)`.
#[derive(Clone, Debug)]
pub struct OperationSituation {
    h: Arc<DiscreteMonoid>,
    action: TwoSidedAction,
    iota: Vec<usize>,
    preimage: Vec<Option<usize>>,
}

impl OperationSituation {
    pub fn new(action: TwoSidedAction, iota: Vec<usize>) -> Result<Self, AlgebraError> {
        let h = action.monoid().clone();
        let m = action.carrier().clone();
        if iota.len() != h.size() || iota.iter().any(|&x| x >= m.len()) {
            return Err(AlgebraError::Malformed("embedding table has the wrong shape".into()));
        }
        let mut preimage = vec![None; m.len()];
        for (a, &x) in iota.iter().enumerate() {
            if let Some(b) = preimage[x] {
                return Err(violation(
                    "embedding injectivity",
                    &[h.elem_name(b), h.elem_name(a)],
                    m.name(x),
                    m.name(x),
                ));
            }
            preimage[x] = Some(a);
        }
        let base = iota[h.unit()];
        if let Some(b) = m.base() {
            if b != base {
                return Err(violation(
                    "basepoint is the image of the unit",
                    &[h.elem_name(h.unit())],
                    m.name(base),
                    m.name(b),
                ));
            }
        }
        let action = action.with_carrier(Arc::new(m.with_base(Some(base))));
        let m = action.carrier();
        for a in h.elements() {
            for b in h.elements() {
                let prod = iota[h.mul(a, b)];
                let l = action.left(a, iota[b]);
                if l != prod {
                    return Err(violation(
                        "embedding intertwines the left action",
                        &[h.elem_name(a), h.elem_name(b)],
                        m.name(l),
                        m.name(prod),
                    ));
                }
                let r = action.right(iota[a], b);
                if r != prod {
                    return Err(violation(
                        "embedding intertwines the right action",
                        &[h.elem_name(a), h.elem_name(b)],
                        m.name(r),
                        m.name(prod),
                    ));
                }
            }
        }
        Ok(OperationSituation {
            h,
            action,
            iota,
            preimage,
        })
    }

    /// `H ⋎ H` with translation actions.
    pub fn of_monoid(h: Arc<DiscreteMonoid>) -> Self {
        let iota = h.elements().collect();
        Self::new(TwoSidedAction::translation(h), iota).expect("translation situation")
    }

    /// `A ⋎ M` for a submonoid `A` of `M`, acting by multiplication.
    pub fn submonoid(m: &Arc<DiscreteMonoid>, elems: &[&str]) -> Result<Self, AlgebraError> {
        let (a, idx) = super::monoid::submonoid(m, elems)?;
        let a = Arc::new(a);
        let carrier = Arc::new(m.as_set().clone());
        let act = check_action(
            a,
            carrier,
            |g, x| m.mul(idx[g], x),
            |x, g| m.mul(x, idx[g]),
        )?;
        Self::new(act, idx)
    }

    /// `* ⋎ M` for a pointed set `M`.
    pub fn over_point(m: Arc<FiniteSet>) -> Result<Self, AlgebraError> {
        let base = m
            .base()
            .ok_or_else(|| AlgebraError::Malformed("the carrier needs a basepoint".into()))?;
        let act = TwoSidedAction::trivial(Arc::new(super::monoid::trivial()), m);
        Self::new(act, vec![base])
    }

    pub fn h(&self) -> &Arc<DiscreteMonoid> {
        &self.h
    }

    pub fn m(&self) -> &Arc<FiniteSet> {
        self.action.carrier()
    }

    pub fn action(&self) -> &TwoSidedAction {
        &self.action
    }

    pub fn iota(&self, a: usize) -> usize {
        self.iota[a]
    }

    pub fn base(&self) -> usize {
        self.iota[self.h.unit()]
    }

    /// The element of `H` embedded at `x`, if any.
    pub fn in_h(&self, x: usize) -> Option<usize> {
        self.preimage[x]
    }

    /// The overloaded product of two adjacent wedge coordinates: the left
    /// `H`-action when the first lies in `ι(H)`, otherwise the right action by
    /// the second. `None` when neither lies in `ι(H)`.
    pub fn dot(&self, a: usize, b: usize) -> Option<usize> {
        if let Some(h) = self.preimage[a] {
            Some(self.action.left(h, b))
        } else {
            self.preimage[b].map(|h| self.action.right(a, h))
        }
    }

    pub fn describe(&self) -> String {
        format!("{} in {}", self.h.name(), self.m().names().join(","))
    }
}

/// A monoid `G` acting on an operation situation `H ⋎ M`.
#[derive(Clone, Debug)]
pub struct GAugmentedSituation {
    g: Arc<DiscreteMonoid>,
    sit: OperationSituation,
    on_h: TwoSidedAction,
    on_m: TwoSidedAction,
}

fn check_distributive(on_h: &TwoSidedAction, h: &DiscreteMonoid) -> Result<(), AlgebraError> {
    let g = on_h.monoid();
    if on_h.carrier().names() != h.as_set().names() {
        return Err(AlgebraError::Malformed(format!(
            "{} must act on the elements of {}",
            g.name(),
            h.name()
        )));
    }
    let gn = |a: usize| g.elem_name(a);
    let hn = |a: usize| h.elem_name(a);
    for a in g.elements() {
        for side in ["left", "right"] {
            let act = |x: usize| {
                if side == "left" {
                    on_h.left(a, x)
                } else {
                    on_h.right(x, a)
                }
            };
            if act(h.unit()) != h.unit() {
                return Err(violation(
                    &format!("{side} action fixes the unit"),
                    &[gn(a)],
                    hn(act(h.unit())),
                    hn(h.unit()),
                ));
            }
            for x in h.elements() {
                for y in h.elements() {
                    let lhs = act(h.mul(x, y));
                    let rhs = h.mul(act(x), act(y));
                    if lhs != rhs {
                        return Err(violation(
                            &format!("{side} action is distributive"),
                            &[gn(a), hn(x), hn(y)],
                            hn(lhs),
                            hn(rhs),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

impl GAugmentedSituation {
    /// Validate the augmentation clauses:
    /// 1. `G` acts on the monoid `H` distributively and fixing the unit;
    /// 2. `G` acts compatibly on `M` (already part of `on_m`);
    /// 3. the `G`- and `H`-actions on `M` interchange, e.g. `g.(h.m) = (g.h).(g.m)`;
    /// 4. `ι` is `G`-equivariant, so in particular `G` fixes the basepoint of `M`.
    pub fn new(
        sit: OperationSituation,
        on_h: TwoSidedAction,
        on_m: TwoSidedAction,
    ) -> Result<Self, AlgebraError> {
        let g = on_h.monoid().clone();
        if **on_m.monoid() != *g {
            return Err(AlgebraError::Malformed("both actions must be by the same monoid".into()));
        }
        if on_m.carrier().names() != sit.m().names() {
            return Err(AlgebraError::Malformed(format!(
                "{} must act on the carrier of the situation",
                g.name()
            )));
        }
        check_distributive(&on_h, sit.h())?;
        let h = sit.h();
        let act = sit.action();
        let m = sit.m();
        let gn = |a: usize| g.elem_name(a);
        let hn = |a: usize| h.elem_name(a);
        let mn = |x: usize| m.name(x);
        for a in g.elements() {
            for b in h.elements() {
                for x in 0..m.len() {
                    let checks = [
                        (
                            "g.(h.m) = (g.h).(g.m)",
                            on_m.left(a, act.left(b, x)),
                            act.left(on_h.left(a, b), on_m.left(a, x)),
                        ),
                        (
                            "g.(m.h) = (g.m).(g.h)",
                            on_m.left(a, act.right(x, b)),
                            act.right(on_m.left(a, x), on_h.left(a, b)),
                        ),
                        (
                            "(h.m).g = (h.g).(m.g)",
                            on_m.right(act.left(b, x), a),
                            act.left(on_h.right(b, a), on_m.right(x, a)),
                        ),
                        (
                            "(m.h).g = (m.g).(h.g)",
                            on_m.right(act.right(x, b), a),
                            act.right(on_m.right(x, a), on_h.right(b, a)),
                        ),
                    ];
                    for (axiom, lhs, rhs) in checks {
                        if lhs != rhs {
                            return Err(violation(axiom, &[gn(a), hn(b), mn(x)], mn(lhs), mn(rhs)));
                        }
                    }
                }
                let l = on_m.left(a, sit.iota(b));
                if l != sit.iota(on_h.left(a, b)) {
                    return Err(violation(
                        "g.ι(h) = ι(g.h)",
                        &[gn(a), hn(b)],
                        mn(l),
                        mn(sit.iota(on_h.left(a, b))),
                    ));
                }
                let r = on_m.right(sit.iota(b), a);
                if r != sit.iota(on_h.right(b, a)) {
                    return Err(violation(
                        "ι(h).g = ι(h.g)",
                        &[hn(b), gn(a)],
                        mn(r),
                        mn(sit.iota(on_h.right(b, a))),
                    ));
                }
            }
        }
        Ok(GAugmentedSituation { g, sit, on_h, on_m })
    }

    /// `G` acting on `* ⋎ G₊` by translation, fixing the added basepoint.
    pub fn translation(g: Arc<DiscreteMonoid>) -> Self {
        let on_m = TwoSidedAction::pointed_translation(g.clone());
        let sit = OperationSituation::over_point(on_m.carrier().clone()).unwrap();
        let on_h = TwoSidedAction::trivial(g, Arc::new(sit.h().as_set().clone()));
        Self::new(sit, on_h, on_m).expect("pointed translation is an augmentation")
    }

    /// `G` acting trivially on `H ⋎ M`.
    pub fn trivial(g: Arc<DiscreteMonoid>, sit: OperationSituation) -> Self {
        let on_h = TwoSidedAction::trivial(g.clone(), Arc::new(sit.h().as_set().clone()));
        let on_m = TwoSidedAction::trivial(g, sit.m().clone());
        Self::new(sit, on_h, on_m).expect("trivial actions are an augmentation")
    }

    /// Pull the `G`-actions back along `a: G' -> G`.
    pub fn restrict(&self, a: &MonoidMap) -> Result<Self, AlgebraError> {
        Self::new(self.sit.clone(), self.on_h.restrict(a)?, self.on_m.restrict(a)?)
    }

    pub fn g(&self) -> &Arc<DiscreteMonoid> {
        &self.g
    }

    pub fn sit(&self) -> &OperationSituation {
        &self.sit
    }

    pub fn on_h(&self) -> &TwoSidedAction {
        &self.on_h
    }

    pub fn on_m(&self) -> &TwoSidedAction {
        &self.on_m
    }

    pub fn describe(&self) -> String {
        format!("{} on {}", self.g.name(), self.sit.describe())
    }
}

/// Semidirect product `G ⋉ H` on `G × H` with
/// `(g,h)(g',h') = (gg', (h.g')(g.h'))`; element `(g,h)` has index `g*|H| + h`.
pub fn semidirect_monoid(on_h: &TwoSidedAction, h: &DiscreteMonoid) -> Result<DiscreteMonoid, AlgebraError> {
    check_distributive(on_h, h)?;
    let g = on_h.monoid();
    let nh = h.size();
    let names: Vec<String> = g
        .elements()
        .flat_map(|a| h.elements().map(move |b| (a, b)))
        .map(|(a, b)| format!("({};{})", g.elem_name(a), h.elem_name(b)))
        .collect();
    let unit = names[g.unit() * nh + h.unit()].clone();
    let set = FiniteSet::new(&names, Some(&unit))?;
    monoid_from_fn(&format!("{}x{}", g.name(), h.name()), set, |x, y| {
        let (g1, h1) = (x / nh, x % nh);
        let (g2, h2) = (y / nh, y % nh);
        g.mul(g1, g2) * nh + h.mul(on_h.right(h1, g2), on_h.left(g1, h2))
    })
}

/// `(G ⋉ H) ⋎ (G × M)` with
/// `(g,h).(ĝ,m) = (gĝ, (h.ĝ).(g.m))`, `(ĝ,m).(g,h) = (ĝg, (m.g).(ĝ.h))`
/// and embedding `(g,h) ↦ (g, ι(h))`. Carrier element `(g,m)` has index
/// `g*|M| + m`. Everything is re-validated.
pub fn semidirect_opsit(aug: &GAugmentedSituation) -> Result<OperationSituation, AlgebraError> {
    let g = aug.g();
    let sit = aug.sit();
    let h = sit.h();
    let gh = Arc::new(semidirect_monoid(aug.on_h(), h)?);
    let (nh, nm) = (h.size(), sit.m().len());
    let names: Vec<String> = g
        .elements()
        .flat_map(|a| (0..nm).map(move |x| (a, x)))
        .map(|(a, x)| format!("({};{})", g.elem_name(a), sit.m().name(x)))
        .collect();
    let base = names[g.unit() * nm + sit.base()].clone();
    let carrier = Arc::new(FiniteSet::new(&names, Some(&base))?);
    let act = sit.action();
    let (on_h, on_m) = (aug.on_h(), aug.on_m());
    let action = check_action(
        gh.clone(),
        carrier,
        |p, q| {
            let (a, b) = (p / nh, p % nh);
            let (c, x) = (q / nm, q % nm);
            g.mul(a, c) * nm + act.left(on_h.right(b, c), on_m.left(a, x))
        },
        |q, p| {
            let (c, x) = (q / nm, q % nm);
            let (a, b) = (p / nh, p % nh);
            g.mul(c, a) * nm + act.right(on_m.right(x, a), on_h.left(c, b))
        },
    )?;
    let iota = gh
        .elements()
        .map(|p| (p / nh) * nm + sit.iota(p % nh))
        .collect();
    OperationSituation::new(action, iota)
}

/// A map of operation situations `(f_h, f_m)`.
#[derive(Clone, Debug)]
pub struct SituationMap {
    pub fh: MonoidMap,
    pub fm: Vec<usize>,
}

impl SituationMap {
    pub fn new(
        source: &OperationSituation,
        target: &OperationSituation,
        fh: MonoidMap,
        fm: Vec<usize>,
    ) -> Result<Self, AlgebraError> {
        if fm.len() != source.m().len() || fm.iter().any(|&y| y >= target.m().len()) {
            return Err(AlgebraError::Malformed("carrier map has the wrong shape".into()));
        }
        let (sa, ta) = (source.action(), target.action());
        let mn = |x: usize| target.m().name(x).to_string();
        for a in source.h().elements() {
            let via = fm[source.iota(a)];
            if via != target.iota(fh.apply(a)) {
                return Err(violation(
                    "compatible with the embeddings",
                    &[source.h().elem_name(a)],
                    &mn(via),
                    &mn(target.iota(fh.apply(a))),
                ));
            }
            for x in 0..source.m().len() {
                let l = fm[sa.left(a, x)];
                let l2 = ta.left(fh.apply(a), fm[x]);
                let r = fm[sa.right(x, a)];
                let r2 = ta.right(fm[x], fh.apply(a));
                if l != l2 || r != r2 {
                    return Err(violation(
                        "equivariance",
                        &[source.h().elem_name(a), source.m().name(x)],
                        &mn(if l != l2 { l } else { r }),
                        &mn(if l != l2 { l2 } else { r2 }),
                    ));
                }
            }
        }
        Ok(SituationMap { fh, fm })
    }

    pub fn identity(sit: &OperationSituation) -> Self {
        SituationMap {
            fh: MonoidMap::identity(sit.h().clone()),
            fm: (0..sit.m().len()).collect(),
        }
    }
}

/// The constant simplicial monoid on a discrete monoid: every degree is the
/// monoid and every structure map is the identity.
#[derive(Clone, Debug)]
pub struct ConstantSimplicialMonoid {
    pub monoid: Arc<DiscreteMonoid>,
    pub truncation: usize,
}

pub fn lift_constant(m: Arc<DiscreteMonoid>, truncation: usize) -> ConstantSimplicialMonoid {
    ConstantSimplicialMonoid {
        monoid: m,
        truncation,
    }
}

impl ConstantSimplicialMonoid {
    /// Degreewise multiplication.
    pub fn mul(&self, a: &(usize, usize), b: &(usize, usize)) -> (usize, usize) {
        assert_eq!(a.0, b.0, "multiplying simplices of different degrees");
        (a.0, self.monoid.mul(a.1, b.1))
    }
}

impl SimplicialObject for ConstantSimplicialMonoid {
    type Elem = (usize, usize);
    fn truncation(&self) -> usize {
        self.truncation
    }
    fn degree(&self, e: &(usize, usize)) -> usize {
        e.0
    }
    fn elements(&self, n: usize) -> Vec<(usize, usize)> {
        self.monoid.elements().map(|a| (n, a)).collect()
    }
    fn face(&self, _i: usize, e: &(usize, usize)) -> (usize, usize) {
        (e.0 - 1, e.1)
    }
    fn degeneracy(&self, _j: usize, e: &(usize, usize)) -> (usize, usize) {
        (e.0 + 1, e.1)
    }
    fn label(&self, e: &(usize, usize)) -> String {
        self.monoid.elem_name(e.1).to_string()
    }
    fn basepoint(&self) -> Option<(usize, usize)> {
        Some((0, self.monoid.unit()))
    }
}
