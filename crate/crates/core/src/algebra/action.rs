use std::sync::Arc;

use super::monoid::{violation, AlgebraError, DiscreteMonoid, FiniteSet};

/// Compatible left and right actions of a monoid on a finite set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSidedAction {
    monoid: Arc<DiscreteMonoid>,
    carrier: Arc<FiniteSet>,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl TwoSidedAction {
    pub fn monoid(&self) -> &Arc<DiscreteMonoid> {
        &self.monoid
    }

    pub fn carrier(&self) -> &Arc<FiniteSet> {
        &self.carrier
    }

    /// `g . x`
    pub fn left(&self, g: usize, x: usize) -> usize {
        self.left[g * self.carrier.len() + x]
    }

    /// `x . g`
    pub fn right(&self, x: usize, g: usize) -> usize {
        self.right[x * self.monoid.size() + g]
    }

    /// Left and right translation of a monoid on itself.
    pub fn translation(g: Arc<DiscreteMonoid>) -> Self {
        let carrier = Arc::new(g.as_set().clone());
        let g2 = g.clone();
        check_action(g, carrier, |a, x| g2.mul(a, x), |x, a| g2.mul(x, a))
            .expect("translation satisfies the monoid laws")
    }

    /// Translation on `G` plus a disjoint fixed basepoint `+`.
    pub fn pointed_translation(g: Arc<DiscreteMonoid>) -> Self {
        let mut names: Vec<String> = g.as_set().names().to_vec();
        let mut plus = "+".to_string();
        while names.contains(&plus) {
            plus.push('+');
        }
        names.push(plus.clone());
        let carrier = Arc::new(FiniteSet::new(&names, Some(&plus)).unwrap());
        let n = g.size();
        let g2 = g.clone();
        let g3 = g.clone();
        check_action(
            g,
            carrier,
            move |a, x| if x == n { n } else { g2.mul(a, x) },
            move |x, a| if x == n { n } else { g3.mul(x, a) },
        )
        .expect("pointed translation satisfies the monoid laws")
    }

    pub fn trivial(g: Arc<DiscreteMonoid>, carrier: Arc<FiniteSet>) -> Self {
        check_action(g, carrier, |_, x| x, |x, _| x).expect("trivial action")
    }

    pub(crate) fn with_carrier(mut self, carrier: Arc<FiniteSet>) -> Self {
        assert_eq!(carrier.len(), self.carrier.len());
        self.carrier = carrier;
        self
    }

    /// Pull the action back along a monoid map into the acting monoid.
    pub fn restrict(&self, along: &super::MonoidMap) -> Result<Self, AlgebraError> {
        if *along.target != *self.monoid {
            return Err(AlgebraError::Malformed("restriction along a map with the wrong target".into()));
        }
        check_action(
            along.source.clone(),
            self.carrier.clone(),
            |g, x| self.left(along.apply(g), x),
            |x, g| self.right(x, along.apply(g)),
        )
    }
}

/// Tabulate and validate a two-sided action: associativity and unitality on
/// each side, and the compatibility `(g.x).h = g.(x.h)`.
pub fn check_action<L, R>(
    g: Arc<DiscreteMonoid>,
    carrier: Arc<FiniteSet>,
    left: L,
    right: R,
) -> Result<TwoSidedAction, AlgebraError>
where
    L: Fn(usize, usize) -> usize,
    R: Fn(usize, usize) -> usize,
{
    let (ng, nx) = (g.size(), carrier.len());
    let mut lt = Vec::with_capacity(ng * nx);
    for a in 0..ng {
        for x in 0..nx {
            let y = left(a, x);
            if y >= nx {
                return Err(AlgebraError::Malformed(format!(
                    "left action {}.{} is missing",
                    g.elem_name(a),
                    carrier.name(x)
                )));
            }
            lt.push(y);
        }
    }
    let mut rt = Vec::with_capacity(ng * nx);
    for x in 0..nx {
        for a in 0..ng {
            let y = right(x, a);
            if y >= nx {
                return Err(AlgebraError::Malformed(format!(
                    "right action {}.{} is missing",
                    carrier.name(x),
                    g.elem_name(a)
                )));
            }
            rt.push(y);
        }
    }
    let act = TwoSidedAction {
        monoid: g,
        carrier,
        left: lt,
        right: rt,
    };
    let g = &act.monoid;
    let gn = |a: usize| g.elem_name(a).to_string();
    let xn = |x: usize| act.carrier.name(x).to_string();
    let u = g.unit();
    for x in 0..nx {
        if act.left(u, x) != x {
            return Err(violation("left unit", &[&xn(x)], &xn(act.left(u, x)), &xn(x)));
        }
        if act.right(x, u) != x {
            return Err(violation("right unit", &[&xn(x)], &xn(act.right(x, u)), &xn(x)));
        }
    }
    for a in 0..ng {
        for b in 0..ng {
            let ab = g.mul(a, b);
            for x in 0..nx {
                let lhs = act.left(ab, x);
                let rhs = act.left(a, act.left(b, x));
                if lhs != rhs {
                    return Err(violation(
                        "left associativity",
                        &[&gn(a), &gn(b), &xn(x)],
                        &xn(lhs),
                        &xn(rhs),
                    ));
                }
                let lhs = act.right(x, ab);
                let rhs = act.right(act.right(x, a), b);
                if lhs != rhs {
                    return Err(violation(
                        "right associativity",
                        &[&xn(x), &gn(a), &gn(b)],
                        &xn(lhs),
                        &xn(rhs),
                    ));
                }
                let lhs = act.right(act.left(a, x), b);
                let rhs = act.left(a, act.right(x, b));
                if lhs != rhs {
                    return Err(violation(
                        "compatibility",
                        &[&gn(a), &xn(x), &gn(b)],
                        &xn(lhs),
                        &xn(rhs),
                    ));
                }
            }
        }
    }
    Ok(act)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic, symmetric};

    #[test]
    fn translations_and_trivial_pass() {
        let s3 = Arc::new(symmetric(3));
        let t = TwoSidedAction::translation(s3.clone());
        assert_eq!(t.left(1, s3.unit()), 1);
        let p = TwoSidedAction::pointed_translation(s3.clone());
        assert_eq!(p.carrier().len(), 7);
        assert_eq!(p.left(3, 6), 6);
        TwoSidedAction::trivial(s3.clone(), Arc::new(s3.as_set().clone()));
    }

    #[test]
    fn left_table_on_the_right_fails_for_s3() {
        let s3 = Arc::new(symmetric(3));
        let carrier = Arc::new(s3.as_set().clone());
        let ok = check_action(s3.clone(), carrier.clone(), |g, x| s3.mul(g, x), |x, _| x);
        assert!(ok.is_ok());
        let err = check_action(s3.clone(), carrier, |g, x| s3.mul(g, x), |x, g| s3.mul(g, x))
            .unwrap_err();
        assert_eq!(err.violation().unwrap().axiom, "right associativity");
    }

    #[test]
    fn restriction_along_inclusion() {
        let z4 = Arc::new(cyclic(4));
        let f = crate::algebra::MonoidMap::new(Arc::new(cyclic(2)), z4.clone(), vec![0, 2]).unwrap();
        let r = TwoSidedAction::translation(z4).restrict(&f).unwrap();
        assert_eq!(r.left(1, 1), 3);
    }
}
