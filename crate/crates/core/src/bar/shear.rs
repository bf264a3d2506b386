use std::collections::HashMap;

use crate::algebra::TwoSidedAction;
use crate::report::Record;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The shear map `(g, x) ↦ (g, g x)` (or `(g, x g)`) on `G × X`.
#[derive(Clone, Debug)]
pub struct Shear {
    /// Image of `(g, x)` at index `g * |X| + x`.
    pub images: Vec<(usize, usize)>,
    /// Two distinct inputs with a common image, if any.
    pub collision: Option<((usize, usize), (usize, usize))>,
}

impl Shear {
    /// On a finite set injective is the same as bijective.
    pub fn is_bijective(&self) -> bool {
        self.collision.is_none()
    }
}

pub fn shear_map(action: &TwoSidedAction, side: Side) -> Shear {
    let nx = action.carrier().len();
    let mut images = Vec::with_capacity(action.monoid().size() * nx);
    let mut seen = HashMap::new();
    let mut collision = None;
    for g in action.monoid().elements() {
        for x in 0..nx {
            let y = match side {
                Side::Left => action.left(g, x),
                Side::Right => action.right(x, g),
            };
            if let Some(prev) = seen.insert((g, y), (g, x)) {
                collision.get_or_insert((prev, (g, x)));
            }
            images.push((g, y));
        }
    }
    Shear { images, collision }
}

pub fn shear_record(action: &TwoSidedAction, side: Side) -> Record {
    let s = shear_map(action, side);
    let (g, x) = (action.monoid(), action.carrier());
    let witness = s.collision.map(|((g1, x1), (_, x2))| {
        let y = s.images[g1 * x.len() + x1].1;
        format!(
            "({g}, {a}) and ({g}, {b}) both map to ({g}, {y})",
            g = g.elem_name(g1),
            a = x.name(x1),
            b = x.name(x2),
            y = x.name(y)
        )
    });
    let instance = format!("{} on {} ({side:?})", g.name(), x.names().join(","));
    Record::from_witness("shear bijective", &instance, 0, witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic, symmetric, with_zero};
    use std::sync::Arc;

    #[test]
    fn groups_shear_bijectively() {
        for g in [cyclic(3), symmetric(3)] {
            let act = TwoSidedAction::translation(Arc::new(g));
            for side in [Side::Left, Side::Right] {
                assert!(shear_map(&act, side).is_bijective());
            }
        }
    }

    #[test]
    fn zero_monoid_collapses_the_x_row() {
        let m = Arc::new(with_zero());
        let act = TwoSidedAction::translation(m.clone());
        let s = shear_map(&act, Side::Left);
        assert!(!s.is_bijective());
        let x = m.index("x").unwrap();
        let mut row: Vec<&str> = (0..3).map(|y| m.elem_name(s.images[x * 3 + y].1)).collect();
        row.sort_unstable();
        assert_eq!(row, ["0", "0", "x"]);
        assert!(shear_record(&act, Side::Left).witness.is_some());
    }

    #[test]
    fn trivial_action_is_the_identity() {
        let g = Arc::new(symmetric(3));
        let act = TwoSidedAction::trivial(g.clone(), Arc::new(g.as_set().clone()));
        let s = shear_map(&act, Side::Left);
        assert!(s.images.iter().enumerate().all(|(k, &(a, y))| (a, y) == (k / 6, k % 6)));
    }
}
