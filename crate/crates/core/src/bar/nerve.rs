use std::sync::Arc;

use itertools::Itertools;

use crate::algebra::DiscreteMonoid;
use crate::sset::{materialize, SimplicialObject, SimplicialSet, SsetError};

/// All `k`-tuples over `0..n`, in lexicographic order.
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(k)];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

pub(crate) fn bracket<I: IntoIterator<Item = S>, S: std::fmt::Display>(items: I) -> String {
    format!("[{}]", items.into_iter().join("/"))
}

/// Nerve of a finite monoid: degree `k` is `M^k`, inner faces multiply,
/// outer faces forget, degeneracies insert the unit.
#[derive(Clone, Debug)]
pub struct Nerve {
    pub monoid: Arc<DiscreteMonoid>,
    pub truncation: usize,
}

impl SimplicialObject for Nerve {
    type Elem = Vec<usize>;
    fn truncation(&self) -> usize {
        self.truncation
    }
    fn degree(&self, e: &Vec<usize>) -> usize {
        e.len()
    }
    fn elements(&self, n: usize) -> Vec<Vec<usize>> {
        tuples(self.monoid.size(), n)
    }
    fn face(&self, i: usize, e: &Vec<usize>) -> Vec<usize> {
        let k = e.len();
        let mut v = e.clone();
        if i == 0 {
            v.remove(0);
        } else if i == k {
            v.pop();
        } else {
            let b = v.remove(i);
            v[i - 1] = self.monoid.mul(v[i - 1], b);
        }
        v
    }
    fn degeneracy(&self, j: usize, e: &Vec<usize>) -> Vec<usize> {
        let mut v = e.clone();
        v.insert(j, self.monoid.unit());
        v
    }
    fn label(&self, e: &Vec<usize>) -> String {
        bracket(e.iter().map(|&x| self.monoid.elem_name(x)))
    }
    fn basepoint(&self) -> Option<Vec<usize>> {
        Some(Vec::new())
    }
}

pub fn nerve(m: Arc<DiscreteMonoid>, truncation: usize) -> Result<SimplicialSet, SsetError> {
    Ok(materialize(&Nerve {
        monoid: m,
        truncation,
    })?
    .set)
}
