//! Simplices in Eilenberg–Zilber canonical form.
//!
//! Every simplex of a simplicial set is uniquely `s_{i_k} ... s_{i_1} x` with
//! `i_k > ... > i_1` and `x` nondegenerate. A [`DegeneracyWord`] stores the
//! indices outermost first, so the stored vector is strictly decreasing.

use std::fmt;

use thiserror::Error;

/// Index of a nondegenerate simplex inside its owning [`SimplicialSet`](super::SimplicialSet).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexId(pub u32);

impl SimplexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("degeneracy word {0:?} is not strictly decreasing")]
pub struct NotCanonical(pub Vec<usize>);

/// A strictly decreasing list of degeneracy indices, outermost operator first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegeneracyWord(Vec<usize>);

impl DegeneracyWord {
    pub fn empty() -> Self {
        DegeneracyWord(Vec::new())
    }

    pub fn new(indices: Vec<usize>) -> Result<Self, NotCanonical> {
        if indices.windows(2).all(|w| w[0] > w[1]) {
            Ok(DegeneracyWord(indices))
        } else {
            Err(NotCanonical(indices))
        }
    }

    /// The word whose operators are exactly the index set `J`, which is the
    /// canonical form of any simplex lying in the image of `s_j` for `j ∈ J`.
    pub fn from_index_set(mut set: Vec<usize>) -> Self {
        set.sort_unstable_by(|a, b| b.cmp(a));
        set.dedup();
        DegeneracyWord(set)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Canonical form of `s_j ∘ self`, using `s_j s_w = s_{w+1} s_j` for `j ≤ w`.
    pub fn prepend(&self, j: usize) -> Self {
        let split = self.0.iter().position(|&w| j > w).unwrap_or(self.0.len());
        let mut out = Vec::with_capacity(self.0.len() + 1);
        out.extend(self.0[..split].iter().map(|w| w + 1));
        out.push(j);
        out.extend_from_slice(&self.0[split..]);
        DegeneracyWord(out)
    }

    /// Canonical form of `outer ∘ inner`.
    pub fn compose(outer: &DegeneracyWord, inner: &DegeneracyWord) -> Self {
        outer
            .0
            .iter()
            .rev()
            .fold(inner.clone(), |acc, &j| acc.prepend(j))
    }

    /// Rewrite `d_i ∘ s_W` as `s_{W'} ∘ d_{i'}` (or `s_{W'}` alone when a face
    /// cancels a degeneracy).
    pub fn push_face(&self, i: usize) -> (DegeneracyWord, Option<usize>) {
        let mut out = Vec::with_capacity(self.0.len());
        let mut i = i;
        for (pos, &j) in self.0.iter().enumerate() {
            if i < j {
                out.push(j - 1);
            } else if i == j || i == j + 1 {
                out.extend_from_slice(&self.0[pos + 1..]);
                return (DegeneracyWord(out), None);
            } else {
                out.push(j);
                i -= 1;
            }
        }
        (DegeneracyWord(out), Some(i))
    }
}

impl fmt::Display for DegeneracyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, j) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        Ok(())
    }
}

/// A possibly degenerate simplex: a degeneracy word applied to a nondegenerate one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    pub id: SimplexId,
    pub word: DegeneracyWord,
}

impl Simplex {
    pub fn nondegenerate(id: SimplexId) -> Self {
        Simplex {
            id,
            word: DegeneracyWord::empty(),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_empty()
    }

    pub fn degenerate(&self, j: usize) -> Self {
        Simplex {
            id: self.id,
            word: self.word.prepend(j),
        }
    }

    /// Apply an outer degeneracy word.
    pub fn with_outer(&self, outer: &DegeneracyWord) -> Self {
        Simplex {
            id: self.id,
            word: DegeneracyWord::compose(outer, &self.word),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[usize]) -> DegeneracyWord {
        DegeneracyWord::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_decreasing() {
        assert!(DegeneracyWord::new(vec![0, 1]).is_err());
        assert!(DegeneracyWord::new(vec![1, 1]).is_err());
        assert!(DegeneracyWord::new(vec![2, 0]).is_ok());
    }

    #[test]
    fn prepend_normalizes() {
        // s_0 s_0 = s_1 s_0
        assert_eq!(w(&[0]).prepend(0), w(&[1, 0]));
        // s_2 s_0 already canonical
        assert_eq!(w(&[0]).prepend(2), w(&[2, 0]));
        // s_1 s_1 s_0 = s_2 s_1 s_0
        assert_eq!(w(&[1, 0]).prepend(1), w(&[2, 1, 0]));
        assert_eq!(DegeneracyWord::empty().prepend(3), w(&[3]));
    }

    #[test]
    fn push_face_rules() {
        // d_0 s_0 = id
        assert_eq!(w(&[0]).push_face(0), (w(&[]), None));
        assert_eq!(w(&[0]).push_face(1), (w(&[]), None));
        // d_0 s_1 = s_0 d_0
        assert_eq!(w(&[1]).push_face(0), (w(&[0]), Some(0)));
        // d_3 s_1 = s_1 d_2
        assert_eq!(w(&[1]).push_face(3), (w(&[1]), Some(2)));
        // d_2 s_1 s_0 = s_1 s_0 ... d_2 s_1 = id
        assert_eq!(w(&[1, 0]).push_face(2), (w(&[0]), None));
    }
}
