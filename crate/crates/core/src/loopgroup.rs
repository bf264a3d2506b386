//! Symbolic Kan loop group of a reduced simplicial set.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::report::{Record, Status};
use crate::sset::{Simplex, SimplicialSet};

/// Generator index and inversion flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inv(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord(Vec<Letter>);

#[derive(Debug, Error, PartialEq, Eq)]
#[error("bad word syntax at {0:?}")]
pub struct WordSyntax(pub String);

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord(Vec::new())
    }

    pub fn generator(gen: usize) -> Self {
        GroupWord(vec![Letter { gen, inverse: false }])
    }

    /// Reduces the letters.
    pub fn new(letters: Vec<Letter>) -> Self {
        GroupWord(reduce(&letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiply(&self, other: &GroupWord) -> GroupWord {
        let mut out = self.0.clone();
        for &l in &other.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupWord(out)
    }

    pub fn invert(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Parse `g1 g2^-1 g1` (1-based generator numbers); `1` is the identity.
    pub fn parse(s: &str) -> Result<GroupWord, WordSyntax> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (body, inverse) = match tok.strip_suffix("^-1") {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let k: usize = body
                .strip_prefix('g')
                .and_then(|d| d.parse().ok())
                .filter(|&k| k >= 1)
                .ok_or_else(|| WordSyntax(tok.to_string()))?;
            letters.push(Letter { gen: k - 1, inverse });
        }
        Ok(GroupWord::new(letters))
    }
}

/// Free reduction with a stack; the result does not depend on the order in
/// which cancelling pairs are removed.
pub fn reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "g{}", l.gen + 1)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LoopGroupError {
    #[error("the base has {0} vertices; the loop group needs exactly one")]
    NotReduced(usize),
    #[error("truncation {0} leaves no loop group degrees")]
    TooShort(usize),
}

/// Free simplicial group with generators `X_{n+1} ∖ s_0 X_n` in degree `n`.
#[derive(Clone, Debug)]
pub struct KanLoopGroup {
    base: Arc<SimplicialSet>,
    label: String,
    generators: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

/// The structure maps, stated once for reports.
pub const KAN_FORMULAS: &str =
    "d_0<x> = <d_1 x><d_0 x>^-1, d_i<x> = <d_{i+1} x>, s_i<x> = <s_{i+1} x>, <s_0 y> = 1";

pub fn kan_loop_group(x: Arc<SimplicialSet>) -> Result<KanLoopGroup, LoopGroupError> {
    let verts = x.roster(0).len();
    if verts != 1 {
        return Err(LoopGroupError::NotReduced(verts));
    }
    if x.truncation() == 0 {
        return Err(LoopGroupError::TooShort(0));
    }
    let mut generators = Vec::new();
    let mut index = Vec::new();
    for n in 0..x.truncation() {
        let gens: Vec<Simplex> = x
            .simplices(n + 1)
            .into_iter()
            .filter(|s| !in_image_of_s0(s))
            .collect();
        index.push(gens.iter().cloned().enumerate().map(|(k, s)| (s, k)).collect());
        generators.push(gens);
    }
    Ok(KanLoopGroup {
        base: x,
        label: "X".into(),
        generators,
        index,
    })
}

fn in_image_of_s0(s: &Simplex) -> bool {
    s.word.indices().contains(&0)
}

impl KanLoopGroup {
    /// Name of the base used in reports.
    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    pub fn base(&self) -> &Arc<SimplicialSet> {
        &self.base
    }

    /// Highest group degree with a generator roster.
    pub fn top_degree(&self) -> usize {
        self.generators.len() - 1
    }

    pub fn generators(&self, n: usize) -> &[Simplex] {
        &self.generators[n]
    }

    pub fn generator_label(&self, n: usize, k: usize) -> String {
        format!("<{}>", self.base.label(&self.generators[n][k]))
    }

    /// `<y>` for `y` in `X_{n+1}`; the identity on `s_0`-degenerate simplices.
    pub fn bracket(&self, n: usize, y: &Simplex) -> GroupWord {
        if in_image_of_s0(y) {
            return GroupWord::identity();
        }
        GroupWord::generator(self.index[n][y])
    }

    fn extend<F: Fn(usize) -> GroupWord>(w: &GroupWord, on_gen: F) -> GroupWord {
        w.0.iter().fold(GroupWord::identity(), |acc, l| {
            let g = on_gen(l.gen);
            acc.multiply(&if l.inverse { g.invert() } else { g })
        })
    }

    /// `d_i` on a word in degree `n ≥ 1`.
    pub fn face(&self, i: usize, n: usize, w: &GroupWord) -> GroupWord {
        assert!(n >= 1 && i <= n, "d_{i} in degree {n}");
        Self::extend(w, |k| {
            let x = &self.generators[n][k];
            if i == 0 {
                let a = self.bracket(n - 1, &self.base.face(1, x));
                let b = self.bracket(n - 1, &self.base.face(0, x));
                a.multiply(&b.invert())
            } else {
                self.bracket(n - 1, &self.base.face(i + 1, x))
            }
        })
    }

    /// `s_j` on a word in degree `n`, for `n + 1 ≤ top_degree()`.
    pub fn degeneracy(&self, j: usize, n: usize, w: &GroupWord) -> GroupWord {
        assert!(n < self.top_degree() && j <= n, "s_{j} in degree {n}");
        Self::extend(w, |k| {
            self.bracket(n + 1, &self.base.degeneracy(j + 1, &self.generators[n][k]))
        })
    }

    /// A word of length at most `max_len` with uniformly chosen letters.
    pub fn random_word(&self, n: usize, max_len: usize, rng: &mut impl Rng) -> GroupWord {
        let gens = self.generators[n].len();
        if gens == 0 {
            return GroupWord::identity();
        }
        let len = rng.gen_range(0..=max_len);
        GroupWord::new(
            (0..len)
                .map(|_| Letter {
                    gen: rng.gen_range(0..gens),
                    inverse: rng.gen_bool(0.5),
                })
                .collect(),
        )
    }

    /// First violated identity or homomorphism law on `(v, w)` in degree `n`.
    fn check_pair(&self, n: usize, v: &GroupWord, w: &GroupWord) -> Option<String> {
        let top = self.top_degree();
        let vw = v.multiply(w);
        let show = |u: &GroupWord| u.to_string();
        if n >= 1 {
            for i in 0..=n {
                let lhs = self.face(i, n, &vw);
                let rhs = self.face(i, n, v).multiply(&self.face(i, n, w));
                if lhs != rhs {
                    return Some(format!("d_{i}(vw) != d_{i}(v) d_{i}(w) for v = {}, w = {} in degree {n}", show(v), show(w)));
                }
                if self.face(i, n, &v.invert()) != self.face(i, n, v).invert() {
                    return Some(format!("d_{i} does not commute with inversion on {} in degree {n}", show(v)));
                }
            }
        }
        if n >= 2 {
            for j in 1..=n {
                for i in 0..j {
                    let lhs = self.face(i, n - 1, &self.face(j, n, v));
                    let rhs = self.face(j - 1, n - 1, &self.face(i, n, v));
                    if lhs != rhs {
                        return Some(format!(
                            "d_{i} d_{j} != d_{} d_{i} on {} in degree {n}: {} vs {}",
                            j - 1,
                            show(v),
                            show(&lhs),
                            show(&rhs)
                        ));
                    }
                }
            }
        }
        if n < top {
            for j in 0..=n {
                let s = self.degeneracy(j, n, v);
                if self.degeneracy(j, n, &vw) != s.multiply(&self.degeneracy(j, n, w)) {
                    return Some(format!("s_{j} is not a homomorphism on {}, {} in degree {n}", show(v), show(w)));
                }
                for i in 0..=n + 1 {
                    let lhs = self.face(i, n + 1, &s);
                    let rhs = if i < j {
                        self.degeneracy(j - 1, n - 1, &self.face(i, n, v))
                    } else if i == j || i == j + 1 {
                        v.clone()
                    } else {
                        self.degeneracy(j, n - 1, &self.face(i - 1, n, v))
                    };
                    if lhs != rhs {
                        return Some(format!("d_{i} s_{j} fails on {} in degree {n}: {} vs {}", show(v), show(&lhs), show(&rhs)));
                    }
                }
                if n + 1 < top {
                    for i in 0..=j {
                        let lhs = self.degeneracy(i, n + 1, &s);
                        let rhs = self.degeneracy(j + 1, n + 1, &self.degeneracy(i, n, v));
                        if lhs != rhs {
                            return Some(format!("s_{i} s_{j} != s_{} s_{i} on {} in degree {n}", j + 1, show(v)));
                        }
                    }
                }
            }
        }
        None
    }

    /// Every generator once, then `samples` random pairs in random degrees.
    pub fn sample_identity_check(&self, samples: usize, seed: u64) -> Record {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let instance = format!("loop group of {}", self.label);
        let top = self.top_degree();
        let mut witness = None;
        'gens: for n in 0..=top {
            for k in 0..self.generators[n].len() {
                let g = GroupWord::generator(k);
                if let Some(w) = self.check_pair(n, &g, &g) {
                    witness = Some(format!("{w} (generator {})", self.generator_label(n, k)));
                    break 'gens;
                }
            }
        }
        if witness.is_none() {
            for _ in 0..samples {
                let n = rng.gen_range(0..=top);
                let v = self.random_word(n, 6, &mut rng);
                let w = self.random_word(n, 6, &mut rng);
                if let Some(found) = self.check_pair(n, &v, &w) {
                    witness = Some(found);
                    break;
                }
            }
        }
        let mut rec = Record::new("kan loop group identities", &instance, top, Status::Pass);
        rec.note = Some(format!("{KAN_FORMULAS}; connectivity of L not certified"));
        if let Some(w) = witness {
            rec.status = Status::Fail;
            rec.witness = Some(w);
        }
        rec
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::build::{minimal_sphere, point, simplicial_circle};

    #[test]
    fn word_basics() {
        let a = GroupWord::generator(0);
        let b = GroupWord::generator(1);
        assert!(a.multiply(&a.invert()).is_identity());
        assert_eq!(a.multiply(&b).invert(), b.invert().multiply(&a.invert()));
        let w = GroupWord::parse("g1 g2 g2^-1 g1").unwrap();
        assert_eq!(w.to_string(), "g1 g1");
        assert_eq!(GroupWord::identity().to_string(), "1");
        assert!(GroupWord::parse("h1").is_err());
    }

    #[test]
    fn generator_counts() {
        let s2 = Arc::new(minimal_sphere(2, 4).unwrap());
        let g = kan_loop_group(s2).unwrap();
        assert_eq!(g.generators(0).len(), 0);
        assert_eq!(g.generators(1).len(), 1);
        let c = kan_loop_group(Arc::new(simplicial_circle(3))).unwrap();
        assert_eq!(c.generators(0).len(), 1);
        let p = kan_loop_group(Arc::new(point(3))).unwrap();
        assert!((0..3).all(|n| p.generators(n).is_empty()));
    }

    #[test]
    fn unreduced_bases_are_rejected() {
        let i = crate::sset::build::std_simplex(1, 2).unwrap();
        assert_eq!(kan_loop_group(Arc::new(i)).unwrap_err(), LoopGroupError::NotReduced(2));
    }
}
