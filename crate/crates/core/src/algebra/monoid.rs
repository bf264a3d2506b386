use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

/// One failed axiom together with the tuple that breaks it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: String,
    pub witness: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at ({}): {} != {}",
            self.axiom,
            self.witness.join(", "),
            self.lhs,
            self.rhs
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0}")]
    Axiom(AxiomViolation),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("{0}")]
    Malformed(String),
}

impl AlgebraError {
    pub fn violation(&self) -> Option<&AxiomViolation> {
        match self {
            AlgebraError::Axiom(v) => Some(v),
            _ => None,
        }
    }
}

pub(crate) fn violation(
    axiom: &str,
    witness: &[&str],
    lhs: &str,
    rhs: &str,
) -> AlgebraError {
    AlgebraError::Axiom(AxiomViolation {
        axiom: axiom.to_string(),
        witness: witness.iter().map(|s| s.to_string()).collect(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

/// A finite set of named elements, optionally pointed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSet {
    names: Vec<String>,
    index: HashMap<String, usize>,
    base: Option<usize>,
}

impl FiniteSet {
    pub fn new<S: AsRef<str>>(names: &[S], base: Option<&str>) -> Result<Self, AlgebraError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (k, n) in names.iter().enumerate() {
            if index.insert(n.clone(), k).is_some() {
                return Err(AlgebraError::Malformed(format!("element `{n}` listed twice")));
            }
        }
        let base = match base {
            Some(b) => Some(
                *index
                    .get(b)
                    .ok_or_else(|| AlgebraError::UnknownElement(b.to_string()))?,
            ),
            None => None,
        };
        Ok(FiniteSet { names, index, base })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn base(&self) -> Option<usize> {
        self.base
    }

    pub fn with_base(&self, base: Option<usize>) -> FiniteSet {
        FiniteSet {
            base,
            ..self.clone()
        }
    }
}

/// A finite monoid given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteMonoid {
    name: String,
    set: FiniteSet,
    unit: usize,
    table: Vec<usize>,
}

impl DiscreteMonoid {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size() + b]
    }

    /// Ordered product of a sequence; the unit for an empty one.
    pub fn product<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter().fold(self.unit, |acc, x| self.mul(acc, x))
    }

    pub fn elem_name(&self, a: usize) -> &str {
        self.set.name(a)
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.set.index(name)
    }

    /// Underlying set, pointed at the unit.
    pub fn as_set(&self) -> &FiniteSet {
        &self.set
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.elements()
            .find(|&b| self.mul(a, b) == self.unit && self.mul(b, a) == self.unit)
    }

    pub fn is_group(&self) -> bool {
        self.elements().all(|a| self.inverse(a).is_some())
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .tuple_combinations()
            .all(|(a, b)| self.mul(a, b) == self.mul(b, a))
    }

    /// First pair that does not commute.
    pub fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        self.elements()
            .tuple_combinations()
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    /// Number of conjugacy classes (for groups), by brute force.
    pub fn conjugacy_classes(&self) -> Option<usize> {
        if !self.is_group() {
            return None;
        }
        let mut seen = vec![false; self.size()];
        let mut count = 0;
        for x in self.elements() {
            if seen[x] {
                continue;
            }
            count += 1;
            for g in self.elements() {
                let gi = self.inverse(g).unwrap();
                seen[self.mul(self.mul(g, x), gi)] = true;
            }
        }
        Some(count)
    }
}

impl fmt::Display for DiscreteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.size())
    }
}

/// Validate a multiplication table given as `(a, b, a*b)` entries.
pub fn monoid_from_table<S: AsRef<str>>(
    name: &str,
    roster: &[S],
    unit: &str,
    entries: &[(S, S, S)],
) -> Result<DiscreteMonoid, AlgebraError> {
    let set = FiniteSet::new(roster, Some(unit))?;
    let n = set.len();
    let mut table = vec![usize::MAX; n * n];
    let look = |s: &S| {
        set.index(s.as_ref())
            .ok_or_else(|| AlgebraError::UnknownElement(s.as_ref().to_string()))
    };
    for (a, b, c) in entries {
        let (a, b, c) = (look(a)?, look(b)?, look(c)?);
        let slot = &mut table[a * n + b];
        if *slot != usize::MAX && *slot != c {
            return Err(AlgebraError::Malformed(format!(
                "product {}*{} given twice",
                set.name(a),
                set.name(b)
            )));
        }
        *slot = c;
    }
    monoid_from_fn(name, set, |a, b| table[a * n + b])
}

/// Validate a multiplication given as a function on indices. The set must be
/// pointed at the unit.
pub fn monoid_from_fn<F>(name: &str, set: FiniteSet, mul: F) -> Result<DiscreteMonoid, AlgebraError>
where
    F: Fn(usize, usize) -> usize,
{
    let n = set.len();
    let unit = set
        .base()
        .ok_or_else(|| AlgebraError::Malformed("monoid needs a unit".into()))?;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let c = mul(a, b);
            if c >= n {
                return Err(AlgebraError::Malformed(format!(
                    "product {}*{} is missing",
                    set.name(a),
                    set.name(b)
                )));
            }
            table.push(c);
        }
    }
    let m = DiscreteMonoid {
        name: name.to_string(),
        set,
        unit,
        table,
    };
    let nm = |x: usize| m.elem_name(x).to_string();
    for a in m.elements() {
        if m.mul(m.unit, a) != a {
            return Err(violation("left unit", &[&nm(a)], &nm(m.mul(m.unit, a)), &nm(a)));
        }
        if m.mul(a, m.unit) != a {
            return Err(violation("right unit", &[&nm(a)], &nm(m.mul(a, m.unit)), &nm(a)));
        }
    }
    for a in m.elements() {
        for b in m.elements() {
            let ab = m.mul(a, b);
            for c in m.elements() {
                let lhs = m.mul(ab, c);
                let rhs = m.mul(a, m.mul(b, c));
                if lhs != rhs {
                    return Err(violation(
                        "associativity",
                        &[&nm(a), &nm(b), &nm(c)],
                        &nm(lhs),
                        &nm(rhs),
                    ));
                }
            }
        }
    }
    Ok(m)
}

/// `Z/n`, written additively with elements `0..n-1`.
pub fn cyclic(n: usize) -> DiscreteMonoid {
    assert!(n >= 1, "cyclic group of order 0");
    let names: Vec<String> = (0..n).map(|k| k.to_string()).collect();
    let set = FiniteSet::new(&names, Some("0")).unwrap();
    monoid_from_fn(&format!("Z{n}"), set, |a, b| (a + b) % n).unwrap()
}

/// Symmetric group on `n` letters; elements in one-line notation, `(st)(i) = s(t(i))`.
pub fn symmetric(n: usize) -> DiscreteMonoid {
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let names: Vec<String> = perms.iter().map(|p| p.iter().join("")).collect();
    let pos: HashMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
    let id: String = (0..n).join("");
    let set = FiniteSet::new(&names, Some(id.as_str())).unwrap();
    monoid_from_fn(&format!("S{n}"), set, |a, b| {
        let c: Vec<usize> = (0..n).map(|i| perms[a][perms[b][i]]).collect();
        pos[&c]
    })
    .unwrap()
}

pub fn trivial() -> DiscreteMonoid {
    let set = FiniteSet::new(&["1"], Some("1")).unwrap();
    monoid_from_fn("*", set, |_, _| 0).unwrap()
}

/// `{1, x, 0}` with `x*x = 0` and `0` absorbing.
pub fn with_zero() -> DiscreteMonoid {
    monoid_from_table(
        "Mzero",
        &["1", "x", "0"],
        "1",
        &[
            ("1", "1", "1"),
            ("1", "x", "x"),
            ("1", "0", "0"),
            ("x", "1", "x"),
            ("x", "x", "0"),
            ("x", "0", "0"),
            ("0", "1", "0"),
            ("0", "x", "0"),
            ("0", "0", "0"),
        ],
    )
    .unwrap()
}

/// Submonoid on the named elements, with the induced multiplication.
pub fn submonoid(m: &DiscreteMonoid, elems: &[&str]) -> Result<(DiscreteMonoid, Vec<usize>), AlgebraError> {
    let idx: Vec<usize> = elems
        .iter()
        .map(|e| m.index(e).ok_or_else(|| AlgebraError::UnknownElement(e.to_string())))
        .collect::<Result<_, _>>()?;
    if !idx.contains(&m.unit()) {
        return Err(AlgebraError::Malformed(format!(
            "submonoid must contain the unit `{}`",
            m.elem_name(m.unit())
        )));
    }
    let pos: HashMap<usize, usize> = idx.iter().enumerate().map(|(k, &a)| (a, k)).collect();
    for &a in &idx {
        for &b in &idx {
            if !pos.contains_key(&m.mul(a, b)) {
                return Err(AlgebraError::Malformed(format!(
                    "subset is not closed: {}*{} = {}",
                    m.elem_name(a),
                    m.elem_name(b),
                    m.elem_name(m.mul(a, b))
                )));
            }
        }
    }
    let set = FiniteSet::new(elems, Some(m.elem_name(m.unit())))?;
    let sub = monoid_from_fn(&format!("{}sub", m.name()), set, |a, b| pos[&m.mul(idx[a], idx[b])])?;
    Ok((sub, idx))
}

/// A homomorphism of finite monoids.
#[derive(Clone, Debug)]
pub struct MonoidMap {
    pub source: Arc<DiscreteMonoid>,
    pub target: Arc<DiscreteMonoid>,
    pub map: Vec<usize>,
}

impl MonoidMap {
    pub fn new(
        source: Arc<DiscreteMonoid>,
        target: Arc<DiscreteMonoid>,
        map: Vec<usize>,
    ) -> Result<Self, AlgebraError> {
        if map.len() != source.size() || map.iter().any(|&y| y >= target.size()) {
            return Err(AlgebraError::Malformed("map table has the wrong shape".into()));
        }
        let f = MonoidMap { source, target, map };
        let (s, t) = (&f.source, &f.target);
        if f.map[s.unit()] != t.unit() {
            return Err(violation(
                "unit preservation",
                &[s.elem_name(s.unit())],
                t.elem_name(f.map[s.unit()]),
                t.elem_name(t.unit()),
            ));
        }
        for a in s.elements() {
            for b in s.elements() {
                let lhs = f.map[s.mul(a, b)];
                let rhs = t.mul(f.map[a], f.map[b]);
                if lhs != rhs {
                    return Err(violation(
                        "multiplicativity",
                        &[s.elem_name(a), s.elem_name(b)],
                        t.elem_name(lhs),
                        t.elem_name(rhs),
                    ));
                }
            }
        }
        Ok(f)
    }

    pub fn identity(m: Arc<DiscreteMonoid>) -> Self {
        let map = m.elements().collect();
        MonoidMap {
            source: m.clone(),
            target: m,
            map,
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_monoids() {
        assert_eq!(cyclic(4).size(), 4);
        assert!(cyclic(3).is_group());
        let s3 = symmetric(3);
        assert_eq!(s3.size(), 6);
        assert!(s3.noncommuting_pair().is_some());
        assert_eq!(s3.conjugacy_classes(), Some(3));
        assert_eq!(cyclic(4).conjugacy_classes(), Some(4));
        let z = with_zero();
        assert!(!z.is_group());
        assert_eq!(z.conjugacy_classes(), None);
    }

    #[test]
    fn nonassociative_table_reports_triple() {
        // a*a = b, a*b = a, b*a = b, b*b = b with unit e
        let err = monoid_from_table(
            "bad",
            &["e", "a", "b"],
            "e",
            &[
                ("e", "e", "e"),
                ("e", "a", "a"),
                ("e", "b", "b"),
                ("a", "e", "a"),
                ("b", "e", "b"),
                ("a", "a", "b"),
                ("a", "b", "a"),
                ("b", "a", "b"),
                ("b", "b", "b"),
            ],
        )
        .unwrap_err();
        let v = err.violation().unwrap();
        assert_eq!(v.axiom, "associativity");
        assert_eq!(v.witness.len(), 3);
    }

    #[test]
    fn missing_entry_is_rejected() {
        let err = monoid_from_table("m", &["e", "a"], "e", &[("e", "e", "e")]).unwrap_err();
        assert!(matches!(err, AlgebraError::Malformed(_)));
    }

    #[test]
    fn submonoid_of_zero_monoid() {
        let (a, idx) = submonoid(&with_zero(), &["1", "0"]).unwrap();
        assert_eq!(a.size(), 2);
        assert_eq!(idx, vec![0, 2]);
        assert!(submonoid(&with_zero(), &["1", "x"]).is_err());
    }

    #[test]
    fn inclusion_z2_z4() {
        let f = MonoidMap::new(Arc::new(cyclic(2)), Arc::new(cyclic(4)), vec![0, 2]).unwrap();
        assert_eq!(f.apply(1), 2);
        assert!(MonoidMap::new(Arc::new(cyclic(2)), Arc::new(cyclic(4)), vec![0, 1]).is_err());
    }
}
