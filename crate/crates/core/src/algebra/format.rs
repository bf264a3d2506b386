//! One-line text forms:
//!
//! ```text
//! monoid Mzero: elems 1,x,0; unit 1; mul x*x=0 x*0=0 0*x=0 0*0=0
//! set X: elems +,a,b; base +
//! action Z2 on X: left 1.a=b 1.b=a; right trivial
//! ```
//!
//! Products with the unit may be omitted. Entries are separated by spaces or
//! commas; a side given as `trivial` fixes everything.

use std::fmt::Write as _;
use std::sync::Arc;

use super::{check_action, monoid_from_table, AlgebraError, DiscreteMonoid, FiniteSet, TwoSidedAction};

fn malformed(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Malformed(msg.into())
}

/// Split `<keyword> <head>: <clauses>` into the head and the `;`-separated clauses.
fn header<'a>(line: &'a str, keyword: &str) -> Result<(&'a str, Vec<&'a str>), AlgebraError> {
    let rest = line
        .trim()
        .strip_prefix(keyword)
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| malformed(format!("expected `{keyword} ...`")))?;
    let (head, body) = rest
        .split_once(':')
        .ok_or_else(|| malformed(format!("`{keyword}` line needs a `:`")))?;
    Ok((head.trim(), body.split(';').map(str::trim).filter(|c| !c.is_empty()).collect()))
}

fn clause(c: &str) -> (&str, &str) {
    match c.split_once(char::is_whitespace) {
        Some((k, v)) => (k, v.trim()),
        None => (c, ""),
    }
}

fn items(v: &str) -> impl Iterator<Item = &str> {
    v.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty())
}

fn check_name(name: &str) -> Result<(), AlgebraError> {
    if name.is_empty() || name.chars().any(|c| c.is_whitespace() || ",;:".contains(c)) {
        return Err(malformed(format!("bad name `{name}`")));
    }
    Ok(())
}

pub fn parse_monoid(line: &str) -> Result<DiscreteMonoid, AlgebraError> {
    let (name, clauses) = header(line, "monoid")?;
    check_name(name)?;
    let mut elems: Option<Vec<String>> = None;
    let mut unit = None;
    let mut entries = Vec::new();
    for c in clauses {
        match clause(c) {
            ("elems", v) => elems = Some(items(v).map(String::from).collect()),
            ("unit", v) => unit = Some(v.to_string()),
            ("mul", v) => {
                for e in items(v) {
                    let (ab, c) = e.split_once('=').ok_or_else(|| malformed(format!("`{e}` is not `a*b=c`")))?;
                    let (a, b) = ab.split_once('*').ok_or_else(|| malformed(format!("`{e}` is not `a*b=c`")))?;
                    entries.push((a.to_string(), b.to_string(), c.to_string()));
                }
            }
            (k, _) => return Err(malformed(format!("unknown monoid clause `{k}`"))),
        }
    }
    let elems = elems.ok_or_else(|| malformed("monoid needs `elems`"))?;
    let unit = unit.ok_or_else(|| malformed("monoid needs `unit`"))?;
    if !elems.contains(&unit) {
        return Err(AlgebraError::UnknownElement(unit));
    }
    for x in &elems {
        entries.push((unit.clone(), x.clone(), x.clone()));
        entries.push((x.clone(), unit.clone(), x.clone()));
    }
    monoid_from_table(name, &elems, &unit, &entries)
}

/// The full table, one entry per non-unit pair.
pub fn monoid_to_text(m: &DiscreteMonoid) -> String {
    let names = m.as_set().names().join(",");
    let mut out = format!("monoid {}: elems {names}; unit {}; mul", m.name(), m.elem_name(m.unit()));
    for a in m.elements().filter(|&a| a != m.unit()) {
        for b in m.elements().filter(|&b| b != m.unit()) {
            write!(out, " {}*{}={}", m.elem_name(a), m.elem_name(b), m.elem_name(m.mul(a, b))).unwrap();
        }
    }
    out
}

pub fn parse_set(line: &str) -> Result<(String, FiniteSet), AlgebraError> {
    let (name, clauses) = header(line, "set")?;
    check_name(name)?;
    let mut elems = None;
    let mut base = None;
    for c in clauses {
        match clause(c) {
            ("elems", v) => elems = Some(items(v).map(String::from).collect::<Vec<_>>()),
            ("base", v) => base = Some(v.to_string()),
            (k, _) => return Err(malformed(format!("unknown set clause `{k}`"))),
        }
    }
    let elems = elems.ok_or_else(|| malformed("set needs `elems`"))?;
    Ok((name.to_string(), FiniteSet::new(&elems, base.as_deref())?))
}

/// Parse an action line; `monoid` and `set` resolve the names after
/// `action` and `on`.
pub fn parse_action<M, S>(line: &str, monoid: M, set: S) -> Result<TwoSidedAction, AlgebraError>
where
    M: Fn(&str) -> Option<Arc<DiscreteMonoid>>,
    S: Fn(&str) -> Option<Arc<FiniteSet>>,
{
    let (head, clauses) = header(line, "action")?;
    let (g, x) = head
        .split_once(" on ")
        .ok_or_else(|| malformed("expected `action <monoid> on <set>`"))?;
    let (g, x) = (g.trim(), x.trim());
    let g = monoid(g).ok_or_else(|| malformed(format!("undefined monoid `{g}`")))?;
    let x = set(x).ok_or_else(|| malformed(format!("undefined set `{x}`")))?;
    let (ng, nx) = (g.size(), x.len());
    let mut left: Vec<Option<usize>> = vec![None; ng * nx];
    let mut right: Vec<Option<usize>> = vec![None; ng * nx];
    let gi = |s: &str| g.index(s).ok_or_else(|| AlgebraError::UnknownElement(s.to_string()));
    let xi = |s: &str| x.index(s).ok_or_else(|| AlgebraError::UnknownElement(s.to_string()));
    for a in 0..nx {
        left[g.unit() * nx + a] = Some(a);
        right[a * ng + g.unit()] = Some(a);
    }
    for c in clauses {
        let (side, v) = clause(c);
        let table = match side {
            "left" => &mut left,
            "right" => &mut right,
            k => return Err(malformed(format!("unknown action clause `{k}`"))),
        };
        if v == "trivial" {
            for a in 0..ng {
                for p in 0..nx {
                    let k = if side == "left" { a * nx + p } else { p * ng + a };
                    table[k] = Some(p);
                }
            }
            continue;
        }
        for e in items(v) {
            let (lhs, y) = e.split_once('=').ok_or_else(|| malformed(format!("`{e}` is not `a.b=c`")))?;
            let (p, q) = lhs.split_once('.').ok_or_else(|| malformed(format!("`{e}` is not `a.b=c`")))?;
            let k = if side == "left" {
                gi(p)? * nx + xi(q)?
            } else {
                xi(p)? * ng + gi(q)?
            };
            table[k] = Some(xi(y)?);
        }
    }
    check_action(
        g,
        x,
        |a, p| left[a * nx + p].unwrap_or(usize::MAX),
        |p, a| right[p * ng + a].unwrap_or(usize::MAX),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{symmetric, with_zero};

    #[test]
    fn round_trip() {
        for m in [with_zero(), symmetric(3)] {
            let text = monoid_to_text(&m);
            let back = parse_monoid(&text).unwrap();
            assert_eq!(monoid_to_text(&back), text);
        }
    }

    #[test]
    fn zero_monoid_text() {
        let m = parse_monoid("monoid Mzero: elems 1,x,0; unit 1; mul x*x=0 x*0=0 0*x=0 0*0=0").unwrap();
        assert_eq!(m.size(), 3);
        assert!(!m.is_group());
    }

    #[test]
    fn rejects_bad_tables() {
        let err = parse_monoid("monoid B: elems 1,a,b; unit 1; mul a*a=b a*b=a b*a=a b*b=a").unwrap_err();
        assert!(err.violation().is_some());
        assert!(parse_monoid("monoid B: elems 1,a; unit 1").is_err());
    }

    #[test]
    fn swap_action() {
        let z2 = Arc::new(parse_monoid("monoid Z2: elems e,t; unit e; mul t*t=e").unwrap());
        let (_, x) = parse_set("set X: elems a,b").unwrap();
        let x = Arc::new(x);
        let act = parse_action(
            "action Z2 on X: left t.a=b t.b=a; right trivial",
            |n| (n == "Z2").then(|| z2.clone()),
            |n| (n == "X").then(|| x.clone()),
        )
        .unwrap();
        assert_eq!(act.left(1, 0), 1);
        assert_eq!(act.right(0, 1), 0);
        let missing = parse_action(
            "action Z2 on X: left t.a=b; right trivial",
            |_| Some(z2.clone()),
            |_| Some(x.clone()),
        );
        assert!(missing.is_err());
    }
}
