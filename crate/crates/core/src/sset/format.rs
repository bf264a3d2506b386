//! Line-oriented text format for simplicial sets.
//!
//! ```text
//! sset N=2
//! deg 0: *
//! deg 1: e
//! deg 2:
//! d 0 e = |*
//! d 1 e = |*
//! ```
//!
//! Degree-0 rosters list the basepoint first. Face lines appear in roster
//! order, each giving a decreasing degeneracy word and a nondegenerate id.

use std::fmt::Write as _;

use thiserror::Error;

use super::set::{SimplicialSet, SimplicialSetBuilder, SsetError};
use super::simplex::{DegeneracyWord, Simplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Structure { line: usize, source: SsetError },
    #[error("id `{0}` cannot be written: it contains whitespace or one of , | : =")]
    UnwritableId(String),
}

fn writable(id: &str) -> bool {
    !id.is_empty() && !id.chars().any(|c| c.is_whitespace() || ",|:=".contains(c))
}

pub fn to_text(x: &SimplicialSet) -> Result<String, FormatError> {
    let mut out = String::new();
    writeln!(out, "sset N={}", x.truncation()).unwrap();
    for n in 0..=x.truncation() {
        let names: Vec<&str> = x.roster(n).iter().map(|&id| x.name(id)).collect();
        if let Some(bad) = names.iter().find(|s| !writable(s)) {
            return Err(FormatError::UnwritableId(bad.to_string()));
        }
        if names.is_empty() {
            writeln!(out, "deg {n}:").unwrap();
        } else {
            writeln!(out, "deg {n}: {}", names.join(",")).unwrap();
        }
    }
    for n in 1..=x.truncation() {
        for &id in x.roster(n) {
            for (i, f) in x.nondegenerate_faces(id).iter().enumerate() {
                writeln!(out, "d {i} {} = {}|{}", x.name(id), f.word, x.name(f.id)).unwrap();
            }
        }
    }
    Ok(out)
}

/// Parse the text format. Degree-0 rosters are taken as pointed at their first entry.
pub fn from_text(text: &str) -> Result<SimplicialSet, FormatError> {
    let syntax = |line: usize, msg: &str| FormatError::Syntax {
        line,
        msg: msg.to_string(),
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
    let trunc: usize = header
        .strip_prefix("sset N=")
        .and_then(|t| t.trim().parse().ok())
        .ok_or_else(|| syntax(hl, "expected header `sset N=<trunc>`"))?;
    let mut rosters: Vec<Vec<String>> = vec![Vec::new(); trunc + 1];
    let mut faces: std::collections::HashMap<String, Vec<Option<(DegeneracyWord, String)>>> =
        Default::default();
    let mut face_lines: std::collections::HashMap<String, usize> = Default::default();
    for (ln, line) in lines {
        if let Some(rest) = line.strip_prefix("deg ") {
            let (n, ids) = rest.split_once(':').ok_or_else(|| syntax(ln, "missing `:`"))?;
            let n: usize = n.trim().parse().map_err(|_| syntax(ln, "bad degree"))?;
            if n > trunc {
                return Err(syntax(ln, "degree above truncation"));
            }
            rosters[n] = ids
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(String::from)
                .collect();
            for id in &rosters[n] {
                if n > 0 {
                    faces.insert(id.clone(), vec![None; n + 1]);
                }
            }
        } else if let Some(rest) = line.strip_prefix("d ") {
            let (lhs, rhs) = rest.split_once('=').ok_or_else(|| syntax(ln, "missing `=`"))?;
            let mut parts = lhs.split_whitespace();
            let i: usize = parts
                .next()
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| syntax(ln, "bad face index"))?;
            let id = parts.next().ok_or_else(|| syntax(ln, "missing id"))?;
            let (word, target) = rhs
                .trim()
                .split_once('|')
                .ok_or_else(|| syntax(ln, "face must read `<word>|<id>`"))?;
            let indices: Result<Vec<usize>, _> = word
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(str::parse)
                .collect();
            let indices = indices.map_err(|_| syntax(ln, "bad degeneracy word"))?;
            let word = DegeneracyWord::new(indices)
                .map_err(|e| syntax(ln, &e.to_string()))?;
            let slot = faces
                .get_mut(id)
                .ok_or_else(|| syntax(ln, &format!("face line for undeclared id `{id}`")))?;
            let cell = slot
                .get_mut(i)
                .ok_or_else(|| syntax(ln, "face index out of range"))?;
            *cell = Some((word, target.trim().to_string()));
            face_lines.entry(id.to_string()).or_insert(ln);
        } else {
            return Err(syntax(ln, "expected `deg` or `d` line"));
        }
    }
    let mut b = SimplicialSetBuilder::new(trunc).pointed();
    for (n, roster) in rosters.iter().enumerate() {
        for id in roster {
            let ln = face_lines.get(id).copied().unwrap_or(0);
            let fs = if n == 0 {
                Vec::new()
            } else {
                let mut fs = Vec::new();
                for (i, f) in faces[id].iter().enumerate() {
                    let (word, target) = f
                        .clone()
                        .ok_or_else(|| syntax(ln, &format!("`{id}` is missing face {i}")))?;
                    let tid = b.id(&target).ok_or_else(|| FormatError::Structure {
                        line: ln,
                        source: SsetError::UnknownId(target.clone()),
                    })?;
                    fs.push(Simplex { id: tid, word });
                }
                fs
            };
            b.add(id, n, fs)
                .map_err(|source| FormatError::Structure { line: ln, source })?;
        }
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::build::{simplicial_circle, std_simplex};

    #[test]
    fn circle_text() {
        let t = to_text(&simplicial_circle(2)).unwrap();
        assert_eq!(t, "sset N=2\ndeg 0: *\ndeg 1: e\ndeg 2:\nd 0 e = |*\nd 1 e = |*\n");
        let back = from_text(&t).unwrap();
        assert_eq!(to_text(&back).unwrap(), t);
    }

    #[test]
    fn reports_line_numbers() {
        let err = from_text("sset N=1\ndeg 0: a\ndeg 1: e\nd 0 e = |a\nd 1 e = |b\n").unwrap_err();
        assert!(matches!(err, FormatError::Structure { .. }));
        let err = from_text("sset N=1\nbogus\n").unwrap_err();
        assert_eq!(
            err,
            FormatError::Syntax {
                line: 2,
                msg: "expected `deg` or `d` line".into()
            }
        );
    }

    #[test]
    fn simplex_round_trip() {
        let t = to_text(&std_simplex(2, 3).unwrap()).unwrap();
        assert_eq!(to_text(&from_text(&t).unwrap()).unwrap(), t);
    }
}
