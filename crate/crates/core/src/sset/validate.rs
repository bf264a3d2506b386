use super::object::{Identity, Violation};
use super::set::SimplicialSet;
use super::simplex::Simplex;

/// Check `d_i d_j = d_{j-1} d_i` on every nondegenerate simplex, plus closure of
/// the stored face tables. At most one violation is reported per simplex: the
/// first failing pair in the order `(i, j)` with `j` ascending, then `i`. Identities involving degeneracies hold by
/// construction of the canonical rewriting and are not re-enumerated here.
pub fn validate_identities(x: &SimplicialSet) -> Vec<Violation> {
    let mut out = Vec::new();
    for n in 1..=x.truncation() {
        for &id in x.roster(n) {
            let faces = x.nondegenerate_faces(id);
            for (i, f) in faces.iter().enumerate() {
                let bad_id = f.id.index() >= x.simplex_count();
                if bad_id || x.degree(f) + 1 != n {
                    out.push(Violation {
                        identity: Identity::Closure,
                        degree: n,
                        simplex: x.name(id).to_string(),
                        lhs: format!("d{i}"),
                        rhs: if bad_id {
                            "unknown id".into()
                        } else {
                            x.label(f)
                        },
                    });
                }
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for n in 2..=x.truncation() {
        for &id in x.roster(n) {
            let s = Simplex::nondegenerate(id);
            'simplex: for j in 1..=n {
                let dj = x.face(j, &s);
                for i in 0..j {
                    let lhs = x.face(i, &dj);
                    let rhs = x.face(j - 1, &x.face(i, &s));
                    if lhs != rhs {
                        out.push(Violation {
                            identity: Identity::FaceFace { i, j },
                            degree: n,
                            simplex: x.name(id).to_string(),
                            lhs: x.label(&lhs),
                            rhs: x.label(&rhs),
                        });
                        break 'simplex;
                    }
                }
            }
        }
    }
    out
}
