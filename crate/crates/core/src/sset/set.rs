use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use super::simplex::{DegeneracyWord, Simplex, SimplexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SsetError {
    #[error("requested degree {requested} exceeds truncation {truncation}")]
    BeyondTruncation { requested: usize, truncation: usize },
    #[error("duplicate simplex id `{0}`")]
    DuplicateId(String),
    #[error("unknown simplex id `{0}`")]
    UnknownId(String),
    #[error("simplex `{id}` of degree {degree} needs {expected} faces, got {got}")]
    FaceCount {
        id: String,
        degree: usize,
        expected: usize,
        got: usize,
    },
    #[error("face {index} of `{id}` has degree {got}, expected {expected}")]
    FaceDegree {
        id: String,
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("degeneracy s_{index} is undefined on a simplex of degree {degree}")]
    BadDegeneracy { index: usize, degree: usize },
    #[error("subset is not closed under faces: face {index} of `{id}` leaves it")]
    NotClosed { id: String, index: usize },
    #[error("map is not injective in degree {degree}: `{a}` and `{b}` share an image")]
    NotInjective { degree: usize, a: String, b: String },
    #[error("{0} has no basepoint")]
    Unpointed(String),
    #[error("element label `{0}` is used twice")]
    DuplicateLabel(String),
    #[error("construction exceeds the simplex cap of {cap} in degree {degree}")]
    CapExceeded { cap: usize, degree: usize },
    #[error("{0}")]
    Invalid(String),
}

/// A degreewise finite simplicial set, known up to an explicit truncation level.
///
/// Only nondegenerate simplices are stored. Faces and degeneracies of degenerate
/// simplices are computed by rewriting with the simplicial identities. When the
/// set is pointed, the basepoint is the first vertex of the degree-0 roster.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSet {
    truncation: usize,
    names: Vec<String>,
    dims: Vec<usize>,
    rosters: Vec<Vec<SimplexId>>,
    faces: Vec<Vec<Simplex>>,
    pointed: bool,
    lookup: HashMap<String, SimplexId>,
}

impl SimplicialSet {
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed && !self.rosters[0].is_empty()
    }

    pub fn basepoint(&self) -> Option<SimplexId> {
        if self.is_pointed() {
            Some(self.rosters[0][0])
        } else {
            None
        }
    }

    /// Fully degenerate basepoint in degree `n`.
    pub fn basepoint_in(&self, n: usize) -> Option<Simplex> {
        self.basepoint().map(|b| Simplex {
            id: b,
            word: DegeneracyWord::from_index_set((0..n).collect()),
        })
    }

    pub fn roster(&self, n: usize) -> &[SimplexId] {
        self.rosters.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn nondegenerate_counts(&self) -> Vec<usize> {
        self.rosters.iter().map(Vec::len).collect()
    }

    /// Highest degree with a nondegenerate simplex.
    pub fn top_degree(&self) -> Option<usize> {
        self.rosters.iter().rposition(|r| !r.is_empty())
    }

    pub fn name(&self, id: SimplexId) -> &str {
        &self.names[id.index()]
    }

    pub fn dim(&self, id: SimplexId) -> usize {
        self.dims[id.index()]
    }

    pub fn id(&self, name: &str) -> Option<SimplexId> {
        self.lookup.get(name).copied()
    }

    pub fn simplex_count(&self) -> usize {
        self.names.len()
    }

    pub fn degree(&self, s: &Simplex) -> usize {
        self.dim(s.id) + s.word.len()
    }

    /// The stored faces of a nondegenerate simplex.
    pub fn nondegenerate_faces(&self, id: SimplexId) -> &[Simplex] {
        &self.faces[id.index()]
    }

    pub fn face(&self, i: usize, s: &Simplex) -> Simplex {
        let (outer, rest) = s.word.push_face(i);
        match rest {
            None => Simplex {
                id: s.id,
                word: outer,
            },
            Some(k) => self.faces[s.id.index()][k].with_outer(&outer),
        }
    }

    pub fn degeneracy(&self, j: usize, s: &Simplex) -> Simplex {
        s.degenerate(j)
    }

    /// Every simplex of degree `n`, degenerate ones included.
    pub fn simplices(&self, n: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        for m in 0..=n.min(self.rosters.len().saturating_sub(1)) {
            for combo in (0..n).combinations(n - m) {
                let word = DegeneracyWord::from_index_set(combo);
                for &id in &self.rosters[m] {
                    out.push(Simplex {
                        id,
                        word: word.clone(),
                    });
                }
            }
        }
        out
    }

    pub fn label(&self, s: &Simplex) -> String {
        if s.word.is_empty() {
            self.name(s.id).to_string()
        } else {
            let ops: String = s.word.indices().iter().map(|j| format!("s{j}")).collect();
            format!("{ops}({})", self.name(s.id))
        }
    }

    /// Drop every nondegenerate simplex above degree `k`, keeping the truncation level.
    pub fn skeleton(&self, k: usize) -> SimplicialSet {
        let mut b = SimplicialSetBuilder::new(self.truncation);
        b.pointed = self.pointed;
        let mut remap = HashMap::new();
        for n in 0..=k.min(self.rosters.len() - 1) {
            for &id in &self.rosters[n] {
                let faces = self.faces[id.index()]
                    .iter()
                    .map(|f| Simplex {
                        id: remap[&f.id],
                        word: f.word.clone(),
                    })
                    .collect();
                let new = b.add(self.name(id), n, faces).expect("skeleton of a valid set");
                remap.insert(id, new);
            }
        }
        b.build()
    }

    /// Reinterpret the rosters with a new truncation level, dropping anything above it.
    pub fn retruncate(&self, n: usize) -> SimplicialSet {
        let mut s = if n < self.truncation {
            self.skeleton(n)
        } else {
            self.clone()
        };
        s.truncation = n;
        s.rosters.resize(n + 1, Vec::new());
        s
    }

    /// Move a vertex to the front of the degree-0 roster and mark the set pointed.
    pub fn with_basepoint(&self, v: SimplexId) -> Result<SimplicialSet, SsetError> {
        if self.dim(v) != 0 {
            return Err(SsetError::Invalid(format!(
                "basepoint `{}` is not a vertex",
                self.name(v)
            )));
        }
        let mut s = self.clone();
        let pos = s.rosters[0].iter().position(|&x| x == v).unwrap();
        let b = s.rosters[0].remove(pos);
        s.rosters[0].insert(0, b);
        s.pointed = true;
        Ok(s)
    }

    pub fn unpointed(&self) -> SimplicialSet {
        let mut s = self.clone();
        s.pointed = false;
        s
    }

    pub(crate) fn into_parts(self) -> SimplicialSetBuilder {
        SimplicialSetBuilder {
            truncation: self.truncation,
            names: self.names,
            dims: self.dims,
            rosters: self.rosters,
            faces: self.faces,
            pointed: self.pointed,
            lookup: self.lookup,
        }
    }
}

impl fmt::Display for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sset(N={}, nondegenerate={:?})",
            self.truncation,
            self.nondegenerate_counts()
        )
    }
}

/// Incremental construction of a [`SimplicialSet`], lowest degrees first.
#[derive(Clone, Debug)]
pub struct SimplicialSetBuilder {
    truncation: usize,
    names: Vec<String>,
    dims: Vec<usize>,
    rosters: Vec<Vec<SimplexId>>,
    faces: Vec<Vec<Simplex>>,
    pub(crate) pointed: bool,
    lookup: HashMap<String, SimplexId>,
}

impl SimplicialSetBuilder {
    pub fn new(truncation: usize) -> Self {
        SimplicialSetBuilder {
            truncation,
            names: Vec::new(),
            dims: Vec::new(),
            rosters: vec![Vec::new(); truncation + 1],
            faces: Vec::new(),
            pointed: false,
            lookup: HashMap::new(),
        }
    }

    pub fn pointed(mut self) -> Self {
        self.pointed = true;
        self
    }

    pub fn set_pointed(&mut self, pointed: bool) {
        self.pointed = pointed;
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn id(&self, name: &str) -> Option<SimplexId> {
        self.lookup.get(name).copied()
    }

    pub fn dim(&self, id: SimplexId) -> usize {
        self.dims[id.index()]
    }

    pub fn vertex(&mut self, name: &str) -> Result<SimplexId, SsetError> {
        self.add(name, 0, Vec::new())
    }

    /// Add a nondegenerate simplex. Simplices above the truncation level are
    /// rejected; callers that clamp should check [`Self::truncation`] first.
    pub fn add(
        &mut self,
        name: &str,
        degree: usize,
        faces: Vec<Simplex>,
    ) -> Result<SimplexId, SsetError> {
        if degree > self.truncation {
            return Err(SsetError::BeyondTruncation {
                requested: degree,
                truncation: self.truncation,
            });
        }
        if self.lookup.contains_key(name) {
            return Err(SsetError::DuplicateId(name.to_string()));
        }
        let expected = if degree == 0 { 0 } else { degree + 1 };
        if faces.len() != expected {
            return Err(SsetError::FaceCount {
                id: name.to_string(),
                degree,
                expected,
                got: faces.len(),
            });
        }
        for (index, f) in faces.iter().enumerate() {
            let Some(&d) = self.dims.get(f.id.index()) else {
                return Err(SsetError::UnknownId(format!("#{}", f.id.0)));
            };
            let got = d + f.word.len();
            if got + 1 != degree {
                return Err(SsetError::FaceDegree {
                    id: name.to_string(),
                    index,
                    expected: degree - 1,
                    got,
                });
            }
            if let Some(&j) = f.word.indices().first() {
                if j >= got {
                    return Err(SsetError::BadDegeneracy {
                        index: j,
                        degree: got - 1,
                    });
                }
            }
        }
        let id = SimplexId(self.names.len() as u32);
        self.names.push(name.to_string());
        self.dims.push(degree);
        self.faces.push(faces);
        self.rosters[degree].push(id);
        self.lookup.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn build(self) -> SimplicialSet {
        SimplicialSet {
            truncation: self.truncation,
            names: self.names,
            dims: self.dims,
            rosters: self.rosters,
            faces: self.faces,
            pointed: self.pointed,
            lookup: self.lookup,
        }
    }

    /// Overwrite a stored face. Only meant for building deliberately broken
    /// fixtures, so no identities are checked.
    pub fn replace_face(&mut self, id: SimplexId, index: usize, face: Simplex) {
        self.faces[id.index()][index] = face;
    }
}

impl SimplicialSet {
    /// Return a copy with one stored face replaced (no checks).
    pub fn with_replaced_face(&self, id: SimplexId, index: usize, face: Simplex) -> SimplicialSet {
        let mut b = self.clone().into_parts();
        b.replace_face(id, index, face);
        b.build()
    }
}
