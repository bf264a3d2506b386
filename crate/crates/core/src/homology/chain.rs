use std::fmt;

use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use super::{smith_normal_form, DenseMatrix};
use crate::sset::{SimplicialMap, SimplicialSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("not a chain map: boundaries do not commute in degree {0}")]
    NotAChainMap(usize),
    #[error("boundary of boundary is nonzero in degree {0}")]
    NotAComplex(usize),
    #[error("shape mismatch in degree {0}")]
    Shape(usize),
}

/// Free chain complex in degrees `0..=truncation`. `boundary(n)` maps
/// `C_n -> C_{n-1}` and has `dim(n-1)` rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex<T> {
    dims: Vec<usize>,
    boundaries: Vec<DenseMatrix<T>>,
}

/// `Z^betti ⊕ Z/d_1 ⊕ …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyGroup<T> {
    pub betti: usize,
    pub torsion: Vec<T>,
}

impl<T> HomologyGroup<T> {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl<T: Clone> HomologyGroup<T> {
    pub fn free(betti: usize) -> Self {
        HomologyGroup {
            betti,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(n: T) -> Self {
        HomologyGroup {
            betti: 0,
            torsion: vec![n],
        }
    }
}

impl<T: fmt::Display> fmt::Display for HomologyGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// One line of a homology table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyRow {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<String>,
    /// False in the top degree, where the next boundary is unknown.
    pub reliable: bool,
}

impl HomologyRow {
    pub fn group(&self) -> String {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for HomologyRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{} = {}", self.degree, self.group())?;
        if !self.reliable {
            write!(f, "  (unreliable: at truncation)")?;
        }
        Ok(())
    }
}

/// Homological connectivity, or a lower bound when every reliable degree vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Connectivity {
    Exactly(i64),
    AtLeast(i64),
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connectivity::Exactly(k) => write!(f, "{k}"),
            Connectivity::AtLeast(k) => write!(f, ">= {k}"),
        }
    }
}

impl<T: Integer + Signed + Clone> ChainComplex<T> {
    /// `boundaries[0]` is ignored and replaced by the zero map to nothing.
    pub fn new(dims: Vec<usize>, mut boundaries: Vec<DenseMatrix<T>>) -> Result<Self, HomologyError> {
        if dims.is_empty() || boundaries.len() != dims.len() {
            return Err(HomologyError::Shape(0));
        }
        boundaries[0] = DenseMatrix::zeros(0, dims[0]);
        for n in 1..dims.len() {
            let b = &boundaries[n];
            if b.rows() != dims[n - 1] || b.cols() != dims[n] {
                return Err(HomologyError::Shape(n));
            }
            if n >= 2 && !boundaries[n - 1].mul(b).is_zero() {
                return Err(HomologyError::NotAComplex(n));
            }
        }
        Ok(ChainComplex { dims, boundaries })
    }

    pub fn truncation(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }

    pub fn boundary(&self, n: usize) -> &DenseMatrix<T> {
        &self.boundaries[n]
    }

    /// `H_n`. Only meaningful below the truncation; see [`Self::is_reliable`].
    pub fn homology(&self, n: usize) -> HomologyGroup<T> {
        let rank_out = if n == 0 {
            0
        } else {
            smith_normal_form(&self.boundaries[n]).rank()
        };
        let (rank_in, torsion) = if n < self.truncation() {
            let s = smith_normal_form(&self.boundaries[n + 1]);
            let rank = s.rank();
            (rank, s.factors.into_iter().filter(|d| !d.is_one()).collect())
        } else {
            (0, Vec::new())
        };
        HomologyGroup {
            betti: self.dims[n] - rank_out - rank_in,
            torsion,
        }
    }

    /// Reduced homology: one copy of `Z` removed in degree zero.
    pub fn reduced_homology(&self, n: usize) -> HomologyGroup<T> {
        let mut h = self.homology(n);
        if n == 0 && h.betti > 0 {
            h.betti -= 1;
        }
        h
    }

    pub fn is_reliable(&self, n: usize) -> bool {
        n < self.truncation()
    }

    pub fn table(&self, reduced: bool) -> Vec<HomologyRow>
    where
        T: fmt::Display,
    {
        (0..=self.truncation())
            .map(|n| {
                let h = if reduced {
                    self.reduced_homology(n)
                } else {
                    self.homology(n)
                };
                HomologyRow {
                    degree: n,
                    betti: h.betti,
                    torsion: h.torsion.iter().map(|d| d.to_string()).collect(),
                    reliable: self.is_reliable(n),
                }
            })
            .collect()
    }

    /// Least reliable degree with nonzero (reduced) homology, minus one.
    pub fn connectivity(&self, reduced: bool) -> Connectivity {
        for q in 0..self.truncation() {
            let h = if reduced {
                self.reduced_homology(q)
            } else {
                self.homology(q)
            };
            if !h.is_zero() {
                return Connectivity::Exactly(q as i64 - 1);
            }
        }
        Connectivity::AtLeast(self.truncation() as i64 - 1)
    }
}

/// Position of every nondegenerate id within its degree's roster.
fn positions(x: &SimplicialSet) -> Vec<usize> {
    let mut pos = vec![usize::MAX; x.simplex_count()];
    for n in 0..=x.truncation() {
        for (k, id) in x.roster(n).iter().enumerate() {
            pos[id.index()] = k;
        }
    }
    pos
}

/// Normalized chains: nondegenerate simplices as basis, faces that land on a
/// degenerate simplex dropped.
pub fn normalized_chains<T: Integer + Signed + Clone>(x: &SimplicialSet) -> ChainComplex<T> {
    let pos = positions(x);
    let n_max = x.truncation();
    let dims: Vec<usize> = (0..=n_max).map(|n| x.roster(n).len()).collect();
    let mut boundaries = vec![DenseMatrix::zeros(0, dims[0])];
    for n in 1..=n_max {
        let mut b = DenseMatrix::<T>::zeros(dims[n - 1], dims[n]);
        for (c, &id) in x.roster(n).iter().enumerate() {
            for (i, f) in x.nondegenerate_faces(id).iter().enumerate() {
                if !f.word.is_empty() {
                    continue;
                }
                let r = pos[f.id.index()];
                let sign = if i % 2 == 0 { T::one() } else { T::zero() - T::one() };
                let v = b.get(r, c).clone() + sign;
                b.set(r, c, v);
            }
        }
        boundaries.push(b);
    }
    ChainComplex::new(dims, boundaries).expect("normalized chains of a simplicial set")
}

/// Per-degree matrices of a chain map `C -> D`; `matrix(n)` has `dim D_n` rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap<T> {
    matrices: Vec<DenseMatrix<T>>,
}

impl<T: Integer + Signed + Clone> ChainMap<T> {
    /// Checks `∂ F = F ∂` in every degree.
    pub fn new(
        source: &ChainComplex<T>,
        target: &ChainComplex<T>,
        matrices: Vec<DenseMatrix<T>>,
    ) -> Result<Self, HomologyError> {
        let top = source.truncation().min(target.truncation());
        if matrices.len() != top + 1 {
            return Err(HomologyError::Shape(matrices.len()));
        }
        for (n, m) in matrices.iter().enumerate() {
            if m.rows() != target.dim(n) || m.cols() != source.dim(n) {
                return Err(HomologyError::Shape(n));
            }
            if n >= 1 && target.boundary(n).mul(m) != matrices[n - 1].mul(source.boundary(n)) {
                return Err(HomologyError::NotAChainMap(n));
            }
        }
        Ok(ChainMap { matrices })
    }

    pub fn matrix(&self, n: usize) -> &DenseMatrix<T> {
        &self.matrices[n]
    }

    pub fn truncation(&self) -> usize {
        self.matrices.len() - 1
    }

    /// `self` followed by `after`.
    pub fn then(&self, after: &ChainMap<T>) -> ChainMap<T> {
        let matrices = self
            .matrices
            .iter()
            .zip(&after.matrices)
            .map(|(f, g)| g.mul(f))
            .collect();
        ChainMap { matrices }
    }
}

/// Matrices of a simplicial map on normalized chains.
pub fn chain_map<T: Integer + Signed + Clone>(f: &SimplicialMap) -> Result<ChainMap<T>, HomologyError> {
    let (x, y) = (f.source(), f.target());
    let c = normalized_chains::<T>(x);
    let d = normalized_chains::<T>(y);
    let pos = positions(y);
    let top = x.truncation().min(y.truncation());
    let matrices = (0..=top)
        .map(|n| {
            let mut m = DenseMatrix::zeros(y.roster(n).len(), x.roster(n).len());
            for (col, &id) in x.roster(n).iter().enumerate() {
                let img = f.image_of(id);
                if img.word.is_empty() {
                    m.set(pos[img.id.index()], col, T::one());
                }
            }
            m
        })
        .collect();
    let d = truncate(&d, top);
    let c = truncate(&c, top);
    ChainMap::new(&c, &d, matrices)
}

fn truncate<T: Integer + Signed + Clone>(c: &ChainComplex<T>, top: usize) -> ChainComplex<T> {
    ChainComplex {
        dims: c.dims[..=top].to_vec(),
        boundaries: c.boundaries[..=top].to_vec(),
    }
}

/// `cone_n = C_{n-1} ⊕ D_n` with `∂(c, d) = (-∂c, f c + ∂d)`.
pub fn mapping_cone<T: Integer + Signed + Clone>(
    source: &ChainComplex<T>,
    target: &ChainComplex<T>,
    f: &ChainMap<T>,
) -> ChainComplex<T> {
    let top = f.truncation();
    let cdim = |n: usize| if n == 0 { 0 } else { source.dim(n - 1) };
    let dims: Vec<usize> = (0..=top).map(|n| cdim(n) + target.dim(n)).collect();
    let mut boundaries = vec![DenseMatrix::zeros(0, dims[0])];
    for n in 1..=top {
        let mut b = DenseMatrix::zeros(dims[n - 1], dims[n]);
        let (c_lo, c_hi) = (cdim(n - 1), cdim(n));
        // -∂c into C_{n-2}
        if n >= 2 {
            let bc = source.boundary(n - 1);
            for r in 0..bc.rows() {
                for c in 0..bc.cols() {
                    b.set(r, c, T::zero() - bc.get(r, c).clone());
                }
            }
        }
        // f c into D_{n-1}
        let fm = f.matrix(n - 1);
        for r in 0..fm.rows() {
            for c in 0..fm.cols() {
                b.set(c_lo + r, c, fm.get(r, c).clone());
            }
        }
        // ∂d
        let bd = target.boundary(n);
        for r in 0..bd.rows() {
            for c in 0..bd.cols() {
                b.set(c_lo + r, c_hi + c, bd.get(r, c).clone());
            }
        }
        boundaries.push(b);
    }
    ChainComplex::new(dims, boundaries).expect("the cone of a chain map is a complex")
}

pub fn homology_table<T: Integer + Signed + Clone + fmt::Display>(x: &SimplicialSet, reduced: bool) -> Vec<HomologyRow> {
    normalized_chains::<T>(x).table(reduced)
}

/// Connectivity of the cone of `f` on normalized chains.
pub fn map_homological_connectivity<T: Integer + Signed + Clone>(f: &SimplicialMap) -> Result<Connectivity, HomologyError> {
    let fm = chain_map::<T>(f)?;
    let top = fm.truncation();
    let c = truncate(&normalized_chains::<T>(f.source()), top);
    let d = truncate(&normalized_chains::<T>(f.target()), top);
    Ok(mapping_cone(&c, &d, &fm).connectivity(false))
}

pub fn homological_connectivity<T: Integer + Signed + Clone>(x: &SimplicialSet) -> Connectivity {
    normalized_chains::<T>(x).connectivity(true)
}
