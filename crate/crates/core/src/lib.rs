//! Exact combinatorics of nerves, generalized wedges and cyclic bar
//! constructions, with integral homology and a symbolic Kan loop group.

pub mod algebra;
pub mod bar;
pub mod checks;
pub mod homology;
pub mod loopgroup;
pub mod report;
pub mod sset;

pub use num_bigint::BigInt;

pub type Matrix = homology::DenseMatrix<BigInt>;
pub type Complex = homology::ChainComplex<BigInt>;
pub type Homology = homology::HomologyGroup<BigInt>;
pub type Smith = homology::SmithForm<BigInt>;
pub type ChainMatrices = homology::ChainMap<BigInt>;
