//! Integral homology of truncated simplicial sets on normalized chains.

mod chain;
mod matrix;
mod snf;

pub use chain::{
    chain_map, homological_connectivity, homology_table, map_homological_connectivity, mapping_cone,
    normalized_chains, ChainComplex, ChainMap, Connectivity, HomologyError, HomologyGroup, HomologyRow,
};
pub use matrix::DenseMatrix;
pub use snf::{smith_normal_form, SmithForm};
