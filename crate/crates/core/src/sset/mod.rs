//! Simplicial sets in Eilenberg–Zilber canonical form, explicit simplicial
//! objects and the constructions built on them.

pub mod bisimplicial;
pub mod build;
pub mod format;
pub mod map;
pub mod object;
pub mod random;
pub mod set;
pub mod simplex;
mod validate;

pub use bisimplicial::{
    materialize_bisimplicial, partial_diagonal, validate_bisimplicial, Axis, BiSimplex,
    BisimplicialObject, BisimplicialSet, Diagonal, ExternalProduct, ExternalSmash,
    PartialDiagonal, TripleDiagonal, TrisimplicialObject,
};
pub use map::SimplicialMap;
pub use object::{
    check_identities, check_map, materialize, materialize_capped, Identity, MapViolation,
    Materialized, SimplicialObject, Violation,
};
pub use set::{SimplicialSet, SimplicialSetBuilder, SsetError};
pub use simplex::{DegeneracyWord, Simplex, SimplexId};
pub use validate::validate_identities;
