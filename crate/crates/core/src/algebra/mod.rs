//! Finite monoids, two-sided actions, operation situations and semidirect products.

mod action;
pub mod format;
mod monoid;
mod situation;

pub use action::{check_action, TwoSidedAction};
pub use monoid::{
    cyclic, monoid_from_fn, monoid_from_table, submonoid, symmetric, trivial, with_zero,
    AlgebraError, AxiomViolation, DiscreteMonoid, FiniteSet, MonoidMap,
};
pub use situation::{
    lift_constant, semidirect_monoid, semidirect_opsit, ConstantSimplicialMonoid,
    GAugmentedSituation, OperationSituation, SituationMap,
};
