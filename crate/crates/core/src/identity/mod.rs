//! Multilinear identities as data, and the evaluator that checks them.

pub mod engine;
pub mod suites;
pub mod term;

pub use engine::{
    check_bimodule, check_representation, check_suite, evaluate, hom_associator, Context,
};
pub use suites::Suite;
pub use term::{Action, Identity, Sort, Term};
