//! Verification and construction toolkit for finite-dimensional Hom-Jordan,
//! Hom-pre-Jordan and Hom-J-dendriform algebras over exact fields.

pub mod algebra;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod fixtures;
pub mod identity;
pub mod io;
pub mod linalg;
pub mod operators;
pub mod report;
pub mod scalar;

pub use algebra::{Bimodule, DerivedProducts, HomAlgebra, Label, Module, Representation, Tensor};
pub use error::{Error, Result};
pub use identity::{check_bimodule, check_representation, check_suite, Suite};
pub use linalg::{Matrix, Vector};
pub use operators::{OperatorReport, Policy};
pub use report::{CheckReport, Verdict, Witness};
pub use scalar::{Field, Scalar};
