//! Exact verification toolkit for finite-dimensional Hopf algebras over
//! finite fields of positive characteristic.

pub mod algebra;
pub mod error;
pub mod ff;
pub mod grp;
pub mod harness;
pub mod hopf;
pub mod report;
pub mod rlie;

pub use algebra::AlgebraSC;
pub use error::{Error, Result};
pub use report::{CheckReport, Status};
