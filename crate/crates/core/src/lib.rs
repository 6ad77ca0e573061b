//! Finite-dimensional Hopf superalgebras over cyclotomic fields, stored by
//! structure constants, together with bosonization and its inverse.

pub mod analysis;
pub mod characters;
pub mod cyclo;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod presentation;
pub mod report;
pub mod superdata;

pub use cyclo::{Cyclo, UniPoly};
pub use error::{Error, Result};
pub use hopf::{HopfSuperData, Tensor};
pub use linalg::{Matrix, Vector};
pub use report::Report;
