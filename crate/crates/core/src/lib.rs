pub mod catalog;
pub mod cli;
pub mod clifford;
pub mod error;
pub mod eta;
pub mod linalg;
pub mod prolong;
pub mod scalar;
pub mod spinforms;
pub mod structure;

pub use error::{EtapError, Result};
pub use scalar::{Field, FieldKind, Gaussian, Rational, Scalar};
