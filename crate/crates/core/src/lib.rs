//! Deformation theory of ideals in finite-dimensional Lie algebras, computed
//! exactly over the rationals.

pub mod brackets;
pub mod cert;
pub mod complexes;
pub mod corpus;
pub mod deform;
pub mod error;
pub mod exactlin;
pub mod liealg;
pub mod multilin;
pub mod sample;

pub use cert::Certificate;
pub use error::{Error, Result};
