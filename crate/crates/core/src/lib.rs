//! Exact counts of connected components ("polygons") of the order-2
//! Cayley tree that contain a fixed set of vertices.
//!
//! Two families are covered: components containing a fixed full component
//! with `m` boundary vertices ([`full_count`]) and components containing
//! both endpoints of an `m`-vertex path ([`path_count`]). Each family has a
//! convolution evaluator and a closed form as a fixed linear combination of
//! Catalan numbers; the [`oracle`] module counts the same objects by brute
//! force.
//!
//! The counting code is generic over the exact scalar (see [`scalar`]);
//! the aliases below fix it to `BigInt` and `f64`.

pub mod catalan;
mod convolution;
pub mod cayley_tree;
pub mod error;
pub mod full_count;
pub mod oracle;
pub mod path_count;
pub mod scalar;
pub mod toeplitz;

pub use error::{Error, Result};
pub use oracle::Family;

/// Default exact scalar.
pub type Count = num_bigint::BigInt;
/// Default float type for estimates.
pub type Estimate = f64;

pub type CatalanTable = catalan::CatalanTable<Count>;
pub type CoefficientVectorF = full_count::CoefficientVectorF<Count>;
pub type CoefficientVectorT = path_count::CoefficientVectorT<Count>;
pub type ToeplitzMatrix = toeplitz::ToeplitzMatrix<Count>;
