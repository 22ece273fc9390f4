//! Exact computations with finite p-groups given by multiplication tables:
//! subgroup series, powerfulness checks, coset enumeration, and non-abelian
//! tensor products of crossed modules.

pub mod error;
pub mod fp;
pub mod group;
pub mod numtheory;
pub mod powerful;
pub mod series;
pub mod tensor;

pub use error::{Error, Result};
