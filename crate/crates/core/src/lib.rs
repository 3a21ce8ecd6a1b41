//! Defining ideals, tangent cones and Betti numbers of numerical semigroup rings.

pub mod error;
pub mod explorer;
pub mod families;
pub mod groebner;
pub mod poly;
pub mod resolution;
pub mod semigroup;
pub mod tangentcone;
pub mod toric;

pub use error::{Error, Result};
pub use semigroup::NumericalSemigroup;
