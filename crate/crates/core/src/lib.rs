//! Exact computation of invariants of determinantal singularities.

pub mod detsing;
pub mod error;
pub mod family;
pub mod groebner;
pub mod ideals;
pub mod poly;

pub use error::{Error, Result};
