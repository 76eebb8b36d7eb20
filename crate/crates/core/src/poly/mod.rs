//! Coefficient fields, monomial orderings, sparse polynomials and the expression parser.

pub mod field;
pub mod parse;
#[allow(clippy::module_inception)]
pub mod poly;
pub mod ring;

pub use field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use parse::parse_poly;
pub use poly::{poly_mul, Poly};
pub use ring::{Limits, Monomial, MonomialOrder, Ring, RingCtx};
