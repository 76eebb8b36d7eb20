//! Job files in, invariant reports out.

pub mod commands;
pub mod job;
pub mod report;

pub use commands::{cmd_family, cmd_groebner, cmd_invariants, exit, FieldChoice, Options, Run};
