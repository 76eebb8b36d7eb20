//! Ideal operations, polynomial matrices, local colengths and seeded generic data.

pub mod linalg;
pub mod matrix;
pub mod ops;
pub mod random;
pub mod rees;

pub use linalg::DenseMatrix;
pub use matrix::{fitting_ideal, minors_ideal, subsets, PolyMatrix};
pub use ops::{
    colength_at_origin, divide_exact, global_and_local_colength, ideal_intersection, ideal_quotient,
    multiplication_matrix, origin_part_dim, saturate, substitute,
};
pub use random::{
    combine_with, generic_combinations, random_epsilon, random_linear_forms, Seed, Seeds, DEFAULT_SECOND_SEED,
    DEFAULT_SEED,
};
pub use rees::rees_relations;
