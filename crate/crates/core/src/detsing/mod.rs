//! Invariants of determinantal singularities given by a presentation matrix.

pub mod curve;
pub mod formulas;
pub mod polar;
pub mod presmat;
pub mod report;

pub use curve::{curve_pair_multiplicity, local_module_index, CurvePair, LocalIndex};
pub use formulas::{e_gamma, euler_from_polar, iterated_slice_euler, kt_formula};
pub use polar::{
    g_rank, gamma_empty_bound, intersection_number, mixed_polar_degree, mixed_polar_degree_generic, nd_polar_mult,
    nd_polar_mult_formula, polar_ideal, polar_multiplicities, polar_multiplicity, polar_multiplicity_with, polar_nonempty_predicate, sub_complement,
    sub_rows, MixedPolar, NdPolar, PolarScheme, PolarTerm,
};
pub use presmat::{defining_generators, defining_ideal, jacobian_matrix, jacobian_module, nd_generators, ModuleGens, PresMat};
pub use report::{Entry, InvariantReport, Status};
