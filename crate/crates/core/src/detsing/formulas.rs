//! Closed-form assembly of invariants from computed pieces.

use super::polar::{binom, nd_polar_mult};
use super::presmat::PresMat;
use crate::error::{Error, Result};
use crate::ideals::Seed;
use crate::poly::Field;

/// `e(mJM, N)` of a family member from `e(JM, N)` and the polar multiplicities.
///
/// The polar of dimension `i` is weighted by `C(n - 1, d + 1 - i)` where `d` is
/// the largest dimension listed; so for a surface in `C^5`, `m^2` gets `C(4, 1)`
/// and `m^1` gets `C(4, 2)`.
pub fn kt_formula(e_pair: u64, polar_mults: &[(usize, u64)], ambient_dim_minus_1: u64) -> u64 {
    let d = polar_mults.iter().map(|p| p.0).max().unwrap_or(0) as u64;
    e_pair
        + polar_mults
            .iter()
            .filter(|(i, _)| *i >= 1)
            .map(|&(i, m)| binom(ambient_dim_minus_1, d + 1 - i as u64) * m)
            .sum::<u64>()
}

/// `e(M, N_D) + mult Gamma(N_D)`.
pub fn e_gamma<K: Field>(p: &PresMat<K>, pair_value: u64, seed: Seed) -> Result<u64> {
    Ok(pair_value + nd_polar_mult(p, seed)?.value)
}

/// Euler characteristic of the smoothing from the polar multiplicity of the
/// family and that of its hyperplane section:
/// `polar = (-1)^d chi(X_s) + (-1)^(d-1) chi((X cap H)_s)`.
pub fn euler_from_polar(polar_mult: i64, chi_slice: i64, d: u32) -> Result<i64> {
    if d == 0 {
        return Err(Error::Range("dimension must be at least 1".into()));
    }
    let sign = if d % 2 == 0 { 1 } else { -1 };
    Ok(sign * polar_mult + chi_slice)
}

/// Repeated slicing: `polars[j]` is the polar multiplicity of the section of
/// dimension `d - j`, and `chi_base` the Euler characteristic of the last one.
pub fn iterated_slice_euler(polars: &[i64], chi_base: i64, d: u32) -> Result<i64> {
    if polars.len() > d as usize {
        return Err(Error::Range(format!("{} polar values for dimension {d}", polars.len())));
    }
    let mut chi = chi_base;
    for (j, &p) in polars.iter().enumerate().rev() {
        chi = euler_from_polar(p, chi, d - j as u32)?;
    }
    Ok(chi)
}
