//! Seeded generic choices.
//!
//! Every random object is drawn from ChaCha8 seeded with the 64-bit seed, on a
//! stream number fixed per use site, so results are reproducible across
//! platforms. Integer coefficients are uniform in `[-COEFF_BOUND, COEFF_BOUND]`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linalg::DenseMatrix;
use super::matrix::PolyMatrix;
use crate::error::{Error, Result};
use crate::poly::{Field, Poly, Ring};

/// Seed of a generic choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seed(pub u64);

/// Seed used when none is supplied.
pub const DEFAULT_SEED: Seed = Seed(20_240_601);
/// Seed used for the confirming rerun when none is supplied.
pub const DEFAULT_SECOND_SEED: Seed = Seed(977_123_457);

pub const COEFF_BOUND: i64 = 9;

/// The pair of seeds every generic computation is run at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Seeds {
    pub first: Seed,
    pub second: Seed,
}

impl Default for Seeds {
    fn default() -> Self {
        Seeds {
            first: DEFAULT_SEED,
            second: DEFAULT_SECOND_SEED,
        }
    }
}

impl Seeds {
    pub fn new(first: u64, second: u64) -> Self {
        Seeds {
            first: Seed(first),
            second: Seed(second),
        }
    }

    pub fn both(&self) -> [Seed; 2] {
        [self.first, self.second]
    }

    pub fn trail(&self) -> Vec<u64> {
        vec![self.first.0, self.second.0]
    }

    /// Runs `f` at both seeds; the results must coincide.
    pub fn agree<T, F>(&self, what: &str, mut f: F) -> Result<T>
    where
        T: PartialEq + std::fmt::Debug,
        F: FnMut(Seed) -> Result<T>,
    {
        let a = f(self.first)?;
        let b = f(self.second)?;
        if a != b {
            return Err(Error::GenericitySuspect {
                what: what.to_string(),
                first: format!("{a:?}"),
                second: format!("{b:?}"),
            });
        }
        Ok(a)
    }
}

/// Stream numbers keep the draws of different use sites independent.
pub mod stream {
    pub const LINEAR_FORMS: u64 = 1;
    pub const COMBINATIONS: u64 = 2;
    pub const EPSILON: u64 = 3;
    pub const POINTS: u64 = 4;
    pub const ROW_COL_OPS: u64 = 5;
    pub const COORDINATES: u64 = 6;
    pub const CURVE_COLUMNS: u64 = 7;
}

pub fn rng(seed: Seed, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed.0);
    r.set_stream(stream);
    r
}

pub fn small_int(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(-COEFF_BOUND..=COEFF_BOUND)
}

/// `count` linear forms with small integer coefficients, none identically zero.
pub fn random_linear_forms<K: Field>(ring: &Ring<K>, count: usize, seed: Seed) -> Vec<Poly<K>> {
    let mut r = rng(seed, stream::LINEAR_FORMS);
    let field = ring.field();
    let n = ring.nvars();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let coeffs: Vec<i64> = (0..n).map(|_| small_int(&mut r)).collect();
        if coeffs.iter().all(|&c| c == 0) {
            continue;
        }
        let mut f = Poly::zero(ring);
        for (i, c) in coeffs.into_iter().enumerate() {
            f = &f + &Poly::var(ring, i).scale(&field.from_i64(c));
        }
        out.push(f);
    }
    out
}

/// Random `rows x cols` integer matrix of full rank.
pub fn random_full_rank<K: Field>(field: &K, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> DenseMatrix<K> {
    loop {
        let data: Vec<K::Elem> = (0..rows * cols).map(|_| field.from_i64(small_int(rng))).collect();
        let m = DenseMatrix { rows, cols, data };
        if m.rank(field) == rows.min(cols) {
            return m;
        }
    }
}

/// Random invertible square integer matrix.
pub fn random_invertible<K: Field>(field: &K, n: usize, rng: &mut ChaCha8Rng) -> DenseMatrix<K> {
    random_full_rank(field, n, n, rng)
}

pub fn constant_matrix<K: Field>(ring: &Ring<K>, m: &DenseMatrix<K>) -> PolyMatrix<K> {
    let entries = m.data.iter().map(|c| Poly::constant(ring, c.clone())).collect();
    PolyMatrix::new(ring, m.rows, m.cols, entries).expect("shape")
}

/// `a * R` for a seeded full-rank integer matrix `R` of size `g x c`.
pub fn generic_combinations<K: Field>(a: &PolyMatrix<K>, c: usize, seed: Seed) -> Result<PolyMatrix<K>> {
    let mut r = rng(seed, stream::COMBINATIONS);
    let m = random_full_rank(a.ring().field(), a.cols(), c, &mut r);
    combine_with(a, &m)
}

/// `a * R` for an explicit coefficient matrix.
pub fn combine_with<K: Field>(a: &PolyMatrix<K>, r: &DenseMatrix<K>) -> Result<PolyMatrix<K>> {
    if r.cols == 0 {
        return Ok(PolyMatrix::zeros(a.ring(), a.rows(), 0));
    }
    a.mul(&constant_matrix(a.ring(), r))
}

/// Generic parameter value in `[10, 10^6]`.
pub fn random_epsilon(seed: Seed) -> i64 {
    rng(seed, stream::EPSILON).gen_range(10..=1_000_000)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MonomialOrder, Rationals, RingCtx};
    use std::collections::HashSet;

    #[test]
    fn linear_forms_are_deterministic_and_varied() {
        let r = RingCtx::new(Rationals, &["x", "y", "z"], MonomialOrder::DegRevLex).unwrap();
        assert!(random_linear_forms(&r, 0, Seed(1)).is_empty());
        let a = random_linear_forms(&r, 2, Seed(7));
        assert_eq!(a, random_linear_forms(&r, 2, Seed(7)));
        assert!(a.iter().all(|f| !f.is_zero() && f.total_degree() == Some(1)));
        let distinct: HashSet<String> = (0..100)
            .map(|s| format!("{:?}", random_linear_forms(&r, 2, Seed(s))))
            .collect();
        assert_eq!(distinct.len(), 100);
    }

    #[test]
    fn combinations_identity_and_empty() {
        let r = RingCtx::new(Rationals, &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        let a = PolyMatrix::parse(&r, &[vec!["x", "y"], vec!["y^2", "x"]]).unwrap();
        let id = DenseMatrix::identity(&Rationals, 2);
        assert_eq!(combine_with(&a, &id).unwrap(), a);
        let e = generic_combinations(&a, 0, Seed(3)).unwrap();
        assert_eq!((e.rows(), e.cols()), (2, 0));
        let g = generic_combinations(&a, 1, Seed(3)).unwrap();
        assert_eq!((g.rows(), g.cols()), (2, 1));
        assert!(!g.get(0, 0).is_zero());
        let _ = parse_poly("x", &r).unwrap();
    }

    #[test]
    fn epsilon_range() {
        for s in 0..50 {
            let e = random_epsilon(Seed(s));
            assert!((10..=1_000_000).contains(&e));
        }
    }
}
