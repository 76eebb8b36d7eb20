//! Coefficient fields.
//!
//! A field is a small value object that knows how to build and combine its
//! elements. Rational arithmetic is the default; the prime field exists as a
//! fast probabilistic cross-check and carries its modulus in the field value,
//! so elements of different fields can never be combined through one ring.

use std::fmt::{self, Debug};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default modulus for the prime-field cross-check: the largest prime below 2^62.
pub const DEFAULT_PRIME: u64 = 4_611_686_018_427_387_847;

pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    /// Image of `num/den`; fails when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Sign used by the printer: true when the element prints with a leading minus.
    fn is_negative(&self, a: &Self::Elem) -> bool;
    /// Writes `a` in the expression grammar (`7`, `-3/2`).
    fn write_elem(&self, a: &Self::Elem, f: &mut dyn fmt::Write) -> fmt::Result;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let inv = self.inv(b).expect("division by zero in coefficient field");
        self.mul(a, &inv)
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn elem_to_string(&self, a: &Self::Elem) -> String {
        let mut s = String::new();
        self.write_elem(a, &mut s).expect("writing to a String");
        s
    }
}

/// The rational numbers with arbitrary-precision numerator and denominator.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn name(&self) -> String {
        "QQ".to_string()
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::NotRepresentable(format!("{num}/{den}")));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn write_elem(&self, a: &BigRational, f: &mut dyn fmt::Write) -> fmt::Result {
        if a.denom().is_one() {
            write!(f, "{}", a.numer())
        } else {
            write!(f, "{}/{}", a.numer(), a.denom())
        }
    }
}

/// Integers modulo a prime `p < 2^63`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p >= 1 << 63 || !is_prime_u64(p) {
            return Err(Error::InvalidRing(format!("{p} is not an odd prime below 2^63")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduction of a rational number; `None` when the denominator is divisible by `p`.
    pub fn reduce_rational(&self, q: &BigRational) -> Option<u64> {
        self.from_ratio(q.numer(), q.denom()).ok()
    }

    fn reduce_bigint(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let r = v.mod_floor(&m);
        r.to_u64().expect("residue fits in u64")
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % small == 0 {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn name(&self) -> String {
        format!("Fp:{}", self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        let p = self.p as i128;
        (((v as i128) % p + p) % p) as u64
    }
    fn from_bigint(&self, v: &BigInt) -> u64 {
        self.reduce_bigint(v)
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        let d = self.reduce_bigint(den);
        if d == 0 {
            return Err(Error::NotRepresentable(format!("{num}/{den} mod {}", self.p)));
        }
        let n = self.reduce_bigint(num);
        Ok(mulmod(n, powmod(d, self.p - 2, self.p), self.p))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = *a as u128 + *b as u128;
        (s % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(powmod(*a, self.p - 2, self.p))
        }
    }
    fn is_negative(&self, a: &u64) -> bool {
        *a > self.p / 2
    }
    fn write_elem(&self, a: &u64, f: &mut dyn fmt::Write) -> fmt::Result {
        // symmetric representative keeps small negative values readable
        if self.is_negative(a) {
            write!(f, "-{}", self.p - a)
        } else {
            write!(f, "{a}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_prime_is_prime() {
        assert!(is_prime_u64(DEFAULT_PRIME));
        assert!(!is_prime_u64(DEFAULT_PRIME - 2));
        assert!(PrimeField::new(15).is_err());
    }

    #[test]
    fn prime_field_inverse_and_ratio() {
        let f = PrimeField::new(101).unwrap();
        let three = f.from_i64(3);
        assert_eq!(f.mul(&three, &f.inv(&three).unwrap()), 1);
        let half = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(f.mul(&half, &f.from_i64(2)), 1);
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(202)).is_err());
        assert_eq!(f.elem_to_string(&f.from_i64(-7)), "-7");
    }

    #[test]
    fn rationals_lowest_terms() {
        let q = Rationals;
        let a = q.from_ratio(&BigInt::from(6), &BigInt::from(-4)).unwrap();
        assert_eq!(q.elem_to_string(&a), "-3/2");
        assert!(a.denom().is_positive());
    }
}
