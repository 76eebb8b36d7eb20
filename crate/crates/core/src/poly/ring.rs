use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use super::field::Field;
use crate::error::{Error, Result};

/// Monomial ordering of a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Two-block elimination order: the first `split` variables are compared
    /// first (degrevlex within the block), then the rest (degrevlex).
    BlockElim(usize),
    /// Weighted degree with a reverse-lexicographic tie break.
    Weighted(Vec<u32>),
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::BlockElim(s) => write!(f, "block({s})"),
            MonomialOrder::Weighted(w) => {
                let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                write!(f, "weighted({})", parts.join(","))
            }
        }
    }
}

/// Exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = e;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial {
                exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Support of the monomial as a bitmask over variable indices (first 64 variables).
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << (i.min(63))))
    }
}

/// Resource limits shared by every computation in a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of reduction steps in one Groebner basis computation.
    pub step_cap: u64,
    /// Print the S-pair trace of Groebner computations to stderr.
    pub trace: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            step_cap: 200_000_000,
            trace: false,
        }
    }
}

/// Polynomial ring context: coefficient field, ordered variable names, ordering.
#[derive(Clone, Debug)]
pub struct RingCtx<K: Field> {
    field: K,
    vars: Vec<String>,
    order: MonomialOrder,
    limits: Limits,
}

pub type Ring<K> = Arc<RingCtx<K>>;

impl<K: Field> PartialEq for RingCtx<K> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vars == other.vars && self.order == other.order
    }
}

fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl<K: Field> RingCtx<K> {
    pub fn new<S: AsRef<str>>(field: K, vars: &[S], order: MonomialOrder) -> Result<Ring<K>> {
        Self::with_limits(field, vars, order, Limits::default())
    }

    pub fn with_limits<S: AsRef<str>>(
        field: K,
        vars: &[S],
        order: MonomialOrder,
        limits: Limits,
    ) -> Result<Ring<K>> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for v in &vars {
            if !valid_ident(v) {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        match &order {
            MonomialOrder::Weighted(w) => {
                if w.len() != vars.len() || w.iter().any(|&x| x == 0) {
                    return Err(Error::InvalidRing(
                        "weighted ordering needs one positive weight per variable".into(),
                    ));
                }
            }
            MonomialOrder::BlockElim(s) if *s > vars.len() => {
                return Err(Error::InvalidRing("elimination block larger than ring".into()));
            }
            _ => {}
        }
        Ok(Arc::new(RingCtx {
            field,
            vars,
            order,
            limits,
        }))
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var_index_checked(&self, name: &str) -> Result<usize> {
        self.var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Same variables and field, different ordering.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring<K>> {
        Self::with_limits(self.field.clone(), &self.vars, order, self.limits.clone())
    }

    /// New ring over the same field with the given variables, inheriting the limits.
    pub fn derive<S: AsRef<str>>(&self, vars: &[S], order: MonomialOrder) -> Result<Ring<K>> {
        Self::with_limits(self.field.clone(), vars, order, self.limits.clone())
    }

    pub fn with_step_cap(&self, cap: u64) -> Ring<K> {
        let mut limits = self.limits.clone();
        limits.step_cap = cap;
        Arc::new(RingCtx {
            field: self.field.clone(),
            vars: self.vars.clone(),
            order: self.order.clone(),
            limits,
        })
    }

    pub fn with_trace(&self, trace: bool) -> Ring<K> {
        let mut limits = self.limits.clone();
        limits.trace = trace;
        Arc::new(RingCtx {
            field: self.field.clone(),
            vars: self.vars.clone(),
            order: self.order.clone(),
            limits,
        })
    }

    /// Total order on exponent vectors of this ring; checked lengths.
    pub fn mono_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.len() != self.nvars() {
                return Err(Error::LengthMismatch {
                    expected: self.nvars(),
                    got: m.len(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison used on hot paths.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (x, y) = (a.exps(), b.exps());
        match &self.order {
            MonomialOrder::Lex => x.cmp(y),
            MonomialOrder::DegRevLex => degrevlex(x, y),
            MonomialOrder::BlockElim(s) => {
                degrevlex(&x[..*s], &y[..*s]).then_with(|| degrevlex(&x[*s..], &y[*s..]))
            }
            MonomialOrder::Weighted(w) => {
                let wx: u64 = x.iter().zip(w).map(|(e, w)| *e as u64 * *w as u64).sum();
                let wy: u64 = y.iter().zip(w).map(|(e, w)| *e as u64 * *w as u64).sum();
                wx.cmp(&wy).then_with(|| revlex(x, y))
            }
        }
    }
}

#[inline]
fn revlex(x: &[u32], y: &[u32]) -> Ordering {
    for i in (0..x.len()).rev() {
        if x[i] != y[i] {
            // smaller exponent in the last differing variable is the larger monomial
            return y[i].cmp(&x[i]);
        }
    }
    Ordering::Equal
}

#[inline]
fn degrevlex(x: &[u32], y: &[u32]) -> Ordering {
    let dx: u64 = x.iter().map(|&e| e as u64).sum();
    let dy: u64 = y.iter().map(|&e| e as u64).sum();
    dx.cmp(&dy).then_with(|| revlex(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::Rationals;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn degrevlex_examples() {
        let r = RingCtx::new(Rationals, &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(r.mono_cmp(&m(&[2, 0]), &m(&[1, 1])).unwrap(), Ordering::Greater);
        // x*z^2 < y^3? degree tie broken by last variable
        let r3 = RingCtx::new(Rationals, &["x", "y", "z"], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(r3.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Less);
        assert_eq!(r3.cmp(&m(&[1, 1, 0]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_and_block_examples() {
        let r = RingCtx::new(Rationals, &["x", "y"], MonomialOrder::Lex).unwrap();
        assert_eq!(r.cmp(&m(&[1, 0]), &m(&[0, 3])), Ordering::Greater);
        let b = RingCtx::new(Rationals, &["T", "x"], MonomialOrder::BlockElim(1)).unwrap();
        assert_eq!(b.cmp(&m(&[1, 5]), &m(&[0, 6])), Ordering::Greater);
        assert_eq!(b.cmp(&m(&[1, 0]), &m(&[0, 60])), Ordering::Greater);
    }

    #[test]
    fn length_mismatch_is_reported() {
        let r = RingCtx::new(Rationals, &["x", "y"], MonomialOrder::Lex).unwrap();
        assert!(matches!(
            r.mono_cmp(&m(&[1]), &m(&[1, 0])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn ring_validation() {
        assert!(RingCtx::new(Rationals, &["x", "x"], MonomialOrder::Lex).is_err());
        assert!(RingCtx::new(Rationals, &["", "y"], MonomialOrder::Lex).is_err());
        assert!(RingCtx::new(Rationals, &["x", "y"], MonomialOrder::Weighted(vec![1, 0])).is_err());
        assert!(RingCtx::new(Rationals, &["x", "y"], MonomialOrder::Weighted(vec![1, 2])).is_ok());
    }
}
