use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::Field;
use super::ring::{Monomial, Ring};
use crate::error::{Error, Result};

/// Sparse polynomial: terms strictly descending in the ring ordering, no zero
/// coefficients.
#[derive(Clone)]
pub struct Poly<K: Field> {
    ring: Ring<K>,
    terms: Vec<(Monomial, K::Elem)>,
}

impl<K: Field> PartialEq for Poly<K> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_ring(&self.ring, &other.ring)
    }
}

impl<K: Field> Eq for Poly<K> {}

impl<K: Field> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

pub(crate) fn same_ring<K: Field>(a: &Ring<K>, b: &Ring<K>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<K: Field> Poly<K> {
    pub fn zero(ring: &Ring<K>) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring<K>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring<K>, c: K::Elem) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Ring<K>, c: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(c))
    }

    pub fn term(ring: &Ring<K>, m: Monomial, c: K::Elem) -> Self {
        let terms = if ring.field().is_zero(&c) {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Ring<K>, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i, 1), ring.field().one())
    }

    pub fn var_named(ring: &Ring<K>, name: &str) -> Result<Self> {
        Ok(Self::var(ring, ring.var_index_checked(name)?))
    }

    /// Builds a normalized polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(ring: &Ring<K>, terms: Vec<(Monomial, K::Elem)>) -> Result<Self> {
        for (m, _) in &terms {
            if m.len() != ring.nvars() {
                return Err(Error::LengthMismatch {
                    expected: ring.nvars(),
                    got: m.len(),
                });
            }
        }
        Ok(Self::collect(ring, terms))
    }

    fn collect(ring: &Ring<K>, terms: Vec<(Monomial, K::Elem)>) -> Self {
        let field = ring.field();
        let mut acc: HashMap<Monomial, K::Elem> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(v) => *v = field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusted constructor: terms already sorted descending without zeros.
    pub(crate) fn from_sorted(ring: &Ring<K>, terms: Vec<(Monomial, K::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn field(&self) -> &K {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, K::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, K::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Constant coefficient (zero when absent).
    pub fn constant_coeff(&self) -> K::Elem {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.field().zero(),
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, K::Elem)> {
        self.terms.first()
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lc(&self) -> Option<&K::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exps()[var]).max()
    }

    /// Smallest total degree of a term (t-adic valuation for univariate polynomials).
    pub fn order(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exps()[var] > 0)
    }

    pub fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.mul_impl(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let field = self.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match self.ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { field.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        field.sub(&a[i].1, &b[j].1)
                    } else {
                        field.add(&a[i].1, &b[j].1)
                    };
                    if !field.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { field.neg(&t.1) } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let field = self.field();
        let mut acc: HashMap<Monomial, K::Elem> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = field.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| self.ring.cmp(&b.0, &a.0));
        Poly {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// `self * c * m`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &K::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Poly::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(tm, tc)| (tm.mul(m), field.mul(tc, c)))
            .collect();
        Poly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    /// `self - c * m * g` in one merge pass.
    pub fn sub_mul_term(&self, g: &Self, m: &Monomial, c: &K::Elem) -> Self {
        Poly {
            ring: self.ring.clone(),
            terms: sub_mul_terms(&self.ring, &self.terms, &g.terms, m, c),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base);
            }
        }
        acc
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(lc) if self.field().is_one(lc) => self.clone(),
            Some(lc) => {
                let inv = self.field().inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self, var: usize) -> Self {
        let field = self.field();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exps()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] -= 1;
            let nc = field.mul(c, &field.from_i64(e as i64));
            if !field.is_zero(&nc) {
                terms.push((Monomial::from_exps(&exps), nc));
            }
        }
        // the map m -> m / x_var is not order preserving for every ordering
        Self::collect(&self.ring, terms)
    }

    /// Sets variable `var` to the constant `value`, staying in the same ring.
    pub fn substitute(&self, var: usize, value: &K::Elem) -> Self {
        let field = self.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exps()[var];
            let mut exps = m.exps().to_vec();
            exps[var] = 0;
            let nc = if e == 0 {
                c.clone()
            } else {
                field.mul(c, &field.pow(value, e as u64))
            };
            terms.push((Monomial::from_exps(&exps), nc));
        }
        Self::collect(&self.ring, terms)
    }

    /// Replaces each variable by a polynomial of `target` (all in the same ring).
    pub fn compose(&self, target: &Ring<K>, images: &[Poly<K>]) -> Result<Self> {
        if images.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.ring.nvars(),
                got: images.len(),
            });
        }
        for img in images {
            if !same_ring(img.ring(), target) {
                return Err(Error::RingMismatch);
            }
        }
        let mut acc = Poly::zero(target);
        let mut power_cache: HashMap<(usize, u32), Poly<K>> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = power_cache
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e))
                    .clone();
                t = t.mul_impl(&p);
            }
            acc = acc.merge(&t, false);
        }
        Ok(acc)
    }

    /// Evaluates at a full point of the coefficient field.
    pub fn evaluate(&self, point: &[K::Elem]) -> Result<K::Elem> {
        if point.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        let field = self.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = field.mul(&t, &field.pow(&point[i], e as u64));
                }
            }
            acc = field.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Moves the polynomial into `target`, sending variable `i` of this ring to
    /// `var_map[i]` of the target. Variables mapped to `None` must not occur.
    pub fn map_vars(&self, target: &Ring<K>, var_map: &[Option<usize>]) -> Result<Self> {
        if var_map.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.ring.nvars(),
                got: var_map.len(),
            });
        }
        let n = target.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; n];
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match var_map[i] {
                    Some(j) => exps[j] += e,
                    None => {
                        return Err(Error::UnknownVariable(self.ring.vars()[i].clone()));
                    }
                }
            }
            terms.push((Monomial::from_exps(&exps), c.clone()));
        }
        Ok(Self::collect(target, terms))
    }

    /// Moves the polynomial into a ring whose variables are named like (a superset
    /// of) the used variables of this one.
    pub fn to_ring(&self, target: &Ring<K>) -> Result<Self> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = self
            .ring
            .vars()
            .iter()
            .map(|v| target.var_index(v))
            .collect();
        self.map_vars(target, &map)
    }
}

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !field.is_one(&abs) || m.is_one() {
                factors.push(field.elem_to_string(&abs));
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.vars()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.vars()[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<'a, K: Field> Add<&'a Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &'a Poly<K>) -> Poly<K> {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl<'a, K: Field> Sub<&'a Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &'a Poly<K>) -> Poly<K> {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}

impl<'a, K: Field> Mul<&'a Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &'a Poly<K>) -> Poly<K> {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

impl<K: Field> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        let field = self.field();
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }
}

/// `a - c * m * b` on sorted term slices of the same ring.
pub(crate) fn sub_mul_terms<K: Field>(
    ring: &Ring<K>,
    a: &[(Monomial, K::Elem)],
    b: &[(Monomial, K::Elem)],
    m: &Monomial,
    c: &K::Elem,
) -> Vec<(Monomial, K::Elem)> {
    let field = ring.field();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<Monomial> = b.first().map(|t| t.0.mul(m));
    while i < a.len() && j < b.len() {
        let bm = bj.as_ref().unwrap();
        match ring.cmp(&a[i].0, bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bj.take().unwrap(), field.neg(&field.mul(&b[j].1, c))));
                j += 1;
                bj = b.get(j).map(|t| t.0.mul(m));
            }
            Ordering::Equal => {
                let v = field.sub(&a[i].1, &field.mul(&b[j].1, c));
                if !field.is_zero(&v) {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| t.0.mul(m));
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    while j < b.len() {
        out.push((b[j].0.mul(m), field.neg(&field.mul(&b[j].1, c))));
        j += 1;
    }
    out
}

/// Checked product, the public multiplication entry point.
pub fn poly_mul<K: Field>(f: &Poly<K>, g: &Poly<K>) -> Result<Poly<K>> {
    f.checked_mul(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::{PrimeField, Rationals};
    use crate::poly::parse::parse_poly;
    use crate::poly::ring::{MonomialOrder, RingCtx};

    fn ring(vars: &[&str]) -> Ring<Rationals> {
        RingCtx::new(Rationals, vars, MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(&["x", "y"]);
        let a = parse_poly("y - x", &r).unwrap();
        let b = parse_poly("y + x", &r).unwrap();
        assert_eq!(poly_mul(&a, &b).unwrap(), parse_poly("y^2 - x^2", &r).unwrap());
        assert!(poly_mul(&a, &Poly::zero(&r)).unwrap().is_zero());
    }

    #[test]
    fn four_term_expansion() {
        let r = ring(&["x", "y", "z"]);
        let a = parse_poly("z^2 - x*y", &r).unwrap();
        let b = parse_poly("y^2 - x*z", &r).unwrap();
        let expected = parse_poly("z^2*y^2 - z^3*x - x*y^3 + x^2*y*z", &r).unwrap();
        assert_eq!(&a * &b, expected);
        assert_eq!((&a * &b).len(), 4);
    }

    #[test]
    fn ring_mismatch_detected() {
        let r1 = ring(&["x", "y"]);
        let r2 = ring(&["x", "z"]);
        let a = Poly::var(&r1, 0);
        let b = Poly::var(&r2, 0);
        assert_eq!(poly_mul(&a, &b), Err(Error::RingMismatch));
        let q = RingCtx::new(PrimeField::new(101).unwrap(), &["x"], MonomialOrder::Lex).unwrap();
        let _ = Poly::var(&q, 0);
    }

    #[test]
    fn derivative_and_substitution() {
        let r = ring(&["x", "t"]);
        let f = parse_poly("x^3*t + 2*x*t^2 - 5", &r).unwrap();
        assert_eq!(f.derivative(0), parse_poly("3*x^2*t + 2*t^2", &r).unwrap());
        let two = Rationals.from_i64(2);
        assert_eq!(f.substitute(1, &two), parse_poly("2*x^3 + 8*x - 5", &r).unwrap());
    }

    #[test]
    fn compose_pullback() {
        let r = ring(&["x", "y"]);
        let u = ring(&["t"]);
        let f = parse_poly("y^2 - x^3", &r).unwrap();
        let t = Poly::var(&u, 0);
        let img = vec![t.pow(2), t.pow(3)];
        assert!(f.compose(&u, &img).unwrap().is_zero());
    }
}
