use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::poly::same_ring;
use crate::poly::{parse_poly, Field, Poly, Ring};

/// Matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<K: Field> {
    ring: Ring<K>,
    rows: usize,
    cols: usize,
    entries: Vec<Poly<K>>,
}

impl<K: Field> PolyMatrix<K> {
    pub fn new(ring: &Ring<K>, rows: usize, cols: usize, entries: Vec<Poly<K>>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| !same_ring(e.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(ring: &Ring<K>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Poly::zero(ring); rows * cols],
        }
    }

    pub fn from_rows(ring: &Ring<K>, rows: Vec<Vec<Poly<K>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn parse<S: AsRef<str>>(ring: &Ring<K>, rows: &[Vec<S>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|s| parse_poly(s.as_ref(), ring)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(ring, rows)
    }

    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Poly<K>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly<K> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly<K>) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Poly<K>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Poly<K>> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = PolyMatrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut out = PolyMatrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(&self.ring);
                for l in 0..self.cols {
                    let a = self.get(i, l);
                    let b = other.get(l, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Entrywise image under `f`.
    pub fn map<F: FnMut(&Poly<K>) -> Result<Poly<K>>>(&self, ring: &Ring<K>, mut f: F) -> Result<Self> {
        let entries = self.entries.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(ring, self.rows, self.cols, entries)
    }

    pub fn to_ring(&self, target: &Ring<K>) -> Result<Self> {
        self.map(target, |p| p.to_ring(target))
    }

    /// Horizontal concatenation.
    pub fn hcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Shape("row counts differ".into()));
        }
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut r = self.row(i).to_vec();
            r.extend(other.row(i).iter().cloned());
            rows.push(r);
        }
        if self.rows == 0 {
            return Ok(PolyMatrix::zeros(&self.ring, 0, self.cols + other.cols));
        }
        Self::from_rows(&self.ring, rows)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<Poly<K>> {
        if self.rows != self.cols {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let mut memo = HashMap::new();
        let rows: Vec<usize> = (0..self.rows).collect();
        let mask = full_mask(self.cols);
        Ok(self.minor_memo(&rows, mask, &mut memo))
    }

    /// Minor on the given rows (ascending) and column mask, expanding along the first row.
    fn minor_memo(&self, rows: &[usize], cmask: u64, memo: &mut HashMap<(u64, u64), Poly<K>>) -> Poly<K> {
        if rows.is_empty() {
            return Poly::one(&self.ring);
        }
        let rmask = rows.iter().fold(0u64, |m, &r| m | 1 << r);
        if let Some(p) = memo.get(&(rmask, cmask)) {
            return p.clone();
        }
        let r0 = rows[0];
        let mut acc = Poly::zero(&self.ring);
        let mut sign_neg = false;
        for c in 0..self.cols {
            if cmask & (1 << c) == 0 {
                continue;
            }
            let a = self.get(r0, c);
            if !a.is_zero() {
                let sub = self.minor_memo(&rows[1..], cmask & !(1 << c), memo);
                if !sub.is_zero() {
                    let t = a * &sub;
                    acc = if sign_neg { &acc - &t } else { &acc + &t };
                }
            }
            sign_neg = !sign_neg;
        }
        memo.insert((rmask, cmask), acc.clone());
        acc
    }

    /// All `size`-minors, rows and columns chosen in lexicographic order
    /// (row subsets outer, column subsets inner).
    pub fn minors(&self, size: usize) -> Vec<Poly<K>> {
        if size == 0 {
            return vec![Poly::one(&self.ring)];
        }
        if size > self.rows.min(self.cols) {
            return Vec::new();
        }
        assert!(self.rows <= 64 && self.cols <= 64, "matrix too large for minors");
        let mut memo = HashMap::new();
        let mut out = Vec::new();
        for rs in subsets(self.rows, size) {
            for cs in subsets(self.cols, size) {
                let cmask = cs.iter().fold(0u64, |m, &c| m | 1 << c);
                out.push(self.minor_memo(&rs, cmask, &mut memo));
            }
        }
        out
    }
}

impl<K: Field> fmt::Display for PolyMatrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            let r: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            write!(f, "[{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Ideal of `size`-minors: zero ideal when `size` exceeds both dimensions, unit
/// ideal when `size` is not positive.
pub fn minors_ideal<K: Field>(a: &PolyMatrix<K>, size: i64) -> Ideal<K> {
    if size <= 0 {
        return Ideal::unit(a.ring());
    }
    let size = size as usize;
    if size > a.rows().min(a.cols()) {
        return Ideal::zero(a.ring());
    }
    let mut gens: Vec<Poly<K>> = Vec::new();
    for m in a.minors(size) {
        if m.is_zero() {
            continue;
        }
        let neg = -&m;
        if !gens.iter().any(|g| *g == m || *g == neg) {
            gens.push(m);
        }
    }
    Ideal::new(a.ring(), gens).expect("minors share the ring")
}

/// `Fitt_j` of the cokernel of `a` (a presents a quotient of a free module of rank `a.rows()`).
pub fn fitting_ideal<K: Field>(a: &PolyMatrix<K>, j: usize) -> Ideal<K> {
    minors_ideal(a, a.rows() as i64 - j as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, Rationals, RingCtx};

    fn xyz() -> Ring<Rationals> {
        RingCtx::new(Rationals, &["x", "y", "z"], MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn curve_minors() {
        let r = xyz();
        let a = PolyMatrix::parse(&r, &[vec!["z", "x"], vec!["y", "z"], vec!["x^2", "y"]]).unwrap();
        let i = minors_ideal(&a, 2);
        let expected = Ideal::parse(&r, &["z^2 - x*y", "z*y - x^3", "y^2 - x^2*z"]).unwrap();
        assert_eq!(i.gb().unwrap(), expected.gb().unwrap());
        assert_eq!(i.gens().len(), 3);
        let e = minors_ideal(&a, 1);
        assert_eq!(e.gens().len(), 4);
        let b = PolyMatrix::parse(&r, &[vec!["x", "y", "z", "1"], vec!["1", "x", "y", "z"]]).unwrap();
        assert!(minors_ideal(&b, 3).is_zero());
        assert_eq!(minors_ideal(&b, 0), Ideal::unit(&r));
    }

    #[test]
    fn fitting_of_diagonal() {
        let r = xyz();
        let a = PolyMatrix::parse(&r, &[vec!["x", "0"], vec!["0", "y"]]).unwrap();
        let gb = |i: Ideal<Rationals>| i.gb().unwrap();
        assert_eq!(gb(fitting_ideal(&a, 0)), gb(Ideal::parse(&r, &["x*y"]).unwrap()));
        assert_eq!(gb(fitting_ideal(&a, 1)), gb(Ideal::parse(&r, &["x", "y"]).unwrap()));
        assert_eq!(fitting_ideal(&a, 2), Ideal::unit(&r));
        assert_eq!(fitting_ideal(&a, 5), Ideal::unit(&r));
    }

    #[test]
    fn determinant_matches_expansion() {
        let r = xyz();
        let a = PolyMatrix::parse(
            &r,
            &[vec!["x", "y", "1"], vec!["z", "x", "y"], vec!["1", "z", "x"]],
        )
        .unwrap();
        let expected = parse_poly("x^3 - 2*x*y*z + y^2 + z^2 - x", &r).unwrap();
        assert_eq!(a.det().unwrap(), expected);
    }

    #[test]
    fn subsets_lexicographic() {
        assert_eq!(subsets(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }
}
