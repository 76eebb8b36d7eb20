//! Dense linear algebra over a coefficient field.

use crate::poly::Field;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<K: Field> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<K::Elem>,
}

impl<K: Field> DenseMatrix<K> {
    pub fn zeros(field: &K, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &K, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        DenseMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &K::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: K::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &Self, field: &K) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if field.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = field.add(&out.data[idx], &field.mul(a, b));
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64, field: &K) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, field);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, field);
            }
        }
        acc
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        DenseMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self, field: &K) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !field.is_zero(self.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = field.inv(self.get(r, c)).unwrap();
            for j in c..self.cols {
                let v = field.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || field.is_zero(self.get(i, c)) {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    let v = field.sub(self.get(i, j), &field.mul(&f, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &K) -> usize {
        self.clone().rref(field).len()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn nullspace(&self, field: &K) -> Vec<Vec<K::Elem>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![field.zero(); self.cols];
                v[f] = field.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = field.neg(m.get(r, f));
                }
                v
            })
            .collect()
    }

    /// Determinant by elimination (square matrices).
    pub fn det(&self, field: &K) -> K::Elem {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !field.is_zero(m.get(i, c))) else {
                return field.zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = field.neg(&det);
            }
            let piv = m.get(c, c).clone();
            det = field.mul(&det, &piv);
            let inv = field.inv(&piv).unwrap();
            for i in c + 1..n {
                if field.is_zero(m.get(i, c)) {
                    continue;
                }
                let f = field.mul(m.get(i, c), &inv);
                for j in c..n {
                    let v = field.sub(m.get(i, j), &field.mul(&f, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Rationals;

    fn q(rows: &[&[i64]]) -> DenseMatrix<Rationals> {
        DenseMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rationals.from_i64(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_nullspace_det() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(&Rationals), 2);
        let ns = m.nullspace(&Rationals);
        assert_eq!(ns.len(), 1);
        let v = DenseMatrix::from_rows(ns[0].iter().map(|x| vec![x.clone()]).collect());
        assert!(m.mul(&v, &Rationals).data.iter().all(|x| Rationals.is_zero(x)));
        assert_eq!(m.det(&Rationals), Rationals.from_i64(0));
        assert_eq!(q(&[&[0, 1], &[1, 0]]).det(&Rationals), Rationals.from_i64(-1));
    }

    #[test]
    fn nilpotent_power() {
        let m = q(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(m.pow(3, &Rationals).rank(&Rationals), 0);
        assert_eq!(m.pow(2, &Rationals).rank(&Rationals), 1);
    }
}
