use crate::error::{Error, Result};
use crate::groebner::{restrict_order, Ideal};
use crate::ideals::linalg::DenseMatrix;
use crate::ideals::random::{random_invertible, rng, small_int, stream, Seed};
use crate::ideals::{minors_ideal, subsets, PolyMatrix};
use crate::poly::{Field, Poly, Ring};

/// Columns generating a submodule of a free module, one row per coordinate.
pub type ModuleGens<K> = PolyMatrix<K>;

/// Presentation matrix of a maximal-rank determinantal singularity: an
/// `(n+k) x n` matrix whose maximal minors define `X` in `C^q`, with
/// `d = q - k - 1` the expected dimension.
///
/// Fiber variables come first in the ring, parameters last.
#[derive(Clone, Debug, PartialEq)]
pub struct PresMat<K: Field> {
    matrix: PolyMatrix<K>,
    nparams: usize,
    n: usize,
    k: usize,
    q: usize,
    d: usize,
}

impl<K: Field> PresMat<K> {
    /// `params` must name the trailing variables of the ring.
    pub fn new<S: AsRef<str>>(matrix: PolyMatrix<K>, params: &[S]) -> Result<Self> {
        let ring = matrix.ring().clone();
        let nv = ring.nvars();
        if params.len() > nv {
            return Err(Error::Range("more parameters than variables".into()));
        }
        let q = nv - params.len();
        for (off, p) in params.iter().enumerate() {
            let idx = ring.var_index_checked(p.as_ref())?;
            if idx != q + off {
                return Err(Error::InvalidRing(format!(
                    "parameter `{}` must come after the fiber variables",
                    p.as_ref()
                )));
            }
        }
        let (rows, cols) = (matrix.rows(), matrix.cols());
        if cols == 0 || rows < cols {
            return Err(Error::Shape(format!("presentation matrix is {rows}x{cols}; need rows >= cols >= 1")));
        }
        let k = rows - cols;
        if q < k + 1 {
            return Err(Error::Range(format!("q = {q} gives negative expected dimension for k = {k}")));
        }
        for (e, entry) in matrix.entries().iter().enumerate() {
            if !entry.field().is_zero(&entry.constant_coeff()) {
                return Err(Error::Range(format!(
                    "entry ({}, {}) does not vanish at the origin",
                    e / cols + 1,
                    e % cols + 1
                )));
            }
        }
        Ok(PresMat {
            matrix,
            nparams: params.len(),
            n: cols,
            k,
            q,
            d: q - k - 1,
        })
    }

    pub fn matrix(&self) -> &PolyMatrix<K> {
        &self.matrix
    }

    pub fn ring(&self) -> &Ring<K> {
        self.matrix.ring()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn fiber_vars(&self) -> Vec<usize> {
        (0..self.q).collect()
    }

    pub fn param_vars(&self) -> Vec<usize> {
        (self.q..self.q + self.nparams).collect()
    }

    /// The fiber over the origin of the parameter space, in the ring of fiber variables.
    pub fn central_fiber(&self) -> Result<PresMat<K>> {
        if self.nparams == 0 {
            return Ok(self.clone());
        }
        let ring = self.ring();
        let kept: Vec<usize> = self.fiber_vars();
        let names: Vec<String> = kept.iter().map(|&v| ring.vars()[v].clone()).collect();
        let fiber = ring.derive(&names, restrict_order(ring.order(), &kept))?;
        let zero = ring.field().zero();
        let map: Vec<Option<usize>> = (0..ring.nvars()).map(|v| (v < self.q).then_some(v)).collect();
        let m = self.matrix.map(&fiber, |e| {
            let mut p = e.clone();
            for v in self.param_vars() {
                p = p.substitute(v, &zero);
            }
            p.map_vars(&fiber, &map)
        })?;
        PresMat::new(m, &[] as &[&str])
    }

    /// `L * M(A x) * R` for constant invertible `L`, `R` and a linear change `A`
    /// of the fiber variables (parameters are left alone).
    pub fn transform(&self, l: &DenseMatrix<K>, r: &DenseMatrix<K>, a: Option<&DenseMatrix<K>>) -> Result<PresMat<K>> {
        let ring = self.ring();
        let mut m = self.matrix.clone();
        if let Some(a) = a {
            if a.rows != self.q || a.cols != self.q {
                return Err(Error::Shape("coordinate change must be q x q".into()));
            }
            let mut images: Vec<Poly<K>> = (0..ring.nvars()).map(|v| Poly::var(ring, v)).collect();
            for (i, img) in images.iter_mut().enumerate().take(self.q) {
                let mut f = Poly::zero(ring);
                for j in 0..self.q {
                    f = &f + &Poly::var(ring, j).scale(a.get(i, j));
                }
                *img = f;
            }
            m = m.map(ring, |e| e.compose(ring, &images))?;
        }
        let lm = crate::ideals::random::constant_matrix(ring, l);
        let rm = crate::ideals::random::constant_matrix(ring, r);
        let out = lm.mul(&m)?.mul(&rm)?;
        PresMat::new(out, &self.param_names())
    }

    /// Seeded invertible row and column operations, and optionally a seeded
    /// linear change of the fiber coordinates.
    pub fn random_transform(&self, seed: Seed, coordinates: bool) -> Result<PresMat<K>> {
        let field = self.ring().field();
        let mut g = rng(seed, stream::ROW_COL_OPS);
        let l = random_invertible(field, self.n + self.k, &mut g);
        let r = random_invertible(field, self.n, &mut g);
        let a = coordinates.then(|| {
            let mut g = rng(seed, stream::COORDINATES);
            random_invertible(field, self.q, &mut g)
        });
        self.transform(&l, &r, a.as_ref())
    }

    /// Restriction to a generic plane of codimension `c` through the origin: the
    /// last `c` fiber variables are replaced by seeded linear forms in the others.
    pub fn generic_slice(&self, c: usize, seed: Seed) -> Result<PresMat<K>> {
        if c > self.d {
            return Err(Error::Range(format!("slice of codimension {c} exceeds dimension {}", self.d)));
        }
        if c == 0 {
            return Ok(self.clone());
        }
        let ring = self.ring();
        let field = ring.field();
        let keep = self.q - c;
        let kept: Vec<usize> = (0..keep).chain(self.q..ring.nvars()).collect();
        let names: Vec<String> = kept.iter().map(|&v| ring.vars()[v].clone()).collect();
        let target = ring.derive(&names, restrict_order(ring.order(), &kept))?;
        let mut g = rng(seed, stream::LINEAR_FORMS);
        let mut images = Vec::with_capacity(ring.nvars());
        for v in 0..ring.nvars() {
            if v < keep {
                images.push(Poly::var(&target, v));
            } else if v < self.q {
                let mut f = Poly::zero(&target);
                for j in 0..keep {
                    f = &f + &Poly::var(&target, j).scale(&field.from_i64(small_int(&mut g)));
                }
                images.push(f);
            } else {
                images.push(Poly::var(&target, v - c));
            }
        }
        let m = self.matrix.map(&target, |e| e.compose(&target, &images))?;
        PresMat::new(m, &self.param_names())
    }

    fn param_names(&self) -> Vec<String> {
        self.param_vars().iter().map(|&v| self.ring().vars()[v].clone()).collect()
    }
}

/// Maximal minors, listed by deleted row tuples in lexicographic order.
pub fn defining_generators<K: Field>(p: &PresMat<K>) -> Result<Vec<Poly<K>>> {
    let m = p.matrix();
    let all: Vec<usize> = (0..m.cols()).collect();
    let rows = m.rows();
    subsets(rows, p.k())
        .into_iter()
        .map(|deleted| {
            let kept: Vec<usize> = (0..rows).filter(|r| !deleted.contains(r)).collect();
            m.select(&kept, &all).det()
        })
        .collect()
}

/// The ideal of maximal minors.
pub fn defining_ideal<K: Field>(p: &PresMat<K>) -> Result<Ideal<K>> {
    Ideal::new(p.ring(), defining_generators(p)?)
}

/// Gradients of `gens` with respect to `vars`, one row per generator.
pub fn jacobian_matrix<K: Field>(ring: &Ring<K>, gens: &[Poly<K>], vars: &[usize]) -> Result<PolyMatrix<K>> {
    let entries = gens
        .iter()
        .flat_map(|g| vars.iter().map(move |&v| g.derivative(v)))
        .collect();
    PolyMatrix::new(ring, gens.len(), vars.len(), entries)
}

/// `JM(X)`: one row per maximal minor, one column per partial derivative.
/// With `relative` only the fiber variables are differentiated.
pub fn jacobian_module<K: Field>(p: &PresMat<K>, relative: bool) -> Result<ModuleGens<K>> {
    let vars: Vec<usize> = if relative {
        p.fiber_vars()
    } else {
        (0..p.ring().nvars()).collect()
    };
    jacobian_matrix(p.ring(), &defining_generators(p)?, &vars)
}

/// `N_D(X)`: rows indexed by deleted row tuples, columns by entry positions
/// `(i, j)` in row-major order; the entry is the derivative of the minor with
/// respect to that matrix entry (a signed cofactor, zero if row `i` was deleted).
pub fn nd_generators<K: Field>(p: &PresMat<K>) -> Result<ModuleGens<K>> {
    let m = p.matrix();
    let (rows, n) = (m.rows(), m.cols());
    let tuples = subsets(rows, p.k());
    let mut out = PolyMatrix::zeros(p.ring(), tuples.len(), rows * n);
    for (r, deleted) in tuples.iter().enumerate() {
        let kept: Vec<usize> = (0..rows).filter(|x| !deleted.contains(x)).collect();
        for (pos, &i) in kept.iter().enumerate() {
            let other_rows: Vec<usize> = kept.iter().copied().filter(|&x| x != i).collect();
            for j in 0..n {
                let other_cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let minor = m.select(&other_rows, &other_cols).det()?;
                let entry = if (pos + j) % 2 == 1 { -&minor } else { minor };
                out.set(r, i * n + j, entry);
            }
        }
    }
    Ok(out)
}

/// Ideal of maximal (`min(rows, cols)`) minors.
pub fn maximal_minors<K: Field>(a: &PolyMatrix<K>) -> Ideal<K> {
    minors_ideal(a, a.rows().min(a.cols()) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MonomialOrder, Rationals, RingCtx};

    pub(crate) fn x_l(l: u32) -> PresMat<Rationals> {
        let r = RingCtx::new(Rationals, &["x", "y", "z"], MonomialOrder::DegRevLex).unwrap();
        let xl = format!("x^{l}");
        let m = PolyMatrix::parse(&r, &[vec!["z", "x"], vec!["y", "z"], vec![xl.as_str(), "y"]]).unwrap();
        PresMat::new(m, &[] as &[&str]).unwrap()
    }

    #[test]
    fn dimensions_and_defining_ideal() {
        let p = x_l(2);
        assert_eq!((p.n(), p.k(), p.q(), p.d()), (2, 1, 3, 1));
        let gens = defining_generators(&p).unwrap();
        assert_eq!(gens.len(), 3);
        let r = p.ring();
        // deleted row 1, then 2, then 3
        assert_eq!(gens[0], parse_poly("y^2 - x^2*z", r).unwrap());
        assert_eq!(gens[2], parse_poly("z^2 - x*y", r).unwrap());
    }

    #[test]
    fn one_by_one() {
        let r = RingCtx::new(Rationals, &["x"], MonomialOrder::DegRevLex).unwrap();
        let p = PresMat::new(PolyMatrix::parse(&r, &[vec!["x^3"]]).unwrap(), &[] as &[&str]).unwrap();
        assert_eq!(p.d(), 0);
        assert_eq!(defining_generators(&p).unwrap(), vec![parse_poly("x^3", &r).unwrap()]);
        let nd = nd_generators(&p).unwrap();
        assert_eq!((nd.rows(), nd.cols()), (1, 1));
        assert!(nd.get(0, 0).is_constant());
    }

    #[test]
    fn nd_matches_hand_matrix() {
        let p = x_l(3);
        let nd = nd_generators(&p).unwrap();
        assert_eq!((nd.rows(), nd.cols()), (3, 6));
        let r = p.ring();
        // tuple (2) deletes the last row: derivatives of z^2 - x*y
        let row: Vec<String> = nd.row(2).iter().map(|e| e.to_string()).collect();
        assert_eq!(row, ["z", "-y", "-x", "z", "0", "0"]);
        // the chain rule recovers the Jacobian module
        let jm = jacobian_module(&p, false).unwrap();
        let mut dm = PolyMatrix::zeros(r, 6, 3);
        for i in 0..3 {
            for j in 0..2 {
                for v in 0..3 {
                    dm.set(i * 2 + j, v, p.matrix().get(i, j).derivative(v));
                }
            }
        }
        assert_eq!(nd.mul(&dm).unwrap(), jm);
    }

    #[test]
    fn rejects_bad_input() {
        let r = RingCtx::new(Rationals, &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        let m = PolyMatrix::parse(&r, &[vec!["x", "1 + y"]]).unwrap();
        assert!(matches!(PresMat::new(m, &[] as &[&str]), Err(Error::Shape(_))));
        let m = PolyMatrix::parse(&r, &[vec!["x"], vec!["1 + y"]]).unwrap();
        assert!(matches!(PresMat::new(m, &[] as &[&str]), Err(Error::Range(_))));
        let m = PolyMatrix::parse(&r, &[vec!["x"], vec!["y"]]).unwrap();
        assert!(matches!(PresMat::new(m.clone(), &["x"]), Err(Error::InvalidRing(_))));
        assert!(matches!(PresMat::new(m, &["y"]), Err(Error::Range(_))));
    }
}
