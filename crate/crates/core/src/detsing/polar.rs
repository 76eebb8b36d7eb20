use super::presmat::{maximal_minors, PresMat};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ideals::random::{random_full_rank, rng, stream, Seed, Seeds};
use crate::ideals::{colength_at_origin, combine_with, minors_ideal, random_linear_forms, saturate, PolyMatrix};
use crate::poly::Field;

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// The submatrix of the first `n - d - l` rows.
pub fn sub_rows<K: Field>(p: &PresMat<K>, l: i64) -> Result<PolyMatrix<K>> {
    let count = p.n() as i64 - p.d() as i64 - l;
    if count < 0 || count > (p.n() + p.k()) as i64 {
        return Err(Error::Range(format!("{count} rows requested from a {}-row matrix", p.n() + p.k())));
    }
    let rows: Vec<usize> = (0..count as usize).collect();
    let cols: Vec<usize> = (0..p.n()).collect();
    Ok(p.matrix().select(&rows, &cols))
}

/// The last `n - i` columns on the first `n - d + i - j - 1` rows together with
/// the last `d + k - i` rows. `None` when fewer rows than columns remain: its
/// maximal minors vanish and the partner matrix is used alone.
pub fn sub_complement<K: Field>(p: &PresMat<K>, i: i64, j: i64) -> Result<Option<PolyMatrix<K>>> {
    let (n, k, d) = (p.n() as i64, p.k() as i64, p.d() as i64);
    if i < 0 || i > d.min(n - 1) || j < 0 {
        return Err(Error::Range(format!("i = {i}, j = {j}")));
    }
    let first = n - d + i - j - 1;
    if first < 0 {
        return Err(Error::Range(format!("j = {j} exceeds n - d + i - 1 = {}", n - d + i - 1)));
    }
    let last = d + k - i;
    let total_rows = n + k;
    if first + last <= 0 || first + last < n - i {
        return Ok(None);
    }
    let mut rows: Vec<usize> = (0..first as usize).collect();
    rows.extend((total_rows - last) as usize..total_rows as usize);
    let cols: Vec<usize> = (i as usize..n as usize).collect();
    Ok(Some(p.matrix().select(&rows, &cols)))
}

fn with_ambient<K: Field>(mut ideal: Ideal<K>, extra: Option<&Ideal<K>>) -> Result<Ideal<K>> {
    if let Some(e) = extra {
        ideal = ideal.sum(e)?;
    }
    Ok(ideal)
}

/// Colength at the origin of the maximal minors of `a` and `b` (plus `ambient`).
/// A missing `b` contributes nothing.
pub fn intersection_number<K: Field>(
    a: &PolyMatrix<K>,
    b: Option<&PolyMatrix<K>>,
    ambient: Option<&Ideal<K>>,
) -> Result<u64> {
    let mut ideal = maximal_minors(a);
    if let Some(b) = b {
        ideal = ideal.sum(&maximal_minors(b))?;
    }
    let ideal = with_ambient(ideal, ambient)?;
    colength_at_origin(&ideal).map_err(|e| match e {
        Error::NotZeroDimensional { dim } => {
            let q = ideal.ring().nvars();
            Error::GenericityFail {
                context: "intersection of minors ideals".into(),
                expected: q,
                actual: q.saturating_sub(dim),
            }
        }
        other => other,
    })
}

fn codimension<K: Field>(ideal: &Ideal<K>) -> Result<usize> {
    let q = ideal.ring().nvars();
    Ok(match ideal.gb()?.krull_dim() {
        Some(dim) => q - dim,
        None => q,
    })
}

/// One summand `M_{d+k+j-i} . M^{c,i}_{d+k-i,j}` with its codimension check:
/// `(expected, actual)` for each factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarTerm {
    pub j: usize,
    pub value: u64,
    pub codim_rows: (usize, usize),
    pub codim_complement: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedPolar {
    pub i: usize,
    pub value: u64,
    pub terms: Vec<PolarTerm>,
    /// The term `j = i + k` is nonzero, so the shorter sum `j <= i + k - 1` would differ.
    pub alternative_bound_differs: bool,
    pub log: Vec<String>,
}

/// `h_1^{d+k-i} h_2^i . E` as the alternating sum of intersection numbers over
/// `0 <= j <= min(n - d + i - 1, i + k)`. Parameters are set to zero.
pub fn mixed_polar_degree<K: Field>(p: &PresMat<K>, i: usize) -> Result<MixedPolar> {
    let p = p.central_fiber()?;
    let (n, k, d) = (p.n() as i64, p.k() as i64, p.d() as i64);
    let ii = i as i64;
    let mut out = MixedPolar {
        i,
        value: 0,
        terms: Vec::new(),
        alternative_bound_differs: false,
        log: Vec::new(),
    };
    let top = (n - d + ii - 1).min(ii + k);
    if ii > d.min(n - 1) || top < 0 {
        out.log.push(format!("i = {i}: empty sum"));
        return Ok(out);
    }
    let mut sum: i64 = 0;
    for j in 0..=top {
        let a = sub_rows(&p, j - ii)?;
        let b = sub_complement(&p, ii, j)?;
        let value = intersection_number(&a, b.as_ref(), None).map_err(|e| match e {
            Error::GenericityFail { expected, actual, .. } => Error::GenericityFail {
                context: format!("mixed polar term i = {i}, j = {j}"),
                expected,
                actual,
            },
            other => other,
        })?;
        let codim_rows = ((d - ii + j + 1) as usize, codimension(&maximal_minors(&a))?);
        let codim_complement = match &b {
            Some(b) => Some(((k + ii - j) as usize, codimension(&maximal_minors(b))?)),
            None => None,
        };
        out.log.push(format!(
            "i = {i}, j = {j}: {value}; codim rows {:?}, complement {}",
            codim_rows,
            codim_complement.map_or("empty".to_string(), |c| format!("{c:?}"))
        ));
        if j == ii + k && value != 0 {
            out.alternative_bound_differs = true;
        }
        sum += if j % 2 == 0 { value as i64 } else { -(value as i64) };
        out.terms.push(PolarTerm {
            j: j as usize,
            value,
            codim_rows,
            codim_complement,
        });
    }
    if sum < 0 {
        return Err(Error::InvariantViolation(format!("mixed polar degree i = {i} came out {sum}")));
    }
    out.value = sum as u64;
    Ok(out)
}

/// Row/column draws tried by [`mixed_polar_degree_generic`] besides the given coordinates.
pub const ROW_COL_DRAWS: u64 = 3;

/// `mixed_polar_degree` at the given coordinates and after `ROW_COL_DRAWS`
/// seeded row and column operations. Each summand is an intersection number,
/// which can only go up in special position, so the termwise minimum over the
/// attempts is kept. Attempts failing the codimension check are skipped.
pub fn mixed_polar_degree_generic<K: Field>(p: &PresMat<K>, i: usize, seed: Seed) -> Result<MixedPolar> {
    let mut attempts = vec![("given coordinates".to_string(), mixed_polar_degree(p, i))];
    for draw in 0..ROW_COL_DRAWS {
        let s = Seed(seed.0 ^ draw.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let q = p.random_transform(s, false)?;
        attempts.push((format!("row/column operations at seed {}", s.0), mixed_polar_degree(&q, i)));
    }
    let mut log = Vec::new();
    let mut best: Option<MixedPolar> = None;
    let mut failure = None;
    for (label, a) in attempts {
        match a {
            Ok(m) => {
                log.push(format!("{label}: {} from terms {:?}", m.value, m.terms.iter().map(|t| t.value).collect::<Vec<_>>()));
                best = Some(match best {
                    None => m,
                    Some(mut b) => {
                        for (bt, mt) in b.terms.iter_mut().zip(&m.terms) {
                            if mt.value < bt.value {
                                *bt = mt.clone();
                            }
                        }
                        b
                    }
                });
            }
            Err(Error::GenericityFail {
                context,
                expected,
                actual,
            }) => {
                log.push(format!("{label}: {context}: expected codimension {expected}, found {actual}"));
                failure.get_or_insert(Error::GenericityFail {
                    context,
                    expected,
                    actual,
                });
            }
            Err(e) => return Err(e),
        }
    }
    let Some(mut out) = best else {
        return Err(failure.expect("every attempt failed"));
    };
    let k = p.k();
    let sum: i64 = out
        .terms
        .iter()
        .map(|t| if t.j % 2 == 0 { t.value as i64 } else { -(t.value as i64) })
        .sum();
    if sum < 0 {
        return Err(Error::InvariantViolation(format!("mixed polar degree i = {i} came out {sum}")));
    }
    out.value = sum as u64;
    out.alternative_bound_differs = out.terms.iter().any(|t| t.j == i + k && t.value != 0);
    log.extend(out.log.drain(..));
    out.log = log;
    Ok(out)
}

/// Breakdown of the multiplicity over the base of the polar curve of `N_D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NdPolar {
    pub value: u64,
    pub mixed: Vec<MixedPolar>,
    pub predicate: bool,
    pub short_circuited: bool,
}

/// `sum_i C(d+k, i) h_1^{d+k-i} h_2^i . E` for `0 <= i <= min(d, n-1)`.
pub fn nd_polar_mult_formula<K: Field>(p: &PresMat<K>, seed: Seed) -> Result<NdPolar> {
    let top = p.d().min(p.n() - 1);
    let dk = (p.d() + p.k()) as u64;
    let mut value = 0;
    let mut mixed = Vec::new();
    for i in 0..=top {
        let m = mixed_polar_degree_generic(p, i, seed)?;
        value += binomial(dk, i as u64) * m.value;
        mixed.push(m);
    }
    Ok(NdPolar {
        value,
        mixed,
        predicate: polar_nonempty_predicate(p),
        short_circuited: false,
    })
}

/// As [`nd_polar_mult_formula`], but 0 without computation when the polar curve is
/// known to be empty.
pub fn nd_polar_mult<K: Field>(p: &PresMat<K>, seed: Seed) -> Result<NdPolar> {
    if !polar_nonempty_predicate(p) {
        return Ok(NdPolar {
            value: 0,
            mixed: Vec::new(),
            predicate: false,
            short_circuited: true,
        });
    }
    nd_polar_mult_formula(p, seed)
}

/// Whether the polar variety of codimension `u` of the rank-`< r` locus is empty:
/// `u <= (n - r)(n + k - r) - 1`.
pub fn gamma_empty_bound(n: u64, k: u64, r: u64, u: u64) -> Result<bool> {
    if r < 1 || r > n {
        return Err(Error::Range(format!("rank {r} outside 1..={n}")));
    }
    let bound = ((n - r) * (n + k - r)) as i64 - 1;
    Ok((u as i64) <= bound)
}

/// The polar curve of `N_D` is nonempty iff `q <= 2n + k - 1`.
pub fn polar_nonempty_predicate<K: Field>(p: &PresMat<K>) -> bool {
    p.q() + 1 <= 2 * p.n() + p.k()
}

fn generic_minor_rank<K: Field>(m: &PolyMatrix<K>, ambient: &Ideal<K>, seed: Seed) -> Result<usize> {
    let field = m.ring().field();
    let gb = ambient.gb()?;
    let mut g = rng(seed, stream::COMBINATIONS);
    let top = m.rows().min(m.cols());
    for r in (1..=top).rev() {
        let left = random_full_rank(field, r, m.rows(), &mut g);
        let right = random_full_rank(field, m.cols(), r, &mut g);
        let lm = crate::ideals::random::constant_matrix(m.ring(), &left);
        let sq = combine_with(&lm.mul(m)?, &right)?;
        let det = sq.det()?;
        if !gb.normal_form(&det)?.is_zero() {
            return Ok(r);
        }
    }
    Ok(0)
}

/// Generic rank of the columns of `m` on `V(ambient)`: the largest `r` such that a
/// seeded `r x r` combination `L m R` has determinant outside the ambient ideal.
pub fn g_rank<K: Field>(m: &PolyMatrix<K>, ambient: &Ideal<K>, seeds: &Seeds) -> Result<usize> {
    seeds.agree("generic rank", |s| generic_minor_rank(m, ambient, s))
}

/// Polar ideal of codimension `codim`: the `g`-minors of `g + codim - 1` seeded
/// combinations of the columns, plus the ambient ideal.
pub fn polar_ideal<K: Field>(m: &PolyMatrix<K>, ambient: &Ideal<K>, g: usize, codim: usize, seed: Seed) -> Result<Ideal<K>> {
    let c = (g + codim).saturating_sub(1).min(m.cols());
    let mut r = rng(seed, stream::COMBINATIONS);
    let comb = random_full_rank(m.ring().field(), m.cols(), c, &mut r);
    let mr = combine_with(m, &comb)?;
    minors_ideal(&mr, g as i64).sum(ambient)
}

/// Which scheme structure the polar multiplicity is read from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolarScheme {
    /// The determinantal ideal itself (minors plus ambient), as written.
    Determinantal,
    /// The closure of the rank drop away from the origin: origin-primary
    /// components are removed by saturation first.
    Closure,
}

/// Slices drawn per seed; the smallest colength is the generic one.
const SLICE_DRAWS: usize = 3;

fn polar_multiplicity_at<K: Field>(
    m: &PolyMatrix<K>,
    ambient: &Ideal<K>,
    codim: usize,
    scheme: PolarScheme,
    seed: Seed,
) -> Result<u64> {
    let ring = m.ring();
    let dim = ambient.gb()?.krull_dim().ok_or_else(|| Error::Range("ambient ideal is the unit ideal".into()))?;
    if codim > dim {
        return Err(Error::Range(format!("codimension {codim} exceeds dimension {dim}")));
    }
    let g = generic_minor_rank(m, ambient, seed)?;
    let mut polar = polar_ideal(m, ambient, g, codim, seed)?;
    if scheme == PolarScheme::Closure {
        polar = saturate(&polar, &Ideal::maximal(ring))?;
    }
    let c = dim - codim;
    if c == 0 {
        return colength_at_origin(&polar);
    }
    let forms = random_linear_forms(ring, c * SLICE_DRAWS, seed);
    let mut best = u64::MAX;
    for slice in forms.chunks(c) {
        best = best.min(colength_at_origin(&polar.with_gens(slice)?)?);
    }
    Ok(best)
}

/// Multiplicity at the origin of the polar variety of codimension `codim` of the
/// module generated by the columns of `m` on `V(ambient)`: the colength of the
/// `g`-minors of `g + codim - 1` generic column combinations plus the ambient
/// ideal, cut down by generic hyperplanes through the origin. Agreement at both
/// seeds is required.
pub fn polar_multiplicity<K: Field>(m: &PolyMatrix<K>, ambient: &Ideal<K>, codim: usize, seeds: &Seeds) -> Result<u64> {
    polar_multiplicity_with(m, ambient, codim, PolarScheme::Determinantal, seeds)
}

pub fn polar_multiplicity_with<K: Field>(
    m: &PolyMatrix<K>,
    ambient: &Ideal<K>,
    codim: usize,
    scheme: PolarScheme,
    seeds: &Seeds,
) -> Result<u64> {
    seeds.agree(&format!("polar multiplicity in codimension {codim}"), |s| {
        polar_multiplicity_at(m, ambient, codim, scheme, s)
    })
}

/// `m^i(X)` for `i = 1..=d` (the polar variety of dimension `i`), from the Jacobian module.
pub fn polar_multiplicities<K: Field>(
    jm: &PolyMatrix<K>,
    ambient: &Ideal<K>,
    scheme: PolarScheme,
    seeds: &Seeds,
) -> Result<Vec<(usize, u64)>> {
    let dim = ambient.gb()?.krull_dim().ok_or_else(|| Error::Range("ambient ideal is the unit ideal".into()))?;
    (1..=dim)
        .map(|i| Ok((i, polar_multiplicity_with(jm, ambient, dim - i, scheme, seeds)?)))
        .collect()
}

pub(crate) fn binom(n: u64, k: u64) -> u64 {
    binomial(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detsing::presmat::{defining_ideal, jacobian_module};
    use crate::poly::{MonomialOrder, Poly, Rationals, RingCtx};

    fn x_l(l: u32) -> PresMat<Rationals> {
        let r = RingCtx::new(Rationals, &["x", "y", "z"], MonomialOrder::DegRevLex).unwrap();
        let xl = format!("x^{l}");
        let m = PolyMatrix::parse(&r, &[vec!["z", "x"], vec!["y", "z"], vec![xl.as_str(), "y"]]).unwrap();
        PresMat::new(m, &[] as &[&str]).unwrap()
    }

    fn show(m: &PolyMatrix<Rationals>) -> String {
        m.to_string()
    }

    #[test]
    fn builders_on_the_space_curve() {
        let p = x_l(2);
        assert_eq!(show(&sub_rows(&p, 0).unwrap()), "[[z, x]]");
        assert_eq!(sub_rows(&p, -2).unwrap(), p.matrix().clone());
        assert_eq!(sub_rows(&p, 1).unwrap().rows(), 0);
        assert!(matches!(sub_rows(&p, 2), Err(Error::Range(_))));
        assert_eq!(show(&sub_complement(&p, 0, 0).unwrap().unwrap()), "[[y, z], [x^2, y]]");
        assert_eq!(show(&sub_complement(&p, 1, 0).unwrap().unwrap()), "[[x], [y]]");
        assert_eq!(show(&sub_complement(&p, 1, 1).unwrap().unwrap()), "[[y]]");
        assert!(matches!(sub_complement(&p, 2, 0), Err(Error::Range(_))));
        assert!(matches!(sub_complement(&p, 0, 1), Err(Error::Range(_))));
    }

    #[test]
    fn space_curve_intersections() {
        for l in [2, 4, 5] {
            let p = x_l(l);
            let n = |a: PolyMatrix<Rationals>, b: Option<PolyMatrix<Rationals>>| {
                intersection_number(&a, b.as_ref(), None).unwrap()
            };
            assert_eq!(n(sub_rows(&p, 0).unwrap(), sub_complement(&p, 0, 0).unwrap()), 2);
            assert_eq!(n(sub_rows(&p, -1).unwrap(), sub_complement(&p, 1, 0).unwrap()), 2);
            assert_eq!(n(sub_rows(&p, 0).unwrap(), sub_complement(&p, 1, 1).unwrap()), 1);
            let m0 = mixed_polar_degree(&p, 0).unwrap();
            let m1 = mixed_polar_degree(&p, 1).unwrap();
            assert_eq!((m0.value, m1.value), (2, 1));
            assert!(m1.terms.iter().all(|t| Some(t.codim_rows.0) == Some(t.codim_rows.1)));
            assert_eq!(mixed_polar_degree(&p, 2).unwrap().value, 0);
            assert_eq!(nd_polar_mult(&p, Seed(1)).unwrap().value, 4);
        }
    }

    #[test]
    fn telescoping_shared_component() {
        // the j = 0 term of h1 h2 splits into (a11, a12, a32) and (a22, a12, a32);
        // the first is the j = 1 term
        let p = x_l(5);
        let m = p.matrix();
        let ideal = |a: &Poly<Rationals>| {
            Ideal::new(p.ring(), vec![a.clone(), m.get(0, 1).clone(), m.get(2, 1).clone()]).unwrap()
        };
        let first = colength_at_origin(&ideal(m.get(0, 0))).unwrap();
        let second = colength_at_origin(&ideal(m.get(1, 1))).unwrap();
        let terms = mixed_polar_degree(&p, 1).unwrap().terms;
        assert_eq!(terms[0].value, first + second);
        assert_eq!(terms[1].value, first);
    }

    #[test]
    fn emptiness_predicates() {
        assert!(gamma_empty_bound(2, 1, 1, 1).unwrap());
        assert!(!gamma_empty_bound(2, 1, 1, 2).unwrap());
        assert!(!gamma_empty_bound(3, 2, 3, 0).unwrap());
        assert!(matches!(gamma_empty_bound(2, 1, 0, 0), Err(Error::Range(_))));
        assert!(polar_nonempty_predicate(&x_l(2)));
    }

    #[test]
    fn polar_multiplicity_of_space_curve() {
        let p = x_l(2);
        let i = defining_ideal(&p).unwrap();
        let jm = jacobian_module(&p, false).unwrap();
        let seeds = Seeds::default();
        assert_eq!(g_rank(&jm, &i, &seeds).unwrap(), 2);
        assert_eq!(polar_multiplicity(&jm, &i, 0, &seeds).unwrap(), 3);
        // the zero-dimensional polar is empty off the origin
        assert_eq!(polar_multiplicity_with(&jm, &i, 1, PolarScheme::Closure, &seeds).unwrap(), 0);
        assert!(polar_multiplicity(&jm, &i, 1, &seeds).unwrap() > 0);
    }

    #[test]
    fn free_module_on_the_plane_has_no_polars() {
        let r = RingCtx::new(Rationals, &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        let free = PolyMatrix::parse(&r, &[vec!["1", "0"], vec!["0", "1"]]).unwrap();
        let seeds = Seeds::default();
        let zero = Ideal::zero(&r);
        assert_eq!(polar_multiplicity(&free, &zero, 1, &seeds).unwrap(), 0);
        assert_eq!(polar_multiplicity(&free, &zero, 2, &seeds).unwrap(), 0);
        assert_eq!(polar_multiplicity(&free, &zero, 0, &seeds).unwrap(), 1);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
