//! Pair multiplicities on monomial space curves.
//!
//! Modules on `X` are pulled back along `r(t) = (t^{w_1}, ..., t^{w_q})` to the
//! local ring of the line at the origin, where submodules of a free module are
//! free and `e(M, N)` is the length of `N / M`. Polynomials whose constant term
//! is nonzero are units there, so the elimination below stays polynomial.

use super::polar::g_rank;
use super::presmat::{defining_ideal, jacobian_module, nd_generators, PresMat};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ideals::random::{random_full_rank, rng, stream, Seed, Seeds};
use crate::ideals::{colength_at_origin, divide_exact, random_linear_forms, subsets, PolyMatrix};
use crate::poly::{Field, Monomial, MonomialOrder, Poly, Ring, RingCtx};

fn val<K: Field>(p: &Poly<K>) -> Option<u64> {
    p.order()
}

fn t_pow<K: Field>(ring: &Ring<K>, e: u64) -> Poly<K> {
    Poly::term(ring, Monomial::from_exps(&[e as u32]), ring.field().one())
}

fn shift_down<K: Field>(p: &Poly<K>, e: u64) -> Option<Poly<K>> {
    if e == 0 {
        return Some(p.clone());
    }
    divide_exact(p, &t_pow(p.ring(), e))
}

/// Element of the local ring written as `num / den` with `den(0) != 0`.
#[derive(Clone, Debug)]
struct Frac<K: Field> {
    num: Poly<K>,
    den: Poly<K>,
}

impl<K: Field> Frac<K> {
    fn from_poly(p: Poly<K>) -> Self {
        let den = Poly::one(p.ring());
        Frac { num: p, den }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Frac {
                num: &self.num + &o.num,
                den: self.den.clone(),
            };
        }
        Frac {
            num: &(&self.num * &o.den) + &(&o.num * &self.den),
            den: &self.den * &o.den,
        }
    }

    fn neg(&self) -> Self {
        Frac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        Frac {
            num: &self.num * &o.num,
            den: &self.den * &o.den,
        }
    }

    fn mul_poly(&self, p: &Poly<K>) -> Self {
        Frac {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    /// Division by `unit * t^e`; `None` unless `t^e` divides the numerator.
    fn div_unit_pow(&self, unit: &Poly<K>, e: u64) -> Option<Self> {
        Some(Frac {
            num: shift_down(&self.num, e)?,
            den: &self.den * unit,
        })
    }
}

fn det_frac<K: Field>(m: &[Vec<Frac<K>>], ring: &Ring<K>) -> Frac<K> {
    let n = m.len();
    if n == 0 {
        return Frac::from_poly(Poly::one(ring));
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Frac::from_poly(Poly::zero(ring));
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Frac<K>>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = m[0][c].mul(&det_frac(&minor, ring));
        acc = if c % 2 == 0 { acc.add(&term) } else { acc.add(&term.neg()) };
    }
    acc
}

/// A free basis of the module generated by some columns over the local ring,
/// in triangular form: basis column `k` has `unit_k * t^{e_k}` in row `r_k`, and
/// later basis columns vanish in row `r_k`.
#[derive(Clone, Debug)]
pub struct LocalBasis<K: Field> {
    rows: usize,
    cols: Vec<Vec<Poly<K>>>,
    pivots: Vec<(usize, u64, Poly<K>)>,
}

impl<K: Field> LocalBasis<K> {
    /// Column reduction ordered by `t`-adic valuation.
    pub fn new(a: &PolyMatrix<K>) -> Self {
        let mut remaining: Vec<Vec<Poly<K>>> = (0..a.cols()).map(|j| a.column(j)).filter(|c| c.iter().any(|e| !e.is_zero())).collect();
        let mut cols = Vec::new();
        let mut pivots = Vec::new();
        while !remaining.is_empty() {
            let mut best: Option<(u64, usize, usize)> = None;
            for (c, col) in remaining.iter().enumerate() {
                for (r, e) in col.iter().enumerate() {
                    if let Some(v) = val(e) {
                        if best.map_or(true, |b| (v, c, r) < b) {
                            best = Some((v, c, r));
                        }
                    }
                }
            }
            let Some((e, c, r)) = best else { break };
            let pivot = remaining.remove(c);
            let unit = shift_down(&pivot[r], e).expect("valuation divides");
            for col in remaining.iter_mut() {
                if col[r].is_zero() {
                    continue;
                }
                let f = shift_down(&col[r], e).expect("pivot has minimal valuation");
                for (x, p) in col.iter_mut().zip(pivot.iter()) {
                    *x = &(&unit * &*x) - &(&f * p);
                }
            }
            remaining.retain(|col| col.iter().any(|x| !x.is_zero()));
            cols.push(pivot);
            pivots.push((r, e, unit));
        }
        LocalBasis {
            rows: a.rows(),
            cols,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.cols.len()
    }

    /// `t`-adic orders of the pivots.
    pub fn pivot_orders(&self) -> Vec<u64> {
        self.pivots.iter().map(|p| p.1).collect()
    }

    /// Coordinates of `v` in the basis, or `None` when `v` is outside the module.
    fn coordinates(&self, v: &[Poly<K>]) -> Option<Vec<Frac<K>>> {
        let mut coords: Vec<Frac<K>> = Vec::with_capacity(self.rank());
        for (r, e, unit) in &self.pivots {
            let mut rhs = Frac::from_poly(v[*r].clone());
            for (j, c) in coords.iter().enumerate() {
                rhs = rhs.add(&c.mul_poly(&self.cols[j][*r]).neg());
            }
            coords.push(rhs.div_unit_pow(unit, *e)?);
        }
        // the residual must vanish in every row
        for row in 0..self.rows {
            let mut acc = Frac::from_poly(v[row].clone());
            for (j, c) in coords.iter().enumerate() {
                acc = acc.add(&c.mul_poly(&self.cols[j][row]).neg());
            }
            if !acc.is_zero() {
                return None;
            }
        }
        Some(coords)
    }
}

/// Length of `N / M` over the local ring of the line, for `M` generated by the
/// columns of `sub` inside `N` generated by the columns of `ambient`. Both must
/// have the same rank. Also returns the seeded cross-check values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalIndex {
    pub value: u64,
    pub rank: usize,
    pub combination_checks: Vec<u64>,
}

pub fn local_module_index<K: Field>(sub: &PolyMatrix<K>, ambient: &PolyMatrix<K>, seeds: &Seeds) -> Result<LocalIndex> {
    let ring = ambient.ring().clone();
    let basis = LocalBasis::new(ambient);
    let g = basis.rank();
    let mut transition: Vec<Vec<Frac<K>>> = vec![Vec::new(); g];
    for j in 0..sub.cols() {
        let coords = basis
            .coordinates(&sub.column(j))
            .ok_or_else(|| Error::InvariantViolation(format!("column {} is not in the ambient module", j + 1)))?;
        for (row, c) in transition.iter_mut().zip(coords) {
            row.push(c);
        }
    }
    let mut best: Option<u64> = None;
    for cs in subsets(sub.cols(), g) {
        let m: Vec<Vec<Frac<K>>> = transition.iter().map(|row| cs.iter().map(|&c| row[c].clone()).collect()).collect();
        if let Some(v) = val(&det_frac(&m, &ring).num) {
            best = Some(best.map_or(v, |b| b.min(v)));
        }
    }
    let value = best.ok_or_else(|| Error::RankDefect(format!("submodule has rank below {g}")))?;
    let mut checks = Vec::new();
    for seed in seeds.both() {
        let mut r = rng(seed, stream::CURVE_COLUMNS);
        let comb = random_full_rank(ring.field(), sub.cols(), g, &mut r);
        let m: Vec<Vec<Frac<K>>> = transition
            .iter()
            .map(|row| {
                (0..g)
                    .map(|c| {
                        let mut acc = Frac::from_poly(Poly::zero(&ring));
                        for (l, x) in row.iter().enumerate() {
                            acc = acc.add(&x.mul_poly(&Poly::constant(&ring, comb.get(l, c).clone())));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let v = val(&det_frac(&m, &ring).num).unwrap_or(u64::MAX);
        checks.push(v);
    }
    if checks.iter().any(|&c| c != value) {
        return Err(Error::GenericitySuspect {
            what: "generic column combination of the transition matrix".into(),
            first: value.to_string(),
            second: format!("{checks:?}"),
        });
    }
    Ok(LocalIndex {
        value,
        rank: g,
        combination_checks: checks,
    })
}

/// `t`-adic order of the ideal of `g`-minors of a matrix over `k[t]`.
pub fn minors_order<K: Field>(a: &PolyMatrix<K>, g: usize) -> Option<u64> {
    a.minors(g).iter().filter_map(val).min()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Character of a monomial under `x_v -> zeta^{a_v} x_v`, zeta of order `g`.
fn character(m: &Monomial, a: &[u64], g: u64) -> u64 {
    m.exps().iter().zip(a).map(|(&e, &w)| e as u64 * w).sum::<u64>() % g
}

/// Whether each entry is semi-invariant with character `r_i + c_j`.
fn equivariant<K: Field>(m: &PolyMatrix<K>, q: usize, a: &[u64], g: u64) -> bool {
    let mut chars: Vec<Vec<Option<u64>>> = vec![vec![None; m.cols()]; m.rows()];
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let e = m.get(i, j);
            let mut cs = e.terms().iter().map(|(mono, _)| {
                let exps: Vec<u32> = mono.exps()[..q].to_vec();
                character(&Monomial::from_exps(&exps), a, g)
            });
            let Some(first) = cs.next() else { continue };
            if cs.any(|c| c != first) {
                return false;
            }
            chars[i][j] = Some(first);
        }
    }
    // solve r_i + c_j = chars[i][j] (mod g) by propagation
    let (nr, nc) = (m.rows(), m.cols());
    let mut r: Vec<Option<u64>> = vec![None; nr];
    let mut c: Vec<Option<u64>> = vec![None; nc];
    for start in 0..nr {
        if r[start].is_some() {
            continue;
        }
        r[start] = Some(0);
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..nr {
                for j in 0..nc {
                    let Some(x) = chars[i][j] else { continue };
                    match (r[i], c[j]) {
                        (Some(ri), None) => {
                            c[j] = Some((x + g - ri) % g);
                            changed = true;
                        }
                        (None, Some(cj)) => {
                            r[i] = Some((x + g - cj) % g);
                            changed = true;
                        }
                        (Some(ri), Some(cj)) => {
                            if (ri + cj) % g != x {
                                return false;
                            }
                        }
                        (None, None) => {}
                    }
                }
            }
        }
    }
    true
}

/// A diagonal action of `Z/g` on the fiber coordinates under which the matrix
/// is equivariant and which permutes the `g` branches `s -> (zeta^{c w'} s^{w'})`
/// freely, where `w' = w / g`.
pub fn branch_action<K: Field>(m: &PolyMatrix<K>, q: usize, weights: &[u64]) -> Option<Vec<u64>> {
    let g = weights.iter().copied().fold(0, gcd);
    let reduced: Vec<u64> = weights.iter().map(|w| (w / g) % g).collect();
    let total = (g as usize).checked_pow(q as u32)?;
    for code in 1..total {
        let mut a = Vec::with_capacity(q);
        let mut x = code;
        for _ in 0..q {
            a.push((x % g as usize) as u64);
            x /= g as usize;
        }
        let free = (1..g).all(|k| {
            (0..g).all(|c| a.iter().zip(&reduced).any(|(&av, &wv)| (k * av) % g != (c * wv) % g))
        });
        if free && equivariant(m, q, &a, g) {
            return Some(a);
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvePair {
    pub value: u64,
    pub rank: usize,
    pub multiplicity: u64,
    /// Present when the weights share a factor and the branches were related by a group action.
    pub branch_action: Option<Vec<u64>>,
    pub combination_checks: Vec<u64>,
}

/// `e(JM(X), N_D(X))` for a curve with the monomial parameterization of the
/// given weights, by pulling both modules back to the line.
pub fn curve_pair_multiplicity<K: Field>(p: &PresMat<K>, weights: &[u64], seeds: &Seeds) -> Result<CurvePair> {
    let p = p.central_fiber()?;
    if p.d() != 1 {
        return Err(Error::NotUnibranchSupported(format!("dimension {} is not a curve", p.d())));
    }
    if weights.len() != p.q() || weights.iter().any(|&w| w == 0) {
        return Err(Error::NotUnibranchSupported(format!("need {} positive weights", p.q())));
    }
    let ring = p.ring();
    let line = RingCtx::new(ring.field().clone(), &["t"], MonomialOrder::Lex)?;
    let images: Vec<Poly<K>> = weights.iter().map(|&w| t_pow(&line, w)).collect();
    let ideal = defining_ideal(&p)?;
    for f in ideal.gens() {
        if !f.compose(&line, &images)?.is_zero() {
            return Err(Error::NotUnibranchSupported("the parameterization does not lie on X".into()));
        }
    }
    let min_w = *weights.iter().min().unwrap();
    let multiplicity = seeds.agree("multiplicity of the curve", |s| curve_multiplicity(&ideal, s))?;
    if multiplicity != min_w {
        return Err(Error::NotUnibranchSupported(format!(
            "X has multiplicity {multiplicity}, the parameterized branches only {min_w}"
        )));
    }
    let g = weights.iter().copied().fold(0, gcd);
    let action = if g > 1 {
        Some(branch_action(p.matrix(), p.q(), weights).ok_or_else(|| {
            Error::NotUnibranchSupported(format!(
                "weights share the factor {g} and no group action relates the branches"
            ))
        })?)
    } else {
        None
    };
    let nd = nd_generators(&p)?;
    let jm = jacobian_module(&p, false)?;
    let rank = g_rank(&nd, &ideal, seeds)?;
    let nd_line = nd.map(&line, |e| e.compose(&line, &images))?;
    let jm_line = jm.map(&line, |e| e.compose(&line, &images))?;
    let basis_rank = LocalBasis::new(&nd_line).rank();
    if basis_rank != rank {
        return Err(Error::RankDefect(format!(
            "pulled-back N_D has rank {basis_rank}, generic rank on X is {rank}"
        )));
    }
    let index = local_module_index(&jm_line, &nd_line, seeds)?;
    Ok(CurvePair {
        value: index.value,
        rank,
        multiplicity,
        branch_action: action,
        combination_checks: index.combination_checks,
    })
}

fn curve_multiplicity<K: Field>(ideal: &Ideal<K>, seed: Seed) -> Result<u64> {
    let forms = random_linear_forms(ideal.ring(), 1, seed);
    colength_at_origin(&ideal.with_gens(&forms)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Rationals};

    fn x_l(l: u32) -> PresMat<Rationals> {
        let r = RingCtx::new(Rationals, &["x", "y", "z"], MonomialOrder::DegRevLex).unwrap();
        let xl = format!("x^{l}");
        let m = PolyMatrix::parse(&r, &[vec!["z", "x"], vec!["y", "z"], vec![xl.as_str(), "y"]]).unwrap();
        PresMat::new(m, &[] as &[&str]).unwrap()
    }

    fn line() -> Ring<Rationals> {
        RingCtx::new(Rationals, &["t"], MonomialOrder::Lex).unwrap()
    }

    fn mat(r: &Ring<Rationals>, rows: &[Vec<String>]) -> PolyMatrix<Rationals> {
        PolyMatrix::parse(r, rows).unwrap()
    }

    fn hand_matrices(l: u32) -> (PolyMatrix<Rationals>, PolyMatrix<Rationals>) {
        let r = line();
        let rn = mat(
            &r,
            &[
                vec!["-t^3".into(), "0".into()],
                vec![format!("t^{}", 2 * l + 1), format!("-t^{}", l + 2)],
                vec!["0".into(), "-t^3".into()],
            ],
        );
        let rjm = mat(
            &r,
            &[
                vec!["-t^3".into(), format!("2*t^{}", l + 2)],
                vec![format!("2*t^{}", 2 * l + 1), format!("-t^{}", 3 * l)],
                vec![format!("t^{}", l + 2), format!("t^{}", 2 * l + 1)],
            ],
        );
        (rn, rjm)
    }

    #[test]
    fn hand_reduction_of_the_pullbacks() {
        let seeds = Seeds::default();
        for l in [2u32, 5, 7] {
            let (rn, rjm) = hand_matrices(l);
            let idx = local_module_index(&rjm, &rn, &seeds).unwrap();
            assert_eq!(idx.value, 2 * l as u64 - 2);
            assert_eq!(idx.rank, 2);
        }
    }

    #[test]
    fn module_against_itself() {
        let (rn, _) = hand_matrices(3);
        assert_eq!(local_module_index(&rn, &rn, &Seeds::default()).unwrap().value, 0);
    }

    #[test]
    fn pulled_back_modules_match_the_hand_matrices() {
        let seeds = Seeds::default();
        for l in [2u32, 5] {
            let p = x_l(l);
            let ln = line();
            let w = [3u64, 2 * l as u64 + 1, l as u64 + 2];
            let images: Vec<Poly<Rationals>> = w.iter().map(|&e| t_pow(&ln, e)).collect();
            let nd = nd_generators(&p).unwrap().map(&ln, |e| e.compose(&ln, &images)).unwrap();
            let jm = jacobian_module(&p, false).unwrap().map(&ln, |e| e.compose(&ln, &images)).unwrap();
            // the hand matrices list the minors with the third row deleted first
            let perm = |m: &PolyMatrix<Rationals>| m.select(&[2, 0, 1], &(0..m.cols()).collect::<Vec<_>>());
            let (rn, rjm) = hand_matrices(l);
            for (a, b) in [(perm(&nd), rn), (perm(&jm), rjm)] {
                assert_eq!(local_module_index(&a, &b, &seeds).unwrap().value, 0);
                assert_eq!(local_module_index(&b, &a, &seeds).unwrap().value, 0);
            }
        }
    }

    #[test]
    fn pair_multiplicity_of_space_curves() {
        let seeds = Seeds::default();
        for l in [2u32, 4, 5] {
            let p = x_l(l);
            let w = [3u64, 2 * l as u64 + 1, l as u64 + 2];
            let pair = curve_pair_multiplicity(&p, &w, &seeds).unwrap();
            assert_eq!(pair.value, 2 * l as u64 - 2, "l = {l}");
            assert_eq!(pair.multiplicity, 3);
            assert_eq!(pair.branch_action.is_some(), l == 4);
        }
    }

    #[test]
    fn oracle_by_minor_orders() {
        let seeds = Seeds::default();
        for l in [2u32, 5] {
            let p = x_l(l);
            let ln = line();
            let w = [3u64, 2 * l as u64 + 1, l as u64 + 2];
            let images: Vec<Poly<Rationals>> = w.iter().map(|&e| t_pow(&ln, e)).collect();
            let nd = nd_generators(&p).unwrap().map(&ln, |e| e.compose(&ln, &images)).unwrap();
            let jm = jacobian_module(&p, false).unwrap().map(&ln, |e| e.compose(&ln, &images)).unwrap();
            let oracle = minors_order(&jm, 2).unwrap() - minors_order(&nd, 2).unwrap();
            assert_eq!(curve_pair_multiplicity(&p, &w, &seeds).unwrap().value, oracle);
        }
    }

    #[test]
    fn rejects_unsupported_curves() {
        let seeds = Seeds::default();
        let p = x_l(2);
        assert!(matches!(
            curve_pair_multiplicity(&p, &[3, 5, 5], &seeds),
            Err(Error::NotUnibranchSupported(_))
        ));
        // two lines: the axis branch alone misses the second line
        let r = RingCtx::new(Rationals, &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        let m = PolyMatrix::parse(&r, &[vec!["x*y"]]).unwrap();
        let _ = parse_poly("x", &r).unwrap();
        let p = PresMat::new(m, &[] as &[&str]).unwrap();
        assert!(matches!(
            curve_pair_multiplicity(&p, &[1, 1], &seeds),
            Err(Error::NotUnibranchSupported(_))
        ));
    }
}
