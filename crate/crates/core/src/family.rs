//! One-parameter families of determinantal singularities: polar curves over
//! the base, the covering identity and equisingularity verdicts.
//!
//! A family lives in a ring whose leading variables are the fiber coordinates,
//! followed by the family parameter `t` and optionally a smoothing parameter `s`.
//! The matrix may involve both; the fiber over `t = y` is smoothed by `s`.

use std::fmt;

use crate::detsing::formulas::kt_formula;
use crate::detsing::polar::{g_rank, polar_multiplicities, PolarScheme};
use crate::detsing::presmat::jacobian_matrix;
use crate::detsing::report::InvariantReport;
use crate::error::{Error, Result};
use crate::groebner::{restrict_order, Ideal, QuotientDim};
use crate::ideals::random::{random_full_rank, rng, stream};
use crate::ideals::{
    colength_at_origin, combine_with, global_and_local_colength, minors_ideal, random_epsilon, substitute, DenseMatrix,
    PolyMatrix, Seed, Seeds,
};
use crate::poly::{Field, Poly, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Smoothing,
    TestFamily,
}

#[derive(Clone, Debug)]
pub struct FamilySpec<K: Field> {
    matrix: PolyMatrix<K>,
    minor_size: usize,
    fiber: usize,
    param: usize,
    smoothing: Option<usize>,
    role: Role,
    germ: Option<Poly<K>>,
    combination: Option<DenseMatrix<K>>,
    chi_slice: Option<i64>,
}

impl<K: Field> FamilySpec<K> {
    /// `param` (and `smoothing`, if given) must be trailing variables of the ring;
    /// all other variables are fiber coordinates.
    pub fn new(matrix: PolyMatrix<K>, minor_size: usize, param: &str, smoothing: Option<&str>, role: Role) -> Result<Self> {
        let ring = matrix.ring().clone();
        let p = ring.var_index_checked(param)?;
        let s = smoothing.map(|s| ring.var_index_checked(s)).transpose()?;
        let nparams = 1 + s.is_some() as usize;
        let fiber = ring.nvars().checked_sub(nparams).ok_or_else(|| Error::InvalidRing("no fiber variables".into()))?;
        let mut params = vec![p];
        params.extend(s);
        params.sort_unstable();
        if params != (fiber..ring.nvars()).collect::<Vec<_>>() {
            return Err(Error::InvalidRing("parameters must be the last ring variables".into()));
        }
        if minor_size == 0 || minor_size > matrix.rows().min(matrix.cols()) {
            return Err(Error::Range(format!(
                "minor size {minor_size} for a {}x{} matrix",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if matrix.entries().iter().any(|e| !ring.field().is_zero(&e.constant_coeff())) {
            return Err(Error::Range("entries must vanish at the origin".into()));
        }
        Ok(FamilySpec {
            matrix,
            minor_size,
            fiber,
            param: p,
            smoothing: s,
            role,
            germ: None,
            combination: None,
            chi_slice: None,
        })
    }

    pub fn with_germ(mut self, germ: Poly<K>) -> Result<Self> {
        self.germ = Some(germ.to_ring(self.ring())?);
        Ok(self)
    }

    /// Explicit coefficient matrix (fiber variables x columns) for the relative polar.
    pub fn with_combination(mut self, c: DenseMatrix<K>) -> Result<Self> {
        if c.rows != self.fiber {
            return Err(Error::Shape(format!("combination needs {} rows", self.fiber)));
        }
        self.combination = Some(c);
        Ok(self)
    }

    pub fn with_chi_slice(mut self, chi: i64) -> Self {
        self.chi_slice = Some(chi);
        self
    }

    pub fn matrix(&self) -> &PolyMatrix<K> {
        &self.matrix
    }

    pub fn ring(&self) -> &Ring<K> {
        self.matrix.ring()
    }

    pub fn minor_size(&self) -> usize {
        self.minor_size
    }

    pub fn fiber_vars(&self) -> usize {
        self.fiber
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn chi_slice(&self) -> Option<i64> {
        self.chi_slice
    }

    pub fn param_name(&self) -> &str {
        &self.ring().vars()[self.param]
    }

    pub fn smoothing_name(&self) -> Option<&str> {
        self.smoothing.map(|s| self.ring().vars()[s].as_str())
    }

    /// Whether the family parameter appears in some entry.
    pub fn is_trivial(&self) -> bool {
        !self.matrix.entries().iter().any(|e| e.uses_var(self.param))
    }

    /// Distinct nonzero minors of the chosen size (up to sign).
    pub fn defining_generators(&self) -> Vec<Poly<K>> {
        distinct_minors(&self.matrix, self.minor_size)
    }

    pub fn defining_ideal(&self) -> Result<Ideal<K>> {
        Ideal::new(self.ring(), self.defining_generators())
    }
}

fn distinct_minors<K: Field>(m: &PolyMatrix<K>, size: usize) -> Vec<Poly<K>> {
    let mut out: Vec<Poly<K>> = Vec::new();
    for f in m.minors(size) {
        if f.is_zero() || out.iter().any(|g| *g == f || *g == -&f) {
            continue;
        }
        out.push(f);
    }
    out
}

/// Sets the listed variables to constants and drops them from the ring.
fn specialize<K: Field>(m: &PolyMatrix<K>, values: &[(usize, K::Elem)]) -> Result<PolyMatrix<K>> {
    let ring = m.ring();
    let kept: Vec<usize> = (0..ring.nvars()).filter(|v| values.iter().all(|(w, _)| w != v)).collect();
    let names: Vec<String> = kept.iter().map(|&v| ring.vars()[v].clone()).collect();
    let target = ring.derive(&names, restrict_order(ring.order(), &kept))?;
    let map: Vec<Option<usize>> = (0..ring.nvars()).map(|v| kept.iter().position(|&k| k == v)).collect();
    m.map(&target, |e| {
        let mut p = e.clone();
        for (v, c) in values {
            p = p.substitute(*v, c);
        }
        p.map_vars(&target, &map)
    })
}

/// Polar curve of a one-parameter family counted over the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseMult {
    pub total: u64,
    pub off_origin: u64,
    pub at_origin: u64,
    pub epsilon: i64,
}

/// `total` is the number of points of `V(J)` over a generic value `t = eps`,
/// `off_origin` the number over `t = 0` away from the origin, and `at_origin`
/// their difference: the branches of `V(J)` over the base through the origin.
pub fn mult_over_base<K: Field>(j: &Ideal<K>, param: &str, seed: Seed) -> Result<BaseMult> {
    let field = j.ring().field();
    let epsilon = random_epsilon(seed);
    let generic = substitute(j, param, &field.from_i64(epsilon))?;
    let total = match generic.gb()?.quotient_dim() {
        QuotientDim::Finite(v) => v,
        QuotientDim::Infinite => {
            return Err(Error::NotZeroDimensional {
                dim: generic.gb()?.krull_dim().unwrap_or(0),
            })
        }
    };
    let special = substitute(j, param, &field.zero())?;
    let (global, local) = global_and_local_colength(&special)?;
    let global = global.finite().ok_or_else(|| Error::NotZeroDimensional {
        dim: special.gb().ok().and_then(|g| g.krull_dim()).unwrap_or(0),
    })?;
    let off_origin = global - local;
    let at_origin = total.checked_sub(off_origin).ok_or_else(|| {
        Error::InvariantViolation(format!(
            "{off_origin} points off the origin over 0 but only {total} over a generic value"
        ))
    })?;
    Ok(BaseMult {
        total,
        off_origin,
        at_origin,
        epsilon,
    })
}

/// Same counts at both seeds (different generic values); the epsilons differ,
/// so only the counts are compared.
pub fn mult_over_base_checked<K: Field>(j: &Ideal<K>, param: &str, seeds: &Seeds) -> Result<BaseMult> {
    let [a, b] = seeds.both();
    let first = mult_over_base(j, param, a)?;
    let second = mult_over_base(j, param, b)?;
    if (first.total, first.off_origin) != (second.total, second.off_origin) {
        return Err(Error::GenericitySuspect {
            what: "polar curve over the base".into(),
            first: format!("{first:?}"),
            second: format!("{second:?}"),
        });
    }
    Ok(first)
}

/// Multiplicity-polar combination: `e(m M(0), M(0)) + mult Gamma_d(M)`.
pub fn mpt_combine(e_pair_special: u64, polar_n: u64) -> u64 {
    e_pair_special + polar_n
}

/// `mult_Y Gamma_d = mult_{Z_0} Gamma_d - mult_{Z_y} Gamma_d`.
pub fn covering_check(mult_z0: u64, mult_zy: u64) -> Result<u64> {
    mult_z0.checked_sub(mult_zy).ok_or_else(|| {
        Error::InvariantViolation(format!(
            "special value {mult_z0} below generic value {mult_zy}; a generic choice probably failed"
        ))
    })
}

/// Relative polar curve of a one-parameter family over `param`: the `g`-minors of
/// `g + d - 1` combinations of the relative Jacobian columns, plus the
/// defining ideal. `g` is the generic rank, `d` the fiber dimension.
pub fn relative_polar_ideal<K: Field>(
    m: &PolyMatrix<K>,
    minor_size: usize,
    fiber: usize,
    combination: Option<&DenseMatrix<K>>,
    seeds: &Seeds,
    seed: Seed,
) -> Result<Ideal<K>> {
    let ring = m.ring();
    let gens = distinct_minors(m, minor_size);
    let ideal = Ideal::new(ring, gens.clone())?;
    let dim = ideal
        .gb()?
        .krull_dim()
        .ok_or_else(|| Error::Range("the family is empty".into()))?;
    let params = ring.nvars() - fiber;
    let d = dim
        .checked_sub(params)
        .ok_or_else(|| Error::Range("total space is smaller than the base".into()))?;
    let jm = jacobian_matrix(ring, &gens, &(0..fiber).collect::<Vec<_>>())?;
    let g = g_rank(&jm, &ideal, seeds)?;
    let c = (g + d).saturating_sub(1).min(fiber);
    let comb = match combination {
        Some(c) => c.clone(),
        None => random_full_rank(ring.field(), fiber, c, &mut rng(seed, stream::COMBINATIONS)),
    };
    if comb.cols < c {
        return Err(Error::Shape(format!("combination has {} columns, {} needed", comb.cols, c)));
    }
    minors_ideal(&combine_with(&jm, &comb)?, g as i64).sum(&ideal)
}

/// Polar curve of a smoothing over its parameter, through the origin.
fn smoothing_polar<K: Field>(
    m: &PolyMatrix<K>,
    minor_size: usize,
    fiber: usize,
    param: &str,
    combination: Option<&DenseMatrix<K>>,
    seeds: &Seeds,
) -> Result<BaseMult> {
    let mut runs = Vec::new();
    for s in seeds.both() {
        let j = relative_polar_ideal(m, minor_size, fiber, combination, seeds, s)?;
        runs.push(mult_over_base(&j, param, s)?);
    }
    if (runs[0].total, runs[0].off_origin) != (runs[1].total, runs[1].off_origin) {
        return Err(Error::GenericitySuspect {
            what: "polar curve of the smoothing".into(),
            first: format!("{:?}", runs[0]),
            second: format!("{:?}", runs[1]),
        });
    }
    Ok(runs.swap_remove(0))
}

/// Smoothing polar of a family whose only parameter is the smoothing one.
pub fn polar_over_smoothing<K: Field>(spec: &FamilySpec<K>, seeds: &Seeds) -> Result<BaseMult> {
    smoothing_polar(
        &spec.matrix,
        spec.minor_size,
        spec.fiber,
        spec.param_name(),
        spec.combination.as_ref(),
        seeds,
    )
}

/// Whether the singular locus of `V(minors)` is isolated at the origin.
pub fn isolated_singularity<K: Field>(m: &PolyMatrix<K>, minor_size: usize) -> Result<bool> {
    let ring = m.ring();
    let gens = distinct_minors(m, minor_size);
    let ideal = Ideal::new(ring, gens.clone())?;
    let dim = ideal.gb()?.krull_dim().ok_or_else(|| Error::Range("empty fiber".into()))?;
    let codim = ring.nvars() - dim;
    let jm = jacobian_matrix(ring, &gens, &(0..ring.nvars()).collect::<Vec<_>>())?;
    let sing = minors_ideal(&jm, codim as i64).sum(&ideal)?;
    match colength_at_origin(&sing) {
        Ok(_) => Ok(true),
        Err(Error::NotZeroDimensional { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// `m^i` of a fiber given by the minors of a parameter-free matrix.
pub fn classical_polars<K: Field>(m: &PolyMatrix<K>, minor_size: usize, scheme: PolarScheme, seeds: &Seeds) -> Result<Vec<(usize, u64)>> {
    let ring = m.ring();
    let gens = distinct_minors(m, minor_size);
    let ideal = Ideal::new(ring, gens.clone())?;
    let jm = jacobian_matrix(ring, &gens, &(0..ring.nvars()).collect::<Vec<_>>())?;
    polar_multiplicities(&jm, &ideal, scheme, seeds)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Whitney,
    AF,
    WF,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    WhitneyB,
    AF,
    WF,
    SingularLocusSplit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Equisingular,
    NotEquisingular,
    Split,
    NoSplit,
    Undetermined(String),
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Equisingular => "EQUISINGULAR",
            Outcome::NotEquisingular => "NOT_EQUISINGULAR",
            Outcome::Split => "SPLIT",
            Outcome::NoSplit => "NO_SPLIT",
            Outcome::Undetermined(_) => "UNDETERMINED",
        })
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::WhitneyB => "WhitneyB",
            Condition::AF => "A_F",
            Condition::WF => "W_F",
            Condition::SingularLocusSplit => "SingularLocusSplit",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub condition: Condition,
    pub outcome: Outcome,
    pub special: Option<u64>,
    pub generic: Option<u64>,
    pub seeds: Vec<u64>,
    pub details: InvariantReport,
}

/// Invariant of one fiber: KT value of `e(m M(0), M(0))` plus the polar over
/// the smoothing, with the pieces recorded in `details`.
fn fiber_invariant<K: Field>(
    spec: &FamilySpec<K>,
    y: &K::Elem,
    label: &str,
    seeds: &Seeds,
    details: &mut InvariantReport,
) -> Result<std::result::Result<u64, String>> {
    let field = spec.ring().field();
    let trail = seeds.trail();
    let zero_s: Vec<(usize, K::Elem)> = spec.smoothing.map(|s| (s, field.zero())).into_iter().collect();
    let mut fixed = vec![(spec.param, y.clone())];
    fixed.extend(zero_s);
    let fiber = specialize(&spec.matrix, &fixed)?;
    if !isolated_singularity(&fiber, spec.minor_size)? {
        return Ok(Err(format!("fiber {label} does not have an isolated singularity at the origin")));
    }
    let polars = classical_polars(&fiber, spec.minor_size, PolarScheme::Determinantal, seeds)?;
    for &(i, v) in &polars {
        details.push(&format!("{label}.m{i}"), v as i64, "polar-multiplicity-determinantal", &trail, vec![]);
    }
    let q = spec.fiber as u64;
    let kt = kt_formula(0, &polars, q - 1);
    details.push(&format!("{label}.kt"), kt as i64, "kleiman-thorup-polar-sum", &trail, vec![]);
    let Some(s) = spec.smoothing else {
        return Ok(Err("no smoothing supplied: the polar multiplicity over a smoothing component is needed".into()));
    };
    let smoothed = specialize(&spec.matrix, &[(spec.param, y.clone())])?;
    let s_name = spec.ring().vars()[s].clone();
    let base = smoothing_polar(&smoothed, spec.minor_size, spec.fiber, &s_name, spec.combination.as_ref(), seeds)?;
    let log = vec![format!(
        "total {} off-origin {} at eps = {}",
        base.total, base.off_origin, base.epsilon
    )];
    details.push(&format!("{label}.polar_smoothing"), base.at_origin as i64, "polar-curve-over-base", &trail, log);
    let inv = mpt_combine(kt, base.at_origin);
    details.push(&format!("{label}.invariant"), inv as i64, "multiplicity-polar-combination", &trail, vec![]);
    Ok(Ok(inv))
}

/// Equisingularity of the family along the parameter axis.
pub fn whitney_report<K: Field>(spec: &FamilySpec<K>, mode: Mode, seeds: &Seeds) -> Result<Verdict> {
    let condition = match mode {
        Mode::Whitney => Condition::WhitneyB,
        Mode::AF => Condition::AF,
        Mode::WF => Condition::WF,
    };
    let mut details = InvariantReport::new();
    let trail = seeds.trail();
    if mode != Mode::Whitney && spec.germ.is_none() {
        return Err(Error::Range(format!("mode {condition} needs a function germ")));
    }
    if spec.is_trivial() {
        return Ok(Verdict {
            condition,
            outcome: Outcome::Equisingular,
            special: None,
            generic: None,
            seeds: trail,
            details,
        });
    }
    if mode != Mode::Whitney {
        return Ok(Verdict {
            condition,
            outcome: Outcome::Undetermined(
                "the pair multiplicity of the Jacobian module of (G, F) against O + N_D is not computable here".into(),
            ),
            special: None,
            generic: None,
            seeds: trail,
            details,
        });
    }
    let field = spec.ring().field();
    let special = fiber_invariant(spec, &field.zero(), "t0", seeds, &mut details)?;
    let mut generic_values = Vec::new();
    for (k, s) in seeds.both().into_iter().enumerate() {
        let tau = random_epsilon(s);
        let label = format!("t{}", k + 1);
        details.push(&format!("{label}.value"), tau, "generic-parameter", &[s.0], vec![]);
        generic_values.push(fiber_invariant(spec, &field.from_i64(tau), &label, seeds, &mut details)?);
    }
    let gap = [&special, &generic_values[0], &generic_values[1]]
        .iter()
        .find_map(|r| r.as_ref().err().cloned());
    if let Some(gap) = gap {
        return Ok(Verdict {
            condition,
            outcome: Outcome::Undetermined(gap),
            special: special.ok(),
            generic: generic_values[0].clone().ok(),
            seeds: trail,
            details,
        });
    }
    let special = special.unwrap();
    let (g1, g2) = (generic_values[0].clone().unwrap(), generic_values[1].clone().unwrap());
    if g1 != g2 {
        return Err(Error::GenericitySuspect {
            what: "invariant of the generic fiber".into(),
            first: g1.to_string(),
            second: g2.to_string(),
        });
    }
    let over_axis = covering_check(special, g1)?;
    details.push("polar_over_axis", over_axis as i64, "covering-difference", &trail, vec![]);
    Ok(Verdict {
        condition,
        outcome: if over_axis == 0 {
            Outcome::Equisingular
        } else {
            Outcome::NotEquisingular
        },
        special: Some(special),
        generic: Some(g1),
        seeds: trail,
        details,
    })
}

/// Compares the multiplicity at the origin of the ideal of entries at `t = 0`
/// with its value at generic `t`.
pub fn entry_locus_report<K: Field>(spec: &FamilySpec<K>, seeds: &Seeds) -> Result<Verdict> {
    let ring = spec.ring();
    let field = ring.field();
    let mut entries = Ideal::new(ring, spec.matrix.entries().iter().filter(|e| !e.is_zero()).cloned().collect())?;
    if let Some(s) = spec.smoothing_name() {
        entries = substitute(&entries, s, &field.zero())?;
    }
    let t = spec.param_name();
    let at = |v: i64| -> Result<u64> { colength_at_origin(&substitute(&entries, t, &field.from_i64(v))?) };
    let special = at(0)?;
    let generic = seeds.agree("entries colength at generic t", |s| at(random_epsilon(s)))?;
    let mut details = InvariantReport::new();
    let trail = seeds.trail();
    details.push("entries_colength_t0", special as i64, "entry-ideal-multiplicity", &[], vec![]);
    details.push("entries_colength_generic", generic as i64, "entry-ideal-multiplicity", &trail, vec![]);
    Ok(Verdict {
        condition: Condition::SingularLocusSplit,
        outcome: if special == generic { Outcome::NoSplit } else { Outcome::Split },
        special: Some(special),
        generic: Some(generic),
        seeds: trail,
        details,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, Rationals, RingCtx};

    fn ring(vars: &[&str]) -> Ring<Rationals> {
        RingCtx::new(Rationals, vars, MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn degenerate_curve_over_base() {
        let r = ring(&["x", "t"]);
        let j = Ideal::parse(&r, &["x", "t*x - t"]).unwrap();
        let b = mult_over_base(&j, "t", Seed(3)).unwrap();
        assert!(b.total <= 1 && b.off_origin <= 1);
        assert_eq!(b.at_origin, 0);
    }

    #[test]
    fn branches_through_the_origin() {
        // x^2 = t: two branches over t meeting at the origin; x(x - 1) = t: one
        // of the two points over 0 is away from the origin.
        let r = ring(&["x", "t"]);
        let j = Ideal::parse(&r, &["x^2 - t"]).unwrap();
        let b = mult_over_base_checked(&j, "t", &Seeds::default()).unwrap();
        assert_eq!((b.total, b.off_origin, b.at_origin), (2, 0, 2));
        let j = Ideal::parse(&r, &["x^2 - x - t"]).unwrap();
        let b = mult_over_base_checked(&j, "t", &Seeds::default()).unwrap();
        assert_eq!((b.total, b.off_origin, b.at_origin), (2, 1, 1));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(mpt_combine(70, 8), 78);
        assert_eq!(mpt_combine(70, 6), 76);
        assert_eq!(mpt_combine(0, 0), 0);
        assert_eq!(covering_check(78, 78).unwrap(), 0);
        assert_eq!(covering_check(8, 5).unwrap(), 3);
        assert!(matches!(covering_check(5, 8), Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn spec_validation() {
        let r = ring(&["x", "y", "t"]);
        let m = PolyMatrix::parse(&r, &[vec!["x"], vec!["y + t"]]).unwrap();
        assert!(FamilySpec::new(m.clone(), 1, "t", None, Role::TestFamily).is_ok());
        assert!(FamilySpec::new(m.clone(), 2, "t", None, Role::TestFamily).is_err());
        assert!(FamilySpec::new(m, 1, "x", None, Role::TestFamily).is_err());
        let m = PolyMatrix::parse(&r, &[vec!["x + 1"], vec!["y"]]).unwrap();
        assert!(FamilySpec::new(m, 1, "t", None, Role::TestFamily).is_err());
    }

    #[test]
    fn damon_pike_split() {
        let r = ring(&["x", "y", "z", "w", "v", "t"]);
        let m = PolyMatrix::parse(&r, &[vec!["w", "z"], vec!["y", "w"], vec!["x", "y + t*v^2 + v^3"]]).unwrap();
        let spec = FamilySpec::new(m, 2, "t", None, Role::TestFamily).unwrap();
        let v = entry_locus_report(&spec, &Seeds::default()).unwrap();
        assert_eq!(v.outcome, Outcome::Split);
        assert_eq!((v.special, v.generic), (Some(3), Some(2)));
    }

    #[test]
    fn trivial_families() {
        let r = ring(&["x", "y", "z", "w", "v", "t"]);
        let m = PolyMatrix::parse(&r, &[vec!["w", "z"], vec!["y", "w"], vec!["x", "y + v^3"]]).unwrap();
        let spec = FamilySpec::new(m, 2, "t", None, Role::TestFamily).unwrap();
        assert!(spec.is_trivial());
        assert_eq!(entry_locus_report(&spec, &Seeds::default()).unwrap().outcome, Outcome::NoSplit);
        assert_eq!(
            whitney_report(&spec, Mode::Whitney, &Seeds::default()).unwrap().outcome,
            Outcome::Equisingular
        );
    }

    #[test]
    fn space_curve_is_isolated() {
        let r = ring(&["x", "y", "z"]);
        let m = PolyMatrix::parse(&r, &[vec!["z", "x"], vec!["y", "z"], vec!["x^2", "y"]]).unwrap();
        assert!(isolated_singularity(&m, 2).unwrap());
        let m = PolyMatrix::parse(&r, &[vec!["x", "y"], vec!["y", "x"], vec!["0", "0"]]).unwrap();
        assert!(!isolated_singularity(&m, 2).unwrap());
    }
}
