//! `invariants`, `family` and `groebner`.

use detpolar::detsing::{
    curve_pair_multiplicity, defining_generators, euler_from_polar, kt_formula, mixed_polar_degree_generic,
    nd_polar_mult, InvariantReport, PresMat, PolarScheme,
};
use detpolar::family::{
    classical_polars, entry_locus_report, polar_over_smoothing, whitney_report, FamilySpec, Mode, Role,
};
use detpolar::groebner::{Ideal, QuotientDim};
use detpolar::ideals::{ideal_quotient, minors_ideal, saturate, DenseMatrix, PolyMatrix, Seeds};
use detpolar::poly::{parse_poly, Field, MonomialOrder, Poly, PrimeField, Rationals, Ring, RingCtx, DEFAULT_PRIME};
use detpolar::Error;

use crate::job::{parse_ideal, parse_job, IdealFile, JobFile};
use crate::report::{GroebnerOut, ReportFile};

pub const SEED_ENV: &str = "DETPOLAR_SEED";

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub seed: Option<u64>,
    pub second_seed: Option<u64>,
    pub field: Option<String>,
    pub step_cap: Option<u64>,
    pub cite: bool,
    pub mode: Option<Mode>,
    /// Value of the seed environment variable, read by the binary.
    pub env_seed: Option<String>,
}

/// Finished run: the report (absent on input errors) and the exit code.
#[derive(Debug)]
pub struct Run {
    pub report: Option<ReportFile>,
    pub exit: i32,
    pub diagnostics: Vec<String>,
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const INPUT: i32 = 1;
    pub const NEGATIVE: i32 = 2;
    pub const UNDETERMINED: i32 = 3;
    pub const CAP: i32 = 4;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Q,
    Fp(u64),
}

impl FieldChoice {
    pub fn parse(s: &str) -> Result<Self, String> {
        match s.trim() {
            "q" | "Q" | "QQ" => Ok(FieldChoice::Q),
            "Fp" | "fp" => Ok(FieldChoice::Fp(DEFAULT_PRIME)),
            other => {
                let p = other
                    .strip_prefix("Fp:")
                    .or_else(|| other.strip_prefix("fp:"))
                    .ok_or_else(|| format!("unknown field `{other}`; use q, Fp or Fp:PRIME"))?;
                let p: u64 = p.parse().map_err(|_| format!("bad prime `{p}`"))?;
                PrimeField::new(p).map_err(|e| e.to_string())?;
                Ok(FieldChoice::Fp(p))
            }
        }
    }
}

pub fn parse_mode(s: &str) -> Result<Mode, String> {
    match s {
        "whitney" => Ok(Mode::Whitney),
        "af" => Ok(Mode::AF),
        "wf" => Ok(Mode::WF),
        other => Err(format!("unknown mode `{other}`; use whitney, af or wf")),
    }
}

fn parse_order(s: Option<&str>) -> Result<MonomialOrder, String> {
    match s.unwrap_or("degrevlex") {
        "degrevlex" => Ok(MonomialOrder::DegRevLex),
        "lex" => Ok(MonomialOrder::Lex),
        other => Err(format!("unknown order `{other}`; use degrevlex or lex")),
    }
}

fn resolve_seeds(opts: &Options, job_first: Option<u64>, job_second: Option<u64>) -> Result<Seeds, String> {
    let env = match &opts.env_seed {
        Some(v) => Some(v.trim().parse::<u64>().map_err(|_| format!("{SEED_ENV}=`{v}` is not an integer"))?),
        None => None,
    };
    let d = Seeds::default();
    let first = opts.seed.or(job_first).or(env).unwrap_or(d.first.0);
    let second = opts.second_seed.or(job_second).unwrap_or(d.second.0);
    if first == second {
        return Err(format!("the two seeds must differ (both are {first})"));
    }
    Ok(Seeds::new(first, second))
}

fn input_error(msg: String) -> Run {
    Run {
        report: None,
        exit: exit::INPUT,
        diagnostics: vec![msg],
    }
}

fn exit_code(r: &ReportFile) -> i32 {
    if r.verdicts.iter().any(|v| v.outcome == "NOT_EQUISINGULAR" || v.outcome == "SPLIT") {
        return exit::NEGATIVE;
    }
    if r.status == "CAP_EXCEEDED" {
        return exit::CAP;
    }
    if r.status == "GENERICITY_SUSPECT" || r.verdicts.iter().any(|v| v.outcome == "UNDETERMINED") {
        return exit::UNDETERMINED;
    }
    if !r.errors.is_empty() {
        return exit::INPUT;
    }
    exit::OK
}

fn finish(report: ReportFile) -> Run {
    let exit = exit_code(&report);
    let diagnostics = report.errors.clone();
    Run {
        report: Some(report),
        exit,
        diagnostics,
    }
}

fn make_ring<K: Field, S: AsRef<str>>(field: K, vars: &[S], order: MonomialOrder, cap: Option<u64>) -> Result<Ring<K>, String> {
    let ring = RingCtx::new(field, vars, order).map_err(|e| e.to_string())?;
    Ok(match cap {
        Some(c) => ring.with_step_cap(c),
        None => ring,
    })
}

fn parse_at<K: Field>(ring: &Ring<K>, text: &str, place: &str) -> Result<Poly<K>, String> {
    parse_poly(text, ring).map_err(|e| format!("{place}: {e}"))
}

fn parse_matrix<K: Field>(ring: &Ring<K>, rows: &[Vec<String>]) -> Result<PolyMatrix<K>, String> {
    let mut out = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut r = Vec::new();
        for (j, e) in row.iter().enumerate() {
            r.push(parse_at(ring, e, &format!("matrix[{}][{}] `{e}`", i + 1, j + 1))?);
        }
        out.push(r);
    }
    PolyMatrix::from_rows(ring, out).map_err(|e| e.to_string())
}

/// Sets the trailing `nparams` variables to zero and drops them.
fn central<K: Field>(m: &PolyMatrix<K>, nparams: usize) -> Result<PolyMatrix<K>, Error> {
    let ring = m.ring();
    let q = ring.nvars() - nparams;
    if nparams == 0 {
        return Ok(m.clone());
    }
    let fiber = ring.derive(&ring.vars()[..q], ring.order().clone())?;
    let zero = ring.field().zero();
    let map: Vec<Option<usize>> = (0..ring.nvars()).map(|v| (v < q).then_some(v)).collect();
    m.map(&fiber, |e| {
        let mut p = e.clone();
        for v in q..ring.nvars() {
            p = p.substitute(v, &zero);
        }
        p.map_vars(&fiber, &map)
    })
}

/// Name of `h_1^a h_2^b`: `h1^2`, `h1h2`, `h2^3`.
pub fn mixed_name(a: usize, b: usize) -> String {
    let part = |h: &str, e: usize| match e {
        0 => String::new(),
        1 => h.to_string(),
        e => format!("{h}^{e}"),
    };
    let s = format!("{}{}", part("h1", a), part("h2", b));
    if s.is_empty() {
        "h0".into()
    } else {
        s
    }
}

fn field_label(f: FieldChoice) -> String {
    match f {
        FieldChoice::Q => "QQ".into(),
        FieldChoice::Fp(p) => format!("Fp:{p}"),
    }
}

struct Ctx {
    seeds: Seeds,
    field: FieldChoice,
    order: MonomialOrder,
    cite: bool,
}

fn setup(opts: &Options, job_field: Option<&str>, job_order: Option<&str>, first: Option<u64>, second: Option<u64>) -> Result<Ctx, String> {
    let field = FieldChoice::parse(opts.field.as_deref().or(job_field).unwrap_or("q"))?;
    Ok(Ctx {
        seeds: resolve_seeds(opts, first, second)?,
        field,
        order: parse_order(job_order)?,
        cite: opts.cite,
    })
}

// ---------------------------------------------------------------- invariants

pub fn cmd_invariants(text: &str, opts: &Options) -> Run {
    let job = match parse_job(text) {
        Ok(j) => j,
        Err(e) => return input_error(e),
    };
    let ctx = match setup(opts, job.field.as_deref(), job.order.as_deref(), job.seed, job.second_seed) {
        Ok(c) => c,
        Err(e) => return input_error(e),
    };
    let res = match ctx.field {
        FieldChoice::Q => invariants_in(Rationals, &job, text, &ctx, opts.step_cap),
        FieldChoice::Fp(p) => invariants_in(PrimeField::new(p).unwrap(), &job, text, &ctx, opts.step_cap),
    };
    match res {
        Ok(r) => finish(r),
        Err(e) => input_error(e),
    }
}

fn invariants_in<K: Field>(field: K, job: &JobFile, text: &str, ctx: &Ctx, cap: Option<u64>) -> Result<ReportFile, String> {
    let vars: Vec<&String> = job.variables.iter().chain(&job.parameters).collect();
    let ring = make_ring(field, &vars, ctx.order.clone(), cap)?;
    let matrix = parse_matrix(&ring, &job.matrix)?;
    let cols = matrix.cols();
    let minor_size = job.minor_size.unwrap_or(cols);
    if minor_size == 0 || minor_size > cols {
        return Err(format!("minor_size {minor_size} outside 1..={cols}"));
    }
    let seeds = &ctx.seeds;
    let trail = seeds.trail();
    let mut report = ReportFile::new("invariants", job.name.clone(), text.as_bytes(), field_label(ctx.field), trail.clone());
    let mut inv = InvariantReport::new();
    let fiber_matrix = central(&matrix, job.parameters.len()).map_err(|e| e.to_string())?;

    let pres = if minor_size == cols {
        let p = PresMat::new(matrix.clone(), &job.parameters).map_err(|e| e.to_string())?;
        for (name, over, actual) in [("n", job.n, p.n()), ("k", job.k, p.k()), ("q", job.q, p.q())] {
            if let Some(v) = over {
                if v != actual {
                    return Err(format!("declared {name} = {v} but the matrix gives {actual}"));
                }
            }
        }
        Some(p.central_fiber().map_err(|e| e.to_string())?)
    } else {
        None
    };

    if let Some(p) = &pres {
        for (name, v) in [("q", p.q()), ("n", p.n()), ("k", p.k()), ("d", p.d())] {
            inv.push(name, v as i64, "presentation-dimensions", &[], vec![]);
        }
    }
    let ideal = minors_ideal(&fiber_matrix, minor_size as i64);
    match ideal.gb() {
        Ok(gb) => {
            let gens = match &pres {
                Some(p) => defining_generators(p).map(|g| g.len()).unwrap_or(ideal.gens().len()),
                None => ideal.gens().len(),
            };
            inv.push("generators", gens as i64, "defining-minors", &[], vec![]);
            inv.push("gb_size", gb.basis().len() as i64, "reduced-groebner-basis", &[], vec![]);
            if let Some(dim) = gb.krull_dim() {
                inv.push("dim", dim as i64, "krull-dimension", &[], vec![]);
            }
        }
        Err(e) => inv.fail("defining_ideal", &e),
    }

    if let Some(p) = &pres {
        mixed_polars(p, seeds, &mut inv);
        match agree_on(seeds, "nd_polar_mult", |s| nd_polar_mult(p, s), |nd| (nd.value, nd.predicate)) {
            Ok(nd) => {
                let mut log: Vec<String> = nd.mixed.iter().map(|m| format!("i={}: {}", m.i, m.value)).collect();
                if nd.short_circuited {
                    log.push("polar curve empty by the dimension bound; nothing computed".into());
                }
                inv.push("nd_polar_mult", nd.value as i64, "nd-polar-binomial-sum", &trail, log);
                inv.push(
                    "polar_nonempty",
                    nd.predicate as i64,
                    "nd-polar-nonempty-bound",
                    &[],
                    vec![format!("q = {} against 2n + k - 1 = {}", p.q(), 2 * p.n() + p.k() - 1)],
                );
            }
            Err(e) => inv.fail("nd_polar_mult", &e),
        }
    }

    let mut polars = None;
    match classical_polars(&fiber_matrix, minor_size, PolarScheme::Determinantal, seeds) {
        Ok(ms) => {
            for &(i, v) in &ms {
                inv.push(&format!("m{i}"), v as i64, "polar-multiplicity-determinantal", &trail, vec![]);
            }
            polars = Some(ms);
        }
        Err(e) => inv.fail("polar_multiplicities", &e),
    }
    match classical_polars(&fiber_matrix, minor_size, PolarScheme::Closure, seeds) {
        Ok(ms) => {
            for &(i, v) in &ms {
                inv.push(&format!("m{i}_closure"), v as i64, "polar-multiplicity-closure", &trail, vec![]);
            }
        }
        Err(e) => inv.fail("polar_multiplicities_closure", &e),
    }
    if let Some(ms) = &polars {
        let q = fiber_matrix.ring().nvars() as u64;
        inv.push("kt", kt_formula(0, ms, q - 1) as i64, "kleiman-thorup-polar-sum", &trail, vec![]);
    }

    if let (Some(w), Some(p)) = (&job.weights, &pres) {
        match curve_pair_multiplicity(p, w, seeds) {
            Ok(pair) => {
                let mut log = vec![format!("generic rank {}, curve multiplicity {}", pair.rank, pair.multiplicity)];
                log.push(format!("combination checks {:?}", pair.combination_checks));
                if let Some(a) = &pair.branch_action {
                    log.push(format!("branches related by a cyclic action with characters {a:?}"));
                }
                inv.push("pair", pair.value as i64, "curve-pullback-pair-multiplicity", &trail, log);
                if let Some(nd) = inv.get("nd_polar_mult") {
                    inv.push("e_gamma", pair.value as i64 + nd, "pair-plus-nd-polar", &trail, vec![]);
                }
                if let Some(ms) = &polars {
                    let q = p.q() as u64;
                    let v = kt_formula(pair.value, ms, q - 1);
                    inv.push("kt_with_pair", v as i64, "kleiman-thorup-polar-sum", &trail, vec![]);
                }
            }
            Err(e) => inv.fail("pair", &e),
        }
    } else if job.weights.is_some() {
        inv.fail("pair", &Error::NotUnibranchSupported("weights need a maximal-minor presentation".into()));
    }
    report.absorb(&inv, ctx.cite);
    Ok(report)
}

/// Runs `f` at both seeds and compares `key` of the results (logs may name the seed).
fn agree_on<T, U, F, G>(seeds: &Seeds, what: &str, mut f: F, key: G) -> Result<T, Error>
where
    U: PartialEq + std::fmt::Debug,
    F: FnMut(detpolar::ideals::Seed) -> Result<T, Error>,
    G: Fn(&T) -> U,
{
    let a = f(seeds.first)?;
    let b = f(seeds.second)?;
    if key(&a) != key(&b) {
        return Err(Error::GenericitySuspect {
            what: what.to_string(),
            first: format!("{:?}", key(&a)),
            second: format!("{:?}", key(&b)),
        });
    }
    Ok(a)
}

fn mixed_polars<K: Field>(p: &PresMat<K>, seeds: &Seeds, inv: &mut InvariantReport) {
    let trail = seeds.trail();
    let top = p.d().min(p.n().saturating_sub(1));
    for i in 0..=top {
        let name = mixed_name(p.d() + p.k() - i, i);
        let key = |m: &detpolar::detsing::MixedPolar| (m.value, m.terms.iter().map(|t| t.value).collect::<Vec<_>>());
        match agree_on(seeds, &name, |s| mixed_polar_degree_generic(p, i, s), key) {
            Ok(m) => {
                let mut log: Vec<String> = m
                    .terms
                    .iter()
                    .map(|t| {
                        let comp = match t.codim_complement {
                            Some((e, a)) => format!(", complement codim {a} (expected {e})"),
                            None => ", complement empty".into(),
                        };
                        format!("j={}: {} (rows codim {} expected {}{comp})", t.j, t.value, t.codim_rows.1, t.codim_rows.0)
                    })
                    .collect();
                if m.alternative_bound_differs {
                    log.push("the shorter index bound j <= i + k - 1 would change this value".into());
                }
                log.extend(m.log.iter().cloned());
                inv.push(&name, m.value as i64, "mixed-polar-alternating-sum", &trail, log);
            }
            Err(e) => inv.fail(&name, &e),
        }
    }
}

// ---------------------------------------------------------------- family

pub fn cmd_family(text: &str, opts: &Options) -> Run {
    let job = match parse_job(text) {
        Ok(j) => j,
        Err(e) => return input_error(e),
    };
    let ctx = match setup(opts, job.field.as_deref(), job.order.as_deref(), job.seed, job.second_seed) {
        Ok(c) => c,
        Err(e) => return input_error(e),
    };
    let mode = opts.mode.unwrap_or(Mode::Whitney);
    let res = match ctx.field {
        FieldChoice::Q => family_in(Rationals, &job, text, &ctx, mode, opts.step_cap),
        FieldChoice::Fp(p) => family_in(PrimeField::new(p).unwrap(), &job, text, &ctx, mode, opts.step_cap),
    };
    match res {
        Ok(r) => finish(r),
        Err(e) => input_error(e),
    }
}

fn family_in<K: Field>(field: K, job: &JobFile, text: &str, ctx: &Ctx, mode: Mode, cap: Option<u64>) -> Result<ReportFile, String> {
    let fam = job.family.as_ref().ok_or("family jobs need a [family] section")?;
    let mut params: Vec<&String> = vec![&fam.parameter];
    params.extend(fam.smoothing.iter());
    if job.parameters.len() != params.len() || job.parameters.iter().zip(&params).any(|(a, b)| a != *b) {
        return Err(format!(
            "parameters must be exactly [{}] in that order",
            params.iter().map(|s| format!("\"{s}\"")).collect::<Vec<_>>().join(", ")
        ));
    }
    let role = match fam.role.as_deref().unwrap_or("test") {
        "smoothing" => Role::Smoothing,
        "test" => Role::TestFamily,
        other => return Err(format!("unknown role `{other}`; use smoothing or test")),
    };
    if role == Role::Smoothing && fam.smoothing.is_some() {
        return Err("a smoothing family has one parameter; drop `smoothing`".into());
    }
    let vars: Vec<&String> = job.variables.iter().chain(&job.parameters).collect();
    let ring = make_ring(field, &vars, ctx.order.clone(), cap)?;
    let matrix = parse_matrix(&ring, &job.matrix)?;
    let minor_size = job.minor_size.unwrap_or(matrix.cols());
    let mut spec = FamilySpec::new(matrix.clone(), minor_size, &fam.parameter, fam.smoothing.as_deref(), role)
        .map_err(|e| e.to_string())?;
    if let Some(c) = &fam.combination {
        let f = ring.field();
        let rows: Vec<Vec<K::Elem>> = c.iter().map(|r| r.iter().map(|&v| f.from_i64(v)).collect()).collect();
        if rows.iter().any(|r| r.len() != rows[0].len()) {
            return Err("combination rows have different lengths".into());
        }
        spec = spec.with_combination(DenseMatrix::from_rows(rows)).map_err(|e| e.to_string())?;
    }
    if let Some(chi) = fam.chi_slice {
        spec = spec.with_chi_slice(chi);
    }
    if let Some(g) = &job.germ {
        spec = spec.with_germ(parse_at(&ring, g, "germ")?).map_err(|e| e.to_string())?;
    }
    if mode != Mode::Whitney && job.germ.is_none() {
        return Err("modes af and wf need a `germ`".into());
    }

    let seeds = &ctx.seeds;
    let trail = seeds.trail();
    let mut report = ReportFile::new("family", job.name.clone(), text.as_bytes(), field_label(ctx.field), trail.clone());
    match role {
        Role::Smoothing => {
            let mut inv = InvariantReport::new();
            match polar_over_smoothing(&spec, seeds) {
                Ok(b) => {
                    let log = vec![format!("generic parameter value {}", b.epsilon)];
                    inv.push("polar_total", b.total as i64, "polar-curve-over-base", &trail, log);
                    inv.push("polar_off_origin", b.off_origin as i64, "polar-curve-over-base", &trail, vec![]);
                    inv.push("polar_at_origin", b.at_origin as i64, "polar-curve-over-base", &trail, vec![]);
                }
                Err(e) => inv.fail("polar_over_smoothing", &e),
            }
            let fiber = central(&matrix, 1).map_err(|e| e.to_string())?;
            match classical_polars(&fiber, minor_size, PolarScheme::Determinantal, seeds) {
                Ok(ms) => {
                    for &(i, v) in &ms {
                        inv.push(&format!("m{i}"), v as i64, "polar-multiplicity-determinantal", &trail, vec![]);
                    }
                    let q = fiber.ring().nvars() as u64;
                    inv.push("kt", kt_formula(0, &ms, q - 1) as i64, "kleiman-thorup-polar-sum", &trail, vec![]);
                    if let Some(at) = inv.get("polar_at_origin") {
                        let kt = inv.get("kt").unwrap();
                        inv.push("invariant", kt + at, "multiplicity-polar-combination", &trail, vec![]);
                        let d = ms.iter().map(|m| m.0).max().unwrap_or(0) as u32;
                        if let Some(chi) = fam.chi_slice {
                            match euler_from_polar(at, chi, d) {
                                Ok(e) => inv.push("euler", e, "polar-euler-slice", &[], vec![format!("chi of the slice {chi}")]),
                                Err(e) => inv.fail("euler", &e),
                            }
                        }
                    }
                }
                Err(e) => inv.fail("polar_multiplicities", &e),
            }
            report.absorb(&inv, ctx.cite);
        }
        Role::TestFamily => {
            match whitney_report(&spec, mode, seeds) {
                Ok(v) => report.push_verdict(&v, ctx.cite),
                Err(e) => {
                    let mut inv = InvariantReport::new();
                    inv.fail("whitney_report", &e);
                    report.absorb(&inv, ctx.cite);
                }
            }
            match entry_locus_report(&spec, seeds) {
                Ok(v) => report.push_verdict(&v, ctx.cite),
                Err(e) => {
                    let mut inv = InvariantReport::new();
                    inv.fail("entry_locus_report", &e);
                    report.absorb(&inv, ctx.cite);
                }
            }
        }
    }
    Ok(report)
}

/// Convenience for callers that only need the headline verdict.
pub fn outcome_of(run: &Run, condition: &str) -> Option<String> {
    run.report
        .as_ref()?
        .verdicts
        .iter()
        .find(|v| v.condition == condition)
        .map(|v| v.outcome.clone())
}

// ---------------------------------------------------------------- groebner

/// Standard monomials are listed when there are at most this many.
pub const STAIRCASE_LIMIT: usize = 1000;

pub fn cmd_groebner(text: &str, opts: &Options) -> Run {
    let file = match parse_ideal(text) {
        Ok(f) => f,
        Err(e) => return input_error(e),
    };
    let field = match FieldChoice::parse(opts.field.as_deref().or(file.field.as_deref()).unwrap_or("q")) {
        Ok(f) => f,
        Err(e) => return input_error(e),
    };
    let order = match parse_order(file.order.as_deref()) {
        Ok(o) => o,
        Err(e) => return input_error(e),
    };
    let res = match field {
        FieldChoice::Q => groebner_in(Rationals, &file, text, field, order, opts),
        FieldChoice::Fp(p) => groebner_in(PrimeField::new(p).unwrap(), &file, text, field, order, opts),
    };
    match res {
        Ok(r) => finish(r),
        Err(e) => input_error(e),
    }
}

fn parse_gens<K: Field>(ring: &Ring<K>, gens: &[String], what: &str) -> Result<Ideal<K>, String> {
    let polys = gens
        .iter()
        .enumerate()
        .map(|(i, g)| parse_at(ring, g, &format!("{what}[{}] `{g}`", i + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    Ideal::new(ring, polys).map_err(|e| e.to_string())
}

fn groebner_in<K: Field>(
    field: K,
    file: &IdealFile,
    text: &str,
    choice: FieldChoice,
    order: MonomialOrder,
    opts: &Options,
) -> Result<ReportFile, String> {
    let ring = make_ring(field, &file.variables, order, opts.step_cap)?;
    let ideal = parse_gens(&ring, &file.generators, "generators")?;
    let mut report = ReportFile::new("groebner", file.name.clone(), text.as_bytes(), field_label(choice), vec![]);
    let mut inv = InvariantReport::new();
    let strings = |i: &Ideal<K>| -> Result<Vec<String>, Error> { Ok(i.gb()?.basis().iter().map(|p| p.to_string()).collect()) };
    match ideal.gb() {
        Ok(gb) => {
            let qd = gb.quotient_dim();
            if let QuotientDim::Finite(v) = qd {
                inv.push("quotient_dim", v as i64, "staircase-count", &[], vec![]);
            }
            let krull = gb.krull_dim();
            if let Some(k) = krull {
                inv.push("krull_dim", k as i64, "krull-dimension", &[], vec![]);
            }
            let one = ring.field().one();
            let staircase = gb
                .standard_monomials()
                .filter(|s| s.len() <= STAIRCASE_LIMIT)
                .map(|s| s.into_iter().map(|m| Poly::term(&ring, m, one.clone()).to_string()).collect());
            let mut out = GroebnerOut {
                basis: gb.basis().iter().map(|p| p.to_string()).collect(),
                quotient_dim: qd.to_string(),
                krull_dim: krull,
                staircase,
                saturation: None,
                colon: None,
            };
            if let Some(s) = &file.saturate_by {
                let j = parse_gens(&ring, s, "saturate_by")?;
                match saturate(&ideal, &j).and_then(|r| strings(&r)) {
                    Ok(b) => out.saturation = Some(b),
                    Err(e) => inv.fail("saturation", &e),
                }
            }
            if let Some(c) = &file.colon_by {
                let j = parse_gens(&ring, c, "colon_by")?;
                match ideal_quotient(&ideal, &j).and_then(|r| strings(&r)) {
                    Ok(b) => out.colon = Some(b),
                    Err(e) => inv.fail("colon", &e),
                }
            }
            report.groebner = Some(out);
        }
        Err(e) => inv.fail("groebner_basis", &e),
    }
    report.absorb(&inv, opts.cite);
    Ok(report)
}
