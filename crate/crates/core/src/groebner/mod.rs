//! Ideals, reduced Groebner bases, normal forms, elimination and quotient dimensions.

mod buchberger;

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::poly::same_ring;
use crate::poly::{parse_poly, Field, Monomial, MonomialOrder, Poly, Ring};

pub(crate) use buchberger::StepCounter;

/// Finitely generated ideal; zero generators are dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal<K: Field> {
    ring: Ring<K>,
    gens: Vec<Poly<K>>,
}

impl<K: Field> Ideal<K> {
    pub fn new(ring: &Ring<K>, gens: Vec<Poly<K>>) -> Result<Self> {
        for g in &gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ring: &Ring<K>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &Ring<K>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Poly::one(ring)],
        }
    }

    /// The maximal ideal of the origin, generated by all variables.
    pub fn maximal(ring: &Ring<K>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: (0..ring.nvars()).map(|i| Poly::var(ring, i)).collect(),
        }
    }

    pub fn parse<S: AsRef<str>>(ring: &Ring<K>, gens: &[S]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| parse_poly(s.as_ref(), ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly<K>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Ideal {
            ring: self.ring.clone(),
            gens,
        })
    }

    pub fn with_gens(&self, extra: &[Poly<K>]) -> Result<Self> {
        self.sum(&Ideal::new(&self.ring, extra.to_vec())?)
    }

    /// Moves every generator into `target` (matching variables by name).
    pub fn to_ring(&self, target: &Ring<K>) -> Result<Self> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.to_ring(target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// Reduced Groebner basis in the ring's own ordering.
    pub fn gb(&self) -> Result<ReducedGB<K>> {
        buchberger(self, self.ring.order().clone())
    }
}

impl<K: Field> fmt::Display for Ideal<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Reduced Groebner basis: monic, auto-reduced, sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedGB<K: Field> {
    ring: Ring<K>,
    basis: Vec<Poly<K>>,
}

/// Vector-space dimension of a quotient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

impl QuotientDim {
    pub fn finite(self) -> Option<u64> {
        match self {
            QuotientDim::Finite(v) => Some(v),
            QuotientDim::Infinite => None,
        }
    }
}

impl fmt::Display for QuotientDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientDim::Finite(v) => write!(f, "{v}"),
            QuotientDim::Infinite => write!(f, "INFINITE"),
        }
    }
}

impl<K: Field> ReducedGB<K> {
    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn basis(&self) -> &[Poly<K>] {
        &self.basis
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    /// Leading monomials (minimal generators of the initial ideal).
    pub fn staircase(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.lm().unwrap().clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn ideal(&self) -> Ideal<K> {
        Ideal {
            ring: self.ring.clone(),
            gens: self.basis.clone(),
        }
    }

    pub fn normal_form(&self, f: &Poly<K>) -> Result<Poly<K>> {
        normal_form(f, self)
    }

    pub fn contains(&self, f: &Poly<K>) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }

    /// Whether every generator of `other` lies in this ideal.
    pub fn contains_ideal(&self, other: &Ideal<K>) -> Result<bool> {
        for g in other.gens() {
            if !self.contains(&g.to_ring(&self.ring)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn in_staircase(&self, exps: &[u32]) -> bool {
        self.basis
            .iter()
            .any(|g| g.lm().unwrap().exps().iter().zip(exps).all(|(a, b)| a <= b))
    }

    /// Whether each variable has a pure power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        let n = self.ring.nvars();
        (0..n).all(|i| {
            self.basis.iter().any(|g| {
                let e = g.lm().unwrap().exps();
                e[i] > 0 && e.iter().enumerate().all(|(j, &x)| j == i || x == 0)
            })
        })
    }

    /// Monomials outside the staircase, sorted increasingly; `None` when infinite.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return None;
        }
        let n = self.ring.nvars();
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        self.walk(0, &mut exps, &mut |e| out.push(Monomial::from_exps(e)));
        out.sort_by(|a, b| self.ring.cmp(a, b));
        Some(out)
    }

    fn walk(&self, v: usize, exps: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if v == exps.len() {
            visit(exps);
            return;
        }
        loop {
            if self.in_staircase(exps) {
                break;
            }
            self.walk(v + 1, exps, visit);
            exps[v] += 1;
        }
        exps[v] = 0;
    }

    pub fn quotient_dim(&self) -> QuotientDim {
        quotient_dim(self)
    }

    /// Krull dimension of ring/I; `None` for the unit ideal.
    pub fn krull_dim(&self) -> Option<usize> {
        krull_dim(self)
    }
}

fn check_same_vars<K: Field>(a: &Ring<K>, b: &Ring<K>) -> Result<()> {
    if same_ring(a, b) {
        return Ok(());
    }
    if a.vars() == b.vars() && a.field() == b.field() {
        Err(Error::OrderingMismatch)
    } else {
        Err(Error::RingMismatch)
    }
}

/// Remainder of `f` on division by the basis.
pub fn normal_form<K: Field>(f: &Poly<K>, gb: &ReducedGB<K>) -> Result<Poly<K>> {
    check_same_vars(f.ring(), &gb.ring)?;
    let basis: Vec<&Poly<K>> = gb.basis.iter().collect();
    let mut counter = StepCounter::new(gb.ring.limits().step_cap);
    buchberger::reduce(f, &basis, &mut counter)
}

/// Reduced Groebner basis of `ideal` in `order`. When the order differs from the
/// ring's, the basis lives in a copy of the ring carrying `order`.
pub fn buchberger<K: Field>(ideal: &Ideal<K>, order: MonomialOrder) -> Result<ReducedGB<K>> {
    let ring = if *ideal.ring.order() == order {
        ideal.ring.clone()
    } else {
        ideal.ring.with_order(order)?
    };
    let gens = ideal
        .gens
        .iter()
        .map(|g| g.to_ring(&ring))
        .collect::<Result<Vec<_>>>()?;
    let basis = buchberger::groebner_basis(&ring, &gens)?;
    Ok(ReducedGB { ring, basis })
}

/// Number of standard monomials, or `Infinite` when the quotient is not finite dimensional.
pub fn quotient_dim<K: Field>(gb: &ReducedGB<K>) -> QuotientDim {
    if gb.is_unit() {
        return QuotientDim::Finite(0);
    }
    if !gb.is_zero_dimensional() {
        return QuotientDim::Infinite;
    }
    let mut count = 0u64;
    let mut exps = vec![0u32; gb.ring.nvars()];
    gb.walk(0, &mut exps, &mut |_| count += 1);
    QuotientDim::Finite(count)
}

/// Largest number of variables spanning no leading monomial.
pub fn krull_dim<K: Field>(gb: &ReducedGB<K>) -> Option<usize> {
    if gb.is_unit() {
        return None;
    }
    let masks: Vec<Vec<usize>> = gb
        .basis
        .iter()
        .map(|g| {
            g.lm()
                .unwrap()
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let n = gb.ring.nvars();
    let mut chosen = vec![false; n];
    let mut best = 0;
    fn search(v: usize, size: usize, n: usize, chosen: &mut Vec<bool>, masks: &[Vec<usize>], best: &mut usize) {
        if size + (n - v) <= *best {
            return;
        }
        if v == n {
            *best = size;
            return;
        }
        chosen[v] = true;
        let ok = masks.iter().all(|m| !m.iter().all(|&i| chosen[i]));
        if ok {
            search(v + 1, size + 1, n, chosen, masks, best);
        }
        chosen[v] = false;
        search(v + 1, size, n, chosen, masks, best);
    }
    search(0, 0, n, &mut chosen, &masks, &mut best);
    Some(best)
}

/// Restriction of an ordering to a subset of variable positions.
pub(crate) fn restrict_order(order: &MonomialOrder, kept: &[usize]) -> MonomialOrder {
    match order {
        MonomialOrder::Lex => MonomialOrder::Lex,
        MonomialOrder::DegRevLex => MonomialOrder::DegRevLex,
        MonomialOrder::BlockElim(s) => {
            let split = kept.iter().filter(|&&i| i < *s).count();
            if split == 0 || split == kept.len() {
                MonomialOrder::DegRevLex
            } else {
                MonomialOrder::BlockElim(split)
            }
        }
        MonomialOrder::Weighted(w) => MonomialOrder::Weighted(kept.iter().map(|&i| w[i]).collect()),
    }
}

/// Generators of `ideal` intersected with the subring of the kept variables,
/// returned in the original ring.
pub(crate) fn eliminate_in_ring<K: Field>(ideal: &Ideal<K>, drop: &[usize]) -> Result<Ideal<K>> {
    let ring = &ideal.ring;
    if drop.is_empty() {
        return Ok(ideal.gb()?.ideal());
    }
    let kept: Vec<usize> = (0..ring.nvars()).filter(|i| !drop.contains(i)).collect();
    let mut order_vars: Vec<String> = drop.iter().map(|&i| ring.vars()[i].clone()).collect();
    order_vars.extend(kept.iter().map(|&i| ring.vars()[i].clone()));
    let elim_ring = ring.derive(&order_vars, MonomialOrder::BlockElim(drop.len()))?;
    let elim = ideal.to_ring(&elim_ring)?;
    let gb = elim.gb()?;
    let gens = gb
        .basis
        .iter()
        .filter(|g| (0..drop.len()).all(|i| !g.uses_var(i)))
        .map(|g| g.to_ring(ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// Intersection of `ideal` with the polynomial subring omitting `drop`; the result
/// lives in a ring over the remaining variables.
pub fn eliminate<K: Field, S: AsRef<str>>(ideal: &Ideal<K>, drop: &[S]) -> Result<Ideal<K>> {
    let ring = &ideal.ring;
    let mut idx = Vec::new();
    for d in drop {
        let i = ring.var_index_checked(d.as_ref())?;
        if !idx.contains(&i) {
            idx.push(i);
        }
    }
    let kept: Vec<usize> = (0..ring.nvars()).filter(|i| !idx.contains(i)).collect();
    let kept_names: Vec<String> = kept.iter().map(|&i| ring.vars()[i].clone()).collect();
    let sub = ring.derive(&kept_names, restrict_order(ring.order(), &kept))?;
    let inner = eliminate_in_ring(ideal, &idx)?;
    inner.to_ring(&sub)
}
