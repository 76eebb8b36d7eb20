use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::poly::sub_mul_terms;
use crate::poly::{Field, Monomial, Poly, Ring};

/// Counts reduction steps against the ring's cap.
pub(crate) struct StepCounter {
    steps: u64,
    cap: u64,
}

impl StepCounter {
    pub(crate) fn new(cap: u64) -> Self {
        StepCounter { steps: 0, cap }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.cap {
            Err(Error::CapExceeded { cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub(crate) fn steps(&self) -> u64 {
        self.steps
    }
}

/// Full reduction of `f` by monic `basis` elements.
pub(crate) fn reduce<K: Field>(
    f: &Poly<K>,
    basis: &[&Poly<K>],
    counter: &mut StepCounter,
) -> Result<Poly<K>> {
    let ring = f.ring().clone();
    let field = ring.field();
    let mut rem: Vec<(Monomial, K::Elem)> = Vec::new();
    let mut p: Vec<(Monomial, K::Elem)> = f.terms().to_vec();
    let mut start = 0;
    while start < p.len() {
        let (m, c) = &p[start];
        let divisor = basis
            .iter()
            .find(|g| g.lm().map(|lm| lm.divides(m)).unwrap_or(false));
        match divisor {
            Some(g) => {
                counter.tick()?;
                let q = g.lm().unwrap().quotient_of(m).unwrap();
                let lc = g.lc().unwrap();
                let coeff = if field.is_one(lc) { c.clone() } else { field.div(c, lc) };
                // the leading terms cancel exactly
                p = sub_mul_terms(&ring, &p[start + 1..], &g.terms()[1..], &q, &coeff);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    Ok(Poly::from_sorted(&ring, rem))
}

fn s_poly<K: Field>(f: &Poly<K>, g: &Poly<K>) -> Poly<K> {
    let ring = f.ring();
    let field = ring.field();
    let (fm, fc) = f.leading_term().unwrap();
    let (gm, gc) = g.leading_term().unwrap();
    let l = fm.lcm(gm);
    let uf = fm.quotient_of(&l).unwrap();
    let ug = gm.quotient_of(&l).unwrap();
    let a = f.terms()[1..]
        .iter()
        .map(|(m, c)| (m.mul(&uf), field.div(c, fc)))
        .collect::<Vec<_>>();
    let coeff = field.inv(gc).unwrap();
    Poly::from_sorted(ring, sub_mul_terms(ring, &a, &g.terms()[1..], &ug, &coeff))
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn better<K: Field>(ring: &Ring<K>, a: &Pair, b: &Pair) -> bool {
    let da = a.lcm.degree();
    let db = b.lcm.degree();
    if da != db {
        return da < db;
    }
    match ring.cmp(&a.lcm, &b.lcm) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => (a.j, a.i) < (b.j, b.i),
    }
}

/// Gebauer-Moeller update after adding `polys[h]`.
fn update<K: Field>(polys: &[Poly<K>], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lh = polys[h].lm().unwrap().clone();
    let mut c: Vec<Pair> = active
        .iter()
        .map(|&g| Pair {
            i: g,
            j: h,
            lcm: polys[g].lm().unwrap().lcm(&lh),
        })
        .collect();
    let mut d: Vec<Pair> = Vec::new();
    while let Some(p) = c.pop() {
        let coprime = polys[p.i].lm().unwrap().coprime(&lh);
        let dominated = || {
            c.iter().any(|q| q.lcm.divides(&p.lcm)) || d.iter().any(|q| q.lcm.divides(&p.lcm))
        };
        if coprime || !dominated() {
            d.push(p);
        }
    }
    let e: Vec<Pair> = d
        .into_iter()
        .filter(|p| !polys[p.i].lm().unwrap().coprime(&lh))
        .collect();
    pairs.retain(|p| {
        if !lh.divides(&p.lcm) {
            return true;
        }
        let l1 = polys[p.i].lm().unwrap().lcm(&lh);
        let l2 = polys[p.j].lm().unwrap().lcm(&lh);
        l1 == p.lcm || l2 == p.lcm
    });
    pairs.extend(e);
    active.retain(|&g| !lh.divides(polys[g].lm().unwrap()));
    active.push(h);
}

/// Buchberger's algorithm with the normal selection strategy. Returns the reduced
/// basis sorted by increasing leading monomial.
pub(crate) fn groebner_basis<K: Field>(ring: &Ring<K>, gens: &[Poly<K>]) -> Result<Vec<Poly<K>>> {
    let mut counter = StepCounter::new(ring.limits().step_cap);
    let trace = ring.limits().trace;
    let mut polys: Vec<Poly<K>> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Poly<K>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    inputs.sort_by(|a, b| ring.cmp(a.lm().unwrap(), b.lm().unwrap()));
    for f in inputs {
        let basis: Vec<&Poly<K>> = active.iter().map(|&i| &polys[i]).collect();
        let r = reduce(&f, &basis, &mut counter)?;
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(vec![Poly::one(ring)]);
        }
        polys.push(r.monic());
        let h = polys.len() - 1;
        update(&polys, &mut active, &mut pairs, h);
    }

    while !pairs.is_empty() {
        let mut best = 0;
        for k in 1..pairs.len() {
            if better(ring, &pairs[k], &pairs[best]) {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let s = s_poly(&polys[pair.i], &polys[pair.j]);
        let basis: Vec<&Poly<K>> = active.iter().map(|&i| &polys[i]).collect();
        let r = reduce(&s, &basis, &mut counter)?;
        if trace {
            eprintln!(
                "pair ({}, {}) lcm degree {} -> {} terms, {} pairs left, {} steps",
                pair.i,
                pair.j,
                pair.lcm.degree(),
                r.len(),
                pairs.len(),
                counter.steps()
            );
        }
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(vec![Poly::one(ring)]);
        }
        polys.push(r.monic());
        let h = polys.len() - 1;
        update(&polys, &mut active, &mut pairs, h);
    }

    // the active set is minimal; tail-reduce each element against the others
    let mut minimal: Vec<Poly<K>> = active.iter().map(|&i| polys[i].clone()).collect();
    minimal.sort_by(|a, b| ring.cmp(a.lm().unwrap(), b.lm().unwrap()));
    let mut reduced = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<&Poly<K>> = minimal
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, p)| p)
            .collect();
        let lead = Poly::from_sorted(ring, vec![g.terms()[0].clone()]);
        let tail = Poly::from_sorted(ring, g.terms()[1..].to_vec());
        let tail = reduce(&tail, &others, &mut counter)?;
        reduced.push(&lead + &tail);
    }
    Ok(reduced)
}
