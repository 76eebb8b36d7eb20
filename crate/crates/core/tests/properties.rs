use detpolar::family::covering_check;
use detpolar::groebner::{Ideal, QuotientDim};
use detpolar::ideals::{fitting_ideal, saturate, PolyMatrix};
use detpolar::poly::{Field, Monomial, MonomialOrder, Poly, Rationals, Ring, RingCtx};
use proptest::prelude::*;

fn ring(nvars: usize) -> Ring<Rationals> {
    let names: Vec<String> = (0..nvars).map(|i| format!("x{i}")).collect();
    RingCtx::new(Rationals, &names, MonomialOrder::DegRevLex).unwrap()
}

type Terms = Vec<(Vec<u32>, i64)>;

fn terms(nvars: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = Terms> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), -5i64..=5), 1..=max_terms)
}

fn poly(r: &Ring<Rationals>, t: &Terms) -> Poly<Rationals> {
    let f = r.field();
    Poly::from_terms(r, t.iter().map(|(e, c)| (Monomial::from_exps(e), f.from_i64(*c))).collect()).unwrap()
}

fn small_ideal() -> impl Strategy<Value = (usize, Vec<Terms>, Terms, Vec<Terms>)> {
    (2usize..=3).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(terms(n, 3, 2), 1..=3),
            terms(n, 5, 3),
            prop::collection::vec(terms(n, 2, 1), 3),
        )
    })
}

/// Monomials below the pure powers that no generator divides.
fn box_count(powers: &[u32], gens: &[Vec<u32>]) -> u64 {
    let n = powers.len();
    let mut count = 0;
    let mut e = vec![0u32; n];
    'outer: loop {
        if !gens.iter().any(|g| g.iter().zip(&e).all(|(a, b)| a <= b)) {
            count += 1;
        }
        for i in 0..n {
            e[i] += 1;
            if e[i] < powers[i] {
                continue 'outer;
            }
            e[i] = 0;
        }
        return count;
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn normal_form_idempotent_and_membership((n, gens, f, cofactors) in small_ideal()) {
        let r = ring(n);
        let gens: Vec<_> = gens.iter().map(|g| poly(&r, g)).collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let gb = ideal.gb().unwrap();
        let f = poly(&r, &f);
        let nf = gb.normal_form(&f).unwrap();
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(gb.contains(&f.checked_sub(&nf).unwrap()).unwrap());
        for (m, _) in nf.terms() {
            prop_assert!(gb.basis().iter().all(|g| !g.lm().unwrap().divides(m)));
        }
        let mut combo = Poly::zero(&r);
        for (g, h) in gens.iter().zip(&cofactors) {
            prop_assert!(gb.contains(g).unwrap());
            combo = combo.checked_add(&g.checked_mul(&poly(&r, h)).unwrap()).unwrap();
        }
        prop_assert!(gb.normal_form(&combo).unwrap().is_zero());
    }

    #[test]
    fn staircase_count_of_monomial_ideals(
        n in 1usize..=3,
        powers in prop::collection::vec(1u32..=4, 3),
        extra in prop::collection::vec(prop::collection::vec(0u32..=3, 3), 0..=4),
    ) {
        let r = ring(n);
        let one = r.field().one();
        let mut gens: Vec<Vec<u32>> = (0..n).map(|i| {
            let mut e = vec![0; n];
            e[i] = powers[i];
            e
        }).collect();
        gens.extend(extra.iter().map(|e| e[..n].to_vec()).filter(|e| e.iter().any(|&x| x > 0)));
        let ideal = Ideal::new(&r, gens.iter().map(|e| Poly::term(&r, Monomial::from_exps(e), one.clone())).collect()).unwrap();
        let count = box_count(&powers[..n], &gens);
        prop_assert_eq!(ideal.gb().unwrap().quotient_dim(), QuotientDim::Finite(count));
    }

    #[test]
    fn saturation_idempotent((n, gens, _f, _c) in small_ideal(), var in 0usize..3) {
        let r = ring(n);
        let ideal = Ideal::new(&r, gens.iter().map(|g| poly(&r, g)).collect()).unwrap();
        let j = Ideal::new(&r, vec![Poly::var(&r, var % n)]).unwrap();
        let s1 = saturate(&ideal, &j).unwrap();
        let s2 = saturate(&s1, &j).unwrap();
        let (g1, g2) = (s1.gb().unwrap(), s2.gb().unwrap());
        prop_assert!(g1.contains_ideal(&ideal).unwrap());
        prop_assert_eq!(g1.basis(), g2.basis());
    }

    #[test]
    fn fitting_chain(entries in prop::collection::vec(terms(3, 2, 2), 6)) {
        let r = ring(3);
        let m = PolyMatrix::new(&r, 3, 2, entries.iter().map(|t| poly(&r, t)).collect()).unwrap();
        for j in 0..3 {
            let small = fitting_ideal(&m, j);
            let big = fitting_ideal(&m, j + 1);
            prop_assert!(big.gb().unwrap().contains_ideal(&small).unwrap(), "Fitt_{} not inside Fitt_{}", j, j + 1);
        }
    }

    #[test]
    fn covering_check_of_equal_values(a in 0u64..1_000_000, b in 0u64..1_000_000) {
        prop_assert_eq!(covering_check(a, a).unwrap(), 0);
        let (hi, lo) = (a.max(b), a.min(b));
        prop_assert_eq!(covering_check(hi, lo).unwrap(), hi - lo);
        if a != b {
            prop_assert!(covering_check(lo, hi).is_err());
        }
    }
}
