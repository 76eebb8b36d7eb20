use detpolar::detsing::{mixed_polar_degree_generic, PresMat};
use detpolar::family::{polar_over_smoothing, FamilySpec, Role};
use detpolar::ideals::random::{random_invertible, rng, stream};
use detpolar::ideals::{PolyMatrix, Seed, Seeds};
use detpolar::poly::{Field, MonomialOrder, Poly, PrimeField, Rationals, Ring, RingCtx, DEFAULT_PRIME};

fn presmat(vars: &[&str], rows: &[Vec<&str>]) -> PresMat<Rationals> {
    let r = RingCtx::new(Rationals, vars, MonomialOrder::DegRevLex).unwrap();
    PresMat::new(PolyMatrix::parse(&r, rows).unwrap(), &[] as &[&str]).unwrap()
}

fn corpus() -> Vec<(String, PresMat<Rationals>)> {
    let mut out = Vec::new();
    for l in [2, 4, 5] {
        let xl = format!("x^{l}");
        out.push((format!("X_{l}"), presmat(&["x", "y", "z"], &[vec!["z", "x"], vec!["y", "z"], vec![&xl, "y"]])));
    }
    for k in 1..=5 {
        let e = format!("y + v^{k}");
        out.push((
            format!("F_{k}"),
            presmat(&["x", "y", "z", "w", "v"], &[vec!["w", "z"], vec!["y", "w"], vec!["x", &e]]),
        ));
    }
    out.push((
        "wahl".into(),
        presmat(
            &["x1", "x2", "x3", "x4", "x5"],
            &[vec!["x1", "x2"], vec!["x2", "x3"], vec!["x3", "x4"], vec!["x4", "x1 + x5^2"]],
        ),
    ));
    out
}

#[test]
fn mixed_polars_invariant_under_group_elements() {
    for (name, p) in corpus() {
        let top = p.d().min(p.n() - 1);
        let base: Vec<u64> = (0..=top).map(|i| mixed_polar_degree_generic(&p, i, Seed(1)).unwrap().value).collect();
        for s in [101, 202, 303] {
            let q = p.random_transform(Seed(s), true).unwrap();
            let moved: Vec<u64> = (0..=top).map(|i| mixed_polar_degree_generic(&q, i, Seed(s)).unwrap().value).collect();
            assert_eq!(moved, base, "{name} at seed {s}");
        }
    }
}

/// Linear change of the first `q` variables, the rest fixed.
fn change_coordinates<K: Field>(m: &PolyMatrix<K>, q: usize, seed: u64) -> PolyMatrix<K> {
    let ring: &Ring<K> = m.ring();
    let f = ring.field();
    let a = random_invertible(f, q, &mut rng(Seed(seed), stream::COORDINATES));
    let images: Vec<Poly<K>> = (0..ring.nvars())
        .map(|v| {
            if v >= q {
                return Poly::var(ring, v);
            }
            let mut p = Poly::zero(ring);
            for w in 0..q {
                p = p.checked_add(&Poly::var(ring, w).scale(a.get(v, w))).unwrap();
            }
            p
        })
        .collect();
    m.map(ring, |e| e.compose(ring, &images)).unwrap()
}

#[test]
fn smoothing_polar_invariant_under_coordinate_change() {
    let r = RingCtx::new(
        PrimeField::new(DEFAULT_PRIME).unwrap(),
        &["x1", "x2", "x3", "x4", "x5", "t"],
        MonomialOrder::DegRevLex,
    )
    .unwrap();
    let seeds = Seeds::default();
    let cases: [(&str, Vec<Vec<&str>>, u64); 2] = [
        ("S1", vec![vec!["x1", "x2 + t"], vec!["x2", "x3"], vec!["x3", "x4"], vec!["x4", "x1 + x5^2"]], 8),
        ("S2", vec![vec!["x1", "x2", "x3"], vec!["x2", "x3 + t", "x4"], vec!["x3", "x4", "x1 + x5^2"]], 6),
    ];
    for (name, rows, expected) in cases {
        let m = PolyMatrix::parse(&r, &rows).unwrap();
        let base = polar_over_smoothing(&FamilySpec::new(m.clone(), 2, "t", None, Role::Smoothing).unwrap(), &seeds)
            .unwrap()
            .at_origin;
        assert_eq!(base, expected, "{name}");
        for s in [11, 22, 33] {
            let moved = change_coordinates(&m, 5, s);
            let spec = FamilySpec::new(moved, 2, "t", None, Role::Smoothing).unwrap();
            assert_eq!(polar_over_smoothing(&spec, &seeds).unwrap().at_origin, expected, "{name} at seed {s}");
        }
    }
}
