use super::matrix::PolyMatrix;
use super::ops::fresh_name;
use crate::error::{Error, Result};
use crate::groebner::{eliminate_in_ring, Ideal};
use crate::poly::poly::same_ring;
use crate::poly::{Field, MonomialOrder, Poly};

/// Kernel of `z_i -> sum_j A[j,i] T_j` from `R[z]` to `(R/ambient)[T]`. The result
/// lives in the ring of the variables of `R` followed by `z1..zg`.
pub fn rees_relations<K: Field>(a: &PolyMatrix<K>, ambient: &Ideal<K>) -> Result<Ideal<K>> {
    let ring = a.ring();
    if !same_ring(ring, ambient.ring()) {
        return Err(Error::RingMismatch);
    }
    let (p, g) = (a.rows(), a.cols());
    let t_names: Vec<String> = (1..=p).map(|j| fresh_name(ring, &format!("T{j}"))).collect();
    let z_names: Vec<String> = (1..=g).map(|i| fresh_name(ring, &format!("z{i}"))).collect();
    let mut vars = t_names.clone();
    vars.extend(ring.vars().iter().cloned());
    vars.extend(z_names.iter().cloned());
    let big = ring.derive(&vars, MonomialOrder::BlockElim(p))?;

    let mut gens = ambient.to_ring(&big)?.gens().to_vec();
    for i in 0..g {
        let mut rel = Poly::var(&big, p + ring.nvars() + i);
        for j in 0..p {
            let e = a.get(j, i).to_ring(&big)?;
            rel = &rel - &(&e * &Poly::var(&big, j));
        }
        gens.push(rel);
    }
    let drop: Vec<usize> = (0..p).collect();
    let kernel = eliminate_in_ring(&Ideal::new(&big, gens)?, &drop)?;
    let mut out_vars: Vec<String> = ring.vars().to_vec();
    out_vars.extend(z_names);
    let target = ring.derive(&out_vars, MonomialOrder::DegRevLex)?;
    kernel.to_ring(&target)?.gb().map(|gb| gb.ideal())
}
