//! Random small modules for property tests and benchmarks.

use rand::Rng;

use crate::error::Result;
use crate::ff::{Elem, Field, Matrix};

use super::group::GroupData;
use super::module::{monomial_exponents, ModuleRep};

/// Basis of the submodule generated by the given columns.
pub fn generated_submodule(m: &ModuleRep, vectors: &Matrix) -> Matrix {
    let g = m.group();
    let mut all = Matrix::zeros(m.field(), m.dim(), 0);
    for idx in 0..g.algebra_dim() {
        let e = monomial_exponents(g.p, g.r, idx);
        all = all.hstack(&m.monomial_action(&e).mul(vectors).expect("shapes")).expect("rows");
    }
    let cols = all.independent_columns();
    all.select_columns(&cols)
}

/// `A / rad^c A` for the group algebra `A`.
pub fn truncated_free(group: GroupData, field: &Field, c: u32) -> Result<ModuleRep> {
    let free = ModuleRep::free(group, field, 1);
    let high: Vec<Vec<Elem>> = (0..free.dim())
        .filter(|&idx| monomial_exponents(group.p, group.r, idx).iter().sum::<u32>() >= c)
        .map(|idx| {
            let mut v = vec![0; free.dim()];
            v[idx] = 1;
            v
        })
        .collect();
    let basis = Matrix::from_columns(field, free.dim(), &high);
    Ok(free.quotient(&basis)?.0)
}

/// A quotient of `(A / rad^c)^d`, `d <= 2`, by a random cyclic submodule,
/// dualized with probability one half, of dimension between 1 and `max_dim`.
pub fn random_module<R: Rng + ?Sized>(group: GroupData, field: &Field, max_dim: usize, rng: &mut R) -> ModuleRep {
    let q = field.order();
    loop {
        let c = rng.gen_range(1..=group.p + 1);
        let d = rng.gen_range(1..=2);
        let piece = truncated_free(group, field, c).expect("valid group");
        let mut cover = ModuleRep::zero(group, field);
        for _ in 0..d {
            cover = cover.direct_sum(&piece).expect("same group");
        }
        if cover.dim() == 0 {
            continue;
        }
        let gens = rng.gen_range(0..=2);
        let vectors: Vec<Vec<Elem>> =
            (0..gens).map(|_| (0..cover.dim()).map(|_| rng.gen_range(0..q)).collect()).collect();
        let sub = generated_submodule(&cover, &Matrix::from_columns(field, cover.dim(), &vectors));
        let m = cover.quotient(&sub).expect("submodule").0;
        if m.dim() == 0 || m.dim() > max_dim {
            continue;
        }
        return if rng.gen_bool(0.5) { m.dual() } else { m };
    }
}
