use crate::error::{Error, Result};
use crate::ff::Matrix;

use super::module::{monomial_exponents, ModuleRep};

/// `0 -> Ω(M) -> P -> M -> 0` with `P` a minimal free cover.
#[derive(Clone, Debug)]
pub struct HellerShift {
    pub module: ModuleRep,
    /// Columns: the basis of `Ω(M)` inside `P`.
    pub inclusion: Matrix,
    pub cover: ModuleRep,
    /// `P -> M`.
    pub projection: Matrix,
    /// Number of free summands of `P`.
    pub free_rank: usize,
}

fn check_supported(m: &ModuleRep) -> Result<()> {
    if !m.group().family.supports_heller() {
        return Err(Error::UnsupportedFamily(format!(
            "Heller shifts need an elementary abelian or additive infinitesimal group, got {}",
            m.group().family
        )));
    }
    Ok(())
}

/// Minimal free cover `P -> M`: one free generator per basis vector of `M / rad M`.
pub fn free_cover(m: &ModuleRep) -> Result<(ModuleRep, Matrix)> {
    check_supported(m)?;
    let f = m.field();
    let g = *m.group();
    let rad = m.radical_basis();
    let aug = rad.hstack(&Matrix::identity(f, m.dim()))?;
    let tops: Vec<usize> =
        aug.independent_columns().into_iter().filter(|&c| c >= rad.cols()).map(|c| c - rad.cols()).collect();
    let n = g.algebra_dim();
    let cover = ModuleRep::free(g, f, tops.len());
    let mut proj = Matrix::zeros(f, m.dim(), cover.dim());
    for (k, &top) in tops.iter().enumerate() {
        for idx in 0..n {
            let e = monomial_exponents(g.p, g.r, idx);
            let v = m.monomial_action(&e).column(top);
            for (i, &x) in v.iter().enumerate() {
                proj.set(i, k * n + idx, x);
            }
        }
    }
    Ok((cover, proj))
}

/// `Ω(M)`, the kernel of the minimal free cover.
pub fn omega(m: &ModuleRep) -> Result<HellerShift> {
    let (cover, projection) = free_cover(m)?;
    let inclusion = projection.kernel();
    let module = cover.submodule(&inclusion)?;
    let free_rank = cover.dim() / m.group().algebra_dim();
    Ok(HellerShift { module, inclusion, cover, projection, free_rank })
}

/// `Ω^{-1}(M) = Ω(M^#)^#`.
pub fn omega_inverse(m: &ModuleRep) -> Result<ModuleRep> {
    Ok(omega(&m.dual())?.module.dual())
}

/// `Ω^n(M)` for any integer `n`.
pub fn omega_power(m: &ModuleRep, n: i32) -> Result<ModuleRep> {
    let mut cur = m.clone();
    for _ in 0..n.unsigned_abs() {
        cur = if n > 0 { omega(&cur)?.module } else { omega_inverse(&cur)? };
    }
    Ok(cur)
}
