//! Named example modules.

use crate::error::{Error, Result};
use crate::ff::{Field, MPoly, Matrix};
use crate::jordan::JordanType;
use crate::modrep::{omega_power, Family, GroupData, ModuleRep, PiPoint};
use crate::strata::PiFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GalleryEntry {
    pub name: &'static str,
    /// Parameters accepted by the builder.
    pub params: &'static str,
    pub summary: &'static str,
}

pub const ENTRIES: &[GalleryEntry] = &[
    GalleryEntry {
        name: "w-module",
        params: "p > 5",
        summary: "13-dimensional module over k[x,y]/(x^p,y^p), generic type 4[3]+[1], 3[3]+2[2] at [1:0] and [0:1]",
    },
    GalleryEntry { name: "cyclic-quotient", params: "p odd", summary: "kE/(x - y^2) for E of rank 2" },
    GalleryEntry {
        name: "gl3-sym2",
        params: "p > 3, subgroup 1|2|3",
        summary: "Sym^2 of the natural GL_3 representation restricted to a maximal elementary abelian subgroup",
    },
    GalleryEntry {
        name: "gln1-standard",
        params: "p, jtype of the p-nilpotent matrix X",
        summary: "natural N-dimensional module probed at the single matrix X",
    },
    GalleryEntry {
        name: "sl2-2-simple",
        params: "p, 0 <= lambda < p^2",
        summary: "simple module S_lambda = S_l0 (x) S_l1^(1) of the second Frobenius kernel of SL_2",
    },
    GalleryEntry {
        name: "heller-of-trivial",
        params: "p, -3 <= n <= 3",
        summary: "Heller shift Omega^n(k) over the rank-2 elementary abelian group",
    },
];

/// Module with generators `[x, y]` on the basis `t0..t3, m0..m4, b0..b3`:
/// `y t_i = m_i`, `x t_i = m_{i+1}`, `x m_0 = b_0`, `y m_j = b_{j-1}` and
/// `x m_j = b_j` for `1 <= j <= 3`, `y m_4 = b_3`.
pub fn w_module(p: u32) -> Result<ModuleRep> {
    if p <= 5 {
        return Err(Error::out_of_range("p", p, "primes > 5"));
    }
    let f = Field::prime(p)?;
    let (t, m, b) = (|i: usize| i, |i: usize| 4 + i, |i: usize| 9 + i);
    let mut x = Matrix::zeros(&f, 13, 13);
    let mut y = Matrix::zeros(&f, 13, 13);
    for i in 0..4 {
        y.set(m(i), t(i), 1);
        x.set(m(i + 1), t(i), 1);
    }
    x.set(b(0), m(0), 1);
    for j in 1..4 {
        y.set(b(j - 1), m(j), 1);
        x.set(b(j), m(j), 1);
    }
    y.set(b(3), m(4), 1);
    let g = GroupData::additive(p, 2)?;
    Ok(ModuleRep::new(g, &f, vec![x, y])?.with_name(format!("w-module-p{p}")))
}

/// `kE/(x - y^2)`: `y` acts on `k[y]/y^p` by multiplication, `x` by `y^2`.
pub fn cyclic_quotient(p: u32) -> Result<ModuleRep> {
    if p == 2 {
        return Err(Error::out_of_range("p", p, "odd primes"));
    }
    let f = Field::prime(p)?;
    let n = p as usize;
    let mut y = Matrix::zeros(&f, n, n);
    for i in 0..n - 1 {
        y.set(i + 1, i, 1);
    }
    let x = y.mul(&y)?;
    let g = GroupData::elementary_abelian(p, 2)?;
    Ok(ModuleRep::new(g, &f, vec![x, y])?.with_name(format!("cyclic-quotient-p{p}")))
}

/// Action of `g` on `Sym^2` of its natural module, basis `e_i e_j` for `i <= j`
/// in lexicographic order.
pub fn sym2(g: &Matrix) -> Matrix {
    let f = g.field();
    let n = g.rows();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&q| q == (a.min(b), a.max(b))).unwrap();
    let mut out = Matrix::zeros(f, pairs.len(), pairs.len());
    for (col, &(i, j)) in pairs.iter().enumerate() {
        // (g e_i)(g e_j) = Σ_{a,b} g_ai g_bj e_a e_b
        for a in 0..n {
            for b in 0..n {
                let c = f.mul(g.get(a, i), g.get(b, j));
                if c != 0 {
                    let row = index(a, b);
                    out.set(row, col, f.add(out.get(row, col), c));
                }
            }
        }
    }
    out
}

/// The two generators `u(1,0)`, `u(0,1)` of one of the three maximal elementary
/// abelian subgroups of upper unitriangular 3x3 matrices.
pub fn gl3_subgroup_generators(p: u32, subgroup: u32) -> Result<[Matrix; 2]> {
    let f = Field::prime(p)?;
    let u = |a: u32, b: u32| -> Matrix {
        let mut m = Matrix::identity(&f, 3);
        match subgroup {
            1 => {
                m.set(0, 1, a);
                m.set(1, 2, a);
                m.set(0, 2, b);
            }
            2 => {
                m.set(0, 1, a);
                m.set(0, 2, b);
            }
            _ => {
                m.set(1, 2, a);
                m.set(0, 2, b);
            }
        }
        m
    };
    if !(1..=3).contains(&subgroup) {
        return Err(Error::out_of_range("subgroup", subgroup, "1..=3"));
    }
    Ok([u(1, 0), u(0, 1)])
}

pub fn gl3_sym2(p: u32, subgroup: u32) -> Result<ModuleRep> {
    if p <= 3 {
        return Err(Error::out_of_range("p", p, "primes > 3"));
    }
    let f = Field::prime(p)?;
    let gens = gl3_subgroup_generators(p, subgroup)?;
    let id = Matrix::identity(&f, 6);
    let x = gens.iter().map(|u| sym2(u).sub(&id)).collect::<Result<Vec<_>>>()?;
    let g = GroupData::elementary_abelian(p, 2)?;
    Ok(ModuleRep::new(g, &f, x)?.with_name(format!("gl3-sym2-p{p}-s{subgroup}")))
}

/// The natural module of `gl_N` evaluated at one p-nilpotent matrix `X`.
pub fn gln1_standard(x: &Matrix) -> Result<(ModuleRep, PiPoint)> {
    let f = x.field().clone();
    if !x.is_square() {
        return Err(Error::DimensionMismatch("X must be square".into()));
    }
    let g = GroupData::new(Family::GlRestricted, f.characteristic(), 1)?;
    let m = ModuleRep::new(g, &f, vec![x.clone()])?.with_name(format!("gln1-standard-n{}", x.rows()));
    let pt = PiPoint::linear(m.field(), &[1])?;
    Ok((m, pt))
}

/// `e_μ` on `Sym^μ` of the standard representation:
/// `x^{μ-i} y^i ↦ i x^{μ-i+1} y^{i-1}`.
pub fn raising_operator(field: &Field, mu: usize) -> Matrix {
    let mut e = Matrix::zeros(field, mu + 1, mu + 1);
    for i in 1..=mu {
        e.set(i - 1, i, field.from_int(i as i64));
    }
    e
}

/// `S_λ = S_{λ0} ⊗ S_{λ1}^{(1)}` with generators `A = e ⊗ 1`, `B = 1 ⊗ e`.
pub fn sl2_2_simple(lambda: u32, p: u32) -> Result<ModuleRep> {
    if lambda >= p * p {
        return Err(Error::out_of_range("lambda", lambda, format!("0..{}", p * p)));
    }
    let f = Field::prime(p)?;
    let (l0, l1) = ((lambda % p) as usize, (lambda / p) as usize);
    let a = raising_operator(&f, l0).kron(&Matrix::identity(&f, l1 + 1))?;
    let b = Matrix::identity(&f, l0 + 1).kron(&raising_operator(&f, l1))?;
    let g = GroupData::new(Family::Sl2SecondFrobenius, p, 2)?;
    Ok(ModuleRep::new(g, &f, vec![a, b])?.with_name(format!("sl2-2-simple-p{p}-l{lambda}")))
}

/// The orbit-representative line `s1 A + s0^p B`, parameters `[s0, s1]`.
pub fn sl2_2_family(p: u32) -> Result<PiFamily> {
    let f = Field::prime(p)?;
    let g = GroupData::new(Family::Sl2SecondFrobenius, p, 2)?;
    let s0p = MPoly::monomial(&f, &[p, 0], 1);
    let s1 = MPoly::monomial(&f, &[0, 1], 1);
    PiFamily::new(g, vec!["s0".into(), "s1".into()], vec![(vec![1, 0], s1), (vec![0, 1], s0p)])
}

/// `Ω^n(k)` over the rank-`r` elementary abelian group.
pub fn heller_of_trivial(n: i32, r: usize, p: u32) -> Result<ModuleRep> {
    if n.abs() > 3 {
        return Err(Error::out_of_range("n", n, "-3..=3"));
    }
    if r != 2 {
        return Err(Error::out_of_range("r", r, "2"));
    }
    let f = Field::prime(p)?;
    let g = GroupData::elementary_abelian(p, r)?;
    Ok(omega_power(&ModuleRep::trivial(g, &f), n)?.with_name(format!("heller-of-trivial-p{p}-n{n}")))
}

/// Nilpotent matrix of a given Jordan type, for [`gln1_standard`].
pub fn nilpotent_of_type(ty: &JordanType) -> Result<Matrix> {
    Ok(ty.nilpotent_matrix(&Field::prime(ty.characteristic())?))
}
