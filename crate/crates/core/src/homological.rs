//! Ext classes as stable maps out of Heller shifts, extension modules,
//! Carlson modules and zero loci.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ff::{Elem, Field, Matrix};
use crate::jordan::JordanType;
use crate::modrep::json::{matrix_from_value, matrix_to_value};
use crate::modrep::{monomial_exponents, omega, GroupData, HellerShift, ModuleRep, PiPoint};
use crate::strata::{self, Options, PiFamily};

/// Largest degree for which Heller shifts are formed.
pub const MAX_DEGREE: usize = 4;

/// A class in `Ext^n(Q, M)`, stored as a homomorphism `Ω^n Q -> M`.
#[derive(Clone, Debug)]
pub struct CohomClass {
    degree: usize,
    base: ModuleRep,
    target: ModuleRep,
    /// `Ω^{n-1} Q`.
    shifted: ModuleRep,
    /// `0 -> Ω^n Q -> P -> Ω^{n-1} Q -> 0`.
    shift: HellerShift,
    hom: Matrix,
}

fn same_module(a: &ModuleRep, b: &ModuleRep) -> bool {
    a.group() == b.group() && a.field() == b.field() && a.generators() == b.generators()
}

fn is_trivial(m: &ModuleRep) -> bool {
    m.dim() == 1 && m.generators().iter().all(Matrix::is_zero)
}

fn shift_chain(base: &ModuleRep, degree: usize) -> Result<(ModuleRep, HellerShift)> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::out_of_range("degree", degree, format!("1..={MAX_DEGREE}")));
    }
    let mut shifted = base.clone();
    let mut shift = omega(&shifted)?;
    for _ in 1..degree {
        shifted = shift.module.clone();
        shift = omega(&shifted)?;
    }
    Ok((shifted, shift))
}

impl CohomClass {
    pub fn new(degree: usize, base: &ModuleRep, target: &ModuleRep, hom: Matrix) -> Result<Self> {
        if base.group() != target.group() || base.field() != target.field() {
            return Err(Error::GroupMismatch("base and target must share group and field".into()));
        }
        let (shifted, shift) = shift_chain(base, degree)?;
        if !shift.module.is_homomorphism_to(target, &hom)? {
            return Err(Error::NotHomomorphism("the map does not commute with the generator actions".into()));
        }
        Ok(CohomClass { degree, base: base.clone(), target: target.clone(), shifted, shift, hom })
    }

    pub fn zero(degree: usize, base: &ModuleRep, target: &ModuleRep) -> Result<Self> {
        let (shifted, shift) = shift_chain(base, degree)?;
        let hom = Matrix::zeros(target.field(), target.dim(), shift.module.dim());
        Self::new_parts(degree, base, target, shifted, shift, hom)
    }

    fn new_parts(
        degree: usize,
        base: &ModuleRep,
        target: &ModuleRep,
        shifted: ModuleRep,
        shift: HellerShift,
        hom: Matrix,
    ) -> Result<Self> {
        if base.group() != target.group() || base.field() != target.field() {
            return Err(Error::GroupMismatch("base and target must share group and field".into()));
        }
        Ok(CohomClass { degree, base: base.clone(), target: target.clone(), shifted, shift, hom })
    }

    /// The class in `H^1(G, k)` sending `x_i ∈ Ω k = rad A` to `c_i` and
    /// `rad^2 A` to zero.
    pub fn from_linear_form(group: GroupData, field: &Field, coeffs: &[Elem]) -> Result<Self> {
        if coeffs.len() != group.r {
            return Err(Error::DimensionMismatch(format!("{} coefficients for {} generators", coeffs.len(), group.r)));
        }
        let k = ModuleRep::trivial(group, field);
        let (shifted, shift) = shift_chain(&k, 1)?;
        let mut hom = Matrix::zeros(field, 1, shift.module.dim());
        for s in 0..shift.module.dim() {
            let mut v = 0;
            for idx in 0..shift.cover.dim() {
                let e = monomial_exponents(group.p, group.r, idx);
                if e.iter().sum::<u32>() == 1 {
                    let i = e.iter().position(|&x| x == 1).unwrap();
                    v = field.add(v, field.mul(coeffs[i], shift.inclusion.get(idx, s)));
                }
            }
            hom.set(0, s, v);
        }
        Self::new_parts(1, &k, &k, shifted, shift, hom)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> &ModuleRep {
        &self.base
    }

    pub fn target(&self) -> &ModuleRep {
        &self.target
    }

    /// `Ω^n Q`.
    pub fn source(&self) -> &ModuleRep {
        &self.shift.module
    }

    /// `Ω^{n-1} Q`, the quotient of the extension module.
    pub fn shifted_base(&self) -> &ModuleRep {
        &self.shifted
    }

    pub fn shift(&self) -> &HellerShift {
        &self.shift
    }

    pub fn hom(&self) -> &Matrix {
        &self.hom
    }

    pub fn is_zero(&self) -> bool {
        self.hom.is_zero()
    }

    /// Whether the map factors through the projective cover of `Ω^{n-1} Q`.
    pub fn is_stably_zero(&self) -> Result<bool> {
        let phom = projective_homs(&self.shift, &self.target)?;
        let span = stack_vectors(self.target.field(), &phom);
        Ok(span.rank() == span.hstack(&vectorize(&self.hom))?.rank())
    }

    fn check_compatible(&self, other: &CohomClass) -> Result<()> {
        if self.degree != other.degree || !same_module(&self.base, &other.base) {
            return Err(Error::GroupMismatch("classes live in different Ext groups".into()));
        }
        Ok(())
    }

    /// `Σ c_i ζ_i` for classes in the same Ext group.
    pub fn linear_combination(classes: &[CohomClass], coeffs: &[Elem]) -> Result<CohomClass> {
        let first = classes.first().ok_or_else(|| Error::DimensionMismatch("no classes".into()))?;
        if classes.len() != coeffs.len() {
            return Err(Error::DimensionMismatch("one coefficient per class".into()));
        }
        let mut hom = Matrix::zeros(first.target.field(), first.hom.rows(), first.hom.cols());
        for (c, &a) in classes.iter().zip(coeffs) {
            first.check_compatible(c)?;
            if !same_module(&first.target, &c.target) {
                return Err(Error::GroupMismatch("classes have different targets".into()));
            }
            hom = hom.add(&c.hom.scale(a))?;
        }
        Ok(CohomClass { hom, ..first.clone() })
    }

    /// `⊕ ζ_i` in `Ext^n(Q, ⊕ M_i)`.
    pub fn direct_sum(classes: &[CohomClass]) -> Result<CohomClass> {
        let first = classes.first().ok_or_else(|| Error::DimensionMismatch("no classes".into()))?;
        let mut target = ModuleRep::zero(*first.target.group(), first.target.field());
        let mut hom = Matrix::zeros(first.target.field(), 0, first.hom.cols());
        for c in classes {
            first.check_compatible(c)?;
            target = target.direct_sum(&c.target)?;
            hom = hom.vstack(&c.hom)?;
        }
        Ok(CohomClass { target, hom, ..first.clone() })
    }

    pub fn to_json(&self) -> Value {
        let module = |m: &ModuleRep| serde_json::from_str::<Value>(&m.to_json()).expect("module json");
        json!({
            "degree": self.degree,
            "base": module(&self.base),
            "target": module(&self.target),
            "hom": matrix_to_value(&self.hom),
        })
    }

    pub fn from_json(text: &str) -> Result<CohomClass> {
        let v: Value = serde_json::from_str(text)?;
        let obj = v.as_object().ok_or_else(|| Error::Parse("class must be a JSON object".into()))?;
        for key in obj.keys() {
            if !["degree", "base", "target", "hom"].contains(&key.as_str()) {
                return Err(Error::Parse(format!("unknown field {key}")));
            }
        }
        let field = |k: &str| obj.get(k).ok_or_else(|| Error::Parse(format!("missing field {k}")));
        let degree = field("degree")?
            .as_u64()
            .ok_or_else(|| Error::Parse("degree must be a non-negative integer".into()))? as usize;
        let base = ModuleRep::from_json(&field("base")?.to_string())?;
        let target = ModuleRep::from_json(&field("target")?.to_string())?;
        base.validate()?;
        target.validate()?;
        let (shifted, shift) = shift_chain(&base, degree)?;
        let hom = matrix_from_value(target.field(), target.dim(), shift.module.dim(), field("hom")?)?;
        if !shift.module.is_homomorphism_to(&target, &hom)? {
            return Err(Error::NotHomomorphism("the map does not commute with the generator actions".into()));
        }
        Ok(CohomClass { degree, base, target, shifted, shift, hom })
    }
}

fn vectorize(h: &Matrix) -> Matrix {
    Matrix::from_columns(h.field(), h.rows() * h.cols(), &[h.data().to_vec()])
}

fn stack_vectors(field: &Field, homs: &[Matrix]) -> Matrix {
    let len = homs.first().map_or(0, |h| h.rows() * h.cols());
    let cols: Vec<Vec<Elem>> = homs.iter().map(|h| h.data().to_vec()).collect();
    Matrix::from_columns(field, len, &cols)
}

/// Basis of `Hom_A(a, b)` as `b.dim x a.dim` matrices.
pub fn hom_basis(a: &ModuleRep, b: &ModuleRep) -> Result<Vec<Matrix>> {
    if a.group() != b.group() || a.field() != b.field() {
        return Err(Error::GroupMismatch("Hom needs modules over the same group and field".into()));
    }
    let f = a.field();
    let (m, n) = (b.dim(), a.dim());
    let vars = m * n;
    let mut sys = Matrix::zeros(f, a.generators().len() * vars, vars);
    for (g, (xa, xb)) in a.generators().iter().zip(b.generators()).enumerate() {
        // (H X_a - X_b H)[i][j]
        for i in 0..m {
            for j in 0..n {
                let row = g * vars + i * n + j;
                for c in 0..n {
                    let v = xa.get(c, j);
                    if v != 0 {
                        let col = i * n + c;
                        sys.set(row, col, f.add(sys.get(row, col), v));
                    }
                }
                for c in 0..m {
                    let v = xb.get(i, c);
                    if v != 0 {
                        let col = c * n + j;
                        sys.set(row, col, f.sub(sys.get(row, col), v));
                    }
                }
            }
        }
    }
    Ok(sys.kernel_basis().into_iter().map(|v| Matrix::from_elems(f, m, n, v).expect("shape")).collect())
}

/// Spanning set of the maps `Ω(N) -> M` that extend to the cover `P -> N`.
fn projective_homs(shift: &HellerShift, target: &ModuleRep) -> Result<Vec<Matrix>> {
    let g = target.group();
    let n = g.algebra_dim();
    let f = target.field();
    let mut out = Vec::with_capacity(shift.free_rank * target.dim());
    for k in 0..shift.free_rank {
        for v in 0..target.dim() {
            let mut ext = Matrix::zeros(f, target.dim(), shift.cover.dim());
            for idx in 0..n {
                let e = monomial_exponents(g.p, g.r, idx);
                let image = target.monomial_action(&e).column(v);
                for (i, &x) in image.iter().enumerate() {
                    ext.set(i, k * n + idx, x);
                }
            }
            out.push(ext.mul(&shift.inclusion)?);
        }
    }
    Ok(out)
}

/// Basis of `Ext^n(Q, M) = Hom(Ω^n Q, M) / PHom`.
pub fn ext_basis(degree: usize, base: &ModuleRep, target: &ModuleRep) -> Result<Vec<CohomClass>> {
    if base.group() != target.group() || base.field() != target.field() {
        return Err(Error::GroupMismatch("base and target must share group and field".into()));
    }
    let (shifted, shift) = shift_chain(base, degree)?;
    let homs = hom_basis(&shift.module, target)?;
    let phom = projective_homs(&shift, target)?;
    let f = target.field();
    let p_span = stack_vectors(f, &phom);
    let p_cols = p_span.independent_columns();
    let p_basis = p_span.select_columns(&p_cols);
    let all = p_basis.hstack(&stack_vectors(f, &homs))?;
    let chosen: Vec<usize> =
        all.independent_columns().into_iter().filter(|&c| c >= p_basis.cols()).map(|c| c - p_basis.cols()).collect();
    chosen
        .into_iter()
        .map(|c| CohomClass::new_parts(degree, base, target, shifted.clone(), shift.clone(), homs[c].clone()))
        .collect()
}

/// Basis of `H^1(G, M) = Ext^1(k, M)`.
pub fn ext1_basis(target: &ModuleRep) -> Result<Vec<CohomClass>> {
    let k = ModuleRep::trivial(*target.group(), target.field());
    ext_basis(1, &k, target)
}

/// `0 -> M -> E -> Ω^{n-1} Q -> 0`; the first `sub_dim` basis vectors of
/// `module` span `M` with its original action.
#[derive(Clone, Debug)]
pub struct Extension {
    pub module: ModuleRep,
    pub sub_dim: usize,
}

impl Extension {
    /// Whether the pulled-back sequence splits at `pt`, decided by solving
    /// `θ_M S - S θ_Q = -C` for a section.
    pub fn splits_at(&self, pt: &PiPoint) -> Result<bool> {
        let theta = pt.theta(&self.module)?;
        Ok(splits(&theta, self.sub_dim))
    }

    pub fn sub_module(&self) -> Result<ModuleRep> {
        let f = self.module.field();
        let basis = Matrix::identity(f, self.module.dim()).select_columns(&(0..self.sub_dim).collect::<Vec<_>>());
        self.module.submodule(&basis)
    }

    pub fn quotient_module(&self) -> Result<ModuleRep> {
        let f = self.module.field();
        let basis = Matrix::identity(f, self.module.dim()).select_columns(&(0..self.sub_dim).collect::<Vec<_>>());
        Ok(self.module.quotient(&basis)?.0)
    }
}

fn splits(theta: &Matrix, sub: usize) -> bool {
    let f = theta.field();
    let n = theta.rows();
    let q = n - sub;
    let a = theta.block(0, 0, sub, sub);
    let c = theta.block(0, sub, sub, q);
    let b = theta.block(sub, sub, q, q);
    let vars = sub * q;
    let mut sys = Matrix::zeros(f, vars, vars);
    let mut rhs = Matrix::zeros(f, vars, 1);
    for i in 0..sub {
        for j in 0..q {
            let row = i * q + j;
            for k in 0..sub {
                let v = a.get(i, k);
                if v != 0 {
                    sys.set(row, k * q + j, f.add(sys.get(row, k * q + j), v));
                }
            }
            for k in 0..q {
                let v = b.get(k, j);
                if v != 0 {
                    sys.set(row, i * q + k, f.sub(sys.get(row, i * q + k), v));
                }
            }
            rhs.set(row, 0, f.neg(c.get(i, j)));
        }
    }
    sys.solve(&rhs).expect("shapes agree").is_some()
}

/// Pushout of `Ω^n Q -> P` along the class.
pub fn extension(z: &CohomClass) -> Result<Extension> {
    let m = &z.target;
    let p = &z.shift.cover;
    let ambient = m.direct_sum(p)?;
    let glue = z.hom.vstack(&z.shift.inclusion.neg())?;
    let (module, comp) = ambient.quotient(&glue)?;
    if comp[..m.dim().min(comp.len())] != (0..m.dim()).collect::<Vec<_>>()[..] {
        return Err(Error::Internal("target does not embed in the pushout".into()));
    }
    Ok(Extension { module, sub_dim: m.dim() })
}

pub fn extension_module(z: &CohomClass) -> Result<ModuleRep> {
    Ok(extension(z)?.module)
}

fn constant_rank_report(m: &ModuleRep, fam: &PiFamily, field: &Field) -> Result<strata::StratumReport> {
    strata::strata(m, fam, &Options::over(field).without_certificates())
}

/// Points where the class pulls back to zero, by comparing the ranks of `θ`
/// on `E_ζ` and on `M`.
pub fn z_locus(z: &CohomClass, fam: &PiFamily, field: &Field) -> Result<Vec<Vec<Elem>>> {
    let target_report = constant_rank_report(&z.target, fam, field)?;
    if !target_report.is_constant_jrank(1) {
        return Err(Error::NotConstantRank(
            "the zero locus of a class in H^1(G, M) is defined only when M has constant rank".into(),
        ));
    }
    let e = extension_module(z)?;
    let e_local = strata::local_types(&e, fam, field)?;
    Ok(e_local
        .into_iter()
        .zip(&target_report.local)
        .filter(|(a, b)| a.jtype.rank_chain()[0] == b.jtype.rank_chain()[0])
        .map(|(a, _)| a.point)
        .collect())
}

/// Split at every enumerated point and at the generic point.
pub fn is_locally_split(z: &CohomClass, fam: &PiFamily, field: &Field) -> Result<bool> {
    let points = z_locus(z, fam, field)?;
    if points.len() != fam.points(field).len() {
        return Ok(false);
    }
    let e = extension_module(z)?;
    Ok(strata::symbolic_ranks(&e, fam)?[0] == strata::symbolic_ranks(&z.target, fam)?[0])
}

/// `L_ζ = ker(Ω^{2n} k -> k)`.
pub fn carlson_module(z: &CohomClass) -> Result<ModuleRep> {
    if !z.degree.is_multiple_of(2) || !is_trivial(&z.base) || !is_trivial(&z.target) {
        return Err(Error::InvalidModule("Carlson modules need an even-degree class in H^*(G, k)".into()));
    }
    if z.is_zero() || z.is_stably_zero()? {
        return Err(Error::ZeroClass("the class is zero in the stable category".into()));
    }
    z.source().submodule(&z.hom.kernel())
}

/// Points where the extension of `Ω^{n-1} N` by `M` splits, detected by
/// additivity of Jordan types.
pub fn ext_z_locus(xi: &CohomClass, fam: &PiFamily, field: &Field) -> Result<Vec<Vec<Elem>>> {
    for (what, m) in [("base", &xi.base), ("target", &xi.target)] {
        if !constant_rank_report(m, fam, field)?.is_constant_jtype() {
            return Err(Error::NotConstantJordanType(format!("the {what} of the class")));
        }
    }
    let e = extension_module(xi)?;
    let (e_local, m_local, q_local) = (
        strata::local_types(&e, fam, field)?,
        strata::local_types(&xi.target, fam, field)?,
        strata::local_types(&xi.shifted, fam, field)?,
    );
    let keep: Vec<bool> = e_local
        .par_iter()
        .zip(m_local.par_iter().zip(q_local.par_iter()))
        .map(|(a, (b, c))| Ok::<_, Error>(a.jtype == b.jtype.add(&c.jtype)?))
        .collect::<Result<_>>()?;
    Ok(e_local.into_iter().zip(keep).filter(|(_, k)| *k).map(|(a, _)| a.point).collect())
}

/// Jordan type of `θ` on a module, at each point of the family.
pub fn jtype_function(m: &ModuleRep, fam: &PiFamily, field: &Field) -> Result<Vec<JordanType>> {
    Ok(strata::local_types(m, fam, field)?.into_iter().map(|pt| pt.jtype).collect())
}
