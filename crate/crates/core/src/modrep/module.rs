use crate::error::{Error, Result};
use crate::ff::{Elem, Field, Matrix};

use super::group::{GroupData, Hopf};

/// A finite-dimensional module given by the actions of the algebra
/// generators `x_1, ..., x_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    group: GroupData,
    field: Field,
    dim: usize,
    generators: Vec<Matrix>,
    name: Option<String>,
}

/// Index of the monomial `x^e` in the basis of `k[x_1..x_r]/(x_i^p)`,
/// with `e_1` varying fastest.
pub fn monomial_index(p: u32, exps: &[u32]) -> usize {
    exps.iter().rev().fold(0, |acc, &e| acc * p as usize + e as usize)
}

pub fn monomial_exponents(p: u32, r: usize, mut idx: usize) -> Vec<u32> {
    (0..r)
        .map(|_| {
            let e = (idx % p as usize) as u32;
            idx /= p as usize;
            e
        })
        .collect()
}

impl ModuleRep {
    /// Build and validate.
    pub fn new(group: GroupData, field: &Field, generators: Vec<Matrix>) -> Result<Self> {
        let m = Self::new_unchecked(group, field, generators)?;
        m.validate()?;
        Ok(m)
    }

    /// Build after checking only shapes and fields; see [`ModuleRep::validate`].
    pub fn new_unchecked(group: GroupData, field: &Field, generators: Vec<Matrix>) -> Result<Self> {
        if field.characteristic() != group.p {
            return Err(Error::InvalidModule(format!(
                "field {field} has the wrong characteristic for p = {}",
                group.p
            )));
        }
        if generators.len() != group.r {
            return Err(Error::InvalidModule(format!(
                "{} generators given, the group has {}",
                generators.len(),
                group.r
            )));
        }
        let dim = generators[0].rows();
        for (i, g) in generators.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::InvalidModule(format!(
                    "generator {i} is {}x{}, expected {dim}x{dim}",
                    g.rows(),
                    g.cols()
                )));
            }
            if g.field() != field {
                return Err(Error::InvalidModule(format!("generator {i} is over {}", g.field())));
            }
        }
        Ok(ModuleRep { group, field: field.clone(), dim, generators, name: None })
    }

    /// Check p-nilpotence of each generator and pairwise commutativity.
    pub fn validate(&self) -> Result<()> {
        let p = self.group.p as usize;
        for (i, g) in self.generators.iter().enumerate() {
            if !g.pow(p)?.is_zero() {
                return Err(Error::InvalidModule(format!("generator {i} does not satisfy X^{p} = 0")));
            }
        }
        for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                let (a, b) = (&self.generators[i], &self.generators[j]);
                if a.mul(b)? != b.mul(a)? {
                    return Err(Error::InvalidModule(format!("generators {i},{j} do not commute")));
                }
            }
        }
        Ok(())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn group(&self) -> &GroupData {
        &self.group
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.group.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Matrix {
        &self.generators[i]
    }

    /// The trivial module `k`.
    pub fn trivial(group: GroupData, field: &Field) -> Self {
        let gens = vec![Matrix::zeros(field, 1, 1); group.r];
        ModuleRep { group, field: field.clone(), dim: 1, generators: gens, name: None }
    }

    /// Zero module.
    pub fn zero(group: GroupData, field: &Field) -> Self {
        let gens = vec![Matrix::zeros(field, 0, 0); group.r];
        ModuleRep { group, field: field.clone(), dim: 0, generators: gens, name: None }
    }

    /// Free module of the given rank over `k[x_1..x_r]/(x_i^p)`, monomial basis.
    pub fn free(group: GroupData, field: &Field, rank: usize) -> Self {
        let (p, r) = (group.p, group.r);
        let n = group.algebra_dim();
        let gens = (0..r)
            .map(|i| {
                let mut x = Matrix::zeros(field, n, n);
                for idx in 0..n {
                    let mut e = monomial_exponents(p, r, idx);
                    if e[i] + 1 < p {
                        e[i] += 1;
                        x.set(monomial_index(p, &e), idx, 1);
                    }
                }
                x
            })
            .collect();
        let regular = ModuleRep { group, field: field.clone(), dim: n, generators: gens, name: None };
        let mut out = ModuleRep::zero(group, field);
        for _ in 0..rank {
            out = out.direct_sum(&regular).expect("same group");
        }
        out
    }

    /// Same module over an extension field.
    pub fn lift(&self, field: &Field) -> Result<ModuleRep> {
        let generators = self.generators.iter().map(|g| g.lift(field)).collect::<Result<_>>()?;
        Ok(ModuleRep { field: field.clone(), generators, ..self.clone() })
    }

    /// Bring two modules over a common field, checking the groups agree.
    fn common(&self, other: &ModuleRep) -> Result<(ModuleRep, ModuleRep)> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!("{:?} vs {:?}", self.group, other.group)));
        }
        if self.field.contains(&other.field) {
            Ok((self.clone(), other.lift(&self.field)?))
        } else if other.field.contains(&self.field) {
            Ok((self.lift(&other.field)?, other.clone()))
        } else {
            Err(Error::GroupMismatch(format!("fields {} and {}", self.field, other.field)))
        }
    }

    pub fn direct_sum(&self, other: &ModuleRep) -> Result<ModuleRep> {
        let (a, b) = self.common(other)?;
        let generators = a.generators.iter().zip(&b.generators).map(|(x, y)| x.direct_sum(y)).collect::<Result<_>>()?;
        Ok(ModuleRep { group: a.group, field: a.field, dim: a.dim + b.dim, generators, name: None })
    }

    /// Linear dual with the antipode twist.
    pub fn dual(&self) -> ModuleRep {
        let f = &self.field;
        let p = self.group.p as usize;
        let generators = self
            .generators
            .iter()
            .map(|x| match self.group.hopf {
                Hopf::Additive => x.neg().transpose(),
                Hopf::Multiplicative => {
                    // (I + X)^{-1} - I = Σ_{k=1}^{p-1} (-X)^k
                    let minus = x.neg();
                    let mut acc = Matrix::zeros(f, self.dim, self.dim);
                    let mut pow = Matrix::identity(f, self.dim);
                    for _ in 1..p {
                        pow = pow.mul(&minus).expect("square");
                        acc = acc.add(&pow).expect("same shape");
                    }
                    acc.transpose()
                }
            })
            .collect();
        ModuleRep { generators, name: None, ..self.clone() }
    }

    pub fn tensor(&self, other: &ModuleRep) -> Result<ModuleRep> {
        let (a, b) = self.common(other)?;
        let f = &a.field;
        let ia = Matrix::identity(f, a.dim);
        let ib = Matrix::identity(f, b.dim);
        let generators = a
            .generators
            .iter()
            .zip(&b.generators)
            .map(|(x, y)| {
                let sum = x.kron(&ib)?.add(&ia.kron(y)?)?;
                match a.group.hopf {
                    Hopf::Additive => Ok(sum),
                    Hopf::Multiplicative => sum.add(&x.kron(y)?),
                }
            })
            .collect::<Result<_>>()?;
        Ok(ModuleRep { group: a.group, field: a.field.clone(), dim: a.dim * b.dim, generators, name: None })
    }

    /// Basis (as columns) of the radical `Σ_i im X_i`.
    pub fn radical_basis(&self) -> Matrix {
        let mut all = Matrix::zeros(&self.field, self.dim, 0);
        for g in &self.generators {
            all = all.hstack(g).expect("same rows");
        }
        let cols = all.independent_columns();
        all.select_columns(&cols)
    }

    /// Basis of the socle `∩_i ker X_i`.
    pub fn socle_basis(&self) -> Matrix {
        let mut all = Matrix::zeros(&self.field, 0, self.dim);
        for g in &self.generators {
            all = all.vstack(g).expect("same cols");
        }
        all.kernel()
    }

    /// Submodule spanned by the independent columns of `basis`, with actions
    /// written in that basis. Fails when the span is not invariant.
    pub fn submodule(&self, basis: &Matrix) -> Result<ModuleRep> {
        if basis.rows() != self.dim {
            return Err(Error::DimensionMismatch("submodule basis has the wrong length".into()));
        }
        let generators = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let image = x.mul(basis)?;
                basis
                    .solve(&image)?
                    .ok_or_else(|| Error::InvalidModule(format!("span is not stable under generator {i}")))
            })
            .collect::<Result<_>>()?;
        Ok(ModuleRep { group: self.group, field: self.field.clone(), dim: basis.cols(), generators, name: None })
    }

    /// `M / N` for the submodule spanned by the independent columns of `basis`.
    ///
    /// Returns the quotient and the complement basis (standard vectors of `M`)
    /// whose images form the quotient basis.
    pub fn quotient(&self, basis: &Matrix) -> Result<(ModuleRep, Vec<usize>)> {
        let f = &self.field;
        let n = self.dim;
        let aug = basis.hstack(&Matrix::identity(f, n))?;
        let pivots = aug.independent_columns();
        let sub_cols: Vec<usize> = pivots.iter().copied().filter(|&c| c < basis.cols()).collect();
        let comp: Vec<usize> = pivots.iter().filter(|&&c| c >= basis.cols()).map(|&c| c - basis.cols()).collect();
        let sub = basis.select_columns(&sub_cols);
        let full = sub.hstack(&Matrix::identity(f, n).select_columns(&comp))?;
        let inv = full.inverse().ok_or_else(|| Error::Internal("complement is not a basis".into()))?;
        let s = sub.cols();
        let generators = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let coords = inv.mul(x)?.mul(&full)?;
                if !coords.block(s, 0, comp.len(), s).is_zero() {
                    return Err(Error::InvalidModule(format!("span is not stable under generator {i}")));
                }
                Ok(coords.block(s, s, comp.len(), comp.len()))
            })
            .collect::<Result<_>>()?;
        let q = ModuleRep { group: self.group, field: f.clone(), dim: comp.len(), generators, name: None };
        Ok((q, comp))
    }

    /// Whether `h: self -> other` (a `other.dim x self.dim` matrix) commutes with
    /// all generator actions.
    pub fn is_homomorphism_to(&self, other: &ModuleRep, h: &Matrix) -> Result<bool> {
        if h.rows() != other.dim || h.cols() != self.dim {
            return Err(Error::DimensionMismatch("homomorphism has the wrong shape".into()));
        }
        for (x, y) in self.generators.iter().zip(&other.generators) {
            if h.mul(x)? != y.mul(h)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Apply the monomial `x^e` of the algebra to the module.
    pub fn monomial_action(&self, exps: &[u32]) -> Matrix {
        let mut acc = Matrix::identity(&self.field, self.dim);
        for (i, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                acc = self.generators[i].mul(&acc).expect("square");
            }
        }
        acc
    }

    /// `Σ_i c_i X_i`.
    pub fn linear_action(&self, coeffs: &[Elem]) -> Matrix {
        let mut acc = Matrix::zeros(&self.field, self.dim, self.dim);
        for (g, &c) in self.generators.iter().zip(coeffs) {
            acc = acc.add(&g.scale(c)).expect("same shape");
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::group::GroupData;

    fn jordan_block(f: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(f, n, n);
        for i in 0..n - 1 {
            m.set(i + 1, i, 1);
        }
        m
    }

    #[test]
    fn validation_reports() {
        let f = Field::prime(3).unwrap();
        let g = GroupData::additive(3, 2).unwrap();
        let j2 = jordan_block(&f, 2);
        let ok = ModuleRep::new(g, &f, vec![j2.clone(), j2.clone()]);
        assert!(ok.is_ok());
        let bad = ModuleRep::new(g, &f, vec![j2.clone(), j2.transpose()]).unwrap_err();
        assert_eq!(bad.to_string(), "invalid module: generators 0,1 do not commute");
        let j4 = jordan_block(&f, 4);
        let z4 = Matrix::zeros(&f, 4, 4);
        assert!(ModuleRep::new(g, &f, vec![j4, z4]).is_err());
    }

    #[test]
    fn free_module_shape() {
        let f = Field::prime(3).unwrap();
        let g = GroupData::additive(3, 2).unwrap();
        let free = ModuleRep::free(g, &f, 2);
        assert_eq!(free.dim(), 18);
        free.validate().unwrap();
        assert_eq!(free.radical_basis().cols(), 16);
        assert_eq!(free.socle_basis().cols(), 2);
    }

    #[test]
    fn dual_is_an_involution() {
        let f = Field::prime(5).unwrap();
        let j3 = jordan_block(&f, 3);
        for g in [GroupData::additive(5, 2).unwrap(), GroupData::elementary_abelian(5, 2).unwrap()] {
            let m = ModuleRep::new(g, &f, vec![j3.clone(), j3.pow(2).unwrap()]).unwrap();
            let d = m.dual();
            d.validate().unwrap();
            assert_eq!(d.dual(), m);
        }
    }

    #[test]
    fn quotient_and_submodule() {
        let f = Field::prime(5).unwrap();
        let g = GroupData::additive(5, 1).unwrap();
        let m = ModuleRep::new(g, &f, vec![jordan_block(&f, 4)]).unwrap();
        let rad = m.radical_basis();
        let sub = m.submodule(&rad).unwrap();
        assert_eq!(sub.dim(), 3);
        let (q, comp) = m.quotient(&rad).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(comp, vec![0]);
        assert!(m.submodule(&Matrix::identity(&f, 4).select_columns(&[0])).is_err());
    }
}
