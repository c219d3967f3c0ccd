//! Jordan-type strata and non-maximal rank loci over families of π-points.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ff::{Elem, Field, MPoly, Matrix, PolyMatrix, UPoly};
use crate::jordan::JordanType;
use crate::modrep::{GroupData, ModuleRep, PiPoint};

/// Default cap on the number of minors formed for a defining ideal.
pub const MINOR_BUDGET: u128 = 4096;

/// π-points `t ↦ Σ_k c_k(λ) x^{e_k}` parameterized by projective `λ`.
#[derive(Clone, Debug)]
pub struct PiFamily {
    group: GroupData,
    params: Vec<String>,
    image: Vec<(Vec<u32>, MPoly)>,
}

impl PiFamily {
    pub fn new(group: GroupData, params: Vec<String>, image: Vec<(Vec<u32>, MPoly)>) -> Result<Self> {
        let f = Field::prime(group.p)?;
        if params.is_empty() || params.len() > crate::ff::mpoly::MAX_VARS {
            return Err(Error::out_of_range("number of parameters", params.len(), "1..=4"));
        }
        for (e, c) in &image {
            if e.len() != group.r {
                return Err(Error::DimensionMismatch(format!(
                    "monomial in {} generators, expected {}",
                    e.len(),
                    group.r
                )));
            }
            if e.iter().all(|&k| k == 0) {
                return Err(Error::NotFlat("family image has a constant term".into()));
            }
            if c.nvars() != params.len() || *c.field() != f {
                return Err(Error::DimensionMismatch(
                    "coefficients must be polynomials in the parameters over GF(p)".into(),
                ));
            }
        }
        Ok(PiFamily { group, params, image })
    }

    /// `Σ λ_i x_i` with parameters `l1..lr`.
    pub fn standard(group: GroupData) -> Result<Self> {
        let f = Field::prime(group.p)?;
        let r = group.r;
        let params = (1..=r).map(|i| format!("l{i}")).collect();
        let image = (0..r)
            .map(|i| {
                let mut e = vec![0; r];
                e[i] = 1;
                (e, MPoly::var(&f, r, i))
            })
            .collect();
        Self::new(group, params, image)
    }

    pub fn group(&self) -> &GroupData {
        &self.group
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn image(&self) -> &[(Vec<u32>, MPoly)] {
        &self.image
    }

    /// Projective points of `P^{n-1}(field)`, first nonzero coordinate one,
    /// in lexicographic order.
    pub fn points(&self, field: &Field) -> Vec<Vec<Elem>> {
        projective_points(self.params.len(), field)
    }

    /// The π-point at a parameter value.
    pub fn at(&self, field: &Field, point: &[Elem]) -> Result<PiPoint> {
        let terms = self.image.iter().map(|(e, c)| (e.clone(), c.eval(field, point))).collect();
        PiPoint::new(field, self.group.r, terms)
    }

    /// `Θ(λ)`, the action of the family's image on `m` over `GF(p)[λ]`.
    pub fn theta(&self, m: &ModuleRep) -> Result<PolyMatrix> {
        self.check_module(m)?;
        if !m.field().is_prime_field() {
            return Err(Error::InvalidField("symbolic computations need a module over the prime field".into()));
        }
        let terms: Vec<(MPoly, Matrix)> = self.image.iter().map(|(e, c)| (c.clone(), m.monomial_action(e))).collect();
        PolyMatrix::linear_combination(m.field(), &self.params, &terms)
    }

    fn check_module(&self, m: &ModuleRep) -> Result<()> {
        let g = m.group();
        if g.family != self.group.family || g.p != self.group.p || g.r != self.group.r {
            return Err(Error::GroupMismatch(format!("family over {:?}, module over {:?}", self.group, g)));
        }
        Ok(())
    }
}

pub fn projective_points(n: usize, field: &Field) -> Vec<Vec<Elem>> {
    let q = field.order() as usize;
    let mut out = Vec::new();
    for lead in (0..n).rev() {
        let free = n - lead - 1;
        let count = q.pow(free as u32);
        for mut idx in 0..count {
            let mut pt = vec![0; n];
            pt[lead] = 1;
            for k in (lead + 1..n).rev() {
                pt[k] = (idx % q) as Elem;
                idx /= q;
            }
            out.push(pt);
        }
    }
    out
}

/// `[1:0]`-style rendering; extension elements print as their packed integer.
pub fn format_point(pt: &[Elem]) -> String {
    let parts: Vec<String> = pt.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(":"))
}

#[derive(Clone, Debug)]
pub struct Options {
    /// Field whose projective points are enumerated.
    pub field: Field,
    pub symbolic: bool,
    /// Compute defining equations for each non-maximal rank locus.
    pub certificates: bool,
    pub minor_budget: u128,
}

impl Options {
    pub fn over(field: &Field) -> Self {
        Options { field: field.clone(), symbolic: true, certificates: true, minor_budget: MINOR_BUDGET }
    }

    pub fn prime(p: u32) -> Result<Self> {
        Ok(Self::over(&Field::prime(p)?))
    }

    pub fn without_certificates(mut self) -> Self {
        self.certificates = false;
        self
    }

    pub fn numeric_only(mut self) -> Self {
        self.symbolic = false;
        self.certificates = false;
        self
    }
}

/// Symbolic defining equations of `{v : rk θ_v^j < R_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocusCertificate {
    /// Generators of the ideal of maximal-rank minors.
    Minors(Vec<MPoly>),
    /// Two-parameter families whose minor ideal is too large to list: the
    /// determinantal divisors of the specializations to `λ_1 = 1` (a
    /// polynomial in `λ_2`) and `λ_2 = 1` (a polynomial in `λ_1`). A point
    /// `[1:c]` lies in the locus iff `affine(c) = 0`, and `[0:1]` iff
    /// `at_infinity(0) = 0`.
    ChartDivisors { affine: UPoly, at_infinity: UPoly },
    /// Too many minors and no chart method for this many parameters.
    Omitted { minor_count: u128 },
}

fn eval_upoly(f: &Field, u: &UPoly, x: Elem) -> Elem {
    u.coeffs().iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

impl LocusCertificate {
    /// `Some(in locus)`, or `None` when the certificate cannot decide.
    pub fn contains(&self, field: &Field, point: &[Elem]) -> Option<bool> {
        match self {
            LocusCertificate::Minors(gens) => Some(gens.iter().all(|g| g.eval(field, point) == 0)),
            LocusCertificate::ChartDivisors { affine, at_infinity } => {
                if point[0] == 1 {
                    Some(eval_upoly(field, affine, point[1]) == 0)
                } else {
                    Some(eval_upoly(field, at_infinity, 0) == 0)
                }
            }
            LocusCertificate::Omitted { .. } => None,
        }
    }

    pub fn to_json(&self, names: &[String]) -> Value {
        match self {
            LocusCertificate::Minors(gens) => json!({
                "kind": "minors",
                "generators": gens.iter().map(|g| g.display(names).to_string()).collect::<Vec<_>>(),
            }),
            LocusCertificate::ChartDivisors { affine, at_infinity } => json!({
                "kind": "chart-divisors",
                "affine": { "chart": format!("{}=1", names[0]), "variable": names[1], "divisor": affine.to_string() },
                "at_infinity": { "chart": format!("{}=1", names[1]), "variable": names[0], "divisor": at_infinity.to_string() },
            }),
            LocusCertificate::Omitted { minor_count } => json!({
                "kind": "omitted",
                "minor_count": minor_count.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GammaJ {
    pub j: usize,
    /// `R_j`, the maximal rank of `θ^j`.
    pub max_rank: usize,
    /// Enumerated points with `rk θ_v^j < R_j`.
    pub points: Vec<Vec<Elem>>,
    pub certificate: Option<LocusCertificate>,
}

#[derive(Clone, Debug)]
pub struct PointType {
    pub point: Vec<Elem>,
    pub jtype: JordanType,
}

#[derive(Clone, Debug)]
pub struct StratumReport {
    pub module: String,
    pub field: Field,
    pub params: Vec<String>,
    pub dim: usize,
    /// Local type at every enumerated point, in point order.
    pub local: Vec<PointType>,
    /// Distinct types with their points, ordered by decreasing rank chain.
    pub strata: Vec<(JordanType, Vec<Vec<Elem>>)>,
    /// From the symbolic ranks, or from the enumerated maxima when symbolic
    /// computation is off (absent if those do not form a rank chain).
    pub generic_type: Option<JordanType>,
    /// `R_1, ..., R_{p-1}`.
    pub max_jranks: Vec<usize>,
    pub symbolic: bool,
    pub gamma: Vec<GammaJ>,
}

impl StratumReport {
    /// Union of all `Γ^j`, in point order.
    pub fn gamma_union(&self) -> Vec<Vec<Elem>> {
        self.local
            .iter()
            .filter(|pt| self.gamma.iter().any(|g| g.points.contains(&pt.point)))
            .map(|pt| pt.point.clone())
            .collect()
    }

    pub fn is_constant_jrank(&self, j: usize) -> bool {
        self.gamma[j - 1].points.is_empty()
    }

    pub fn is_constant_jtype(&self) -> bool {
        self.gamma.iter().all(|g| g.points.is_empty())
    }

    pub fn to_json(&self) -> Value {
        let pts = |v: &[Vec<Elem>]| v.iter().map(|p| json!(p)).collect::<Vec<_>>();
        let mut gamma = serde_json::Map::new();
        for g in &self.gamma {
            let mut entry = json!({
                "max_rank": g.max_rank,
                "points": pts(&g.points),
            });
            if let Some(c) = &g.certificate {
                entry["equations"] = c.to_json(&self.params);
            }
            gamma.insert(g.j.to_string(), entry);
        }
        json!({
            "module": self.module,
            "field": self.field.to_string(),
            "params": self.params,
            "dim": self.dim,
            "generic_type": self.generic_type.as_ref().map(|t| t.to_string()),
            "max_jranks": self.max_jranks,
            "symbolic": self.symbolic,
            "strata": self.strata.iter().map(|(t, p)| json!({"type": t.to_string(), "points": pts(p)})).collect::<Vec<_>>(),
            "gamma": gamma,
        })
    }
}

/// Local Jordan types at every enumerated point, in point order.
pub fn local_types(m: &ModuleRep, fam: &PiFamily, field: &Field) -> Result<Vec<PointType>> {
    fam.check_module(m)?;
    if !field.contains(m.field()) {
        return Err(Error::InvalidField(format!("enumeration field {field} does not contain {}", m.field())));
    }
    let lifted = m.lift(field)?;
    fam.points(field)
        .into_par_iter()
        .map(|point| {
            let pt = fam.at(field, &point)?;
            if !pt.is_flat(fam.group()) {
                return Err(Error::NotFlat(format!("family point {} is not flat", format_point(&point))));
            }
            let jtype = pt.jtype(&lifted)?;
            Ok(PointType { point, jtype })
        })
        .collect()
}

/// `Θ(λ)^1, ..., Θ(λ)^{p-1}`.
pub fn theta_powers(m: &ModuleRep, fam: &PiFamily) -> Result<Vec<PolyMatrix>> {
    let theta = fam.theta(m)?;
    let p = m.p() as usize;
    let mut out = vec![theta.clone()];
    for _ in 2..p {
        let next = out.last().unwrap().mul(&theta)?;
        out.push(next);
    }
    Ok(out)
}

/// Ranks of `Θ(λ)^j` over `GF(p)(λ)` for `j = 1..p-1`.
pub fn symbolic_ranks(m: &ModuleRep, fam: &PiFamily) -> Result<Vec<usize>> {
    Ok(theta_powers(m, fam)?.par_iter().map(PolyMatrix::symbolic_rank).collect())
}

pub fn generic_jtype(m: &ModuleRep, fam: &PiFamily) -> Result<JordanType> {
    JordanType::from_rank_chain(m.p(), m.dim(), &symbolic_ranks(m, fam)?)
}

fn check_j(p: u32, j: usize) -> Result<()> {
    if j == 0 || j >= p as usize {
        return Err(Error::out_of_range("j", j, format!("1..{p}")));
    }
    Ok(())
}

/// Maximal rank of `θ^j`, certified by the symbolic rank and cross-checked
/// against every enumerated point.
pub fn max_jrank(m: &ModuleRep, fam: &PiFamily, j: usize, field: &Field) -> Result<usize> {
    check_j(m.p(), j)?;
    let report = strata(m, fam, &Options::over(field).without_certificates())?;
    Ok(report.max_jranks[j - 1])
}

pub fn gamma_j(m: &ModuleRep, fam: &PiFamily, j: usize, opts: &Options) -> Result<GammaJ> {
    check_j(m.p(), j)?;
    Ok(strata(m, fam, opts)?.gamma.swap_remove(j - 1))
}

pub fn gamma(m: &ModuleRep, fam: &PiFamily, opts: &Options) -> Result<Vec<Vec<Elem>>> {
    Ok(strata(m, fam, opts)?.gamma_union())
}

pub fn is_constant_jrank(m: &ModuleRep, fam: &PiFamily, j: usize, field: &Field) -> Result<bool> {
    check_j(m.p(), j)?;
    Ok(strata(m, fam, &Options::over(field).without_certificates())?.is_constant_jrank(j))
}

pub fn is_constant_jtype(m: &ModuleRep, fam: &PiFamily, field: &Field) -> Result<bool> {
    Ok(strata(m, fam, &Options::over(field).without_certificates())?.is_constant_jtype())
}

fn certificate(theta_j: &PolyMatrix, rank: usize, budget: u128) -> LocusCertificate {
    if rank == 0 {
        // the empty minor is 1: nothing drops below rank zero
        let one = MPoly::constant(theta_j.field(), theta_j.nvars(), 1);
        return LocusCertificate::Minors(vec![one]);
    }
    if let Some(gens) = theta_j.max_rank_minors(budget) {
        return LocusCertificate::Minors(gens);
    }
    if theta_j.nvars() == 2 {
        let affine = theta_j.chart_divisor(1, &[1, 0], rank);
        let at_infinity = theta_j.chart_divisor(0, &[0, 1], rank);
        return LocusCertificate::ChartDivisors { affine, at_infinity };
    }
    LocusCertificate::Omitted { minor_count: theta_j.minor_count(rank) }
}

/// Full analysis of `m` over the family: local types, strata, maximal ranks
/// and the loci `Γ^j` with their defining equations.
pub fn strata(m: &ModuleRep, fam: &PiFamily, opts: &Options) -> Result<StratumReport> {
    let p = m.p() as usize;
    let local = local_types(m, fam, &opts.field)?;
    let chains: Vec<Vec<usize>> = local.iter().map(|pt| pt.jtype.rank_chain()).collect();
    let enumerated_max: Vec<usize> = (0..p - 1).map(|j| chains.iter().map(|c| c[j]).max().unwrap_or(0)).collect();

    let (max_jranks, generic_type, powers) = if opts.symbolic {
        let powers = theta_powers(m, fam)?;
        let ranks: Vec<usize> = powers.par_iter().map(PolyMatrix::symbolic_rank).collect();
        for j in 0..p - 1 {
            if enumerated_max[j] > ranks[j] {
                return Err(Error::Internal(format!(
                    "rank {} of theta^{} at an enumerated point exceeds the generic rank {}",
                    enumerated_max[j],
                    j + 1,
                    ranks[j]
                )));
            }
        }
        let generic = JordanType::from_rank_chain(m.p(), m.dim(), &ranks)?;
        (ranks, Some(generic), Some(powers))
    } else {
        let generic = JordanType::from_rank_chain(m.p(), m.dim(), &enumerated_max).ok();
        (enumerated_max, generic, None)
    };

    let mut gamma = Vec::with_capacity(p - 1);
    for j in 1..p {
        let points: Vec<Vec<Elem>> = local
            .iter()
            .zip(&chains)
            .filter(|(_, c)| c[j - 1] < max_jranks[j - 1])
            .map(|(pt, _)| pt.point.clone())
            .collect();
        gamma.push(GammaJ { j, max_rank: max_jranks[j - 1], points, certificate: None });
    }
    if opts.certificates {
        if let Some(powers) = &powers {
            let certs: Vec<LocusCertificate> = powers
                .par_iter()
                .zip(max_jranks.par_iter())
                .map(|(t, &r)| certificate(t, r, opts.minor_budget))
                .collect();
            for (g, cert) in gamma.iter_mut().zip(certs) {
                for pt in &local {
                    if let Some(inside) = cert.contains(&opts.field, &pt.point) {
                        if inside != g.points.contains(&pt.point) {
                            return Err(Error::Internal(format!(
                                "defining equations of gamma^{} disagree with the rank at {}",
                                g.j,
                                format_point(&pt.point)
                            )));
                        }
                    }
                }
                g.certificate = Some(cert);
            }
        }
    }

    let mut strata: Vec<(JordanType, Vec<Vec<Elem>>)> = Vec::new();
    for pt in &local {
        match strata.iter_mut().find(|(t, _)| *t == pt.jtype) {
            Some((_, pts)) => pts.push(pt.point.clone()),
            None => strata.push((pt.jtype.clone(), vec![pt.point.clone()])),
        }
    }
    strata.sort_by_key(|s| std::cmp::Reverse(s.0.rank_chain()));

    Ok(StratumReport {
        module: m.name().unwrap_or("module").to_string(),
        field: opts.field.clone(),
        params: fam.params().to_vec(),
        dim: m.dim(),
        local,
        strata,
        generic_type,
        max_jranks,
        symbolic: opts.symbolic,
        gamma,
    })
}
