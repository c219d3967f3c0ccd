//! Property checks shared by the acceptance run and the property suites.
//! Each returns `Err(description)` on the first violation.

use jstrata::homological::{self, ext1_basis, extension, is_locally_split, z_locus};
use jstrata::modrep::omega;
use jstrata::strata::{self, format_point, Options};
use jstrata::{CohomClass, Dominance, Elem, Field, JordanType, ModuleRep, PiFamily};

pub type Check = Result<(), String>;

fn err<T: std::fmt::Display>(e: T) -> String {
    e.to_string()
}

/// Dominance agrees with the comparison of all power ranks.
pub fn dominance_matches_ranks(types: &[JordanType]) -> Check {
    for a in types {
        for b in types {
            if a.dim() != b.dim() || a.characteristic() != b.characteristic() {
                continue;
            }
            let ra = a.rank_chain();
            let rb = b.rank_chain();
            let ge = ra.iter().zip(&rb).all(|(x, y)| x >= y);
            let le = ra.iter().zip(&rb).all(|(x, y)| x <= y);
            let expect = match (ge, le) {
                (true, true) => Dominance::Equal,
                (true, false) => Dominance::Greater,
                (false, true) => Dominance::Less,
                (false, false) => Dominance::Incomparable,
            };
            let got = a.compare_dominance(b).map_err(err)?;
            if got != expect {
                return Err(format!("{a} vs {b}: dominance {got:?}, ranks say {expect:?}"));
            }
        }
    }
    Ok(())
}

/// `JType(ΩM)(v)` and `JType(M)(v)^⊥` agree up to projective blocks.
pub fn heller_flips_types(m: &ModuleRep, fam: &PiFamily, field: &Field) -> Check {
    let om = omega(m).map_err(err)?.module;
    let a = homological::jtype_function(m, fam, field).map_err(err)?;
    let b = homological::jtype_function(&om, fam, field).map_err(err)?;
    for (pt, (x, y)) in fam.points(field).iter().zip(a.iter().zip(&b)) {
        let flipped = x.stable_part().flip().map_err(err)?.stable_part();
        if flipped != y.stable_part() {
            return Err(format!("at {}: type {x}, flip {flipped}, but Omega gives {y}", format_point(pt)));
        }
    }
    Ok(())
}

/// `Γ^j = ∅` exactly when every enumerated `j`-rank equals the generic one.
pub fn empty_gamma_iff_constant_rank(m: &ModuleRep, fam: &PiFamily, field: &Field) -> Check {
    let report = strata::strata(m, fam, &Options::over(field).without_certificates()).map_err(err)?;
    let generic = strata::symbolic_ranks(m, fam).map_err(err)?;
    for j in 1..m.p() as usize {
        let constant = report.local.iter().all(|pt| pt.jtype.rank_chain()[j - 1] == generic[j - 1]);
        if report.gamma[j - 1].points.is_empty() != constant {
            return Err(format!("j={j}: gamma empty is {}, constant rank is {constant}", !constant));
        }
    }
    Ok(())
}

/// Adding a summand of constant `j`-rank does not change `Γ^j`.
pub fn constant_summand_keeps_gamma(c: &ModuleRep, n: &ModuleRep, fam: &PiFamily, field: &Field) -> Check {
    let opts = Options::over(field).without_certificates();
    let rc = strata::strata(c, fam, &opts).map_err(err)?;
    let rn = strata::strata(n, fam, &opts).map_err(err)?;
    let sum = c.direct_sum(n).map_err(err)?;
    let rs = strata::strata(&sum, fam, &opts).map_err(err)?;
    for j in 1..c.p() as usize {
        if rc.is_constant_jrank(j) && rs.gamma[j - 1].points != rn.gamma[j - 1].points {
            return Err(format!("j={j}: gamma of the sum differs from gamma of the summand"));
        }
    }
    Ok(())
}

/// `Γ^j(M) = Γ^j(Ω^2 M)`, with maxima taken over the enumerated points.
pub fn double_shift_keeps_gamma(m: &ModuleRep, fam: &PiFamily, field: &Field) -> Check {
    let opts = Options::over(field).numeric_only();
    let om2 = omega(&omega(m).map_err(err)?.module).map_err(err)?.module;
    let a = strata::strata(m, fam, &opts).map_err(err)?;
    let b = strata::strata(&om2, fam, &opts).map_err(err)?;
    for (ga, gb) in a.gamma.iter().zip(&b.gamma) {
        if ga.points != gb.points {
            return Err(format!("j={}: gamma(M) != gamma(Omega^2 M)", ga.j));
        }
    }
    Ok(())
}

/// The non-maximal Jordan-type locus is the union of the `Γ^j`.
pub fn gamma_is_union(m: &ModuleRep, fam: &PiFamily, field: &Field) -> Check {
    let report = strata::strata(m, fam, &Options::over(field).without_certificates()).map_err(err)?;
    let generic = report.generic_type.clone().ok_or("no generic type")?;
    let off_generic: Vec<Vec<Elem>> =
        report.local.iter().filter(|pt| pt.jtype != generic).map(|pt| pt.point.clone()).collect();
    if off_generic != report.gamma_union() {
        return Err(format!("non-generic points {off_generic:?}, union of gamma_j {:?}", report.gamma_union()));
    }
    Ok(())
}

/// Splitting, rank equality and type additivity agree at every point, for
/// `ζ` and for the extension it defines.
pub fn ezeta_equivalence(z: &CohomClass, fam: &PiFamily, field: &Field) -> Check {
    let ext = extension(z).map_err(err)?;
    let m = z.target();
    let one = JordanType::parse(m.p(), "[1]").unwrap();
    for point in fam.points(field) {
        let pt = fam.at(field, &point).map_err(err)?;
        let split = ext.splits_at(&pt).map_err(err)?;
        let te = pt.jtype(&ext.module).map_err(err)?;
        let tm = pt.jtype(m).map_err(err)?;
        let rank_eq = te.rank_chain()[0] == tm.rank_chain()[0];
        let additive = te == tm.add(&one).map_err(err)?;
        if split != rank_eq || split != additive {
            return Err(format!(
                "at {}: splits {split}, rank equality {rank_eq}, type formula {additive} (E {te}, M {tm})",
                format_point(&point)
            ));
        }
    }
    Ok(())
}

/// `Z(ζ)` is everything when `ζ` is locally split and `Γ^1(E_ζ)` otherwise.
pub fn zero_locus_dichotomy(z: &CohomClass, fam: &PiFamily, field: &Field) -> Check {
    let zl = z_locus(z, fam, field).map_err(err)?;
    let e = homological::extension_module(z).map_err(err)?;
    let report = strata::strata(&e, fam, &Options::over(field).without_certificates()).map_err(err)?;
    let all = fam.points(field);
    if is_locally_split(z, fam, field).map_err(err)? {
        if zl != all {
            return Err("locally split class with a proper zero locus".into());
        }
    } else if zl != report.gamma[0].points {
        return Err(format!("zero locus {zl:?} differs from gamma^1 of E {:?}", report.gamma[0].points));
    }
    Ok(())
}

fn intersect(a: &[Vec<Elem>], b: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    a.iter().filter(|x| b.contains(x)).cloned().collect()
}

/// For `ζ = ζ_1 ⊕ ζ_2`: `Z(ζ) = Z(ζ_1) ∩ Z(ζ_2)`, `E_ζ` is nowhere projective,
/// and `Γ^1(E_ζ) = Z(ζ)` unless `ζ` is locally split.
pub fn direct_sum_zero_locus(z1: &CohomClass, z2: &CohomClass, fam: &PiFamily, field: &Field) -> Check {
    let z = CohomClass::direct_sum(&[z1.clone(), z2.clone()]).map_err(err)?;
    let zl = z_locus(&z, fam, field).map_err(err)?;
    let expect = intersect(&z_locus(z1, fam, field).map_err(err)?, &z_locus(z2, fam, field).map_err(err)?);
    if zl != expect {
        return Err(format!("Z(z1+z2) = {zl:?}, intersection {expect:?}"));
    }
    let e = homological::extension_module(&z).map_err(err)?;
    let report = strata::strata(&e, fam, &Options::over(field).without_certificates()).map_err(err)?;
    if let Some(pt) = report.local.iter().find(|pt| pt.jtype.is_projective()) {
        return Err(format!("E is projective at {}", format_point(&pt.point)));
    }
    if !is_locally_split(&z, fam, field).map_err(err)? && report.gamma[0].points != zl {
        return Err(format!("gamma^1(E) = {:?}, Z = {zl:?}", report.gamma[0].points));
    }
    Ok(())
}

/// Classes to test against a target: a basis of `H^1(G, M)` and, when the
/// basis has two or more elements, the sum of the first two.
pub fn classes_for(m: &ModuleRep) -> Result<Vec<CohomClass>, String> {
    let mut out = ext1_basis(m).map_err(err)?;
    if out.len() >= 2 {
        let sum = CohomClass::linear_combination(&out[..2], &[1, 1]).map_err(err)?;
        out.push(sum);
    }
    Ok(out)
}
