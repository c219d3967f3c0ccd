mod common;

use common::{jt, sl2_gamma_oracle, sl2_gamma_printed};
use jstrata::gallery::{self, ENTRIES};
use jstrata::strata::{self, Options};
use jstrata::{Dominance, Elem, JordanType, Matrix, ModuleRep, PiFamily};

fn sl2_mismatches(p: u32, expected: fn(usize, usize, usize) -> Vec<Vec<Elem>>) -> Vec<String> {
    let fam = gallery::sl2_2_family(p).unwrap();
    let opts = Options::prime(p).unwrap();
    let mut bad = Vec::new();
    for lambda in 0..p * p {
        let m = gallery::sl2_2_simple(lambda, p).unwrap();
        let report = strata::strata(&m, &fam, &opts).unwrap();
        for g in &report.gamma {
            let want = expected(p as usize, lambda as usize, g.j);
            if g.points != want {
                bad.push(format!("lambda={lambda} j={}: computed {:?}, expected {:?}", g.j, g.points, want));
            }
        }
    }
    bad
}

#[test]
fn every_entry_builds_a_valid_module() {
    let built: Vec<ModuleRep> = vec![
        gallery::w_module(7).unwrap(),
        gallery::cyclic_quotient(5).unwrap(),
        gallery::gl3_sym2(7, 1).unwrap(),
        gallery::gl3_sym2(7, 2).unwrap(),
        gallery::gl3_sym2(7, 3).unwrap(),
        gallery::gln1_standard(&gallery::nilpotent_of_type(&jt(5, "[3]+[1]")).unwrap()).unwrap().0,
        gallery::sl2_2_simple(13, 5).unwrap(),
        gallery::heller_of_trivial(-2, 2, 3).unwrap(),
    ];
    for m in &built {
        m.validate().unwrap();
        assert_eq!(&ModuleRep::from_json(&m.to_json()).unwrap(), m);
    }
    let mut names: Vec<&str> = ENTRIES.iter().map(|e| e.name).collect();
    names.dedup();
    assert_eq!(names.len(), 6);
}

#[test]
fn sl2_table_matches_tensor_product_oracle() {
    for p in [5u32, 7] {
        let bad = sl2_mismatches(p, sl2_gamma_oracle);
        assert!(bad.is_empty(), "p={p}:\n{}", bad.join("\n"));
    }
}

#[test]
fn sl2_table_matches_printed_formula() {
    for p in [5u32, 7] {
        let bad = sl2_mismatches(p, sl2_gamma_printed);
        assert!(bad.is_empty(), "p={p}: {} cells differ\n{}", bad.len(), bad.join("\n"));
    }
}

#[test]
fn steinberg_module_is_projective() {
    for p in [5u32, 7] {
        let m = gallery::sl2_2_simple(p * p - 1, p).unwrap();
        let fam = gallery::sl2_2_family(p).unwrap();
        let report = strata::strata(&m, &fam, &Options::prime(p).unwrap()).unwrap();
        assert!(report.local.iter().all(|pt| pt.jtype.is_projective()));
        assert!(report.gamma.iter().all(|g| g.points.is_empty()));
    }
}

#[test]
fn heller_shifts_of_trivial_are_constant() {
    for p in [3u32, 5] {
        for n in -3i32..=3 {
            if p == 5 && n.abs() == 3 {
                continue;
            }
            let m = gallery::heller_of_trivial(n, 2, p).unwrap();
            let fam = PiFamily::standard(*m.group()).unwrap();
            let report = strata::strata(&m, &fam, &Options::prime(p).unwrap()).unwrap();
            assert!(report.is_constant_jtype(), "n={n} p={p}");
            let stable = report.generic_type.unwrap().stable_part();
            let expect = if n % 2 == 0 { "[1]".to_string() } else { format!("[{}]", p - 1) };
            assert_eq!(stable.to_string(), expect, "n={n} p={p}");
        }
    }
    let om = gallery::heller_of_trivial(1, 2, 3).unwrap();
    let pt = jstrata::PiPoint::linear(om.field(), &[1, 2]).unwrap();
    assert_eq!(pt.jtype(&om).unwrap(), jt(3, "2[3]+[2]"));
    assert!(gallery::heller_of_trivial(4, 2, 3).is_err());
    assert!(gallery::heller_of_trivial(1, 3, 3).is_err());
}

#[test]
fn gln1_maximal_type() {
    let p = 5u32;
    for n in 1..=12usize {
        let (r, rest) = (n / p as usize, n % p as usize);
        let mut parts = vec![p as usize; r];
        if rest > 0 {
            parts.push(rest);
        }
        let top = JordanType::from_parts(p, &parts).unwrap();
        let (m, pt) = gallery::gln1_standard(&gallery::nilpotent_of_type(&top).unwrap()).unwrap();
        assert_eq!(pt.jtype(&m).unwrap(), top);
        let zero = JordanType::blocks(p, n, 1).unwrap();
        let (m0, pt0) = gallery::gln1_standard(&gallery::nilpotent_of_type(&zero).unwrap()).unwrap();
        assert_eq!(pt0.jtype(&m0).unwrap(), zero);
        for other in [
            zero.clone(),
            JordanType::from_parts(p, &vec![2; n / 2]).unwrap().add(&JordanType::blocks(p, n % 2, 1).unwrap()).unwrap(),
        ] {
            assert!(matches!(top.compare_dominance(&other).unwrap(), Dominance::Greater | Dominance::Equal));
        }
    }
}

#[test]
fn gl3_sym2_matches_group_elements() {
    let p = 7;
    for s in 1..=3 {
        let m = gallery::gl3_sym2(p, s).unwrap();
        assert_eq!(m.dim(), 6);
        let f = m.field().clone();
        let [u1, u2] = gallery::gl3_subgroup_generators(p, s).unwrap();
        let natural = ModuleRep::new(
            *m.group(),
            &f,
            vec![u1.sub(&Matrix::identity(&f, 3)).unwrap(), u2.sub(&Matrix::identity(&f, 3)).unwrap()],
        )
        .unwrap();
        let fam = PiFamily::standard(*m.group()).unwrap();
        let report = strata::strata(&m, &fam, &Options::prime(p).unwrap()).unwrap();
        let g = u1.mul(&u2).unwrap();
        let probe = gallery::sym2(&g).sub(&Matrix::identity(&f, 6)).unwrap();
        let (pm, pt) = gallery::gln1_standard(&probe).unwrap();
        assert_eq!(report.generic_type.clone().unwrap(), pt.jtype(&pm).unwrap(), "subgroup {s}");
        let natural_local = strata::local_types(&natural, &fam, &f).unwrap();
        let natural_generic = natural_local.iter().map(|pt| pt.jtype.clone()).max_by_key(|t| t.rank_chain()).unwrap();
        let drops: Vec<Vec<Elem>> =
            natural_local.iter().filter(|pt| pt.jtype != natural_generic).map(|pt| pt.point.clone()).collect();
        for g in report.gamma.iter().skip(2) {
            if g.max_rank > 0 {
                assert_eq!(g.points, drops, "subgroup {s} j={}", g.j);
            } else {
                assert!(g.points.is_empty());
            }
        }
    }
    assert!(gallery::gl3_sym2(3, 1).is_err());
    assert!(gallery::gl3_sym2(7, 4).is_err());
}
