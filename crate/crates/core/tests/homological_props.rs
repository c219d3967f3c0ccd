mod common;

use common::props;
use jstrata::homological::{
    carlson_module, ext1_basis, ext_basis, ext_z_locus, extension, extension_module, hom_basis, is_locally_split,
    jtype_function, z_locus,
};
use jstrata::modrep::sample::random_module;
use jstrata::modrep::{omega, omega_inverse, omega_power};
use jstrata::strata::{self, Options};
use jstrata::{CohomClass, Elem, Field, GroupData, JordanType, Matrix, ModuleRep, PiFamily};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn setup(p: u32) -> (GroupData, Field, ModuleRep, PiFamily) {
    let g = GroupData::elementary_abelian(p, 2).unwrap();
    let f = Field::prime(p).unwrap();
    let k = ModuleRep::trivial(g, &f);
    let fam = PiFamily::standard(g).unwrap();
    (g, f, k, fam)
}

fn random_combination(basis: &[CohomClass], p: u32, rng: &mut ChaCha8Rng) -> CohomClass {
    let coeffs: Vec<Elem> = basis.iter().map(|_| rng.gen_range(0..p as Elem)).collect();
    CohomClass::linear_combination(basis, &coeffs).unwrap()
}

fn constant_type_module(k: &ModuleRep, shifts: &[i32]) -> ModuleRep {
    let mut m = omega_power(k, shifts[0]).unwrap();
    for &n in &shifts[1..] {
        m = m.direct_sum(&omega_power(k, n).unwrap()).unwrap();
    }
    m
}

#[test]
fn ext_dimensions_of_trivial_module() {
    for p in [3u32, 5] {
        let (_, _, k, _) = setup(p);
        for n in 1..=4 {
            let dim = ext_basis(n, &k, &k).unwrap().len();
            assert_eq!(dim, n + 1, "Ext^{n}(k, k) at p={p}");
        }
    }
    let g = GroupData::elementary_abelian(5, 1).unwrap();
    let k = ModuleRep::trivial(g, &Field::prime(5).unwrap());
    for n in 1..=4 {
        assert_eq!(ext_basis(n, &k, &k).unwrap().len(), 1, "cyclic Ext^{n}");
    }
}

#[test]
fn heller_shift_dimensions_follow_betti_numbers() {
    for p in [3usize, 5] {
        let (_, _, k, _) = setup(p as u32);
        let mut expect = 1usize;
        for n in 1..=3 {
            expect = n * p * p - expect;
            assert_eq!(omega_power(&k, n as i32).unwrap().dim(), expect, "Omega^{n} k at p={p}");
        }
    }
}

#[test]
fn ext_dimension_shifting() {
    let (_, _, k, _) = setup(3);
    for n in 2..=4 {
        let shifted = omega_power(&k, 1 - n as i32).unwrap();
        assert_eq!(ext_basis(n, &k, &k).unwrap().len(), ext1_basis(&shifted).unwrap().len(), "degree {n}");
    }
    let free = omega(&k).unwrap().cover;
    for n in 1..=3 {
        assert!(ext_basis(n, &k, &free).unwrap().is_empty());
    }
}

#[test]
fn hom_space_of_trivial_modules() {
    let (_, _, k, _) = setup(5);
    let kk = k.direct_sum(&k).unwrap();
    assert_eq!(hom_basis(&k, &kk).unwrap().len(), 2);
    assert_eq!(hom_basis(&kk, &kk).unwrap().len(), 4);
    let free = omega(&k).unwrap().cover;
    assert_eq!(hom_basis(&free, &k).unwrap().len(), 1);
    assert_eq!(hom_basis(&k, &free).unwrap().len(), 1);
    let basis = hom_basis(&free, &free).unwrap();
    assert_eq!(basis.len(), 25);
    assert!(basis.iter().all(|h| free.is_homomorphism_to(&free, h).unwrap()));
}

#[test]
fn linear_forms_vanish_on_hyperplanes() {
    for (p, m) in [(3u32, 1u32), (3, 2), (5, 1)] {
        let (g, base, _, fam) = setup(p);
        let field = Field::new(p, m).unwrap();
        for c0 in 0..p as Elem {
            for c1 in 0..p as Elem {
                if (c0, c1) == (0, 0) {
                    continue;
                }
                let z = CohomClass::from_linear_form(g, &base, &[c0, c1]).unwrap();
                let expect: Vec<Vec<Elem>> = fam
                    .points(&field)
                    .into_iter()
                    .filter(|v| field.add(field.mul(v[0], c0), field.mul(v[1], c1)) == 0)
                    .collect();
                assert_eq!(z_locus(&z, &fam, &field).unwrap(), expect, "form ({c0}, {c1}) over GF({p}^{m})");
                assert!(!is_locally_split(&z, &fam, &field).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn splitting_criteria_agree(seed in any::<u64>(), p in prop_oneof![Just(3u32), Just(5)]) {
        let (g, f, _, fam) = setup(p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(g, &f, 8, &mut rng);
        let basis = ext1_basis(&m).unwrap();
        prop_assume!(!basis.is_empty());
        let z = random_combination(&basis, p, &mut rng);
        prop_assert_eq!(props::ezeta_equivalence(&z, &fam, &f), Ok(()));
        let ext = extension(&z).unwrap();
        prop_assert_eq!(ext.sub_module().unwrap(), m);
        prop_assert_eq!(ext.quotient_module().unwrap(), z.shifted_base().clone());
    }

    #[test]
    fn zero_locus_is_everything_or_gamma_one(
        seed in any::<u64>(),
        p in prop_oneof![Just(3u32), Just(5)],
        shifts in prop::collection::vec(-1i32..=1, 1..=2),
    ) {
        let (_, f, k, fam) = setup(p);
        let m = constant_type_module(&k, &shifts);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let basis = ext1_basis(&m).unwrap();
        prop_assume!(!basis.is_empty());
        let z = random_combination(&basis, p, &mut rng);
        prop_assert_eq!(props::zero_locus_dichotomy(&z, &fam, &f), Ok(()));
        prop_assert_eq!(props::ezeta_equivalence(&z, &fam, &f), Ok(()));
    }

    #[test]
    fn zero_locus_of_sum_is_intersection(seed in any::<u64>(), p in prop_oneof![Just(3u32), Just(5)]) {
        let (_, f, k, fam) = setup(p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let basis = ext1_basis(&k).unwrap();
        let z1 = random_combination(&basis, p, &mut rng);
        let z2 = random_combination(&basis, p, &mut rng);
        prop_assert_eq!(props::direct_sum_zero_locus(&z1, &z2, &fam, &f), Ok(()));
    }

    #[test]
    fn json_round_trip(seed in any::<u64>()) {
        let (_, _, k, _) = setup(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=3);
        let z = random_combination(&ext_basis(n, &k, &k).unwrap(), 3, &mut rng);
        let back = CohomClass::from_json(&z.to_json().to_string()).unwrap();
        prop_assert_eq!(back.degree(), z.degree());
        prop_assert_eq!(back.hom(), z.hom());
        prop_assert_eq!(back.target(), z.target());
    }
}

#[test]
fn zero_locus_of_sum_with_double_inverse_shift() {
    let (_, f, k, fam) = setup(3);
    let m = omega_power(&k, -2).unwrap();
    let basis = ext1_basis(&m).unwrap();
    assert_eq!(basis.len(), 4);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3 {
        let z1 = random_combination(&basis, 3, &mut rng);
        let z2 = random_combination(&ext1_basis(&k).unwrap(), 3, &mut rng);
        assert_eq!(props::direct_sum_zero_locus(&z1, &z2, &fam, &f), Ok(()));
    }
}

#[test]
fn even_classes_give_shifted_dual_carlson_modules() {
    for p in [3u32, 5] {
        let (_, f, k, fam) = setup(p);
        let mut rng = ChaCha8Rng::seed_from_u64(p as u64);
        let basis = ext_basis(2, &k, &k).unwrap();
        let mut classes = basis.clone();
        classes.push(random_combination(&basis, p, &mut rng));
        for z in classes {
            if z.is_stably_zero().unwrap() {
                continue;
            }
            let e = extension_module(&z).unwrap().dual();
            let l = carlson_module(&z).unwrap();
            let shifted = omega_inverse(&l.dual()).unwrap();
            let a = jtype_function(&e, &fam, &f).unwrap();
            let b = jtype_function(&shifted, &fam, &f).unwrap();
            for (x, y) in a.iter().zip(&b) {
                assert_eq!(x.stable_part(), y.stable_part(), "p={p}");
            }
            assert_eq!(e.dim(), (p * p) as usize);
        }
    }
}

#[test]
fn carlson_module_types() {
    for p in [3u32, 5] {
        let (_, f, k, fam) = setup(p);
        let pu = p as usize;
        let generic = JordanType::blocks(p, pu, pu).unwrap();
        let special = JordanType::parse(p, &format!("{}[{p}]+[{}]+[1]", p - 1, p - 1)).unwrap();
        let basis = ext_basis(2, &k, &k).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut classes = basis.clone();
        classes.push(random_combination(&basis, p, &mut rng));
        for z in classes {
            if z.is_stably_zero().unwrap() {
                assert!(carlson_module(&z).is_err());
                continue;
            }
            let l = carlson_module(&z).unwrap();
            assert_eq!(l.dim(), omega_power(&k, 2).unwrap().dim() - 1);
            let zeros = ext_z_locus(&z, &fam, &f).unwrap();
            for pt in strata::local_types(&l, &fam, &f).unwrap() {
                let expect = if zeros.contains(&pt.point) { &special } else { &generic };
                assert_eq!(&pt.jtype, expect, "p={p} at {:?}", pt.point);
            }
        }
    }
}

#[test]
fn ext_zero_locus_cases() {
    let (_, f, k, fam) = setup(5);
    let all = fam.points(&f);
    for n in 1..=2 {
        assert_eq!(ext_z_locus(&CohomClass::zero(n, &k, &k).unwrap(), &fam, &f).unwrap(), all);
    }
    for z in ext1_basis(&k).unwrap() {
        let zl = ext_z_locus(&z, &fam, &f).unwrap();
        assert_eq!(zl, z_locus(&z, &fam, &f).unwrap());
        let e = extension_module(&z).unwrap();
        let report = strata::strata(&e, &fam, &Options::over(&f)).unwrap();
        assert_eq!(zl, report.gamma[0].points);
    }
    let om = omega(&k).unwrap().module;
    let kk = k.direct_sum(&k).unwrap();
    for z in ext_basis(1, &om, &kk).unwrap() {
        let zl = ext_z_locus(&z, &fam, &f).unwrap();
        let e = extension_module(&z).unwrap();
        let report = strata::strata(&e, &fam, &Options::over(&f).without_certificates()).unwrap();
        assert!(zl == all || zl == report.gamma[0].points);
    }
}

#[test]
fn error_cases() {
    let (g, f, k, fam) = setup(3);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let bumpy = loop {
        let m = random_module(g, &f, 6, &mut rng);
        if !strata::strata(&m, &fam, &Options::over(&f)).unwrap().is_constant_jrank(1) {
            break m;
        }
    };
    let z = CohomClass::zero(1, &k, &bumpy).unwrap();
    assert_eq!(z_locus(&z, &fam, &f).unwrap_err().kind(), "non-constant-rank");
    assert_eq!(ext_z_locus(&z, &fam, &f).unwrap_err().kind(), "non-constant-jordan-type");
    assert_eq!(carlson_module(&CohomClass::zero(2, &k, &k).unwrap()).unwrap_err().kind(), "zero-class");
    let odd = ext1_basis(&k).unwrap().remove(0);
    assert_eq!(carlson_module(&odd).unwrap_err().kind(), "invalid-module");
    let om = omega(&k).unwrap().module;
    let mut bad = Matrix::zeros(&f, 1, om.dim());
    bad.set(0, om.dim() - 1, 1);
    bad.set(0, 0, 1);
    assert_eq!(CohomClass::new(1, &k, &k, bad).unwrap_err().kind(), "not-homomorphism");
    assert_eq!(CohomClass::zero(0, &k, &k).unwrap_err().kind(), "out-of-range");
    let text = odd.to_json().to_string().replacen('{', "{\"extra\":1,", 1);
    assert!(CohomClass::from_json(&text).is_err());
}

#[test]
fn extension_operator_minors_cut_out_the_line() {
    let (g, f, _, fam) = setup(5);
    let z = CohomClass::from_linear_form(g, &f, &[1, 1]).unwrap();
    let e = extension_module(&z).unwrap();
    let gens = fam.theta(&e).unwrap().minors_ideal(1).unwrap();
    let ext = Field::new(5, 2).unwrap();
    for v in fam.points(&ext) {
        let vanish = gens.iter().all(|g| g.eval(&ext, &v) == 0);
        assert_eq!(vanish, ext.add(v[0], v[1]) == 0, "at {v:?}");
    }
}
