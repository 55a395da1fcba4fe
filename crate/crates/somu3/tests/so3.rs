use qiso_ncalg::instances::{A, AS, G, GS};
use qiso_ncalg::NCPoly;
use qiso_report::Check;
use proptest::prelude::*;
use qiso_scalars::{rat, ParamConfig, QMode, Scalar};
use qiso_somu3::{explicit_values, t_independence, So3Bench, So3Error, LEMMAS};

fn bench() -> So3Bench {
    So3Bench::new(&ParamConfig::default_symbolic()).unwrap()
}

fn failing(checks: &[Check]) -> Vec<String> {
    checks.iter().filter(|c| !c.passed()).map(|c| format!("{}: {:?}", c.id, c.residual)).collect()
}

#[test]
fn so3_relations_hold() {
    let b = bench();
    let checks = b.presentation();
    assert_eq!(checks.len(), 20);
    assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
}

#[test]
fn extraction_gives_the_expected_coefficients() {
    let b = bench();
    let checks = b.extraction().unwrap();
    assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
    // oracle written straight from the α, γ forms
    let su2 = &b.qgb.su2;
    let p = &b.qgb.params;
    let one = NCPoly::one(su2);
    let t2 = &one - &NCPoly::word(su2, &[GS, G]).scale(&p.one_plus_mu2());
    assert_eq!(b.base.t[1], t2);
    assert_eq!(b.base.s[2], NCPoly::word(su2, &[A, A]));
    let t1 = (&one - &b.base.t[1]).scale(&p.inv(&p.one_plus_mu2()).unwrap());
    assert_eq!(b.base.t[0], t1);
    assert_eq!(b.base.t[3], NCPoly::word(su2, &[G, AS]).scale(&p.mu_pow(-1)));
    let ex = explicit_values(&b.qgb).unwrap();
    assert!(ex.same_terms(&b.base));
}

#[test]
fn z_matrix_is_unitary_and_matches_z_prime() {
    let b = bench();
    let checks = b.z().unwrap();
    assert_eq!(checks.len(), 7);
    assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
}

#[test]
fn antipode_table_holds() {
    let b = bench();
    let checks = b.antipode().unwrap();
    assert_eq!(checks.len(), 9);
    assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
}

#[test]
fn identity_catalog_holds() {
    let b = bench();
    let checks = b.lemmas(None).unwrap();
    assert_eq!(checks.len(), LEMMAS.len());
    assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
}

#[test]
fn catalog_selection_and_unknown_ids() {
    let b = bench();
    let sel = b.lemmas(Some(&["eq10".to_string(), "eq16".to_string()])).unwrap();
    assert_eq!(sel.iter().map(|c| c.id.as_str()).collect::<Vec<_>>(), ["eq10", "eq16"]);
    assert!(matches!(b.lemmas(Some(&["nope".to_string()])), Err(So3Error::UnknownId(_))));
}

#[test]
fn homomorphism_images() {
    let b = bench();
    let checks = b.homomorphism().unwrap();
    assert_eq!(checks.len(), 5);
    assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
    // S2 + (1+μ²) αγ by hand
    let p = &b.qgb.params;
    let d = &b.base.s[1] + &NCPoly::word(&b.qgb.su2, &[A, G]).scale(&p.one_plus_mu2());
    assert!(d.is_zero());
}

#[test]
fn coefficients_do_not_depend_on_t() {
    let ts = [rat(1, 2), rat(1, 3), rat(2, 3)];
    assert!(t_independence(&QMode::Symbolic, &ts).unwrap().passed());
}

#[test]
fn w32_complement_is_invariant() {
    let b = bench();
    let checks = b.w32().unwrap();
    assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
    let r = qiso_somu3::w32_decomposition(&b.sphere).unwrap();
    assert_eq!((r.rank, r.complement_dim, r.leaks), (9, 5, 0));
}

#[test]
fn printed_forms_fail() {
    let b = bench();
    let checks = b.printed().unwrap();
    assert!(checks.iter().all(|c| !c.passed()), "{checks:?}");
}

#[test]
fn exact_and_base_coefficients_agree() {
    let b = bench();
    for ((_, x), (_, y)) in b.co.iter().zip(b.base.iter()) {
        let xs: Vec<_> = x.terms().iter().map(|(m, c)| (m.clone(), c.as_base().unwrap())).collect();
        let ys: Vec<_> = y.terms().iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        assert_eq!(xs, ys);
    }
    let _ = Scalar::one();
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, rng_seed: proptest::test_runner::RngSeed::Fixed(11), ..ProptestConfig::default() })]

    #[test]
    fn coefficients_are_the_same_for_any_t(num in 1i64..9, extra in 1i64..9) {
        let b = So3Bench::new(&ParamConfig::symbolic(rat(num, num + extra)).unwrap()).unwrap();
        prop_assert!(explicit_values(&b.qgb).unwrap().same_terms(&b.base));
        prop_assert!(b.antipode().unwrap().iter().all(Check::passed));
    }
}
