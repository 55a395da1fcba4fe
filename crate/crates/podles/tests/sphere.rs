use std::sync::Arc;

use proptest::prelude::*;
use qiso_hopf::Qg;
use qiso_ncalg::instances::{A, G};
use qiso_ncalg::NCPoly;
use qiso_podles::{haar_poly_in_a, haar_poly_in_a_closed, Embedding, ExactSphere, SphereError};
use qiso_scalars::{rat, BigRational, Coeff, ParamConfig, Scalar};

fn qg(t: (i64, i64)) -> Arc<Qg> {
    Qg::new(&ParamConfig::symbolic(rat(t.0, t.1)).unwrap()).unwrap()
}

fn sphere(t: (i64, i64)) -> ExactSphere {
    ExactSphere::new(&qg(t), Embedding::Corrected).unwrap()
}

fn failing(checks: &[qiso_report::Check]) -> Vec<String> {
    checks.iter().filter(|c| !c.passed()).map(|c| c.id.clone()).collect()
}

#[test]
fn corrected_embedding_satisfies_every_relation() {
    for t in [(1, 2), (1, 3), (2, 3)] {
        let s = sphere(t);
        let checks = s.verify_sphere_presentation();
        assert_eq!(checks.len(), 12);
        assert!(failing(&checks).is_empty(), "{t:?}: {:?}", failing(&checks));
    }
}

#[test]
fn printed_embedding_breaks_the_constant_relations() {
    let s = ExactSphere::new(&qg((1, 2)), Embedding::Printed).unwrap();
    let bad = failing(&s.verify_sphere_presentation());
    assert!(bad.contains(&"sphere.x3".to_string()), "{bad:?}");
    assert!(bad.contains(&"sphere.bsb".to_string()), "{bad:?}");
}

#[test]
fn star_relations_hold_on_generators() {
    let s = sphere((1, 2));
    let mu = s.qg.params.mu.clone();
    assert_eq!(s.xm1.star(), s.x1.scale(&-Scalar::inv(&mu).unwrap()));
    assert_eq!(s.x0.star(), s.x0);
    assert_eq!(s.bs, s.b.star());
}

#[test]
fn xc_on_small_inputs() {
    let s = sphere((1, 2));
    let p = &s.qg.params;
    assert!(s.apply_xc(&s.c(Scalar::one())).unwrap().is_zero());
    assert!(s.apply_xc(&s.a).unwrap().is_zero());
    // hand fold: g <| K = q g, g <| E = a, g <| F = 0
    let g = NCPoly::gen(&s.qg.su2, G);
    let gk2 = g.scale(&p.mu);
    let lin = (&g - &gk2).scale(&(p.q.clone() * p.inv(&(p.mu_pow(-1) - p.mu.clone())).unwrap() * p.inv(&p.sigma().unwrap()).unwrap()));
    let want = &lin + &NCPoly::gen(&s.qg.su2, A).scale(&p.q_pow(-1));
    assert_eq!(s.apply_xc(&g).unwrap(), want);
    assert!(failing(&s.xc_checks().unwrap()).is_empty());
}

#[test]
fn sphere_basis_sizes_and_kernel() {
    let s = sphere((1, 2));
    assert_eq!(s.sphere_basis(0, 0).len(), 1);
    let b11 = s.sphere_basis(1, 1);
    let labels: Vec<_> = b11.iter().map(|(l, _)| l.as_str()).collect();
    assert_eq!(labels, ["1", "B", "B*", "A", "A B", "A B*"]);
    assert!(failing(&s.basis_checks(1, 1).unwrap()).is_empty());
    // k ≤ 2 gives 3 powers of A, each with B, B², B*, B*²: 3 + 3·4 = 15
    let checks = s.basis_checks(2, 2).unwrap();
    assert_eq!(checks.len(), 16);
    assert!(failing(&checks).is_empty());
}

#[test]
fn kernel_dimensions_match_sphere_basis() {
    let s = sphere((1, 2));
    // pairs (k, l) with 2(k + l) ≤ d, counting B and B* separately
    let expect = [1, 1, 4, 4, 9];
    for (d, &n) in expect.iter().enumerate() {
        let r = s.kernel_dimension(d).unwrap();
        assert_eq!(r.kernel_dim, n, "d = {d}");
        assert!(r.ok(), "{r:?}");
    }
    assert_eq!(s.kernel_dimension(4).unwrap().domain, 55);
    assert!(matches!(s.kernel_dimension(5), Err(SphereError::DegreeGuard { .. })));
}

#[test]
fn haar_on_polynomials_in_a() {
    let s = sphere((1, 2));
    let p = &s.qg.params;
    let one = Scalar::one();
    let z = Scalar::zero();
    assert_eq!(haar_poly_in_a(&s.qg, &[one.clone()]).unwrap(), one);
    let ha = haar_poly_in_a(&s.qg, &[z.clone(), one.clone()]).unwrap();
    assert_eq!(ha, p.inv(&p.one_plus_mu2()).unwrap());
    assert_eq!(ha.render(), "1/(1 + mu^2)");
    assert_eq!(s.qg.haar(&s.a).unwrap(), ha);
    let ha2 = haar_poly_in_a(&s.qg, &[z.clone(), z, one]).unwrap();
    let want = (Scalar::one() - p.mu_pow(2)) * (Scalar::one() + p.c.clone()) * p.inv(&(Scalar::one() - p.mu_pow(6))).unwrap();
    assert_eq!(ha2, want);
    assert_eq!(s.qg.haar(&(&s.a * &s.a)).unwrap(), want);
}

#[test]
fn haar_in_a_agrees_with_embedding_for_each_t() {
    for t in [(1, 2), (1, 3), (2, 3)] {
        let s = sphere(t);
        let checks = s.haar_a_checks(4).unwrap();
        assert_eq!(checks.len(), 10);
        assert!(failing(&checks).is_empty(), "{t:?}: {:?}", failing(&checks));
    }
}

#[test]
fn norm_values_match_the_stated_closed_form() {
    let s = sphere((1, 2));
    let p = &s.qg.params;
    let checks = s.lemma_norm_values().unwrap();
    assert_eq!(checks.len(), 12);
    assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
    // t²(1−μ²)(1−μ⁶)⁻¹[μ² + t⁻¹(μ⁴+2μ²+1) + t(−μ⁴−2μ²−1)]
    let one = Scalar::one();
    let sq = p.mu_pow(4) + p.mu_pow(2) * Scalar::from_i64(2) + one.clone();
    let bracket = p.mu_pow(2) + p.inv(&p.t).unwrap() * sq.clone() - p.t.clone() * sq;
    let want = p.t.clone() * p.t.clone() * (one.clone() - p.mu_pow(2)) * p.inv(&(one - p.mu_pow(6))).unwrap() * bracket;
    assert_eq!(s.norm_value().unwrap(), want);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, rng_seed: proptest::test_runner::RngSeed::Fixed(7), ..ProptestConfig::default() })]

    #[test]
    fn haar_in_a_is_linear_and_matches_embedding(f in prop::collection::vec(-5i64..=5, 1..5)) {
        let s = sphere((1, 3));
        let f: Vec<Scalar> = f.into_iter().map(Scalar::from_i64).collect();
        let mut x = s.c(Scalar::zero());
        let mut ak = s.c(Scalar::one());
        for fk in &f {
            x = &x + &ak.scale(fk);
            ak = &ak * &s.a;
        }
        let via = haar_poly_in_a(&s.qg, &f).unwrap();
        prop_assert_eq!(s.qg.haar(&x).unwrap(), via.clone());
        prop_assert_eq!(haar_poly_in_a_closed(&s.qg, &f).unwrap(), via);
    }

    #[test]
    fn sphere_elements_are_annihilated(k in 0u32..3, l in -2i32..=2, c in 1i64..4) {
        let s = sphere((1, 2));
        let x = s.basis_element(k, l).scale(&Scalar::from_rational(&BigRational::new(c.into(), 3.into())));
        prop_assert!(s.apply_xc(&x).unwrap().is_zero());
    }
}

#[test]
fn haar_value_lines() {
    let checks = sphere((1, 3)).haar_value_checks().unwrap();
    let ids: Vec<&str> = checks.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, ["haar.A", "haar.B", "haar.Bstar"]);
    assert!(failing(&checks).is_empty());
}
