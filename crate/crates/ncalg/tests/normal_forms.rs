use qiso_ncalg::instances::{A, AS, E, F, G, GS, K, KINV};
use qiso_ncalg::*;
use qiso_scalars::{BaseParams, ExactParams, ParamConfig, QMode, RatFunc, Scalar};

fn params() -> ExactParams {
    ExactParams::new(&ParamConfig::default_symbolic()).unwrap()
}

#[test]
fn gamma_alpha_commutes_up_to_mu() {
    let p = params();
    let s = su2(&p);
    let lhs = NCPoly::word(&s, &[G, A]);
    let rhs = NCPoly::word(&s, &[A, G]).scale(&p.mu_pow(-1));
    assert_eq!(lhs, rhs);
}

#[test]
fn alpha_alpha_star() {
    let p = params();
    let s = su2(&p);
    let x = NCPoly::word(&s, &[A, AS]);
    let want = &NCPoly::one(&s) - &NCPoly::word(&s, &[G, GS]).scale(&p.mu_pow(2));
    assert_eq!(x, want);
    assert_eq!(x.render(), "1 - mu^2 g g*");
}

#[test]
fn unitarity_relation_is_zero() {
    let p = params();
    let s = su2(&p);
    let x = &(&NCPoly::word(&s, &[AS, A]) + &NCPoly::word(&s, &[G, GS])) - &NCPoly::one(&s);
    assert!(x.is_zero());
    let y = &NCPoly::gen(&s, A) - &NCPoly::gen(&s, G);
    assert!(!y.is_zero());
}

#[test]
fn star_of_alpha_gamma() {
    let p = params();
    let s = su2(&p);
    let ag = NCPoly::word(&s, &[A, G]);
    // (αγ)* = γ*α* = μ α*γ*
    assert_eq!(ag.star(), NCPoly::word(&s, &[AS, GS]).scale(&p.mu));
    assert_eq!(NCPoly::one(&s).star(), NCPoly::one(&s));
}

#[test]
fn uq_commutator() {
    let p = params();
    let u = uq(&p).unwrap();
    let ef = &NCPoly::word(&u, &[E, F]) - &NCPoly::word(&u, &[F, E]);
    let d = (p.mu.clone() - p.mu_pow(-1)).inv().unwrap();
    let want = (&NCPoly::word(&u, &[K, K]) - &NCPoly::word(&u, &[KINV, KINV])).scale(&d);
    assert_eq!(ef, want);
    assert_eq!(NCPoly::word(&u, &[K, KINV]), NCPoly::one(&u));
}

#[test]
fn confluence_both_instances() {
    let p = params();
    let rs = confluence_check(&su2(&p), 6);
    assert!(rs.ok(), "{rs:?}");
    assert!(!rs.pairs.is_empty());
    let ru = confluence_check(&uq(&p).unwrap(), 6);
    assert!(ru.ok());
    let rf = confluence_check(&free::<Scalar>(vec!["x", "y"]), 6);
    assert!(rf.ok() && rf.pairs.is_empty());
}

#[test]
fn presentations_are_star_closed() {
    let p = params();
    assert!(star_closed(&su2(&p)));
    assert!(star_closed(&uq(&p).unwrap()));
}

#[test]
fn pbw_counts_match() {
    let cfg = ParamConfig::new(QMode::Rational(qiso_scalars::rat(1, 3)), qiso_scalars::rat(1, 2)).unwrap();
    let p = qiso_scalars::Params::<qiso_scalars::BigRational>::new(&cfg).unwrap();
    for d in 0..=6 {
        let c = pbw_count(&su2(&p), d).unwrap();
        assert!(c.ok(), "{c:?}");
        let c = pbw_count(&uq(&p).unwrap(), d).unwrap();
        assert!(c.ok(), "{c:?}");
    }
    // degree ≤ 2 for O(SU_μ(2)): 1 + 4 + (4 + 4 + 1 + 1 + 1) by the shape
    assert_eq!(pbw_count(&su2(&p), 2).unwrap().shape_count, 1 + 4 + 9);
}

#[test]
fn mismatched_algebras_error() {
    let p = params();
    let s = su2(&p);
    let u = uq(&p).unwrap();
    let e = NCPoly::gen(&s, A).try_mul(&NCPoly::gen(&u, E));
    assert!(matches!(e, Err(NcError::AlgebraMismatch(..))));
}

#[test]
fn solve_in_span_cases() {
    let p = BaseParams::new(&ParamConfig::default_symbolic()).unwrap();
    let s = su2(&p);
    let a = NCPoly::gen(&s, A);
    let g = NCPoly::gen(&s, G);
    let x = &a.scale(&RatFunc::from_int(3)) - &g;
    let c = solve_in_span(&x, &[a.clone(), g.clone()]).unwrap().unwrap();
    assert_eq!(c, vec![RatFunc::from_int(3), RatFunc::from_int(-1)]);
    assert_eq!(solve_in_span(&NCPoly::gen(&s, GS), &[a.clone(), g.clone()]).unwrap(), None);
    assert!(matches!(solve_in_span(&a, &[a.clone(), a.scale(&RatFunc::q())]), Err(NcError::DependentBasis(1))));
}

#[test]
fn kernel_of_a_projection() {
    let p = BaseParams::new(&ParamConfig::default_symbolic()).unwrap();
    let s = su2(&p);
    let imgs: Vec<_> = [NCPoly::gen(&s, A), NCPoly::gen(&s, A), NCPoly::gen(&s, G)].iter().map(|x| x.terms().clone()).collect();
    let k = kernel(&imgs).unwrap();
    assert_eq!(k, vec![vec![RatFunc::from_int(-1), RatFunc::one(), RatFunc::zero()]]);
}

#[test]
fn degree_filter_parity() {
    let p = params();
    let s = su2(&p);
    assert!(degree_filter(&NCPoly::word(&s, &[GS, G]), true).unwrap());
    assert!(!degree_filter(&NCPoly::gen(&s, A), true).unwrap());
    assert!(degree_filter(&NCPoly::gen(&uq(&p).unwrap(), E), true).is_err());
}

#[test]
fn tensor_render_and_product() {
    let p = params();
    let s = su2(&p);
    let t = TensorPoly::pure(&NCPoly::gen(&s, G), &NCPoly::gen(&s, A));
    assert_eq!(t.render(), "g (x) a");
    let tt = t.mul(&t);
    assert_eq!(tt, TensorPoly::pure(&NCPoly::word(&s, &[G, G]), &NCPoly::word(&s, &[A, A])));
    assert_eq!(TensorPoly::one(&s, &s).multiply().unwrap(), NCPoly::one(&s));
}
