use proptest::prelude::*;
use qiso_ncalg::*;
use qiso_scalars::{rat, ParamConfig, Params, QMode};

fn alg() -> std::sync::Arc<Algebra<qiso_scalars::BigRational>> {
    let cfg = ParamConfig::new(QMode::Rational(rat(2, 5)), rat(1, 2)).unwrap();
    su2(&Params::new(&cfg).unwrap())
}

fn word() -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0u8..4, 0..=6)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, rng_seed: proptest::test_runner::RngSeed::Fixed(7), ..ProptestConfig::default() })]

    #[test]
    fn normalize_is_idempotent(w in word()) {
        let s = alg();
        let x = NCPoly::word(&s, &w);
        for m in x.terms().keys() {
            prop_assert!(s.is_normal(m.letters()));
            prop_assert!(su2_shape(m.letters()));
        }
    }

    #[test]
    fn star_commutes_with_normalize(w in word()) {
        let s = alg();
        let lhs = NCPoly::word(&s, &s.star_word(&w));
        prop_assert_eq!(lhs, NCPoly::word(&s, &w).star());
    }

    #[test]
    fn star_is_anti_multiplicative(u in word(), v in word()) {
        let s = alg();
        let (x, y) = (NCPoly::word(&s, &u), NCPoly::word(&s, &v));
        prop_assert_eq!((&x * &y).star(), &y.star() * &x.star());
    }

    #[test]
    fn product_is_associative(u in word(), v in word(), w in word()) {
        let s = alg();
        let (x, y, z) = (NCPoly::word(&s, &u), NCPoly::word(&s, &v), NCPoly::word(&s, &w));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&NCPoly::one(&s) * &x, x);
    }

    #[test]
    fn span_round_trip(u in word(), v in word(), w in word()) {
        let s = alg();
        let basis: Vec<_> = [u, v].iter().map(|x| NCPoly::word(&s, x)).collect();
        if rank(&basis.iter().map(|b| b.terms().clone()).collect::<Vec<_>>()).unwrap() == 2 {
            let target = &basis[0] + &basis[1].scale(&rat(3, 7));
            let c = solve_in_span(&target, &basis).unwrap().unwrap();
            prop_assert!((&combine(&c, &basis).unwrap() - &target).is_zero());
            let _ = w;
        }
    }
}
