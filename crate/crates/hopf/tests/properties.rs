use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use qiso_hopf::QgBase;
use qiso_ncalg::NCPoly;
use qiso_scalars::ParamConfig;

fn qg() -> &'static Arc<QgBase> {
    static QG: OnceLock<Arc<QgBase>> = OnceLock::new();
    QG.get_or_init(|| QgBase::new(&ParamConfig::default_symbolic()).unwrap())
}

fn word() -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0u8..4, 0..=4)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, rng_seed: RngSeed::Fixed(21), ..ProptestConfig::default() })]

    #[test]
    fn coproduct_is_multiplicative(u in word(), v in word(), uq in any::<bool>()) {
        let h = qg();
        let alg = if uq { &h.uq } else { &h.su2 };
        let (x, y) = (NCPoly::word(alg, &u), NCPoly::word(alg, &v));
        let lhs = h.coproduct(&(&x * &y)).unwrap();
        prop_assert_eq!(lhs, h.coproduct(&x).unwrap().mul(&h.coproduct(&y).unwrap()));
    }

    #[test]
    fn hopf_axioms_on_words(u in word(), uq in any::<bool>()) {
        let h = qg();
        let x = NCPoly::word(if uq { &h.uq } else { &h.su2 }, &u);
        prop_assert_eq!(h.coassociativity_defect(&x).unwrap(), 0);
        let (l, r) = h.counit_defects(&x).unwrap();
        prop_assert!(l.is_zero() && r.is_zero());
        let (l, r) = h.antipode_defects(&x).unwrap();
        prop_assert!(l.is_zero() && r.is_zero());
    }

    #[test]
    fn haar_is_invariant(u in word()) {
        let h = qg();
        let (l, r) = h.haar_defects(&NCPoly::word(&h.su2, &u)).unwrap();
        prop_assert!(l.is_zero() && r.is_zero());
    }

    #[test]
    fn antipode_is_anti_multiplicative(u in word(), v in word()) {
        let h = qg();
        let (x, y) = (NCPoly::word(&h.su2, &u), NCPoly::word(&h.su2, &v));
        let lhs = h.antipode(&(&x * &y)).unwrap();
        prop_assert_eq!(lhs, &h.antipode(&y).unwrap() * &h.antipode(&x).unwrap());
    }
}
