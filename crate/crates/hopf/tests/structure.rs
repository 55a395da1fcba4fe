use std::time::Instant;

use qiso_hopf::{Qg, QgBase, Side};
use qiso_ncalg::instances::{A, AS, E, F, G, GS, K, KINV};
use qiso_ncalg::{NCPoly, TensorPoly};
use qiso_scalars::{ParamConfig, RatFunc, Scalar};

fn qg() -> std::sync::Arc<QgBase> {
    QgBase::new(&ParamConfig::default_symbolic()).unwrap()
}

fn mu() -> RatFunc {
    RatFunc::q_pow(2)
}

fn all_pass(checks: &[qiso_report::Check]) {
    for c in checks {
        assert!(c.passed(), "{} failed: {:?}", c.id, c.residual);
    }
}

#[test]
fn coproduct_of_gamma() {
    let h = qg();
    let d = h.coproduct(&h.gen_su2(G)).unwrap();
    let want = TensorPoly::pure(&h.gen_su2(G), &h.gen_su2(A)).add(&TensorPoly::pure(&h.gen_su2(AS), &h.gen_su2(G)));
    assert_eq!(d, want);
    assert_eq!(h.coproduct(&NCPoly::one(&h.su2)).unwrap(), TensorPoly::one(&h.su2, &h.su2));
}

#[test]
fn coproduct_of_gamma_gamma_star_by_hand() {
    let h = qg();
    let (a, as_, g, gs) = (h.gen_su2(A), h.gen_su2(AS), h.gen_su2(G), h.gen_su2(GS));
    let p = TensorPoly::pure;
    // (g⊗a + a*⊗g)(g*⊗a* + a⊗g*)
    let by_hand = p(&(&g * &gs), &(&a * &as_))
        .add(&p(&(&g * &a), &(&a * &gs)))
        .add(&p(&(&as_ * &gs), &(&g * &as_)))
        .add(&p(&(&as_ * &a), &(&g * &gs)));
    assert_eq!(h.coproduct(&(&g * &gs)).unwrap(), by_hand);
}

#[test]
fn counit_and_antipode_values() {
    let h = qg();
    let x = &h.gen_su2(A) * &h.gen_su2(GS);
    assert_eq!(h.counit(&x).unwrap(), RatFunc::zero());
    assert_eq!(h.antipode(&h.gen_uq(E)).unwrap(), h.gen_uq(E).scale(&-mu()));
    let (l, r) = h.antipode_defects(&h.gen_su2(A)).unwrap();
    assert!(l.is_zero() && r.is_zero());
}

#[test]
fn haar_values() {
    let h = qg();
    let one = RatFunc::one();
    assert_eq!(h.haar(&NCPoly::one(&h.su2)).unwrap(), one);
    let ggs = &h.gen_su2(G) * &h.gen_su2(GS);
    let want = (one.clone() + mu() * mu()).inv().unwrap();
    assert_eq!(h.haar(&ggs).unwrap(), want);
    assert_eq!(h.haar(&ggs).unwrap().render(), "1/(1 + mu^2)");
    assert_eq!(h.inner_product(&h.gen_su2(A), &h.gen_su2(G)).unwrap(), RatFunc::zero());
    let aa = h.inner_product(&h.gen_su2(A), &h.gen_su2(A)).unwrap();
    assert_eq!(aa, mu() * mu() * want);
}

#[test]
fn haar_of_gamma_gamma_star_solves_invariance() {
    // (id⊗h)Δ(gg*) = h(gg*)1 forces h(aa*)h... ; solve with h(gg*) unknown:
    // (id⊗h)Δ(gg*) = gg* h(aa*) + a*a h(gg*) = gg*(1 - μ² x) + (1 - gg*) x
    // constant part x, gg* coefficient 1 - μ² x - x, so x = 1/(1 + μ²).
    let h = qg();
    let x = h.haar(&(&h.gen_su2(G) * &h.gen_su2(GS))).unwrap();
    let coef = RatFunc::one() - mu() * mu() * x.clone() - x;
    assert!(coef.is_zero());
}

#[test]
fn pairing_examples() {
    let h = qg();
    assert_eq!(h.pair(&h.gen_uq(K), &h.gen_su2(A)).unwrap(), RatFunc::q_pow(-1));
    assert_eq!(h.pair(&h.gen_uq(E), &h.gen_su2(G)).unwrap(), RatFunc::one());
    let x = &(&h.gen_su2(A) * &h.gen_su2(A)) + &h.gen_su2(G);
    assert_eq!(h.pair(&NCPoly::one(&h.uq), &x).unwrap(), h.counit(&x).unwrap());
}

#[test]
fn action_examples() {
    let h = qg();
    assert_eq!(h.act_left(&h.gen_uq(E), &h.gen_su2(A)).unwrap(), h.gen_su2(GS).scale(&-mu()));
    assert_eq!(h.act_right(&h.gen_su2(G), &h.gen_uq(E)).unwrap(), h.gen_su2(A));
    assert_eq!(h.act_left(&h.gen_uq(K), &h.gen_su2(G)).unwrap(), h.gen_su2(G).scale(&RatFunc::q_pow(-1)));
}

#[test]
fn table_route_matches_pairing_route() {
    let h = qg();
    let x = &(&h.gen_su2(A) * &h.gen_su2(G)) + &(&h.gen_su2(AS) * &h.gen_su2(GS));
    let y = &x * &h.gen_su2(A);
    for w in [vec![E], vec![F], vec![K], vec![E, F], vec![F, K, E], vec![KINV, F, F]] {
        let f = NCPoly::word(&h.uq, &w);
        for side in [Side::Left, Side::Right] {
            for z in [&x, &y] {
                assert_eq!(h.act_word(side, &w, z), h.act_via_pairing(side, &f, z).unwrap(), "{w:?} {side:?}");
            }
        }
    }
}

#[test]
fn suites_pass() {
    let h = qg();
    all_pass(&h.su2_relation_checks());
    all_pass(&h.uq_relation_checks());
    all_pass(&h.structure_well_defined_checks());
    all_pass(&h.action_table_checks());
    all_pass(&h.pairing_checks());
    let t = Instant::now();
    all_pass(&h.rewriting_checks(6));
    all_pass(&h.hopf_axiom_checks(4));
    all_pass(&h.haar_checks(4));
    eprintln!("degree-4 structure checks: {:?}", t.elapsed());
}

#[test]
fn exact_scalars_agree_with_base_field() {
    let h = Qg::new(&ParamConfig::default_symbolic()).unwrap();
    let ggs = &h.gen_su2(G) * &h.gen_su2(GS);
    assert_eq!(h.haar(&ggs).unwrap(), Scalar::from_base((RatFunc::one() + mu() * mu()).inv().unwrap()));
    all_pass(&h.action_table_checks());
}
