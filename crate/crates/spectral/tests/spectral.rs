use std::sync::Arc;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use qiso_hopf::Qg;
use qiso_ncalg::instances::{A, AS, G, GS};
use qiso_ncalg::NCPoly;
use qiso_podles::{Embedding, ExactSphere};
use qiso_report::{Check, Status};
use qiso_scalars::{rat, Coeff, ParamConfig, Scalar};
use qiso_spectral::{ExactSpectral, Order, SpectralError, VecKey, Weights, DEFAULT_MAX_L2};

fn spectral(t: (i64, i64), max_l2: i32) -> ExactSpectral {
    let qg: Arc<Qg> = Qg::new(&ParamConfig::symbolic(rat(t.0, t.1)).unwrap()).unwrap();
    ExactSpectral::new(ExactSphere::new(&qg, Embedding::Corrected).unwrap(), max_l2)
}

fn failing(checks: &[Check]) -> Vec<String> {
    checks.iter().filter(|c| !c.passed()).map(|c| c.id.clone()).collect()
}

fn key(l2: i32, m2: i32, n2: i32) -> VecKey {
    VecKey { l2, m2, n2 }
}

fn g(sp: &ExactSpectral, x: u8) -> NCPoly<Scalar> {
    NCPoly::gen(&sp.qg.su2, x)
}

#[test]
fn lowest_vectors_in_closed_form() {
    let sp = spectral((1, 2), 1);
    let p = &sp.qg.params;
    let s = sp.sphere.s.clone();
    let top = sp.payload(key(1, 1, 1)).unwrap();
    assert_eq!(top, &g(&sp, AS) - &g(&sp, GS).scale(&s));
    let low = sp.payload(key(1, -1, 1)).unwrap();
    let want = &g(&sp, G) + &g(&sp, A).scale(&(s.clone() * p.mu_pow(-1)));
    assert_eq!(low, want);
    let um = sp.u(-1);
    let want = &g(&sp, GS).scale(&-p.mu.clone()) - &g(&sp, AS).scale(&(p.mu.clone() * s));
    assert_eq!(um, want);
}

#[test]
fn top_norm_matches_closed_form() {
    for t in [(1, 2), (1, 3), (2, 3)] {
        let sp = spectral(t, 1);
        let p = &sp.qg.params;
        let s = sp.sphere.s.clone();
        let want = (Scalar::one() + s.clone() * s) * p.one_plus_mu2().try_inv().unwrap();
        assert_eq!(sp.vector(key(1, 1, 1)).unwrap().norm2, want, "t = {t:?}");
    }
}

#[test]
fn haar_oracle_for_top_norm() {
    // ṽ*ṽ expanded by hand, each word through the Haar state
    let sp = spectral((1, 2), 1);
    let s = sp.sphere.s.clone();
    let h = |w: &[u8]| sp.qg.haar(&NCPoly::word(&sp.qg.su2, w)).unwrap();
    let by_parts = h(&[A, AS]) - (h(&[A, GS]) + h(&[G, AS])) * s.clone() + h(&[G, GS]) * s.clone() * s;
    assert_eq!(sp.vector(key(1, 1, 1)).unwrap().norm2, by_parts);
}

#[test]
fn partners_in_n_are_orthogonal() {
    let sp = spectral((1, 3), 3);
    for l2 in [1, 3] {
        let b = sp.build_level(l2).unwrap();
        for (i, k) in b.keys().iter().enumerate() {
            if let Some(j) = b.position(VecKey { n2: -k.n2, ..*k }) {
                assert!(b.gram[i][j].is_zero_coeff(), "{k}");
            }
        }
        assert!(sp.d_bookkeeping(l2).unwrap().passed());
    }
}

#[test]
fn level_one_suite_at_three_parameters() {
    for t in [(1, 2), (1, 3), (2, 3)] {
        let sp = spectral(t, 3);
        let checks = sp.suite(1, false).unwrap();
        assert!(failing(&checks).is_empty(), "{t:?}: {:?}", failing(&checks));
        let control = checks.iter().find(|c| c.id == "spectral.control.untwisted.l1").unwrap();
        assert_eq!(control.status, Status::NegativeControl);
    }
}

#[test]
fn default_suite_covers_level_three_expansions() {
    let sp = spectral((1, 2), DEFAULT_MAX_L2);
    let checks = sp.suite(3, false).unwrap();
    assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
    for id in ["spectral.pi.B.l3", "spectral.twisted.R0.l3", "spectral.state.A.l3", "spectral.unitary.rows.l3"] {
        assert!(checks.iter().any(|c| c.id == id), "missing {id}");
    }
}

#[test]
fn printed_weight_fails() {
    let sp = spectral((1, 2), 3);
    let bad = failing(&sp.printed_checks(1).unwrap());
    assert!(bad.contains(&"spectral.printed.twisted.R.l1".to_string()), "{bad:?}");
    assert!(bad.contains(&"spectral.printed.state.A.l1".to_string()), "{bad:?}");
}

#[test]
fn level_state_equals_haar() {
    let sp = spectral((2, 3), 3);
    let s = &sp.sphere;
    let w = Weights::R.values(&sp, &ExactSpectral::level_keys(3));
    for x in [s.a.clone(), s.b.clone(), &s.a * &s.a, &s.b * &s.bs] {
        assert_eq!(sp.level_state(3, &x, &w).unwrap(), sp.qg.haar(&x).unwrap(), "{x}");
    }
}

#[test]
fn corep_is_n_diagonal_and_reassembles() {
    let sp = spectral((1, 2), 3);
    for l2 in [1, 3] {
        let c = sp.coaction_block(l2).unwrap();
        assert!(c.n_offdiagonal().is_empty());
        assert_eq!(c.max_degree(), l2 as usize);
        for i in 0..c.keys.len() {
            let v = sp.vector(c.keys[i]).unwrap();
            assert_eq!(sp.reassembled(&c, i).unwrap(), sp.qg.coproduct(&v.payload).unwrap());
        }
    }
}

#[test]
fn untwisted_weights_break_the_row_identity() {
    let sp = spectral((1, 2), 1);
    let b = sp.build_level(1).unwrap();
    let c = sp.coaction_block(1).unwrap();
    let ones = Weights::Ones.values(&sp, &b.keys());
    assert!(sp.weighted_defects(&b, &c, &ones, Order::QQs) > 0);
    assert_eq!(sp.weighted_defects(&b, &c, &ones, Order::QsQ), 0);
}

#[test]
fn level_guard() {
    let sp = spectral((1, 2), 3);
    assert!(matches!(sp.build_level(5), Err(SpectralError::LevelGuard { got: 5, max: 3 })));
    assert!(matches!(sp.build_level(2), Err(SpectralError::LevelGuard { .. })));
    assert!(matches!(sp.payload(key(3, 5, 1)), Err(SpectralError::NoSuchVector { .. })));
}

#[test]
fn key_display() {
    assert_eq!(key(1, -1, 1).to_string(), "v[l=1/2, m=-1/2, N=1/2]");
    assert_eq!(key(3, 3, -1).to_string(), "v[l=3/2, m=3/2, N=-1/2]");
}

#[test]
fn level_one_twisted_trace_over_random_t() {
    let mut runner = TestRunner::new_with_rng(
        Config { cases: 16, failure_persistence: None, ..Config::default() },
        TestRng::from_seed(RngAlgorithm::ChaCha, &[13; 32]),
    );
    runner
        .run(&(1i64..40, 2i64..41), |(a, b)| {
            prop_assume!(a < b);
            let sp = spectral((a, b), 1);
            let bl = sp.build_level(1).unwrap();
            let c = sp.coaction_block(1).unwrap();
            for w in [Weights::R, Weights::R0] {
                prop_assert_eq!(sp.weighted_defects(&bl, &c, &w.values(&sp, &bl.keys()), Order::QQs), 0);
            }
            prop_assert!(sp.gram_check(1).unwrap().passed());
            Ok(())
        })
        .unwrap();
}
