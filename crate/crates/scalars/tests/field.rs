use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use qiso_scalars::{
    eval_numeric, parse_rational, rat, sqrt_rational, tower_report, BigRational, Coeff, ParamConfig, Params, QMode, RatFunc,
    Scalar, ScalarExpr, UPoly,
};

fn mu() -> RatFunc {
    RatFunc::q_pow(2)
}

#[test]
fn gcd_of_cyclotomic_products() {
    // (1 - x^4) and (1 - x^6) share 1 - x^2
    let a = UPoly::from_i64s(&[1, 0, 0, 0, -1]);
    let b = UPoly::from_i64s(&[1, 0, 0, 0, 0, 0, -1]);
    assert_eq!(a.gcd(&b), UPoly::from_i64s(&[-1, 0, 1]));
}

#[test]
fn exact_division_round_trips() {
    let a = UPoly::from_i64s(&[1, 2, 1]);
    let b = UPoly::from_i64s(&[1, 1]);
    assert_eq!(a.div_exact(&b), b);
}

#[test]
fn haar_of_gg_star_reduces() {
    let one = RatFunc::one();
    let m2 = mu().mul(&mu());
    let v = one.sub(&m2).mul(&one.sub(&m2.mul(&m2)).inv().unwrap());
    assert_eq!(v, one.add(&m2).inv().unwrap());
    assert_eq!(v.render(), "1/(1 + mu^2)");
}

#[test]
fn shift_handles_negative_powers() {
    let x = mu().inv().unwrap();
    assert_eq!(x.mul(&mu()), RatFunc::one());
    assert_eq!(x.render(), "1/mu");
    assert_eq!(RatFunc::q().render(), "sqrtmu");
}

#[test]
fn r_squared_is_one_plus_mu_squared() {
    let r = Scalar::r_atom();
    assert_eq!(r.mul(&r), Scalar::from_base(RatFunc::one_plus_mu_sq()));
}

#[test]
fn radicals_inverse() {
    let s = sqrt_rational(&rat(3, 2)).unwrap();
    let x = Scalar::one().add(&s).add(&Scalar::r_atom());
    assert_eq!(x.mul(&x.inv().unwrap()), Scalar::one());
}

#[test]
fn dependent_radicands_collapse() {
    // at t = 1/3: sqrt(c) = sqrt(8/3) = 2 sqrt(2/3)
    let a = sqrt_rational(&rat(8, 3)).unwrap();
    let b = sqrt_rational(&rat(2, 3)).unwrap();
    assert_eq!(a, b.add(&b));
}

#[test]
fn derived_constants_at_half() {
    let p: Params<Scalar> = Params::new(&ParamConfig::default_symbolic()).unwrap();
    // c = 3/2, c + 1/4 = 7/4, λ± = 1/2 ± √7/2
    assert_eq!(p.c, Scalar::from_rational(&rat(3, 2)));
    let lp = p.lambda_plus().unwrap();
    let lm = p.lambda_minus().unwrap();
    assert_eq!(lp.clone() + lm.clone(), Scalar::one());
    assert_eq!(lp * lm, Scalar::from_rational(&rat(-3, 2)));
    // s = −λ₋/σ, so c s² = λ₋²
    let s = p.s().unwrap();
    assert_eq!(s.clone() * s * p.c.clone(), p.lambda_minus().unwrap().mul(&p.lambda_minus().unwrap()));
    assert!(eval_numeric(&p.s().unwrap(), &rat(1, 2), 30).unwrap().sign() == Some(1));
}

#[test]
fn tower_collapses_where_radicands_agree() {
    // t = 1/2: sigma = √(3/2), lamp = √7/2, tau = √(1/2): all new
    let p: Params<Scalar> = Params::new(&ParamConfig::default_symbolic()).unwrap();
    assert!(tower_report(&p).unwrap().iter().all(|a| !a.collapsed));
    // t = 1/3: c = 8/3, tau = √(2/3) = sigma/2
    let p: Params<Scalar> = Params::new(&ParamConfig::symbolic(rat(1, 3)).unwrap()).unwrap();
    let rep = tower_report(&p).unwrap();
    assert!(rep.iter().find(|a| a.name == "tau").unwrap().collapsed);
}

#[test]
fn params_reject_out_of_range() {
    assert!(ParamConfig::symbolic(rat(1, 1)).is_err());
    assert!(ParamConfig::symbolic(rat(0, 1)).is_err());
    assert!(ParamConfig::new(QMode::Rational(rat(3, 2)), rat(1, 2)).is_err());
    assert!(parse_rational("2/0").is_err());
    assert_eq!(parse_rational(" 3 / 6 ").unwrap(), rat(1, 2));
}

#[test]
fn scalar_expressions_normalize() {
    let p: Params<Scalar> = Params::new(&ParamConfig::default_symbolic()).unwrap();
    let e = ScalarExpr::Sub(Box::new(ScalarExpr::Pow(Box::new(ScalarExpr::atom("sigma")), 2)), Box::new(ScalarExpr::atom("c")));
    assert!(e.normalize(&p).unwrap().is_zero_coeff());
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (proptest::collection::vec(-4i64..5, 1..4), proptest::collection::vec(-4i64..5, 1..3), -3i32..4).prop_map(|(n, d, k)| {
        let mut den = RatFunc::zero();
        for (i, c) in d.iter().enumerate() {
            den = den.add(&RatFunc::from_int(*c).mul(&RatFunc::q_pow(i as i32)));
        }
        if den.is_zero() {
            den = RatFunc::one();
        }
        let mut num = RatFunc::zero();
        for (i, c) in n.iter().enumerate() {
            num = num.add(&RatFunc::from_int(*c).mul(&RatFunc::q_pow(i as i32)));
        }
        num.mul(&den.inv().unwrap()).mul(&RatFunc::q_pow(k))
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (ratfunc(), ratfunc(), ratfunc(), 0usize..3).prop_map(|(a, b, c, n)| {
        let root = [rat(3, 2), rat(7, 4), rat(2, 1)][n].clone();
        Scalar::from_base(a)
            .add(&Scalar::r_atom().scale(&b))
            .add(&sqrt_rational(&root).unwrap().scale(&c))
    })
}

fn runner(cases: u32, seed: u8) -> TestRunner {
    TestRunner::new_with_rng(
        Config { cases, failure_persistence: None, ..Config::default() },
        TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]),
    )
}

#[test]
fn rational_function_field_laws() {
    runner(200, 3)
        .run(&(ratfunc(), ratfunc(), ratfunc()), |(a, b, c)| {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert!(a.sub(&a).is_zero());
            if let Some(i) = a.inv() {
                prop_assert!(a.mul(&i).is_one());
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn radical_extension_field_laws() {
    runner(150, 4)
        .run(&(scalar(), scalar(), scalar()), |(a, b, c)| {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            if let Some(i) = a.inv() {
                prop_assert_eq!(a.mul(&i), Scalar::one());
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn evaluation_is_a_ring_map() {
    let q0: BigRational = rat(2, 5);
    runner(150, 5)
        .run(&(ratfunc(), ratfunc()), |(a, b)| {
            if let (Some(x), Some(y), Some(s), Some(p)) = (a.eval(&q0), b.eval(&q0), a.add(&b).eval(&q0), a.mul(&b).eval(&q0)) {
                prop_assert_eq!(s, &x + &y);
                prop_assert_eq!(p, x * y);
            }
            Ok(())
        })
        .unwrap();
}
