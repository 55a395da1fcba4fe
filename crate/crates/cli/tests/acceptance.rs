//! Acceptance run: one line per criterion, exact arithmetic throughout.
//! Runs without the libtest harness so the lines are always printed.

use std::sync::Arc;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use qiso_hopf::Qg;
use qiso_ncalg::{pbw_count, su2_shape, uq_shape, Algebra, NCPoly};
use qiso_podles::{Embedding, ExactSphere, MAX_KERNEL_DEGREE};
use qiso_report::{Check, Status};
use qiso_scalars::{rat, sqrt_rational, BigRational, ParamConfig, RatFunc, Scalar};
use qiso_somu3::{ExactCoefficients, So3Bench};
use qiso_spectral::{ExactSpectral, DEFAULT_MAX_L2};

type Outcome = Result<String, String>;

fn half() -> ParamConfig {
    ParamConfig::default_symbolic()
}

fn all_pass(checks: &[Check]) -> Result<(), String> {
    let bad: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.id.as_str()).collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(format!("failing: {}", bad.join(", ")))
    }
}

fn count(checks: &[Check], prefix: &str) -> usize {
    checks.iter().filter(|c| c.id.starts_with(prefix)).count()
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn presentations() -> Outcome {
    let qg = Qg::new(&half()).map_err(|e| e.to_string())?;
    let su2 = qg.su2_relation_checks();
    let uq = qg.uq_relation_checks();
    let rw = qg.rewriting_checks(6);
    let sphere = ExactSphere::new(&qg, Embedding::Corrected).map_err(|e| e.to_string())?.verify_sphere_presentation();
    let so3 = So3Bench::new(&half()).map_err(|e| e.to_string())?.presentation();
    for set in [&su2, &uq, &rw, &sphere, &so3] {
        all_pass(set)?;
    }
    expect(uq.len() == 9 && so3.len() == 20 && sphere.len() == 12, || "unexpected line counts".into())?;
    expect(rw.iter().any(|c| c.id == "su2.confluence") && rw.iter().any(|c| c.id == "uq.confluence"), || "confluence lines missing".into())?;
    Ok(format!(
        "SU {} relations, U 9 facts, SO 19 relations in 20 lines, sphere 12 lines, confluence and PBW to degree 6",
        su2.len()
    ))
}

fn hopf() -> Outcome {
    let qg = Qg::new(&half()).map_err(|e| e.to_string())?;
    let mut checks = qg.structure_well_defined_checks();
    checks.extend(qg.hopf_axiom_checks(6));
    checks.extend(qg.haar_checks(6));
    all_pass(&checks)?;
    Ok(format!("{} lines over all normal monomials of degree <= 6 in both algebras", checks.len()))
}

fn actions() -> Outcome {
    let qg = Qg::new(&half()).map_err(|e| e.to_string())?;
    let checks = qg.action_table_checks();
    all_pass(&checks)?;
    // the printed table lists E, F, K on each side; the K^-1 rows are derived
    let printed = checks.iter().filter(|c| !c.source.contains("Kinv")).count();
    expect(printed == 24 && checks.len() == 32, || format!("{printed} printed and {} total action values", checks.len()))?;
    Ok("all 24 printed generator action values (12 per side) plus 8 for K^-1, table and pairing routes agree".into())
}

fn kernel() -> Outcome {
    let qg = Qg::new(&half()).map_err(|e| e.to_string())?;
    let s = ExactSphere::new(&qg, Embedding::Corrected).map_err(|e| e.to_string())?;
    let mut checks = s.basis_checks(3, 3).map_err(|e| e.to_string())?;
    for d in 0..=MAX_KERNEL_DEGREE {
        checks.push(s.kernel_dimension_check(d).map_err(|e| e.to_string())?);
    }
    all_pass(&checks)?;
    Ok(format!("{} basis elements killed and independent, kernel dimensions match for d <= 4", count(&checks, "xc.basis.")))
}

fn haar_values() -> Outcome {
    let qg = Qg::new(&half()).map_err(|e| e.to_string())?;
    let s = ExactSphere::new(&qg, Embedding::Corrected).map_err(|e| e.to_string())?;
    let mut checks = s.haar_value_checks().map_err(|e| e.to_string())?;
    checks.extend(s.haar_a_checks(4).map_err(|e| e.to_string())?);
    checks.extend(s.lemma_norm_values().map_err(|e| e.to_string())?);
    all_pass(&checks)?;
    expect(count(&checks, "haar.a") == 10 && count(&checks, "norm.orth.") == 3, || "missing lines".into())?;
    Ok("h(A) = 1/(1+mu^2), h(B) = 0, h(A^k) by recursion and closed form for k <= 4, equal norms and orthogonality".into())
}

/// The lines of criterion 6 for one t, with the coefficients they used.
fn so3_lines(cfg: &ParamConfig) -> Result<(Vec<Check>, ExactCoefficients), String> {
    let b = So3Bench::new(cfg).map_err(|e| e.to_string())?;
    let mut checks = b.extraction().map_err(|e| e.to_string())?;
    checks.extend(b.z().map_err(|e| e.to_string())?);
    checks.extend(b.antipode().map_err(|e| e.to_string())?);
    checks.extend(b.lemmas(None).map_err(|e| e.to_string())?);
    checks.extend(b.homomorphism().map_err(|e| e.to_string())?);
    Ok((checks, b.co))
}

fn so3() -> Outcome {
    let (checks, _) = so3_lines(&half())?;
    all_pass(&checks)?;
    expect(checks.iter().any(|c| c.id == "z.prime") && checks.iter().any(|c| c.id == "ts.value.T2"), || "Z or T2 line missing".into())?;
    expect(count(&checks, "kappa.") == 9 && count(&checks, "hom.") == 5, || "antipode or homomorphism count".into())?;
    let lemmas = checks.iter().filter(|c| c.id.starts_with("eq") || c.id.starts_with("lem") || c.id.starts_with("rem") || c.id.starts_with("p3")).count();
    expect(lemmas >= 45, || format!("{lemmas} catalog identities"))?;
    Ok(format!("zero-residual extraction, Z = Z', unitarity, 9 antipode values, {lemmas} identities, 5 homomorphism identities"))
}

fn spectral() -> Outcome {
    let qg = Qg::new(&half()).map_err(|e| e.to_string())?;
    let sp = ExactSpectral::new(ExactSphere::new(&qg, Embedding::Corrected).map_err(|e| e.to_string())?, DEFAULT_MAX_L2);
    let checks = sp.suite(3, false).map_err(|e| e.to_string())?;
    all_pass(&checks)?;
    for l2 in [1, 3] {
        for id in ["gram", "pi.A", "pi.B", "pi.Bstar", "pi.B.support", "unitary.cols", "unitary.rows", "twisted.R", "twisted.R0", "twisted.R0+", "twisted.R0-", "state.A", "state.B"] {
            let full = format!("spectral.{id}.l{l2}");
            expect(checks.iter().any(|c| c.id == full), || format!("{full} missing"))?;
        }
        let ctrl = format!("spectral.control.untwisted.l{l2}");
        let c = checks.iter().find(|c| c.id == ctrl).ok_or(format!("{ctrl} missing"))?;
        expect(c.status == Status::NegativeControl, || format!("{ctrl} did not fail"))?;
    }
    expect(count(&checks, "spectral.span.") == 3, || "span lines missing".into())?;
    Ok(format!("{} lines, untwisted control fails at both levels", checks.len()))
}

fn t_independence() -> Outcome {
    let ts = [rat(1, 2), rat(1, 3), rat(2, 3)];
    let mut runs = Vec::new();
    for t in &ts {
        let cfg = ParamConfig::symbolic(t.clone()).map_err(|e| e.to_string())?;
        runs.push(so3_lines(&cfg)?);
    }
    let (first_checks, first_co) = &runs[0];
    let verdicts = |c: &[Check]| c.iter().map(|c| (c.id.clone(), c.status)).collect::<Vec<_>>();
    for (i, (checks, co)) in runs.iter().enumerate().skip(1) {
        expect(first_co.same_terms(co), || format!("T/S differ at t = {}", ts[i]))?;
        expect(verdicts(first_checks) == verdicts(checks), || format!("verdicts differ at t = {}", ts[i]))?;
    }
    Ok(format!("identical T/S normal forms and {} identical verdicts at t = 1/2, 1/3, 2/3", first_checks.len()))
}

fn w32() -> Outcome {
    let b = So3Bench::new(&half()).map_err(|e| e.to_string())?;
    let checks = b.w32().map_err(|e| e.to_string())?;
    all_pass(&checks)?;
    Ok("dim W'' = 5, Delta-invariant, trivial intersection".into())
}

fn prop_err<T: std::fmt::Debug>(e: proptest::test_runner::TestError<T>) -> String {
    format!("{e:?}")
}

fn runner(cases: u32, seed: u8) -> TestRunner {
    TestRunner::new_with_rng(
        Config { cases, failure_persistence: None, ..Config::default() },
        TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]),
    )
}

fn words(ngens: u8) -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0..ngens, 0..=6)
}

fn poly(alg: &Arc<Algebra<Scalar>>, terms: &[(Vec<u8>, i64)]) -> NCPoly<Scalar> {
    let mut x = NCPoly::zero(alg);
    for (w, c) in terms {
        x = &x + &NCPoly::word(alg, w).scale(&Scalar::from_rational(&rat(*c, 1)));
    }
    x
}

fn polys(ngens: u8) -> impl Strategy<Value = Vec<(Vec<u8>, i64)>> {
    proptest::collection::vec((proptest::collection::vec(0..ngens, 0..=4), -3i64..4), 1..4)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (proptest::collection::vec(-4i64..5, 1..4), proptest::collection::vec(1i64..5, 1..3), -3i32..4).prop_map(|(n, d, k)| {
        let lin = |v: &[i64]| v.iter().enumerate().fold(RatFunc::zero(), |acc, (i, c)| acc.add(&RatFunc::from_int(*c).mul(&RatFunc::q_pow(i as i32))));
        lin(&n).mul(&lin(&d).inv().expect("positive coefficients")).mul(&RatFunc::q_pow(k))
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (ratfunc(), ratfunc(), 0usize..3).prop_map(|(a, b, n)| {
        let root: BigRational = [rat(3, 2), rat(7, 4), rat(2, 1)][n].clone();
        Scalar::from_base(a).add(&sqrt_rational(&root).unwrap().scale(&b)).add(&Scalar::r_atom())
    })
}

/// Normal-form uniqueness, field laws, PBW counts against the closed count
/// (d+1)(d+2)(2d+3)/6, and involution/antipode coherence.
fn properties() -> Outcome {
    let qg = Qg::new(&half()).map_err(|e| e.to_string())?;
    let mut total = 0u32;

    for (alg, ngens, shape) in [(&qg.su2, 4u8, su2_shape as fn(&[u8]) -> bool), (&qg.uq, 4u8, uq_shape as fn(&[u8]) -> bool)] {
        let cases = 200;
        runner(cases, 21)
            .run(&(words(ngens), words(ngens)), |(u, v)| {
                let x = NCPoly::word(alg, &u);
                for m in x.terms().keys() {
                    prop_assert!(alg.is_normal(m.letters()) && shape(m.letters()));
                }
                // two routes to the same element give the same normal form
                let mut uv = u.clone();
                uv.extend_from_slice(&v);
                prop_assert_eq!(NCPoly::word(alg, &uv), &x * &NCPoly::word(alg, &v));
                Ok(())
            })
            .map_err(prop_err)?;
        total += cases;
    }

    runner(200, 22)
        .run(&(ratfunc(), ratfunc(), ratfunc()), |(a, b, c)| {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            if let Some(i) = a.inv() {
                prop_assert!(a.mul(&i).is_one());
            }
            Ok(())
        })
        .map_err(prop_err)?;
    total += 200;
    runner(150, 23)
        .run(&(scalar(), scalar(), scalar()), |(a, b, c)| {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&a.inv().unwrap()), Scalar::one());
            Ok(())
        })
        .map_err(prop_err)?;
    total += 150;

    for alg in [&qg.su2, &qg.uq] {
        for d in 0..=5usize {
            let c = pbw_count(alg, d).map_err(|e| e.to_string())?;
            let want = (d + 1) * (d + 2) * (2 * d + 3) / 6;
            expect(c.shape_count == want && c.irreducible_count == want && c.span_rank == want, || {
                format!("{} degree {d}: {c:?}, expected {want}", alg.name())
            })?;
            total += 1;
        }
    }

    for (alg, ngens) in [(&qg.su2, 4u8), (&qg.uq, 4u8)] {
        let cases = 150;
        runner(cases, 24)
            .run(&(polys(ngens), polys(ngens)), |(a, b)| {
                let (x, y) = (poly(alg, &a), poly(alg, &b));
                prop_assert_eq!(x.star().star(), x.clone());
                prop_assert_eq!((&x * &y).star(), &y.star() * &x.star());
                let k = |p: &NCPoly<Scalar>| qg.antipode(p).unwrap();
                // κ(κ(x)*)* = x and κ is anti-multiplicative
                prop_assert_eq!(k(&k(&x).star()).star(), x.clone());
                prop_assert_eq!(k(&(&x * &y)), &k(&y) * &k(&x));
                Ok(())
            })
            .map_err(prop_err)?;
        total += cases;
    }

    expect(total >= 1000, || format!("only {total} cases"))?;
    Ok(format!("{total} cases, 0 failures (seeds fixed)"))
}

/// The literal forms whose failure is documented; reported, not gated.
fn printed_lines() -> Vec<String> {
    let mut out = Vec::new();
    let Ok(qg) = Qg::new(&half()) else { return out };
    let mut checks = Vec::new();
    if let Ok(s) = ExactSphere::new(&qg, Embedding::Printed) {
        checks.extend(s.verify_sphere_presentation().into_iter().filter(|c| c.id == "sphere.x3" || c.id == "sphere.bsb"));
    }
    if let Ok(b) = So3Bench::new(&half()) {
        checks.extend(b.printed().unwrap_or_default());
    }
    if let Ok(s) = ExactSphere::new(&qg, Embedding::Corrected) {
        checks.extend(ExactSpectral::new(s, 1).printed_checks(1).unwrap_or_default());
    }
    for c in checks {
        let verdict = if c.passed() { "PASS" } else { "FAIL (documented)" };
        out.push(format!("printed {:<32} {verdict}  {}", c.id, c.source));
    }
    out
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome, Duration); 10] = [
        (1, "presentations", presentations, Duration::from_secs(5)),
        (2, "Hopf axioms and Haar invariance", hopf, Duration::from_secs(30)),
        (3, "action tables", actions, Duration::from_secs(1)),
        (4, "X_c kernel on the sphere", kernel, Duration::from_secs(60)),
        (5, "Haar values and norms", haar_values, Duration::from_secs(5)),
        (6, "SO_mu(3) suite", so3, Duration::from_secs(60)),
        (7, "spectral levels 1/2 and 3/2", spectral, Duration::from_secs(600)),
        (8, "independence of t", t_independence, Duration::from_secs(180)),
        (9, "W_3/2 decomposition", w32, Duration::from_secs(30)),
        (10, "property suites", properties, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (n, name, f, budget) in criteria {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed();
        let timing = if secs <= budget { "" } else { " OVER BUDGET" };
        match res {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail} ({:.2} s of {} s{timing})", secs.as_secs_f64(), budget.as_secs()),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {why} ({:.2} s)", secs.as_secs_f64());
            }
        }
    }
    for line in printed_lines() {
        println!("{line}");
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
