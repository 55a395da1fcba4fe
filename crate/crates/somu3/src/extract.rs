//! T₁–T₄, S₁–S₄ from Δ(A) = Σ b ⊗ T, Δ(B) = Σ b ⊗ S over b ∈ {1, A, B, B*}.

use std::sync::Arc;
use std::time::Instant;

use qiso_hopf::{identity_check, QuantumGroup};
use qiso_ncalg::{degree_filter, NCPoly};
use qiso_podles::{first_leg_coefficients, reassemble, Sphere};
use qiso_report::Check;
use qiso_scalars::{Coeff, RatFunc, Scalar};

use crate::error::So3Error;

pub const NAMES: [&str; 8] = ["T1", "T2", "T3", "T4", "S1", "S2", "S3", "S4"];

#[derive(Clone, Debug)]
pub struct Coefficients<C: Coeff> {
    /// T₁..T₄
    pub t: [NCPoly<C>; 4],
    /// S₁..S₄
    pub s: [NCPoly<C>; 4],
}

fn four<C: Coeff>(v: Vec<NCPoly<C>>) -> [NCPoly<C>; 4] {
    v.try_into().expect("four coefficients")
}

impl<C: Coeff> Coefficients<C> {
    pub fn extract(sphere: &Sphere<C>) -> Result<Self, So3Error> {
        let basis = sphere_span(sphere);
        let qg = &sphere.qg;
        let t = first_leg_coefficients(&qg.coproduct(&sphere.a)?, &basis)?.ok_or(So3Error::NotInSpan("A"))?;
        let s = first_leg_coefficients(&qg.coproduct(&sphere.b)?, &basis)?.ok_or(So3Error::NotInSpan("B"))?;
        Ok(Coefficients { t: four(t), s: four(s) })
    }

    pub fn named(&self, name: &str) -> Option<&NCPoly<C>> {
        let i = NAMES.iter().position(|n| *n == name)?;
        Some(if i < 4 { &self.t[i] } else { &self.s[i - 4] })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &NCPoly<C>)> {
        NAMES.iter().copied().zip(self.t.iter().chain(self.s.iter()))
    }

    /// Bindings for the expression evaluator.
    pub fn bindings(&self) -> Vec<(String, NCPoly<C>)> {
        self.iter().map(|(n, p)| (n.to_string(), p.clone())).collect()
    }

    /// Normal forms are equal term by term (across different parameter sets).
    pub fn same_terms(&self, o: &Self) -> bool {
        self.iter().zip(o.iter()).all(|((_, a), (_, b))| a.terms() == b.terms())
    }
}

impl Coefficients<Scalar> {
    /// The same coefficients over Q(q) alone; they contain no radical.
    pub fn to_base(&self, qgb: &Arc<QuantumGroup<RatFunc>>) -> Result<Coefficients<RatFunc>, So3Error> {
        let conv = |(name, p): (&str, &NCPoly<Scalar>)| {
            p.convert(&qgb.su2, |c| c.as_base()).ok_or_else(|| So3Error::NotRadicalFree(name.to_string()))
        };
        let mut v = Vec::with_capacity(8);
        for item in self.iter() {
            v.push(conv(item)?);
        }
        let s = v.split_off(4);
        Ok(Coefficients { t: four(v), s: four(s) })
    }
}

/// [1, A, B, B*]
pub fn sphere_span<C: Coeff>(sphere: &Sphere<C>) -> Vec<NCPoly<C>> {
    vec![sphere.c(C::one()), sphere.a.clone(), sphere.b.clone(), sphere.bs.clone()]
}

/// Reassembly, T₄ = T₃*, even degree, and the explicit values of the
/// coefficients in α, γ.
pub fn extraction_checks<C: Coeff>(sphere: &Sphere<C>, co: &Coefficients<C>) -> Result<Vec<Check>, So3Error> {
    let qg = &sphere.qg;
    let basis = sphere_span(sphere);
    let mut out = Vec::new();
    for (name, x, coeffs) in [("A", &sphere.a, &co.t), ("B", &sphere.b, &co.s)] {
        let start = Instant::now();
        let back = reassemble(&basis, coeffs).expect("nonempty");
        let d = qg.coproduct(x)?.sub(&back);
        let src = if name == "A" { "Delta(A) = 1 (x) T1 + A (x) T2 + B (x) T3 + B* (x) T4" } else { "Delta(B) = 1 (x) S1 + A (x) S2 + B (x) S3 + B* (x) S4" };
        out.push(
            Check::new(format!("ts.reassemble.{name}"), src, d.is_zero())
                .with_residual(d.len(), (!d.is_zero()).then(|| d.render()))
                .timed(start),
        );
    }
    for (name, p) in co.iter() {
        let start = Instant::now();
        let ok = degree_filter(p, true)?;
        out.push(Check::new(format!("ts.even.{name}"), "coefficient lies in the even-degree subalgebra", ok).timed(start));
    }
    Ok(out)
}

/// The coefficients as explicit polynomials in α, γ.
pub fn explicit_values<C: Coeff>(qg: &Arc<QuantumGroup<C>>) -> Result<Coefficients<C>, So3Error> {
    use qiso_ncalg::instances::{A, G, GS};
    let p = &qg.params;
    let w = |x: &[u8]| NCPoly::word(&qg.su2, x);
    let opm = p.one_plus_mu2();
    let ggs = w(&[G, GS]);
    let t3 = w(&[A, GS]).scale(&p.mu_pow(-1));
    let s2 = w(&[A, G]).scale(&-opm.clone());
    Ok(Coefficients {
        t: [ggs.clone(), &NCPoly::one(&qg.su2) - &ggs.scale(&opm), t3.clone(), t3.star()],
        s: [w(&[A, G]), s2, w(&[A, A]), w(&[G, G]).scale(&-p.mu.clone())],
    })
}

pub fn explicit_value_checks<C: Coeff>(qg: &Arc<QuantumGroup<C>>, co: &Coefficients<C>) -> Result<Vec<Check>, So3Error> {
    let want = explicit_values(qg)?;
    let srcs = [
        "T1 = g g*",
        "T2 = 1 - (1 + mu^2) g* g",
        "T3 = mu^-1 a g*",
        "T4 = mu^-1 g a*",
        "S1 = a g",
        "S2 = -(1 + mu^2) a g",
        "S3 = a^2",
        "S4 = -mu g^2",
    ];
    Ok(co
        .iter()
        .zip(want.iter())
        .zip(srcs)
        .map(|(((name, got), (_, w)), src)| identity_check(&format!("ts.value.{name}"), src, &(got - w), Instant::now()))
        .collect())
}
