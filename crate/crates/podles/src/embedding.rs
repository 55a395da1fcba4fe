//! x₋₁, x₀, x₁, A, B inside O(SU_μ(2)).

use std::sync::Arc;

use qiso_hopf::QuantumGroup;
use qiso_ncalg::instances::{A, AS, G, GS};
use qiso_ncalg::NCPoly;
use qiso_scalars::Coeff;

use crate::error::SphereError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Embedding {
    /// ρ = μ/((1+μ²)√c) with every x_i rescaled by t/ρ; satisfies all the
    /// sphere relations.
    Corrected,
    /// The formulas with ρ = μt/((1+μ²)√(1−t)) taken literally.
    Printed,
}

pub struct Sphere<C: Coeff> {
    pub qg: Arc<QuantumGroup<C>>,
    pub embedding: Embedding,
    pub rho: C,
    pub s: C,
    pub lambda_plus: C,
    pub lambda_minus: C,
    pub xm1: NCPoly<C>,
    pub x0: NCPoly<C>,
    pub x1: NCPoly<C>,
    pub a: NCPoly<C>,
    pub b: NCPoly<C>,
    pub bs: NCPoly<C>,
    /// μ^{1/2}(μ⁻¹ − μ)⁻¹c^{−1/2}(1 − K²) + EK + μFK
    pub xc: NCPoly<C>,
}

impl<C: Coeff> std::fmt::Debug for Sphere<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Sphere({:?}, A = {}, B = {})", self.embedding, self.a, self.b)
    }
}

impl<C: Coeff> Sphere<C> {
    pub fn new(qg: &Arc<QuantumGroup<C>>, embedding: Embedding) -> Result<Self, SphereError> {
        let p = &qg.params;
        let mu = p.mu.clone();
        let r = p.r()?;
        let opm = p.one_plus_mu2();
        let rho = match embedding {
            Embedding::Corrected => p.rho()?,
            Embedding::Printed => p.rho_printed()?,
        };
        let scale = match embedding {
            Embedding::Corrected => p.t.clone() * p.inv(&rho)?,
            Embedding::Printed => C::one(),
        };
        let w = |x: &[u8]| NCPoly::word(&qg.su2, x);
        let one = NCPoly::one(&qg.su2);
        // μα² + ρ(1+μ²)αγ − μ²γ², over μ(1+μ²)^{1/2}
        let xm1 = &(&w(&[A, A]).scale(&mu) + &w(&[A, G]).scale(&(rho.clone() * opm.clone()))) - &w(&[G, G]).scale(&p.mu_pow(2));
        let xm1 = xm1.scale(&(p.inv(&(mu.clone() * r.clone()))? * scale.clone()));
        // −μγ*α + ρ(1 − (1+μ²)γ*γ) − γα*
        let x0 = &(&w(&[GS, A]).scale(&-mu.clone()) + &(&one - &w(&[GS, G]).scale(&opm)).scale(&rho)) - &w(&[G, AS]);
        let x0 = x0.scale(&scale);
        // μ²γ*² − ρμ(1+μ²)α*γ* − μα*², over (1+μ²)^{1/2}
        let x1 = &(&w(&[GS, GS]).scale(&p.mu_pow(2)) - &w(&[AS, GS]).scale(&(rho.clone() * mu.clone() * opm.clone())))
            - &w(&[AS, AS]).scale(&mu);
        let x1 = x1.scale(&(p.inv(&r)? * scale));
        let tinv = p.inv(&p.t)?;
        // A = (1 − t⁻¹x₀)/(1+μ²), B = μ(1+μ²)^{−1/2}t⁻¹x₋₁
        let a = (&one - &x0.scale(&tinv)).scale(&p.inv(&opm)?);
        let b = xm1.scale(&(mu.clone() * p.inv(&r)? * tinv));
        let bs = b.star();
        let xc = xc(qg)?;
        Ok(Sphere {
            qg: qg.clone(),
            embedding,
            rho,
            s: p.s()?,
            lambda_plus: p.lambda_plus()?,
            lambda_minus: p.lambda_minus()?,
            xm1,
            x0,
            x1,
            a,
            b,
            bs,
            xc,
        })
    }

    /// x ◁ X_c
    pub fn apply_xc(&self, x: &NCPoly<C>) -> Result<NCPoly<C>, SphereError> {
        Ok(self.qg.act_right(x, &self.xc)?)
    }

    /// A^k B^l (l > 0), A^k B*^{-l} (l < 0), A^k (l = 0).
    pub fn basis_element(&self, k: u32, l: i32) -> NCPoly<C> {
        let ak = self.a.pow(k);
        match l.signum() {
            0 => ak,
            1 => &ak * &self.b.pow(l as u32),
            _ => &ak * &self.bs.pow(l.unsigned_abs()),
        }
    }

    /// {A^k, A^kB^l, A^kB*^l : k ≤ k_max, 1 ≤ l ≤ l_max} with their labels.
    pub fn sphere_basis(&self, k_max: u32, l_max: u32) -> Vec<(String, NCPoly<C>)> {
        let mut out = Vec::new();
        for k in 0..=k_max {
            out.push((label(k, 0), self.basis_element(k, 0)));
            for l in 1..=l_max as i32 {
                out.push((label(k, l), self.basis_element(k, l)));
                out.push((label(k, -l), self.basis_element(k, -l)));
            }
        }
        out
    }

    /// Scalars as elements of O(SU_μ(2)).
    pub fn c(&self, x: C) -> NCPoly<C> {
        NCPoly::constant(&self.qg.su2, x)
    }
}

pub fn label(k: u32, l: i32) -> String {
    let a = match k {
        0 => String::new(),
        1 => "A".into(),
        k => format!("A^{k}"),
    };
    let b = match l {
        0 => String::new(),
        1 => "B".into(),
        -1 => "B*".into(),
        l if l > 0 => format!("B^{l}"),
        l => format!("B*^{}", -l),
    };
    match (a.is_empty(), b.is_empty()) {
        (true, true) => "1".into(),
        (false, true) => a,
        (true, false) => b,
        _ => format!("{a} {b}"),
    }
}

/// X_c in U_μ(su(2)).
pub fn xc<C: Coeff>(qg: &QuantumGroup<C>) -> Result<NCPoly<C>, SphereError> {
    use qiso_ncalg::instances::{E, F, K};
    let p = &qg.params;
    let w = |x: &[u8]| NCPoly::word(&qg.uq, x);
    let coef = p.q.clone() * p.inv(&(p.mu_pow(-1) - p.mu.clone()))? * p.inv(&p.sigma()?)?;
    let one_minus_k2 = &NCPoly::one(&qg.uq) - &w(&[K, K]);
    Ok(&(&one_minus_k2.scale(&coef) + &w(&[E, K])) + &w(&[F, K]).scale(&p.mu))
}
