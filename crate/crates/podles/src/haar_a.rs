//! The Haar state on polynomials in A.

use qiso_hopf::QuantumGroup;
use qiso_scalars::Coeff;

use crate::error::SphereError;

/// u_k = (λ₊^{k+1} − λ₋^{k+1})/(λ₊ − λ₋) from λ₊ + λ₋ = 1, λ₊λ₋ = −c:
/// u_k = u_{k−1} + c u_{k−2}. No radical is needed.
fn complete_sums<C: Coeff>(c: &C, n: usize) -> Vec<C> {
    let mut u = vec![C::one(); n.max(2)];
    for k in 2..n {
        u[k] = u[k - 1].clone() + c.mul_ref(&u[k - 2]);
    }
    u.truncate(n);
    u
}

/// h(Σ f_k A^k) with h(A^k) = (1−μ²)u_k/(1 − μ^{2k+2}).
pub fn haar_poly_in_a<C: Coeff>(qg: &QuantumGroup<C>, f: &[C]) -> Result<C, SphereError> {
    let p = &qg.params;
    let u = complete_sums(&p.c, f.len());
    let one_m = C::one() - p.mu_pow(2);
    let mut acc = C::zero();
    for (k, fk) in f.iter().enumerate() {
        if fk.is_zero_coeff() {
            continue;
        }
        let den = C::one() - p.mu_pow(2 * k as i64 + 2);
        acc = acc + fk.mul_ref(&one_m).mul_ref(&u[k]) * p.inv(&den)?;
    }
    Ok(acc)
}

/// The same value from (γ₊λ₊^k + γ₋λ₋^k)/(1 − μ^{2k+2}) with
/// γ₊ = (1−μ²)λ₊/(λ₊−λ₋), γ₋ = −(1−μ²)λ₋/(λ₊−λ₋). Needs √(c + 1/4).
pub fn haar_poly_in_a_closed<C: Coeff>(qg: &QuantumGroup<C>, f: &[C]) -> Result<C, SphereError> {
    let p = &qg.params;
    let (lp, lm) = (p.lambda_plus()?, p.lambda_minus()?);
    let one_m = C::one() - p.mu_pow(2);
    let gap = p.inv(&(lp.clone() - lm.clone()))?;
    let gp = one_m.mul_ref(&lp) * gap.clone();
    let gm = -(one_m * lm.clone() * gap);
    let mut acc = C::zero();
    for (k, fk) in f.iter().enumerate() {
        let k = k as i64;
        let num = gp.mul_ref(&lp.powi(k).expect("nonzero")) + gm.mul_ref(&lm.powi(k).expect("nonzero"));
        let den = C::one() - p.mu_pow(2 * k + 2);
        acc = acc + fk.mul_ref(&num) * p.inv(&den)?;
    }
    Ok(acc)
}
