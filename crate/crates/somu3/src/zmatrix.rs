//! The 3×3 corepresentation matrix Z assembled from T/S, and Z′ in α, γ.

use std::sync::Arc;
use std::time::Instant;

use qiso_hopf::{identity_check, QuantumGroup};
use qiso_ncalg::instances::{A, AS, G, GS};
use qiso_ncalg::NCPoly;
use qiso_report::Check;
use qiso_scalars::Coeff;

use crate::error::So3Error;
use crate::extract::Coefficients;

pub type Mat3<C> = [[NCPoly<C>; 3]; 3];

fn build<C: Coeff>(f: impl Fn(usize, usize) -> NCPoly<C>) -> Mat3<C> {
    std::array::from_fn(|i| std::array::from_fn(|j| f(i, j)))
}

pub fn mat_mul<C: Coeff>(x: &Mat3<C>, y: &Mat3<C>) -> Mat3<C> {
    build(|i, j| {
        let mut acc = &x[i][0] * &y[0][j];
        for k in 1..3 {
            acc = &acc + &(&x[i][k] * &y[k][j]);
        }
        acc
    })
}

/// Transpose and star every entry.
pub fn mat_star<C: Coeff>(x: &Mat3<C>) -> Mat3<C> {
    build(|i, j| x[j][i].star())
}

/// diag(d) as a matrix over the algebra of `like`.
fn diag<C: Coeff>(like: &NCPoly<C>, d: &[C; 3]) -> Mat3<C> {
    let alg = like.algebra();
    build(|i, j| if i == j { NCPoly::constant(alg, d[i].clone()) } else { NCPoly::zero(alg) })
}

/// Z with rows and columns ordered x₋₁, x₀, x₁; r = (1+μ²)^{1/2}:
///
///   S₃          −μ r T₃    −μ S₄*
///   −S₂/(μ r)   T₂         S₂*/r
///   −μ⁻¹S₄      r T₃*      S₃*
pub fn z_matrix<C: Coeff>(qg: &QuantumGroup<C>, co: &Coefficients<C>) -> Result<Mat3<C>, So3Error> {
    let p = &qg.params;
    let r = p.r()?;
    z_scaled(qg, co, &r)
}

/// The same pattern with r replaced by `r`; r = 1 gives the radical-free
/// conjugate D⁻¹ Z D, D = diag(1, r⁻¹, 1).
fn z_scaled<C: Coeff>(qg: &QuantumGroup<C>, co: &Coefficients<C>, r: &C) -> Result<Mat3<C>, So3Error> {
    let p = &qg.params;
    let (mu, rinv, muinv) = (p.mu.clone(), p.inv(r)?, p.mu_pow(-1));
    let [_, t2, t3, _] = &co.t;
    let [_, s2, s3, s4] = &co.s;
    Ok([
        [s3.clone(), t3.scale(&-(mu.clone() * r.clone())), s4.star().scale(&-mu.clone())],
        [s2.scale(&-(muinv.clone() * rinv.clone())), t2.clone(), s2.star().scale(&rinv)],
        [s4.scale(&-muinv), t3.star().scale(r), s3.star()],
    ])
}

/// Z′ written directly in α, γ.
pub fn z_prime<C: Coeff>(qg: &Arc<QuantumGroup<C>>) -> Result<Mat3<C>, So3Error> {
    let p = &qg.params;
    let w = |x: &[u8]| NCPoly::word(&qg.su2, x);
    let rm = p.r()? * p.mu_pow(-1);
    let mu = p.mu.clone();
    let one = NCPoly::one(&qg.su2);
    Ok([
        [w(&[A, A]), w(&[A, GS]).scale(&-(mu.clone() * rm.clone())), w(&[GS, GS]).scale(&p.mu_pow(2))],
        [w(&[A, G]).scale(&rm), &one - &w(&[GS, G]).scale(&(mu.clone() * p.bracket2())), w(&[GS, AS]).scale(&-(mu * rm.clone()))],
        [w(&[G, G]), w(&[G, AS]).scale(&rm), w(&[AS, AS])],
    ])
}

fn matrix_check<C: Coeff>(id: &str, src: &str, got: &Mat3<C>, want: &Mat3<C>, start: Instant) -> Check {
    let mut residual = 0;
    let mut bad = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let d = &got[i][j] - &want[i][j];
            if !d.is_zero() {
                residual += d.len();
                bad.push(format!("({},{}): {}", i + 1, j + 1, d.render()));
            }
        }
    }
    Check::new(id, src, bad.is_empty())
        .with_residual(residual, (!bad.is_empty()).then(|| bad.join("; ")))
        .timed(start)
}

/// Z = Z′, Z*Z = I and ZZ* = I, plus the single entries quoted as lemmas.
pub fn z_checks<C: Coeff>(qg: &Arc<QuantumGroup<C>>, co: &Coefficients<C>) -> Result<Vec<Check>, So3Error> {
    let z = z_matrix(qg, co)?;
    let zs = mat_star(&z);
    let one = NCPoly::one(&qg.su2);
    let id = diag(&one, &[C::one(), C::one(), C::one()]);
    let mut out = Vec::new();
    let start = Instant::now();
    out.push(matrix_check("z.prime", "Z = Z' entrywise", &z, &z_prime(qg)?, start));
    let start = Instant::now();
    let zsz = mat_mul(&zs, &z);
    out.push(matrix_check("z.zsz", "Z* Z = I", &zsz, &id, start));
    let start = Instant::now();
    let zzs = mat_mul(&z, &zs);
    out.push(matrix_check("z.zzs", "Z Z* = I", &zzs, &id, start));
    out.push(identity_check("z.zsz22", "mu^2 (1+mu^2) T3* T3 + T2^2 + (1+mu^2) T3 T3* = 1", &(&zsz[1][1] - &one), Instant::now()));
    out.push(identity_check("z.zzs11", "S3 S3* + mu^2 (1+mu^2) T3 T3* + mu^2 S4* S4 = 1", &(&zzs[0][0] - &one), Instant::now()));
    Ok(out)
}

/// Unitarity without the radical: with Z₀ = D⁻¹ Z D and W = D² = diag(1, (1+μ²)⁻¹, 1),
/// Z*Z = I iff Z₀* W Z₀ = W, and ZZ* = I iff Z₀ W⁻¹ Z₀* = W⁻¹.
pub fn z_unitarity_radical_free<C: Coeff>(qg: &QuantumGroup<C>, co: &Coefficients<C>) -> Result<Vec<Check>, So3Error> {
    let p = &qg.params;
    let z0 = z_scaled(qg, co, &C::one())?;
    let z0s = mat_star(&z0);
    let opm = p.one_plus_mu2();
    let one = NCPoly::one(&qg.su2);
    let w = diag(&one, &[C::one(), p.inv(&opm)?, C::one()]);
    let winv = diag(&one, &[C::one(), opm, C::one()]);
    let start = Instant::now();
    let left = matrix_check("z.zsz.base", "Z0* W Z0 = W, W = diag(1, 1/(1+mu^2), 1)", &mat_mul(&mat_mul(&z0s, &w), &z0), &w, start);
    let start = Instant::now();
    let right = matrix_check("z.zzs.base", "Z0 W^-1 Z0* = W^-1", &mat_mul(&mat_mul(&z0, &winv), &z0s), &winv, start);
    Ok(vec![left, right])
}
