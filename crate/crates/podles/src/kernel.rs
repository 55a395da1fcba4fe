//! ker(x ↦ x ◁ X_c) on normal monomials of bounded degree.

use std::time::Instant;

use qiso_hopf::normal_monomials;
use qiso_ncalg::{kernel, poly_vec, NCPoly, SpanSolver};
use qiso_report::Check;
use qiso_scalars::Coeff;

use crate::embedding::Sphere;
use crate::error::SphereError;

pub const MAX_KERNEL_DEGREE: usize = 4;

#[derive(Clone, Debug)]
pub struct KernelReport {
    pub degree: usize,
    pub domain: usize,
    pub kernel_dim: usize,
    pub basis_count: usize,
    /// Every sphere-basis element of degree ≤ d lies in the kernel span.
    pub basis_in_kernel: bool,
    /// Sphere-basis elements of degree ≤ d are independent.
    pub basis_rank: usize,
}

impl KernelReport {
    pub fn ok(&self) -> bool {
        self.kernel_dim == self.basis_count && self.basis_in_kernel && self.basis_rank == self.basis_count
    }
}

impl<C: Coeff> Sphere<C> {
    /// Sphere-basis elements A^kB^l, A^kB*^l with 2(k + l) ≤ d.
    pub fn basis_up_to_degree(&self, d: usize) -> Vec<(String, NCPoly<C>)> {
        let half = (d / 2) as u32;
        self.sphere_basis(half, half)
            .into_iter()
            .filter(|(_, x)| x.degree() <= d)
            .collect()
    }

    pub fn kernel_dimension(&self, d: usize) -> Result<KernelReport, SphereError> {
        if d > MAX_KERNEL_DEGREE {
            return Err(SphereError::DegreeGuard { max: MAX_KERNEL_DEGREE, got: d });
        }
        let dom = normal_monomials(&self.qg.su2, d);
        let mut images = Vec::with_capacity(dom.len());
        for m in &dom {
            let x = NCPoly::from_normal_terms(&self.qg.su2, [(m.clone(), C::one())]);
            images.push(poly_vec(&self.apply_xc(&x)?));
        }
        let ker = kernel(&images)?;
        let mut span = SpanSolver::new();
        for v in &ker {
            let kv = dom.iter().zip(v).filter(|(_, c)| !c.is_zero_coeff()).map(|(m, c)| (m.clone(), c.clone())).collect();
            span.push(&kv)?;
        }
        let basis = self.basis_up_to_degree(d);
        let mut own = SpanSolver::new();
        let mut basis_in_kernel = true;
        for (_, b) in &basis {
            let v = poly_vec(b);
            basis_in_kernel &= span.solve(&v).is_some();
            own.push(&v)?;
        }
        Ok(KernelReport {
            degree: d,
            domain: dom.len(),
            kernel_dim: ker.len(),
            basis_count: basis.len(),
            basis_in_kernel,
            basis_rank: own.rank(),
        })
    }

    pub fn kernel_dimension_check(&self, d: usize) -> Result<Check, SphereError> {
        let start = Instant::now();
        let r = self.kernel_dimension(d)?;
        let note = format!(
            "{} normal monomials, kernel dimension {}, sphere basis {} (rank {})",
            r.domain, r.kernel_dim, r.basis_count, r.basis_rank
        );
        Ok(Check::new(format!("xc.kernel.d{d}"), "O(S^2) = O(SU) cap ker(x |-> x <| X_c)", r.ok())
            .with_residual(r.kernel_dim.abs_diff(r.basis_count), None)
            .with_note(note)
            .timed(start))
    }
}
