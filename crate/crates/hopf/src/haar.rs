//! The Haar state of O(SU_μ(2)) and the induced inner product.

use qiso_ncalg::instances::{G, GS};
use qiso_ncalg::{Mono, NCPoly};
use qiso_scalars::Coeff;

use crate::error::HopfError;
use crate::structure::QuantumGroup;

impl<C: Coeff> QuantumGroup<C> {
    /// h on a normal monomial: nonzero only on (γγ*)^k, where it equals
    /// (1 − μ²)/(1 − μ^{2k+2}).
    pub fn haar_mono(&self, m: &Mono) -> C {
        let w = m.letters();
        let k = w.len() / 2;
        if w.len() % 2 != 0 || w[..k].iter().any(|&g| g != G) || w[k..].iter().any(|&g| g != GS) {
            return C::zero();
        }
        if k == 0 {
            return C::one();
        }
        let one = C::one();
        let num = one.clone() - self.params.mu_pow(2);
        let den = one - self.params.mu_pow(2 * k as i64 + 2);
        num * den.try_inv().expect("mu is not a root of unity")
    }

    pub fn haar(&self, x: &NCPoly<C>) -> Result<C, HopfError> {
        self.expect_su2(x)?;
        let mut acc = C::zero();
        for (m, c) in x.terms() {
            let h = self.haar_mono(m);
            if !h.is_zero_coeff() {
                acc = acc.add_ref(&c.mul_ref(&h));
            }
        }
        Ok(acc)
    }

    /// ⟨x, y⟩ = h(x* y)
    pub fn inner_product(&self, x: &NCPoly<C>, y: &NCPoly<C>) -> Result<C, HopfError> {
        self.expect_su2(x)?;
        self.expect_su2(y)?;
        self.haar(&(&x.star() * y))
    }

    /// (id ⊗ h)Δ(x) − h(x)1 and (h ⊗ id)Δ(x) − h(x)1.
    pub fn haar_defects(&self, x: &NCPoly<C>) -> Result<(NCPoly<C>, NCPoly<C>), HopfError> {
        let d = self.coproduct(x)?;
        let hx = NCPoly::constant(&self.su2, self.haar(x)?);
        let l = d.contract_right(|m| self.haar_mono(m));
        let r = d.contract_left(|m| self.haar_mono(m));
        Ok((&l - &hx, &r - &hx))
    }

    pub(crate) fn expect_su2(&self, x: &NCPoly<C>) -> Result<(), HopfError> {
        if std::sync::Arc::ptr_eq(x.algebra(), &self.su2) {
            Ok(())
        } else {
            Err(HopfError::WrongAlgebra { expected: self.su2.name(), found: x.algebra().name() })
        }
    }

    pub(crate) fn expect_uq(&self, f: &NCPoly<C>) -> Result<(), HopfError> {
        if std::sync::Arc::ptr_eq(f.algebra(), &self.uq) {
            Ok(())
        } else {
            Err(HopfError::WrongAlgebra { expected: self.uq.name(), found: f.algebra().name() })
        }
    }
}
