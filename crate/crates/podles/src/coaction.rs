//! Writing Δ(x) as Σ_i b_i ⊗ Q_i over a finite family b_i.

use std::collections::BTreeMap;

use qiso_ncalg::{independent_solver, poly_vec, Mono, NCPoly, TensorPoly};
use qiso_scalars::Coeff;

use crate::error::SphereError;

/// Coefficients Q_i with `delta = Σ_i basis_i ⊗ Q_i`, or `None` when some
/// first leg leaves the span. The basis must be independent.
pub fn first_leg_coefficients<C: Coeff>(
    delta: &TensorPoly<C>,
    basis: &[NCPoly<C>],
) -> Result<Option<Vec<NCPoly<C>>>, SphereError> {
    let vecs: Vec<_> = basis.iter().map(poly_vec).collect();
    let solver = independent_solver(&vecs)?;
    let mut acc: Vec<BTreeMap<Mono, C>> = vec![BTreeMap::new(); basis.len()];
    for (m, left) in delta.by_right_leg() {
        let Some(comb) = solver.solve(&poly_vec(&left)) else {
            return Ok(None);
        };
        for (i, c) in comb.into_iter().enumerate() {
            if !c.is_zero_coeff() {
                acc[i].insert(m.clone(), c);
            }
        }
    }
    let right = delta.right_algebra();
    Ok(Some(acc.into_iter().map(|t| NCPoly::from_normal_terms(right, t)).collect()))
}

/// Σ_i basis_i ⊗ coeffs_i.
pub fn reassemble<C: Coeff>(basis: &[NCPoly<C>], coeffs: &[NCPoly<C>]) -> Option<TensorPoly<C>> {
    let (b0, c0) = (basis.first()?, coeffs.first()?);
    let mut acc = TensorPoly::zero(b0.algebra(), c0.algebra());
    for (b, c) in basis.iter().zip(coeffs) {
        acc = acc.add(&TensorPoly::pure(b, c));
    }
    Some(acc)
}
