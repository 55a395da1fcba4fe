//! The two confluent presentations: O(SU_μ(2)) and U_μ(su(2)).

use std::sync::Arc;

use qiso_scalars::{Coeff, Params, ScalarError};

use crate::mono::Gen;
use crate::presentation::{AlgKind, Algebra, Presentation, Rule};

pub const A: Gen = 0;
pub const AS: Gen = 1;
pub const G: Gen = 2;
pub const GS: Gen = 3;

pub const F: Gen = 0;
pub const K: Gen = 1;
pub const KINV: Gen = 2;
pub const E: Gen = 3;

fn runs(w: &[Gen], order: &[&[Gen]]) -> bool {
    // w is a concatenation of runs drawn from the successive letter groups
    let mut i = 0;
    for group in order {
        if i < w.len() && group.contains(&w[i]) {
            let g = w[i];
            while i < w.len() && w[i] == g {
                i += 1;
            }
        }
    }
    i == w.len()
}

/// α^a γ^b γ*^c or α*^a γ^b γ*^c.
pub fn su2_shape(w: &[Gen]) -> bool {
    runs(w, &[&[A, AS], &[G], &[GS]])
}

/// F^a K^b E^c with b ∈ Z.
pub fn uq_shape(w: &[Gen]) -> bool {
    runs(w, &[&[F], &[K, KINV], &[E]])
}

pub fn su2_presentation<C: Coeff>(p: &Params<C>) -> Presentation<C> {
    let mu = p.mu.clone();
    let mu_inv = p.mu_pow(-1);
    let mu2 = p.mu_pow(2);
    let one = C::one;
    let m1 = || -C::one();
    Presentation {
        name: "O(SU_mu(2))",
        kind: AlgKind::Su2,
        gens: vec!["a", "a*", "g", "g*"],
        star: vec![AS, A, GS, G],
        rules: vec![
            Rule::new(&[G, A], vec![(&[A, G], mu_inv.clone())]),
            Rule::new(&[GS, A], vec![(&[A, GS], mu_inv)]),
            Rule::new(&[G, AS], vec![(&[AS, G], mu.clone())]),
            Rule::new(&[GS, AS], vec![(&[AS, GS], mu)]),
            Rule::new(&[GS, G], vec![(&[G, GS], one())]),
            Rule::new(&[AS, A], vec![(&[], one()), (&[G, GS], m1())]),
            Rule::new(&[A, AS], vec![(&[], one()), (&[G, GS], -mu2)]),
        ],
        weights: vec![2, 2, 1, 1],
        shape: su2_shape,
    }
}

pub fn uq_presentation<C: Coeff>(p: &Params<C>) -> Result<Presentation<C>, ScalarError> {
    let mu = p.mu.clone();
    let mu_inv = p.mu_pow(-1);
    let d = p.inv(&(mu.clone() - mu_inv.clone()))?;
    Ok(Presentation {
        name: "U_mu(su(2))",
        kind: AlgKind::Uq,
        gens: vec!["F", "K", "Kinv", "E"],
        star: vec![E, K, KINV, F],
        rules: vec![
            Rule::new(&[K, KINV], vec![(&[], C::one())]),
            Rule::new(&[KINV, K], vec![(&[], C::one())]),
            Rule::new(&[K, F], vec![(&[F, K], mu_inv.clone())]),
            Rule::new(&[KINV, F], vec![(&[F, KINV], mu.clone())]),
            Rule::new(&[E, K], vec![(&[K, E], mu_inv)]),
            Rule::new(&[E, KINV], vec![(&[KINV, E], mu)]),
            Rule::new(&[E, F], vec![(&[F, E], C::one()), (&[K, K], d.clone()), (&[KINV, KINV], -d)]),
        ],
        weights: vec![1, 1, 1, 1],
        shape: uq_shape,
    })
}

pub fn su2<C: Coeff>(p: &Params<C>) -> Arc<Algebra<C>> {
    Algebra::new(su2_presentation(p))
}

pub fn uq<C: Coeff>(p: &Params<C>) -> Result<Arc<Algebra<C>>, ScalarError> {
    Ok(Algebra::new(uq_presentation(p)?))
}

/// The free algebra on the given generators (all self-adjoint), for tests.
pub fn free<C: Coeff>(gens: Vec<&'static str>) -> Arc<Algebra<C>> {
    let n = gens.len();
    Algebra::new(Presentation {
        name: "free",
        kind: AlgKind::Other,
        star: (0..n as Gen).collect(),
        weights: vec![1; n],
        gens,
        rules: Vec::new(),
        shape: |_| true,
    })
}
