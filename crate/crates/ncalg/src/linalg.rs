//! Exact elimination over sparse coordinate vectors.

use std::collections::BTreeMap;

use qiso_scalars::Coeff;

use crate::error::NcError;
use crate::mono::Mono;
use crate::poly::NCPoly;
use crate::presentation::add_term;

pub type SparseVec<K, C> = BTreeMap<K, C>;

/// Row of the echelon form: its largest key is the pivot (coefficient 1),
/// and `comb` records it as a combination of the pushed inputs.
#[derive(Clone, Debug)]
struct Row<K, C> {
    vec: SparseVec<K, C>,
    comb: BTreeMap<usize, C>,
}

/// Incremental Gaussian elimination with combination tracking.
#[derive(Clone, Debug)]
pub struct SpanSolver<K, C> {
    rows: BTreeMap<K, Row<K, C>>,
    inputs: usize,
}

/// Outcome of pushing a vector.
#[derive(Clone, Debug, PartialEq)]
pub enum Pushed<C> {
    Independent,
    /// The input equals this combination of earlier inputs.
    Dependent(BTreeMap<usize, C>),
}

fn axpy<K: Ord + Clone, C: Coeff>(v: &mut SparseVec<K, C>, a: &C, w: &SparseVec<K, C>) {
    for (k, x) in w {
        let d = a.mul_ref(x);
        if d.is_zero_coeff() {
            continue;
        }
        match v.entry(k.clone()) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(d);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add_ref(&d);
                if s.is_zero_coeff() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }
}

fn axpy_idx<C: Coeff>(v: &mut BTreeMap<usize, C>, a: &C, w: &BTreeMap<usize, C>) {
    for (k, x) in w {
        let d = a.mul_ref(x);
        let s = match v.get(k) {
            Some(y) => y.add_ref(&d),
            None => d,
        };
        if s.is_zero_coeff() {
            v.remove(k);
        } else {
            v.insert(*k, s);
        }
    }
}

impl<K: Ord + Clone, C: Coeff> Default for SpanSolver<K, C> {
    fn default() -> Self {
        SpanSolver { rows: BTreeMap::new(), inputs: 0 }
    }
}

impl<K: Ord + Clone, C: Coeff> SpanSolver<K, C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    /// Reduce against the stored rows. Returns the residual and the
    /// combination c with v = residual + Σ c_i input_i.
    pub fn reduce(&self, v: &SparseVec<K, C>) -> (SparseVec<K, C>, BTreeMap<usize, C>) {
        let mut v = v.clone();
        let mut comb = BTreeMap::new();
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().next_back().cloned(),
                Some(c) => v.range(..c.clone()).next_back().map(|(k, _)| k.clone()),
            };
            let Some(k) = next else { break };
            match self.rows.get(&k) {
                Some(row) => {
                    let a = v[&k].clone();
                    axpy(&mut v, &-a.clone(), &row.vec);
                    axpy_idx(&mut comb, &a, &row.comb);
                }
                None => cursor = Some(k),
            }
        }
        (v, comb)
    }

    /// Add a vector to the span.
    pub fn push(&mut self, v: &SparseVec<K, C>) -> Result<Pushed<C>, NcError> {
        let idx = self.inputs;
        self.inputs += 1;
        let (res, comb) = self.reduce(v);
        let Some((pivot, lead)) = res.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return Ok(Pushed::Dependent(comb));
        };
        let inv = lead.try_inv().ok_or(qiso_scalars::ScalarError::DivisionByZero)?;
        // row = (input_idx - comb) / lead
        let mut rc: BTreeMap<usize, C> = BTreeMap::new();
        rc.insert(idx, C::one());
        axpy_idx(&mut rc, &-C::one(), &comb);
        let vec: SparseVec<K, C> = res.into_iter().map(|(k, c)| (k, c.mul_ref(&inv))).collect();
        let comb: BTreeMap<usize, C> = rc.into_iter().map(|(k, c)| (k, c.mul_ref(&inv))).collect();
        // keep rows reduced against the new pivot so `reduce` stays one pass
        for row in self.rows.values_mut() {
            if let Some(a) = row.vec.get(&pivot).cloned() {
                axpy(&mut row.vec, &-a.clone(), &vec);
                axpy_idx(&mut row.comb, &-a, &comb);
            }
        }
        self.rows.insert(pivot, Row { vec, comb });
        Ok(Pushed::Independent)
    }

    /// Coefficients expressing v in the span, or None.
    pub fn solve(&self, v: &SparseVec<K, C>) -> Option<Vec<C>> {
        let (res, comb) = self.reduce(v);
        if !res.is_empty() {
            return None;
        }
        Some((0..self.inputs).map(|i| comb.get(&i).cloned().unwrap_or_else(C::zero)).collect())
    }
}

/// Build a solver from independent vectors; errors on the first dependent one.
pub fn independent_solver<K: Ord + Clone, C: Coeff>(basis: &[SparseVec<K, C>]) -> Result<SpanSolver<K, C>, NcError> {
    let mut s = SpanSolver::new();
    for (i, b) in basis.iter().enumerate() {
        if let Pushed::Dependent(_) = s.push(b)? {
            return Err(NcError::DependentBasis(i));
        }
    }
    Ok(s)
}

pub fn poly_vec<C: Coeff>(p: &NCPoly<C>) -> SparseVec<Mono, C> {
    p.terms().clone()
}

/// Coefficients c with target = Σ c_i basis_i, `Ok(None)` if not in the span.
pub fn solve_in_span<C: Coeff>(target: &NCPoly<C>, basis: &[NCPoly<C>]) -> Result<Option<Vec<C>>, NcError> {
    for b in basis {
        if !b.same_algebra(target) {
            return Err(NcError::AlgebraMismatch(target.algebra().name(), b.algebra().name()));
        }
    }
    let vecs: Vec<_> = basis.iter().map(poly_vec).collect();
    let s = independent_solver(&vecs)?;
    Ok(s.solve(&poly_vec(target)))
}

/// Σ c_i b_i
pub fn combine<C: Coeff>(coeffs: &[C], basis: &[NCPoly<C>]) -> Option<NCPoly<C>> {
    let first = basis.first()?;
    let mut acc = BTreeMap::new();
    for (c, b) in coeffs.iter().zip(basis) {
        for (m, x) in b.terms() {
            add_term(&mut acc, m.clone(), c.mul_ref(x));
        }
    }
    Some(NCPoly::from_normal_terms(first.algebra(), acc))
}

pub fn rank<K: Ord + Clone, C: Coeff>(vecs: &[SparseVec<K, C>]) -> Result<usize, NcError> {
    let mut s = SpanSolver::new();
    for v in vecs {
        s.push(v)?;
    }
    Ok(s.rank())
}

/// Basis of the kernel of the linear map sending the i-th domain basis
/// vector to `images[i]`, as coefficient vectors over the domain.
pub fn kernel<K: Ord + Clone, C: Coeff>(images: &[SparseVec<K, C>]) -> Result<Vec<Vec<C>>, NcError> {
    let mut s = SpanSolver::new();
    let mut out = Vec::new();
    for (i, v) in images.iter().enumerate() {
        if let Pushed::Dependent(comb) = s.push(v)? {
            let mut k = vec![C::zero(); images.len()];
            k[i] = C::one();
            for (j, c) in comb {
                k[j] = -c;
            }
            out.push(k);
        }
    }
    Ok(out)
}
