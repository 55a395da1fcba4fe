//! Elements of A ⊗ B keyed by pairs of normal monomials.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use qiso_scalars::Coeff;

use crate::error::NcError;
use crate::mono::Mono;
use crate::poly::{render_terms, NCPoly};
use crate::presentation::{add_term, Algebra};

pub type MonoPair = (Mono, Mono);

#[derive(Clone)]
pub struct TensorPoly<C> {
    left: Arc<Algebra<C>>,
    right: Arc<Algebra<C>>,
    terms: BTreeMap<MonoPair, C>,
}

fn add_pair<C: Coeff>(acc: &mut BTreeMap<MonoPair, C>, k: MonoPair, c: C) {
    if c.is_zero_coeff() {
        return;
    }
    match acc.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add_ref(&c);
            if s.is_zero_coeff() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

impl<C: Coeff> TensorPoly<C> {
    pub fn zero(left: &Arc<Algebra<C>>, right: &Arc<Algebra<C>>) -> Self {
        TensorPoly { left: left.clone(), right: right.clone(), terms: BTreeMap::new() }
    }

    /// x ⊗ y
    pub fn pure(x: &NCPoly<C>, y: &NCPoly<C>) -> Self {
        let mut t = Self::zero(x.algebra(), y.algebra());
        for (m, a) in x.terms() {
            for (n, b) in y.terms() {
                add_pair(&mut t.terms, (m.clone(), n.clone()), a.mul_ref(b));
            }
        }
        t
    }

    pub fn one(left: &Arc<Algebra<C>>, right: &Arc<Algebra<C>>) -> Self {
        Self::pure(&NCPoly::one(left), &NCPoly::one(right))
    }

    pub fn from_terms(left: &Arc<Algebra<C>>, right: &Arc<Algebra<C>>, it: impl IntoIterator<Item = (MonoPair, C)>) -> Self {
        let mut t = Self::zero(left, right);
        for (k, c) in it {
            add_pair(&mut t.terms, k, c);
        }
        t
    }

    pub fn left_algebra(&self) -> &Arc<Algebra<C>> {
        &self.left
    }

    pub fn right_algebra(&self) -> &Arc<Algebra<C>> {
        &self.right
    }

    pub fn terms(&self) -> &BTreeMap<MonoPair, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|c| c.is_zero_coeff())
    }

    fn same_shape(&self, o: &Self) -> Result<(), NcError> {
        if Arc::ptr_eq(&self.left, &o.left) && Arc::ptr_eq(&self.right, &o.right) {
            Ok(())
        } else {
            Err(NcError::AlgebraMismatch(self.left.name(), o.left.name()))
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, NcError> {
        self.same_shape(o)?;
        let mut t = self.clone();
        for (k, c) in &o.terms {
            add_pair(&mut t.terms, k.clone(), c.clone());
        }
        Ok(t)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.try_add(o).expect("tensor factor mismatch")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-C::one()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut t = Self::zero(&self.left, &self.right);
        for (k, x) in &self.terms {
            add_pair(&mut t.terms, k.clone(), x.mul_ref(c));
        }
        t
    }

    /// Factorwise product (x ⊗ y)(x' ⊗ y') = xx' ⊗ yy'.
    pub fn try_mul(&self, o: &Self) -> Result<Self, NcError> {
        self.same_shape(o)?;
        let mut t = Self::zero(&self.left, &self.right);
        for ((m1, n1), a) in &self.terms {
            for ((m2, n2), b) in &o.terms {
                let ab = a.mul_ref(b);
                let l = self.left.mul_mono(m1, m2);
                let r = self.right.mul_mono(n1, n2);
                for (m, c1) in l.iter() {
                    let abc = ab.mul_ref(c1);
                    for (n, c2) in r.iter() {
                        add_pair(&mut t.terms, (m.clone(), n.clone()), abc.mul_ref(c2));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("tensor factor mismatch")
    }

    /// Group by the right leg: y ↦ the left-leg polynomial multiplying it.
    pub fn by_right_leg(&self) -> BTreeMap<Mono, NCPoly<C>> {
        let mut out: BTreeMap<Mono, BTreeMap<Mono, C>> = BTreeMap::new();
        for ((m, n), c) in &self.terms {
            add_term(out.entry(n.clone()).or_default(), m.clone(), c.clone());
        }
        out.into_iter().map(|(n, t)| (n, NCPoly::from_normal_terms(&self.left, t))).collect()
    }

    /// Group by the left leg.
    pub fn by_left_leg(&self) -> BTreeMap<Mono, NCPoly<C>> {
        let mut out: BTreeMap<Mono, BTreeMap<Mono, C>> = BTreeMap::new();
        for ((m, n), c) in &self.terms {
            add_term(out.entry(m.clone()).or_default(), n.clone(), c.clone());
        }
        out.into_iter().map(|(m, t)| (m, NCPoly::from_normal_terms(&self.right, t))).collect()
    }

    /// Apply a linear functional to the right leg.
    pub fn contract_right(&self, f: impl Fn(&Mono) -> C) -> NCPoly<C> {
        let mut acc = BTreeMap::new();
        for ((m, n), c) in &self.terms {
            add_term(&mut acc, m.clone(), c.mul_ref(&f(n)));
        }
        NCPoly::from_normal_terms(&self.left, acc)
    }

    /// Apply a linear functional to the left leg.
    pub fn contract_left(&self, f: impl Fn(&Mono) -> C) -> NCPoly<C> {
        let mut acc = BTreeMap::new();
        for ((m, n), c) in &self.terms {
            add_term(&mut acc, n.clone(), c.mul_ref(&f(m)));
        }
        NCPoly::from_normal_terms(&self.right, acc)
    }

    /// Multiplication map m(x ⊗ y) = xy; both legs must be the same algebra.
    pub fn multiply(&self) -> Result<NCPoly<C>, NcError> {
        if !Arc::ptr_eq(&self.left, &self.right) {
            return Err(NcError::AlgebraMismatch(self.left.name(), self.right.name()));
        }
        let mut acc = BTreeMap::new();
        for ((m, n), c) in &self.terms {
            for (p, c2) in self.left.mul_mono(m, n).iter() {
                add_term(&mut acc, p.clone(), c.mul_ref(c2));
            }
        }
        Ok(NCPoly::from_normal_terms(&self.left, acc))
    }

    /// (f ⊗ g) applied legwise, each map given on monomials.
    pub fn map_legs(
        &self,
        f: impl Fn(&Mono) -> NCPoly<C>,
        g: impl Fn(&Mono) -> NCPoly<C>,
        left: &Arc<Algebra<C>>,
        right: &Arc<Algebra<C>>,
    ) -> Self {
        let mut t = Self::zero(left, right);
        for ((m, n), c) in &self.terms {
            let fm = f(m);
            let gn = g(n);
            for (m2, a) in fm.terms() {
                let ca = c.mul_ref(a);
                for (n2, b) in gn.terms() {
                    add_pair(&mut t.terms, (m2.clone(), n2.clone()), ca.mul_ref(b));
                }
            }
        }
        t
    }

    pub fn render(&self) -> String {
        render_terms(self.terms.iter().map(|((m, n), c)| {
            (format!("{} (x) {}", self.left.render_mono(m), self.right.render_mono(n)), c)
        }))
    }
}

impl<C: Coeff> PartialEq for TensorPoly<C> {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.left, &o.left) && Arc::ptr_eq(&self.right, &o.right) && self.terms == o.terms
    }
}

impl<C: Coeff> fmt::Debug for TensorPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorPoly({})", self.render())
    }
}

impl<C: Coeff> fmt::Display for TensorPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
