//! Normalized noncommutative polynomials tagged with their algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use qiso_scalars::Coeff;

use crate::error::NcError;
use crate::mono::{Gen, Mono};
use crate::presentation::{add_term, Algebra};

#[derive(Clone)]
pub struct NCPoly<C> {
    alg: Arc<Algebra<C>>,
    terms: BTreeMap<Mono, C>,
}

impl<C: Coeff> NCPoly<C> {
    pub fn zero(alg: &Arc<Algebra<C>>) -> Self {
        NCPoly { alg: alg.clone(), terms: BTreeMap::new() }
    }

    pub fn one(alg: &Arc<Algebra<C>>) -> Self {
        Self::constant(alg, C::one())
    }

    pub fn constant(alg: &Arc<Algebra<C>>, c: C) -> Self {
        let mut p = Self::zero(alg);
        add_term(&mut p.terms, Mono::one(), c);
        p
    }

    pub fn gen(alg: &Arc<Algebra<C>>, g: Gen) -> Self {
        Self::word(alg, &[g])
    }

    /// Normalize a word of generators.
    pub fn word(alg: &Arc<Algebra<C>>, w: &[Gen]) -> Self {
        let nf = alg.normalize_word(w);
        NCPoly { alg: alg.clone(), terms: nf.iter().cloned().collect() }
    }

    /// Generator by name, e.g. `"g*"`.
    pub fn named(alg: &Arc<Algebra<C>>, name: &str) -> Result<Self, NcError> {
        let g = alg.pres.gen_index(name).ok_or_else(|| NcError::UnknownGenerator(name.to_string()))?;
        Ok(Self::gen(alg, g))
    }

    /// Build from (monomial, coefficient) pairs that are already normal.
    pub fn from_normal_terms(alg: &Arc<Algebra<C>>, it: impl IntoIterator<Item = (Mono, C)>) -> Self {
        let mut p = Self::zero(alg);
        for (m, c) in it {
            debug_assert!(alg.is_normal(m.letters()));
            add_term(&mut p.terms, m, c);
        }
        p
    }

    pub fn algebra(&self) -> &Arc<Algebra<C>> {
        &self.alg
    }

    pub fn same_algebra(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &o.alg)
    }

    pub fn terms(&self) -> &BTreeMap<Mono, C> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Mono, C> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The verdict primitive: every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|c| c.is_zero_coeff())
    }

    pub fn coeff(&self, m: &Mono) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of the unit monomial.
    pub fn constant_term(&self) -> C {
        self.coeff(&Mono::one())
    }

    /// The constant value if the polynomial is a multiple of 1.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Mono::one()).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Mono::degree).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&Mono, &C)> {
        self.terms.iter().next_back()
    }

    fn check(&self, o: &Self) -> Result<(), NcError> {
        if self.same_algebra(o) {
            Ok(())
        } else {
            Err(NcError::AlgebraMismatch(self.alg.name(), o.alg.name()))
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, NcError> {
        self.check(o)?;
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(NcPolyBuilder::finish(&self.alg, terms))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, NcError> {
        self.check(o)?;
        let mut acc = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let c = c1.mul_ref(c2);
                for (m, c3) in self.alg.mul_mono(m1, m2).iter() {
                    add_term(&mut acc, m.clone(), c.mul_ref(c3));
                }
            }
        }
        Ok(NcPolyBuilder::finish(&self.alg, acc))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut terms = BTreeMap::new();
        for (m, x) in &self.terms {
            add_term(&mut terms, m.clone(), x.mul_ref(c));
        }
        NcPolyBuilder::finish(&self.alg, terms)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.alg);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The involution; all coefficients in this workspace are real, so only
    /// the words are reversed and starred.
    pub fn star(&self) -> Self {
        let mut acc = BTreeMap::new();
        for (m, c) in &self.terms {
            let w = self.alg.star_word(m.letters());
            for (m2, c2) in self.alg.normalize_word(&w).iter() {
                add_term(&mut acc, m2.clone(), c.mul_ref(c2));
            }
        }
        NcPolyBuilder::finish(&self.alg, acc)
    }

    /// Apply a function to each monomial and collect.
    pub fn map_monomials<D: Coeff>(&self, f: impl Fn(&Mono, &C) -> Vec<(Mono, D)>, target: &Arc<Algebra<D>>) -> NCPoly<D> {
        let mut acc = BTreeMap::new();
        for (m, c) in &self.terms {
            for (m2, d) in f(m, c) {
                add_term(&mut acc, m2, d);
            }
        }
        NcPolyBuilder::finish(target, acc)
    }

    /// Change coefficients into another type over a presentation-equivalent algebra.
    pub fn convert<D: Coeff>(&self, target: &Arc<Algebra<D>>, f: impl Fn(&C) -> Option<D>) -> Option<NCPoly<D>> {
        let mut acc = BTreeMap::new();
        for (m, c) in &self.terms {
            add_term(&mut acc, m.clone(), f(c)?);
        }
        Some(NcPolyBuilder::finish(target, acc))
    }

    /// Every monomial has total degree of the given parity.
    pub fn has_parity(&self, even: bool) -> bool {
        self.terms.keys().all(|m| (m.degree() % 2 == 0) == even)
    }

    pub fn render(&self) -> String {
        render_terms(self.terms.iter().map(|(m, c)| (self.alg.render_mono(m), c)))
    }
}

/// Shared rendering of a linear combination, e.g. `a^2 + (1/mu) g g*`.
pub fn render_terms<'a, C: Coeff>(it: impl Iterator<Item = (String, &'a C)>) -> String {
    let mut out = String::new();
    for (m, c) in it {
        let cs = c.render();
        let (neg, body) = match cs.strip_prefix('-') {
            Some(rest) if !rest.contains(" + ") && !rest.contains(" - ") => (true, rest.to_string()),
            _ => (false, cs),
        };
        let simple = !body.contains(' ') || (body.starts_with('(') && body.ends_with(')') && balanced_outer(&body));
        let coef = if simple { body.clone() } else { format!("({body})") };
        let term = if m == "1" {
            coef
        } else if body == "1" {
            m
        } else {
            format!("{coef} {m}")
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn balanced_outer(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i != s.len() - 1 {
                    return false;
                }
            }
            _ => {}
        }
    }
    true
}

struct NcPolyBuilder;

impl NcPolyBuilder {
    fn finish<C: Coeff>(alg: &Arc<Algebra<C>>, terms: BTreeMap<Mono, C>) -> NCPoly<C> {
        NCPoly { alg: alg.clone(), terms }
    }
}

impl<C: Coeff> PartialEq for NCPoly<C> {
    fn eq(&self, o: &Self) -> bool {
        self.same_algebra(o) && self.terms == o.terms
    }
}

impl<C: Coeff> fmt::Debug for NCPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly[{}]({})", self.alg.name(), self.render())
    }
}

impl<C: Coeff> fmt::Display for NCPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a, C: Coeff> Add for &'a NCPoly<C> {
    type Output = NCPoly<C>;
    fn add(self, o: &NCPoly<C>) -> NCPoly<C> {
        self.try_add(o).expect("algebra mismatch")
    }
}

impl<'a, C: Coeff> Sub for &'a NCPoly<C> {
    type Output = NCPoly<C>;
    fn sub(self, o: &NCPoly<C>) -> NCPoly<C> {
        self.try_add(&-o).expect("algebra mismatch")
    }
}

impl<'a, C: Coeff> Mul for &'a NCPoly<C> {
    type Output = NCPoly<C>;
    fn mul(self, o: &NCPoly<C>) -> NCPoly<C> {
        self.try_mul(o).expect("algebra mismatch")
    }
}

impl<'a, C: Coeff> Neg for &'a NCPoly<C> {
    type Output = NCPoly<C>;
    fn neg(self) -> NCPoly<C> {
        NCPoly { alg: self.alg.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl<C: Coeff> Add for NCPoly<C> {
    type Output = NCPoly<C>;
    fn add(self, o: NCPoly<C>) -> NCPoly<C> {
        &self + &o
    }
}

impl<C: Coeff> Sub for NCPoly<C> {
    type Output = NCPoly<C>;
    fn sub(self, o: NCPoly<C>) -> NCPoly<C> {
        &self - &o
    }
}

impl<C: Coeff> Mul for NCPoly<C> {
    type Output = NCPoly<C>;
    fn mul(self, o: NCPoly<C>) -> NCPoly<C> {
        &self * &o
    }
}

impl<C: Coeff> Neg for NCPoly<C> {
    type Output = NCPoly<C>;
    fn neg(self) -> NCPoly<C> {
        -&self
    }
}
