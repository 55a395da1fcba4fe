//! Q(q) extended by square roots: r = √(1+μ²) and √n for squarefree integers n.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::ratfunc::RatFunc;

/// A basis element of the extension over Q(q): `r^[r] * sqrt(n)` with n squarefree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RadKey {
    pub r: bool,
    pub n: u64,
}

impl RadKey {
    pub const ONE: RadKey = RadKey { r: false, n: 1 };

    /// Product of two basis elements as `factor * key`, where the factor is
    /// an integer times optionally (1 + μ²).
    fn mul(self, o: RadKey) -> (RadKey, u64, bool) {
        let g = self.n.gcd(&o.n);
        let n = (self.n / g).checked_mul(o.n / g).expect("radicand overflow");
        (RadKey { r: self.r ^ o.r, n }, g, self.r && o.r)
    }

    pub fn render(&self) -> String {
        match (self.r, self.n) {
            (false, 1) => String::new(),
            (true, 1) => "r".into(),
            (false, n) => format!("sqrt({n})"),
            (true, n) => format!("sqrt({n}) r"),
        }
    }
}

/// Canonical element: sorted list of (basis key, nonzero coefficient).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: SmallVec<[(RadKey, RatFunc); 2]>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: SmallVec::new() }
    }

    pub fn one() -> Self {
        Self::from_base(RatFunc::one())
    }

    pub fn from_base(x: RatFunc) -> Self {
        Self::single(RadKey::ONE, x)
    }

    pub fn single(k: RadKey, x: RatFunc) -> Self {
        let mut s = Scalar::zero();
        if !x.is_zero() {
            s.terms.push((k, x));
        }
        s
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_base(RatFunc::from_rational(r))
    }

    /// The formal atom r = √(1+μ²) over symbolic q.
    pub fn r_atom() -> Self {
        Self::single(RadKey { r: true, n: 1 }, RatFunc::one())
    }

    pub fn terms(&self) -> &[(RadKey, RatFunc)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The base-field value when no radical occurs.
    pub fn as_base(&self) -> Option<RatFunc> {
        match self.terms.as_slice() {
            [] => Some(RatFunc::zero()),
            [(k, x)] if *k == RadKey::ONE => Some(x.clone()),
            _ => None,
        }
    }

    /// Radical keys actually present.
    pub fn keys(&self) -> impl Iterator<Item = RadKey> + '_ {
        self.terms.iter().map(|(k, _)| *k)
    }

    fn from_unsorted(mut v: Vec<(RadKey, RatFunc)>) -> Self {
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut terms: SmallVec<[(RadKey, RatFunc); 2]> = SmallVec::new();
        for (k, x) in v {
            match terms.last_mut() {
                Some((lk, lx)) if *lk == k => *lx = lx.add(&x),
                _ => terms.push((k, x)),
            }
        }
        terms.retain(|(_, x)| !x.is_zero());
        Scalar { terms }
    }

    pub fn neg(&self) -> Self {
        Scalar { terms: self.terms.iter().map(|(k, x)| (*k, x.neg())).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let mut terms: SmallVec<[(RadKey, RatFunc); 2]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            let take = match (self.terms.get(i), o.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            match take {
                std::cmp::Ordering::Less => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    terms.push(o.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = self.terms[i].1.add(&o.terms[j].1);
                    if !s.is_zero() {
                        terms.push((self.terms[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Scalar { terms }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if let ([(ka, a)], [(kb, b)]) = (self.terms.as_slice(), o.terms.as_slice()) {
            if *ka == RadKey::ONE {
                return Scalar::single(*kb, a.mul(b));
            }
            if *kb == RadKey::ONE {
                return Scalar::single(*ka, a.mul(b));
            }
        }
        let mut v = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ka, a) in &self.terms {
            for (kb, b) in &o.terms {
                let (k, g, rr) = ka.mul(*kb);
                let mut x = a.mul(b);
                if g != 1 {
                    x = x.mul(&RatFunc::from_int(g as i64));
                }
                if rr {
                    x = x.mul(&RatFunc::one_plus_mu_sq());
                }
                v.push((k, x));
            }
        }
        Self::from_unsorted(v)
    }

    /// Multiply by a base-field element.
    pub fn scale(&self, x: &RatFunc) -> Self {
        if x.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(k, y)| (*k, y.mul(x))).collect() }
    }

    /// Galois conjugate flipping the sign of √p (p prime) or of r (p = 0).
    fn conjugate(&self, p: u64) -> Self {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| {
                    let flip = if p == 0 { k.r } else { k.n % p == 0 };
                    (*k, if flip { x.neg() } else { x.clone() })
                })
                .collect(),
        }
    }

    /// Inverse by multiplying through with conjugates, one generator at a time.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut gens: Vec<u64> = Vec::new();
        if self.terms.iter().any(|(k, _)| k.r) {
            gens.push(0);
        }
        let mut ns: Vec<u64> = self.terms.iter().map(|(k, _)| k.n).collect();
        ns.sort_unstable();
        ns.dedup();
        for p in primes_of(&ns) {
            gens.push(p);
        }
        let mut x = self.clone();
        let mut acc = Scalar::one();
        for p in gens {
            let xc = x.conjugate(p);
            acc = acc.mul(&xc);
            x = x.mul(&xc);
        }
        let base = x.as_base().expect("conjugate product left a radical");
        Some(acc.scale(&base.inv()?))
    }

    /// Square root of a base-field element when representable: a rational
    /// (through its squarefree decomposition) or 1 + μ² (the atom r).
    pub fn sqrt_of_base(x: &RatFunc) -> Option<Self> {
        if let Some(v) = x.as_rational() {
            return sqrt_rational(&v);
        }
        if x.is_one_plus_mu_sq() {
            return Some(Self::r_atom());
        }
        None
    }

    pub fn sqrt(&self) -> Option<Self> {
        Self::sqrt_of_base(&self.as_base()?)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, x) in &self.terms {
            let ks = k.render();
            let xs = x.render();
            if ks.is_empty() {
                parts.push(xs);
            } else if x.is_one() {
                parts.push(ks);
            } else {
                parts.push(format!("({xs}) {ks}"));
            }
        }
        parts.join(" + ")
    }

    /// Map every coordinate (used to evaluate q at a rational point).
    pub fn map_base(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        Self::from_unsorted(self.terms.iter().map(|(k, x)| (*k, f(x))).collect())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn primes_of(ns: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    for &n in ns {
        let mut m = n;
        let mut p = 2;
        while p * p <= m {
            if m % p == 0 {
                out.push(p);
                while m % p == 0 {
                    m /= p;
                }
            }
            p += 1;
        }
        if m > 1 {
            out.push(m);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Split a positive integer as s² · f with f squarefree.
fn square_split(n: &BigInt) -> (BigInt, BigInt) {
    let mut s = BigInt::one();
    let mut f = BigInt::one();
    let mut m = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0u32;
        while m.is_multiple_of(&p) {
            m /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            s *= &p;
        }
        if e % 2 == 1 {
            f *= &p;
        }
        p += 1;
    }
    f *= m;
    (s, f)
}

/// √v for rational v ≥ 0, as (a/b)·√n with n squarefree.
pub fn sqrt_rational(v: &BigRational) -> Option<Scalar> {
    if v.is_negative() {
        return None;
    }
    if v.is_zero() {
        return Some(Scalar::zero());
    }
    // √(a/b) = √(a b) / b
    let ab = v.numer() * v.denom();
    let (s, f) = square_split(&ab);
    let n: u64 = match f.to_u64_digits() {
        (Sign::Plus, d) if d.len() == 1 => d[0],
        _ => return None,
    };
    let coef = BigRational::new(s, v.denom().clone());
    Some(Scalar::single(RadKey { r: false, n }, RatFunc::from_rational(&coef)))
}

/// Exact integer square root test.
pub fn is_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}
