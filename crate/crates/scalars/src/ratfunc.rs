//! The base field Q(q): rational functions in q = μ^{1/2} with rational coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::upoly::UPoly;

/// `q^shift * num / den`, kept canonical: `num` and `den` are coprime in Q[q],
/// neither is divisible by q, `den` has positive leading coefficient and the
/// integer contents of `num` and `den` are coprime. Equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    shift: i32,
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { shift: 0, num: UPoly::zero(), den: UPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { shift: 0, num: UPoly::one(), den: UPoly::one() }
    }

    /// The indeterminate q.
    pub fn q() -> Self {
        RatFunc { shift: 1, num: UPoly::one(), den: UPoly::one() }
    }

    /// q^k for any integer k.
    pub fn q_pow(k: i32) -> Self {
        RatFunc { shift: k, num: UPoly::one(), den: UPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(n.into()))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        RatFunc {
            shift: 0,
            num: UPoly::constant(r.numer().clone()),
            den: UPoly::constant(r.denom().clone()),
        }
    }

    pub fn from_polys(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::canonical(0, num, den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// The value as a rational number when it does not depend on q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.shift == 0 && self.num.is_constant() && self.den.is_constant() {
            Some(BigRational::new(self.num.lead(), self.den.lead()))
        } else {
            None
        }
    }

    pub fn parts(&self) -> (i32, &UPoly, &UPoly) {
        (self.shift, &self.num, &self.den)
    }

    fn canonical(mut shift: i32, mut num: UPoly, mut den: UPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let vn = num.valuation();
        if vn > 0 {
            num = num.shift_down(vn);
            shift += vn as i32;
        }
        let vd = den.valuation();
        if vd > 0 {
            den = den.shift_down(vd);
            shift -= vd as i32;
        }
        if !den.is_constant() && !num.is_constant() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        }
        let mut k = num.content().gcd(&den.content());
        if den.lead().is_negative() {
            k = -k;
        }
        if !k.is_one() {
            num = num.div_exact_scalar(&k);
            den = den.div_exact_scalar(&k);
        }
        RatFunc { shift, num, den }
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        RatFunc { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let m = self.shift.min(o.shift);
        let a = self.num.shift_up((self.shift - m) as usize);
        let b = o.num.shift_up((o.shift - m) as usize);
        if self.den == o.den {
            return Self::canonical(m, a.add(&b), self.den.clone());
        }
        let num = a.mul(&o.den).add(&b.mul(&self.den));
        Self::canonical(m, num, self.den.mul(&o.den))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let shift = self.shift + o.shift;
        if self.den.is_constant() && o.den.is_constant() {
            return Self::canonical(shift, self.num.mul(&o.num), self.den.mul(&o.den));
        }
        // cross-cancel before multiplying to keep degrees small
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let (n1, d2) = (self.num.div_exact(&g1), o.den.div_exact(&g1));
        let (n2, d1) = (o.num.div_exact(&g2), self.den.div_exact(&g2));
        Self::canonical(shift, n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::canonical(-self.shift, self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        Some(acc)
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, q0: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return None;
        }
        if q0.is_zero() && self.shift < 0 {
            return None;
        }
        let qs = if self.shift >= 0 {
            num_traits::pow(q0.clone(), self.shift as usize)
        } else {
            num_traits::pow(q0.clone(), (-self.shift) as usize).recip()
        };
        Some(self.num.eval(q0) / d * qs)
    }

    /// Numerator and denominator with the q-shift folded in, as polynomials in q.
    pub fn folded(&self) -> (UPoly, UPoly) {
        if self.shift >= 0 {
            (self.num.shift_up(self.shift as usize), self.den.clone())
        } else {
            (self.num.clone(), self.den.shift_up((-self.shift) as usize))
        }
    }

    /// Text form: in `mu` when only even powers of q occur, otherwise in `sqrtmu`.
    pub fn render(&self) -> String {
        let (n, d) = self.folded();
        let (n, d, var) = match (n.decimate(2), d.decimate(2)) {
            (Some(n2), Some(d2)) => (n2, d2, "mu"),
            _ => (n, d, "sqrtmu"),
        };
        let ns = n.render(var);
        if d.is_one() {
            return ns;
        }
        let n_atomic = n.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
        let d_atomic = d.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1 && !d.lead().is_negative();
        let ns = if n_atomic { ns } else { format!("({ns})") };
        let ds = d.render(var);
        let ds = if d_atomic && (d.is_constant() || d.lead().is_one()) { ds } else { format!("({ds})") };
        format!("{ns}/{ds}")
    }

    /// Leading behaviour as q -> 0+: the sign of the lowest-order term.
    pub fn sign_near_zero(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let s = self.num.coeff(0).signum() * self.den.coeff(0).signum();
        if s.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    pub fn num_is_constant(&self) -> bool {
        self.num.is_constant()
    }

    /// True if self equals 1 + q^4.
    pub fn is_one_plus_mu_sq(&self) -> bool {
        self.shift == 0 && self.den.is_one() && self.num == UPoly::from_i64s(&[1, 0, 0, 0, 1])
    }

    pub fn one_plus_mu_sq() -> Self {
        RatFunc { shift: 0, num: UPoly::from_i64s(&[1, 0, 0, 0, 1]), den: UPoly::one() }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(&BigRational::from_integer(n))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}
