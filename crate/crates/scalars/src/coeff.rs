//! The coefficient interface every algebra in the workspace is generic over.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ratfunc::RatFunc;
use crate::scalar::{is_square, Scalar};

/// A commutative field of coefficients.
///
/// `is_zero` is the verdict primitive of every identity check, so exact
/// types must implement it structurally; float types compare against a
/// tolerance and are only meant for quick numeric exploration.
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + 'static
{
    /// True when the coefficient type decides equality exactly.
    const EXACT: bool;

    fn from_rational(r: &BigRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn try_inv(&self) -> Option<Self>;

    /// Positive square root when it exists in this type.
    fn sqrt_exact(&self) -> Option<Self>;

    /// The base indeterminate q, for types that can hold it.
    fn q_symbolic() -> Option<Self> {
        None
    }

    fn render(&self) -> String;

    fn mul_ref(&self, o: &Self) -> Self {
        self.clone() * o.clone()
    }

    fn add_ref(&self, o: &Self) -> Self {
        self.clone() + o.clone()
    }

    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }

    fn powi(&self, k: i64) -> Option<Self> {
        let b = if k < 0 { self.try_inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul_ref(&b);
        }
        Some(acc)
    }
}

macro_rules! float_coeff {
    ($t:ty, $tol:expr) => {
        impl Coeff for $t {
            const EXACT: bool = false;

            fn from_rational(r: &BigRational) -> Self {
                r.to_f64().unwrap_or(f64::NAN) as $t
            }

            fn try_inv(&self) -> Option<Self> {
                (*self != 0.0).then(|| 1.0 / *self)
            }

            fn sqrt_exact(&self) -> Option<Self> {
                (*self >= 0.0).then(|| self.sqrt())
            }

            fn render(&self) -> String {
                format!("{self}")
            }

            fn is_zero_coeff(&self) -> bool {
                self.abs() < $tol
            }
        }
    };
}

float_coeff!(f64, 1e-9);
float_coeff!(f32, 1e-4);

impl Coeff for BigRational {
    const EXACT: bool = true;

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn try_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = is_square(self.numer())?;
        let d = is_square(self.denom())?;
        Some(BigRational::new(n, d))
    }

    fn render(&self) -> String {
        self.to_string()
    }

    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }

    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
}

impl Coeff for RatFunc {
    const EXACT: bool = true;

    fn from_rational(r: &BigRational) -> Self {
        RatFunc::from_rational(r)
    }

    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }

    fn sqrt_exact(&self) -> Option<Self> {
        let v = self.as_rational()?;
        v.sqrt_exact().map(|s| RatFunc::from_rational(&s))
    }

    fn q_symbolic() -> Option<Self> {
        Some(RatFunc::q())
    }

    fn render(&self) -> String {
        RatFunc::render(self)
    }

    fn mul_ref(&self, o: &Self) -> Self {
        self.mul(o)
    }

    fn add_ref(&self, o: &Self) -> Self {
        self.add(o)
    }

    fn powi(&self, k: i64) -> Option<Self> {
        self.pow(k)
    }
}

impl Coeff for Scalar {
    const EXACT: bool = true;

    fn from_rational(r: &BigRational) -> Self {
        Scalar::from_rational(r)
    }

    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }

    fn sqrt_exact(&self) -> Option<Self> {
        self.sqrt()
    }

    fn q_symbolic() -> Option<Self> {
        Some(Scalar::from_base(RatFunc::q()))
    }

    fn render(&self) -> String {
        Scalar::render(self)
    }

    fn mul_ref(&self, o: &Self) -> Self {
        self.mul(o)
    }

    fn add_ref(&self, o: &Self) -> Self {
        self.add(o)
    }
}

macro_rules! ops_via_methods {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                <$t>::add(&self, &o)
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                <$t>::sub(&self, &o)
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                <$t>::mul(&self, &o)
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                <$t>::neg(&self)
            }
        }
        impl<'a> Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                <$t>::add(self, o)
            }
        }
        impl<'a> Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                <$t>::sub(self, o)
            }
        }
        impl<'a> Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t {
                <$t>::mul(self, o)
            }
        }
        impl Zero for $t {
            fn zero() -> $t {
                <$t>::zero()
            }
            fn is_zero(&self) -> bool {
                <$t>::is_zero(self)
            }
        }
        impl One for $t {
            fn one() -> $t {
                <$t>::one()
            }
        }
    };
}

ops_via_methods!(RatFunc);
ops_via_methods!(Scalar);
