//! Coefficient rings.
//!
//! Everything in this crate is generic over [`Ring`], an exact integral domain
//! with exact division, and [`GcdDomain`], which adds the content/gcd notions
//! the subresultant machinery needs. Two implementations exist: [`Rational`]
//! and [`Poly<R>`](crate::poly::Poly) for any `R: GcdDomain`, which gives both
//! `Q[x]` and `Q[lambda][E]`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Builds an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds `num/den` in lowest terms. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An exact commutative integral domain.
///
/// Constructors that need an instance (`zero_like`, `one_like`) exist so that
/// polynomial rings can carry their variable tag through generic code.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    /// Additive identity with no variable tag attached.
    fn ring_zero() -> Self;
    /// Multiplicative identity with no variable tag attached.
    fn ring_one() -> Self;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Multiplies by an integer.
    fn scale(&self, k: i64) -> Self;

    /// `Some(q)` with `self = q * divisor`, or `None` when the division is not
    /// exact in this ring (or `divisor` is zero).
    fn div_exact(&self, divisor: &Self) -> Option<Self>;

    /// True when the element does not depend on any polynomial variable.
    fn is_constant(&self) -> bool;

    /// Checks that two elements live in the same ring (matching variable
    /// tags, where both actually depend on a variable).
    fn compatible(&self, _other: &Self) -> crate::Result<()> {
        Ok(())
    }

    fn pow(&self, mut exp: usize) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// A ring with a canonical gcd and sign normalization.
///
/// For [`Rational`] the gcd is the "integer-like" one, `gcd(a/b, c/d) =
/// gcd(a, c) / lcm(b, d)`, so that the content of a rational polynomial
/// leaves a primitive part with coprime integer coefficients.
pub trait GcdDomain: Ring {
    /// Non-negative (canonical associate) gcd; `gcd(0, 0) = 0`.
    fn gcd(&self, other: &Self) -> Self;

    /// True when the element is "negative" under the normalization
    /// convention: for rationals the sign; for polynomials, recursively the
    /// sign of the leading coefficient.
    fn is_negative_normal(&self) -> bool;
}

impl Ring for Rational {
    fn ring_zero() -> Self {
        Rational::zero()
    }
    fn ring_one() -> Self {
        Rational::one()
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, k: i64) -> Self {
        self * rat(k)
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            None
        } else {
            Some(self / divisor)
        }
    }
    fn is_constant(&self) -> bool {
        true
    }
}

impl GcdDomain for Rational {
    fn gcd(&self, other: &Self) -> Self {
        if Zero::is_zero(self) {
            return other.abs();
        }
        if Zero::is_zero(other) {
            return self.abs();
        }
        let num = self.numer().gcd(other.numer());
        let den = self.denom().lcm(other.denom());
        Rational::new(num, den)
    }

    fn is_negative_normal(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// True when `r` is in canonical form: coprime parts, positive denominator.
pub fn is_canonical(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}
