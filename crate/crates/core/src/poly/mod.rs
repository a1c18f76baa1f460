//! Dense univariate polynomials over a [`Ring`], tagged with a variable name.
//!
//! `Poly<Rational>` is a polynomial in one variable over the rationals
//! ([`UniPoly`]); `Poly<UniPoly>` is a polynomial in an outer variable whose
//! coefficients are polynomials in an inner one ([`BiPoly`]). Coefficients are
//! stored lowest power first and never carry a trailing zero, so the zero
//! polynomial is the empty coefficient vector and has no degree.

pub mod gcd;
mod render;

pub use gcd::{
    content_and_primitive, gcd, primitive_part, square_free_decomposition, square_free_part,
    Decomposition, SquareFreeFactor,
};

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{rat, Rational, Ring};

/// Variable tag of a polynomial ring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    /// Tag used for constants built without a ring context.
    pub fn anonymous() -> Self {
        Var::new("")
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Var {
    fn from(name: &str) -> Self {
        Var::new(name)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone)]
pub struct Poly<R> {
    var: Var,
    coeffs: Vec<R>,
}

/// Polynomial in one variable over the rationals.
pub type UniPoly = Poly<Rational>;

/// Polynomial in an outer variable (`E`) with [`UniPoly`] coefficients in an
/// inner variable (`lambda`).
pub type BiPoly = Poly<UniPoly>;

impl<R: Ring> Poly<R> {
    /// Builds a polynomial from coefficients, lowest power first.
    ///
    /// Panics if the coefficients are polynomials in different variables; use
    /// [`Poly::try_new`] for untrusted input.
    pub fn new(var: impl Into<Var>, coeffs: Vec<R>) -> Self {
        Self::try_new(var, coeffs).expect("inconsistent coefficient variables")
    }

    pub fn try_new(var: impl Into<Var>, coeffs: Vec<R>) -> Result<Self> {
        if let Some(first) = coeffs.iter().find(|c| !c.is_constant()) {
            for c in &coeffs {
                first.compatible(c)?;
            }
        }
        Ok(Self::from_raw(var.into(), coeffs))
    }

    pub(crate) fn from_raw(var: Var, mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn zero(var: impl Into<Var>) -> Self {
        Poly {
            var: var.into(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(var: impl Into<Var>, c: R) -> Self {
        Self::from_raw(var.into(), vec![c])
    }

    /// `c * var^k`.
    pub fn monomial(var: impl Into<Var>, c: R, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero(var);
        }
        let mut coeffs = vec![c.zero_like(); k];
        coeffs.push(c);
        Poly {
            var: var.into(),
            coeffs,
        }
    }

    /// The polynomial `var` itself.
    pub fn identity(var: impl Into<Var>) -> Self {
        Self::monomial(var, R::ring_one(), 1)
    }

    pub fn var(&self) -> &Var {
        &self.var
    }

    /// Coefficients, lowest power first.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::ring_zero)
    }

    /// True for the zero polynomial and for nonzero constants in this
    /// polynomial's own variable.
    pub fn is_constant_in_var(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Poly<S> {
        Poly::from_raw(self.var.clone(), self.coeffs.iter().map(f).collect())
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale_by(&self, c: &R) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        Poly::from_raw(
            self.var.clone(),
            self.coeffs.iter().map(|a| a.mul(c)).collect(),
        )
    }

    /// Retags the polynomial.
    pub fn with_var(mut self, var: impl Into<Var>) -> Self {
        self.var = var.into();
        self
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::ring_zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    fn join_var(&self, other: &Self) -> Result<Var> {
        if self.var == other.var || other.is_constant_in_var() {
            Ok(self.var.clone())
        } else if self.is_constant_in_var() {
            Ok(other.var.clone())
        } else {
            Err(Error::VariableMismatch {
                left: self.var.name().to_owned(),
                right: other.var.name().to_owned(),
            })
        }
    }

    fn joined(&self, other: &Self) -> Var {
        match self.join_var(other) {
            Ok(v) => v,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(Ring::add(self, other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(Ring::sub(self, other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(Ring::mul(self, other))
    }

    /// Division with remainder, `self = q * divisor + r` with
    /// `deg r < deg divisor`. Returns `None` when the divisor is zero or a
    /// leading-coefficient division is not exact in `R`.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let db = divisor.degree()?;
        let lc = divisor.leading()?;
        let var = self.joined(divisor);
        let Some(da) = self.degree() else {
            return Some((Self::zero(var.clone()), Self::zero(var)));
        };
        if da < db {
            return Some((Self::zero(var), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![lc.zero_like(); da - db + 1];
        for k in (db..=da).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = rem[k].div_exact(lc)?;
            for (j, bj) in divisor.coeffs.iter().enumerate() {
                let idx = k - db + j;
                rem[idx] = rem[idx].sub(&c.mul(bj));
            }
            quot[k - db] = c;
        }
        rem.truncate(db);
        Some((Self::from_raw(var.clone(), quot), Self::from_raw(var, rem)))
    }

    /// Pseudo-remainder: the remainder of `lc(divisor)^(da-db+1) * self`
    /// divided by `divisor`, computed without any division in `R`.
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        let db = divisor
            .degree()
            .expect("pseudo-remainder by zero polynomial");
        let lc = divisor.leading().unwrap();
        let var = self.joined(divisor);
        let Some(da) = self.degree() else {
            return Self::zero(var);
        };
        if da < db {
            return self.clone();
        }
        let mut rem = self.coeffs.clone();
        let mut pending = da - db + 1;
        while rem.len() > db {
            let k = rem.len() - 1;
            let c = rem[k].clone();
            for r in rem.iter_mut() {
                *r = r.mul(lc);
            }
            for (j, bj) in divisor.coeffs.iter().enumerate() {
                let idx = k - db + j;
                rem[idx] = rem[idx].sub(&c.mul(bj));
            }
            while rem.last().is_some_and(Ring::is_zero) {
                rem.pop();
            }
            pending -= 1;
        }
        let rem = Self::from_raw(var, rem);
        if pending > 0 {
            rem.scale_by(&lc.pow(pending))
        } else {
            rem
        }
    }

    /// Derivative with respect to this polynomial's own variable.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(k as i64))
            .collect();
        Self::from_raw(self.var.clone(), coeffs)
    }
}

/// Differentiation with respect to a named variable.
pub trait Differentiable: Sized {
    /// Derivative with respect to `var`; an expression that does not mention
    /// `var` differentiates to zero.
    fn derivative_wrt(&self, var: &Var) -> Self;
}

impl Differentiable for Rational {
    fn derivative_wrt(&self, _var: &Var) -> Self {
        rat(0)
    }
}

impl<R: Ring + Differentiable> Differentiable for Poly<R> {
    fn derivative_wrt(&self, var: &Var) -> Self {
        if &self.var == var {
            self.derivative()
        } else {
            self.map_coeffs(|c| c.derivative_wrt(var))
        }
    }
}

impl UniPoly {
    /// Builds a polynomial from integer coefficients, lowest power first.
    pub fn from_ints(var: impl Into<Var>, coeffs: &[i64]) -> Self {
        Self::from_raw(var.into(), coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// Monic polynomial with the given rational roots.
    pub fn from_roots(var: impl Into<Var>, roots: &[Rational]) -> Self {
        let var = var.into();
        roots
            .iter()
            .fold(Self::constant(var.clone(), rat(1)), |acc, r| {
                Ring::mul(&acc, &Self::new(var.clone(), vec![-r.clone(), rat(1)]))
            })
    }

    /// Lossy evaluation in double precision.
    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl BiPoly {
    /// Lifts a polynomial in the inner variable to a constant in `outer`.
    pub fn from_inner(outer: impl Into<Var>, c: UniPoly) -> Self {
        Self::constant(outer, c)
    }

    /// Variable tag shared by the non-constant inner coefficients.
    pub fn inner_var(&self) -> Option<&Var> {
        self.coeffs
            .iter()
            .find(|c| !c.is_constant_in_var())
            .map(|c| c.var())
    }

    /// Substitutes `lambda = value` in every coefficient, leaving a
    /// polynomial in the outer variable.
    pub fn eval_inner(&self, value: &Rational) -> UniPoly {
        Poly::from_raw(
            self.var.clone(),
            self.coeffs.iter().map(|c| c.eval(value)).collect(),
        )
    }

    /// Total-degree-free view: coefficient of `outer^i * inner^j`.
    pub fn coeff2(&self, i: usize, j: usize) -> Rational {
        self.coeffs
            .get(i)
            .map(|c| c.coeff(j))
            .unwrap_or_else(|| rat(0))
    }
}

impl<R: Ring> PartialEq for Poly<R> {
    /// Constants compare equal regardless of their tag.
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
            && (self.var == other.var || (self.is_constant_in_var() && other.is_constant_in_var()))
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{:?}]{:?}", self.var, self.coeffs)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn ring_zero() -> Self {
        Self::zero(Var::anonymous())
    }

    fn ring_one() -> Self {
        Self::constant(Var::anonymous(), R::ring_one())
    }

    fn zero_like(&self) -> Self {
        Self::zero(self.var.clone())
    }

    fn one_like(&self) -> Self {
        let one = self
            .coeffs
            .first()
            .map(Ring::one_like)
            .unwrap_or_else(R::ring_one);
        Self::constant(self.var.clone(), one)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    fn add(&self, other: &Self) -> Self {
        let var = self.joined(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_raw(var, coeffs)
    }

    fn sub(&self, other: &Self) -> Self {
        Ring::add(self, &Ring::neg(other))
    }

    fn mul(&self, other: &Self) -> Self {
        let var = self.joined(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(var);
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_raw(var, out)
    }

    fn neg(&self) -> Self {
        Poly {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    fn scale(&self, k: i64) -> Self {
        Self::from_raw(
            self.var.clone(),
            self.coeffs.iter().map(|c| c.scale(k)).collect(),
        )
    }

    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1 && self.coeffs.iter().all(Ring::is_constant)
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        self.join_var(other)?;
        let a = self.coeffs.iter().find(|c| !c.is_constant());
        let b = other.coeffs.iter().find(|c| !c.is_constant());
        match (a, b) {
            (Some(a), Some(b)) => a.compatible(b),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{benzene_char_poly_golden, lam};
    use crate::ring::ratio;

    fn x(c: &[i64]) -> UniPoly {
        UniPoly::from_ints("x", c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(Ring::mul(&x(&[1, 1]), &x(&[-1, 1])), x(&[-1, 0, 1]));
    }

    #[test]
    fn multiplying_by_zero_annihilates() {
        let z = UniPoly::zero("x");
        assert!(Ring::mul(&x(&[3, 2, 1]), &z).is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = x(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(x(&[0, 0]).is_zero());
    }

    #[test]
    fn factored_benzene_polynomial_expands_to_golden() {
        // (E + l + 1)(E - l - 1)(E^2 - l^2 + l - 1)^2
        let e = |c: Vec<UniPoly>| BiPoly::new("E", c);
        let f1 = e(vec![lam(&[1, 1]), lam(&[1])]);
        let f2 = e(vec![lam(&[-1, -1]), lam(&[1])]);
        let f3 = e(vec![lam(&[-1, 1, -1]), lam(&[]), lam(&[1])]);
        let p = Ring::mul(&Ring::mul(&f1, &f2), &f3.pow(2));
        assert_eq!(p, benzene_char_poly_golden());
    }

    #[test]
    fn mismatched_variables_are_rejected() {
        let a = x(&[0, 1]);
        let b = UniPoly::from_ints("y", &[0, 1]);
        assert!(matches!(
            a.checked_mul(&b),
            Err(Error::VariableMismatch { .. })
        ));
        // constants adopt the other operand's variable
        let c = UniPoly::from_ints("y", &[5]);
        assert_eq!(a.checked_mul(&c).unwrap(), x(&[0, 5]));
    }

    #[test]
    fn nested_mismatch_is_detected() {
        let p = BiPoly::new("E", vec![lam(&[0, 1]), lam(&[1])]);
        let q = BiPoly::new("E", vec![UniPoly::from_ints("mu", &[0, 1]), lam(&[1])]);
        assert!(p.checked_add(&q).is_err());
        assert!(
            BiPoly::try_new("E", vec![lam(&[0, 1]), UniPoly::from_ints("mu", &[0, 1])]).is_err()
        );
    }

    #[test]
    fn derivative_power_rule() {
        // d/dx (x^2 + 3x + 2) = 2x + 3
        assert_eq!(x(&[2, 3, 1]).derivative(), x(&[3, 2]));
        assert!(x(&[7]).derivative().is_zero());
    }

    #[test]
    fn derivative_of_reduced_benzene_polynomial() {
        let q = crate::fixtures::benzene_reduced_golden();
        let dq = q.derivative_wrt(&Var::new("E"));
        // 4E^3 - 2E(2l^2 + l + 2)
        let expected = BiPoly::new("E", vec![lam(&[]), lam(&[-4, -2, -4]), lam(&[]), lam(&[4])]);
        assert_eq!(dq, expected);
        // differentiating a lambda-free constant in lambda gives zero
        let c = BiPoly::new("E", vec![lam(&[3]), lam(&[1])]);
        assert!(c.derivative_wrt(&Var::new("lambda")).is_zero());
    }

    #[test]
    fn inner_evaluation() {
        let p = benzene_char_poly_golden();
        assert_eq!(
            p.eval_inner(&rat(0)),
            UniPoly::from_ints("E", &[-1, 0, 3, 0, -3, 0, 1])
        );
        let q = crate::fixtures::benzene_reduced_golden();
        assert_eq!(
            q.eval_inner(&rat(-1)),
            UniPoly::from_ints("E", &[0, 0, -3, 0, 1])
        );
        let c = BiPoly::new("E", vec![lam(&[2]), lam(&[1])]);
        assert_eq!(c.eval_inner(&ratio(7, 3)), UniPoly::from_ints("E", &[2, 1]));
    }

    #[test]
    fn pseudo_remainder_matches_scaled_division() {
        let a = x(&[1, -2, 0, 3]);
        let b = x(&[1, 0, 2]);
        let prem = a.pseudo_rem(&b);
        let (_, r) = a.scale_by(&rat(4)).div_rem(&b).unwrap();
        assert_eq!(prem, r);
    }

    #[test]
    fn exact_division_over_polynomial_coefficients() {
        let p = benzene_char_poly_golden();
        let f = BiPoly::new("E", vec![lam(&[-1, 1, -1]), lam(&[]), lam(&[1])]);
        let q = p.div_exact(&f).unwrap();
        assert_eq!(Ring::mul(&q, &f), p);
        let not_factor = BiPoly::new("E", vec![lam(&[0, 1]), lam(&[2])]);
        assert!(p.div_exact(&not_factor).is_none());
    }
}
