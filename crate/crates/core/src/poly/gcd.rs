//! Content, subresultant gcd and square-free machinery.
//!
//! Normalization: a primitive part has coefficients whose gcd is one and a
//! leading coefficient that is positive (for polynomial coefficients,
//! recursively: the leading rational of the leading coefficient is
//! positive). The content carries whatever sign is needed so that
//! `content * primitive` reproduces the input.

use crate::error::{Error, Result};
use crate::poly::{BiPoly, Poly, UniPoly, Var};
use crate::ring::{GcdDomain, Ring};

impl<R: GcdDomain> GcdDomain for Poly<R> {
    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return positive_associate(other);
        }
        if other.is_zero() {
            return positive_associate(self);
        }
        let (ca, pa) = split_content(self);
        let (cb, pb) = split_content(other);
        let c = ca.gcd(&cb);
        primitive_gcd(&pa, &pb).scale_by(&c)
    }

    fn is_negative_normal(&self) -> bool {
        self.leading().is_some_and(GcdDomain::is_negative_normal)
    }
}

fn positive_associate<R: GcdDomain>(p: &Poly<R>) -> Poly<R> {
    if p.is_negative_normal() {
        Ring::neg(p)
    } else {
        p.clone()
    }
}

/// Divides every coefficient by `c`; `None` unless all divisions are exact.
pub(crate) fn div_coeffs<R: Ring>(p: &Poly<R>, c: &R) -> Option<Poly<R>> {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|a| a.div_exact(c))
        .collect::<Option<Vec<_>>>()?;
    Some(Poly::from_raw(p.var().clone(), coeffs))
}

fn split_content<R: GcdDomain>(p: &Poly<R>) -> (R, Poly<R>) {
    let mut c = p.coeffs().iter().fold(R::ring_zero(), |acc, a| acc.gcd(a));
    let mut prim = div_coeffs(p, &c).expect("content divides every coefficient");
    if prim.is_negative_normal() {
        c = c.neg();
        prim = Ring::neg(&prim);
    }
    (c, prim)
}

/// Splits `p` into `(content, primitive part)` with `p = content * primitive`.
///
/// The primitive part has a positive leading coefficient, so `-3x` splits as
/// `(-3, x)`.
pub fn content_and_primitive<R: GcdDomain>(p: &Poly<R>) -> Result<(R, Poly<R>)> {
    if p.is_zero() {
        return Err(Error::domain("content of the zero polynomial"));
    }
    Ok(split_content(p))
}

pub fn primitive_part<R: GcdDomain>(p: &Poly<R>) -> Poly<R> {
    if p.is_zero() {
        return p.clone();
    }
    split_content(p).1
}

/// Gcd of two primitive polynomials via the subresultant remainder sequence.
fn primitive_gcd<R: GcdDomain>(a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    if b.is_zero() {
        return primitive_part(&a);
    }
    let mut g = a.coeffs()[0].one_like();
    let mut h = g.clone();
    loop {
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return primitive_part(&b);
        }
        if r.degree() == Some(0) {
            return a.one_like();
        }
        a = b;
        let divisor = g.mul(&h.pow(delta));
        b = div_coeffs(&r, &divisor).expect("subresultant division is exact");
        g = a.leading().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact"),
        };
    }
}

/// Polynomials that can be viewed with any of their variables as the main one.
pub trait MainVariable: Sized {
    /// Returns `self` rewritten so that `var` is the main (outer) variable,
    /// plus a flag recording whether a reordering happened.
    fn with_main_var(&self, var: &Var) -> Result<(Self, bool)>;

    /// Inverse of [`MainVariable::with_main_var`].
    fn restore(self, reordered: bool) -> Self;
}

impl MainVariable for UniPoly {
    fn with_main_var(&self, var: &Var) -> Result<(Self, bool)> {
        if self.var() == var || self.is_constant_in_var() {
            Ok((self.clone().with_var(var.clone()), false))
        } else {
            Err(Error::VariableMismatch {
                left: self.var().name().to_owned(),
                right: var.name().to_owned(),
            })
        }
    }

    fn restore(self, _reordered: bool) -> Self {
        self
    }
}

impl MainVariable for BiPoly {
    fn with_main_var(&self, var: &Var) -> Result<(Self, bool)> {
        if self.var() == var {
            return Ok((self.clone(), false));
        }
        match self.inner_var() {
            Some(inner) if inner == var => Ok((self.transpose(), true)),
            None if self.is_constant_in_var() => Ok((self.clone().with_var(var.clone()), false)),
            _ => Err(Error::VariableMismatch {
                left: self.var().name().to_owned(),
                right: var.name().to_owned(),
            }),
        }
    }

    fn restore(self, reordered: bool) -> Self {
        if reordered {
            self.transpose()
        } else {
            self
        }
    }
}

impl BiPoly {
    /// Swaps the roles of the outer and inner variables.
    pub fn transpose(&self) -> BiPoly {
        let inner = self.inner_var().cloned().unwrap_or_else(Var::anonymous);
        let inner_deg = self
            .coeffs()
            .iter()
            .filter_map(Poly::degree)
            .max()
            .unwrap_or(0);
        let coeffs = (0..=inner_deg)
            .map(|j| {
                let column = self.coeffs().iter().map(|c| c.coeff(j)).collect();
                Poly::from_raw(self.var().clone(), column)
            })
            .collect();
        Poly::from_raw(inner, coeffs)
    }
}

fn viewed<P: MainVariable>(p: &P, wrt: &Var) -> Result<(P, bool)> {
    p.with_main_var(wrt)
}

/// Normalized gcd of `a` and `b` as polynomials in `wrt`.
///
/// The result is the product of the gcd of the contents and the primitive
/// gcd, made positive; `gcd(a, 0)` is the positive associate of `a`.
pub fn gcd<R>(a: &Poly<R>, b: &Poly<R>, wrt: &Var) -> Result<Poly<R>>
where
    R: GcdDomain,
    Poly<R>: MainVariable,
{
    if a.is_zero() && b.is_zero() {
        return Err(Error::domain("gcd(0, 0) is undefined"));
    }
    a.compatible(b)?;
    let (va, ra) = viewed(a, wrt)?;
    let (vb, _) = viewed(b, wrt)?;
    Ok(va.gcd(&vb).restore(ra))
}

/// `a / gcd(a, a')` with respect to `wrt`, as a primitive polynomial.
pub fn square_free_part<R>(a: &Poly<R>, wrt: &Var) -> Result<Poly<R>>
where
    R: GcdDomain,
    Poly<R>: MainVariable,
{
    if a.is_zero() {
        return Err(Error::domain("square-free part of the zero polynomial"));
    }
    let (v, reordered) = viewed(a, wrt)?;
    Ok(square_free_part_main(&v).restore(reordered))
}

pub(crate) fn square_free_part_main<R: GcdDomain>(a: &Poly<R>) -> Poly<R> {
    let g = a.gcd(&a.derivative());
    let q = a.div_exact(&g).expect("gcd(a, a') divides a");
    primitive_part(&q)
}

/// One factor of a square-free decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareFreeFactor<P> {
    pub factor: P,
    pub multiplicity: usize,
}

/// A constant and the square-free factors with their multiplicities.
pub type Decomposition<P> = (P, Vec<SquareFreeFactor<P>>);

/// `a = constant * prod(factor_i ^ multiplicity_i)` where the factors are
/// primitive, square-free, pairwise coprime and listed by increasing
/// multiplicity. The constant does not depend on `wrt`.
///
/// Factors group roots by multiplicity; they are not split into
/// irreducibles.
pub fn square_free_decomposition<R>(a: &Poly<R>, wrt: &Var) -> Result<Decomposition<Poly<R>>>
where
    R: GcdDomain,
    Poly<R>: MainVariable,
{
    if a.is_zero() {
        return Err(Error::domain(
            "square-free decomposition of the zero polynomial",
        ));
    }
    let (v, reordered) = viewed(a, wrt)?;
    let (content, factors) = yun(&v);
    let constant = Poly::constant(v.var().clone(), content).restore(reordered);
    let factors = factors
        .into_iter()
        .map(|(f, m)| SquareFreeFactor {
            factor: f.restore(reordered),
            multiplicity: m,
        })
        .collect();
    Ok((constant, factors))
}

/// Yun's algorithm on the main variable.
pub(crate) fn yun<R: GcdDomain>(a: &Poly<R>) -> (R, Vec<(Poly<R>, usize)>) {
    let (content, a) = split_content(a);
    let mut out = Vec::new();
    if a.is_constant_in_var() {
        return (content, out);
    }
    let da = a.derivative();
    let g = a.gcd(&da);
    let mut w = a.div_exact(&g).expect("gcd divides a");
    let y = da.div_exact(&g).expect("gcd divides a'");
    let mut z = Ring::sub(&y, &w.derivative());
    let mut mult = 1;
    while !w.is_constant_in_var() {
        let g = primitive_part(&w.gcd(&z));
        if !g.is_constant_in_var() {
            out.push((g.clone(), mult));
        }
        w = w.div_exact(&g).expect("gcd divides w");
        let y = z.div_exact(&g).expect("gcd divides z");
        z = Ring::sub(&y, &w.derivative());
        mult += 1;
    }
    (content, out)
}
