//! Resultants and discriminants.
//!
//! Two independent routes compute a resultant: the determinant of the
//! Sylvester matrix (via Bareiss elimination) and the subresultant
//! remainder sequence. Both are registered as [`ResultantStrategy`]
//! implementations; the subresultant route is the default.

mod matrix;
mod strategy;

pub use matrix::{determinant_bareiss, Matrix};
pub use strategy::{ResultantRegistry, ResultantStrategy, SubresultantPrs, SylvesterBareiss};

use crate::error::{Error, Result};
use crate::poly::gcd::MainVariable;
use crate::poly::{Poly, Var};
use crate::ring::{GcdDomain, Ring};

/// Sylvester matrix of `a` (degree `d`) and `b` (degree `e`).
///
/// Column layout: `e` columns holding `a_0..a_d` (leading coefficient
/// first), each shifted down one row from the previous, followed by `d`
/// columns holding `b_0..b_e` shifted the same way.
#[derive(Debug, Clone, PartialEq)]
pub struct SylvesterMatrix<R> {
    pub entries: Matrix<R>,
    pub d: usize,
    pub e: usize,
}

pub fn sylvester_matrix<R>(a: &Poly<R>, b: &Poly<R>, wrt: &Var) -> Result<SylvesterMatrix<R>>
where
    R: GcdDomain,
    Poly<R>: MainVariable,
{
    a.compatible(b)?;
    let (a, _) = a.with_main_var(wrt)?;
    let (b, _) = b.with_main_var(wrt)?;
    sylvester_main(&a, &b)
}

pub(crate) fn sylvester_main<R: Ring>(a: &Poly<R>, b: &Poly<R>) -> Result<SylvesterMatrix<R>> {
    let (Some(d), Some(e)) = (a.degree(), b.degree()) else {
        return Err(Error::domain("Sylvester matrix of a zero polynomial"));
    };
    if d + e == 0 {
        return Err(Error::domain("Sylvester matrix of two constants is empty"));
    }
    let n = d + e;
    let zero = a.leading().unwrap().zero_like();
    // descending coefficient k of a polynomial of degree deg
    let desc = |p: &Poly<R>, deg: usize, k: usize| p.coeffs()[deg - k].clone();
    let entries = Matrix::from_fn(n, n, |row, col| {
        if col < e {
            let k = row.wrapping_sub(col);
            if row >= col && k <= d {
                return desc(a, d, k);
            }
        } else {
            let shift = col - e;
            let k = row.wrapping_sub(shift);
            if row >= shift && k <= e {
                return desc(b, e, k);
            }
        }
        zero.clone()
    });
    Ok(SylvesterMatrix { entries, d, e })
}

/// `Res_wrt(a, b)` by the default (subresultant) route.
pub fn resultant<R>(a: &Poly<R>, b: &Poly<R>, wrt: &Var) -> Result<R>
where
    R: GcdDomain,
    Poly<R>: MainVariable,
{
    resultant_with(&SubresultantPrs, a, b, wrt)
}

pub fn resultant_with<R>(
    strategy: &dyn ResultantStrategy<R>,
    a: &Poly<R>,
    b: &Poly<R>,
    wrt: &Var,
) -> Result<R>
where
    R: GcdDomain,
    Poly<R>: MainVariable,
{
    a.compatible(b)?;
    let (a, _) = a.with_main_var(wrt)?;
    let (b, _) = b.with_main_var(wrt)?;
    strategy.resultant(&a, &b)
}

/// `Disc_wrt(a) = (-1)^(d(d-1)/2) / a_0 * Res(a, a')` by the default route.
pub fn discriminant<R>(a: &Poly<R>, wrt: &Var) -> Result<R>
where
    R: GcdDomain,
    Poly<R>: MainVariable,
{
    discriminant_with(&SubresultantPrs, a, wrt)
}

pub fn discriminant_with<R>(
    strategy: &dyn ResultantStrategy<R>,
    a: &Poly<R>,
    wrt: &Var,
) -> Result<R>
where
    R: GcdDomain,
    Poly<R>: MainVariable,
{
    let (a, _) = a.with_main_var(wrt)?;
    discriminant_main(strategy, &a)
}

pub(crate) fn discriminant_main<R: GcdDomain>(
    strategy: &dyn ResultantStrategy<R>,
    a: &Poly<R>,
) -> Result<R> {
    let d = match a.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::domain("discriminant of a constant polynomial")),
    };
    let res = strategy.resultant(a, &a.derivative())?;
    let lead = a.leading().unwrap();
    let quotient = res.div_exact(lead).ok_or_else(|| {
        Error::InternalFault("leading coefficient does not divide Res(a, a')".into())
    })?;
    Ok(if (d * (d - 1) / 2) % 2 == 1 {
        quotient.neg()
    } else {
        quotient
    })
}

/// Subresultant resultant on the main variable of two nonzero polynomials.
pub(crate) fn subresultant_resultant<R: GcdDomain>(a: &Poly<R>, b: &Poly<R>) -> Result<R> {
    let (Some(mut da), Some(mut db)) = (a.degree(), b.degree()) else {
        return Err(Error::domain("resultant of a zero polynomial"));
    };
    if da + db == 0 {
        return Err(Error::domain("resultant of two constants"));
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let one = a.leading().unwrap().one_like();
    let mut negate = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        negate = da % 2 == 1 && db % 2 == 1;
    }
    if db == 0 {
        let r = b.leading().unwrap().pow(da);
        return Ok(if negate { r.neg() } else { r });
    }
    let (ca, pa) = crate::poly::content_and_primitive(&a)?;
    let (cb, pb) = crate::poly::content_and_primitive(&b)?;
    let t = ca.pow(db).mul(&cb.pow(da));
    let (mut a, mut b) = (pa, pb);
    let mut g = one.clone();
    let mut h = one;
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = g.mul(&h.pow(delta));
        b = crate::poly::gcd::div_coeffs(&r, &divisor)
            .ok_or_else(|| Error::InternalFault("inexact subresultant division".into()))?;
        g = a.leading().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .ok_or_else(|| Error::InternalFault("inexact subresultant division".into()))?,
        };
        match b.degree() {
            None => return Ok(g.zero_like()),
            Some(0) => break,
            Some(_) => {}
        }
    }
    let da = a.degree().unwrap();
    let last = b.leading().unwrap().pow(da);
    let h = last
        .div_exact(&h.pow(da - 1))
        .ok_or_else(|| Error::InternalFault("inexact subresultant division".into()))?;
    let r = t.mul(&h);
    Ok(if negate { r.neg() } else { r })
}
