//! Simultaneous complex root finding (Aberth-Ehrlich) in double precision.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::poly::gcd::yun;
use crate::poly::UniPoly;
use crate::spectra::sturm::count_real_roots;

pub const MAX_ITERATIONS: usize = 500;

/// A distinct complex root with its multiplicity in the input polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexRoot {
    pub value: Complex64,
    /// `|p(z)| / sum |c_k| |z|^k` for the square-free factor holding the root.
    pub residual: f64,
    pub multiplicity: usize,
}

impl ComplexRoot {
    pub fn is_real(&self) -> bool {
        self.value.im == 0.0
    }
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn residual(c: &[f64], z: Complex64) -> f64 {
    let (p, _) = horner(c, z);
    let r = z.norm();
    let scale = c.iter().rev().fold(0.0, |acc, a| acc * r + a.abs());
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

/// Roots of a square-free polynomial given by monic `f64` coefficients.
fn aberth(c: &[f64], tol: f64) -> Result<Vec<Complex64>> {
    let d = c.len() - 1;
    if d == 1 {
        return Ok(vec![Complex64::new(-c[0], 0.0)]);
    }
    // Fujiwara bound on root moduli
    let bound = (1..=d)
        .map(|k| c[d - k].abs().powf(1.0 / k as f64))
        .fold(0.0, f64::max)
        * 2.0;
    let center = -c[d - 1] / d as f64;
    let radius = bound.max(1e-3) / 2.0;
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4;
            Complex64::new(center, 0.0) + Complex64::from_polar(radius, theta)
        })
        .collect();

    let mut converged = false;
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let mut worst = 0.0f64;
        for k in 0..d {
            let (p, dp) = horner(c, z[k]);
            if p == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                worst = worst.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if worst <= tol {
            converged = true;
            break;
        }
    }
    // final Newton polish
    for zk in z.iter_mut() {
        for _ in 0..2 {
            let (p, dp) = horner(c, *zk);
            let step = p / dp;
            if step.is_finite() {
                *zk -= step;
            }
        }
    }
    let worst_residual = z.iter().map(|&zk| residual(c, zk)).fold(0.0, f64::max);
    if !converged && worst_residual > 1e-10 {
        return Err(Error::NonConvergence {
            iterations,
            residual: worst_residual,
        });
    }
    Ok(z)
}

/// Snaps the `real` roots closest to the axis onto it and makes the rest
/// exact conjugate pairs.
fn enforce_conjugacy(mut z: Vec<Complex64>, real: usize) -> Vec<Complex64> {
    z.sort_by(|a, b| a.im.abs().total_cmp(&b.im.abs()));
    let (reals, rest) = z.split_at(real.min(z.len()));
    let mut out: Vec<Complex64> = reals.iter().map(|r| Complex64::new(r.re, 0.0)).collect();
    let mut upper: Vec<Complex64> = rest.iter().filter(|r| r.im > 0.0).copied().collect();
    let mut lower: Vec<Complex64> = rest.iter().filter(|r| r.im <= 0.0).copied().collect();
    if upper.len() == lower.len() {
        upper.sort_by(|a, b| a.re.total_cmp(&b.re));
        lower.sort_by(|a, b| a.re.total_cmp(&b.re));
        for (u, l) in upper.iter().zip(&lower) {
            let m = Complex64::new((u.re + l.re) / 2.0, (u.im - l.im) / 2.0);
            out.push(m);
            out.push(m.conj());
        }
    } else {
        out.extend(rest);
    }
    out
}

/// All complex roots of `p`, grouped by distinct value with multiplicities
/// summing to `deg p`, sorted by real then imaginary part.
///
/// Each square-free factor is solved separately, so repeated roots never
/// form numerical clusters.
pub fn complex_roots(p: &UniPoly, tol: f64) -> Result<Vec<ComplexRoot>> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::domain(
            "complex roots of a zero or constant polynomial",
        ));
    }
    let (_, factors) = yun(p);
    let mut out = Vec::new();
    for (f, multiplicity) in factors {
        let lead = f.leading().unwrap().clone();
        let c: Vec<f64> = f
            .coeffs()
            .iter()
            .map(|a| (a / &lead).to_f64().unwrap_or(f64::NAN))
            .collect();
        if c.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("coefficients do not fit in double precision"));
        }
        let z = aberth(&c, tol)?;
        let z = enforce_conjugacy(z, count_real_roots(&f));
        out.extend(z.into_iter().map(|value| ComplexRoot {
            value,
            residual: residual(&c, value),
            multiplicity,
        }));
    }
    out.sort_by(|a, b| {
        a.value
            .re
            .total_cmp(&b.value.re)
            .then(a.value.im.total_cmp(&b.value.im))
    });
    Ok(out)
}
