//! Human-readable descending-power rendering.
//!
//! `E^6 - 3*(lambda^2 + 1)*E^4 + 3*(lambda^4 + lambda^2 + 1)*E^2 - (lambda^6 + 2*lambda^3 + 1)`

use std::fmt::{self, Write as _};

use num_traits::{One, Signed};

use crate::poly::{content_and_primitive, BiPoly, UniPoly, Var};
use crate::ring::Rational;

fn power(var: &Var, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.name().to_owned(),
        _ => format!("{}^{}", var.name(), k),
    }
}

/// Product of a nonnegative magnitude (omitted when 1) with a list of
/// factors (omitted when empty).
fn product(magnitude: Option<String>, factors: &[String]) -> String {
    let mut parts: Vec<&str> = Vec::new();
    if let Some(m) = magnitude.as_deref() {
        parts.push(m);
    }
    parts.extend(factors.iter().filter(|f| !f.is_empty()).map(String::as_str));
    if parts.is_empty() {
        "1".to_owned()
    } else {
        parts.join("*")
    }
}

fn magnitude(c: &Rational) -> Option<String> {
    let m = c.abs();
    (!m.is_one()).then(|| m.to_string())
}

fn push_term(out: &mut String, negative: bool, body: &str) {
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    out.push_str(body);
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs().is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let body = product(magnitude(c), &[power(self.var(), k)]);
            push_term(&mut out, c.is_negative(), &body);
        }
        f.write_str(&out)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs().is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            let outer = power(self.var(), k);
            let terms: Vec<_> = c
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, r)| !num_traits::Zero::is_zero(*r))
                .collect();
            match terms.as_slice() {
                [] => continue,
                [(j, r)] => {
                    let body = product(magnitude(r), &[power(c.var(), *j), outer]);
                    push_term(&mut out, r.is_negative(), &body);
                }
                _ => {
                    let (content, prim) = content_and_primitive(c).expect("nonzero coefficient");
                    let mut group = String::new();
                    write!(group, "({prim})")?;
                    let body = product(magnitude(&content), &[group, outer]);
                    push_term(&mut out, content.is_negative(), &body);
                }
            }
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{benzene_char_poly_golden, benzene_reduced_golden, lam};
    use crate::ring::ratio;

    #[test]
    fn univariate() {
        assert_eq!(UniPoly::from_ints("x", &[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(UniPoly::from_ints("x", &[0, -1]).to_string(), "-x");
        assert_eq!(UniPoly::zero("x").to_string(), "0");
        let p = UniPoly::new("x", vec![ratio(-1, 2), ratio(3, 2), ratio(2, 1)]);
        assert_eq!(p.to_string(), "2*x^2 + 3/2*x - 1/2");
    }

    #[test]
    fn char_poly_rendering() {
        assert_eq!(
            benzene_char_poly_golden().to_string(),
            "E^6 - 3*(lambda^2 + 1)*E^4 + 3*(lambda^4 + lambda^2 + 1)*E^2 - (lambda^6 + 2*lambda^3 + 1)"
        );
        assert_eq!(
            benzene_reduced_golden().to_string(),
            "E^4 - (2*lambda^2 + lambda + 2)*E^2 + (lambda^4 + lambda^3 + lambda + 1)"
        );
    }

    #[test]
    fn bivariate_monomial_coefficients() {
        let p = BiPoly::new("E", vec![lam(&[0, 0, -2]), lam(&[0, 1])]);
        assert_eq!(p.to_string(), "lambda*E - 2*lambda^2");
    }
}
