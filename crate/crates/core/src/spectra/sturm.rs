//! Real root isolation by Sturm sequences and exact bisection.

use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::poly::gcd::yun;
use crate::poly::UniPoly;
use crate::ring::{rat, Rational, Ring};

/// A real root with an isolating interval `[lower, upper]`.
///
/// Either `lower == upper` (the root is exactly that rational) or the open
/// interval holds exactly one distinct root and the square-free part of the
/// polynomial has opposite signs at the two endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct RealRoot {
    pub lower: Rational,
    pub upper: Rational,
    /// Midpoint of the interval, in double precision.
    pub value: f64,
    pub multiplicity: usize,
}

impl RealRoot {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    /// The exact midpoint of the isolating interval.
    pub fn midpoint(&self) -> Rational {
        (&self.lower + &self.upper) / rat(2)
    }

    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }
}

/// Sturm chain `p, p', -rem(p, p'), ...` scaled by positive constants.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<UniPoly>,
}

fn positive_scale(p: UniPoly) -> UniPoly {
    if p.is_zero() {
        return p;
    }
    let (c, _) = crate::poly::content_and_primitive(&p).expect("nonzero");
    p.scale_by(&(rat(1) / c.abs()))
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Self {
        let mut chain = vec![positive_scale(p.clone())];
        let d = positive_scale(p.derivative());
        if !d.is_zero() {
            chain.push(d);
        }
        while chain.len() >= 2 {
            let k = chain.len();
            let (_, r) = chain[k - 2].div_rem(&chain[k - 1]).expect("field division");
            if r.is_zero() {
                break;
            }
            chain.push(positive_scale(r.neg()));
        }
        SturmChain { chain }
    }

    pub fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let neg = v.is_negative();
            if last.is_some_and(|l| l != neg) {
                count += 1;
            }
            last = Some(neg);
        }
        count
    }

    /// Distinct roots in the half-open interval `(lo, hi]`.
    pub fn count_half_open(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations(lo) - self.variations(hi)
    }

    fn base(&self) -> &UniPoly {
        &self.chain[0]
    }

    /// Distinct roots in the open interval `(lo, hi)`.
    fn count_open(&self, lo: &Rational, hi: &Rational) -> usize {
        let at_hi = self.base().eval(hi).is_zero() as usize;
        self.count_half_open(lo, hi) - at_hi
    }
}

/// A power of two strictly larger than every root's absolute value.
pub(crate) fn root_bound(p: &UniPoly) -> Rational {
    let lead = p.leading().expect("nonzero").abs();
    let max_ratio = p
        .coeffs()
        .iter()
        .rev()
        .skip(1)
        .map(|c| c.abs() / &lead)
        .fold(rat(0), |a, b| if b > a { b } else { a });
    let cauchy = max_ratio + rat(1);
    let mut bound = rat(1);
    while bound <= cauchy {
        bound *= rat(2);
    }
    bound
}

fn sign(v: &Rational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_negative() {
        -1
    } else {
        1
    }
}

/// Isolates every distinct real root of `p` into an interval of width at most
/// `tol` and labels it with its multiplicity.
pub fn sturm_real_roots(p: &UniPoly, tol: &Rational) -> Result<Vec<RealRoot>> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::domain("real roots of a zero or constant polynomial"));
    }
    if !tol.is_positive() {
        return Err(Error::domain("root tolerance must be positive"));
    }
    let (_, factors) = yun(p);
    let square_free = factors.iter().fold(p.one_like(), |acc, (f, _)| acc.mul(f));
    let chain = SturmChain::new(&square_free);
    let sf = chain.base().clone();

    let bound = root_bound(&sf);
    let lo = -bound.clone();
    let mut stack = vec![(lo.clone(), bound.clone(), chain.count_open(&lo, &bound))];
    let mut intervals: Vec<(Rational, Rational)> = Vec::new();
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => {}
            1 => intervals.push(refine(&chain, lo, hi, tol)),
            _ => {
                let mid = (&lo + &hi) / rat(2);
                if sf.eval(&mid).is_zero() {
                    intervals.push((mid.clone(), mid.clone()));
                }
                let left = chain.count_open(&lo, &mid);
                let right = chain.count_open(&mid, &hi);
                stack.push((lo, mid.clone(), left));
                stack.push((mid, hi, right));
            }
        }
    }
    intervals.sort_by(|a, b| a.0.cmp(&b.0));

    intervals
        .into_iter()
        .map(|(lower, upper)| {
            let multiplicity = factors
                .iter()
                .find(|(f, _)| {
                    if lower == upper {
                        f.eval(&lower).is_zero()
                    } else {
                        sign(&f.eval(&lower)) * sign(&f.eval(&upper)) < 0
                    }
                })
                .map(|(_, m)| *m)
                .ok_or_else(|| Error::InternalFault("root matches no square-free factor".into()))?;
            let value = ((&lower + &upper) / rat(2)).to_f64().unwrap_or(f64::NAN);
            Ok(RealRoot {
                lower,
                upper,
                value,
                multiplicity,
            })
        })
        .collect()
}

/// Shrinks `(lo, hi)`, known to hold exactly one root, until it is at most
/// `tol` wide and neither endpoint is a root.
fn refine(
    chain: &SturmChain,
    mut lo: Rational,
    mut hi: Rational,
    tol: &Rational,
) -> (Rational, Rational) {
    let sf = chain.base();
    loop {
        let slo = sign(&sf.eval(&lo));
        let shi = sign(&sf.eval(&hi));
        if &(&hi - &lo) <= tol && slo != 0 && shi != 0 {
            return (lo, hi);
        }
        let mid = (&lo + &hi) / rat(2);
        let smid = sign(&sf.eval(&mid));
        if smid == 0 {
            return (mid.clone(), mid);
        }
        let in_left = if slo != 0 {
            slo != smid
        } else {
            chain.count_open(&lo, &mid) == 1
        };
        if in_left {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Number of distinct real roots of `p`.
pub fn count_real_roots(p: &UniPoly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = SturmChain::new(&crate::poly::gcd::square_free_part_main(p));
    let b = root_bound(chain.base());
    chain.count_open(&-b.clone(), &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::benzene_discriminant_golden;
    use crate::ring::ratio;

    fn tol() -> Rational {
        ratio(1, 1_000_000_000_000)
    }

    fn x(c: &[i64]) -> UniPoly {
        UniPoly::from_ints("x", c)
    }

    #[test]
    fn discriminant_roots() {
        let roots = sturm_real_roots(&benzene_discriminant_golden(), &tol()).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!((roots[0].value, roots[0].multiplicity), (-1.0, 2));
        assert_eq!((roots[1].value, roots[1].multiplicity), (0.0, 4));
        assert!(roots.iter().all(RealRoot::is_exact));
    }

    #[test]
    fn sqrt_two() {
        let roots = sturm_real_roots(&x(&[-2, 0, 1]), &tol()).unwrap();
        assert_eq!(roots.len(), 2);
        let s = std::f64::consts::SQRT_2;
        assert!((roots[0].value + s).abs() < 1e-12);
        assert!((roots[1].value - s).abs() < 1e-12);
        for r in &roots {
            assert!(r.width() <= tol());
            assert!(x(&[-2, 0, 1]).eval(&r.lower) * x(&[-2, 0, 1]).eval(&r.upper) < rat(0));
        }
    }

    #[test]
    fn no_real_roots() {
        assert!(sturm_real_roots(&x(&[1, 0, 1]), &tol()).unwrap().is_empty());
        assert_eq!(count_real_roots(&x(&[1, 0, 1])), 0);
    }

    #[test]
    fn constant_and_zero_are_rejected() {
        assert!(sturm_real_roots(&x(&[3]), &tol()).is_err());
        assert!(sturm_real_roots(&x(&[]), &tol()).is_err());
        assert!(sturm_real_roots(&x(&[0, 1]), &rat(0)).is_err());
    }

    #[test]
    fn clustered_roots_are_separated() {
        // roots 1/1000 and 2/1000 and a triple root at 3
        let p = UniPoly::from_roots(
            "x",
            &[ratio(1, 1000), ratio(2, 1000), rat(3), rat(3), rat(3)],
        );
        let roots = sturm_real_roots(&p, &tol()).unwrap();
        let got: Vec<_> = roots.iter().map(|r| (r.value, r.multiplicity)).collect();
        assert_eq!(got.len(), 3);
        assert!((got[0].0 - 0.001).abs() < 1e-12 && got[0].1 == 1);
        assert!((got[1].0 - 0.002).abs() < 1e-12 && got[1].1 == 1);
        assert!((got[2].0 - 3.0).abs() < 1e-12 && got[2].1 == 3);
    }

    #[test]
    fn neighbouring_exact_root_at_endpoint() {
        // roots 0 and 1/3: bisection hits 0 exactly and must still isolate 1/3
        let p = x(&[0, -1, 3]);
        let roots = sturm_real_roots(&p, &tol()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].is_exact());
        assert!((roots[1].value - 1.0 / 3.0).abs() < 1e-12);
        assert!(!roots[1].lower.is_zero());
    }
}
