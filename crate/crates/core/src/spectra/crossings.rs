//! The discriminant pipeline: pathology detection, square-free cure, and
//! classification of the discriminant's roots.

use num_complex::Complex64;
use num_rational::BigRational;

use crate::elimination::{discriminant_main, ResultantRegistry};
use crate::error::{Error, Result};
use crate::matrix::{DegeneracyProfile, ParametricMatrix};
use crate::poly::{BiPoly, UniPoly};
use crate::ring::{Rational, Ring};
use crate::spectra::aberth::{complex_roots, ComplexRoot};
use crate::spectra::jacobi::{jacobi_eigenvalues, DEFAULT_TOL};
use crate::spectra::sturm::{sturm_real_roots, RealRoot};

#[derive(Debug, Clone)]
pub struct CrossingOptions {
    /// Width of the isolating interval of each real discriminant root.
    pub lambda_tol: f64,
    /// Eigenvalues closer than this are considered to meet.
    pub gap_tol: f64,
    /// Convergence tolerance of the complex root finder.
    pub root_tol: f64,
    /// Name of the resultant strategy used for the discriminants.
    pub resultant: String,
}

impl Default for CrossingOptions {
    fn default() -> Self {
        CrossingOptions {
            lambda_tol: 1e-12,
            gap_tol: 1e-8,
            root_tol: 1e-15,
            resultant: ResultantRegistry::<UniPoly>::DEFAULT.to_owned(),
        }
    }
}

/// Eigenvalues (1-based ascending indices) that coincide at a crossing.
#[derive(Debug, Clone, PartialEq)]
pub struct MeetingLevels {
    pub energy: f64,
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Crossing {
    pub lambda: RealRoot,
    /// 1-based index pairs of eigenvalues closer than `gap_tol`.
    pub pairs: Vec<(usize, usize)>,
    pub levels: Vec<MeetingLevels>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExceptionalPoint {
    pub root: ComplexRoot,
    pub modulus: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossingReport {
    pub char_poly: BiPoly,
    /// `Disc_E` of the full characteristic polynomial.
    pub discriminant_before_reduction: UniPoly,
    pub identically_zero_before_reduction: bool,
    pub reduced_char_poly: BiPoly,
    /// `Disc_E` of the square-free characteristic polynomial.
    pub discriminant: UniPoly,
    /// Sorted by `lambda`.
    pub crossings: Vec<Crossing>,
    /// Real discriminant roots where no extra eigenvalue meeting was seen.
    pub unconfirmed: Vec<RealRoot>,
    pub exceptional_points: Vec<ExceptionalPoint>,
    /// Smallest modulus of a non-real discriminant root.
    pub convergence_radius: Option<f64>,
    pub degeneracy: DegeneracyProfile,
}

fn to_rational(v: f64, what: &str) -> Result<Rational> {
    if !(v.is_finite() && v > 0.0) {
        return Err(Error::domain(format!(
            "{what} must be a positive finite number"
        )));
    }
    BigRational::from_float(v).ok_or_else(|| Error::domain(format!("invalid {what}")))
}

/// Groups consecutive eigenvalues whose gaps are below `gap_tol`.
pub fn meeting_levels(eigenvalues: &[f64], gap_tol: f64) -> Vec<MeetingLevels> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..eigenvalues.len() {
        match groups.last_mut() {
            Some(g) if (eigenvalues[i] - eigenvalues[*g.last().unwrap()]).abs() < gap_tol => {
                g.push(i)
            }
            _ => groups.push(vec![i]),
        }
    }
    groups
        .into_iter()
        .filter(|g| g.len() >= 2)
        .map(|g| MeetingLevels {
            energy: g.iter().map(|&i| eigenvalues[i]).sum::<f64>() / g.len() as f64,
            indices: g.into_iter().map(|i| i + 1).collect(),
        })
        .collect()
}

/// Runs the full pipeline on `h`.
pub fn classify_crossings(h: &ParametricMatrix, opts: &CrossingOptions) -> Result<CrossingReport> {
    if h.n() == 0 {
        return Err(Error::domain("empty matrix has no spectrum"));
    }
    let registry = ResultantRegistry::<UniPoly>::with_builtins();
    let strategy = registry.get(&opts.resultant)?;
    let lambda_tol = to_rational(opts.lambda_tol, "lambda tolerance")?;
    if !(opts.gap_tol.is_finite() && opts.gap_tol > 0.0) {
        return Err(Error::domain(
            "gap tolerance must be a positive finite number",
        ));
    }

    let p = h.char_poly();
    let param = h.param().clone();
    let disc_p = discriminant_main(strategy.as_ref(), &p)?.with_var(param.clone());
    let q = crate::poly::gcd::square_free_part_main(&p);
    let disc_q = discriminant_main(strategy.as_ref(), &q)?.with_var(param);
    if disc_q.is_zero() {
        return Err(Error::InternalFault(
            "discriminant vanishes after square-free reduction".into(),
        ));
    }
    let branches = q.degree().unwrap_or(0);

    let mut crossings = Vec::new();
    let mut unconfirmed = Vec::new();
    let mut exceptional_points = Vec::new();
    if disc_q.degree().unwrap_or(0) > 0 {
        for root in sturm_real_roots(&disc_q, &lambda_tol)? {
            let eig = jacobi_eigenvalues(&h.eval_at(&root.midpoint()), DEFAULT_TOL)?;
            let levels = meeting_levels(&eig, opts.gap_tol);
            let distinct = eig.len() - levels.iter().map(|l| l.indices.len() - 1).sum::<usize>();
            if distinct < branches {
                let pairs = levels
                    .iter()
                    .flat_map(|l| {
                        l.indices.iter().enumerate().flat_map(move |(a, &i)| {
                            l.indices[a + 1..].iter().map(move |&j| (i, j))
                        })
                    })
                    .collect();
                crossings.push(Crossing {
                    lambda: root,
                    pairs,
                    levels,
                });
            } else {
                unconfirmed.push(root);
            }
        }
        for root in complex_roots(&disc_q, opts.root_tol)? {
            if root.value.im != 0.0 {
                let modulus = Complex64::norm(root.value);
                exceptional_points.push(ExceptionalPoint { root, modulus });
            }
        }
    }
    let convergence_radius = exceptional_points
        .iter()
        .map(|e| e.modulus)
        .min_by(f64::total_cmp);

    Ok(CrossingReport {
        identically_zero_before_reduction: disc_p.is_zero(),
        discriminant_before_reduction: disc_p,
        char_poly: p,
        reduced_char_poly: q,
        discriminant: disc_q,
        crossings,
        unconfirmed,
        exceptional_points,
        convergence_radius,
        degeneracy: h.degeneracy_profile(),
    })
}
