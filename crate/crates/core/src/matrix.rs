//! Symmetric matrices whose entries are polynomials in one parameter.

use std::fmt;

use num_traits::ToPrimitive;

use crate::elimination::{determinant_bareiss, Matrix};
use crate::error::{Error, Result};
use crate::poly::gcd::{square_free_part_main, yun};
use crate::poly::{BiPoly, Poly, UniPoly, Var};
use crate::ring::{rat, Rational, Ring};

/// Outer variable of characteristic polynomials.
pub const ENERGY: &str = "E";

/// `H(lambda)`: an `n x n` real symmetric matrix with entries in `Q[lambda]`.
#[derive(Clone, PartialEq)]
pub struct ParametricMatrix {
    n: usize,
    param: Var,
    entries: Vec<UniPoly>,
}

impl ParametricMatrix {
    /// Builds a symmetric matrix from `((i, j), entry)` pairs (0-based).
    ///
    /// Unspecified entries are zero and every entry is mirrored; an `(i, j)`
    /// and a `(j, i)` (or a repeated `(i, j)`) with different values is a
    /// validation error naming both coordinates.
    pub fn build(
        n: usize,
        param: impl Into<Var>,
        entries: impl IntoIterator<Item = ((usize, usize), UniPoly)>,
    ) -> Result<Self> {
        let param = param.into();
        // value plus the coordinate it was given at
        let mut cells: Vec<Option<(UniPoly, (usize, usize))>> = vec![None; n * n];
        for ((i, j), value) in entries {
            if i >= n || j >= n {
                return Err(Error::Validation(format!(
                    "entry ({}, {}) is outside a {n}x{n} matrix",
                    i + 1,
                    j + 1
                )));
            }
            if !value.is_constant_in_var() && value.var() != &param {
                return Err(Error::Validation(format!(
                    "entry ({}, {}) is a polynomial in `{}`, expected `{}`",
                    i + 1,
                    j + 1,
                    value.var(),
                    param
                )));
            }
            let value = value.with_var(param.clone());
            for (a, b) in [(i, j), (j, i)] {
                match &cells[a * n + b] {
                    Some((existing, (ei, ej))) if existing != &value => {
                        return Err(Error::Validation(format!(
                            "entries ({}, {}) = {} and ({}, {}) = {} break symmetry",
                            ei + 1,
                            ej + 1,
                            existing,
                            i + 1,
                            j + 1,
                            value
                        )));
                    }
                    _ => cells[a * n + b] = Some((value.clone(), (i, j))),
                }
            }
        }
        let entries = cells
            .into_iter()
            .map(|c| c.map_or_else(|| UniPoly::zero(param.clone()), |(v, _)| v))
            .collect();
        Ok(ParametricMatrix { n, param, entries })
    }

    pub fn zero(n: usize, param: impl Into<Var>) -> Self {
        Self::build(n, param, std::iter::empty()).unwrap()
    }

    /// Diagonal matrix.
    pub fn diagonal(param: impl Into<Var>, diag: Vec<UniPoly>) -> Result<Self> {
        let n = diag.len();
        Self::build(
            n,
            param,
            diag.into_iter().enumerate().map(|(i, d)| ((i, i), d)),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn param(&self) -> &Var {
        &self.param
    }

    pub fn get(&self, i: usize, j: usize) -> &UniPoly {
        &self.entries[i * self.n + j]
    }

    /// Highest power of the parameter in any entry (`None` for the zero matrix).
    pub fn param_degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    /// `H_k` with `H(lambda) = sum_k lambda^k H_k`.
    pub fn coefficient_matrices(&self) -> Vec<Matrix<Rational>> {
        let Some(deg) = self.param_degree() else {
            return vec![Matrix::from_fn(self.n, self.n, |_, _| rat(0))];
        };
        (0..=deg)
            .map(|k| Matrix::from_fn(self.n, self.n, |i, j| self.get(i, j).coeff(k)))
            .collect()
    }

    /// The same matrix with the parameter frozen at `value` (entries become
    /// constants).
    pub fn freeze(&self, value: &Rational) -> Self {
        ParametricMatrix {
            n: self.n,
            param: self.param.clone(),
            entries: self
                .entries
                .iter()
                .map(|p| UniPoly::constant(self.param.clone(), p.eval(value)))
                .collect(),
        }
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.param != other.param {
            return Err(Error::VariableMismatch {
                left: self.param.name().to_owned(),
                right: other.param.name().to_owned(),
            });
        }
        let n = self.n + other.n;
        let mut cells = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                cells.push(((i, j), self.get(i, j).clone()));
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                cells.push(((self.n + i, self.n + j), other.get(i, j).clone()));
            }
        }
        Self::build(n, self.param.clone(), cells)
    }

    /// `p(E, lambda) = (-1)^n det(H - E I)`, monic in `E`.
    pub fn char_poly(&self) -> BiPoly {
        let e = Var::new(ENERGY);
        let lifted = Matrix::from_fn(self.n, self.n, |i, j| {
            let h = BiPoly::from_inner(e.clone(), self.get(i, j).clone());
            if i == j {
                let energy =
                    BiPoly::monomial(e.clone(), UniPoly::constant(self.param.clone(), rat(1)), 1);
                h.sub(&energy)
            } else {
                h
            }
        });
        let det = determinant_bareiss(&lifted).expect("square by construction");
        let det = if self.n % 2 == 1 { det.neg() } else { det };
        if self.n == 0 {
            BiPoly::constant(e, UniPoly::constant(self.param.clone(), rat(1)))
        } else {
            det
        }
    }

    /// Square-free part of the characteristic polynomial in `E`.
    pub fn reduced_char_poly(&self) -> BiPoly {
        square_free_part_main(&self.char_poly())
    }

    pub fn degeneracy_profile(&self) -> DegeneracyProfile {
        let (_, factors) = yun(&self.char_poly());
        let branches = factors
            .into_iter()
            .map(|(factor, multiplicity)| Branch {
                energy_degree: factor.degree().unwrap_or(0),
                factor,
                multiplicity,
            })
            .collect::<Vec<_>>();
        let persistent_degeneracy = branches.iter().any(|b| b.multiplicity >= 2);
        DegeneracyProfile {
            branches,
            persistent_degeneracy,
        }
    }

    /// Exact evaluation at `value`, rounded to doubles.
    pub fn eval_at(&self, value: &Rational) -> RealMatrix {
        let data = self
            .entries
            .iter()
            .map(|p| p.eval(value).to_f64().unwrap_or(f64::NAN))
            .collect();
        RealMatrix { n: self.n, data }
    }

    /// Evaluation at a double, using the exact rational value of `value`.
    pub fn eval_at_f64(&self, value: f64) -> Result<RealMatrix> {
        let exact = Rational::from_float(value)
            .ok_or_else(|| Error::domain(format!("cannot evaluate at non-finite {value}")))?;
        Ok(self.eval_at(&exact))
    }
}

impl fmt::Debug for ParametricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        f.debug_struct("ParametricMatrix")
            .field("param", &self.param)
            .field("rows", &rows)
            .finish()
    }
}

/// One group of eigenvalue branches sharing a multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct Branch {
    /// Square-free factor of the characteristic polynomial.
    pub factor: BiPoly,
    pub multiplicity: usize,
    /// Number of branches (degree of `factor` in `E`).
    pub energy_degree: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegeneracyProfile {
    pub branches: Vec<Branch>,
    /// Some branch is repeated for every parameter value.
    pub persistent_degeneracy: bool,
}

/// Dense real square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix {
    n: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::domain("matrix must be square"));
        }
        Ok(RealMatrix {
            n,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data
            .chunks(self.n.max(1))
            .map(<[f64]>::to_vec)
            .collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{benzene, benzene_char_poly_golden, benzene_reduced_golden, lam};

    fn block() -> ParametricMatrix {
        ParametricMatrix::build(2, "lambda", [((0, 1), lam(&[1]))]).unwrap()
    }

    #[test]
    fn benzene_entries() {
        let h = benzene();
        assert_eq!(h.get(0, 1), &lam(&[1]));
        assert_eq!(h.get(1, 2), &lam(&[0, 1]));
        assert_eq!(h.get(5, 0), &lam(&[0, 1]));
        assert!(h.get(0, 2).is_zero());
    }

    #[test]
    fn conflicting_mirror_entries_are_rejected() {
        let err = ParametricMatrix::build(3, "lambda", [((0, 1), lam(&[1])), ((1, 0), lam(&[2]))])
            .unwrap_err();
        let Error::Validation(msg) = err else {
            panic!()
        };
        assert!(msg.contains("(1, 2)") && msg.contains("(2, 1)"), "{msg}");
        assert!(ParametricMatrix::build(2, "lambda", [((0, 2), lam(&[1]))]).is_err());
        assert!(
            ParametricMatrix::build(2, "lambda", [((0, 1), lam(&[1])), ((1, 0), lam(&[1]))])
                .is_ok()
        );
    }

    #[test]
    fn empty_map_gives_zero_matrix() {
        let z = ParametricMatrix::build(3, "lambda", []).unwrap();
        assert!((0..3).all(|i| (0..3).all(|j| z.get(i, j).is_zero())));
    }

    #[test]
    fn char_polys() {
        assert_eq!(benzene().char_poly(), benzene_char_poly_golden());
        let e = |c: &[i64]| BiPoly::new(ENERGY, c.iter().map(|&v| lam(&[v])).collect());
        assert_eq!(block().char_poly(), e(&[-1, 0, 1]));
        assert_eq!(
            ParametricMatrix::zero(3, "lambda").char_poly(),
            e(&[0, 0, 0, 1])
        );
    }

    #[test]
    fn reduced_char_polys() {
        assert_eq!(benzene().reduced_char_poly(), benzene_reduced_golden());
        assert_eq!(block().reduced_char_poly(), block().char_poly());
        let d = ParametricMatrix::diagonal("lambda", vec![lam(&[0, 1]), lam(&[0, 1])]).unwrap();
        assert_eq!(
            d.reduced_char_poly(),
            BiPoly::new(ENERGY, vec![lam(&[0, -1]), lam(&[1])])
        );
    }

    #[test]
    fn degeneracy_profiles() {
        let p = benzene().degeneracy_profile();
        assert!(p.persistent_degeneracy);
        assert_eq!(
            p.branches
                .iter()
                .map(|b| (b.multiplicity, b.energy_degree))
                .collect::<Vec<_>>(),
            vec![(1, 2), (2, 2)]
        );
        assert_eq!(
            p.branches[1].factor,
            BiPoly::new(ENERGY, vec![lam(&[-1, 1, -1]), lam(&[]), lam(&[1])])
        );

        let p = block().degeneracy_profile();
        assert!(!p.persistent_degeneracy);
        assert_eq!(p.branches.len(), 1);

        let d = ParametricMatrix::diagonal("lambda", vec![lam(&[0, 1]); 3]).unwrap();
        let p = d.degeneracy_profile();
        assert!(p.persistent_degeneracy);
        assert_eq!(p.branches.len(), 1);
        assert_eq!(p.branches[0].multiplicity, 3);
        assert_eq!(
            p.branches[0].factor,
            BiPoly::new(ENERGY, vec![lam(&[0, -1]), lam(&[1])])
        );
    }

    #[test]
    fn direct_sum_char_poly_factorizes() {
        let d = ParametricMatrix::diagonal("lambda", vec![lam(&[1, 2])]).unwrap();
        let s = benzene().direct_sum(&d).unwrap();
        assert_eq!(s.char_poly(), benzene().char_poly().mul(&d.char_poly()));
    }

    #[test]
    fn evaluation_at_zero_is_block_diagonal() {
        let m = benzene().eval_at(&rat(0));
        for i in 0..6 {
            for j in 0..6 {
                let expected = if i / 2 == j / 2 && i != j { 1.0 } else { 0.0 };
                assert_eq!(m.get(i, j), expected, "({i}, {j})");
            }
        }
    }

    #[test]
    fn evaluation_at_one_is_hexagon_adjacency() {
        let m = benzene().eval_at(&rat(1));
        for i in 0..6 {
            for j in 0..6 {
                let adjacent = (i + 1) % 6 == j || (j + 1) % 6 == i;
                assert_eq!(m.get(i, j), if adjacent { 1.0 } else { 0.0 });
            }
        }
        let z = ParametricMatrix::zero(4, "lambda")
            .eval_at_f64(0.3)
            .unwrap();
        assert!(z.rows().iter().flatten().all(|&v| v == 0.0));
    }

    #[test]
    fn coefficient_matrices_recompose() {
        let h = benzene();
        let ks = h.coefficient_matrices();
        assert_eq!(ks.len(), 2);
        assert_eq!(ks[1].get(1, 2), &rat(1));
        assert_eq!(ks[0].get(0, 1), &rat(1));
        assert_eq!(ks[0].get(1, 2), &rat(0));
    }
}
