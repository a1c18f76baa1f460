//! Exact characteristic polynomials, resultants and discriminants of
//! parameter-dependent real symmetric matrices, with level-crossing and
//! exceptional-point classification and permutation-symmetry detection.
//!
//! The usual entry point is [`spectra::classify_crossings`] on a
//! [`ParametricMatrix`].

pub mod elimination;
pub mod error;
pub mod fixtures;
pub mod matrix;
pub mod poly;
pub mod ring;
pub mod spectra;
pub mod symmetry;

pub use error::{Error, Result};
pub use matrix::{DegeneracyProfile, ParametricMatrix, RealMatrix};
pub use poly::{BiPoly, Poly, UniPoly, Var};
pub use ring::{GcdDomain, Rational, Ring};
