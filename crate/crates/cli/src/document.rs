//! The JSON matrix document.
//!
//! ```json
//! {"n": 2, "parameter": "lambda",
//!  "entries": [{"i": 1, "j": 2, "coeffs": ["0", "1/2"]}]}
//! ```
//!
//! Indices are 1-based, coefficients run from the constant term up, and
//! only one triangle needs to be given.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use paraspec::matrix::ENERGY;
use paraspec::{ParametricMatrix, Rational, UniPoly};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid document: {0}")]
    Invalid(String),
}

fn default_parameter() -> String {
    "lambda".to_owned()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub n: usize,
    #[serde(default = "default_parameter")]
    pub parameter: String,
    #[serde(default)]
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    #[serde(serialize_with = "write_coeffs", deserialize_with = "read_coeffs")]
    pub coeffs: Vec<Rational>,
}

fn write_coeffs<S: Serializer>(coeffs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(coeffs.len()))?;
    for c in coeffs {
        seq.serialize_element(&c.to_string())?;
    }
    seq.end()
}

struct Coeff(Rational);

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct CoeffVisitor;

        impl Visitor<'_> for CoeffVisitor {
            type Value = Coeff;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a rational string such as \"-3/4\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Coeff, E> {
                Ok(Coeff(Rational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Coeff, E> {
                Ok(Coeff(Rational::from_integer(v.into())))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Coeff, E> {
                Err(E::custom(format!(
                    "coefficient {v} is a float; write rationals as strings such as \"1/2\""
                )))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Coeff, E> {
                parse_rational(v).map(Coeff).map_err(E::custom)
            }
        }

        d.deserialize_any(CoeffVisitor)
    }
}

fn read_coeffs<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
    let raw: Vec<Coeff> = Vec::deserialize(d)?;
    Ok(raw.into_iter().map(|c| c.0).collect())
}

/// Parses `"p"` or `"p/q"` with a nonzero `q`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    let ok = !t.is_empty()
        && t.split('/').count() <= 2
        && t.split('/').all(|part| {
            let digits = part.strip_prefix('-').unwrap_or(part);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        });
    if !ok {
        return Err(format!("bad rational {s:?}"));
    }
    Rational::from_str(t).map_err(|_| format!("bad rational {s:?} (zero denominator)"))
}

fn invalid(msg: impl Into<String>) -> DocumentError {
    DocumentError::Invalid(msg.into())
}

impl MatrixDocument {
    /// Checks sizes, indices and duplicates. Symmetry conflicts are found
    /// by [`MatrixDocument::to_matrix`].
    pub fn validate(&self) -> Result<(), DocumentError> {
        if self.n == 0 {
            return Err(invalid("n must be at least 1"));
        }
        let p = self.parameter.as_str();
        let identifier = p
            .chars()
            .next()
            .is_some_and(|c| c.is_alphabetic() || c == '_')
            && p.chars().all(|c| c.is_alphanumeric() || c == '_');
        if !identifier {
            return Err(invalid(format!(
                "parameter name {p:?} is not an identifier"
            )));
        }
        if p == ENERGY {
            return Err(invalid(format!(
                "parameter name {ENERGY:?} is reserved for the energy"
            )));
        }
        let mut seen = BTreeSet::new();
        for e in &self.entries {
            if !(1..=self.n).contains(&e.i) || !(1..=self.n).contains(&e.j) {
                return Err(invalid(format!(
                    "entry ({}, {}) is outside a {n}x{n} matrix",
                    e.i,
                    e.j,
                    n = self.n
                )));
            }
            if !seen.insert((e.i, e.j)) {
                return Err(invalid(format!("duplicate entry ({}, {})", e.i, e.j)));
            }
        }
        Ok(())
    }

    pub fn to_matrix(&self) -> Result<ParametricMatrix, DocumentError> {
        self.validate()?;
        let entries = self.entries.iter().map(|e| {
            (
                (e.i - 1, e.j - 1),
                UniPoly::new(self.parameter.as_str(), e.coeffs.clone()),
            )
        });
        ParametricMatrix::build(self.n, self.parameter.as_str(), entries)
            .map_err(|e| invalid(e.to_string()))
    }

    /// Nonzero upper-triangle entries in row-major order.
    pub fn from_matrix(h: &ParametricMatrix) -> Self {
        let n = h.n();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i..n {
                let c = h.get(i, j).coeffs();
                if !c.is_empty() {
                    entries.push(Entry {
                        i: i + 1,
                        j: j + 1,
                        coeffs: c.to_vec(),
                    });
                }
            }
        }
        MatrixDocument {
            n,
            parameter: h.param().name().to_owned(),
            entries,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }
}

pub fn parse_document(bytes: &[u8]) -> Result<MatrixDocument, DocumentError> {
    let doc: MatrixDocument = serde_json::from_slice(bytes)?;
    doc.validate()?;
    Ok(doc)
}

/// Reads a document and builds its matrix.
pub fn load_matrix(bytes: &[u8]) -> Result<ParametricMatrix, DocumentError> {
    parse_document(bytes)?.to_matrix()
}
