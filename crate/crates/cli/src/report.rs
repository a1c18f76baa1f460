//! JSON report sections.
//!
//! Every float is written in scientific notation with 17 significant
//! digits so that it parses back to the same `f64`. Non-finite values
//! become `null`.

use paraspec::matrix::DegeneracyProfile;
use paraspec::spectra::{CrossingReport, RealRoot, SweepTable};
use paraspec::symmetry::SymmetryReport;
use paraspec::{BiPoly, UniPoly};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_NAME: &str = "paraspec";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Float(pub f64);

impl Serialize for Float {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw =
            RawValue::from_string(format!("{:.16e}", self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

#[derive(Debug, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Debug, Serialize)]
pub struct Input {
    /// `builtin:<name>` or `document`.
    pub source: String,
    pub n: usize,
    pub parameter: String,
    /// SHA-256 of the canonical document.
    pub sha256: String,
}

/// Fields shared by every JSON output; sections are filled per subcommand.
#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub tool: Tool,
    pub input: Input,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_poly: Option<BivariateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disc_before_reduction_zero: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discriminant_before_reduction: Option<UnivariateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degeneracy: Option<DegeneracyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced_poly: Option<BivariateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discriminant: Option<UnivariateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crossings: Option<Vec<CrossingJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unconfirmed: Option<Vec<RootJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exceptional_points: Option<Vec<ExceptionalPointJson>>,
    /// `Some(None)` is written as `null`: no non-real discriminant roots.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convergence_radius: Option<Option<Float>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetry: Option<SymmetryJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub options: Option<OptionsJson>,
}

impl AnalysisReport {
    pub fn new(input: Input) -> Self {
        AnalysisReport {
            schema_version: SCHEMA_VERSION,
            tool: Tool {
                name: TOOL_NAME,
                version: TOOL_VERSION,
            },
            input,
            char_poly: None,
            disc_before_reduction_zero: None,
            discriminant_before_reduction: None,
            degeneracy: None,
            reduced_poly: None,
            discriminant: None,
            crossings: None,
            unconfirmed: None,
            exceptional_points: None,
            convergence_radius: None,
            symmetry: None,
            sweep: None,
            options: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn with_crossings(mut self, r: &CrossingReport) -> Self {
        self.char_poly = Some(BivariateJson::from(&r.char_poly));
        self.disc_before_reduction_zero = Some(r.identically_zero_before_reduction);
        self.discriminant_before_reduction =
            Some(UnivariateJson::from(&r.discriminant_before_reduction));
        self.degeneracy = Some(DegeneracyJson::from(&r.degeneracy));
        self.reduced_poly = Some(BivariateJson::from(&r.reduced_char_poly));
        self.discriminant = Some(UnivariateJson::from(&r.discriminant));
        self.crossings = Some(r.crossings.iter().map(CrossingJson::from).collect());
        self.unconfirmed = Some(r.unconfirmed.iter().map(RootJson::from).collect());
        self.exceptional_points = Some(
            r.exceptional_points
                .iter()
                .map(|ep| ExceptionalPointJson {
                    re: Float(ep.root.value.re),
                    im: Float(ep.root.value.im),
                    modulus: Float(ep.modulus),
                    multiplicity: ep.root.multiplicity,
                    residual: Float(ep.root.residual),
                })
                .collect(),
        );
        self.convergence_radius = Some(r.convergence_radius.map(Float));
        self
    }
}

fn rationals(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

#[derive(Debug, Serialize)]
pub struct UnivariateJson {
    pub variable: String,
    pub text: String,
    /// Constant term first.
    pub coefficients: Vec<String>,
}

impl From<&UniPoly> for UnivariateJson {
    fn from(p: &UniPoly) -> Self {
        UnivariateJson {
            variable: p.var().name().to_owned(),
            text: p.to_string(),
            coefficients: rationals(p),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BivariateJson {
    pub variable: String,
    pub parameter: Option<String>,
    pub text: String,
    /// `coefficients[k][m]` multiplies `E^k * parameter^m`.
    pub coefficients: Vec<Vec<String>>,
}

impl From<&BiPoly> for BivariateJson {
    fn from(p: &BiPoly) -> Self {
        BivariateJson {
            variable: p.var().name().to_owned(),
            parameter: p.inner_var().map(|v| v.name().to_owned()),
            text: p.to_string(),
            coefficients: p.coeffs().iter().map(rationals).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BranchJson {
    pub factor: BivariateJson,
    pub multiplicity: usize,
    pub energy_degree: usize,
}

#[derive(Debug, Serialize)]
pub struct DegeneracyJson {
    pub persistent: bool,
    pub branches: Vec<BranchJson>,
}

impl From<&DegeneracyProfile> for DegeneracyJson {
    fn from(d: &DegeneracyProfile) -> Self {
        DegeneracyJson {
            persistent: d.persistent_degeneracy,
            branches: d
                .branches
                .iter()
                .map(|b| BranchJson {
                    factor: BivariateJson::from(&b.factor),
                    multiplicity: b.multiplicity,
                    energy_degree: b.energy_degree,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RootJson {
    pub value: Float,
    /// Exact isolating interval; both ends equal for a rational root.
    pub interval: [String; 2],
    pub exact: bool,
    pub multiplicity: usize,
}

impl From<&RealRoot> for RootJson {
    fn from(r: &RealRoot) -> Self {
        RootJson {
            value: Float(r.value),
            interval: [r.lower.to_string(), r.upper.to_string()],
            exact: r.is_exact(),
            multiplicity: r.multiplicity,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LevelJson {
    pub energy: Float,
    /// 1-based positions in the ascending spectrum.
    pub indices: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct CrossingJson {
    pub lambda: RootJson,
    pub levels: Vec<LevelJson>,
    pub pairs: Vec<[usize; 2]>,
}

impl From<&paraspec::spectra::Crossing> for CrossingJson {
    fn from(c: &paraspec::spectra::Crossing) -> Self {
        CrossingJson {
            lambda: RootJson::from(&c.lambda),
            levels: c
                .levels
                .iter()
                .map(|l| LevelJson {
                    energy: Float(l.energy),
                    indices: l.indices.clone(),
                })
                .collect(),
            pairs: c.pairs.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ExceptionalPointJson {
    pub re: Float,
    pub im: Float,
    pub modulus: Float,
    pub multiplicity: usize,
    pub residual: Float,
}

#[derive(Debug, Serialize)]
pub struct ElementJson {
    /// 1-based image of each index.
    pub images: Vec<usize>,
    pub signs: Vec<i8>,
    pub order: usize,
}

#[derive(Debug, Serialize)]
pub struct SymmetryJson {
    pub order: usize,
    pub abelian: bool,
    pub signed: bool,
    pub degeneracy_expected: bool,
    pub degeneracy_observed: bool,
    pub consistent: bool,
    pub note: String,
    pub elements: Vec<ElementJson>,
}

impl From<&SymmetryReport> for SymmetryJson {
    fn from(r: &SymmetryReport) -> Self {
        SymmetryJson {
            order: r.order,
            abelian: r.abelian,
            signed: r.signed,
            degeneracy_expected: r.degeneracy_expected,
            degeneracy_observed: r.degeneracy_observed,
            consistent: r.consistent,
            note: r.note.clone(),
            elements: r
                .group
                .elements
                .iter()
                .map(|u| ElementJson {
                    images: u.images().iter().map(|k| k + 1).collect(),
                    signs: u.signs().to_vec(),
                    order: u.order(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SweepJson {
    pub lambdas: Vec<Float>,
    /// One ascending row per lambda.
    pub eigenvalues: Vec<Vec<Float>>,
}

impl From<&SweepTable> for SweepJson {
    fn from(t: &SweepTable) -> Self {
        SweepJson {
            lambdas: t.lambdas.iter().copied().map(Float).collect(),
            eigenvalues: t
                .eigenvalues
                .iter()
                .map(|row| row.iter().copied().map(Float).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OptionsJson {
    pub lambda_tol: Float,
    pub gap_tol: Float,
    pub resultant: String,
}
