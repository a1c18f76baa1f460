use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use paraspec::elimination::{discriminant_with, ResultantRegistry};
use paraspec::fixtures::{benzene, BENZENE_HUCKEL};
use paraspec::matrix::ENERGY;
use paraspec::spectra::{classify_crossings, sweep, CrossingOptions, CrossingReport, RealRoot};
use paraspec::symmetry::{symmetry_report, SymmetryReport};
use paraspec::{ParametricMatrix, Ring, UniPoly, Var};
use sha2::{Digest, Sha256};

use crate::document::{load_matrix, DocumentError, MatrixDocument};
use crate::report::{
    AnalysisReport, DegeneracyJson, Float, Input, OptionsJson, SweepJson, SymmetryJson,
};
use crate::svg::emit_svg;
use crate::table::{emit_csv, emit_text};

pub const BUILTINS: &[&str] = &[BENZENE_HUCKEL];

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write output: {0}")]
    Write(std::io::Error),
    #[error(transparent)]
    Core(#[from] paraspec::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use paraspec::Error as E;
        match self {
            CliError::Usage(_) => 1,
            CliError::Document(_) | CliError::Read { .. } => 2,
            CliError::Core(E::Validation(_) | E::Domain(_) | E::VariableMismatch { .. }) => 2,
            CliError::Core(E::NonConvergence { .. }) => 3,
            CliError::Core(E::Capability(_)) => 4,
            CliError::Core(E::InternalFault(_)) | CliError::Write(_) => 5,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "paraspec",
    version,
    about = "Exact spectra of parameter-dependent symmetric matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Debug, Clone, Copy, PartialEq, Subcommand)]
enum Command {
    /// Characteristic polynomial det(E*I - H)
    Charpoly,
    /// Discriminants before and after square-free reduction
    Disc,
    /// Level crossings and exceptional points
    Crossings,
    /// Signed or unsigned permutation symmetries
    Symmetry,
    /// Eigenvalues on a uniform parameter grid
    Sweep,
    /// Everything except the sweep
    Report,
    /// SVG plot of the sweep
    Plot,
}

#[derive(Debug, Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
struct Global {
    /// Matrix document (JSON)
    #[arg(long, global = true, value_name = "FILE", conflicts_with = "builtin")]
    input: Option<PathBuf>,
    /// Built-in matrix
    #[arg(long, global = true, value_name = "NAME")]
    builtin: Option<String>,
    /// Width of the isolating interval of a real discriminant root
    #[arg(long, global = true, default_value_t = 1e-12)]
    lambda_tol: f64,
    /// Eigenvalues closer than this count as meeting
    #[arg(long, global = true, default_value_t = 1e-8)]
    gap_tol: f64,
    /// Sweep range
    #[arg(
        long,
        global = true,
        value_name = "A:B",
        default_value = "-2:2",
        allow_hyphen_values = true
    )]
    range: String,
    /// Number of sweep points, ends included
    #[arg(long, global = true, default_value_t = 401)]
    steps: usize,
    /// Allow sign changes in the symmetry search
    #[arg(long, global = true)]
    signed_symmetries: bool,
    /// Write to FILE instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Resultant algorithm
    #[arg(long, global = true, default_value = ResultantRegistry::<UniPoly>::DEFAULT)]
    resultant: String,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn positive(name: &str, v: f64) -> Result<f64, CliError> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(usage(format!(
            "--{name} must be a positive number, got {v}"
        )))
    }
}

fn parse_range(s: &str) -> Result<(f64, f64), CliError> {
    let bad = || usage(format!("--range expects A:B with A < B, got {s:?}"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    if a.is_finite() && b.is_finite() && a < b {
        Ok((a, b))
    } else {
        Err(bad())
    }
}

fn format_for(command: Command, requested: Option<Format>) -> Result<Option<Format>, CliError> {
    let (default, allowed): (Option<Format>, &[Format]) = match command {
        Command::Sweep => (
            Some(Format::Csv),
            &[Format::Csv, Format::Json, Format::Text],
        ),
        Command::Plot => (None, &[]),
        _ => (Some(Format::Json), &[Format::Json, Format::Text]),
    };
    match requested {
        None => Ok(default),
        Some(f) if allowed.contains(&f) => Ok(Some(f)),
        Some(f) => Err(usage(format!(
            "--format {} is not available for this subcommand",
            f.to_possible_value()
                .expect("no skipped variants")
                .get_name()
        ))),
    }
}

fn load(g: &Global) -> Result<(ParametricMatrix, Input), CliError> {
    let (h, source) = match (&g.input, &g.builtin) {
        (Some(path), None) => {
            let bytes = std::fs::read(path).map_err(|source| CliError::Read {
                path: path.clone(),
                source,
            })?;
            (load_matrix(&bytes)?, "document".to_owned())
        }
        (None, Some(name)) if name == BENZENE_HUCKEL => (benzene(), format!("builtin:{name}")),
        (None, Some(name)) => {
            return Err(usage(format!(
                "unknown builtin {name:?}; available: {}",
                BUILTINS.join(", ")
            )))
        }
        _ => return Err(usage("one of --input or --builtin is required")),
    };
    let canonical = MatrixDocument::from_matrix(&h).to_json();
    let input = Input {
        source,
        n: h.n(),
        parameter: h.param().name().to_owned(),
        sha256: hex::encode(Sha256::digest(canonical.as_bytes())),
    };
    Ok((h, input))
}

struct Job {
    command: Command,
    format: Option<Format>,
    options: CrossingOptions,
    range: (f64, f64),
    steps: usize,
    signed: bool,
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("paraspec: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let g = &cli.global;
    let job = Job {
        command: cli.command,
        format: format_for(cli.command, g.format)?,
        options: CrossingOptions {
            lambda_tol: positive("lambda-tol", g.lambda_tol)?,
            gap_tol: positive("gap-tol", g.gap_tol)?,
            resultant: g.resultant.clone(),
            ..CrossingOptions::default()
        },
        range: parse_range(&g.range)?,
        steps: if g.steps >= 2 {
            g.steps
        } else {
            return Err(usage("--steps must be at least 2"));
        },
        signed: g.signed_symmetries,
    };
    ResultantRegistry::<UniPoly>::with_builtins()
        .get(&job.options.resultant)
        .map_err(|e| usage(e.to_string()))?;
    let (h, input) = load(g)?;
    let out = produce(&job, &h, input)?;
    match &g.output {
        Some(path) => std::fs::write(path, out).map_err(CliError::Write),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(CliError::Write)
        }
    }
}

fn options_json(o: &CrossingOptions) -> OptionsJson {
    OptionsJson {
        lambda_tol: Float(o.lambda_tol),
        gap_tol: Float(o.gap_tol),
        resultant: o.resultant.clone(),
    }
}

fn produce(job: &Job, h: &ParametricMatrix, input: Input) -> Result<String, CliError> {
    let param = h.param().name().to_owned();
    let json = job.format == Some(Format::Json);
    let mut report = AnalysisReport::new(input);
    let text = match job.command {
        Command::Charpoly => {
            let p = h.char_poly();
            report.char_poly = Some((&p).into());
            format!("{p}\n")
        }
        Command::Disc => {
            let strategy = ResultantRegistry::with_builtins().get(&job.options.resultant)?;
            let e = Var::new(ENERGY);
            let p = h.char_poly();
            let before = discriminant_with(&*strategy, &p, &e)?;
            let q = h.reduced_char_poly();
            let after = discriminant_with(&*strategy, &q, &e)?;
            let degeneracy = h.degeneracy_profile();
            report.char_poly = Some((&p).into());
            report.disc_before_reduction_zero = Some(before.is_zero());
            report.discriminant_before_reduction = Some((&before).into());
            report.degeneracy = Some(DegeneracyJson::from(&degeneracy));
            report.reduced_poly = Some((&q).into());
            report.discriminant = Some((&after).into());
            report.options = Some(options_json(&job.options));
            let mut t = String::new();
            let _ = writeln!(t, "char poly: {p}");
            let _ = writeln!(t, "discriminant: {before}");
            let _ = writeln!(t, "identically zero: {}", before.is_zero());
            let _ = writeln!(
                t,
                "persistent degeneracy: {}",
                degeneracy.persistent_degeneracy
            );
            let _ = writeln!(t, "reduced: {q}");
            let _ = writeln!(t, "reduced discriminant: {after}");
            t
        }
        Command::Crossings => {
            let r = classify_crossings(h, &job.options)?;
            let t = crossings_text(&r, &param);
            report = report.with_crossings(&r);
            report.options = Some(options_json(&job.options));
            t
        }
        Command::Symmetry => {
            let s = symmetry_report(h, job.signed)?;
            report.symmetry = Some(SymmetryJson::from(&s));
            symmetry_text(&s)
        }
        Command::Report => {
            let r = classify_crossings(h, &job.options)?;
            let s = symmetry_report(h, job.signed)?;
            let t = format!("{}{}", crossings_text(&r, &param), symmetry_text(&s));
            report = report.with_crossings(&r);
            report.symmetry = Some(SymmetryJson::from(&s));
            report.options = Some(options_json(&job.options));
            t
        }
        Command::Sweep | Command::Plot => {
            let table = sweep(h, job.range.0, job.range.1, job.steps)?;
            return Ok(match job.format {
                None => emit_svg(&table, &param)?,
                Some(Format::Csv) => emit_csv(&table, &param),
                Some(Format::Text) => emit_text(&table, &param),
                Some(Format::Json) => {
                    report.sweep = Some(SweepJson::from(&table));
                    report.to_json()
                }
            });
        }
    };
    Ok(if json { report.to_json() } else { text })
}

fn root_text(r: &RealRoot, param: &str) -> String {
    if r.is_exact() {
        format!("{param} = {}", r.lower)
    } else {
        format!("{param} ~ {:.16e} in [{}, {}]", r.value, r.lower, r.upper)
    }
}

fn crossings_text(r: &CrossingReport, param: &str) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "char poly: {}", r.char_poly);
    let _ = writeln!(
        t,
        "discriminant identically zero: {}",
        r.identically_zero_before_reduction
    );
    let _ = writeln!(t, "reduced: {}", r.reduced_char_poly);
    let _ = writeln!(t, "discriminant: {}", r.discriminant);
    for c in &r.crossings {
        let levels: Vec<String> = c
            .levels
            .iter()
            .map(|l| format!("E = {:.12} {:?}", l.energy, l.indices))
            .collect();
        let _ = writeln!(
            t,
            "crossing: {}; {}",
            root_text(&c.lambda, param),
            levels.join("; ")
        );
    }
    for u in &r.unconfirmed {
        let _ = writeln!(t, "avoided crossing: {}", root_text(u, param));
    }
    for ep in &r.exceptional_points {
        let z = ep.root.value;
        let _ = writeln!(
            t,
            "exceptional point: {param} = {:.12} {:+.12}i, |{param}| = {:.12}",
            z.re, z.im, ep.modulus
        );
    }
    match r.convergence_radius {
        Some(rho) => {
            let _ = writeln!(t, "convergence radius: {rho:.12}");
        }
        None => {
            let _ = writeln!(t, "convergence radius: unbounded");
        }
    }
    t
}

fn symmetry_text(s: &SymmetryReport) -> String {
    let mut t = String::new();
    let kind = if s.signed { "signed" } else { "unsigned" };
    let _ = writeln!(
        t,
        "{kind} symmetry group: order {}, abelian {}",
        s.order, s.abelian
    );
    for u in &s.group.elements {
        let _ = writeln!(t, "  {u:?}");
    }
    let _ = writeln!(t, "{}", s.note);
    t
}
