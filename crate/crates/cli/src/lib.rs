//! `atinf` command line: JSON reports for single polynomials, deformation
//! checks, Euler characteristics, the defect table and fixture corpora.

pub mod corpus;

use std::path::PathBuf;

use atinf_core::analysis::{analyze, Analysis, AnalysisOptions};
use atinf_core::betti::{classify_defect, euler_sum, BoundaryCandidate, StratificationData, Verdict};
use atinf_core::deform::{
    dimension_drop_check, semicontinuity_check, Comparison, DeformationKind, DeformationSpec,
    SemicontinuityReport, DEFAULT_EPSILONS,
};
use atinf_core::{Error, Poly};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

pub const SCHEMA: &str = "atinf-report/1";
pub const MAX_VARS: usize = 8;
pub const MAX_DEGREE: u32 = 12;

#[derive(Parser, Debug)]
#[command(name = "atinf", version, about = "Singularities at infinity and top Betti defects")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Singular loci, Milnor sums and the top Betti defect of a polynomial.
    Analyze(PolyArgs),
    /// Dimension-drop and semi-continuity checks for a deformation.
    Deform {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_parser = parse_kind)]
        kind: DeformationKind,
        /// Linear form (linear, power) or degree-d form (general).
        #[arg(long)]
        with: Option<String>,
    },
    /// Euler characteristic of a stratified projective hypersurface.
    Euler {
        #[arg(long)]
        strata: PathBuf,
    },
    /// Boundary types compatible with a given defect.
    Table {
        #[arg(long, allow_negative_numbers = true)]
        delta: i64,
    },
    /// Run every fixture in a directory and compare against expectations.
    Corpus { dir: PathBuf },
}

#[derive(Args, Debug, Clone)]
pub struct PolyArgs {
    #[arg(long)]
    pub poly: String,
    /// Comma-separated variable names.
    #[arg(long, value_delimiter = ',', required = true)]
    pub vars: Vec<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 2)]
    pub t_samples: usize,
    /// Assume the general fibre has homology only in the top degree.
    #[arg(long)]
    pub assume_concentrated: bool,
    /// Euler characteristic of {f_d = 0}.
    #[arg(long, allow_negative_numbers = true)]
    pub chi_fd: Option<i64>,
    /// Declare the tangencies at infinity a reduced line of Morse type.
    #[arg(long)]
    pub line_at_infinity: bool,
    /// Lift the variable and degree limits.
    #[arg(long = "unsafe")]
    pub allow_unsafe: bool,
}

fn parse_kind(s: &str) -> Result<DeformationKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    VerdictFailed,
    Gated,
    InputError,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::VerdictFailed => 1,
            Status::Gated => 2,
            Status::InputError => 3,
        }
    }

    fn of_analysis(a: &Analysis) -> Status {
        if !a.report.all_verdicts_pass() {
            Status::VerdictFailed
        } else if a.report.delta.is_none() {
            Status::Gated
        } else {
            Status::Pass
        }
    }
}

/// Exit status of a core error: bad input versus a computation that could
/// not be completed.
pub fn error_status(e: &Error) -> Status {
    match e {
        Error::Syntax { .. }
        | Error::UnknownVariable(_)
        | Error::VariableMismatch { .. }
        | Error::TooManyVariables(_)
        | Error::NotLinear(_)
        | Error::NonHomogeneous(_)
        | Error::DegreeDrop { .. }
        | Error::InconsistentStrata(_)
        | Error::OutsideTable(_)
        | Error::InvalidInput(_) => Status::InputError,
        _ => Status::Gated,
    }
}

pub struct Output {
    pub status: Status,
    pub json: String,
    pub stderr: Option<String>,
}

impl Output {
    fn new(status: Status, body: &impl Serialize) -> Self {
        let json = serde_json::to_string_pretty(body).expect("report serializes");
        Output { status, json, stderr: None }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: &'static str,
    command: &'a str,
    status: Status,
    #[serde(flatten)]
    body: T,
}

fn envelope<T: Serialize>(command: &str, status: Status, body: T) -> Output {
    Output::new(status, &Envelope { schema: SCHEMA, command, status, body })
}

#[derive(Serialize)]
struct Failure {
    error: String,
}

fn failure(command: &str, status: Status, error: impl ToString) -> Output {
    let error = error.to_string();
    let mut out = envelope(command, status, Failure { error: error.clone() });
    out.stderr = Some(format!("atinf {command}: {error}\n"));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Settings {
    pub seed: u64,
    pub t_samples: usize,
    pub assume_concentrated: bool,
    pub line_at_infinity: bool,
    pub chi_fd: Option<i64>,
}

impl Settings {
    pub fn options(&self) -> AnalysisOptions {
        AnalysisOptions {
            seed: self.seed,
            t_samples: self.t_samples,
            assume_concentrated: self.assume_concentrated,
            line_at_infinity: self.line_at_infinity,
            chi_fd: self.chi_fd,
        }
    }
}

/// Parses the polynomial and enforces the size limits.
pub fn load_poly(text: &str, vars: &[String], allow_unsafe: bool) -> Result<Poly, String> {
    if vars.is_empty() {
        return Err("no variables given".into());
    }
    if vars.len() > MAX_VARS && !allow_unsafe {
        return Err(format!("{} variables exceed the limit of {MAX_VARS}; pass --unsafe", vars.len()));
    }
    let f = Poly::parse(text, vars).map_err(|e| e.to_string())?;
    match f.degree().finite() {
        Some(d) if d > MAX_DEGREE && !allow_unsafe => {
            Err(format!("degree {d} exceeds the limit of {MAX_DEGREE}; pass --unsafe"))
        }
        Some(d) if d >= 1 => Ok(f),
        _ => Err(format!("`{text}` has no positive degree")),
    }
}

fn settings(args: &PolyArgs) -> Result<Settings, String> {
    if args.t_samples < 2 {
        return Err(format!("--t-samples must be at least 2, got {}", args.t_samples));
    }
    Ok(Settings {
        seed: args.seed,
        t_samples: args.t_samples,
        assume_concentrated: args.assume_concentrated,
        line_at_infinity: args.line_at_infinity,
        chi_fd: args.chi_fd,
    })
}

pub fn run(command: &Command) -> Output {
    match command {
        Command::Analyze(args) => run_analyze(args),
        Command::Deform { poly, kind, with } => run_deform(poly, *kind, with.as_deref()),
        Command::Euler { strata } => run_euler(strata),
        Command::Table { delta } => run_table(*delta),
        Command::Corpus { dir } => corpus::run_corpus(dir),
    }
}

#[derive(Serialize)]
struct AnalyzeBody<'a> {
    settings: &'a Settings,
    #[serde(flatten)]
    analysis: &'a Analysis,
}

fn run_analyze(args: &PolyArgs) -> Output {
    let prepared = settings(args).and_then(|s| Ok((load_poly(&args.poly, &args.vars, args.allow_unsafe)?, s)));
    let (f, s) = match prepared {
        Ok(x) => x,
        Err(e) => return failure("analyze", Status::InputError, e),
    };
    match analyze(&f, &s.options()) {
        Ok(a) => envelope("analyze", Status::of_analysis(&a), AnalyzeBody { settings: &s, analysis: &a }),
        Err(e) => failure("analyze", error_status(&e), e),
    }
}

#[derive(Serialize)]
struct DeformBody {
    poly: String,
    settings: Settings,
    kind: DeformationKind,
    with: String,
    epsilons: Vec<String>,
    verdicts: Vec<Verdict>,
    semicontinuity: SemicontinuityReport,
}

fn run_deform(args: &PolyArgs, kind: DeformationKind, with: Option<&str>) -> Output {
    let prepared = settings(args).and_then(|s| Ok((load_poly(&args.poly, &args.vars, args.allow_unsafe)?, s)));
    let (f, s) = match prepared {
        Ok(x) => x,
        Err(e) => return failure("deform", Status::InputError, e),
    };
    let spec = match with {
        Some(text) => Poly::parse(text, &args.vars)
            .and_then(|h| DeformationSpec::with_form(kind, h, s.seed, DEFAULT_EPSILONS)),
        None => DeformationSpec::sampled(&f, kind, s.seed, DEFAULT_EPSILONS),
    };
    let spec = match spec {
        Ok(spec) => spec,
        Err(e) => return failure("deform", error_status(&e), e),
    };
    let result = (|| {
        let mut verdicts = match kind {
            DeformationKind::General => vec![],
            _ => dimension_drop_check(&f, &spec)?,
        };
        let semi = semicontinuity_check(&f, &spec, &s.options())?;
        verdicts.push(semi.verdict());
        Ok::<_, Error>((verdicts, semi))
    })();
    let (verdicts, semi) = match result {
        Ok(x) => x,
        Err(e) => return failure("deform", error_status(&e), e),
    };
    let status = if verdicts.iter().any(|v| !v.pass) {
        Status::VerdictFailed
    } else if semi.comparison == Comparison::Incomparable {
        Status::Gated
    } else {
        Status::Pass
    };
    let body = DeformBody {
        poly: f.to_string(),
        settings: s,
        kind,
        with: spec.with.to_string(),
        epsilons: spec.epsilons.iter().map(|e| e.to_string()).collect(),
        verdicts,
        semicontinuity: semi,
    };
    envelope("deform", status, body)
}

#[derive(Serialize)]
struct EulerBody {
    strata: StratificationData,
    chi: i64,
}

fn run_euler(path: &std::path::Path) -> Output {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return failure("euler", Status::InputError, format!("{}: {e}", path.display())),
    };
    let strata: StratificationData = match serde_json::from_str(&text) {
        Ok(s) => s,
        Err(e) => return failure("euler", Status::InputError, format!("{}: {e}", path.display())),
    };
    match euler_sum(&strata) {
        Ok(chi) => envelope("euler", Status::Pass, EulerBody { strata, chi }),
        Err(e) => failure("euler", error_status(&e), e),
    }
}

#[derive(Serialize)]
struct TableBody {
    delta: i64,
    rows: Vec<BoundaryCandidate>,
}

fn run_table(delta: i64) -> Output {
    match classify_defect(delta) {
        Ok(rows) => envelope("table", Status::Pass, TableBody { delta, rows }),
        Err(e) => failure("table", error_status(&e), e),
    }
}
