//! Command-line front end for `plabic-seed`.
//!
//! [`execute`] is the whole program; `main` only wires it to the process.
//! Exit codes: 0 success, 2 invalid input, 3 empty variety, 4 internal
//! invariant violation.

pub mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use plabic_seed::autgroup::{survey, SurveyConfig, UFilter};
use plabic_seed::braid::parse_word;
use plabic_seed::exchange::inductive::inductive_build_diagram;
use plabic_seed::exchange::mutate_sequence;
use plabic_seed::par::with_jobs;
use plabic_seed::variety::{defining_equations, DEFAULT_MAX_TERMS};
use plabic_seed::{analyze, Analysis, AnalysisReport, BraidWord, Error, Execution, Permutation};

use render::{Format, Target};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_EMPTY: u8 = 3;
pub const EXIT_INTERNAL: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "plabic-seed", version, about = "Seed data of braid varieties from 3D plabic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute H, D, B̂, A and the torus action for one instance.
    Analyze(AnalyzeArgs),
    /// Enumerate instances and tabulate the sign of A as CSV.
    Survey(SurveyArgs),
    /// Draw the plabic graph or the quiver.
    Render(RenderArgs),
    /// Print the defining equations of the braid variety.
    Variety(VarietyArgs),
    /// Apply a mutation sequence to the matrices of a stored report.
    Mutate(MutateArgs),
}

#[derive(Debug, Args)]
#[group(id = "perm", required = true, multiple = true, args = ["u", "u_oneline"])]
struct Instance {
    /// Number of strands.
    #[arg(long)]
    n: usize,
    /// Braid word as space-separated letters in 1..n-1.
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    /// The permutation u as a word in simple reflections.
    #[arg(long)]
    u: Option<String>,
    /// The permutation u in one-line notation.
    #[arg(long = "u-oneline")]
    u_oneline: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Pretty,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    instance: Instance,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    out: ReportFormat,
    /// Run every internal validation and exit 4 if one fails.
    #[arg(long)]
    check: bool,
    /// Also build B̂ and A column by column and require agreement.
    #[arg(long)]
    inductive: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
}

#[derive(Debug, Args)]
struct SurveyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    min_len: usize,
    #[arg(long)]
    max_len: usize,
    /// `all`, or a word in simple reflections.
    #[arg(long, default_value = "all")]
    u: String,
    /// Worker cap.
    #[arg(long)]
    jobs: Option<usize>,
    /// Stop after examining this many (β, u) pairs.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    out: TableFormat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Svg,
    Dot,
    Tikz,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TargetArg {
    Plabic,
    Quiver,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[command(flatten)]
    instance: Instance,
    #[arg(long, value_enum)]
    format: FormatArg,
    #[arg(long, value_enum, default_value_t = TargetArg::Plabic)]
    target: TargetArg,
    /// Shade the film of this vertex.
    #[arg(long)]
    film: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EquationFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct VarietyArgs {
    #[command(flatten)]
    instance: Instance,
    #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
    max_terms: usize,
    #[arg(long, value_enum, default_value_t = EquationFormat::Text)]
    out: EquationFormat,
}

#[derive(Debug, Args)]
struct MutateArgs {
    /// JSON report written by `analyze`.
    #[arg(long)]
    report: std::path::PathBuf,
    /// Mutable vertices, applied left to right.
    #[arg(long, allow_hyphen_values = true)]
    seq: String,
}

enum Failure {
    Engine(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::EmptyVariety => EXIT_EMPTY,
        e if e.is_internal() => EXIT_INTERNAL,
        _ => EXIT_INVALID,
    }
}

/// Parses `argv` (program name first), runs the subcommand and returns the exit code.
pub fn execute<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze(args) => run_analyze(args, out, err),
        Command::Survey(args) => run_survey(args, out),
        Command::Render(args) => run_render(args, out),
        Command::Variety(args) => run_variety(args, out),
        Command::Mutate(args) => run_mutate(args, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Engine(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
    }
}

impl Instance {
    fn resolve(&self) -> Result<(Permutation, BraidWord), Error> {
        let beta = parse_word(&self.beta, self.n)?;
        let from_word = self.u.as_deref().map(|w| Permutation::parse_word(w, self.n)).transpose()?;
        let from_line = self.u_oneline.as_deref().map(Permutation::parse_one_line).transpose()?;
        let u = match (from_word, from_line) {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::Invalid(format!(
                    "--u gives {:?} but --u-oneline gives {:?}",
                    a.images(),
                    b.images()
                )))
            }
            (Some(a), _) => a,
            (None, Some(b)) => b,
            (None, None) => return Err(Error::Invalid("one of --u, --u-oneline is required".into())),
        };
        if u.n() != self.n {
            return Err(Error::StrandMismatch { perm: u.n(), word: self.n });
        }
        Ok((u, beta))
    }

    fn analyze(&self) -> Result<Analysis, Error> {
        let (u, beta) = self.resolve()?;
        analyze(&u, &beta)
    }
}

fn run_analyze(args: AnalyzeArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, Failure> {
    let an = args.instance.analyze()?;
    if args.inductive {
        let build = inductive_build_diagram(&an.diagram)?;
        if build.bhat != *an.bhat() || build.a != an.a || build.vertex_order != an.films.vertex_order() {
            return Err(Error::Invariant("direct and inductive routes disagree".into()).into());
        }
    }
    let report = AnalysisReport::from_analysis(&an);
    match args.out {
        ReportFormat::Json => writeln!(out, "{}", report.to_json())?,
        ReportFormat::Pretty => write!(out, "{}", report.pretty())?,
    }
    if !args.check {
        return Ok(EXIT_OK);
    }
    let mut code = EXIT_OK;
    for item in an.check() {
        let status = if item.passed { "ok" } else { "FAILED" };
        if item.detail.is_empty() || item.passed {
            writeln!(err, "check {status}: {}", item.name)?;
        } else {
            writeln!(err, "check {status}: {} ({})", item.name, item.detail)?;
        }
        if !item.passed {
            code = EXIT_INTERNAL;
        }
    }
    Ok(code)
}

fn run_survey(args: SurveyArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let TableFormat::Csv = args.out;
    let u = match args.u.trim() {
        "all" => UFilter::All,
        word => UFilter::Fixed(Permutation::parse_word(word, args.n)?),
    };
    let execution = if args.jobs == Some(1) { Execution::Sequential } else { Execution::default() };
    let config = SurveyConfig { u, budget: args.budget, execution, ..SurveyConfig::new(args.n, args.min_len, args.max_len) };
    let table = with_jobs(args.jobs, || survey(&config))?;
    out.write_all(table.to_csv()?.as_bytes())?;
    Ok(EXIT_OK)
}

fn run_render(args: RenderArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let an = args.instance.analyze()?;
    let format = match args.format {
        FormatArg::Svg => Format::Svg,
        FormatArg::Dot => Format::Dot,
        FormatArg::Tikz => Format::Tikz,
    };
    let target = match args.target {
        TargetArg::Plabic => Target::Plabic,
        TargetArg::Quiver => Target::Quiver,
    };
    out.write_all(render::render(&an, format, target, args.film)?.as_bytes())?;
    Ok(EXIT_OK)
}

fn run_variety(args: VarietyArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let (u, beta) = args.instance.resolve()?;
    let eqs = defining_equations(&u, &beta, args.max_terms)?;
    match args.out {
        EquationFormat::Text => write!(out, "{}", eqs.to_text())?,
        EquationFormat::Json => {
            let text = serde_json::to_string_pretty(&eqs).map_err(|e| Failure::Io(e.to_string()))?;
            writeln!(out, "{text}")?;
        }
    }
    Ok(EXIT_OK)
}

fn run_mutate(args: MutateArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let text = std::fs::read_to_string(&args.report)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", args.report.display())))?;
    let report = AnalysisReport::from_json(&text).map_err(|e| Failure::Io(format!("malformed report: {e}")))?;
    let size = report.m + report.f;
    if report.bhat.rows() != size || report.bhat.cols() != size || report.d.rows() != size {
        return Err(Error::Invalid("report matrices do not match m + f".into()).into());
    }
    let seq = parse_word_list(&args.seq)?;
    let bhat = mutate_sequence(&report.bhat, &seq, report.m)?;
    let h = &bhat.to_half() - &report.d;
    let value = serde_json::json!({
        "seq": seq,
        "m": report.m,
        "f": report.f,
        "Bhat": bhat,
        "Btilde": bhat.top_rows(report.m),
        "H": h,
    });
    let text = serde_json::to_string_pretty(&value).map_err(|e| Failure::Io(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(EXIT_OK)
}

fn parse_word_list(text: &str) -> Result<Vec<usize>, Error> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::BadToken(t.to_string())))
        .collect()
}
