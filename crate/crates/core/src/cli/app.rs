use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::analysis::{conjugate_translate, decompose, identify};
use crate::bisymmetry::{
    check_randomized, check_symbolic, classify, construct_class_iii, integrality_report,
    verify_witness, ClassIIISpec, ClassLabel, RandomizedConfig, SymbolicConfig, Verdict,
    DEFAULT_BOUND, DEFAULT_SEED, DEFAULT_TERM_CEILING, DEFAULT_TRIALS,
};
use crate::cli::report::OutputReport;
use crate::cli::{format, parse};
use crate::error::Error;
use crate::polyring::{MultiIndex, Polynomial};
use crate::rational::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_DISAGREEMENT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "medial", version, about = "Decide and classify bisymmetric polynomial functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide bisymmetry of a polynomial
    Check(CheckArgs),
    /// Shorthand for `check --method classify`
    Classify(CheckArgs),
    /// Expand a(x1+b)^α1 ⋯ (xn+b)^αn − b
    Construct(ConstructArgs),
    /// Homogeneous components of a polynomial
    Components(PolyArgs),
    /// Conjugate by the translation x ↦ x + b
    Conjugate(ConjugateArgs),
    /// Identify variables xi and xj (1-based, i < j)
    Identify(IdentifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Classify,
    Symbolic,
    Randomized,
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Classify => "classify",
            Method::Symbolic => "symbolic",
            Method::Randomized => "randomized",
            Method::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Ring {
    #[value(name = "Z", alias = "z")]
    Z,
    #[value(name = "Q", alias = "q")]
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    output: OutputFormat,
    /// Report elapsed_ms as 0 so output is byte-for-byte reproducible
    #[arg(long)]
    no_timing: bool,
}

#[derive(Debug, Args)]
struct PolyArgs {
    #[arg(long)]
    arity: usize,
    /// Polynomial expression, e.g. "3*x1*x2 - x1^2 + 1/2"
    #[arg(allow_hyphen_values = true)]
    expr: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long)]
    arity: usize,
    #[arg(long, value_enum, default_value = "classify")]
    method: Method,
    #[arg(long, default_value_t = DEFAULT_TRIALS, value_parser = clap::value_parser!(u32).range(1..))]
    trials: u32,
    #[arg(long, default_value_t = DEFAULT_BOUND, value_parser = clap::value_parser!(u64).range(1..))]
    bound: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value = "Q")]
    ring: Ring,
    #[arg(long, default_value_t = DEFAULT_TERM_CEILING)]
    term_ceiling: u128,
    /// Polynomial expression, e.g. "3*x1*x2 - x1^2 + 1/2"
    #[arg(allow_hyphen_values = true)]
    expr: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: Rational,
    #[arg(long, allow_hyphen_values = true)]
    b: Rational,
    /// Comma-separated exponents, e.g. 1,1,1
    #[arg(long, value_delimiter = ',', required = true)]
    alpha: Vec<u32>,
    #[arg(long, value_enum, default_value = "Q")]
    ring: Ring,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct ConjugateArgs {
    #[arg(long, allow_hyphen_values = true)]
    b: Rational,
    #[command(flatten)]
    poly: PolyArgs,
}

#[derive(Debug, Args)]
struct IdentifyArgs {
    #[arg(long)]
    i: usize,
    #[arg(long)]
    j: usize,
    #[command(flatten)]
    poly: PolyArgs,
}

enum Failure {
    Usage(String),
    Resource(String),
    Disagreement(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceExceeded { .. } => Failure::Resource(e.to_string()),
            Error::Unclassifiable => Failure::Other(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn parse_poly(expr: &str, arity: usize) -> Result<Polynomial, Failure> {
    parse(expr, arity).map_err(|e| Failure::Usage(e.to_string()))
}

fn elapsed(start: Instant, out: &OutputArgs) -> u64 {
    if out.no_timing {
        0
    } else {
        start.elapsed().as_millis() as u64
    }
}

fn describe_verdict(v: &Verdict) -> String {
    match v {
        Verdict::Bisymmetric(ClassLabel::Univariate { index, body }) => {
            format!("bisymmetric: univariate in x{} (body {})", index + 1, format(body))
        }
        Verdict::Bisymmetric(ClassLabel::Affine { coefficients }) => {
            let cs: Vec<String> = coefficients.iter().map(Rational::to_string).collect();
            format!("bisymmetric: affine, coefficients [{}]", cs.join(", "))
        }
        Verdict::Bisymmetric(ClassLabel::ShiftedMonomial(spec)) => format!(
            "bisymmetric: shifted monomial a={} b={} alpha={:?}",
            spec.a(),
            spec.b(),
            spec.alpha().exponents()
        ),
        Verdict::NotBisymmetric(w) => {
            let rows: Vec<String> = w
                .matrix
                .iter()
                .map(|r| {
                    let cells: Vec<String> = r.iter().map(Rational::to_string).collect();
                    format!("[{}]", cells.join(", "))
                })
                .collect();
            format!(
                "not bisymmetric: witness [{}] gives {} (rows) vs {} (columns)",
                rows.join(", "),
                w.lhs,
                w.rhs
            )
        }
    }
}

fn run_check(args: &CheckArgs, method: Method, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let start = Instant::now();
    let p = parse_poly(&args.expr, args.arity)?;
    let sym_cfg = SymbolicConfig {
        term_ceiling: args.term_ceiling,
    };
    let rand_cfg = RandomizedConfig {
        trials: args.trials,
        bound: args.bound,
        seed: args.seed,
    };
    let (verdict, seed) = match method {
        Method::Classify => (classify(&p)?, None),
        Method::Symbolic => (check_symbolic(&p, &sym_cfg)?, None),
        Method::Randomized => (check_randomized(&p, &rand_cfg)?, Some(args.seed)),
        Method::All => {
            let by_classify = classify(&p)?;
            let by_symbolic = check_symbolic(&p, &sym_cfg)?;
            let by_random = check_randomized(&p, &rand_cfg)?;
            let bits = [
                by_classify.is_bisymmetric(),
                by_symbolic.is_bisymmetric(),
                by_random.is_bisymmetric(),
            ];
            if bits.iter().any(|&b| b != bits[0]) {
                return Err(Failure::Disagreement(format!(
                    "checkers disagree: classify={} symbolic={} randomized={}",
                    bits[0], bits[1], bits[2]
                )));
            }
            if by_classify.label() != by_symbolic.label() || by_classify.label() != by_random.label() {
                return Err(Failure::Disagreement("checkers report different classes".into()));
            }
            (by_classify, Some(args.seed))
        }
    };
    if let Some(w) = verdict.witness() {
        if !verify_witness(&p, w) {
            return Err(Failure::Other("witness failed re-verification".into()));
        }
    }
    if let (Ring::Z, Some(ClassLabel::ShiftedMonomial(spec))) = (args.ring, verdict.label()) {
        if !spec.b().is_integer() {
            writeln!(
                err,
                "warning: shift b = {} is not an integer; the polynomial is bisymmetric over Z as the restriction of a rational one",
                spec.b()
            )
            .ok();
        }
    }
    let report = OutputReport::new(&verdict, method.name(), seed, elapsed(start, &args.out));
    match args.out.output {
        OutputFormat::Structured => writeln!(out, "{}", report.to_json()),
        OutputFormat::Text => writeln!(out, "{}", describe_verdict(&verdict)),
    }
    .ok();
    Ok(())
}

fn run_construct(args: &ConstructArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let start = Instant::now();
    let spec = ClassIIISpec::new(args.a.clone(), args.b.clone(), MultiIndex::new(args.alpha.clone()))?;
    let poly = construct_class_iii(&spec);
    let integrality = match args.ring {
        Ring::Q => None,
        Ring::Z => Some(integrality_report(&spec)?),
    };
    match args.out.output {
        OutputFormat::Structured => {
            let doc = json!({
                "polynomial": format(&poly),
                "a": spec.a().to_string(),
                "b": spec.b().to_string(),
                "alpha": spec.alpha().exponents(),
                "ring": if args.ring == Ring::Z { "Z" } else { "Q" },
                "integrality": integrality.as_ref().map(|r| r.integral),
                "integrality_values": integrality
                    .as_ref()
                    .map(|r| r.values.iter().map(Rational::to_string).collect::<Vec<_>>()),
                "elapsed_ms": elapsed(start, &args.out),
            });
            writeln!(out, "{doc}").ok();
        }
        OutputFormat::Text => {
            writeln!(out, "{}", format(&poly)).ok();
            if let Some(r) = integrality {
                writeln!(out, "integrality: {}", r.integral).ok();
            }
        }
    }
    Ok(())
}

fn run_components(args: &PolyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let p = parse_poly(&args.expr, args.arity)?;
    let d = decompose(&p);
    match args.out.output {
        OutputFormat::Structured => {
            let comps: Vec<_> = d
                .components()
                .iter()
                .rev()
                .map(|(k, c)| json!({ "degree": k, "polynomial": format(c) }))
                .collect();
            writeln!(out, "{}", json!({ "arity": args.arity, "components": comps })).ok();
        }
        OutputFormat::Text => {
            for (k, c) in d.components().iter().rev() {
                writeln!(out, "[{k}] {}", format(c)).ok();
            }
        }
    }
    Ok(())
}

fn emit_polynomial(p: &Polynomial, args: &OutputArgs, out: &mut dyn Write) {
    match args.output {
        OutputFormat::Structured => {
            writeln!(out, "{}", json!({ "arity": p.arity(), "polynomial": format(p) })).ok();
        }
        OutputFormat::Text => {
            writeln!(out, "{}", format(p)).ok();
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Check(args) => run_check(&args, args.method, out, err),
        Command::Classify(args) => run_check(&args, Method::Classify, out, err),
        Command::Construct(args) => run_construct(&args, out),
        Command::Components(args) => run_components(&args, out),
        Command::Conjugate(args) => {
            let p = parse_poly(&args.poly.expr, args.poly.arity)?;
            emit_polynomial(&conjugate_translate(&p, &args.b), &args.poly.out, out);
            Ok(())
        }
        Command::Identify(args) => {
            let p = parse_poly(&args.poly.expr, args.poly.arity)?;
            if args.i == 0 || args.j == 0 {
                return Err(Failure::Usage("variable positions are 1-based".into()));
            }
            let q = identify(&p, args.i - 1, args.j - 1)?;
            emit_polynomial(&q, &args.poly.out, out);
            Ok(())
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            write!(target, "{}", e.render()).ok();
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Resource(m) => (EXIT_RESOURCE, m),
                Failure::Disagreement(m) => (EXIT_DISAGREEMENT, m),
                Failure::Other(m) => (EXIT_FAILURE, m),
            };
            writeln!(err, "error: {msg}").ok();
            code
        }
    }
}
