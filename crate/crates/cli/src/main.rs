use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hecke_poincare::rational::{self, Q};
use hecke_poincare::series::{
    self, is_reciprocal, is_skew_reciprocal, roots_all_negative, roots_all_positive, Poly,
};
use hecke_poincare::symfunc::tensor_decompose;
use hecke_poincare::symmetry::{self, HeckeSymmetry, RMatrixFile};
use hecke_poincare::verify::{self, CheckedReport};
use hecke_poincare::{Birank, Error, Partition};

const EXIT_INPUT: u8 = 2;
const EXIT_CHECK: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "hecke-poincare", version, about = "Poincaré series of Hecke symmetries and related identities")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Config {
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Truncation order of power series
    #[arg(long, global = true, default_value_t = 12)]
    order: usize,
    /// Largest tensor power used for dimension counts
    #[arg(long, global = true, default_value_t = symmetry::DEFAULT_STRAND_CAP)]
    strand_cap: usize,
    /// Padé degree bounds as "m,n"
    #[arg(long, global = true, default_value = "4,4", value_parser = parse_bounds)]
    pade_bounds: (usize, usize),
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose a product of two Schur functions
    Lr {
        lambda: String,
        mu: String,
        /// Keep only constituents in Γ(m,n)
        #[arg(long)]
        birank: Option<String>,
    },
    /// Dimensions and Poincaré series of Λ and S for a Hecke symmetry
    Poincare {
        #[command(flatten)]
        source: Source,
    },
    /// Check the three axioms of an R-matrix file
    Check {
        #[arg(long)]
        rfile: PathBuf,
    },
    /// Run an identity suite
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest m in the parameter grid
        #[arg(long, default_value_t = 3)]
        m: usize,
        /// Largest n in the parameter grid
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Largest k in the parameter grid
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        /// Random samples per grid point
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
    /// Enumerate the low-birank candidate series
    Classify {
        #[arg(long, default_value_t = 6)]
        max_a: u64,
        #[arg(long, default_value_t = 6)]
        max_b: u64,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// standard:d:q0 or super:m:n
    #[arg(long)]
    fixture: Option<String>,
    /// R-matrix JSON file
    #[arg(long)]
    rfile: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Suite {
    /// Tensor-product decompositions and the dual dimension identities
    #[value(alias = "eq4")]
    Decomposition,
    /// The t ↦ 1/t identity with negative controls
    #[value(alias = "eq9")]
    Reflection,
    /// Reciprocity, integrality, root signs and duality on every fixture
    #[value(alias = "thm1")]
    Reciprocity,
    All,
}

fn parse_bounds(s: &str) -> Result<(usize, usize), String> {
    let (m, n) = s.split_once(',').ok_or_else(|| format!("expected m,n, got {s:?}"))?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((parse(m)?, parse(n)?))
}

/// A failure together with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure { code: EXIT_INPUT, message: message.to_string() }
    }

    fn check(message: impl ToString) -> Self {
        Failure { code: EXIT_CHECK, message: message.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::AxiomFailed(_)
            | Error::RootSign(_)
            | Error::NoRationalFunction { .. }
            | Error::ZeroConstantTerm
            | Error::ConstantTermNotOne(_) => EXIT_CHECK,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

/// What a command printed and whether its checks held.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Lr { lambda, mu, birank } => cmd_lr(lambda, mu, birank.as_deref()),
        Command::Poincare { source } => cmd_poincare(source, &cli.config),
        Command::Check { rfile } => cmd_check(rfile),
        Command::Verify { suite, m, n, kmax, samples, seed } => {
            cmd_verify(*suite, *m, *n, *kmax, *samples, *seed, &cli.config)
        }
        Command::Classify { max_a, max_b } => cmd_classify(*max_a, *max_b),
    };
    match result {
        Ok(out) => {
            let body = if cli.config.json {
                serde_json::to_string_pretty(&out.json).expect("serializable") + "\n"
            } else {
                out.text
            };
            // A closed pipe is not an error for a report writer.
            let _ = io::stdout().lock().write_all(body.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(Failure::from)
}

fn cmd_lr(lambda: &str, mu: &str, birank: Option<&str>) -> Result<Outcome, Failure> {
    let lambda = parse_partition(lambda)?;
    let mu = parse_partition(mu)?;
    let b = birank.map(|s| s.parse::<Birank>()).transpose()?;
    let d = tensor_decompose(&lambda, &mu, b);
    let terms: Vec<Value> = d
        .terms()
        .map(|(p, c)| json!({ "partition": p.parts(), "multiplicity": c }))
        .collect();
    Ok(Outcome {
        text: format!("{d}\n"),
        json: json!({ "lambda": lambda.parts(), "mu": mu.parts(), "terms": terms }),
        ok: true,
    })
}

fn load_rfile(path: &PathBuf) -> Result<HeckeSymmetry, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    Ok(RMatrixFile::parse(&text)?.symmetry_unchecked()?)
}

fn load_source(source: &Source) -> Result<(String, HeckeSymmetry), Failure> {
    match (&source.fixture, &source.rfile) {
        (Some(spec), _) => Ok((spec.clone(), symmetry::fixture_from_spec(spec)?)),
        (None, Some(path)) => {
            let sym = load_rfile(path)?;
            if let Some(axiom) = sym.axioms().first_failure() {
                return Err(Failure::check(format!("axiom failed: {axiom}")));
            }
            hecke_poincare::hecke::QContext::new(sym.q().clone())?;
            Ok((path.display().to_string(), sym))
        }
        (None, None) => Err(Failure::input("one of --fixture or --rfile is required")),
    }
}

fn q_list(xs: &[Q]) -> Vec<String> {
    xs.iter().map(rational::format).collect()
}

fn bracket(xs: &[Q]) -> String {
    format!("[{}]", q_list(xs).join(","))
}

fn joined(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_poincare(source: &Source, config: &Config) -> Result<Outcome, Failure> {
    let (name, sym) = load_source(source)?;
    let (m_max, n_max) = config.pade_bounds;
    let cap = config.strand_cap;
    let dims_l = symmetry::dims_lambda(&sym, config.order, cap)?;
    let dims_s = symmetry::dims_s(&sym, config.order, cap)?;
    let p_l = series::pade_reconstruct(&symmetry::dims_to_series(&dims_l), m_max, n_max)?;
    let p_s = series::pade_reconstruct(&symmetry::dims_to_series(&dims_s), m_max, n_max)?;
    let (num, den): (&Poly, &Poly) = (&p_l.numerator, &p_l.denominator);
    let verdicts = [
        ("numerator_reciprocal", is_reciprocal(num)),
        ("denominator_skew_reciprocal", is_skew_reciprocal(den)),
        ("integral", p_l.is_integral()),
        ("numerator_roots_negative", roots_all_negative(num)),
        ("denominator_roots_positive", roots_all_positive(den)),
        ("duality", series::duality_check(&p_l, &p_s, config.order)),
    ];
    let b = p_l.birank();
    let mut text = format!(
        "source: {name}\nd: {}  q: {}\ndims Λ: {}\ndims S: {}\nP = {}\nQ = {}\nbirank: {b}\nP_S = {}\n",
        sym.d(),
        rational::format(sym.q()),
        joined(&dims_l),
        joined(&dims_s),
        bracket(num.coeffs()),
        bracket(den.coeffs()),
        p_s,
    );
    for (label, ok) in &verdicts {
        text.push_str(&format!("{label}: {ok}\n"));
    }
    let mut json = json!({
        "source": name,
        "d": sym.d(),
        "q": rational::format(sym.q()),
        "order": config.order,
        "dims_lambda": dims_l,
        "dims_s": dims_s,
        "numerator": q_list(num.coeffs()),
        "denominator": q_list(den.coeffs()),
        "birank": [b.m, b.n],
        "s_numerator": q_list(p_s.numerator.coeffs()),
        "s_denominator": q_list(p_s.denominator.coeffs()),
    });
    for (label, ok) in &verdicts {
        json[*label] = json!(ok);
    }
    Ok(Outcome { text, json, ok: verdicts.iter().all(|(_, ok)| *ok) })
}

fn cmd_check(rfile: &PathBuf) -> Result<Outcome, Failure> {
    let sym = load_rfile(rfile)?;
    let report = sym.axioms();
    let rows = [
        ("braid", report.braid),
        ("hecke", report.hecke),
        ("half_adjoint", report.half_adjoint),
    ];
    let mut text = String::new();
    for (label, ok) in &rows {
        text.push_str(&format!("{label}: {}\n", if *ok { "pass" } else { "FAIL" }));
    }
    if let Some(axiom) = report.first_failure() {
        text.push_str(&format!("first failure: {axiom}\n"));
    }
    Ok(Outcome {
        text,
        json: json!({
            "braid": report.braid,
            "hecke": report.hecke,
            "half_adjoint": report.half_adjoint,
            "first_failure": report.first_failure(),
        }),
        ok: report.all_pass(),
    })
}

fn cmd_verify(
    suite: Suite,
    m: usize,
    n: usize,
    kmax: usize,
    samples: usize,
    seed: u64,
    config: &Config,
) -> Result<Outcome, Failure> {
    let mut reports: Vec<CheckedReport> = Vec::new();
    if matches!(suite, Suite::Decomposition | Suite::All) {
        reports.extend(verify::suite_decomposition(m, n, kmax, samples, seed)?);
    }
    if matches!(suite, Suite::Reflection | Suite::All) {
        reports.extend(verify::suite_reflection(m, n, samples, config.order, seed));
    }
    if matches!(suite, Suite::Reciprocity | Suite::All) {
        reports.extend(verify::suite_reciprocity(config.order, config.pade_bounds, config.strand_cap)?);
    }
    let failed = reports.iter().filter(|r| !r.ok()).count();
    let mut text = String::new();
    for r in &reports {
        text.push_str(&format!("{r}\n"));
    }
    text.push_str(&format!("{} checks, {failed} failed, seed {seed}\n", reports.len()));
    Ok(Outcome {
        text,
        json: json!({ "seed": seed, "failed": failed, "reports": reports }),
        ok: failed == 0,
    })
}

fn cmd_classify(max_a: u64, max_b: u64) -> Result<Outcome, Failure> {
    if max_a < 2 || max_b < 2 {
        return Err(Failure::input("--max-a and --max-b must be at least 2"));
    }
    let candidates = verify::classify_low_birank(max_a, max_b);
    let expected = verify::classification_count(max_a, max_b);
    let failed = candidates.iter().filter(|c| !c.passes()).count();
    let mut text = String::new();
    for c in &candidates {
        text.push_str(&format!(
            "{}  = {}  [{}]\n",
            c.label(),
            c.function,
            if c.passes() { "pass" } else { "FAIL" }
        ));
    }
    text.push_str(&format!("{} candidates (expected {expected}), {failed} failed\n", candidates.len()));
    let json = json!({
        "count": candidates.len(),
        "expected_count": expected,
        "failed": failed,
        "candidates": candidates
            .iter()
            .map(|c| json!({
                "label": c.label(),
                "numerator": q_list(c.function.numerator.coeffs()),
                "denominator": q_list(c.function.denominator.coeffs()),
                "numerator_reciprocal": c.numerator_reciprocal,
                "denominator_skew_reciprocal": c.denominator_skew_reciprocal,
                "numerator_roots_negative": c.numerator_roots_negative,
                "denominator_roots_positive": c.denominator_roots_positive,
                "pass": c.passes(),
            }))
            .collect::<Vec<_>>(),
    });
    Ok(Outcome { text, json, ok: failed == 0 && candidates.len() == expected })
}
