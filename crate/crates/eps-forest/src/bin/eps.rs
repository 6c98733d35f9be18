//! Command-line front end: coproducts, antipodes, pre-Lie products, biideal
//! listings, morphism evaluation, and seeded property-check suites.
//!
//! Exit codes: 0 success, 1 property failure, 2 parse/usage error,
//! 3 precondition refusal.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use eps_forest::antipode::{antipode, AntipodeError};
use eps_forest::eps::EpsBialgebra;
use eps_forest::forest::Alphabets;
use eps_forest::instances::{
    divided_diff_instance, foissy_instance, poly_instance, quiver_instance, trivial_instance,
    Monomial, QuiverAlgebra, QuiverSpec, Word, FOISSY_LABEL,
};
use eps_forest::lincomb::{LinComb, Tensor2};
use eps_forest::operated::{collapse_target, evaluate_lc, identity_target, relabel_target};
use eps_forest::prelie::{bracket, prelie};
use eps_forest::rat::Rat;
use eps_forest::suites::{run as run_suites, InstanceKind, Suite, SuiteConfig};
use eps_forest::textio;
use eps_forest::ForestAlgebra;

#[derive(Parser)]
#[command(name = "eps", about = "Weighted infinitesimal bialgebras on decorated planar rooted forests")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    opts: GlobalOpts,
}

#[derive(Args, Debug, Default)]
struct GlobalOpts {
    /// Comma-separated generator (leaf) labels, e.g. `x,y,z`.
    #[arg(long = "X", global = true, value_name = "LABELS")]
    x: Option<String>,
    /// Comma-separated operator labels, e.g. `a,b,g,w`.
    #[arg(long = "Omega", global = true, value_name = "LABELS")]
    omega: Option<String>,
    /// forest | poly:LAMBDA | divdiff | quiver:FILE | foissy | trivial
    #[arg(long, global = true)]
    instance: Option<String>,
    /// text | json
    #[arg(long, global = true)]
    format: Option<String>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[arg(long, global = true)]
    max_vertices: Option<usize>,
    /// JSON file mirroring the flags; `EPS_CONFIG` is the fallback.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the coproduct of an expression.
    Coproduct { expr: String },
    /// Print the antipode of an expression (weight-0, locally nilpotent instances).
    Antipode { expr: String },
    /// Print the pre-Lie product e1 ▷ e2.
    Prelie { e1: String, e2: String },
    /// Print the Lie bracket [e1, e2].
    Bracket { e1: String, e2: String },
    /// List the proper biideals of a forest with their restrictions.
    Biideals { expr: String },
    /// Evaluate a forest expression through a named operated-algebra target.
    Eval {
        expr: String,
        /// identity | relabel:x=y,... | collapse
        #[arg(long)]
        target: String,
    },
    /// Run a property-check suite.
    Check { suite: String },
}

#[derive(Debug)]
enum CliError {
    /// Bad input or configuration → exit 2.
    Usage(String),
    /// A checked property failed → exit 1.
    Property(String),
    /// A documented precondition was not met → exit 3.
    Refusal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Property(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Refusal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Property(m) | CliError::Refusal(m) => m,
        }
    }
}

impl From<AntipodeError> for CliError {
    fn from(e: AntipodeError) -> Self {
        CliError::Refusal(e.to_string())
    }
}

impl From<textio::ParseError> for CliError {
    fn from(e: textio::ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    #[serde(rename = "X")]
    x: Option<Vec<String>>,
    #[serde(rename = "Omega")]
    omega: Option<Vec<String>>,
    instance: Option<String>,
    format: Option<String>,
    seed: Option<u64>,
    samples: Option<usize>,
    max_vertices: Option<usize>,
}

struct Config {
    alphabets: Alphabets,
    instance: InstanceKind,
    format: Format,
    seed: u64,
    samples: usize,
    max_vertices: usize,
}

fn split_labels(s: &str) -> Vec<String> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(str::to_string).collect()
}

fn load_config_file(opts: &GlobalOpts) -> Result<ConfigFile, CliError> {
    let path = opts
        .config
        .clone()
        .or_else(|| std::env::var_os("EPS_CONFIG").map(PathBuf::from));
    let Some(path) = path else { return Ok(ConfigFile::default()) };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("invalid config {}: {e}", path.display())))
}

fn parse_instance(s: &str) -> Result<InstanceKind, CliError> {
    if s == "forest" {
        return Ok(InstanceKind::Forest);
    }
    if s == "divdiff" {
        return Ok(InstanceKind::DivDiff);
    }
    if s == "foissy" {
        return Ok(InstanceKind::Foissy);
    }
    if s == "trivial" {
        return Ok(InstanceKind::Trivial);
    }
    if let Some(lam) = s.strip_prefix("poly:") {
        let lam: Rat = lam
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid weight in `{s}` (expected poly:RATIONAL)")))?;
        return Ok(InstanceKind::Poly(lam));
    }
    if let Some(file) = s.strip_prefix("quiver:") {
        let text = std::fs::read_to_string(file)
            .map_err(|e| CliError::Usage(format!("cannot read quiver file {file}: {e}")))?;
        let spec: QuiverSpec = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("invalid quiver file {file}: {e}")))?;
        spec.validate().map_err(|e| CliError::Usage(format!("invalid quiver: {e}")))?;
        return Ok(InstanceKind::Quiver(spec));
    }
    Err(CliError::Usage(format!(
        "unknown instance `{s}` (expected forest, poly:LAMBDA, divdiff, quiver:FILE, foissy or trivial)"
    )))
}

fn resolve(opts: &GlobalOpts) -> Result<Config, CliError> {
    let file = load_config_file(opts)?;
    let x = opts
        .x
        .as_deref()
        .map(split_labels)
        .or(file.x)
        .unwrap_or_else(|| vec!["x".into(), "y".into(), "z".into()]);
    let omega = opts
        .omega
        .as_deref()
        .map(split_labels)
        .or(file.omega)
        .unwrap_or_else(|| vec!["a".into(), "b".into(), "g".into(), "w".into()]);
    let alphabets = Alphabets::new(x, omega).map_err(|e| CliError::Usage(e.to_string()))?;
    let instance = match opts.instance.as_deref().or(file.instance.as_deref()) {
        Some(s) => parse_instance(s)?,
        None => InstanceKind::Forest,
    };
    let format = match opts.format.as_deref().or(file.format.as_deref()) {
        None | Some("text") => Format::Text,
        Some("json") => Format::Json,
        Some(other) => return Err(CliError::Usage(format!("unknown format `{other}` (expected text or json)"))),
    };
    Ok(Config {
        alphabets,
        instance,
        format,
        seed: opts.seed.or(file.seed).unwrap_or(0),
        samples: opts.samples.or(file.samples).unwrap_or(100),
        max_vertices: opts.max_vertices.or(file.max_vertices).unwrap_or(6),
    })
}

// ---------------------------------------------------------------------------
// Output helpers.
// ---------------------------------------------------------------------------

fn generic_lincomb_json<B: Display + Ord + Clone>(v: &LinComb<B>) -> Value {
    let terms: Vec<Value> = v
        .iter()
        .map(|(b, c)| json!({ "coeff": c.to_string(), "elem": b.to_string() }))
        .collect();
    json!({ "schema": textio::SCHEMA, "terms": terms })
}

fn generic_tensor_json<B: Display + Ord + Clone>(v: &LinComb<Tensor2<B>>) -> Value {
    let terms: Vec<Value> = v
        .iter()
        .map(|(Tensor2(l, r), c)| {
            json!({
                "coeff": c.to_string(),
                "elem": { "left": l.to_string(), "right": r.to_string() },
            })
        })
        .collect();
    json!({ "schema": textio::SCHEMA, "terms": terms })
}

fn emit(format: Format, text: String, jsonv: Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{jsonv}"),
    }
}

// ---------------------------------------------------------------------------
// Per-instance expression handling.
// ---------------------------------------------------------------------------

/// Parse a basis element of a non-forest instance.
fn parse_basis<B: FromStr<Err = String>>(expr: &str) -> Result<LinComb<B>, CliError>
where
    B: Ord + Clone,
{
    Ok(LinComb::basis(expr.parse::<B>().map_err(CliError::Usage)?))
}

fn foissy_alphabets() -> Alphabets {
    Alphabets::new(Vec::<String>::new(), [FOISSY_LABEL]).unwrap()
}

enum UnaryOp {
    Coproduct,
    Antipode,
}

enum BinaryOp {
    Prelie,
    Bracket,
}

fn run_unary<I: EpsBialgebra>(
    op: &UnaryOp,
    inst: &I,
    v: &LinComb<I::Basis>,
    cfg: &Config,
    forest_json: Option<fn(&LinComb<Tensor2<I::Basis>>) -> Value>,
) -> Result<(), CliError> {
    match op {
        UnaryOp::Coproduct => {
            let d = inst.coproduct_lc(v);
            let jsonv = forest_json.map(|f| f(&d)).unwrap_or_else(|| generic_tensor_json(&d));
            emit(cfg.format, d.to_string(), jsonv);
        }
        UnaryOp::Antipode => {
            let s = antipode(inst, v)?;
            emit(cfg.format, s.to_string(), generic_lincomb_json(&s));
        }
    }
    Ok(())
}

fn run_binary<I: EpsBialgebra>(
    op: &BinaryOp,
    inst: &I,
    a: &LinComb<I::Basis>,
    b: &LinComb<I::Basis>,
    cfg: &Config,
) -> Result<(), CliError> {
    let v = match op {
        BinaryOp::Prelie => prelie(inst, a, b),
        BinaryOp::Bracket => bracket(inst, a, b),
    };
    emit(cfg.format, v.to_string(), generic_lincomb_json(&v));
    Ok(())
}

fn dispatch_unary(op: UnaryOp, expr: &str, cfg: &Config) -> Result<(), CliError> {
    match &cfg.instance {
        InstanceKind::Forest => {
            let v = textio::parse_lincomb(expr, &cfg.alphabets)?;
            run_unary(&op, &ForestAlgebra, &v, cfg, Some(textio::tensor_to_json))
        }
        InstanceKind::Foissy => {
            let v = textio::parse_lincomb(expr, &foissy_alphabets())?;
            run_unary(&op, &foissy_instance(), &v, cfg, Some(textio::tensor_to_json))
        }
        InstanceKind::Poly(lam) => {
            run_unary(&op, &poly_instance(lam.clone()), &parse_basis::<Monomial>(expr)?, cfg, None)
        }
        InstanceKind::DivDiff => {
            run_unary(&op, &divided_diff_instance(), &parse_basis::<Word>(expr)?, cfg, None)
        }
        InstanceKind::Trivial => {
            run_unary(&op, &trivial_instance(), &parse_basis::<Monomial>(expr)?, cfg, None)
        }
        InstanceKind::Quiver(spec) => {
            let inst: QuiverAlgebra =
                quiver_instance(spec.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
            let p = inst.spec.parse_path(expr).map_err(|e| CliError::Usage(e.to_string()))?;
            run_unary(&op, &inst, &LinComb::basis(p), cfg, None)
        }
    }
}

fn dispatch_binary(op: BinaryOp, e1: &str, e2: &str, cfg: &Config) -> Result<(), CliError> {
    match &cfg.instance {
        InstanceKind::Forest => {
            let a = textio::parse_lincomb(e1, &cfg.alphabets)?;
            let b = textio::parse_lincomb(e2, &cfg.alphabets)?;
            run_binary(&op, &ForestAlgebra, &a, &b, cfg)
        }
        InstanceKind::Foissy => {
            let ab = foissy_alphabets();
            let a = textio::parse_lincomb(e1, &ab)?;
            let b = textio::parse_lincomb(e2, &ab)?;
            run_binary(&op, &foissy_instance(), &a, &b, cfg)
        }
        InstanceKind::Poly(lam) => run_binary(
            &op,
            &poly_instance(lam.clone()),
            &parse_basis::<Monomial>(e1)?,
            &parse_basis::<Monomial>(e2)?,
            cfg,
        ),
        InstanceKind::DivDiff => run_binary(
            &op,
            &divided_diff_instance(),
            &parse_basis::<Word>(e1)?,
            &parse_basis::<Word>(e2)?,
            cfg,
        ),
        InstanceKind::Trivial => run_binary(
            &op,
            &trivial_instance(),
            &parse_basis::<Monomial>(e1)?,
            &parse_basis::<Monomial>(e2)?,
            cfg,
        ),
        InstanceKind::Quiver(spec) => {
            let inst = quiver_instance(spec.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
            let a = inst.spec.parse_path(e1).map_err(|e| CliError::Usage(e.to_string()))?;
            let b = inst.spec.parse_path(e2).map_err(|e| CliError::Usage(e.to_string()))?;
            run_binary(&op, &inst, &LinComb::basis(a), &LinComb::basis(b), cfg)
        }
    }
}

fn cmd_biideals(expr: &str, cfg: &Config) -> Result<(), CliError> {
    let f = textio::parse_forest(expr, &cfg.alphabets)?;
    let biideals = f.proper_biideals();
    match cfg.format {
        Format::Text => {
            for (k, ideal) in biideals.iter().enumerate() {
                let addrs: Vec<String> = ideal.iter().map(|v| v.to_string()).collect();
                let restriction = f.restrict(ideal).expect("biideal vertices come from the forest");
                println!("I_{} = {{{}}} -> {}", k + 1, addrs.join(", "), restriction);
            }
        }
        Format::Json => {
            let items: Vec<Value> = biideals
                .iter()
                .map(|ideal| {
                    let restriction = f.restrict(ideal).expect("biideal vertices");
                    let doc = textio::forest_to_json(&restriction);
                    json!({
                        "vertices": ideal.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        "restriction": doc["forest"],
                    })
                })
                .collect();
            println!("{}", json!({ "schema": textio::SCHEMA, "biideals": items }));
        }
    }
    Ok(())
}

fn cmd_eval(expr: &str, target: &str, cfg: &Config) -> Result<(), CliError> {
    let v = textio::parse_lincomb(expr, &cfg.alphabets)?;
    if target == "identity" {
        let t = identity_target(&cfg.alphabets);
        let out = evaluate_lc(&v, &t).map_err(|e| CliError::Usage(e.to_string()))?;
        emit(cfg.format, out.to_string(), textio::lincomb_to_json(&out));
        return Ok(());
    }
    if let Some(spec) = target.strip_prefix("relabel:") {
        let mut map = BTreeMap::new();
        for pair in spec.split(',').filter(|p| !p.is_empty()) {
            let (from, to) = pair
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("bad relabel pair `{pair}` (expected from=to)")))?;
            map.insert(from.trim().to_string(), to.trim().to_string());
        }
        let t = relabel_target(&cfg.alphabets, &map);
        let out = evaluate_lc(&v, &t).map_err(|e| CliError::Usage(e.to_string()))?;
        emit(cfg.format, out.to_string(), textio::lincomb_to_json(&out));
        return Ok(());
    }
    if target == "collapse" {
        let t = collapse_target(&cfg.alphabets);
        let out = evaluate_lc(&v, &t).map_err(|e| CliError::Usage(e.to_string()))?;
        emit(cfg.format, out.to_string(), generic_lincomb_json(&out));
        return Ok(());
    }
    Err(CliError::Usage(format!(
        "unknown target `{target}` (expected identity, relabel:x=y,... or collapse)"
    )))
}

fn cmd_check(suite: &str, cfg: &Config) -> Result<(), CliError> {
    let suite: Suite = suite.parse().map_err(CliError::Usage)?;
    let sc = SuiteConfig {
        seed: cfg.seed,
        samples: cfg.samples,
        max_vertices: cfg.max_vertices,
        alphabets: cfg.alphabets.clone(),
    };
    let reports = run_suites(suite, &cfg.instance, &sc);
    match cfg.format {
        Format::Text => {
            for r in &reports {
                println!("{r}");
            }
        }
        Format::Json => {
            let items: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.suite,
                        "passed": r.passed,
                        "failed": r.failed,
                        "counterexample": r.counterexample,
                        "refusal": r.refusal,
                    })
                })
                .collect();
            println!("{}", json!({ "schema": textio::SCHEMA, "reports": items }));
        }
    }
    if let Some(r) = reports.iter().find(|r| r.refused()) {
        return Err(CliError::Refusal(
            r.refusal.clone().unwrap_or_else(|| "precondition not met".into()),
        ));
    }
    if let Some(r) = reports.iter().find(|r| !r.ok()) {
        return Err(CliError::Property(format!(
            "suite {} failed ({} of {} checks)",
            r.suite,
            r.failed,
            r.passed + r.failed
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = resolve(&cli.opts)?;
    match &cli.cmd {
        Cmd::Coproduct { expr } => dispatch_unary(UnaryOp::Coproduct, expr, &cfg),
        Cmd::Antipode { expr } => dispatch_unary(UnaryOp::Antipode, expr, &cfg),
        Cmd::Prelie { e1, e2 } => dispatch_binary(BinaryOp::Prelie, e1, e2, &cfg),
        Cmd::Bracket { e1, e2 } => dispatch_binary(BinaryOp::Bracket, e1, e2, &cfg),
        Cmd::Biideals { expr } => cmd_biideals(expr, &cfg),
        Cmd::Eval { expr, target } => cmd_eval(expr, target, &cfg),
        Cmd::Check { suite } => cmd_check(suite, &cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
