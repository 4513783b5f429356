//! `neutro` — batch front end for the neutrosophic computation engine.
//!
//! Exit codes: 0 success (or a topology that holds), 1 checked-false (a
//! family that is not a topology), 2 usage or parse errors, 3 evaluation and
//! domain errors. Machine-readable results go to stdout, one value per line;
//! diagnostics and warnings go to stderr.

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use neutro_core::combinators::{ComponentConorm, ComponentNorm};
use neutro_core::dsl::{self, EvalConfig, EvalMode, Negation, Normalization};
use neutro_core::measure::{
    classify_eps, combine_norms, normalize, sum_profile_eps, vector_norm, NormRule,
};
use neutro_core::ordered::{routed_product, routing_oracle, Priority};
use neutro_core::topology::{
    is_alternative_topology_eps, is_general_topology_eps, parse_general_family,
    parse_subset_family,
};
use neutro_core::triple_ops::NnConfig;
use neutro_core::{format_number, CrispTriple, NeutroTriple};

#[derive(Parser)]
#[command(
    name = "neutro",
    version,
    about = "Calculator for (T, I, F)-valued neutrosophic logic: evaluate formulas, \
             classify and rescale triples, inspect routed k-ary operators, and check \
             topology families"
)]
struct Cli {
    /// Absolute tolerance for set equality and membership tests.
    #[arg(long, global = true, default_value = "1e-9")]
    epsilon: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula against variable bindings.
    Eval(EvalArgs),
    /// Classify a triple by its component-sum profile.
    Classify(ClassifyArgs),
    /// Rescale a crisp triple to a target vector norm.
    Normalize(NormalizeArgs),
    /// Apply the priority-routed operator to a list of crisp triples.
    Klaw(KlawArgs),
    /// Check a family file against the topology axioms.
    Topology(TopologyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Componentwise,
    Ordered,
}

#[derive(Clone, Copy, ValueEnum)]
enum NegArg {
    Complement,
    Swap,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    General,
    Alt,
}

#[derive(Args)]
struct EvalArgs {
    /// Formula text, e.g. "x & (y | !z)".
    #[arg(long)]
    expr: String,

    /// Variable binding NAME=TRIPLE, e.g. x={0.6,0.3,0.1}; repeatable.
    #[arg(long = "bind", value_name = "NAME=TRIPLE")]
    bind: Vec<String>,

    /// How `&` and `|` evaluate.
    #[arg(long, value_enum, default_value_t = ModeArg::Componentwise)]
    mode: ModeArg,

    /// Conjunction-side component operator (componentwise mode).
    #[arg(long, value_parser = parse_norm, default_value = "min")]
    norm: ComponentNorm,

    /// Disjunction-side component operator (componentwise mode).
    #[arg(long, value_parser = parse_conorm, default_value = "max")]
    conorm: ComponentConorm,

    /// Conjunction priority, weakest to strongest (ordered mode).
    #[arg(long, value_parser = parse_priority, default_value = "TIF")]
    order: Priority,

    /// Disjunction priority (ordered mode).
    #[arg(long = "disj-order", value_parser = parse_priority, default_value = "FIT")]
    disj_order: Priority,

    /// What `!` means.
    #[arg(long, value_enum, default_value_t = NegArg::Complement)]
    neg: NegArg,

    /// none, after-each:RULE, or final:RULE with RULE one of product, average.
    #[arg(long, value_parser = parse_normalization, default_value = "none")]
    normalize: Normalization,

    /// Also print the vector norm and classification of the result.
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Triple text, e.g. {[0.1,0.2],[0.3,0.4],[0.2,0.3]}.
    #[arg(long)]
    triple: String,
}

#[derive(Args)]
struct NormalizeArgs {
    /// Crisp triple text, e.g. {0.2,0.22,0.38}.
    #[arg(long)]
    triple: String,

    /// Explicit target vector norm.
    #[arg(long = "target-norm")]
    target_norm: Option<f64>,

    /// Norm rule combining --norms into the target.
    #[arg(long, value_parser = parse_rule)]
    rule: Option<NormRule>,

    /// Two operand norms n1,n2 for --rule.
    #[arg(long)]
    norms: Option<String>,
}

#[derive(Args)]
struct KlawArgs {
    /// Priority order, weakest to strongest.
    #[arg(long, value_parser = parse_priority, default_value = "TIF")]
    order: Priority,

    /// Comma-separated crisp triples, e.g. {1,0,0},{1,0,0}.
    #[arg(long)]
    vars: String,

    /// Cross-check against the enumeration oracle and print the deviation.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct TopologyArgs {
    /// Which construction the file describes.
    #[arg(long, value_enum)]
    kind: KindArg,

    /// Family file path.
    #[arg(long)]
    file: PathBuf,

    /// Conjunction-side component operator (general kind).
    #[arg(long, value_parser = parse_norm, default_value = "min")]
    norm: ComponentNorm,

    /// Disjunction-side component operator (general kind).
    #[arg(long, value_parser = parse_conorm, default_value = "max")]
    conorm: ComponentConorm,
}

fn parse_norm(s: &str) -> Result<ComponentNorm, String> {
    ComponentNorm::from_str(s)
}

fn parse_conorm(s: &str) -> Result<ComponentConorm, String> {
    ComponentConorm::from_str(s)
}

fn parse_rule(s: &str) -> Result<NormRule, String> {
    NormRule::from_str(s)
}

fn parse_priority(s: &str) -> Result<Priority, String> {
    Priority::from_str(s)
        .map_err(|_| format!("bad priority {s:?}; expected a permutation of T, I, F such as TIF"))
}

fn parse_normalization(s: &str) -> Result<Normalization, String> {
    if s == "none" {
        return Ok(Normalization::None);
    }
    if let Some(rule) = s.strip_prefix("after-each:") {
        return Ok(Normalization::AfterEach(NormRule::from_str(rule)?));
    }
    if let Some(rule) = s.strip_prefix("final:") {
        return Ok(Normalization::Final(NormRule::from_str(rule)?));
    }
    Err(format!(
        "unknown normalization {s:?}; expected none, after-each:RULE, or final:RULE"
    ))
}

enum CliError {
    /// Flag, expression, or file parse problems: exit 2.
    Usage(String),
    /// Evaluation and domain failures: exit 3.
    Domain(String),
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let eps = cli.epsilon;
    match cli.command {
        Command::Eval(args) => cmd_eval(args, eps),
        Command::Classify(args) => cmd_classify(args, eps),
        Command::Normalize(args) => cmd_normalize(args),
        Command::Klaw(args) => cmd_klaw(args),
        Command::Topology(args) => cmd_topology(args, eps),
    }
}

fn parse_bindings(binds: &[String]) -> Result<HashMap<String, NeutroTriple>, CliError> {
    let mut out = HashMap::new();
    for bind in binds {
        let (name, text) = bind
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("binding {bind:?} is not NAME=TRIPLE")))?;
        if !dsl::is_identifier(name) {
            return Err(CliError::Usage(format!("bad variable name {name:?}")));
        }
        let triple = dsl::parse_triple(text).map_err(|e| {
            CliError::Usage(format!("in binding for {name}: {e}"))
        })?;
        if out.insert(name.to_string(), triple).is_some() {
            return Err(CliError::Usage(format!("variable {name} bound twice")));
        }
    }
    Ok(out)
}

fn cmd_eval(args: EvalArgs, eps: f64) -> Result<ExitCode, CliError> {
    let formula = dsl::parse(&args.expr).map_err(usage)?;
    let bindings = parse_bindings(&args.bind)?;
    let cfg = EvalConfig {
        mode: match args.mode {
            ModeArg::Componentwise => {
                EvalMode::Componentwise(NnConfig::new(args.norm, args.conorm))
            }
            ModeArg::Ordered => EvalMode::Ordered {
                conj: args.order,
                disj: args.disj_order,
            },
        },
        negation: match args.neg {
            NegArg::Complement => Negation::Complement,
            NegArg::Swap => Negation::Swap,
        },
        normalization: args.normalize,
    };
    let result = dsl::evaluate(&formula, &bindings, &cfg).map_err(domain)?;
    println!("{}", dsl::format_triple(&result));
    if args.verbose {
        match result.as_crisp() {
            Some(c) => println!("norm: {}", format_number(vector_norm(&c))),
            None => {
                let profile = sum_profile_eps(&result, eps);
                println!(
                    "norm: [{},{}]",
                    format_number(profile.min_sum),
                    format_number(profile.max_sum)
                );
            }
        }
        println!("class: {}", classify_eps(&result, eps));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(args: ClassifyArgs, eps: f64) -> Result<ExitCode, CliError> {
    let triple = dsl::parse_triple(&args.triple).map_err(usage)?;
    let profile = sum_profile_eps(&triple, eps);
    println!(
        "{} min_sum={} max_sum={}",
        classify_eps(&triple, eps),
        format_number(profile.min_sum),
        format_number(profile.max_sum)
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_normalize(args: NormalizeArgs) -> Result<ExitCode, CliError> {
    let triple = dsl::parse_triple(&args.triple).map_err(usage)?;
    let crisp = triple
        .as_crisp()
        .ok_or_else(|| CliError::Domain("normalize requires a crisp triple".to_string()))?;
    let target = match (args.target_norm, args.rule, args.norms) {
        (Some(target), None, None) => target,
        (None, Some(rule), Some(norms)) => {
            let (a, b) = norms
                .split_once(',')
                .ok_or_else(|| CliError::Usage(format!("--norms {norms:?} is not n1,n2")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| CliError::Usage(format!("bad norm value {s:?}")))
            };
            combine_norms(&rule, parse(a)?, parse(b)?)
        }
        _ => {
            return Err(CliError::Usage(
                "pass either --target-norm S or both --rule and --norms".to_string(),
            ))
        }
    };
    let out = normalize(&crisp, target).map_err(domain)?;
    println!("{out}");
    if out.exceeds_unit() {
        eprintln!("warning: a rescaled component exceeds 1");
    }
    Ok(ExitCode::SUCCESS)
}

/// Splits on commas that sit outside braces, so whole triples stay together.
fn split_triples(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (idx, b) in s.bytes().enumerate() {
        match b {
            b'{' => depth += 1,
            b'}' => depth = depth.saturating_sub(1),
            b',' if depth == 0 => {
                out.push(&s[start..idx]);
                start = idx + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn cmd_klaw(args: KlawArgs) -> Result<ExitCode, CliError> {
    let mut vars: Vec<CrispTriple> = Vec::new();
    for text in split_triples(&args.vars) {
        let triple = dsl::parse_triple(text.trim()).map_err(usage)?;
        let crisp = triple.as_crisp().ok_or_else(|| {
            CliError::Domain(format!("klaw requires crisp triples, got {}", triple))
        })?;
        vars.push(crisp);
    }
    let result = routed_product(args.order, &vars).map_err(domain)?;
    if args.oracle {
        let oracle = routing_oracle(args.order, &vars).map_err(domain)?;
        let deviation = (result.t - oracle.t)
            .abs()
            .max((result.i - oracle.i).abs())
            .max((result.f - oracle.f).abs());
        println!("{result} deviation={}", format_number(deviation));
    } else {
        println!("{result}");
    }
    let input_norms: Vec<String> = vars
        .iter()
        .map(|v| format_number(vector_norm(v)))
        .collect();
    eprintln!(
        "norms: in={} out={}",
        input_norms.join(" "),
        format_number(vector_norm(&result))
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_topology(args: TopologyArgs, eps: f64) -> Result<ExitCode, CliError> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", args.file.display())))?;
    let report = match args.kind {
        KindArg::General => {
            let family = parse_general_family(&text).map_err(usage)?;
            is_general_topology_eps(&family, NnConfig::new(args.norm, args.conorm), eps)
        }
        KindArg::Alt => {
            let family = parse_subset_family(&text).map_err(usage)?;
            is_alternative_topology_eps(&family, eps)
        }
    };
    for warning in &report.warnings {
        eprintln!("warning: {warning}");
    }
    if report.is_topology {
        println!("TOPOLOGY");
        Ok(ExitCode::SUCCESS)
    } else {
        for violation in &report.violations {
            println!("{violation}");
        }
        Ok(ExitCode::from(1))
    }
}
