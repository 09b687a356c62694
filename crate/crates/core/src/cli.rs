//! Command-line front end. The binary is a thin wrapper around [`run`], which
//! writes to caller-supplied streams and returns the process exit code.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::multiplicity::{compute_mq, verify_exponents, ExponentReport, MultiplicityReport};
use crate::partition::{partition_q, partition_tree_list, Method};
use crate::render::{table_csv, table_latex, table_text, AltsetDocument};
use crate::rootsys::{LieType, RootSystem};
use crate::weight::Weight;
use crate::weyl::{alternation_set, enumerate_group, AlternationRecord, DEFAULT_MAX_ORDER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kostant",
    version,
    about = "Kostant partition functions and q-weight multiplicities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// ℘_q(ξ) and ℘(ξ) for one weight.
    Partition(PartitionArgs),
    /// The explicit partitions of ξ.
    ListPartitions(PartitionArgs),
    /// The Weyl alternation set with ℘_q of every ξ.
    Altset(Common),
    /// m_q(λ, μ) and m(λ, μ).
    Mult(Common),
    /// Check m_q(α̃, 0) against the exponents.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    /// Simple-root coordinates.
    Alpha,
    /// Fundamental-weight coordinates.
    Omega,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Tree,
    Genfunc,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Tree => Method::Tree,
            MethodArg::Genfunc => Method::Genfunc,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Lie type, e.g. G2 or E8 (may also be given with --type).
    #[arg(value_name = "TYPE")]
    pub type_pos: Option<String>,
    #[arg(long = "type", value_name = "TYPE")]
    pub type_flag: Option<String>,
    /// Comma separated coefficients of λ (default: the highest root).
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Comma separated coefficients of μ (default: 0).
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Basis for --lambda and --mu.
    #[arg(long, value_enum, default_value_t = Basis::Alpha)]
    pub basis: Basis,
    #[arg(long, value_enum, default_value_t = MethodArg::Genfunc)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest Weyl group the command may enumerate.
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_group_order: u128,
    /// Write output to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PartitionArgs {
    #[command(flatten)]
    pub common: Common,
    /// Comma separated α-coefficients of ξ.
    #[arg(long, allow_hyphen_values = true)]
    pub xi: String,
    /// Also list the individual partitions.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Types to check (default: G2 F4 E6 E7 E8).
    #[arg(value_name = "TYPE")]
    pub types: Vec<String>,
    #[arg(long = "type", value_name = "TYPE")]
    pub type_flag: Vec<String>,
    #[arg(long, value_enum, default_value_t = MethodArg::Genfunc)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest Weyl group to enumerate when reporting |W|.
    #[arg(long, default_value_t = 100_000)]
    pub max_group_order: u128,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Resolved inputs shared by every subcommand.
struct Config {
    rs: RootSystem,
    lambda: Weight,
    mu: Weight,
    method: Method,
}

fn resolve_type(pos: &Option<String>, flag: &Option<String>) -> Result<LieType, UsageError> {
    match (pos, flag) {
        (Some(a), Some(b)) if a != b => Err(UsageError(format!("conflicting types {a} and {b}"))),
        (Some(t), _) | (None, Some(t)) => Ok(t.parse()?),
        (None, None) => Err(UsageError("missing Lie type".into())),
    }
}

fn parse_weight(rs: &RootSystem, s: &str, basis: Basis, what: &str) -> Result<Weight, UsageError> {
    let w = Weight::parse_list(s)?;
    if w.rank() != rs.rank() {
        return Err(UsageError(format!(
            "{what} has {} coefficients but {} has rank {}",
            w.rank(),
            rs.lie_type(),
            rs.rank()
        )));
    }
    Ok(match basis {
        Basis::Alpha => w,
        Basis::Omega => rs.omega_to_alpha(&w)?,
    })
}

impl Config {
    fn from_common(c: &Common) -> Result<Config, UsageError> {
        let rs = RootSystem::new(resolve_type(&c.type_pos, &c.type_flag)?);
        let lambda = match &c.lambda {
            Some(s) => parse_weight(&rs, s, c.basis, "--lambda")?,
            None => rs.highest_root().clone(),
        };
        let mu = match &c.mu {
            Some(s) => parse_weight(&rs, s, c.basis, "--mu")?,
            None => Weight::zero(rs.rank()),
        };
        Ok(Config {
            rs,
            lambda,
            mu,
            method: c.method.into(),
        })
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((text, out, code)) => {
            if let Some(path) = out {
                if let Err(e) = fs::write(&path, &text) {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                    return EXIT_USAGE;
                }
            } else {
                let _ = stdout.write_all(text.as_bytes());
            }
            code
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

type Outcome = Result<(String, Option<PathBuf>, i32), UsageError>;

fn execute(command: &Command) -> Outcome {
    match command {
        Command::Partition(a) => cmd_partition(a, a.list),
        Command::ListPartitions(a) => cmd_partition(a, true),
        Command::Altset(c) => cmd_altset(c),
        Command::Mult(c) => cmd_mult(c),
        Command::Verify(v) => cmd_verify(v),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct PartitionDocument {
    lie_type: LieType,
    xi: Weight,
    method: Method,
    pq: crate::qpoly::QPolynomial,
    p: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    partitions: Option<Vec<PartitionEntry>>,
}

#[derive(Serialize)]
struct PartitionEntry {
    mults: Vec<u32>,
    roots_used: u32,
    text: String,
}

fn cmd_partition(a: &PartitionArgs, list: bool) -> Outcome {
    let cfg = Config::from_common(&a.common)?;
    let rs = &cfg.rs;
    let xi = parse_weight(rs, &a.xi, Basis::Alpha, "--xi")?;
    let pq = partition_q(rs, &xi, cfg.method);
    let parts = list.then(|| partition_tree_list(rs, &xi));
    let text = match a.common.format {
        Format::Text => {
            let mut s = format!("℘_q({xi}) = {pq}\n℘({xi}) = {}\n", pq.eval_one());
            if let Some(parts) = &parts {
                for (i, p) in parts.iter().enumerate() {
                    s.push_str(&format!(
                        "{}: {}  [{} roots]\n",
                        i + 1,
                        p.render(rs),
                        p.roots_used()
                    ));
                }
            }
            s
        }
        Format::Latex => {
            let mut s = format!("$\\wp_q({}) = {}$\n", xi.to_latex(), pq.to_latex());
            if let Some(parts) = &parts {
                for p in parts {
                    s.push_str(&format!("{}\n", p.render(rs)));
                }
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("xi,pq,p\n");
            let xi_s = xi.to_integers().map_or_else(
                || {
                    xi.coeffs()
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(";")
                },
                |v| {
                    v.iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(";")
                },
            );
            let pq_s = pq
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(";");
            s.push_str(&format!("{xi_s},{pq_s},{}\n", pq.eval_one()));
            if let Some(parts) = &parts {
                s.push_str("partition,mults,roots_used\n");
                for (i, p) in parts.iter().enumerate() {
                    let m = p
                        .mults
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(";");
                    s.push_str(&format!("{},{m},{}\n", i + 1, p.roots_used()));
                }
            }
            s
        }
        Format::Json => to_json(&PartitionDocument {
            lie_type: rs.lie_type(),
            xi: xi.clone(),
            method: cfg.method,
            p: pq.eval_one().to_string(),
            pq: pq.clone(),
            partitions: parts.map(|ps| {
                ps.iter()
                    .map(|p| PartitionEntry {
                        mults: p.mults.clone(),
                        roots_used: p.roots_used(),
                        text: p.render(rs),
                    })
                    .collect()
            }),
        }),
    };
    Ok((text, a.common.out.clone(), EXIT_OK))
}

fn altset_document(
    cfg: &Config,
    records: &[AlternationRecord],
    mult: Option<&crate::multiplicity::MultiplicityResult>,
) -> AltsetDocument {
    AltsetDocument {
        lie_type: cfg.rs.lie_type(),
        lambda: cfg.lambda.clone(),
        mu: cfg.mu.clone(),
        method: cfg.method,
        count: records.len(),
        records: records
            .iter()
            .enumerate()
            .map(|(i, r)| crate::weyl::RecordRow::new(i + 1, r))
            .collect(),
        mq: mult.map(|m| MultiplicityReport::from(m).mq),
        m: mult.map(|m| m.m.to_string()),
    }
}

fn cmd_altset(c: &Common) -> Outcome {
    let cfg = Config::from_common(c)?;
    let mut records = alternation_set(&cfg.rs, &cfg.lambda, &cfg.mu)?;
    crate::multiplicity::fill_partitions(&cfg.rs, &mut records, cfg.method);
    let text = match c.format {
        Format::Text => table_text(&records),
        Format::Csv => table_csv(&records),
        Format::Latex => table_latex(&cfg.rs, &cfg.lambda, &cfg.mu, &records, None),
        Format::Json => to_json(&altset_document(&cfg, &records, None)),
    };
    Ok((text, c.out.clone(), EXIT_OK))
}

fn cmd_mult(c: &Common) -> Outcome {
    let cfg = Config::from_common(c)?;
    let result = compute_mq(&cfg.rs, &cfg.lambda, &cfg.mu, cfg.method)?;
    let text = match c.format {
        Format::Text => format!("m_q = {}; m = {}\n", result.mq, result.m),
        Format::Csv => {
            let mut s = table_csv(&result.records);
            let mq = result
                .mq
                .coeffs()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(";");
            s.push_str(&format!("mq,{mq}\nm,{}\n", result.m));
            s
        }
        Format::Latex => table_latex(
            &cfg.rs,
            &cfg.lambda,
            &cfg.mu,
            &result.records,
            Some(&result.mq),
        ),
        Format::Json => to_json(&altset_document(&cfg, &result.records, Some(&result))),
    };
    Ok((text, c.out.clone(), EXIT_OK))
}

#[derive(Serialize)]
struct VerifyEntry {
    #[serde(flatten)]
    report: ExponentReport,
    enumerated_group_order: Option<usize>,
    passed: bool,
}

fn cmd_verify(v: &VerifyArgs) -> Outcome {
    let mut names: Vec<String> = v.types.iter().chain(&v.type_flag).cloned().collect();
    if names.is_empty() {
        names = LieType::exceptional()
            .iter()
            .map(ToString::to_string)
            .collect();
    }
    let types = names
        .iter()
        .map(|n| n.parse::<LieType>())
        .collect::<Result<Vec<_>, _>>()?;

    let mut entries = Vec::new();
    for t in types {
        let rs = RootSystem::new(t);
        let report = verify_exponents(&rs, v.method.into())?;
        let enumerated = enumerate_group(&rs, v.max_group_order)
            .ok()
            .map(|g| g.len());
        let passed = report.passed() && enumerated.is_none_or(|n| n as u128 == report.group_order);
        entries.push(VerifyEntry {
            report,
            enumerated_group_order: enumerated,
            passed,
        });
    }
    let all_passed = entries.iter().all(|e| e.passed);

    let text = match v.format {
        Format::Json => to_json(&entries),
        Format::Csv => {
            let mut s =
                String::from("type,exponents,mq,alternation_set,group_order,passed,seconds\n");
            for e in &entries {
                let r = &e.report;
                s.push_str(&format!(
                    "{},{},{},{},{},{},{:.3}\n",
                    r.lie_type,
                    r.exponents
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(";"),
                    r.mq,
                    r.alternation_set_size,
                    r.group_order,
                    e.passed,
                    r.elapsed.as_secs_f64()
                ));
            }
            s
        }
        Format::Text | Format::Latex => {
            let mut s = String::new();
            for e in &entries {
                let r = &e.report;
                let exps = r
                    .exponents
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                s.push_str(&format!(
                    "{}: {}\n",
                    r.lie_type,
                    if e.passed { "PASS" } else { "FAIL" }
                ));
                s.push_str(&format!("  m_q(α̃,0) = {}\n", r.mq));
                s.push_str(&format!("  exponents = {exps}\n"));
                s.push_str(&format!(
                    "  Σe_i = |Φ⁺| = {}: {}; Π(e_i+1) = |W| = {}: {}\n",
                    r.positive_roots, r.sum_identity, r.group_order, r.product_identity
                ));
                if let Some(n) = e.enumerated_group_order {
                    s.push_str(&format!("  enumerated |W| = {n}\n"));
                }
                s.push_str(&format!("  |A(α̃,0)| = {}\n", r.alternation_set_size));
                for d in &r.discrepancies {
                    s.push_str(&format!("  note: {d}\n"));
                }
                s.push_str(&format!("  time = {:.3}s\n", r.elapsed.as_secs_f64()));
            }
            s
        }
    };
    let code = if all_passed {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    };
    Ok((text, v.out.clone(), code))
}
