//! Argument parsing, dispatch and rendering for the `plethysm` binary.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use plethysm_core::matrix::{build_m, det};
use plethysm_core::strip::enumerate_chains;
use plethysm_core::verify::{self, VerifyReport, DEFAULT_DEGREE_CEILING};
use plethysm_core::{
    a_coefficients, b_coefficients, classify, pnhk_times_schur, waring, EPolynomial, Partition,
    SignedSchurExpansion, SkewShape, StripKind,
};

pub const FORMAT_VERSION: u32 = 1;

/// Environment variable that overrides the `verify --max-degree` ceiling.
pub const CEILING_VAR: &str = "PLETHYSM_MAX_DEGREE";

#[derive(Parser, Debug)]
#[command(name = "plethysm", version, about = "Exact plethystic Murnaghan-Nakayama expansions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Schur expansion of (p_n ∘ h_k) s_mu.
    Expand {
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Comma-separated parts; empty for the empty partition.
        #[arg(long, default_value = "", value_parser = partition)]
        mu: Partition,
    },
    /// Schur expansion of p_mu ∘ h_m or h_n ∘ h_m.
    Plethysm {
        #[command(subcommand)]
        kind: PlethysmKind,
    },
    /// Expansion of p_n ∘ e_k in products of elementary symmetric functions.
    Waring {
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, value_parser = positive)]
        k: usize,
    },
    /// Classify lambda/mu as an n-border strip of weight k.
    Classify {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, default_value = "", value_parser = partition)]
        mu: Partition,
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, value_parser = positive)]
        k: usize,
        /// Also list every strip chain with its spins.
        #[arg(long)]
        show_chains: bool,
    },
    /// Cross-check the three expansion methods up to a total degree.
    Verify {
        #[arg(long, default_value_t = DEFAULT_DEGREE_CEILING)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum PlethysmKind {
    /// p_mu ∘ h_m
    Ph {
        #[arg(long, default_value = "", value_parser = partition)]
        mu: Partition,
        #[arg(long, value_parser = positive)]
        m: usize,
    },
    /// h_n ∘ h_m
    Hh {
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, value_parser = positive)]
        m: usize,
    },
}

fn positive(text: &str) -> Result<usize, String> {
    match text.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn partition(text: &str) -> Result<Partition, String> {
    Partition::parse(text).map_err(|e| e.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub stages: Vec<Partition>,
    pub weights: Vec<usize>,
    pub spins: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub kind: StripKind,
    pub m_value: usize,
    pub sign: i32,
    pub det: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chains: Option<Vec<ChainReport>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum CommandResult {
    Schur(SignedSchurExpansion),
    Elementary(EPolynomial),
    Classification(ClassifyReport),
    Verification(VerifyReport),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub command: String,
    pub inputs: Value,
    pub result: CommandResult,
    pub format_version: u32,
}

impl OutputDocument {
    /// False only for a verification run that found a counterexample.
    pub fn succeeded(&self) -> bool {
        !matches!(&self.result, CommandResult::Verification(r) if !r.passed())
    }
}

/// Errors that abort a command before any result is produced.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

fn document(command: &str, inputs: Value, result: CommandResult) -> OutputDocument {
    OutputDocument { command: command.into(), inputs, result, format_version: FORMAT_VERSION }
}

/// The ceiling for `verify --max-degree`, taken from the environment when set.
pub fn degree_ceiling() -> Result<usize, CliError> {
    match std::env::var(CEILING_VAR) {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{CEILING_VAR} must be a non-negative integer, got {text:?}"))),
        Err(_) => Ok(DEFAULT_DEGREE_CEILING),
    }
}

pub fn execute(command: &Command) -> Result<OutputDocument, CliError> {
    match command {
        Command::Expand { n, k, mu } => {
            let result = pnhk_times_schur(*n, *k, mu);
            Ok(document("expand", json!({ "n": n, "k": k, "mu": mu }), CommandResult::Schur(result)))
        }
        Command::Plethysm { kind: PlethysmKind::Ph { mu, m } } => {
            let result = b_coefficients(mu, *m);
            Ok(document("plethysm ph", json!({ "mu": mu, "m": m }), CommandResult::Schur(result)))
        }
        Command::Plethysm { kind: PlethysmKind::Hh { n, m } } => {
            let result = a_coefficients(*n, *m).map_err(|e| CliError::Internal(e.to_string()))?;
            Ok(document("plethysm hh", json!({ "n": n, "m": m }), CommandResult::Schur(result)))
        }
        Command::Waring { n, k } => {
            Ok(document("waring", json!({ "n": n, "k": k }), CommandResult::Elementary(waring(*n, *k))))
        }
        Command::Classify { lambda, mu, n, k, show_chains } => {
            let shape = SkewShape::new(lambda.clone(), mu.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
            let class = classify(&shape, *n, *k).map_err(|e| match e {
                plethysm_core::Error::Inconsistent(_) => CliError::Internal(e.to_string()),
                _ => CliError::Usage(e.to_string()),
            })?;
            let d = det(&build_m(lambda, mu, *n).map_err(|e| CliError::Usage(e.to_string()))?);
            let chains = show_chains.then(|| {
                enumerate_chains(&shape, *n, false)
                    .into_iter()
                    .map(|c| ChainReport { spins: c.spins(), stages: c.stages, weights: c.weights })
                    .collect()
            });
            let report = ClassifyReport {
                kind: class.kind,
                m_value: class.m_value,
                sign: class.sign,
                det: d.to_i64().ok_or_else(|| CliError::Internal(format!("determinant {d} out of range")))?,
                chains,
            };
            let inputs = json!({ "lambda": lambda, "mu": mu, "n": n, "k": k, "show_chains": show_chains });
            Ok(document("classify", inputs, CommandResult::Classification(report)))
        }
        Command::Verify { max_degree, seed } => {
            let ceiling = degree_ceiling()?;
            if *max_degree > ceiling {
                return Err(CliError::Usage(format!(
                    "--max-degree {max_degree} exceeds the ceiling {ceiling} (set {CEILING_VAR} to raise it)"
                )));
            }
            let report = verify::run(*max_degree, *seed);
            Ok(document("verify", json!({ "max_degree": max_degree, "seed": seed }), CommandResult::Verification(report)))
        }
    }
}

fn signed(v: i64) -> String {
    match v {
        0 => "0".into(),
        v if v > 0 => format!("+{v}"),
        v => format!("\u{2212}{}", v.unsigned_abs()),
    }
}

fn render_text(doc: &OutputDocument) -> String {
    match &doc.result {
        CommandResult::Schur(e) => format!("{e}\n"),
        CommandResult::Elementary(e) => format!("{e}\n"),
        CommandResult::Classification(c) => {
            let mut out = String::new();
            let _ = writeln!(out, "kind: {:?}", c.kind);
            let _ = writeln!(out, "m: {}", c.m_value);
            let _ = writeln!(out, "sign: {}", signed(i64::from(c.sign)));
            let _ = writeln!(out, "det: {}", signed(c.det));
            if let Some(chains) = &c.chains {
                let _ = writeln!(out, "chains: {}", chains.len());
                for chain in chains {
                    let stages: Vec<String> = chain.stages.iter().map(ToString::to_string).collect();
                    let _ = writeln!(out, "  {}  weights {:?}  spins {:?}", stages.join(" \u{2282} "), chain.weights, chain.spins);
                }
            }
            out
        }
        CommandResult::Verification(r) => match &r.counterexample {
            None => format!("all checks passed ({} {})\n", r.cases, if r.cases == 1 { "case" } else { "cases" }),
            Some(bad) => format!(
                "counterexample after {} cases: n={} k={} mu={} lambda={}: determinant {}, straightening {}, oracle {}\n",
                r.cases, bad.n, bad.k, bad.mu, bad.lambda, bad.determinant, bad.straightening, bad.oracle
            ),
        },
    }
}

pub fn render(doc: &OutputDocument, format: Format) -> String {
    match format {
        Format::Text => render_text(doc),
        Format::Json => serde_json::to_string(doc).expect("output documents serialise") + "\n",
    }
}
