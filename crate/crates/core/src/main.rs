//! Command-line surface: generate automata, solve for synchronizing words,
//! run the ascending chain, audit claims, and emit census reports.
//!
//! Exit codes: 0 on success, 1 when a solver is given a non-synchronizing
//! automaton (a structured report is still emitted), 2 on usage or parse
//! errors.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use synclab::audit::{audit_claims, claim_ids, AuditScope};
use synclab::census::extremal_census;
use synclab::chain::{run_chain, strategy_by_name, ChainOutcome, STRATEGY_NAMES};
use synclab::dfa::{cerny_family, parse_dfa, Dfa};
use synclab::oracle::{greedy_sync_word, shortest_sync_word};
use synclab::report::{
    render_audits, render_census, ChainReport, DimReport, GreedyReport, OracleReport,
    OutputFormat,
};
use synclab::span::span_dimension_of_all;
use synclab::sporadic::{sporadic_by_name, sporadic_examples};

#[derive(Parser)]
#[command(name = "synclab", version, about = "Synchronizing automata laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalArgs,
}

#[derive(Args)]
struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: FormatArg,
    /// Seed for every randomized population.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for enumeration scopes (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Chain step limit (default n(n-1)+1).
    #[arg(long, global = true)]
    step_limit: Option<usize>,
    /// Enumeration budget (max transition tables / matrices).
    #[arg(long, global = true, default_value_t = 1 << 22)]
    budget: u128,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(value: FormatArg) -> Self {
        match value {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit an automaton in the DFA text format.
    Gen {
        /// Family: "cerny" or "sporadic".
        family: String,
        /// State count (required for cerny).
        #[arg(long)]
        n: Option<usize>,
        /// Sporadic example name (cerny_3, cpr_4, roman_5, kari_6).
        #[arg(long)]
        name: Option<String>,
    },
    /// Exact shortest synchronizing word by power-set BFS.
    Oracle { input: Option<String> },
    /// Greedy pair-merging synchronizing word (non-minimal baseline).
    Greedy { input: Option<String> },
    /// Ascending-chain run with a full certificate.
    Chain {
        input: Option<String>,
        /// Extension scan order: depth-first | insertion | shortest-first.
        #[arg(long, default_value = "depth-first")]
        strategy: String,
    },
    /// Audit paper claims; optionally restrict to named claims.
    Audit {
        /// Claim ids to run (default: all). Use --list to see them.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
        /// Print the registered claim ids and exit.
        #[arg(long)]
        list: bool,
        /// Trials per sampled property.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Exhaustive extremal census over all n-state k-letter tables.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Dimension of the span of all row monomial n x k matrices.
    Dim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.global.workers)
            .build_global()
            .ok();
    }
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let format: OutputFormat = cli.global.format.into();
    let (body, code) = match cli.command {
        Command::Gen { family, n, name } => (gen_report(&family, n, name.as_deref())?, 0),
        Command::Oracle { input } => {
            let dfa = read_automaton(input.as_deref())?;
            let res = shortest_sync_word(&dfa, cli.global.budget.min(u64::MAX as u128) as u64)
                .map_err(|e| e.to_string())?;
            let code = if res.is_synchronizing() { 0 } else { 1 };
            (OracleReport::new(&dfa, &res).render(format), code)
        }
        Command::Greedy { input } => {
            let dfa = read_automaton(input.as_deref())?;
            let word = greedy_sync_word(&dfa);
            let code = if word.is_some() { 0 } else { 1 };
            (GreedyReport::new(&dfa, word.as_ref()).render(format), code)
        }
        Command::Chain { input, strategy } => {
            let dfa = read_automaton(input.as_deref())?;
            let strategy = strategy_by_name(&strategy).ok_or_else(|| {
                format!("unknown strategy {:?}; available: {}", strategy, STRATEGY_NAMES.join(", "))
            })?;
            let n = dfa.state_count();
            let limit = cli.global.step_limit.unwrap_or(n * (n - 1) + 1);
            let cert = run_chain(&dfa, limit, strategy.as_ref());
            let code = match cert.outcome {
                ChainOutcome::Synchronized(_) => 0,
                _ => 1,
            };
            (ChainReport::new(&dfa, &cert).render(format), code)
        }
        Command::Audit { claims, list, trials } => {
            if list {
                (claim_ids().join("\n") + "\n", 0)
            } else {
                let scope = AuditScope {
                    trials,
                    budget: cli.global.budget,
                    ..Default::default()
                };
                let select = if claims.is_empty() { None } else { Some(claims.as_slice()) };
                let reports = audit_claims(&scope, cli.global.seed, select);
                if let Some(names) = select {
                    for name in names {
                        if !reports.iter().any(|r| &r.claim == name) {
                            return Err(format!("unknown claim {:?}", name));
                        }
                    }
                }
                (render_audits(&reports, format), 0)
            }
        }
        Command::Census { n, k } => {
            let census = extremal_census(n, k, cli.global.budget).map_err(|e| e.to_string())?;
            (render_census(&census, format), 0)
        }
        Command::Dim { n, k } => {
            let dimension =
                span_dimension_of_all(n, k, cli.global.budget).map_err(|e| e.to_string())?;
            let report =
                DimReport { n, k, dimension, formula: if k >= 2 { n * (k - 1) + 1 } else { 1 } };
            (report.render(format), 0)
        }
    };

    match &cli.global.out {
        Some(path) => fs::write(path, &body).map_err(|e| format!("write {:?}: {}", path, e))?,
        None => print!("{}", body),
    }
    Ok(ExitCode::from(code))
}

fn gen_report(family: &str, n: Option<usize>, name: Option<&str>) -> Result<String, String> {
    match family {
        "cerny" => {
            let n = n.ok_or("gen cerny requires --n")?;
            let dfa = cerny_family(n).map_err(|e| e.to_string())?;
            Ok(dfa.serialize())
        }
        "sporadic" => match name {
            Some(name) => {
                let example =
                    sporadic_by_name(name).ok_or_else(|| format!("unknown example {:?}", name))?;
                Ok(example.dfa.serialize())
            }
            None => {
                let mut out = String::new();
                for example in sporadic_examples() {
                    out.push_str(&format!(
                        "# {} (expected shortest word length {})\n{}",
                        example.name,
                        example.expected_len,
                        example.dfa.serialize()
                    ));
                }
                Ok(out)
            }
        },
        other => Err(format!("unknown family {:?}; use cerny or sporadic", other)),
    }
}

fn read_automaton(input: Option<&str>) -> Result<Dfa, String> {
    let text = match input {
        None | Some("-") => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| format!("reading stdin: {}", e))?;
            buffer
        }
        Some(path) => fs::read_to_string(path).map_err(|e| format!("reading {:?}: {}", path, e))?,
    };
    parse_dfa(&text).map_err(|e| e.to_string())
}
