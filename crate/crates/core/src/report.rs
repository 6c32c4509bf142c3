//! Report types and renderers for the CLI: every report echoes the input
//! automaton in canonical text form so results replay standalone. Text mode
//! emits aligned tables, JSON follows the schemas shipped under schemas/,
//! CSV uses RFC-style quoting.

use serde::Serialize;

use crate::audit::AuditReport;
use crate::census::CensusRecord;
use crate::chain::{ChainCertificate, ChainOutcome};
use crate::dfa::Dfa;
use crate::oracle::OracleResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub automaton: String,
    pub synchronizing: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub explored: usize,
}

impl OracleReport {
    pub fn new(dfa: &Dfa, res: &OracleResult) -> Self {
        OracleReport {
            automaton: dfa.serialize(),
            synchronizing: res.is_synchronizing(),
            length: res.length,
            witness: res.witness.as_ref().map(|w| w.render(dfa.alphabet_size())),
            explored: res.explored,
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => pretty_json(self),
            OutputFormat::Csv => {
                csv_rows(
                    &["synchronizing", "length", "witness", "explored", "automaton"],
                    &[vec![
                        self.synchronizing.to_string(),
                        opt(self.length),
                        self.witness.clone().unwrap_or_default(),
                        self.explored.to_string(),
                        self.automaton.clone(),
                    ]],
                )
            }
            OutputFormat::Text => {
                let mut out = echo_automaton(&self.automaton);
                match self.length {
                    Some(len) => {
                        out.push_str(&format!(
                            "synchronizing: yes\nshortest word length: {}\nwitness: {}\n",
                            len,
                            self.witness.as_deref().unwrap_or("")
                        ));
                    }
                    None => out.push_str("synchronizing: no\n"),
                }
                out.push_str(&format!("subsets explored: {}\n", self.explored));
                out
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GreedyReport {
    pub automaton: String,
    pub synchronizing: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
}

impl GreedyReport {
    pub fn new(dfa: &Dfa, word: Option<&crate::dfa::Word>) -> Self {
        GreedyReport {
            automaton: dfa.serialize(),
            synchronizing: word.is_some(),
            length: word.map(|w| w.len()),
            word: word.map(|w| w.render(dfa.alphabet_size())),
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => pretty_json(self),
            OutputFormat::Csv => csv_rows(
                &["synchronizing", "length", "word", "automaton"],
                &[vec![
                    self.synchronizing.to_string(),
                    opt(self.length),
                    self.word.clone().unwrap_or_default(),
                    self.automaton.clone(),
                ]],
            ),
            OutputFormat::Text => {
                let mut out = echo_automaton(&self.automaton);
                match &self.word {
                    Some(w) => out.push_str(&format!(
                        "synchronizing: yes\ngreedy word length: {}\nword: {}\n",
                        self.length.unwrap_or(0),
                        w
                    )),
                    None => out.push_str("synchronizing: no\n"),
                }
                out
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainStepReport {
    pub word: String,
    pub letter: String,
    pub rank: usize,
    pub dimension: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainReport {
    pub automaton: String,
    pub steps: Vec<ChainStepReport>,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sync_word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
}

impl ChainReport {
    pub fn new(dfa: &Dfa, cert: &ChainCertificate) -> Self {
        let k = dfa.alphabet_size();
        ChainReport {
            automaton: dfa.serialize(),
            steps: cert
                .steps
                .iter()
                .map(|s| ChainStepReport {
                    word: s.word.render(k),
                    letter: crate::dfa::Word::new(vec![s.letter]).render(k),
                    rank: s.rank,
                    dimension: s.dimension,
                })
                .collect(),
            outcome: cert.outcome.label().to_string(),
            sync_word: match &cert.outcome {
                ChainOutcome::Synchronized(w) => Some(w.render(k)),
                _ => None,
            },
            notice: cert.notice.clone(),
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => pretty_json(self),
            OutputFormat::Csv => {
                let rows: Vec<Vec<String>> = self
                    .steps
                    .iter()
                    .map(|s| {
                        vec![
                            s.word.clone(),
                            s.letter.clone(),
                            s.rank.to_string(),
                            s.dimension.to_string(),
                        ]
                    })
                    .collect();
                csv_rows(&["word", "letter", "rank", "dimension"], &rows)
            }
            OutputFormat::Text => {
                let mut out = echo_automaton(&self.automaton);
                if let Some(n) = &self.notice {
                    out.push_str(&format!("notice: {}\n", n));
                }
                out.push_str(&format!(
                    "{:<16} {:<8} {:>4} {:>9}\n",
                    "word", "letter", "rank", "dimension"
                ));
                for s in &self.steps {
                    out.push_str(&format!(
                        "{:<16} {:<8} {:>4} {:>9}\n",
                        s.word, s.letter, s.rank, s.dimension
                    ));
                }
                out.push_str(&format!("outcome: {}\n", self.outcome));
                if let Some(w) = &self.sync_word {
                    out.push_str(&format!("sync word: {} (length {})\n", w, w_len(w)));
                }
                out
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DimReport {
    pub n: usize,
    pub k: usize,
    pub dimension: usize,
    /// n(k-1)+1, the value the dimension is expected to attain for k >= 2.
    pub formula: usize,
}

impl DimReport {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => pretty_json(self),
            OutputFormat::Csv => csv_rows(
                &["n", "k", "dimension", "formula"],
                &[vec![
                    self.n.to_string(),
                    self.k.to_string(),
                    self.dimension.to_string(),
                    self.formula.to_string(),
                ]],
            ),
            OutputFormat::Text => format!(
                "n: {}\nk: {}\nspan dimension: {}\nn(k-1)+1: {}\n",
                self.n, self.k, self.dimension, self.formula
            ),
        }
    }
}

pub fn render_audits(reports: &[AuditReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => pretty_json(&reports),
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.claim.clone(),
                        verdict_label(r),
                        r.trials.to_string(),
                        r.violations.len().to_string(),
                        r.population.clone(),
                    ]
                })
                .collect();
            csv_rows(&["claim", "verdict", "trials", "violations", "population"], &rows)
        }
        OutputFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "{:<26} {:<14} {:>9} {:>10}\n",
                "claim", "verdict", "trials", "violations"
            ));
            for r in reports {
                out.push_str(&format!(
                    "{:<26} {:<14} {:>9} {:>10}\n",
                    r.claim,
                    verdict_label(r),
                    r.trials,
                    r.violations.len()
                ));
            }
            out
        }
    }
}

fn verdict_label(r: &AuditReport) -> String {
    serde_json::to_value(r.verdict)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

pub fn render_census(census: &CensusRecord, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => pretty_json(census),
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = census
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.automaton.clone(),
                        r.strongly_connected.to_string(),
                        r.oracle_len.to_string(),
                        r.chain_outcome.clone(),
                        opt(r.chain_len),
                        r.bound.to_string(),
                    ]
                })
                .collect();
            csv_rows(
                &["automaton", "strongly_connected", "oracle_len", "chain_outcome", "chain_len", "bound"],
                &rows,
            )
        }
        OutputFormat::Text => {
            let mut out = format!(
                "census n={} k={}: {} tables, {} canonical, {} synchronizing\n",
                census.n, census.k, census.total_tables, census.canonical_count, census.sync_count
            );
            out.push_str(&format!(
                "bound (n-1)^2 = {}; max oracle length = {}; extremal automata: {}\n",
                census.bound,
                opt(census.max_oracle_len),
                census.extremal_count
            ));
            out.push_str(&format!(
                "{:>10} {:>6} {:>13} {:>9} {:>6}\n",
                "oracle_len", "chain", "outcome", "connected", "bound"
            ));
            for r in &census.rows {
                out.push_str(&format!(
                    "{:>10} {:>6} {:>13} {:>9} {:>6}\n",
                    r.oracle_len,
                    opt(r.chain_len),
                    r.chain_outcome,
                    r.strongly_connected,
                    r.bound
                ));
            }
            out
        }
    }
}

fn pretty_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn csv_rows(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).expect("csv header");
    for row in rows {
        writer.write_record(row).expect("csv row");
    }
    String::from_utf8(writer.into_inner().expect("flush")).expect("utf8")
}

fn echo_automaton(text: &str) -> String {
    let mut out = String::new();
    for line in text.lines() {
        out.push_str("| ");
        out.push_str(line);
        out.push('\n');
    }
    out
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "-".to_string())
}

fn w_len(rendered: &str) -> usize {
    if let Some(rest) = rendered.strip_prefix("w:") {
        if rest.is_empty() {
            0
        } else {
            rest.split(',').count()
        }
    } else {
        rendered.chars().count()
    }
}
