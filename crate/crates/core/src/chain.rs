//! Ascending chain of spans W_0 ⊂ W_1 ⊂ ... driven by one-letter extensions
//! of generator words, with a full audit trail per run.
//!
//! W_0 is generated by the identity matrix M_ε (rank n). Each step picks a
//! generator word u and letter β whose matrix M_{uβ} is independent of the
//! current span, admits it, and records the step, until an admitted matrix
//! has rank 1 (its word synchronizes). Greedy admission orders can paint
//! themselves into a corner — fill the span with rank ≥ 2 matrices and
//! stall even though another order would have reached rank 1 — so
//! `run_chain` backtracks: it reports `exhausted` only when no admissible
//! admission order ends in a rank-1 matrix.

use std::collections::HashSet;

use crate::dfa::{Dfa, Letter, Word};
use crate::matrix::{matrix_of_letter, RowMonoMatrix};
use crate::span::SpanBasis;

/// One admitted generator: the extended word, the appended letter, the
/// matrix image, |R(word)| and the span dimension after insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub word: Word,
    pub letter: Letter,
    pub img: Vec<usize>,
    pub rank: usize,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainOutcome {
    Synchronized(Word),
    Exhausted,
    StepLimit,
}

impl ChainOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            ChainOutcome::Synchronized(_) => "synchronized",
            ChainOutcome::Exhausted => "exhausted",
            ChainOutcome::StepLimit => "step_limit",
        }
    }

    pub fn sync_word(&self) -> Option<&Word> {
        match self {
            ChainOutcome::Synchronized(w) => Some(w),
            _ => None,
        }
    }
}

/// Audit trail of one chain run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCertificate {
    pub steps: Vec<ChainStep>,
    pub outcome: ChainOutcome,
    /// Set for the paper's excluded trivial instances (n <= 2, one-letter
    /// alphabets, constant letters); the run still proceeds.
    pub notice: Option<String>,
    /// Chain states examined by the backtracking search; a search-effort
    /// diagnostic, not part of the certificate's mathematical content.
    pub search_nodes: usize,
}

/// Order in which generator words are offered to the extension search.
/// Strategies are interchangeable and selected by name at runtime.
pub trait ExtensionStrategy: Sync {
    fn name(&self) -> &'static str;
    /// Indices into the frontier, in the order they should be scanned.
    fn scan_order(&self, frontier: &[(Word, RowMonoMatrix)]) -> Vec<usize>;
}

/// Newest generator first: extends the latest admitted matrix when possible,
/// matching the path sequence M_i = M_{i-1}β_{i-1}. The default: depth growth
/// is what lets a rank-1 word matrix appear before the span fills up.
pub struct DepthFirst;

impl ExtensionStrategy for DepthFirst {
    fn name(&self) -> &'static str {
        "depth-first"
    }

    fn scan_order(&self, frontier: &[(Word, RowMonoMatrix)]) -> Vec<usize> {
        (0..frontier.len()).rev().collect()
    }
}

/// Generators in insertion order (oldest first). Fills the span breadth-first
/// and routinely exhausts it before reaching any rank-1 matrix; kept for
/// experiments on how scan order shapes the certificate.
pub struct InsertionOrder;

impl ExtensionStrategy for InsertionOrder {
    fn name(&self) -> &'static str {
        "insertion"
    }

    fn scan_order(&self, frontier: &[(Word, RowMonoMatrix)]) -> Vec<usize> {
        (0..frontier.len()).collect()
    }
}

/// Shortest generator words first, ties broken by insertion order; tends to
/// produce shorter chain words.
pub struct ShortestWordFirst;

impl ExtensionStrategy for ShortestWordFirst {
    fn name(&self) -> &'static str {
        "shortest-first"
    }

    fn scan_order(&self, frontier: &[(Word, RowMonoMatrix)]) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..frontier.len()).collect();
        idx.sort_by_key(|&i| frontier[i].0.len());
        idx
    }
}

pub const STRATEGY_NAMES: &[&str] = &["depth-first", "insertion", "shortest-first"];

pub fn strategy_by_name(name: &str) -> Option<Box<dyn ExtensionStrategy>> {
    match name {
        "depth-first" => Some(Box::new(DepthFirst)),
        "insertion" => Some(Box::new(InsertionOrder)),
        "shortest-first" => Some(Box::new(ShortestWordFirst)),
        _ => None,
    }
}

/// Find a generator-letter pair (u, β) whose matrix M_{uβ} is independent of
/// the basis, admit it, and return it. An independent rank-1 candidate is
/// taken ahead of anything else (its word synchronizes, so the run can end);
/// otherwise the strategy's scan order decides, letters in alphabet order,
/// first success wins. Returns None when no pair extends the span.
pub fn chain_extend(
    dfa: &Dfa,
    basis: &mut SpanBasis,
    frontier: &[(Word, RowMonoMatrix)],
    strategy: &dyn ExtensionStrategy,
) -> Option<(Word, Letter, RowMonoMatrix)> {
    let letters: Vec<RowMonoMatrix> =
        (0..dfa.alphabet_size()).map(|a| matrix_of_letter(dfa, a)).collect();
    let order = strategy.scan_order(frontier);
    for &i in &order {
        let (word, matrix) = &frontier[i];
        for (a, ml) in letters.iter().enumerate() {
            let candidate = matrix.mat_mul(ml).expect("frontier matrices match dfa dimension");
            if candidate.rank() == 1 && basis.try_insert(&candidate, &word.extended(a)) {
                return Some((word.clone(), a, candidate));
            }
        }
    }
    for &i in &order {
        let (word, matrix) = &frontier[i];
        for (a, ml) in letters.iter().enumerate() {
            let candidate = matrix.mat_mul(ml).expect("frontier matrices match dfa dimension");
            let extended = word.extended(a);
            if basis.try_insert(&candidate, &extended) {
                return Some((word.clone(), a, candidate));
            }
        }
    }
    None
}

/// Default step limit: the ambient dimension ceiling n(n-1)+1.
pub fn default_step_limit(n: usize) -> usize {
    n * (n - 1) + 1
}

/// Node allowance for the backtracking search. Large enough to fully explore
/// every n <= 4 chain space (C_4 needs 3312 nodes) and to find the chains
/// that exist at desk scale; searches that would not finish promptly are
/// truncated and reported as step_limit rather than exhausted.
const SEARCH_NODE_BUDGET: usize = 20_000;

struct ChainSearch<'a> {
    letters: Vec<RowMonoMatrix>,
    strategy: &'a dyn ExtensionStrategy,
    step_limit: usize,
    nodes: usize,
    truncated: bool,
    /// First maximal path seen, kept as the certificate when no chain
    /// reaches a rank-1 admission.
    first_dead_end: Option<Vec<ChainStep>>,
    /// Sets of admitted matrices already explored; the future of a chain
    /// state depends only on that set, not on the words behind it.
    visited: HashSet<Vec<Vec<usize>>>,
}

impl ChainSearch<'_> {
    /// Depth-first over admissible extensions; greedy path first, backtrack
    /// on dead ends. Returns the steps of a chain ending in a rank-1
    /// admission, if one exists within the limits.
    fn search(
        &mut self,
        basis: &SpanBasis,
        frontier: &[(Word, RowMonoMatrix)],
        steps: &mut Vec<ChainStep>,
    ) -> Option<Vec<ChainStep>> {
        if steps.len() >= self.step_limit {
            self.truncated = true;
            if self.first_dead_end.is_none() {
                self.first_dead_end = Some(steps.clone());
            }
            return None;
        }
        let mut children: Vec<(Word, Letter, RowMonoMatrix)> = Vec::new();
        for &i in &self.strategy.scan_order(frontier) {
            let (word, matrix) = &frontier[i];
            for (a, ml) in self.letters.iter().enumerate() {
                let candidate =
                    matrix.mat_mul(ml).expect("frontier matrices match dfa dimension");
                if basis.contains(&candidate) {
                    continue;
                }
                if candidate.rank() == 1 {
                    // admissible rank-1 candidate: the chain ends here
                    let mut done = steps.clone();
                    let mut b = basis.clone();
                    let extended = word.extended(a);
                    b.try_insert(&candidate, &extended);
                    done.push(ChainStep {
                        word: extended,
                        letter: a,
                        img: candidate.img().to_vec(),
                        rank: 1,
                        dimension: b.dimension(),
                    });
                    return Some(done);
                }
                children.push((word.clone(), a, candidate));
            }
        }
        if children.is_empty() && self.first_dead_end.is_none() {
            self.first_dead_end = Some(steps.clone());
        }
        // matrices closer to rank 1 first; stable, so the strategy's scan
        // order still breaks ties
        children.sort_by_key(|(_, _, m)| m.rank());
        for (word, letter, matrix) in children {
            let mut key: Vec<Vec<usize>> =
                frontier.iter().map(|(_, m)| m.img().to_vec()).collect();
            key.push(matrix.img().to_vec());
            key.sort();
            if !self.visited.insert(key) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > SEARCH_NODE_BUDGET {
                self.truncated = true;
                return None;
            }
            let extended = word.extended(letter);
            let mut b = basis.clone();
            b.try_insert(&matrix, &extended);
            steps.push(ChainStep {
                word: extended.clone(),
                letter,
                img: matrix.img().to_vec(),
                rank: matrix.rank(),
                dimension: b.dimension(),
            });
            let mut f = frontier.to_vec();
            f.push((extended, matrix));
            if let Some(done) = self.search(&b, &f, steps) {
                return Some(done);
            }
            steps.pop();
        }
        None
    }
}

pub fn run_chain(dfa: &Dfa, step_limit: usize, strategy: &dyn ExtensionStrategy) -> ChainCertificate {
    let n = dfa.state_count();
    let notice = degenerate_notice(dfa);

    if n == 1 {
        // already rank 1: the empty word synchronizes
        return ChainCertificate {
            steps: Vec::new(),
            outcome: ChainOutcome::Synchronized(Word::empty()),
            notice,
            search_nodes: 0,
        };
    }

    let mut basis = SpanBasis::new(n);
    let identity = RowMonoMatrix::identity(n);
    basis.try_insert(&identity, &Word::empty());
    let frontier: Vec<(Word, RowMonoMatrix)> = vec![(Word::empty(), identity)];

    let mut search = ChainSearch {
        letters: (0..dfa.alphabet_size()).map(|a| matrix_of_letter(dfa, a)).collect(),
        strategy,
        step_limit,
        nodes: 0,
        truncated: false,
        first_dead_end: None,
        visited: HashSet::new(),
    };
    let mut steps = Vec::new();
    match search.search(&basis, &frontier, &mut steps) {
        Some(steps) => {
            let word = steps.last().expect("successful chain has steps").word.clone();
            ChainCertificate {
                steps,
                outcome: ChainOutcome::Synchronized(word),
                notice,
                search_nodes: search.nodes,
            }
        }
        None => ChainCertificate {
            steps: search.first_dead_end.unwrap_or_default(),
            outcome: if search.truncated {
                ChainOutcome::StepLimit
            } else {
                ChainOutcome::Exhausted
            },
            notice,
            search_nodes: search.nodes,
        },
    }
}

/// Run with defaults: depth-first scanning, ambient step limit.
pub fn run_chain_default(dfa: &Dfa) -> ChainCertificate {
    run_chain(dfa, default_step_limit(dfa.state_count()), &DepthFirst)
}

fn degenerate_notice(dfa: &Dfa) -> Option<String> {
    let mut reasons = Vec::new();
    if dfa.state_count() <= 2 {
        reasons.push(format!("n = {} <= 2", dfa.state_count()));
    }
    if dfa.alphabet_size() == 1 {
        reasons.push("single-letter alphabet".to_string());
    }
    for a in 0..dfa.alphabet_size() {
        if matrix_of_letter(dfa, a).rank() == 1 {
            let letter = Word::new(vec![a]).render(dfa.alphabet_size());
            reasons.push(format!("letter '{}' is constant", letter));
            break;
        }
    }
    if reasons.is_empty() {
        None
    } else {
        Some(format!("degenerate instance: {}", reasons.join("; ")))
    }
}
