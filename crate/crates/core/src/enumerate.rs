//! Exhaustive enumeration of small complete DFAs with optional filtering and
//! isomorphism canonicalization (simultaneous state relabeling and letter
//! permutation, lexicographically least transition table wins).

use thiserror::Error;

use crate::dfa::Dfa;
use crate::oracle::is_synchronizing;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("enumeration of {size} transition tables exceeds budget {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DfaFilter {
    All,
    StronglyConnected,
    Synchronizing,
    /// Strongly connected and synchronizing.
    Both,
}

impl DfaFilter {
    pub fn accepts(&self, dfa: &Dfa) -> bool {
        match self {
            DfaFilter::All => true,
            DfaFilter::StronglyConnected => dfa.is_strongly_connected(),
            DfaFilter::Synchronizing => is_synchronizing(dfa),
            DfaFilter::Both => dfa.is_strongly_connected() && is_synchronizing(dfa),
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

/// Lexicographically least flat table over all n!·k! relabelings.
/// Brute force is fine at the enumeration scales this artifact targets.
pub fn canonical_key(dfa: &Dfa) -> Vec<usize> {
    let n = dfa.state_count();
    let k = dfa.alphabet_size();
    let mut best: Option<Vec<usize>> = None;
    for p in permutations(n) {
        let mut pinv = vec![0usize; n];
        for (i, &pi) in p.iter().enumerate() {
            pinv[pi] = i;
        }
        for q in permutations(k) {
            let mut flat = Vec::with_capacity(n * k);
            for s in 0..n {
                for l in 0..k {
                    flat.push(p[dfa.step(pinv[s], q[l])]);
                }
            }
            if best.as_ref().map_or(true, |b| flat < *b) {
                best = Some(flat);
            }
        }
    }
    best.unwrap()
}

pub fn is_canonical(dfa: &Dfa) -> bool {
    dfa.flat_table() == canonical_key(dfa)
}

/// Build the dfa whose flat (state-major) table is the base-n expansion of
/// `code`, most significant digit first.
pub fn dfa_from_code(n: usize, k: usize, mut code: u128) -> Dfa {
    let cells = n * k;
    let mut flat = vec![0usize; cells];
    for slot in (0..cells).rev() {
        flat[slot] = (code % n as u128) as usize;
        code /= n as u128;
    }
    let delta: Vec<Vec<usize>> = flat.chunks(k).map(|c| c.to_vec()).collect();
    Dfa::new(n, k, delta).expect("digits are valid states")
}

pub fn table_space_size(n: usize, k: usize) -> u128 {
    (n as u128).pow((n * k) as u32)
}

/// Stream every n-state, k-letter transition table passing the filter, in
/// table order. With `canonical`, exactly one representative per isomorphism
/// class is yielded (the lexicographically least table).
pub fn enumerate_dfas(
    n: usize,
    k: usize,
    filter: DfaFilter,
    canonical: bool,
    budget: u128,
) -> Result<impl Iterator<Item = Dfa>, EnumError> {
    let size = table_space_size(n, k);
    if size > budget {
        return Err(EnumError::BudgetExceeded { size, budget });
    }
    Ok((0..size).map(move |code| dfa_from_code(n, k, code)).filter(move |dfa| {
        (!canonical || is_canonical(dfa)) && filter.accepts(dfa)
    }))
}
