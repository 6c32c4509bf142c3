//! Complete deterministic finite automata, words acting on states, and the
//! text format used by every report.
//!
//! States are 0-indexed. Letters are indexed `0..k` and rendered `'a'..'z'`
//! in text output when the alphabet fits; larger alphabets use the
//! comma-separated form `w:0,1,0`.

use std::fmt;

use thiserror::Error;

pub type State = usize;
pub type Letter = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DfaError {
    #[error("line {line}: expected header \"dfa <n> <k>\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: expected {expected} targets, found {found}")]
    WrongRowWidth { line: usize, expected: usize, found: usize },
    #[error("expected {expected} transition rows, found {found}")]
    WrongRowCount { expected: usize, found: usize },
    #[error("line {line}: out-of-range target state {value} (n = {n})")]
    OutOfRangeTarget { line: usize, value: usize, n: usize },
    #[error("line {line}: invalid transition entry {text:?}")]
    BadCell { line: usize, text: String },
    #[error("state count must be at least 1")]
    EmptyStateSet,
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,
    #[error("cerny family requires n >= 2, got {0}")]
    CernyTooSmall(usize),
    #[error("state sets support at most 64 states, got {0}")]
    TooManyStates(usize),
    #[error("invalid word {text:?} for alphabet of size {k}")]
    BadWord { text: String, k: usize },
}

/// A complete deterministic finite automaton: `delta[q][a]` is the target of
/// state `q` under letter `a`. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    n: usize,
    k: usize,
    delta: Vec<Vec<State>>,
}

impl Dfa {
    pub fn new(n: usize, k: usize, delta: Vec<Vec<State>>) -> Result<Self, DfaError> {
        if n == 0 {
            return Err(DfaError::EmptyStateSet);
        }
        if k == 0 {
            return Err(DfaError::EmptyAlphabet);
        }
        if delta.len() != n {
            return Err(DfaError::WrongRowCount { expected: n, found: delta.len() });
        }
        for (q, row) in delta.iter().enumerate() {
            if row.len() != k {
                return Err(DfaError::WrongRowWidth {
                    line: q + 2,
                    expected: k,
                    found: row.len(),
                });
            }
            for &t in row {
                if t >= n {
                    return Err(DfaError::OutOfRangeTarget { line: q + 2, value: t, n });
                }
            }
        }
        Ok(Dfa { n, k, delta })
    }

    pub fn state_count(&self) -> usize {
        self.n
    }

    pub fn alphabet_size(&self) -> usize {
        self.k
    }

    pub fn step(&self, q: State, a: Letter) -> State {
        self.delta[q][a]
    }

    /// Flattened transition table, state-major: entry `q * k + a`.
    pub fn flat_table(&self) -> Vec<State> {
        self.delta.iter().flatten().copied().collect()
    }

    /// Left-to-right action of a word on a single state.
    pub fn apply_word(&self, q: State, w: &Word) -> State {
        w.letters().iter().fold(q, |s, &a| self.delta[s][a])
    }

    /// Image of a state set under a word; never grows.
    pub fn apply_word_set(&self, set: &StateSet, w: &Word) -> StateSet {
        let mut cur = *set;
        for &a in w.letters() {
            let mut next = StateSet::empty(self.n);
            for q in cur.iter() {
                next.insert(self.delta[q][a]);
            }
            cur = next;
        }
        cur
    }

    /// True iff every state reaches every state along labeled edges.
    pub fn is_strongly_connected(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        // forward reachability from 0, then reachability to 0 via reversed edges
        let forward = self.reachable(0, false);
        let backward = self.reachable(0, true);
        forward.iter().zip(backward.iter()).all(|(&f, &b)| f && b)
    }

    fn reachable(&self, start: State, reversed: bool) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut rev_edges: Vec<Vec<State>> = Vec::new();
        if reversed {
            rev_edges = vec![Vec::new(); self.n];
            for q in 0..self.n {
                for a in 0..self.k {
                    rev_edges[self.delta[q][a]].push(q);
                }
            }
        }
        while let Some(q) = stack.pop() {
            if reversed {
                for &p in &rev_edges[q] {
                    if !seen[p] {
                        seen[p] = true;
                        stack.push(p);
                    }
                }
            } else {
                for a in 0..self.k {
                    let t = self.delta[q][a];
                    if !seen[t] {
                        seen[t] = true;
                        stack.push(t);
                    }
                }
            }
        }
        seen
    }

    /// Canonical text form: `dfa <n> <k>` header plus one row per state.
    pub fn serialize(&self) -> String {
        let mut out = format!("dfa {} {}\n", self.n, self.k);
        for row in &self.delta {
            let cells: Vec<String> = row.iter().map(|t| t.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// Parse the DFA text format. `#` starts a comment line; blank lines are
/// skipped; errors carry the 1-based line number of the offending input line.
pub fn parse_dfa(text: &str) -> Result<Dfa, DfaError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(DfaError::MalformedHeader { line: 1 })?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("dfa") {
        return Err(DfaError::MalformedHeader { line: header_line });
    }
    let n: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or(DfaError::MalformedHeader { line: header_line })?;
    let k: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or(DfaError::MalformedHeader { line: header_line })?;
    if parts.next().is_some() {
        return Err(DfaError::MalformedHeader { line: header_line });
    }
    if n == 0 {
        return Err(DfaError::EmptyStateSet);
    }
    if k == 0 {
        return Err(DfaError::EmptyAlphabet);
    }

    let mut delta: Vec<Vec<State>> = Vec::with_capacity(n);
    for (line, row_text) in lines {
        if delta.len() == n {
            return Err(DfaError::WrongRowCount { expected: n, found: n + 1 });
        }
        let mut row = Vec::with_capacity(k);
        for cell in row_text.split_whitespace() {
            let value: usize = cell
                .parse()
                .map_err(|_| DfaError::BadCell { line, text: cell.to_string() })?;
            if value >= n {
                return Err(DfaError::OutOfRangeTarget { line, value, n });
            }
            row.push(value);
        }
        if row.len() != k {
            return Err(DfaError::WrongRowWidth { line, expected: k, found: row.len() });
        }
        delta.push(row);
    }
    if delta.len() != n {
        return Err(DfaError::WrongRowCount { expected: n, found: delta.len() });
    }
    Dfa::new(n, k, delta)
}

/// The Černý automaton C_n: letter `a` is the full cycle `q -> q+1 mod n`,
/// letter `b` sends state 0 to 1 and fixes every other state. Its shortest
/// synchronizing word has length (n-1)^2.
pub fn cerny_family(n: usize) -> Result<Dfa, DfaError> {
    if n < 2 {
        return Err(DfaError::CernyTooSmall(n));
    }
    let delta = (0..n)
        .map(|q| vec![(q + 1) % n, if q == 0 { 1 } else { q }])
        .collect();
    Dfa::new(n, 2, delta)
}

/// A finite sequence of letters acting on states in reading order.
/// The empty word is the identity action.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// This word followed by one extra letter.
    pub fn extended(&self, a: Letter) -> Word {
        let mut letters = self.letters.clone();
        letters.push(a);
        Word { letters }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Text rendering: `'a'..'z'` for alphabets up to 26 letters, otherwise
    /// the comma-separated integer form `w:0,1,0`. Empty word renders as "".
    pub fn render(&self, k: usize) -> String {
        if k <= 26 {
            self.letters.iter().map(|&a| (b'a' + a as u8) as char).collect()
        } else {
            let cells: Vec<String> = self.letters.iter().map(|a| a.to_string()).collect();
            format!("w:{}", cells.join(","))
        }
    }

    pub fn parse(text: &str, k: usize) -> Result<Word, DfaError> {
        let bad = || DfaError::BadWord { text: text.to_string(), k };
        if let Some(rest) = text.strip_prefix("w:") {
            if rest.is_empty() {
                return Ok(Word::empty());
            }
            let letters = rest
                .split(',')
                .map(|c| c.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            if letters.iter().any(|&a| a >= k) {
                return Err(bad());
            }
            return Ok(Word::new(letters));
        }
        if k > 26 {
            return Err(bad());
        }
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            if !c.is_ascii_lowercase() {
                return Err(bad());
            }
            let a = (c as u8 - b'a') as usize;
            if a >= k {
                return Err(bad());
            }
            letters.push(a);
        }
        Ok(Word { letters })
    }
}

/// Subset of the states of an n-state automaton, n <= 64, as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StateSet {
    bits: u64,
    n: usize,
}

impl StateSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= 64, "StateSet supports at most 64 states");
        StateSet { bits: 0, n }
    }

    pub fn full(n: usize) -> Self {
        assert!(n >= 1 && n <= 64, "StateSet supports 1..=64 states");
        let bits = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        StateSet { bits, n }
    }

    pub fn from_states(n: usize, states: &[State]) -> Self {
        let mut set = StateSet::empty(n);
        for &q in states {
            set.insert(q);
        }
        set
    }

    pub fn from_bits(n: usize, bits: u64) -> Self {
        let mut set = StateSet::empty(n);
        set.bits = bits & StateSet::full(n).bits;
        set
    }

    pub fn insert(&mut self, q: State) {
        debug_assert!(q < self.n);
        self.bits |= 1 << q;
    }

    pub fn contains(&self, q: State) -> bool {
        q < self.n && self.bits >> q & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_singleton(&self) -> bool {
        self.len() == 1
    }

    pub fn is_subset_of(&self, other: &StateSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = State> + '_ {
        (0..self.n).filter(move |&q| self.bits >> q & 1 == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_smallest_automaton() {
        let dfa = parse_dfa("dfa 1 1\n0").unwrap();
        assert_eq!(dfa.state_count(), 1);
        assert_eq!(dfa.alphabet_size(), 1);
        assert_eq!(dfa.step(0, 0), 0);
    }

    #[test]
    fn parse_rejects_out_of_range_target() {
        let err = parse_dfa("dfa 2 1\n5\n0").unwrap_err();
        assert_eq!(err, DfaError::OutOfRangeTarget { line: 2, value: 5, n: 2 });
    }

    #[test]
    fn parse_rejects_bad_header() {
        assert!(matches!(parse_dfa("nfa 2 1\n0\n0"), Err(DfaError::MalformedHeader { line: 1 })));
        assert!(matches!(parse_dfa(""), Err(DfaError::MalformedHeader { line: 1 })));
    }

    #[test]
    fn parse_rejects_wrong_row_count() {
        assert_eq!(
            parse_dfa("dfa 3 1\n0\n1"),
            Err(DfaError::WrongRowCount { expected: 3, found: 2 })
        );
    }

    #[test]
    fn parse_skips_comments() {
        let dfa = parse_dfa("# Cerny C_2\ndfa 2 2\n1 1\n0 1\n").unwrap();
        assert_eq!(dfa, cerny_family(2).unwrap());
    }

    #[test]
    fn cerny_3_round_trips() {
        let c3 = cerny_family(3).unwrap();
        assert_eq!(c3.step(0, 0), 1);
        assert_eq!(c3.step(2, 0), 0);
        assert_eq!(c3.step(0, 1), 1);
        assert_eq!(c3.step(1, 1), 1);
        assert_eq!(c3.step(2, 1), 2);
        assert_eq!(parse_dfa(&c3.serialize()).unwrap(), c3);
    }

    #[test]
    fn cerny_2_table() {
        let c2 = cerny_family(2).unwrap();
        assert_eq!(c2.flat_table(), vec![1, 1, 0, 1]);
    }

    #[test]
    fn cerny_rejects_n_below_2() {
        assert_eq!(cerny_family(1), Err(DfaError::CernyTooSmall(1)));
    }

    #[test]
    fn apply_word_on_cerny_3() {
        let c3 = cerny_family(3).unwrap();
        assert_eq!(c3.apply_word(0, &Word::empty()), 0);
        assert_eq!(c3.apply_word(2, &Word::new(vec![0])), 0);
        assert_eq!(c3.apply_word(0, &Word::new(vec![0, 1])), 1);
    }

    #[test]
    fn apply_word_set_shrinks() {
        let c3 = cerny_family(3).unwrap();
        let full = StateSet::full(3);
        assert_eq!(c3.apply_word_set(&full, &Word::empty()), full);
        let pair = StateSet::from_states(3, &[0, 1]);
        let image = c3.apply_word_set(&pair, &Word::new(vec![1]));
        assert_eq!(image, StateSet::from_states(3, &[1]));
    }

    #[test]
    fn strong_connectivity() {
        assert!(cerny_family(5).unwrap().is_strongly_connected());
        let sink = Dfa::new(2, 1, vec![vec![0], vec![0]]).unwrap();
        assert!(!sink.is_strongly_connected());
        let swap = Dfa::new(2, 2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(swap.is_strongly_connected());
    }

    #[test]
    fn word_rendering_round_trips() {
        let w = Word::new(vec![0, 1, 0, 2]);
        assert_eq!(w.render(3), "abac");
        assert_eq!(Word::parse("abac", 3).unwrap(), w);
        assert_eq!(w.render(30), "w:0,1,0,2");
        assert_eq!(Word::parse("w:0,1,0,2", 30).unwrap(), w);
        assert!(Word::parse("abz", 3).is_err());
        assert_eq!(Word::parse("", 3).unwrap(), Word::empty());
    }
}
