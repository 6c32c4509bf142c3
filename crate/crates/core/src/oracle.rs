//! Ground-truth oracles: exact shortest synchronizing words by breadth-first
//! search on the power-set automaton, and a greedy pair-merging baseline.

use thiserror::Error;

use crate::dfa::{Dfa, StateSet, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("power-set search needs 2^{n} subsets, over the limit {limit}")]
    StateCountTooLarge { n: usize, limit: u64 },
}

/// Result of the exact shortest-word search. `length`/`witness` are absent
/// for non-synchronizing automata; `explored` counts visited subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub length: Option<usize>,
    pub witness: Option<Word>,
    pub explored: usize,
}

impl OracleResult {
    pub fn is_synchronizing(&self) -> bool {
        self.length.is_some()
    }
}

/// Minimal synchronizing word by level-order BFS from the full state set.
/// Deterministic given the letter order; the witness is reconstructed from
/// parent pointers and is minimal by the BFS level property.
pub fn shortest_sync_word(dfa: &Dfa, subset_limit: u64) -> Result<OracleResult, OracleError> {
    let n = dfa.state_count();
    let k = dfa.alphabet_size();
    if n > 63 || 1u64 << n > subset_limit {
        return Err(OracleError::StateCountTooLarge { n, limit: subset_limit });
    }
    let full: u64 = (1u64 << n) - 1;
    if n == 1 {
        return Ok(OracleResult { length: Some(0), witness: Some(Word::empty()), explored: 1 });
    }

    let size = 1usize << n;
    // parent[mask] = (parent mask, letter); usize::MAX marks unvisited
    let mut parent: Vec<(u64, usize)> = vec![(u64::MAX, usize::MAX); size];
    let mut cur: Vec<u64> = vec![full];
    parent[full as usize] = (full, usize::MAX);
    let mut explored = 1usize;

    let image = |mask: u64, a: usize| -> u64 {
        let mut im = 0u64;
        let mut m = mask;
        while m != 0 {
            let q = m.trailing_zeros() as usize;
            im |= 1u64 << dfa.step(q, a);
            m &= m - 1;
        }
        im
    };

    let reconstruct = |parent: &[(u64, usize)], mut mask: u64| -> Word {
        let mut letters = Vec::new();
        while mask != full {
            let (p, a) = parent[mask as usize];
            letters.push(a);
            mask = p;
        }
        letters.reverse();
        Word::new(letters)
    };

    let mut level = 0usize;
    while !cur.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for &mask in &cur {
            for a in 0..k {
                let im = image(mask, a);
                if parent[im as usize].1 == usize::MAX && im != full {
                    parent[im as usize] = (mask, a);
                    explored += 1;
                    if im.count_ones() == 1 {
                        let witness = reconstruct(&parent, im);
                        debug_assert_eq!(witness.len(), level);
                        return Ok(OracleResult {
                            length: Some(level),
                            witness: Some(witness),
                            explored,
                        });
                    }
                    next.push(im);
                }
            }
        }
        cur = next;
    }
    Ok(OracleResult { length: None, witness: None, explored })
}

/// True iff the automaton is synchronizing: every pair of states can be
/// merged (classic pair-automaton criterion, no power-set search).
pub fn is_synchronizing(dfa: &Dfa) -> bool {
    let n = dfa.state_count();
    if n == 1 {
        return true;
    }
    let k = dfa.alphabet_size();
    // mergeable[p][q]: pair {p,q} reaches a singleton; backward closure from
    // pairs that merge in one letter
    let idx = |p: usize, q: usize| p * n + q;
    let mut mergeable = vec![false; n * n];
    // fixpoint: a pair is mergeable if some letter sends it to equal states
    // or to an already-mergeable pair
    loop {
        let mut grew = false;
        for p in 0..n {
            for q in (p + 1)..n {
                if mergeable[idx(p, q)] {
                    continue;
                }
                for a in 0..k {
                    let (mut x, mut y) = (dfa.step(p, a), dfa.step(q, a));
                    if x > y {
                        std::mem::swap(&mut x, &mut y);
                    }
                    if x == y || mergeable[idx(x, y)] {
                        mergeable[idx(p, q)] = true;
                        grew = true;
                        break;
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    (0..n).all(|p| ((p + 1)..n).all(|q| mergeable[idx(p, q)]))
}

/// Greedy pair-merging baseline: repeatedly find, by BFS over state pairs,
/// a shortest word merging some pair of the current image set, until a
/// singleton remains. Returns a (generally non-minimal) synchronizing word,
/// or None when the automaton is not synchronizing.
pub fn greedy_sync_word(dfa: &Dfa) -> Option<Word> {
    let n = dfa.state_count();
    if n == 1 {
        return Some(Word::empty());
    }
    let k = dfa.alphabet_size();
    let mut current = StateSet::full(n);
    let mut result = Word::empty();

    while !current.is_singleton() {
        // BFS over pairs, seeded with all pairs inside the current set
        let idx = |p: usize, q: usize| p * n + q;
        let mut parent: Vec<Option<(usize, usize, usize)>> = vec![None; n * n];
        let mut queue: std::collections::VecDeque<(usize, usize)> = Default::default();
        let states: Vec<usize> = current.iter().collect();
        for (i, &p) in states.iter().enumerate() {
            for &q in &states[i + 1..] {
                if parent[idx(p, q)].is_none() {
                    parent[idx(p, q)] = Some((usize::MAX, usize::MAX, usize::MAX));
                    queue.push_back((p, q));
                }
            }
        }
        let mut merge: Option<(usize, usize)> = None;
        'bfs: while let Some((p, q)) = queue.pop_front() {
            for a in 0..k {
                let (mut x, mut y) = (dfa.step(p, a), dfa.step(q, a));
                if x == y {
                    // reconstruct the merging word ending with letter a
                    let mut letters = vec![a];
                    let (mut cp, mut cq) = (p, q);
                    while let Some((pp, qq, pa)) = parent[idx(cp, cq)] {
                        if pp == usize::MAX {
                            break;
                        }
                        letters.push(pa);
                        cp = pp;
                        cq = qq;
                    }
                    letters.reverse();
                    result = result.concat(&Word::new(letters));
                    merge = Some((p, q));
                    break 'bfs;
                }
                if x > y {
                    std::mem::swap(&mut x, &mut y);
                }
                if parent[idx(x, y)].is_none() {
                    parent[idx(x, y)] = Some((p, q, a));
                    queue.push_back((x, y));
                }
            }
        }
        merge?;
        current = dfa.apply_word_set(&StateSet::full(n), &result);
    }
    Some(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfa::cerny_family;

    #[test]
    fn cerny_3_oracle_length_4() {
        let c3 = cerny_family(3).unwrap();
        let res = shortest_sync_word(&c3, 1 << 20).unwrap();
        assert_eq!(res.length, Some(4));
        let w = res.witness.unwrap();
        assert_eq!(w.len(), 4);
        assert!(c3.apply_word_set(&StateSet::full(3), &w).is_singleton());
    }

    #[test]
    fn cerny_4_oracle_length_9() {
        let c4 = cerny_family(4).unwrap();
        let res = shortest_sync_word(&c4, 1 << 20).unwrap();
        assert_eq!(res.length, Some(9));
    }

    #[test]
    fn permutation_automaton_is_not_synchronizing() {
        let dfa = Dfa::new(2, 1, vec![vec![1], vec![0]]).unwrap();
        let res = shortest_sync_word(&dfa, 1 << 20).unwrap();
        assert_eq!(res.length, None);
        assert_eq!(res.witness, None);
        assert!(!is_synchronizing(&dfa));
        assert_eq!(greedy_sync_word(&dfa), None);
    }

    use crate::dfa::Dfa;

    #[test]
    fn oracle_rejects_oversized_state_count() {
        let c3 = cerny_family(3).unwrap();
        assert_eq!(
            shortest_sync_word(&c3, 4),
            Err(OracleError::StateCountTooLarge { n: 3, limit: 4 })
        );
    }

    #[test]
    fn one_state_oracle_is_trivial() {
        let dfa = Dfa::new(1, 1, vec![vec![0]]).unwrap();
        let res = shortest_sync_word(&dfa, 1 << 20).unwrap();
        assert_eq!(res.length, Some(0));
        assert_eq!(res.witness, Some(Word::empty()));
        assert_eq!(greedy_sync_word(&dfa), Some(Word::empty()));
    }

    #[test]
    fn greedy_synchronizes_cerny_3() {
        let c3 = cerny_family(3).unwrap();
        let w = greedy_sync_word(&c3).unwrap();
        assert!(c3.apply_word_set(&StateSet::full(3), &w).is_singleton());
        assert!(w.len() >= 4); // never beats the oracle
    }

    #[test]
    fn greedy_never_beats_oracle_on_cerny_family() {
        for n in 2..=6 {
            let dfa = cerny_family(n).unwrap();
            let oracle = shortest_sync_word(&dfa, 1 << 20).unwrap();
            let greedy = greedy_sync_word(&dfa).unwrap();
            assert!(dfa.apply_word_set(&StateSet::full(n), &greedy).is_singleton());
            assert!(greedy.len() >= oracle.length.unwrap());
        }
    }
}
