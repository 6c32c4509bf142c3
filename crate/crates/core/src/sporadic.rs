//! Hand-entered extremal automata with shortest synchronizing word of length
//! exactly (n-1)^2: the Cerny C_3 member, the Cerny-Piricka-Rosenauerova
//! four-state automaton, Roman's five-state three-letter automaton, and
//! Kari's six-state automaton.
//!
//! The tables are data, never trusted blindly: audit tests replay each one
//! through the power-set oracle and check the expected length and strong
//! connectivity.

use crate::dfa::{cerny_family, Dfa};

pub struct SporadicExample {
    pub name: &'static str,
    pub dfa: Dfa,
    /// (n-1)^2 for the automaton's state count.
    pub expected_len: usize,
}

/// The curated table, in order of state count.
pub fn sporadic_examples() -> Vec<SporadicExample> {
    vec![
        SporadicExample {
            name: "cerny_3",
            dfa: cerny_family(3).expect("n = 3"),
            expected_len: 4,
        },
        SporadicExample {
            name: "cpr_4",
            dfa: Dfa::new(4, 2, rows(&[0, 2, 1, 1], &[3, 1, 0, 2])).expect("valid table"),
            expected_len: 9,
        },
        SporadicExample {
            name: "roman_5",
            dfa: Dfa::new(5, 3, rows3(ROMAN_A, ROMAN_B, ROMAN_C)).expect("valid table"),
            expected_len: 16,
        },
        SporadicExample {
            name: "kari_6",
            dfa: Dfa::new(6, 2, rows(&[0, 1, 2, 4, 3, 3], &[1, 3, 5, 0, 2, 4]))
                .expect("valid table"),
            expected_len: 25,
        },
    ]
}

pub fn sporadic_by_name(name: &str) -> Option<SporadicExample> {
    sporadic_examples().into_iter().find(|e| e.name == name)
}

// The unique (up to isomorphism) 5-state, 3-letter automaton at length 16 in
// which every letter is essential: dropping any single letter leaves a
// non-synchronizing automaton.
const ROMAN_A: &[usize] = &[0, 1, 2, 4, 3];
const ROMAN_B: &[usize] = &[0, 1, 3, 2, 2];
const ROMAN_C: &[usize] = &[2, 3, 0, 1, 4];

fn rows(a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
    a.iter().zip(b).map(|(&x, &y)| vec![x, y]).collect()
}

fn rows3(a: &[usize], b: &[usize], c: &[usize]) -> Vec<Vec<usize>> {
    a.iter().zip(b).zip(c).map(|((&x, &y), &z)| vec![x, y, z]).collect()
}
