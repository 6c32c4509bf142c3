//! synclab: a laboratory for synchronizing deterministic finite automata.
//!
//! The crate provides complete-DFA machinery and a text format, row monomial
//! matrices of words, exact-arithmetic linear spans with the ascending-chain
//! construction, exhaustive oracles for shortest synchronizing words, and an
//! auditor that measures classical lemmas and bounds on desk-scale
//! populations.

pub mod audit;
pub mod census;
pub mod chain;
pub mod dfa;
pub mod enumerate;
pub mod matrix;
pub mod oracle;
pub mod report;
pub mod span;
pub mod sporadic;

pub use dfa::{cerny_family, parse_dfa, Dfa, StateSet, Word};
pub use matrix::{matrix_of_word, RowMonoMatrix};
pub use oracle::{greedy_sync_word, shortest_sync_word, OracleResult};
pub use span::{span_dimension_of_all, SpanBasis};
