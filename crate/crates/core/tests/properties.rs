//! Property-based checks of the algebraic laws everything else leans on:
//! the word action composes, the word-to-matrix map is a homomorphism,
//! images only shrink under longer words, and the text formats round-trip.

use proptest::prelude::*;
use synclab::dfa::{parse_dfa, Dfa, StateSet, Word};
use synclab::matrix::{matrix_of_word, RowMonoMatrix};
use synclab::span::{flatten, integer_rank, SpanBasis};

fn arb_dfa() -> impl Strategy<Value = Dfa> {
    (2usize..=6, 1usize..=3).prop_flat_map(|(n, k)| {
        proptest::collection::vec(proptest::collection::vec(0..n, k), n)
            .prop_map(move |delta| Dfa::new(n, k, delta).expect("targets in range"))
    })
}

fn arb_dfa_and_words() -> impl Strategy<Value = (Dfa, Word, Word)> {
    arb_dfa().prop_flat_map(|dfa| {
        let k = dfa.alphabet_size();
        let word = proptest::collection::vec(0..k, 0..12).prop_map(Word::new);
        (Just(dfa), word.clone(), word)
    })
}

proptest! {
    #[test]
    fn word_action_composes((dfa, u, v) in arb_dfa_and_words()) {
        let n = dfa.state_count();
        let uv = u.concat(&v);
        for q in 0..n {
            prop_assert_eq!(dfa.apply_word(dfa.apply_word(q, &u), &v), dfa.apply_word(q, &uv));
        }
        let full = StateSet::full(n);
        let via_both = dfa.apply_word_set(&dfa.apply_word_set(&full, &u), &v);
        prop_assert_eq!(via_both, dfa.apply_word_set(&full, &uv));
    }

    #[test]
    fn matrix_of_word_is_a_homomorphism((dfa, u, v) in arb_dfa_and_words()) {
        let prod = matrix_of_word(&dfa, &u).mat_mul(&matrix_of_word(&dfa, &v)).unwrap();
        prop_assert_eq!(prod, matrix_of_word(&dfa, &u.concat(&v)));
    }

    #[test]
    fn rank_equals_image_size((dfa, u, _v) in arb_dfa_and_words()) {
        let n = dfa.state_count();
        let image = dfa.apply_word_set(&StateSet::full(n), &u);
        prop_assert_eq!(matrix_of_word(&dfa, &u).rank(), image.len());
    }

    #[test]
    fn images_shrink_monotonically((dfa, u, v) in arb_dfa_and_words()) {
        let full = StateSet::full(dfa.state_count());
        let after_u = dfa.apply_word_set(&full, &u);
        let after_uv = dfa.apply_word_set(&full, &u.concat(&v));
        prop_assert!(after_uv.len() <= after_u.len());
    }

    #[test]
    fn dfa_text_round_trips(dfa in arb_dfa()) {
        let text = dfa.serialize();
        let parsed = parse_dfa(&text).expect("own serialization parses");
        prop_assert_eq!(parsed, dfa);
    }

    #[test]
    fn word_text_round_trips((dfa, u, _v) in arb_dfa_and_words()) {
        let k = dfa.alphabet_size();
        let parsed = Word::parse(&u.render(k), k).expect("own rendering parses");
        prop_assert_eq!(parsed, u);
    }

    #[test]
    fn span_dimension_matches_integer_rank((dfa, u, v) in arb_dfa_and_words()) {
        // the incremental basis and the one-shot fraction-free rank agree
        let words = [Word::empty(), u.clone(), v.clone(), u.concat(&v), v.concat(&u)];
        let mut basis = SpanBasis::new(dfa.state_count());
        let mut vectors = Vec::new();
        for w in &words {
            let m = matrix_of_word(&dfa, w);
            basis.try_insert(&m, w);
            vectors.push(flatten(&m));
        }
        prop_assert_eq!(basis.dimension(), integer_rank(&vectors));
    }

    #[test]
    fn identity_is_neutral(dfa in arb_dfa()) {
        let id = RowMonoMatrix::identity(dfa.state_count());
        let m = matrix_of_word(&dfa, &Word::new(vec![0]));
        prop_assert_eq!(id.mat_mul(&m).unwrap(), m.clone());
        prop_assert_eq!(m.mat_mul(&id).unwrap(), m);
    }
}
