//! Exhaustive desk-scale sweeps over every word below a size bound.

use tcurve_core::{Letter, Word};

/// Calls `f` with every word over `genus` generators of exactly `len`
/// letters.
fn for_each_word(genus: usize, len: usize, f: &mut impl FnMut(&Word)) {
    let width = 2 * genus;
    let mut codes = vec![0usize; len];
    loop {
        let letters: Vec<Letter> = codes
            .iter()
            .map(|&c| {
                let idx = c / 2 + 1;
                if c % 2 == 0 {
                    Letter::positive(idx)
                } else {
                    Letter::negative(idx)
                }
            })
            .collect();
        f(&Word::from_letters(letters));
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            codes[pos] += 1;
            if codes[pos] < width {
                break;
            }
            codes[pos] = 0;
        }
    }
}

#[test]
fn cyclic_reduce_idempotent_for_all_short_words() {
    // Rank 2 up to length 8 and rank 3 up to length 6, every single word.
    let scopes = [(1usize, 10usize), (2, 8), (3, 6)];
    let mut checked = 0u64;
    for (genus, max_len) in scopes {
        for len in 0..=max_len {
            for_each_word(genus, len, &mut |w| {
                let once = w.cyclic_reduce();
                assert_eq!(once.to_word().cyclic_reduce(), once, "word {w}");
                assert!(once.len() <= w.len());
                assert_eq!(once.len() % 2, w.len() % 2);
                checked += 1;
            });
        }
    }
    assert!(checked > 100_000);
}

#[test]
fn every_rotation_reduces_identically_for_all_short_words() {
    for len in 0..=6usize {
        for_each_word(2, len, &mut |w| {
            let reference = w.cyclic_reduce();
            for split in 0..w.len() {
                let mut rotated = w.letters()[split..].to_vec();
                rotated.extend_from_slice(&w.letters()[..split]);
                assert_eq!(
                    Word::from_letters(rotated).cyclic_reduce(),
                    reference,
                    "word {w}"
                );
            }
        });
    }
}

#[test]
fn fast_length_delta_equals_naive_application_for_all_short_rank2_words() {
    use tcurve_core::{apply, enumerate_moves, length_delta, MoveKinds, TangencySet};
    let moves = enumerate_moves(2, MoveKinds::all());
    for len in 0..=6usize {
        for_each_word(2, len, &mut |w| {
            let s = TangencySet::new(2, vec![w.clone()]).unwrap();
            for mv in &moves {
                let direct = apply(mv, &s).unwrap().length() as i64 - s.length() as i64;
                assert_eq!(length_delta(mv, &s).unwrap(), direct, "word {w}, move {mv}");
            }
        });
    }
}

#[test]
fn fast_length_delta_exhaustive_on_two_word_rank2_sets() {
    use tcurve_core::{apply, enumerate_moves, length_delta, MoveKinds, TangencySet, Word};
    let moves = enumerate_moves(2, MoveKinds::multipliers_only());
    let mut firsts: Vec<Word> = Vec::new();
    for len in 0..=3usize {
        for_each_word(2, len, &mut |w| firsts.push(w.clone()));
    }
    for a in &firsts {
        for b in &firsts {
            let s = TangencySet::new(2, vec![a.clone(), b.clone()]).unwrap();
            for mv in &moves {
                let direct = apply(mv, &s).unwrap().length() as i64 - s.length() as i64;
                assert_eq!(length_delta(mv, &s).unwrap(), direct, "set {s}, move {mv}");
            }
        }
    }
}
