use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tcurve_core::{apply, enumerate_moves, MoveKinds, TangencySet, WhiteheadMove, Word};

pub fn random_word(rng: &mut ChaCha8Rng, genus: usize, len: usize) -> Word {
    let ints: Vec<i32> = (0..len)
        .map(|_| {
            let idx = rng.gen_range(1..=genus as i32);
            if rng.gen_bool(0.5) {
                idx
            } else {
                -idx
            }
        })
        .collect();
    Word::from_ints(&ints)
}

/// A set with 1..=3 words whose raw total length stays within the budget.
pub fn random_set(rng: &mut ChaCha8Rng, max_genus: usize, max_total_len: usize) -> TangencySet {
    let genus = rng.gen_range(1..=max_genus);
    let word_count = rng.gen_range(1..=3usize);
    let mut words = Vec::new();
    let mut budget = max_total_len;
    for _ in 0..word_count {
        let len = rng.gen_range(0..=budget);
        budget -= len;
        words.push(random_word(rng, genus, len));
    }
    TangencySet::new(genus, words).unwrap()
}

pub fn random_move(rng: &mut ChaCha8Rng, genus: usize) -> WhiteheadMove {
    let moves = enumerate_moves(genus, MoveKinds::all());
    moves[rng.gen_range(0..moves.len())].clone()
}

/// A set that genuinely reduces: a small seed inflated by random moves while
/// the total length stays within the cap.
pub fn inflated_set(rng: &mut ChaCha8Rng, max_genus: usize, cap: usize) -> TangencySet {
    let mut s = random_set(rng, max_genus, cap.min(4));
    for _ in 0..6 {
        let mv = random_move(rng, s.genus());
        let next = apply(&mv, &s).expect("enumerated move fits");
        if next.length() <= cap {
            s = next;
        }
    }
    s
}
