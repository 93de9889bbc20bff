//! Brute-force certification at desk scale.
//!
//! [`bfs_explore`] computes the breadth-first closure of a word set under
//! all substitutions whose results stay within a length cap, keying states
//! by their sorted multiset of canonical cyclic words. On small instances
//! this certifies that the greedy reduction really reaches the global
//! minimum and that all minimal forms behave alike.
//!
//! Exploration runs on a flat encoding of states (letter codes with word
//! separators) with precompiled substitution tables; tens of thousands of
//! states per second even on two-digit caps.

use alloc::collections::BTreeSet;
use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::criterion::check_a;
use crate::whitehead::{enumerate_moves, reduce, MoveKinds, MultiplierAction, WhiteheadMove};
use crate::words::{CyclicWord, Letter, TangencySet};
use crate::Error;

/// Default number of distinct states an exploration may visit.
pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

/// Exploration limits. A `length_cap` of `None` means "the initial total
/// length", which is always sufficient to find a minimal form: a reduction
/// path exists along which the length never increases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub length_cap: Option<usize>,
    pub node_budget: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            length_cap: None,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

/// Result of an exhaustive exploration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exploration {
    /// Least total length among all visited states.
    pub global_min_length: usize,
    /// Every visited state attaining the minimum, sorted.
    pub minimal_forms: Vec<TangencySet>,
    /// Number of distinct states visited.
    pub visited_count: usize,
}

/// Everything one certification pass establishes about an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certification {
    /// The exploration at the requested cap.
    pub exploration: Exploration,
    /// Greedy reduction reaches the exhaustive minimum.
    pub greedy_matches_minimum: bool,
    /// All minimal forms (found with two units of headroom) give the same
    /// occurrence-condition answer.
    pub minimal_forms_agree_on_condition: bool,
    /// All those minimal forms are mutually reachable through single moves
    /// that keep the length at the minimum.
    pub minimal_level_connected: bool,
}

// ---------------------------------------------------------------------------
// Flat state machinery.
//
// A state is the sorted multiset of canonical cyclic words, stored as
// `letter codes ... SEP letter codes ... SEP`. Words are sorted by code
// sequence, which keeps the encoding canonical.

const SEP: u16 = u16::MAX;

enum CompiledMove {
    /// Image code per letter code.
    Perm(Vec<u16>),
    /// Multiplier code plus per-letter insertion flags.
    Mult {
        a: u16,
        left: Vec<bool>,
        right: Vec<bool>,
    },
}

fn compile_moves(genus: usize) -> Vec<CompiledMove> {
    enumerate_moves(genus, MoveKinds::all())
        .iter()
        .map(|mv| match mv {
            WhiteheadMove::Permutation(p) => {
                let mut map = vec![0u16; 2 * genus];
                for (i, &img) in p.images().iter().enumerate() {
                    map[2 * i] = img.code() as u16;
                    map[2 * i + 1] = img.inverse().code() as u16;
                }
                CompiledMove::Perm(map)
            }
            WhiteheadMove::Multiplier(m) => {
                let a = m.multiplier();
                let mut right = vec![false; 2 * genus];
                let mut left = vec![false; 2 * genus];
                for (i, &action) in m.actions().iter().enumerate() {
                    if i == a.index() - 1 {
                        continue;
                    }
                    let (on_pos, on_neg) = match action {
                        MultiplierAction::Keep => (false, false),
                        MultiplierAction::Right => (true, false),
                        MultiplierAction::Left => (false, true),
                        MultiplierAction::Both => (true, true),
                    };
                    right[2 * i] = on_pos;
                    right[2 * i + 1] = on_neg;
                }
                for code in 0..2 * genus {
                    left[code] = right[code ^ 1];
                }
                CompiledMove::Mult {
                    a: a.code() as u16,
                    left,
                    right,
                }
            }
        })
        .collect()
}

fn least_rotation(word: &[u16]) -> usize {
    let n = word.len();
    if n <= 1 {
        return 0;
    }
    let at = |i: usize| word[i % n];
    let mut i = 0;
    let mut ans = 0;
    while i < n {
        ans = i;
        let mut j = i + 1;
        let mut k = i;
        while j < 2 * n && at(k) <= at(j) {
            if at(k) < at(j) {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            i += j - k;
        }
    }
    ans
}

#[derive(Default)]
struct Scratch {
    sub: Vec<u16>,
    red: Vec<u16>,
    words: Vec<Vec<u16>>,
    key: Vec<u16>,
}

/// Applies a compiled move to the words of a state, leaving the canonical
/// key in `scratch.key` and returning the total length.
fn apply_compiled(mv: &CompiledMove, words: &[&[u16]], scratch: &mut Scratch) -> usize {
    while scratch.words.len() < words.len() {
        scratch.words.push(Vec::new());
    }
    let mut total = 0usize;
    for (slot, w) in words.iter().enumerate() {
        let out = {
            match mv {
                CompiledMove::Perm(map) => {
                    // Bijective letter maps preserve reducedness.
                    scratch.red.clear();
                    scratch.red.extend(w.iter().map(|&c| map[c as usize]));
                    &scratch.red[..]
                }
                CompiledMove::Mult { a, left, right } => {
                    let ai = *a ^ 1;
                    scratch.sub.clear();
                    for &c in *w {
                        if left[c as usize] {
                            scratch.sub.push(ai);
                        }
                        scratch.sub.push(c);
                        if right[c as usize] {
                            scratch.sub.push(*a);
                        }
                    }
                    scratch.red.clear();
                    for &c in &scratch.sub {
                        if scratch.red.last() == Some(&(c ^ 1)) {
                            scratch.red.pop();
                        } else {
                            scratch.red.push(c);
                        }
                    }
                    let mut lo = 0;
                    let mut hi = scratch.red.len();
                    while hi - lo >= 2 && scratch.red[lo] == (scratch.red[hi - 1] ^ 1) {
                        lo += 1;
                        hi -= 1;
                    }
                    &scratch.red[lo..hi]
                }
            }
        };
        let start = least_rotation(out);
        let target = &mut scratch.words[slot];
        target.clear();
        target.extend_from_slice(&out[start..]);
        target.extend_from_slice(&out[..start]);
        total += target.len();
    }
    let active = &mut scratch.words[..words.len()];
    active.sort_unstable();
    scratch.key.clear();
    for w in active.iter() {
        scratch.key.extend_from_slice(w);
        scratch.key.push(SEP);
    }
    total
}

fn encode(words: &[CyclicWord]) -> Vec<u16> {
    let mut sorted: Vec<Vec<u16>> = words
        .iter()
        .map(|w| w.letters().iter().map(|l| l.code() as u16).collect())
        .collect();
    sorted.sort_unstable();
    let mut key = Vec::new();
    for w in sorted {
        key.extend_from_slice(&w);
        key.push(SEP);
    }
    key
}

fn decode(genus: usize, key: &[u16]) -> TangencySet {
    let words: Vec<CyclicWord> = key
        .split(|&c| c == SEP)
        .filter(|w| !w.is_empty())
        .map(|w| {
            CyclicWord::from_letters(w.iter().map(|&c| Letter::from_code(c as usize)).collect())
        })
        .collect();
    TangencySet::from_reduced(genus, words)
}

fn split_state(key: &[u16]) -> Vec<&[u16]> {
    key.split(|&c| c == SEP).filter(|w| !w.is_empty()).collect()
}

fn key_length(key: &[u16]) -> usize {
    key.iter().filter(|&&c| c != SEP).count()
}

/// The raw closure: all states within the cap, or an error past the budget.
fn explore_keys(
    s: &TangencySet,
    length_cap: usize,
    node_budget: usize,
) -> Result<BTreeSet<Vec<u16>>, Error> {
    assert!(
        s.length() <= length_cap,
        "length cap {} below the input length {}",
        length_cap,
        s.length()
    );
    let moves = compile_moves(s.genus());
    let mut scratch = Scratch::default();
    let start = encode(s.reduced());
    let mut visited: BTreeSet<Vec<u16>> = BTreeSet::new();
    visited.insert(start.clone());
    let mut frontier: VecDeque<Vec<u16>> = VecDeque::new();
    frontier.push_back(start);
    while let Some(state) = frontier.pop_front() {
        let words = split_state(&state);
        for mv in &moves {
            let total = apply_compiled(mv, &words, &mut scratch);
            if total > length_cap || visited.contains(&scratch.key) {
                continue;
            }
            if visited.len() >= node_budget {
                return Err(Error::BudgetExceeded {
                    visited: visited.len() + 1,
                    budget: node_budget,
                });
            }
            let key = scratch.key.clone();
            visited.insert(key.clone());
            frontier.push_back(key);
        }
    }
    Ok(visited)
}

fn exploration_from_keys(genus: usize, keys: &BTreeSet<Vec<u16>>) -> Exploration {
    let global_min_length = keys.iter().map(|k| key_length(k)).min().unwrap_or(0);
    let minimal_forms = keys
        .iter()
        .filter(|k| key_length(k) == global_min_length)
        .map(|k| decode(genus, k))
        .collect();
    Exploration {
        global_min_length,
        minimal_forms,
        visited_count: keys.len(),
    }
}

/// Breadth-first closure of `s` under all moves of both kinds, keeping
/// states whose total length stays within `length_cap`.
///
/// Errors with [`Error::BudgetExceeded`] once more than `node_budget`
/// distinct states are seen; that signals the instance is too large to
/// certify, not a wrong answer. Panics if `length_cap < s.length()`.
pub fn bfs_explore(
    s: &TangencySet,
    length_cap: usize,
    node_budget: usize,
) -> Result<Exploration, Error> {
    let keys = explore_keys(s, length_cap, node_budget)?;
    Ok(exploration_from_keys(s.genus(), &keys))
}

/// Runs the whole certification battery with as little re-exploration as
/// possible: one pass at the requested cap, a second widened pass only when
/// the connectivity headroom exceeds it.
pub fn certify(s: &TangencySet, caps: &Caps) -> Result<Certification, Error> {
    let cap = caps.length_cap.unwrap_or(0).max(s.length());
    let keys = explore_keys(s, cap, caps.node_budget)?;
    let exploration = exploration_from_keys(s.genus(), &keys);
    let min = exploration.global_min_length;

    let widened_cap = (min + 2).max(s.length());
    let widened_keys;
    let level_keys: &BTreeSet<Vec<u16>> = if widened_cap == cap {
        &keys
    } else {
        widened_keys = explore_keys(s, widened_cap, caps.node_budget)?;
        &widened_keys
    };
    let forms: BTreeSet<Vec<u16>> = level_keys
        .iter()
        .filter(|k| key_length(k) == min)
        .cloned()
        .collect();
    debug_assert!(!forms.is_empty());

    let minimal_level_connected = level_connected(s.genus(), min, &forms);
    let mut answers = forms.iter().map(|k| check_a(&decode(s.genus(), k)).0);
    let first = answers.next();
    let minimal_forms_agree_on_condition = match first {
        None => true,
        Some(first) => answers.all(|a| a == first),
    };
    let (s_min, _) = reduce(s);
    Ok(Certification {
        exploration,
        greedy_matches_minimum: s_min.length() == min,
        minimal_forms_agree_on_condition,
        minimal_level_connected,
    })
}

/// Walks the minimal level from one form using only length-preserving
/// moves; true when every form is reached.
fn level_connected(genus: usize, min: usize, forms: &BTreeSet<Vec<u16>>) -> bool {
    if forms.len() <= 1 {
        return true;
    }
    let moves = compile_moves(genus);
    let mut scratch = Scratch::default();
    let start = forms.iter().next().expect("nonempty").clone();
    let mut reached: BTreeSet<Vec<u16>> = BTreeSet::new();
    reached.insert(start.clone());
    let mut frontier: VecDeque<Vec<u16>> = VecDeque::new();
    frontier.push_back(start);
    while let Some(state) = frontier.pop_front() {
        let words = split_state(&state);
        for mv in &moves {
            let total = apply_compiled(mv, &words, &mut scratch);
            if total != min || reached.contains(&scratch.key) {
                continue;
            }
            debug_assert!(
                forms.contains(&scratch.key),
                "level walk left the explored minimum"
            );
            let key = scratch.key.clone();
            reached.insert(key.clone());
            frontier.push_back(key);
        }
    }
    reached.len() == forms.len()
}

/// True when the greedy reduction reaches the exhaustive minimum.
pub fn certify_greedy(s: &TangencySet, caps: &Caps) -> Result<bool, Error> {
    let cap = caps.length_cap.unwrap_or(0).max(s.length());
    let keys = explore_keys(s, cap, caps.node_budget)?;
    let min = keys.iter().map(|k| key_length(k)).min().unwrap_or(0);
    let (s_min, _) = reduce(s);
    Ok(s_min.length() == min)
}

/// True when every minimal form found with two units of headroom above the
/// minimum is reachable from every other through single moves that keep the
/// length at the minimum.
pub fn minimal_level_connectivity(s: &TangencySet, caps: &Caps) -> Result<bool, Error> {
    Ok(certify(s, caps)?.minimal_level_connected)
}
