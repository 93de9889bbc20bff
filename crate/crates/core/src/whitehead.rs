//! Whitehead substitutions and the greedy length-minimizing reduction.
//!
//! Two kinds of substitution act on a word set. A [`PermutationMove`] sends
//! each generator to a (possibly inverted) generator, bijectively; it never
//! changes lengths. A [`MultiplierMove`] fixes one letter `a` (the
//! multiplier) and rewrites every other generator `x_i` to one of `x_i`,
//! `x_i a`, `a^-1 x_i` or `a^-1 x_i a`; occurrences of `x_i^-1` are rewritten
//! to the formal inverse of the replacement. Both kinds are invertible.
//!
//! Repeatedly applying the multiplier move that shrinks the total length the
//! most drives any set to a minimal form: when no single substitution shrinks
//! a set, no sequence of substitutions can either.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::words::{CyclicWord, Letter, TangencySet};
use crate::Error;

/// How a multiplier move rewrites one generator.
///
/// With multiplier `a`, the images of `x_i` are `x_i`, `x_i a`, `a^-1 x_i`
/// and `a^-1 x_i a` respectively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MultiplierAction {
    Keep,
    Right,
    Left,
    Both,
}

impl MultiplierAction {
    const ALL: [MultiplierAction; 4] = [
        MultiplierAction::Keep,
        MultiplierAction::Right,
        MultiplierAction::Left,
        MultiplierAction::Both,
    ];

    fn acquires_right(self) -> bool {
        matches!(self, MultiplierAction::Right | MultiplierAction::Both)
    }

    fn acquires_left(self) -> bool {
        matches!(self, MultiplierAction::Left | MultiplierAction::Both)
    }
}

/// A multiplier substitution: fixes `multiplier` and its inverse, rewrites
/// every other generator according to `actions` (indexed by generator,
/// 1-based index `i` at position `i - 1`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiplierMove {
    multiplier: Letter,
    actions: Vec<MultiplierAction>,
}

impl MultiplierMove {
    /// Panics if the multiplier's own slot is not `Keep` or its index
    /// exceeds the implied genus.
    pub fn new(multiplier: Letter, actions: Vec<MultiplierAction>) -> Self {
        assert!(
            multiplier.index() <= actions.len(),
            "multiplier must name a generator within the genus"
        );
        assert_eq!(
            actions[multiplier.index() - 1],
            MultiplierAction::Keep,
            "a multiplier move fixes its own generator"
        );
        MultiplierMove {
            multiplier,
            actions,
        }
    }

    pub fn multiplier(&self) -> Letter {
        self.multiplier
    }

    pub fn actions(&self) -> &[MultiplierAction] {
        &self.actions
    }

    pub fn genus(&self) -> usize {
        self.actions.len()
    }

    fn action_of(&self, index: usize) -> MultiplierAction {
        self.actions[index - 1]
    }

    /// Whether an occurrence of `letter` acquires the multiplier on its
    /// right after substitution.
    fn right_of(&self, letter: Letter) -> bool {
        if letter.index() == self.multiplier.index() {
            return false;
        }
        let action = self.action_of(letter.index());
        if letter.is_positive() {
            action.acquires_right()
        } else {
            // x_i^-1 maps to the inverse of x_i's image.
            action.acquires_left()
        }
    }

    /// Whether an occurrence of `letter` acquires the inverse multiplier on
    /// its left. By inverse-coherence this equals `right_of(letter^-1)`.
    fn left_of(&self, letter: Letter) -> bool {
        self.right_of(letter.inverse())
    }

    fn substitute_into(&self, letter: Letter, out: &mut Vec<Letter>) {
        if self.left_of(letter) {
            out.push(self.multiplier.inverse());
        }
        out.push(letter);
        if self.right_of(letter) {
            out.push(self.multiplier);
        }
    }
}

/// A signed permutation of the generators: `x_i` maps to `images[i-1]`,
/// `x_i^-1` to its inverse.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermutationMove {
    images: Vec<Letter>,
}

impl PermutationMove {
    /// Panics unless the images' indices form a bijection of `1..=g`.
    pub fn new(images: Vec<Letter>) -> Self {
        let g = images.len();
        let mut seen = vec![false; g];
        for l in &images {
            assert!(l.index() <= g, "image index out of range");
            assert!(!seen[l.index() - 1], "images must be a bijection");
            seen[l.index() - 1] = true;
        }
        PermutationMove { images }
    }

    pub fn images(&self) -> &[Letter] {
        &self.images
    }

    pub fn genus(&self) -> usize {
        self.images.len()
    }

    fn image(&self, letter: Letter) -> Letter {
        let base = self.images[letter.index() - 1];
        if letter.is_positive() {
            base
        } else {
            base.inverse()
        }
    }

    fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &l)| l == Letter::positive(i + 1))
    }
}

/// A type-(1) signed permutation or a type-(2) multiplier substitution.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WhiteheadMove {
    Permutation(PermutationMove),
    Multiplier(MultiplierMove),
}

impl WhiteheadMove {
    pub fn genus(&self) -> usize {
        match self {
            WhiteheadMove::Permutation(p) => p.genus(),
            WhiteheadMove::Multiplier(m) => m.genus(),
        }
    }

    /// The substitution undoing this one.
    pub fn inverse(&self) -> WhiteheadMove {
        match self {
            WhiteheadMove::Permutation(p) => {
                let mut images = vec![Letter::positive(1); p.genus()];
                for (i, &l) in p.images.iter().enumerate() {
                    // x_i -> x_j^s inverts to x_j -> x_i^s.
                    images[l.index() - 1] = if l.is_positive() {
                        Letter::positive(i + 1)
                    } else {
                        Letter::negative(i + 1)
                    };
                }
                WhiteheadMove::Permutation(PermutationMove::new(images))
            }
            WhiteheadMove::Multiplier(m) => {
                // Same action table with the multiplier inverted: x_i a then
                // x_i a^-1 restores, and likewise on the left.
                WhiteheadMove::Multiplier(MultiplierMove::new(
                    m.multiplier.inverse(),
                    m.actions.clone(),
                ))
            }
        }
    }
}

impl fmt::Display for WhiteheadMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WhiteheadMove::Permutation(p) => {
                write!(f, "permutation:")?;
                let mut any = false;
                for (i, &l) in p.images.iter().enumerate() {
                    if l == Letter::positive(i + 1) {
                        continue;
                    }
                    write!(f, "{} x{} -> {}", if any { "," } else { "" }, i + 1, l)?;
                    any = true;
                }
                if !any {
                    write!(f, " identity")?;
                }
                Ok(())
            }
            WhiteheadMove::Multiplier(m) => {
                write!(f, "multiplier {}:", m.multiplier)?;
                let mut any = false;
                for (i, &action) in m.actions.iter().enumerate() {
                    if action == MultiplierAction::Keep {
                        continue;
                    }
                    let x = Letter::positive(i + 1);
                    let a = m.multiplier;
                    write!(f, "{} {x} -> ", if any { "," } else { "" })?;
                    match action {
                        MultiplierAction::Keep => unreachable!(),
                        MultiplierAction::Right => write!(f, "{x} {a}")?,
                        MultiplierAction::Left => write!(f, "{} {x}", a.inverse())?,
                        MultiplierAction::Both => write!(f, "{} {x} {a}", a.inverse())?,
                    }
                    any = true;
                }
                if !any {
                    write!(f, " identity")?;
                }
                Ok(())
            }
        }
    }
}

/// Which kinds of move to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveKinds {
    pub permutations: bool,
    pub multipliers: bool,
}

impl MoveKinds {
    pub fn all() -> Self {
        MoveKinds {
            permutations: true,
            multipliers: true,
        }
    }

    pub fn permutations_only() -> Self {
        MoveKinds {
            permutations: true,
            multipliers: false,
        }
    }

    pub fn multipliers_only() -> Self {
        MoveKinds {
            permutations: false,
            multipliers: true,
        }
    }
}

/// Every non-identity move of the requested kinds, duplicate-free, in a
/// fixed deterministic order: permutations first (image tuples in
/// lexicographic order), then multiplier moves (multiplier letters in letter
/// order, action tables in lexicographic `Keep < Right < Left < Both`
/// order).
///
/// There are `2^g g! - 1` permutation moves and `2g (4^(g-1) - 1)`
/// multiplier moves.
pub fn enumerate_moves(genus: usize, kinds: MoveKinds) -> Vec<WhiteheadMove> {
    let mut moves = Vec::new();
    if kinds.permutations {
        enumerate_permutations(genus, &mut moves);
    }
    if kinds.multipliers {
        enumerate_multipliers(genus, &mut moves);
    }
    moves
}

fn enumerate_permutations(genus: usize, out: &mut Vec<WhiteheadMove>) {
    let mut indices: Vec<usize> = (1..=genus).collect();
    let mut chosen = Vec::with_capacity(genus);
    permute_rec(genus, &mut indices, &mut chosen, out);
}

fn permute_rec(
    genus: usize,
    indices: &mut Vec<usize>,
    chosen: &mut Vec<usize>,
    out: &mut Vec<WhiteheadMove>,
) {
    if chosen.len() == genus {
        for mask in 0..(1u64 << genus) {
            let images: Vec<Letter> = chosen
                .iter()
                .enumerate()
                .map(|(i, &idx)| {
                    if mask & (1 << i) == 0 {
                        Letter::positive(idx)
                    } else {
                        Letter::negative(idx)
                    }
                })
                .collect();
            let p = PermutationMove::new(images);
            if !p.is_identity() {
                out.push(WhiteheadMove::Permutation(p));
            }
        }
        return;
    }
    // Pick remaining indices in increasing order for a lexicographic walk.
    for k in 0..indices.len() {
        let idx = indices.remove(k);
        chosen.push(idx);
        permute_rec(genus, indices, chosen, out);
        chosen.pop();
        indices.insert(k, idx);
    }
}

fn enumerate_multipliers(genus: usize, out: &mut Vec<WhiteheadMove>) {
    for code in 0..2 * genus {
        let multiplier = Letter::from_code(code);
        let own = multiplier.index() - 1;
        let slots: Vec<usize> = (0..genus).filter(|&i| i != own).collect();
        let tables = 4usize.pow(slots.len() as u32);
        // Table 0 is the all-Keep identity; skip it.
        for n in 1..tables {
            let mut actions = vec![MultiplierAction::Keep; genus];
            let mut rem = n;
            for &slot in slots.iter().rev() {
                actions[slot] = MultiplierAction::ALL[rem % 4];
                rem /= 4;
            }
            out.push(WhiteheadMove::Multiplier(MultiplierMove::new(
                multiplier, actions,
            )));
        }
    }
}

/// Substitutes into every word, cyclically reduces and canonicalizes.
///
/// The number of nonempty words is preserved (substitutions cannot kill a
/// nontrivial conjugacy class), and so is the number of inessential raw
/// words: the result describes the same curves read differently.
///
/// Errors with [`Error::GenusMismatch`] when the move's rank differs from
/// the set's.
pub fn apply(mv: &WhiteheadMove, s: &TangencySet) -> Result<TangencySet, Error> {
    if mv.genus() != s.genus() {
        return Err(Error::GenusMismatch {
            move_genus: mv.genus(),
            set_genus: s.genus(),
        });
    }
    let words = apply_to_cyclic(mv, s.reduced());
    debug_assert_eq!(
        words.len(),
        s.reduced().len(),
        "substitution must preserve the number of nonempty words"
    );
    let inessential = s.raw_words().len() - s.reduced().len();
    Ok(TangencySet::from_reduced_with_inessential(
        s.genus(),
        words,
        inessential,
    ))
}

/// Core of [`apply`]: acts on bare reduced words. Callers guarantee the
/// letters fit the move's genus.
pub(crate) fn apply_to_cyclic(mv: &WhiteheadMove, words: &[CyclicWord]) -> Vec<CyclicWord> {
    let mut out = Vec::with_capacity(words.len());
    let mut buf: Vec<Letter> = Vec::new();
    for w in words {
        buf.clear();
        match mv {
            WhiteheadMove::Permutation(p) => {
                for &l in w.letters() {
                    buf.push(p.image(l));
                }
            }
            WhiteheadMove::Multiplier(m) => {
                for &l in w.letters() {
                    m.substitute_into(l, &mut buf);
                }
            }
        }
        out.push(CyclicWord::from_letters(buf.clone()));
    }
    out.sort();
    out
}

/// Counts of cyclically adjacent letter pairs over a whole set, the data
/// from which multiplier-move length changes can be read off without
/// performing any substitution.
pub(crate) struct PairCounts {
    genus: usize,
    counts: Vec<u64>, // counts[u * 2g + v] = #(u followed by v, cyclically)
}

impl PairCounts {
    pub(crate) fn of(s: &TangencySet) -> Self {
        Self::of_words(s.genus(), s.reduced())
    }

    pub(crate) fn of_words(genus: usize, words: &[CyclicWord]) -> Self {
        let width = 2 * genus;
        let mut counts = vec![0u64; width * width];
        for w in words {
            let ls = w.letters();
            for (i, &u) in ls.iter().enumerate() {
                let v = ls[(i + 1) % ls.len()];
                counts[u.code() * width + v.code()] += 1;
            }
        }
        PairCounts { genus, counts }
    }

    /// Exact total length change of a multiplier move.
    ///
    /// In a cyclically reduced word only the inserted multiplier letters can
    /// cancel, and they cancel within the maximal runs of `a^±1` separating
    /// consecutive other letters. A run of `k >= 1` copies of `a^s` between
    /// letters `y`, `z` changes by `s * (r(y) - l(z))` where `r`/`l` flag an
    /// insertion on the respective side, and an empty gap contributes 1 when
    /// exactly one of `r(y)`, `l(z)` is set.
    pub(crate) fn multiplier_delta(&self, m: &MultiplierMove) -> i64 {
        debug_assert_eq!(m.genus(), self.genus);
        let width = 2 * self.genus;
        let a = m.multiplier.code();
        let ai = m.multiplier.inverse().code();
        let mut right = vec![false; width];
        let mut left = vec![false; width];
        for code in 0..width {
            let l = Letter::from_code(code);
            right[code] = m.right_of(l);
            left[code] = m.left_of(l);
        }
        let mut delta = 0i64;
        for (u, &right_u) in right.iter().enumerate() {
            if u == a || u == ai {
                continue;
            }
            for (v, &left_v) in left.iter().enumerate() {
                let n = self.counts[u * width + v] as i64;
                if n == 0 {
                    continue;
                }
                if v == a {
                    // y followed by a positive run: +r(y) per region.
                    if right_u {
                        delta += n;
                    }
                } else if v == ai {
                    // y followed by a negative run: -r(y) per region.
                    if right_u {
                        delta -= n;
                    }
                } else if right_u != left_v {
                    delta += n;
                }
            }
        }
        for (v, &left_v) in left.iter().enumerate() {
            if v == a || v == ai {
                continue;
            }
            if left_v {
                // Positive run ending at z: -l(z); negative run: +l(z).
                delta -= self.counts[a * width + v] as i64;
                delta += self.counts[ai * width + v] as i64;
            }
        }
        delta
    }
}

/// `length(apply(mv, s)) - length(s)`, computed from adjacent-pair counts
/// without materializing any substituted word. Permutation moves always
/// return 0.
pub fn length_delta(mv: &WhiteheadMove, s: &TangencySet) -> Result<i64, Error> {
    if mv.genus() != s.genus() {
        return Err(Error::GenusMismatch {
            move_genus: mv.genus(),
            set_genus: s.genus(),
        });
    }
    match mv {
        WhiteheadMove::Permutation(_) => Ok(0),
        WhiteheadMove::Multiplier(m) => Ok(PairCounts::of(s).multiplier_delta(m)),
    }
}

/// One step of a reduction: the move applied, the set it produced and that
/// set's total length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub mv: WhiteheadMove,
    pub result: TangencySet,
    pub length_after: usize,
}

/// The move-by-move record of a reduction; lengths strictly decrease.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

/// Greedy Whitehead reduction.
///
/// Repeatedly evaluates every multiplier move (permutations cannot change
/// lengths) and applies the first one achieving the maximum decrease, until
/// no move shrinks the set. The result is a minimal form: if a shorter
/// equivalent set existed, some single substitution would already shrink
/// this one. Terminates within `s.length()` iterations.
pub fn reduce(s: &TangencySet) -> (TangencySet, ReductionTrace) {
    let moves = enumerate_moves(s.genus(), MoveKinds::multipliers_only());
    let mut current = s.clone();
    let mut steps = Vec::new();
    while current.length() > 0 && !moves.is_empty() {
        let table = PairCounts::of(&current);
        let mut best: Option<(usize, i64)> = None;
        for (i, mv) in moves.iter().enumerate() {
            let WhiteheadMove::Multiplier(m) = mv else {
                unreachable!()
            };
            let d = table.multiplier_delta(m);
            if best.is_none_or(|(_, bd)| d < bd) {
                best = Some((i, d));
            }
        }
        let Some((idx, delta)) = best else { break };
        if delta >= 0 {
            break;
        }
        let next = apply(&moves[idx], &current).expect("enumerated moves match the genus");
        debug_assert_eq!(next.length() as i64, current.length() as i64 + delta);
        steps.push(ReductionStep {
            mv: moves[idx].clone(),
            result: next.clone(),
            length_after: next.length(),
        });
        current = next;
    }
    (current, ReductionTrace { steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Word;
    use alloc::string::ToString;
    use alloc::vec;

    fn set(genus: usize, words: &[&[i32]]) -> TangencySet {
        TangencySet::new(genus, words.iter().map(|w| Word::from_ints(w)).collect()).unwrap()
    }

    fn worked_example() -> TangencySet {
        set(2, &[&[1, 2, 1, 2, 2], &[-2, -2, -1], &[-1, -2]])
    }

    #[test]
    fn no_multiplier_moves_in_rank_one() {
        assert!(enumerate_moves(1, MoveKinds::multipliers_only()).is_empty());
    }

    #[test]
    fn move_counts_match_closed_formulas() {
        for g in 0..=3usize {
            let mults = enumerate_moves(g, MoveKinds::multipliers_only());
            let perms = enumerate_moves(g, MoveKinds::permutations_only());
            let expected_mult = if g == 0 {
                0
            } else {
                2 * g * (4usize.pow(g as u32 - 1) - 1)
            };
            let expected_perm = (1usize << g) * factorial(g) - 1;
            assert_eq!(mults.len(), expected_mult, "multiplier count at genus {g}");
            assert_eq!(perms.len(), expected_perm, "permutation count at genus {g}");
        }
        assert_eq!(enumerate_moves(2, MoveKinds::multipliers_only()).len(), 12);
        assert_eq!(enumerate_moves(2, MoveKinds::permutations_only()).len(), 7);
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product::<usize>().max(1)
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        use alloc::collections::BTreeSet;
        for g in 0..=3usize {
            let moves = enumerate_moves(g, MoveKinds::all());
            let dedup: BTreeSet<_> = moves.iter().cloned().collect();
            assert_eq!(dedup.len(), moves.len());
        }
    }

    #[test]
    fn worked_example_first_substitution() {
        // x1 -> x1 x2^-1 with multiplier x2^-1.
        let mv = WhiteheadMove::Multiplier(MultiplierMove::new(
            Letter::negative(2),
            vec![MultiplierAction::Right, MultiplierAction::Keep],
        ));
        let s1 = apply(&mv, &worked_example()).unwrap();
        assert_eq!(s1, set(2, &[&[1, 1, 2], &[-1, -2], &[-1]]));
        assert_eq!(s1.length(), 6);
    }

    #[test]
    fn worked_example_second_substitution() {
        // x2 -> x1^-1 x2 with multiplier x1, applied to the first output.
        let s1 = set(2, &[&[1, 1, 2], &[-1, -2], &[-1]]);
        let mv = WhiteheadMove::Multiplier(MultiplierMove::new(
            Letter::positive(1),
            vec![MultiplierAction::Keep, MultiplierAction::Left],
        ));
        let s2 = apply(&mv, &s1).unwrap();
        assert_eq!(s2, set(2, &[&[1, 2], &[-1], &[-2]]));
        assert_eq!(s2.length(), 4);
    }

    #[test]
    fn permutation_on_empty_set_is_empty() {
        let s = set(2, &[]);
        for mv in enumerate_moves(2, MoveKinds::permutations_only()) {
            assert_eq!(apply(&mv, &s).unwrap(), s);
        }
    }

    #[test]
    fn apply_rejects_rank_mismatch() {
        let mv = enumerate_moves(3, MoveKinds::multipliers_only()).remove(0);
        assert_eq!(
            apply(&mv, &worked_example()),
            Err(Error::GenusMismatch {
                move_genus: 3,
                set_genus: 2
            })
        );
        assert_eq!(
            length_delta(&mv, &worked_example()),
            Err(Error::GenusMismatch {
                move_genus: 3,
                set_genus: 2
            })
        );
    }

    #[test]
    fn length_delta_of_worked_example_first_move() {
        let mv = WhiteheadMove::Multiplier(MultiplierMove::new(
            Letter::negative(2),
            vec![MultiplierAction::Right, MultiplierAction::Keep],
        ));
        assert_eq!(length_delta(&mv, &worked_example()), Ok(-4));
    }

    #[test]
    fn length_delta_zero_for_permutations() {
        let s = worked_example();
        for mv in enumerate_moves(2, MoveKinds::permutations_only()) {
            assert_eq!(length_delta(&mv, &s), Ok(0));
            assert_eq!(apply(&mv, &s).unwrap().length(), s.length());
        }
    }

    #[test]
    fn length_delta_agrees_with_apply_on_all_rank2_moves() {
        let s = worked_example();
        for mv in enumerate_moves(2, MoveKinds::all()) {
            let direct = apply(&mv, &s).unwrap().length() as i64 - s.length() as i64;
            assert_eq!(length_delta(&mv, &s), Ok(direct), "move {mv}");
        }
    }

    #[test]
    fn reduce_reaches_the_minimal_set_with_lengths_10_6_4() {
        let (s_min, trace) = reduce(&worked_example());
        assert_eq!(s_min, set(2, &[&[1, 2], &[-1], &[-2]]));
        let lengths: Vec<usize> = trace.steps.iter().map(|st| st.length_after).collect();
        assert_eq!(lengths, vec![6, 4]);
    }

    #[test]
    fn reduce_of_empty_set() {
        let s = set(2, &[]);
        let (s_min, trace) = reduce(&s);
        assert_eq!(s_min, s);
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn reduce_fixes_rank_one_sets() {
        let s = set(1, &[&[1], &[1], &[-1], &[-1]]);
        let (s_min, trace) = reduce(&s);
        assert_eq!(s_min, s);
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn moves_are_reversible() {
        let s = worked_example();
        for mv in enumerate_moves(2, MoveKinds::all()) {
            let there = apply(&mv, &s).unwrap();
            let back = apply(&mv.inverse(), &there).unwrap();
            assert_eq!(back.reduced(), s.reduced(), "move {mv}");
        }
    }

    #[test]
    fn display_is_stable() {
        let mv = WhiteheadMove::Multiplier(MultiplierMove::new(
            Letter::negative(2),
            vec![MultiplierAction::Right, MultiplierAction::Keep],
        ));
        assert_eq!(mv.to_string(), "multiplier x2^-1: x1 -> x1 x2^-1");
        let p = WhiteheadMove::Permutation(PermutationMove::new(vec![
            Letter::positive(2),
            Letter::negative(1),
        ]));
        assert_eq!(p.to_string(), "permutation: x1 -> x2, x2 -> x1^-1");
    }
}
