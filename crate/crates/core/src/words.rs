//! Exact arithmetic of words and cyclic words over a rank-`g` free alphabet.
//!
//! A [`Word`] is a plain sequence of [`Letter`]s. A [`CyclicWord`] is a word
//! considered up to rotation, stored cyclically reduced and in canonical
//! rotation, so that equality of values is equality of conjugacy classes. A
//! [`TangencySet`] bundles a genus with the multiset of words read from the
//! tangency curves of a coloured handlebody.

use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// One generator symbol `x_i` or its inverse `x_i^-1`.
///
/// Letters are totally ordered `x1 < x1^-1 < x2 < x2^-1 < ...`; canonical
/// rotations and sorted multisets are taken with respect to this order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    /// The generator `x_index`. Indices are 1-based; panics on 0.
    pub fn positive(index: usize) -> Self {
        assert!(index >= 1, "generator indices are 1-based");
        Letter(((index - 1) as u32) << 1)
    }

    /// The inverse generator `x_index^-1`. Indices are 1-based; panics on 0.
    pub fn negative(index: usize) -> Self {
        Letter(Self::positive(index).0 | 1)
    }

    /// 1-based generator index.
    pub fn index(self) -> usize {
        (self.0 >> 1) as usize + 1
    }

    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    /// `+1` for `x_i`, `-1` for `x_i^-1`.
    pub fn sign(self) -> i32 {
        if self.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }

    /// Dense code `2*(index-1) + (1 if inverse)`, consistent with `Ord`.
    pub(crate) fn code(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_code(code: usize) -> Self {
        Letter(code as u32)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "x{}", self.index())
        } else {
            write!(f, "x{}^-1", self.index())
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite sequence of letters, possibly empty.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// The empty word `1`.
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    /// Builds a word from signed generator indices: `2` means `x2`, `-2`
    /// means `x2^-1`. Panics on 0.
    pub fn from_ints(ints: &[i32]) -> Self {
        let letters = ints
            .iter()
            .map(|&i| {
                assert!(i != 0, "0 does not name a generator");
                if i > 0 {
                    Letter::positive(i as usize)
                } else {
                    Letter::negative((-i) as usize)
                }
            })
            .collect();
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

    /// The same sequence backwards with every letter inverted.
    pub fn invert(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Cancels adjacent inverse pairs (also across the ends) until none
    /// remain, then picks the canonical rotation.
    pub fn cyclic_reduce(&self) -> CyclicWord {
        CyclicWord::from_letters(self.letters.clone())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_token_word(f, &self.letters)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn write_token_word(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "1");
    }
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

/// Free reduction: cancel adjacent inverse pairs with a stack scan.
pub(crate) fn free_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if stack.last() == Some(&l.inverse()) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    stack
}

/// Index of the lexicographically least rotation (Booth-style scan).
fn least_rotation(letters: &[Letter]) -> usize {
    let n = letters.len();
    if n <= 1 {
        return 0;
    }
    let at = |i: usize| letters[i % n];
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

/// A cyclically reduced word considered up to rotation.
///
/// The stored sequence has no adjacent inverse pair, the last and first
/// letters are not inverse to each other, and among all rotations the stored
/// one is lexicographically least. Equality of values therefore decides
/// equality of cyclic words.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl CyclicWord {
    pub fn empty() -> Self {
        CyclicWord {
            letters: Vec::new(),
        }
    }

    /// Cyclic reduction of an arbitrary letter sequence.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        let reduced = free_reduce(&letters);
        // Cancel across the seam: first letter against last.
        let mut lo = 0;
        let mut hi = reduced.len();
        while hi - lo >= 2 && reduced[lo] == reduced[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        let trimmed = &reduced[lo..hi];
        let start = least_rotation(trimmed);
        let mut canonical = Vec::with_capacity(trimmed.len());
        canonical.extend_from_slice(&trimmed[start..]);
        canonical.extend_from_slice(&trimmed[..start]);
        CyclicWord { letters: canonical }
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

    pub fn to_word(&self) -> Word {
        Word {
            letters: self.letters.clone(),
        }
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_token_word(f, &self.letters)
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Genus plus the multiset of words read from the tangency curves.
///
/// `raw_words` keeps the input exactly as supplied, empty words included
/// (they record inessential curves). `reduced` holds the nonempty cyclic
/// reductions, sorted, and is what every downstream computation consumes.
///
/// Equality, ordering and hashing see only the genus and the reduced
/// multiset: two sets presenting the same cyclic words are the same set.
#[derive(Clone)]
pub struct TangencySet {
    genus: usize,
    raw_words: Vec<Word>,
    reduced: Vec<CyclicWord>,
}

impl PartialEq for TangencySet {
    fn eq(&self, other: &Self) -> bool {
        self.genus == other.genus && self.reduced == other.reduced
    }
}

impl Eq for TangencySet {}

impl PartialOrd for TangencySet {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TangencySet {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.genus, &self.reduced).cmp(&(other.genus, &other.reduced))
    }
}

impl core::hash::Hash for TangencySet {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.genus.hash(state);
        self.reduced.hash(state);
    }
}

impl TangencySet {
    /// Validates letter indices against the genus and cyclically reduces.
    pub fn new(genus: usize, raw_words: Vec<Word>) -> Result<Self, Error> {
        for w in &raw_words {
            for &l in w.letters() {
                if l.index() > genus {
                    return Err(Error::IndexOutOfRange {
                        index: l.index(),
                        genus,
                    });
                }
            }
        }
        let mut reduced: Vec<CyclicWord> = raw_words
            .iter()
            .map(Word::cyclic_reduce)
            .filter(|c| !c.is_empty())
            .collect();
        reduced.sort();
        Ok(TangencySet {
            genus,
            raw_words,
            reduced,
        })
    }

    /// Wraps already-reduced nonempty words; raw words mirror them.
    pub(crate) fn from_reduced(genus: usize, reduced: Vec<CyclicWord>) -> Self {
        Self::from_reduced_with_inessential(genus, reduced, 0)
    }

    /// As [`Self::from_reduced`], carrying along `inessential` empty raw
    /// words (curves that bound disks but are still curves).
    pub(crate) fn from_reduced_with_inessential(
        genus: usize,
        mut reduced: Vec<CyclicWord>,
        inessential: usize,
    ) -> Self {
        debug_assert!(reduced.iter().all(|c| !c.is_empty()));
        debug_assert!(reduced
            .iter()
            .flat_map(|c| c.letters())
            .all(|l| l.index() <= genus));
        reduced.sort();
        let mut raw_words: Vec<Word> = reduced.iter().map(CyclicWord::to_word).collect();
        raw_words.extend((0..inessential).map(|_| Word::empty()));
        TangencySet {
            genus,
            raw_words,
            reduced,
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn raw_words(&self) -> &[Word] {
        &self.raw_words
    }

    /// The nonempty cyclic reductions, sorted.
    pub fn reduced(&self) -> &[CyclicWord] {
        &self.reduced
    }

    /// Total algebraic length: the sum over the cyclically reduced nonempty
    /// words.
    pub fn length(&self) -> usize {
        self.reduced.iter().map(CyclicWord::len).sum()
    }
}

impl fmt::Display for TangencySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.reduced.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for TangencySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
