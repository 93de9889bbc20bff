//! The occurrence condition on minimal sets and its dynamical reading.
//!
//! A word set satisfies the condition when, for every generator, the letters
//! `x_i` and `x_i^-1` either do not appear at all among the words or both
//! appear exactly once each. Checked on a minimal form, this decides whether
//! the coloured handlebody admits a complete cut system whose every disk
//! boundary crosses the tangency curves exactly twice.

use alloc::vec;
use alloc::vec::Vec;

use crate::whitehead::{reduce, ReductionTrace};
use crate::words::{TangencySet, Word};
use crate::Error;

/// Per-generator counts of `x_i` (`pos`) and `x_i^-1` (`neg`) across all
/// cyclically reduced words of a set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceReport {
    counts: Vec<(usize, usize)>,
}

impl OccurrenceReport {
    fn of(s: &TangencySet) -> Self {
        let mut counts = vec![(0usize, 0usize); s.genus()];
        for w in s.reduced() {
            for &l in w.letters() {
                let slot = &mut counts[l.index() - 1];
                if l.is_positive() {
                    slot.0 += 1;
                } else {
                    slot.1 += 1;
                }
            }
        }
        OccurrenceReport { counts }
    }

    pub fn genus(&self) -> usize {
        self.counts.len()
    }

    /// `(pos, neg)` counts for generator `index` (1-based).
    pub fn count(&self, index: usize) -> (usize, usize) {
        self.counts[index - 1]
    }

    /// Iterates `(index, pos, neg)` in generator order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &(p, n))| (i + 1, p, n))
    }
}

/// Checks the occurrence condition: every generator's `(pos, neg)` counts
/// must be `(0, 0)` or `(1, 1)`. Vacuously true for the empty set.
pub fn check_a(s: &TangencySet) -> (bool, OccurrenceReport) {
    let report = OccurrenceReport::of(s);
    let holds = report
        .counts
        .iter()
        .all(|&(p, n)| (p, n) == (0, 0) || (p, n) == (1, 1));
    (holds, report)
}

/// What the decision licenses about the maximal invariant set of any flow
/// realizing the block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Interpretation {
    /// The criterion fails: every flow realizing this block isolates an
    /// invariant set with nontrivial one-dimensional cohomology.
    NontrivialH1,
    /// The criterion holds: some flow realizes this block with a single rest
    /// point as its maximal invariant set, so nothing can be concluded.
    InconclusiveRealizable,
}

impl Interpretation {
    /// Stable machine-readable token.
    pub fn token(self) -> &'static str {
        match self {
            Interpretation::NontrivialH1 => "NONTRIVIAL_H1",
            Interpretation::InconclusiveRealizable => "INCONCLUSIVE_REALIZABLE",
        }
    }

    fn from_criterion(criterion_holds: bool) -> Self {
        if criterion_holds {
            Interpretation::InconclusiveRealizable
        } else {
            Interpretation::NontrivialH1
        }
    }
}

impl core::fmt::Display for Interpretation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.token())
    }
}

/// The full decision record for one input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub genus: usize,
    pub input: TangencySet,
    pub s_min: TangencySet,
    pub trace: ReductionTrace,
    pub occurrences: OccurrenceReport,
    pub criterion_holds: bool,
    pub interpretation: Interpretation,
}

/// Runs the whole pipeline: validate, cyclically reduce, drop empty words,
/// reduce to a minimal form, check the occurrence condition.
///
/// Two special cases: genus 0 holds unconditionally (a ball has an empty cut
/// system), and a positive-genus block with no tangency curves at all fails
/// (it would be invariant for any realizing flow, trapping an attractor with
/// the cohomology of the block itself).
pub fn verdict(genus: usize, raw_words: Vec<Word>) -> Result<Verdict, Error> {
    let input = TangencySet::new(genus, raw_words)?;
    let (s_min, trace) = reduce(&input);
    let (a_holds, occurrences) = check_a(&s_min);
    let criterion_holds = if genus >= 1 && input.raw_words().is_empty() {
        false
    } else {
        a_holds
    };
    Ok(Verdict {
        genus,
        input,
        s_min,
        trace,
        occurrences,
        criterion_holds,
        interpretation: Interpretation::from_criterion(criterion_holds),
    })
}

/// Count-based shortcut: with more than `2 * genus` essential curves the
/// criterion cannot hold, because the occurrence condition caps a minimal
/// form's total length at `2 * genus` and no substitution changes the number
/// of nonempty words. Returns `Some(false)` in that case and `None`
/// otherwise; it can never certify success.
pub fn essential_count_fastpath(s: &TangencySet) -> Option<bool> {
    if s.reduced().len() > 2 * s.genus() {
        Some(false)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(genus: usize, words: &[&[i32]]) -> TangencySet {
        TangencySet::new(genus, words.iter().map(|w| Word::from_ints(w)).collect()).unwrap()
    }

    fn words(ints: &[&[i32]]) -> Vec<Word> {
        ints.iter().map(|w| Word::from_ints(w)).collect()
    }

    #[test]
    fn condition_on_minimal_worked_example() {
        let (holds, report) = check_a(&set(2, &[&[1, 2], &[-1], &[-2]]));
        assert!(holds);
        assert_eq!(report.count(1), (1, 1));
        assert_eq!(report.count(2), (1, 1));
    }

    #[test]
    fn condition_fails_on_repeated_generator() {
        let (holds, report) = check_a(&set(1, &[&[1], &[1], &[-1], &[-1]]));
        assert!(!holds);
        assert_eq!(report.count(1), (2, 2));
    }

    #[test]
    fn condition_vacuous_on_empty_set() {
        for g in [0usize, 1, 3] {
            let (holds, _) = check_a(&set(g, &[]));
            assert!(holds);
        }
    }

    #[test]
    fn verdict_of_worked_example_is_inconclusive() {
        let v = verdict(2, words(&[&[1, 2, 1, 2, 2], &[-1, -2, -2], &[-1, -2]])).unwrap();
        assert!(v.criterion_holds);
        assert_eq!(v.interpretation, Interpretation::InconclusiveRealizable);
        assert_eq!(v.s_min, set(2, &[&[1, 2], &[-1], &[-2]]));
    }

    #[test]
    fn verdict_of_four_parallel_curves_detects_cohomology() {
        let v = verdict(1, words(&[&[1], &[1], &[-1], &[-1]])).unwrap();
        assert!(!v.criterion_holds);
        assert_eq!(v.interpretation, Interpretation::NontrivialH1);
    }

    #[test]
    fn verdict_with_single_inessential_curve_holds() {
        let v = verdict(1, vec![Word::empty()]).unwrap();
        assert!(v.criterion_holds);
        assert!(v.s_min.reduced().is_empty());
    }

    #[test]
    fn verdict_without_any_curve_fails_for_positive_genus() {
        let v = verdict(1, vec![]).unwrap();
        assert!(!v.criterion_holds);
        assert_eq!(v.interpretation, Interpretation::NontrivialH1);
    }

    #[test]
    fn verdict_of_ball_holds_unconditionally() {
        let v = verdict(0, vec![]).unwrap();
        assert!(v.criterion_holds);
        let v = verdict(0, vec![Word::empty(), Word::empty()]).unwrap();
        assert!(v.criterion_holds);
    }

    #[test]
    fn verdict_propagates_validation_errors() {
        assert_eq!(
            verdict(1, words(&[&[2]])),
            Err(Error::IndexOutOfRange { index: 2, genus: 1 })
        );
    }

    #[test]
    fn verdict_is_deterministic() {
        let make = || verdict(2, words(&[&[1, 2, 1, 2, 2], &[-1, -2, -2], &[-1, -2]])).unwrap();
        assert_eq!(make(), make());
    }

    #[test]
    fn fastpath_only_ever_reports_failure() {
        assert_eq!(
            essential_count_fastpath(&set(1, &[&[1], &[1], &[-1]])),
            Some(false)
        );
        assert_eq!(
            essential_count_fastpath(&set(2, &[&[1], &[1], &[-1], &[-1]])),
            None
        );
    }

    #[test]
    fn fastpath_agrees_with_full_pipeline() {
        // Three essential curves on a torus, five on a genus-2 block.
        for (g, ws) in [
            (1usize, vec![&[1][..], &[1], &[-1]]),
            (2, vec![&[1][..], &[1], &[1], &[1], &[1]]),
        ] {
            let s = set(g, &ws);
            let full = verdict(g, s.raw_words().to_vec()).unwrap();
            assert_eq!(essential_count_fastpath(&s), Some(false));
            assert!(!full.criterion_holds);
        }
    }
}
