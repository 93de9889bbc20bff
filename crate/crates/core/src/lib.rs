//! Decide, from boundary tangency data alone, whether an isolating-block
//! handlebody can possibly trap an invariant set with trivial one-dimensional
//! cohomology.
//!
//! The input is a genus `g` together with one word per tangency curve, read by
//! recording signed crossings with a complete system of cutting disks. The
//! pipeline cyclically reduces the words, drives the set to minimal total
//! length with Whitehead substitutions and then checks a per-generator
//! occurrence condition on the minimal set: every generator and its inverse
//! must either be absent or appear exactly once each. If the condition fails,
//! every flow realizing the block isolates an invariant set with nontrivial
//! first cohomology; if it holds, some flow realizes the block around a single
//! rest point, so nothing can be concluded.
//!
//! The crate is `no_std` (with `alloc`) and has no runtime dependencies. All
//! values are immutable after construction and every operation is a pure
//! function, so everything is safe to share across threads.
//!
//! Modules:
//! - [`words`]: letters, words, cyclic reduction, canonical rotations.
//! - [`whitehead`]: substitution moves, their enumeration, greedy reduction.
//! - [`criterion`]: the occurrence condition and the dynamical verdict.
//! - [`oracle`]: exhaustive breadth-first certification at desk scale.
//! - [`models`]: the finite catalog of minimal curve patterns per genus.

#![no_std]

extern crate alloc;

pub mod criterion;
mod error;
pub mod models;
pub mod oracle;
pub mod whitehead;
pub mod words;

pub use criterion::{check_a, verdict, Interpretation, OccurrenceReport, Verdict};
pub use error::Error;
pub use whitehead::{
    apply, enumerate_moves, length_delta, reduce, MoveKinds, MultiplierAction, MultiplierMove,
    PermutationMove, ReductionStep, ReductionTrace, WhiteheadMove,
};
pub use words::{CyclicWord, Letter, TangencySet, Word};
