//! Periodic-point counting for integer sequences.
//!
//! A sequence of non-negative integers `(a_n)` is *realizable* when some map
//! `T` has exactly `a_n` points of period dividing `n`. This crate tests that
//! property on finite prefixes, globally and one prime at a time, and ships
//! the exact Bernoulli and Euler engines, prime classifications, congruence
//! checkers and group-endomorphism constructions needed to study the
//! classical sequences derived from them.
//!
//! ```
//! use dold::{classical, realize};
//!
//! let e = classical::sequence_e(7);
//! assert_eq!(e.to_string(), "(1, 5, 61, 1385, 50521, 2702765, 199360981)");
//! assert!(realize::check_realizable(&e).is_realizable_consistent());
//! ```

pub mod algebraic;
pub mod arith;
pub mod classical;
pub mod classify;
pub mod congruence;
mod error;
pub mod realize;
pub mod sequence;

pub use arith::{Int, Nat, PAdicPart, Rat};
pub use error::{Error, Result};
pub use realize::{Condition, Criterion, RealizabilityReport, Verdict, Witness, WitnessDetail};
pub use sequence::Sequence1;
