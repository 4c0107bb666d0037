//! Canonical reductions of numerical semigroup rings.
//!
//! The crate computes, for `R = k[[t^Γ]]`, the monomial canonical ideals,
//! the trace of the canonical module, colengths, the canonical index and the
//! Gorenstein-hierarchy predicates, and decides whether `R` has a canonical
//! ideal that is a reduction of the maximal ideal. An enumerator over the
//! genus tree and a check harness verify the surrounding identities over
//! every semigroup up to a given genus.

pub mod classify;
pub mod cofinite;
pub mod enumerate;
pub mod error;
pub mod harness;
pub mod ideal;
pub mod semigroup;

pub use classify::{classify, ClassificationReport};
pub use cofinite::CofiniteSet;
pub use error::{Error, Result};
pub use ideal::{canonical_family, canonical_ideal, canonical_index, trace, RelativeIdeal};
pub use semigroup::NumericalSemigroup;
