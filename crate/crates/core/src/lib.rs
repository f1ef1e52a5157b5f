//! Exact harmonic analysis on the local field `K = F_q((t))`.
//!
//! Sets in `K` are finite disjoint unions of balls `c + p^s D`, so every
//! "almost everywhere" statement about them reduces to an exact set identity.
//! The [`verify`] module turns the characterization theorems for multiwavelet
//! sets, Parseval multiframelet sets, scaling sets, MRA multiwavelet sets and
//! super-wavelet equivalence into terminating decision procedures that return
//! replayable certificates. The [`oracle`] module recomputes frame sums and
//! Calderón sums through Fourier-side arithmetic so that every verdict can be
//! confirmed along an independent path.

pub mod catalog;
pub mod error;
pub mod field;
pub mod oracle;
pub mod setfile;
pub mod sets;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldParams, Gf, RootOfUnity};
pub use sets::{Ball, ClopenSet, ExtendedRational, StepFunction};
pub use verify::{Status, Verdict, Witness};

/// Exact rational type used for every measure and integral.
pub type Rational = num_rational::BigRational;
