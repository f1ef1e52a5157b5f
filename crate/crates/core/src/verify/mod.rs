//! Decision procedures for the set forms of the wavelet, framelet and
//! scaling set characterizations. Each returns a [`Verdict`] carrying the
//! clauses checked, exact quantities, and replayable witnesses.

pub mod bounds;
mod dimension;
mod frames;
mod replay;
mod scaling;
mod superwavelet;
mod verdict;

pub use crate::sets::dilation_partition_check;
pub use bounds::FamilyBounds;
pub use dimension::{check_dim_integral_identity, check_mra, dimension_function};
pub use frames::{check_multiwavelet_set, check_orthonormal_system, check_parseval_multiframelet_set};
pub use scaling::{check_parseval_scaling_set, check_scaling_set};
pub use superwavelet::{
    check_superwavelet_equivalence, decomposability_lower_bound, DecomposabilityBound, DecompositionCap,
};
pub use verdict::{Clause, Quantity, Status, Verdict, Witness};
