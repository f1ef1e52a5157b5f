//! Clopen subsets of `K`, step functions on them, and exact integrals.

mod ball;
mod clopen;
mod extended;
mod integrals;
mod reduce;
pub(crate) mod refine;
pub(crate) mod step;
pub(crate) mod tiling;

pub use ball::{q_pow, Ball};
pub use clopen::ClopenSet;
pub use extended::ExtendedRational;
pub use integrals::{
    integral_char_over_ball, integral_inverse_valuation, weighted_inverse_valuation, CharIntegral,
};
pub use reduce::reduce_mod_translations;
pub use step::{StepFunction, StepValue};
pub use tiling::{dilation_partition_check, normalize_ball};
