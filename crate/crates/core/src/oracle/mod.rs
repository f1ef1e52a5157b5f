//! Fourier-side confirmation of the set-level verdicts: exact transforms
//! of step functions, analysis coefficients of affine systems, frame sums
//! with certified truncation windows, and pointwise Calderón sums.
//!
//! Coefficients are sums of rational multiples of `p`-th roots of unity;
//! they are complexified before squaring, so frame sums carry floating
//! point error and are compared with a relative tolerance.

mod characters;
mod fourier;
mod frame;
pub mod pointwise;
mod random;

pub use characters::character_orthonormality;
pub use fourier::{fourier_step, inner_product, Direction, Side, TestFunction};
pub use frame::{affine_element, analysis_coefficient, frame_sum, frame_sum_on_grid, FrameSum};
pub use pointwise::{calderon_sum_at, shift_sum_at};
pub use random::Sampler;
