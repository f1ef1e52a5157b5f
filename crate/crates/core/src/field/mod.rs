//! Arithmetic in `K = F_q((t))` restricted to finite expansions.

mod element;
mod gf;
mod params;
mod root;
mod translation;

pub use element::FieldElement;
pub use gf::{Field, Gf};
pub use params::{FieldParams, MAX_Q};
pub use root::RootOfUnity;
