use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::sets::Ball;

/// `integral_D chi_{u(n)}(x) conj(chi_{u(n')}(x)) dx` by summation over
/// `D / p^depth D`. The integrand is `chi((u(n) - u(n')) x)`, constant on
/// cosets of `p^k D` where `q^k = |u(n) - u(n')|`, so `depth >= k` is
/// required.
pub fn character_orthonormality(field: &Field, n: u64, n_prime: u64, depth: i32) -> Result<Complex64> {
    let y = &field.u(n) - &field.u(n_prime);
    let needed = y.abs_exponent().unwrap_or(0).max(0);
    if depth < needed {
        return Err(Error::Precondition(format!(
            "depth {depth} too small, need at least {needed}"
        )));
    }
    let p = field.p() as usize;
    let mut counts = vec![0u64; p];
    let cosets = Ball::ring(field).split_to(depth);
    for b in &cosets {
        counts[(&y * b.center()).chi().exponent() as usize] += 1;
    }
    let scale = 1.0 / cosets.len() as f64;
    Ok(counts
        .iter()
        .enumerate()
        .map(|(e, &c)| crate::field::RootOfUnity::new(e as u32, p as u32).to_complex() * (c as f64 * scale))
        .sum())
}
