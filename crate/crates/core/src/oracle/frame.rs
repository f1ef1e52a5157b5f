use num_complex::Complex64;

use super::fourier::{pieces_on_grid, Side, TestFunction};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::sets::{integral_char_over_ball, Ball, ClopenSet, StepFunction};

fn q_half_pow(q: u32, j: i32) -> f64 {
    f64::from(q).powf(-f64::from(j) / 2.0)
}

/// `psi^_{j,t}(xi) = q^{-j/2} chi(-u(t) p^j xi) 1_W(p^j xi)` for
/// `psi^ = 1_W`, the Fourier image of `q^{j/2} psi(p^-j x - u(t))`.
pub fn affine_element(set: &ClopenSet, j: i32, t: u64) -> TestFunction {
    let field = set.field();
    let y = field.u(t).shift(j);
    let grid = y.abs_exponent().unwrap_or(i32::MIN);
    let amp = q_half_pow(field.q(), j);
    let mut items = Vec::new();
    for b in set.dilate(-j).balls() {
        for piece in b.split_to(grid.max(b.scale())) {
            let phase = (-(&y * piece.center())).chi().to_complex();
            items.push((piece, phase * amp));
        }
    }
    TestFunction::new(Side::Frequency, StepFunction::build(field, items))
}

/// `<g, psi_{j,t}> = q^{-j/2} integral g^(xi) chi(u(t) p^j xi) 1_W(p^j xi) d xi`
/// for `psi^ = 1_W`.
pub fn analysis_coefficient(set: &ClopenSet, j: i32, t: u64, ghat: &TestFunction) -> Result<Complex64> {
    coefficient_on_grid(set, j, t, ghat, None)
}

fn coefficient_on_grid(
    set: &ClopenSet,
    j: i32,
    t: u64,
    ghat: &TestFunction,
    grid: Option<i32>,
) -> Result<Complex64> {
    if ghat.side() != Side::Frequency {
        return Err(Error::Domain(
            "analysis coefficients take a frequency-side function".into(),
        ));
    }
    let restricted = TestFunction::new(Side::Frequency, ghat.values().restrict(&set.dilate(-j))?);
    let y = set.field().u(t).shift(j);
    Ok(char_sum(&pieces_on_grid(&restricted, grid), &y)? * q_half_pow(set.field().q(), j))
}

fn char_sum(pieces: &[(Ball, Complex64)], y: &FieldElement) -> Result<Complex64> {
    let mut sum = Complex64::new(0.0, 0.0);
    for (b, v) in pieces {
        let c = integral_char_over_ball(y, b)?;
        if !c.is_zero() {
            sum += v * c.to_complex();
        }
    }
    Ok(sum)
}

/// A frame sum together with the window it was truncated to.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameSum {
    pub value: f64,
    /// Dilations `j` summed term by term, `None` for an empty window.
    pub j_window: Option<(i32, i32)>,
    /// Number of coefficients evaluated.
    pub terms: u64,
    pub note: String,
}

/// `sum_m sum_j sum_t |<g, psi^(m)_{j,t}>|^2` for `psi^(m)^ = 1_{W_m}`.
///
/// Only dilations with `p^-j W_m` meeting the carrier of `g^` contribute.
/// For a fixed `j`, the restricted integrand is constant on balls of scale
/// `rho`, and the character integral over such a ball vanishes once
/// `|u(t) p^j| > q^rho`, i.e. for `t >= q^(rho + j)`.
///
/// If `g^` equals a constant `a` on a ball `p^k D`, every `j` with
/// `p^-j W_m` inside that ball contributes `|a|^2 q^j I_m`, where
/// `I_m = sum_t |integral_{W_m} chi(u(t) eta) d eta|^2`; those terms are
/// summed as a geometric series.
pub fn frame_sum(family: &[ClopenSet], ghat: &TestFunction) -> Result<FrameSum> {
    frame_sum_on_grid(family, ghat, None)
}

/// [`frame_sum`] with every piece of `g^` first split to scale `grid`.
pub fn frame_sum_on_grid(family: &[ClopenSet], ghat: &TestFunction, grid: Option<i32>) -> Result<FrameSum> {
    if ghat.side() != Side::Frequency {
        return Err(Error::Domain("frame sums take a frequency-side function".into()));
    }
    let mut out = FrameSum {
        value: 0.0,
        j_window: None,
        terms: 0,
        note: String::new(),
    };
    if ghat.values().is_zero() || family.is_empty() {
        out.note = "empty family or zero function".into();
        return Ok(out);
    }
    let field = ghat.values().field().clone();
    let q = f64::from(field.q());
    let pieces = ghat.values().pieces();
    let zero_piece = pieces
        .iter()
        .find(|(b, _)| b.contains_zero())
        .map(|(b, a)| (b.scale(), *a));
    // Carrier inside |xi| <= q^b, and |xi| >= q^-a away from the zero piece.
    let b = pieces
        .iter()
        .map(|(ball, _)| ball.valuation().map_or(-ball.scale(), |v| -v))
        .max()
        .expect("nonzero function");
    let a = pieces.iter().filter_map(|(ball, _)| ball.valuation()).max();

    let mut window: Option<(i32, i32)> = None;
    let mut max_t_exp = 0;
    let mut tail_total = 0.0;
    for set in family {
        if set.has_zero_ball() {
            return Err(Error::Precondition("a set contains a ball around 0".into()));
        }
        let Some((lo, hi)) = set.valuation_range() else {
            continue;
        };
        // p^j xi in W_m with v(xi) in [-b, a] needs j in [lo - a, hi + b].
        let j_hi = hi + b;
        let j_lo = match (zero_piece, a) {
            (Some((k, amp)), _) => {
                // p^-j W_m lies in p^k D once lo - j >= k.
                let last = lo - k;
                let strength = self_overlap(set)?;
                tail_total += amp.norm_sqr() * strength * q.powi(last + 1) / (q - 1.0);
                last + 1
            }
            (None, Some(a)) => lo - a,
            (None, None) => unreachable!("nonzero function without a zero piece has valuations"),
        };
        if j_lo > j_hi {
            continue;
        }
        window = Some(window.map_or((j_lo, j_hi), |(x, y)| (x.min(j_lo), y.max(j_hi))));
        for j in j_lo..=j_hi {
            let restricted = TestFunction::new(Side::Frequency, ghat.values().restrict(&set.dilate(-j))?);
            let grid_pieces = pieces_on_grid(&restricted, grid);
            let Some(rho) = grid_pieces.iter().map(|(b, _)| b.scale()).max() else {
                continue;
            };
            let t_exp = (rho + j).max(0);
            max_t_exp = max_t_exp.max(t_exp);
            let amp = q_half_pow(field.q(), j);
            for t in 0..field.q_pow(t_exp as u32)? {
                let y = field.u(t).shift(j);
                let c = char_sum(&grid_pieces, &y)? * amp;
                out.value += c.norm_sqr();
                out.terms += 1;
            }
        }
    }
    out.value += tail_total;
    out.j_window = window;
    out.note = format!(
        "j limited to dilates meeting the carrier of g^ (|xi| <= q^{b}); \
         t < q^(rho + j) with at most {max_t_exp} digits, beyond which each character integral vanishes; \
         dilates inside a constant ball around 0 summed in closed form ({tail_total})"
    );
    Ok(out)
}

/// `sum_t |integral_W chi(u(t) eta) d eta|^2`; `1_W` is constant on balls of
/// its finest scale `rho`, so only `t < q^rho` contribute.
fn self_overlap(set: &ClopenSet) -> Result<f64> {
    let field = set.field();
    let pieces: Vec<(Ball, Complex64)> = set
        .balls()
        .iter()
        .map(|b| (b.clone(), Complex64::new(1.0, 0.0)))
        .collect();
    let rho = pieces.iter().map(|(b, _)| b.scale()).max().unwrap_or(0);
    let mut total = 0.0;
    for t in 0..field.q_pow(rho.max(0) as u32)? {
        total += char_sum(&pieces, &field.u(t))?.norm_sqr();
    }
    Ok(total)
}
