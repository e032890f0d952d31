//! Peak-to-average power ratio of the multicarrier signal
//! `s(t) = Σ_k a_k·exp(2πi·k·t)`, sampled on `t = j / (oversample·N)`.
//!
//! Rows of a size-`P` complementary set have PAPR at most `P`; a Golay pair
//! row at most 2.

use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;
use serde::Serialize;

use crate::algebra::Sequence;
use crate::error::{Error, Result};
use crate::verify::ComplementarySet;

pub const DEFAULT_OVERSAMPLE: usize = 16;

/// Relative slack for grid-based bound checks.
pub const BOUND_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PaprResult {
    /// Linear scale.
    pub papr: f64,
    /// Time of the grid maximum, in `[0, 1)`.
    pub peak_time: f64,
    pub oversample: usize,
}

pub fn papr(seq: &Sequence, oversample: usize) -> Result<PaprResult> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let oversample = oversample.max(1);
    let n = seq.len();
    let points = n * oversample;
    let mut buf = vec![Complex64::new(0.0, 0.0); points];
    for (slot, z) in buf.iter_mut().zip(seq.to_complex()) {
        *slot = z;
    }
    // the unnormalized inverse DFT evaluates Σ a_k·e^{+2πi·k·j/points}
    FftPlanner::new().plan_fft_inverse(points).process(&mut buf);
    let (j, peak) =
        buf.iter()
            .map(|z| z.norm_sqr())
            .enumerate()
            .fold(
                (0, f64::MIN),
                |best, (j, p)| if p > best.1 { (j, p) } else { best },
            );
    Ok(PaprResult {
        papr: peak / n as f64,
        peak_time: j as f64 / points as f64,
        oversample,
    })
}

/// PAPR of every row.
pub fn papr_rows(set: &ComplementarySet, oversample: usize) -> Vec<PaprResult> {
    set.rows()
        .iter()
        .map(|r| papr(r, oversample).expect("rows are nonempty"))
        .collect()
}

/// True if every row satisfies `papr <= size·(1 + BOUND_TOLERANCE)`.
pub fn within_set_size_bound(set: &ComplementarySet, oversample: usize) -> bool {
    let bound = set.size() as f64 * (1.0 + BOUND_TOLERANCE);
    papr_rows(set, oversample).iter().all(|r| r.papr <= bound)
}
