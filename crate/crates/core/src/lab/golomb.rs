use serde::{Deserialize, Serialize};

use crate::constants::golomb_c4;
use crate::error::Result;
use crate::sieve::count_powerful;

/// Precision of `c₄` used by the bound check.
pub const C4_PRECISION: f64 = 1e-9;

/// `c₄√x − 3x^{1/3} ≤ k(x) ≤ c₄√x` at one `x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GolombRow {
    pub x: u64,
    pub k: u64,
    pub lower: f64,
    pub upper: f64,
    pub verdict: bool,
}

pub fn golomb_check(grid: &[u64]) -> Result<Vec<GolombRow>> {
    let c4 = golomb_c4(C4_PRECISION)?.value;
    Ok(grid
        .iter()
        .map(|&x| {
            let xf = x as f64;
            let k = count_powerful(x);
            let upper = c4 * xf.sqrt();
            let lower = upper - 3.0 * xf.cbrt();
            let kf = k as f64;
            GolombRow { x, k, lower, upper, verdict: lower <= kf && kf <= upper }
        })
        .collect())
}
