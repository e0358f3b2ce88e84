use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{log_log, validate_grid, Family, Lab, MIN_LOGLOG_X};

/// `R(x) = S(x)·log log x / x` with `S(x) = Σ_{n≤x} 1/d(d(n))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct C3Row {
    pub x: u64,
    pub sum: f64,
    pub ratio: f64,
}

impl Lab {
    /// Diagnostic table of `R(x)`; no limit is claimed.
    pub fn c3_diagnostic(&self, grid: &[u64]) -> Result<Vec<C3Row>> {
        let x_max = *grid.last().ok_or(Error::EmptyGrid)?;
        validate_grid(grid, MIN_LOGLOG_X, x_max)?;
        let series = self.accumulate(Family::RecipDd, x_max, grid)?;
        Ok(series
            .checkpoints
            .iter()
            .map(|c| C3Row { x: c.x, sum: c.value, ratio: c.value * log_log(c.x) / c.x as f64 })
            .collect())
    }
}
