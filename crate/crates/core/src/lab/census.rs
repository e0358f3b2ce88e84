use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sieve::ArithBlock;

use super::{log_log, validate_grid, windows, Lab, MIN_LOGLOG_X};

/// The exceptional sets.
///
/// * `B1`: `n ≤ x` with `b(n) > (log log x)²`.
/// * `B2`: `n ≤ x` with `ω(n)` outside `[½ log log x, 2 log log x]`.
/// * `B3`: squarefree `n ≤ x` with `ω(n)` inside that interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SetId {
    B1,
    B2,
    B3,
}

impl SetId {
    pub const ALL: [SetId; 3] = [SetId::B1, SetId::B2, SetId::B3];

    pub fn name(self) -> &'static str {
        match self {
            SetId::B1 => "B1",
            SetId::B2 => "B2",
            SetId::B3 => "B3",
        }
    }
}

impl fmt::Display for SetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SetId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SetId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown set `{s}`")))
    }
}

/// Thresholds at one `x`, natural logarithms throughout.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Thresholds {
    /// `(log log x)²`
    powerful: f64,
    /// `½ log log x`
    omega_low: f64,
    /// `2 log log x`
    omega_high: f64,
}

impl Thresholds {
    fn at(x: u64) -> Self {
        let ll = log_log(x);
        Thresholds { powerful: ll * ll, omega_low: 0.5 * ll, omega_high: 2.0 * ll }
    }

    #[inline]
    fn omega_typical(&self, w: u8) -> bool {
        let w = f64::from(w);
        self.omega_low <= w && w <= self.omega_high
    }
}

/// Exact membership counts over `n ≤ x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CensusCounts {
    pub x: u64,
    pub b1: u64,
    pub b2: u64,
    /// `B2 \ B1`
    pub b2_only: u64,
    /// complement of `B1 ∪ B2`
    pub rest: u64,
    pub b3: u64,
    pub squarefree: u64,
}

impl CensusCounts {
    pub fn count(&self, set: SetId) -> u64 {
        match set {
            SetId::B1 => self.b1,
            SetId::B2 => self.b2,
            SetId::B3 => self.b3,
        }
    }

    /// `B1`, `B2 \ B1` and the complement partition `{1, …, x}`.
    pub fn partition_total(&self) -> u64 {
        self.b1 + self.b2_only + self.rest
    }

    /// `#B3 ≥ #squarefree − #B2`.
    pub fn set_difference_holds(&self) -> bool {
        self.b3 + self.b2 >= self.squarefree
    }

    /// `count · log log x / x` for `B1`, `B2`; `count / x` for `B3`.
    pub fn density(&self, set: SetId) -> f64 {
        let c = self.count(set) as f64;
        let x = self.x as f64;
        match set {
            SetId::B1 | SetId::B2 => c * log_log(self.x) / x,
            SetId::B3 => c / x,
        }
    }

    /// Deviation `(#squarefree − 6x/π²)/√x`.
    pub fn squarefree_deviation(&self) -> f64 {
        let x = self.x as f64;
        (self.squarefree as f64 - 6.0 * x / (std::f64::consts::PI.powi(2))) / x.sqrt()
    }

    fn add(&mut self, other: &CensusCounts) {
        self.b1 += other.b1;
        self.b2 += other.b2;
        self.b2_only += other.b2_only;
        self.rest += other.rest;
        self.b3 += other.b3;
        self.squarefree += other.squarefree;
    }
}

/// Census of one exceptional set at one `x`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub x: u64,
    pub set_id: SetId,
    /// `(log log x)²` for `B1`; `½ log log x` for `B2`, `B3`.
    pub threshold_low: f64,
    /// `(log log x)²` for `B1`; `2 log log x` for `B2`, `B3`.
    pub threshold_high: f64,
    pub count: u64,
    pub density_ratio: f64,
    pub verdict: bool,
    pub squarefree_count: u64,
}

impl LemmaReport {
    pub fn from_counts(counts: &CensusCounts, set_id: SetId) -> Self {
        let t = Thresholds::at(counts.x);
        let (threshold_low, threshold_high) = match set_id {
            SetId::B1 => (t.powerful, t.powerful),
            SetId::B2 | SetId::B3 => (t.omega_low, t.omega_high),
        };
        let density_ratio = counts.density(set_id);
        let verdict = match set_id {
            SetId::B1 => density_ratio <= windows::B1_DENSITY.1,
            SetId::B2 => density_ratio <= windows::B2_DENSITY.1,
            SetId::B3 => {
                density_ratio >= windows::B3_DENSITY_FLOOR
                    && counts.b3 <= counts.squarefree
                    && counts.squarefree <= counts.x
                    && counts.set_difference_holds()
            }
        };
        LemmaReport {
            x: counts.x,
            set_id,
            threshold_low,
            threshold_high,
            count: counts.count(set_id),
            density_ratio,
            verdict,
            squarefree_count: counts.squarefree,
        }
    }
}

fn count_range(block: &ArithBlock, end: usize, t: &Thresholds, out: &mut CensusCounts) {
    let (d, omega, bpart) = (block.d_table(), block.omega_table(), block.bpart());
    for i in 0..end {
        let in_b1 = bpart[i] as f64 > t.powerful;
        let typical = t.omega_typical(omega[i]);
        let squarefree = bpart[i] == 1;
        debug_assert!(!squarefree || u32::from(d[i]) == 1 << omega[i]);
        out.b1 += u64::from(in_b1);
        out.b2 += u64::from(!typical);
        out.b2_only += u64::from(!typical && !in_b1);
        out.rest += u64::from(typical && !in_b1);
        out.squarefree += u64::from(squarefree);
        out.b3 += u64::from(squarefree && typical);
    }
}

impl Lab {
    /// Exact censuses at every grid point, in one sieve pass. Each grid
    /// point uses its own thresholds.
    pub fn census_scan(&self, grid: &[u64]) -> Result<Vec<CensusCounts>> {
        let x_max = *grid.last().ok_or(Error::EmptyGrid)?;
        validate_grid(grid, MIN_LOGLOG_X, x_max)?;
        let thresholds: Vec<Thresholds> = grid.iter().map(|&x| Thresholds::at(x)).collect();

        let partials = self.scan(x_max, |block| {
            let first = grid.partition_point(|&x| x < block.lo());
            let mut counts = vec![CensusCounts::default(); grid.len()];
            for k in first..grid.len() {
                let end = ((grid[k] + 1).min(block.hi()) - block.lo()) as usize;
                count_range(block, end, &thresholds[k], &mut counts[k]);
            }
            Ok(counts)
        })?;

        let mut totals: Vec<CensusCounts> =
            grid.iter().map(|&x| CensusCounts { x, ..CensusCounts::default() }).collect();
        for part in &partials {
            for (t, p) in totals.iter_mut().zip(part) {
                t.add(p);
            }
        }
        Ok(totals)
    }

    pub fn census(&self, set_id: SetId, x: u64) -> Result<LemmaReport> {
        if x < MIN_LOGLOG_X {
            return Err(Error::GridBelowMinimum { x, min: MIN_LOGLOG_X });
        }
        let counts = self.census_scan(&[x])?;
        Ok(LemmaReport::from_counts(&counts[0], set_id))
    }
}
