use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::summation::NeumaierSum;

use super::{log_log, marks_in, validate_grid, Lab, MIN_LOGLOG_X};

/// More than enough buckets: `ω(n) ≤ 11` below 10¹².
const OMEGA_BUCKETS: usize = 16;

/// `Σ_{n≤N} (ω(n) − log log N)²` and its ratio to `N log log N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TuranReport {
    #[serde(rename = "N")]
    pub n: u64,
    pub variance_sum: f64,
    pub ratio: f64,
}

type Histogram = [u64; OMEGA_BUCKETS];

fn add_into(acc: &mut Histogram, other: &Histogram) {
    acc.iter_mut().zip(other).for_each(|(a, b)| *a += b);
}

impl TuranReport {
    /// Builds the report from the exact distribution of `ω(n)` over `n ≤ N`.
    pub fn from_histogram(n: u64, histogram: &[u64]) -> Self {
        let ll = log_log(n);
        let variance_sum: NeumaierSum = histogram
            .iter()
            .enumerate()
            .map(|(w, &c)| c as f64 * (w as f64 - ll).powi(2))
            .collect();
        let variance_sum = variance_sum.value();
        TuranReport { n, variance_sum, ratio: variance_sum / (n as f64 * ll) }
    }
}

impl Lab {
    /// Turán variance sums at every grid point, in one sieve pass.
    pub fn turan_scan(&self, grid: &[u64]) -> Result<Vec<TuranReport>> {
        let x_max = *grid.last().ok_or(Error::EmptyGrid)?;
        validate_grid(grid, MIN_LOGLOG_X, x_max)?;
        let partials = self.scan(x_max, |block| {
            let marks = marks_in(block, grid);
            let mut hist = [0u64; OMEGA_BUCKETS];
            let mut snaps = Vec::with_capacity(marks.len());
            let mut from = 0;
            for &(k, off) in &marks {
                for &w in &block.omega_table()[from..=off] {
                    hist[w as usize] += 1;
                }
                from = off + 1;
                snaps.push((k, hist));
            }
            for &w in &block.omega_table()[from..] {
                hist[w as usize] += 1;
            }
            Ok((hist, snaps))
        })?;

        let mut running = [0u64; OMEGA_BUCKETS];
        let mut reports = Vec::with_capacity(grid.len());
        for (total, snaps) in &partials {
            for (k, snap) in snaps {
                let mut at = running;
                add_into(&mut at, snap);
                reports.push(TuranReport::from_histogram(grid[*k], &at));
            }
            add_into(&mut running, total);
        }
        Ok(reports)
    }

    pub fn turan_ratio(&self, n: u64) -> Result<TuranReport> {
        if n < MIN_LOGLOG_X {
            return Err(Error::GridBelowMinimum { x: n, min: MIN_LOGLOG_X });
        }
        Ok(self.turan_scan(&[n])?.remove(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith;
    use crate::lab::LabConfig;

    fn brute(n: u64) -> f64 {
        let ll = (n as f64).ln().ln();
        (1..=n).map(|k| (f64::from(arith::omega(k).unwrap()) - ll).powi(2)).sum()
    }

    #[test]
    fn hundred_matches_per_n_loop() {
        let lab = Lab::new(LabConfig { block_len: 30, threads: 2 }).unwrap();
        let r = lab.turan_ratio(100).unwrap();
        let b = brute(100);
        assert!((r.variance_sum - b).abs() <= 1e-9 * b);
        assert!(r.ratio > 0.0);
    }

    #[test]
    fn scan_equals_individual_runs() {
        let lab = Lab::new(LabConfig { block_len: 777, threads: 3 }).unwrap();
        let grid = [16, 776, 777, 778, 5000];
        let scan = lab.turan_scan(&grid).unwrap();
        for (r, &x) in scan.iter().zip(&grid) {
            assert_eq!(r.n, x);
            assert_eq!(*r, lab.turan_ratio(x).unwrap());
            assert!(r.variance_sum >= 0.0);
        }
    }

    #[test]
    fn rejects_small_n() {
        let lab = Lab::new(LabConfig { block_len: 30, threads: 1 }).unwrap();
        assert!(lab.turan_ratio(15).is_err());
    }
}
