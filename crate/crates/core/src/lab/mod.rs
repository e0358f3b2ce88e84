//! Partial sums, exceptional-set censuses and verification reports, all
//! computed by block-parallel sieve passes.
//!
//! Blocks are fixed by `block_len` alone, and per-block partial results are
//! merged in block order, so every report is independent of the thread
//! count.

mod abel;
mod c3;
mod census;
mod golomb;
mod identity;
pub mod report;
mod series;
mod turan;
pub mod windows;

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sieve::{block_ranges, sieve_block, ArithBlock, BasePrimes, DEFAULT_BLOCK_LEN};

pub use abel::{abel_check, AbelCheck};
pub use c3::C3Row;
pub use census::{CensusCounts, LemmaReport, SetId};
pub use golomb::{golomb_check, GolombRow};
pub use identity::{Counterexample, IdentityKind, IdentityReport};
pub use series::{default_grid, Checkpoint, Family, SumSeries};
pub use turan::TuranReport;

/// Smallest `x` for log log–normalized quantities; `log log 16 > 1`.
pub const MIN_LOGLOG_X: u64 = 16;

/// Smallest checkpoint for partial sums.
pub const MIN_SUM_X: u64 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabConfig {
    pub block_len: u64,
    pub threads: usize,
}

impl Default for LabConfig {
    fn default() -> Self {
        let threads = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
        LabConfig { block_len: DEFAULT_BLOCK_LEN, threads }
    }
}

/// Entry point for every sieve-backed computation.
pub struct Lab {
    config: LabConfig,
    pool: rayon::ThreadPool,
}

impl Lab {
    pub fn new(config: LabConfig) -> Result<Self> {
        if config.block_len == 0 {
            return Err(Error::InvalidArgument("block length must be positive".into()));
        }
        if config.threads == 0 {
            return Err(Error::InvalidArgument("thread count must be positive".into()));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        Ok(Lab { config, pool })
    }

    pub fn config(&self) -> LabConfig {
        self.config
    }

    /// Sieves `1..=x_max` block by block and maps each block through `f`.
    /// Results come back in block order.
    pub(crate) fn scan<T, F>(&self, x_max: u64, f: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(&ArithBlock) -> Result<T> + Sync,
    {
        let base = BasePrimes::for_range_end(x_max + 1);
        let ranges = block_ranges(x_max, self.config.block_len);
        self.pool.install(|| {
            ranges
                .par_iter()
                .map(|&(lo, hi)| f(&sieve_block(lo, hi, &base)?))
                .collect()
        })
    }
}

/// `d(k)` for every `k < 2¹⁶`, covering every value of a block's d-table.
pub(crate) fn small_divisor_counts() -> &'static [u8] {
    static TABLE: OnceLock<Vec<u8>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let hi = 1u64 << 16;
        let block = sieve_block(1, hi, &BasePrimes::for_range_end(hi)).expect("fixed range");
        std::iter::once(0u8)
            .chain(block.d_table().iter().map(|&d| d as u8))
            .collect()
    })
}

/// `d(d(n))` from a block's `d(n)` entry.
#[inline]
pub(crate) fn iterated(d_n: u16) -> u8 {
    small_divisor_counts()[d_n as usize]
}

/// Checks that `grid` is strictly increasing inside `[min, x_max]`.
pub fn validate_grid(grid: &[u64], min: u64, x_max: u64) -> Result<()> {
    let Some(&first) = grid.first() else {
        return Err(Error::EmptyGrid);
    };
    if first < min {
        return Err(Error::GridBelowMinimum { x: first, min });
    }
    for w in grid.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::GridNotIncreasing { prev: w[0], next: w[1] });
        }
    }
    let last = *grid.last().unwrap();
    if last > x_max {
        return Err(Error::GridAboveMax { x: last, x_max });
    }
    Ok(())
}

/// Grid points falling inside one block, as `(grid index, offset)`.
pub(crate) fn marks_in(block: &ArithBlock, grid: &[u64]) -> Vec<(usize, usize)> {
    let start = grid.partition_point(|&x| x < block.lo());
    grid[start..]
        .iter()
        .take_while(|&&x| x < block.hi())
        .enumerate()
        .map(|(k, &x)| (start + k, (x - block.lo()) as usize))
        .collect()
}

/// Natural `log log x`.
pub fn log_log(x: u64) -> f64 {
    (x as f64).ln().ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith;

    #[test]
    fn small_table_matches_arith() {
        let t = small_divisor_counts();
        assert_eq!(t.len(), 1 << 16);
        for k in 1..(1u64 << 16) {
            assert_eq!(u64::from(t[k as usize]), arith::d(k).unwrap());
        }
    }

    #[test]
    fn grid_validation() {
        assert!(validate_grid(&[10, 20, 30], 10, 30).is_ok());
        assert_eq!(validate_grid(&[], 10, 30), Err(Error::EmptyGrid));
        assert_eq!(validate_grid(&[9, 20], 10, 30), Err(Error::GridBelowMinimum { x: 9, min: 10 }));
        assert_eq!(validate_grid(&[10, 10], 10, 30), Err(Error::GridNotIncreasing { prev: 10, next: 10 }));
        assert_eq!(validate_grid(&[10, 31], 10, 30), Err(Error::GridAboveMax { x: 31, x_max: 30 }));
    }

    #[test]
    fn lab_rejects_zero_config() {
        assert!(Lab::new(LabConfig { block_len: 0, threads: 1 }).is_err());
        assert!(Lab::new(LabConfig { block_len: 16, threads: 0 }).is_err());
    }

    #[test]
    fn block_tables_agree_with_arith_across_blocks() {
        let lab = Lab::new(LabConfig { block_len: 4093, threads: 2 }).unwrap();
        let x_max = 200_000;
        let mismatches = lab
            .scan(x_max, |block| {
                let mut bad = 0usize;
                for i in (0..block.len()).step_by(19) {
                    let n = block.lo() + i as u64;
                    let f = arith::factorize(n).unwrap();
                    let ok = u64::from(block.d_table()[i]) == f.divisor_count()
                        && u32::from(block.omega_table()[i]) == f.distinct_primes()
                        && block.bpart()[i] == f.powerful_part()
                        && n.is_multiple_of(block.spf()[i]);
                    bad += usize::from(!ok);
                }
                Ok(bad)
            })
            .unwrap();
        assert_eq!(mismatches.iter().sum::<usize>(), 0);
    }

    #[test]
    fn block_concatenation_is_length_independent() {
        let x_max = 30_000u64;
        let whole = {
            let lab = Lab::new(LabConfig { block_len: x_max, threads: 1 }).unwrap();
            lab.scan(x_max, |b| Ok((b.d_table().to_vec(), b.omega_table().to_vec(), b.bpart().to_vec(), b.spf().to_vec())))
                .unwrap()
        };
        for len in [1u64, 7, 64, 1000, 29_999] {
            let lab = Lab::new(LabConfig { block_len: len, threads: 3 }).unwrap();
            let parts = lab
                .scan(x_max, |b| Ok((b.d_table().to_vec(), b.omega_table().to_vec(), b.bpart().to_vec(), b.spf().to_vec())))
                .unwrap();
            let mut joined = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
            for p in parts {
                joined.0.extend(p.0);
                joined.1.extend(p.1);
                joined.2.extend(p.2);
                joined.3.extend(p.3);
            }
            assert_eq!(joined, whole[0], "block_len = {len}");
        }
    }
}
