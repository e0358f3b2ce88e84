use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::constants::{euler_gamma, linnik_constant, ramanujan_a1};
use crate::error::{Error, Result};
use crate::sieve::ArithBlock;
use crate::summation::NeumaierSum;

use super::{iterated, marks_in, validate_grid, Lab, MIN_SUM_X};

/// The divisor-sum families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    /// `Σ d(n)`
    D,
    /// `Σ 1/d(n)`
    RecipD,
    /// `Σ d(d(n))`
    Dd,
    /// `Σ 1/d(d(n))`
    RecipDd,
    /// `Σ d(n)²`
    DSquared,
    /// `Σ_{p≤x} d(p−1)`
    Titchmarsh,
    /// `Σ_{p≤x} 1/d(p−1)`
    Karatsuba,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::D,
        Family::RecipD,
        Family::Dd,
        Family::RecipDd,
        Family::DSquared,
        Family::Titchmarsh,
        Family::Karatsuba,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::D => "D",
            Family::RecipD => "RECIP_D",
            Family::Dd => "DD",
            Family::RecipDd => "RECIP_DD",
            Family::DSquared => "D_SQUARED",
            Family::Titchmarsh => "TITCHMARSH",
            Family::Karatsuba => "KARATSUBA",
        }
    }


    /// Main term the sum is divided by; `None` for `D_SQUARED`.
    pub fn main_term(self, x: u64) -> Option<f64> {
        let xf = x as f64;
        let lx = xf.ln();
        match self {
            Family::D => Some(xf * lx + (2.0 * norm_constants().gamma - 1.0) * xf),
            Family::RecipD => Some(norm_constants().a1 * xf / lx.sqrt()),
            Family::Dd => Some(xf * lx.ln()),
            Family::RecipDd => Some(xf / lx.ln()),
            Family::DSquared => None,
            Family::Titchmarsh => Some(norm_constants().linnik * xf),
            Family::Karatsuba => Some(xf / lx.powf(1.5)),
        }
    }

    pub fn normalized(self, x: u64, value: f64) -> f64 {
        self.main_term(x).map_or(0.0, |m| value / m)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family `{s}`")))
    }
}

struct NormConstants {
    gamma: f64,
    a1: f64,
    linnik: f64,
}

fn norm_constants() -> &'static NormConstants {
    static C: OnceLock<NormConstants> = OnceLock::new();
    C.get_or_init(|| NormConstants {
        gamma: euler_gamma(1e-10).expect("gamma").value,
        a1: ramanujan_a1(1e-8).expect("A1").value,
        linnik: linnik_constant(1e-10).expect("linnik").value,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub x: u64,
    pub value: f64,
    pub normalized_ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SumSeries {
    pub family: Family,
    pub checkpoints: Vec<Checkpoint>,
}

impl SumSeries {
    pub fn value_at(&self, x: u64) -> Option<f64> {
        self.checkpoints.iter().find(|c| c.x == x).map(|c| c.value)
    }
}

struct BlockPartial {
    total: NeumaierSum,
    marks: Vec<(usize, NeumaierSum)>,
}

/// `d(lo + i − 1)`, reaching into the previous block for `i = 0`.
fn d_before(block: &ArithBlock, i: usize) -> Result<u64> {
    if i > 0 {
        Ok(u64::from(block.d_table()[i - 1]))
    } else {
        arith::d(block.lo() - 1)
    }
}

fn summand(family: Family, block: &ArithBlock, i: usize) -> Result<Option<f64>> {
    let d = block.d_table()[i];
    let v = match family {
        Family::D => f64::from(d),
        Family::RecipD => 1.0 / f64::from(d),
        Family::Dd => f64::from(iterated(d)),
        Family::RecipDd => 1.0 / f64::from(iterated(d)),
        Family::DSquared => f64::from(d) * f64::from(d),
        Family::Titchmarsh | Family::Karatsuba => {
            if !block.is_prime_at(i) {
                return Ok(None);
            }
            let dp = d_before(block, i)? as f64;
            if family == Family::Titchmarsh {
                dp
            } else {
                1.0 / dp
            }
        }
    };
    Ok(Some(v))
}

fn block_partial(family: Family, block: &ArithBlock, grid: &[u64]) -> Result<BlockPartial> {
    let marks = marks_in(block, grid);
    let mut next = marks.iter().peekable();
    let mut acc = NeumaierSum::new();
    let mut snapshots = Vec::with_capacity(marks.len());
    for i in 0..block.len() {
        if let Some(v) = summand(family, block, i)? {
            acc.add(v);
        }
        while let Some(&&(k, off)) = next.peek() {
            if off != i {
                break;
            }
            snapshots.push((k, acc));
            next.next();
        }
    }
    Ok(BlockPartial { total: acc, marks: snapshots })
}

impl Lab {
    /// Partial sums of `family` at every grid point up to `x_max`.
    /// Prime-indexed families sum over primes `p ≤ x`.
    pub fn accumulate(&self, family: Family, x_max: u64, grid: &[u64]) -> Result<SumSeries> {
        if x_max < MIN_SUM_X {
            return Err(Error::GridBelowMinimum { x: x_max, min: MIN_SUM_X });
        }
        validate_grid(grid, MIN_SUM_X, x_max)?;
        // Nothing past the last checkpoint is reported.
        let end = *grid.last().unwrap();
        let partials = self.scan(end, |block| block_partial(family, block, grid))?;

        let mut checkpoints = Vec::with_capacity(grid.len());
        let mut running = NeumaierSum::new();
        for part in &partials {
            for (k, snap) in &part.marks {
                let mut at = running;
                at.merge(snap);
                let x = grid[*k];
                let value = at.value();
                checkpoints.push(Checkpoint { x, value, normalized_ratio: family.normalized(x, value) });
            }
            running.merge(&part.total);
        }
        debug_assert_eq!(checkpoints.len(), grid.len());
        Ok(SumSeries { family, checkpoints })
    }
}

/// Half-decade grid `round(10^{k/2})` from `10⁴` through `x_max`, closed
/// with `x_max` itself. Below `10⁴` the grid is just `x_max`.
pub fn default_grid(x_max: u64) -> Vec<u64> {
    let mut grid: Vec<u64> = (8..)
        .map(|k| 10f64.powf(f64::from(k) / 2.0).round() as u64)
        .take_while(|&x| x <= x_max)
        .collect();
    if grid.last() != Some(&x_max) {
        grid.push(x_max);
    }
    grid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::LabConfig;

    fn lab(block_len: u64, threads: usize) -> Lab {
        Lab::new(LabConfig { block_len, threads }).unwrap()
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
            assert_eq!(f.name().to_lowercase().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn default_grid_shape() {
        assert_eq!(default_grid(100), vec![100]);
        assert_eq!(default_grid(100_000), vec![10_000, 31_623, 100_000]);
        assert_eq!(default_grid(200_000), vec![10_000, 31_623, 100_000, 200_000]);
    }

    #[test]
    fn first_block_prime_family_reaches_back() {
        // p = 5 starts the second block of length 4, so d(4) comes from
        // the previous block.
        let s = lab(4, 1).accumulate(Family::Titchmarsh, 10, &[10]).unwrap();
        assert_eq!(s.value_at(10), Some(10.0));
    }

    #[test]
    fn rejects_small_grid_points() {
        let l = lab(64, 1);
        assert!(matches!(l.accumulate(Family::D, 100, &[9]), Err(Error::GridBelowMinimum { .. })));
        assert!(matches!(l.accumulate(Family::D, 9, &[9]), Err(Error::GridBelowMinimum { .. })));
        assert!(matches!(l.accumulate(Family::D, 100, &[50, 20]), Err(Error::GridNotIncreasing { .. })));
    }

    #[test]
    fn values_nondecreasing_and_checkpoints_exact() {
        let grid: Vec<u64> = (10..=5000).step_by(37).collect();
        for family in Family::ALL {
            let s = lab(97, 2).accumulate(family, 5000, &grid).unwrap();
            assert_eq!(s.checkpoints.iter().map(|c| c.x).collect::<Vec<_>>(), grid);
            assert!(s.checkpoints.windows(2).all(|w| w[0].value <= w[1].value), "{family}");
        }
    }

    #[test]
    fn independent_of_threads_for_fixed_block_len() {
        let grid = default_grid(300_000);
        let a = lab(1 << 14, 1).accumulate(Family::RecipDd, 300_000, &grid).unwrap();
        let b = lab(1 << 14, 4).accumulate(Family::RecipDd, 300_000, &grid).unwrap();
        assert_eq!(a, b);
    }
}
