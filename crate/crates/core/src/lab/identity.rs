use serde::{Deserialize, Serialize};

use crate::arith::{self, DivisorDecomposition};
use crate::error::Result;
use crate::sieve::ArithBlock;

use super::{iterated, small_divisor_counts, Lab};

/// Which relation failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityKind {
    /// `d(n) = 2^{ω(a(n))}·d(b(n))`
    PowerfulSplit,
    /// `d(d(n)) = (ω(a(n)) + u(n) + 1)·d(v(n))`
    IteratedSplit,
    /// `d(d(n)) ≥ ω(a(n)) + 1`
    LowerBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: u64,
    pub kind: IdentityKind,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub x_max: u64,
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
}

impl IdentityReport {
    pub fn success(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks one `n` from its sieve entries. `ω(b)` and `d(b)` come from a
/// fresh factorization of `b`, independent of the sieve's `d(n)`.
fn check_one(n: u64, d_n: u16, omega_n: u8, b: u64) -> Result<Option<Counterexample>> {
    let (omega_b, d_b) = if b == 1 {
        (0, 1)
    } else {
        let f = arith::factorize(b)?;
        (f.distinct_primes(), f.divisor_count())
    };
    let fail = |kind, lhs, rhs| Ok(Some(Counterexample { n, kind, lhs, rhs }));

    let d_n = u64::from(d_n);
    let Some(omega_a) = u32::from(omega_n).checked_sub(omega_b) else {
        return fail(IdentityKind::PowerfulSplit, d_n, 0);
    };
    let rhs = (1u64 << omega_a) * d_b;
    if d_n != rhs {
        return fail(IdentityKind::PowerfulSplit, d_n, rhs);
    }

    let dec = DivisorDecomposition::from_parts(omega_a, d_b);
    let dd = u64::from(iterated(d_n as u16));
    let d_v = u64::from(small_divisor_counts()[dec.v as usize]);
    let rhs = u64::from(dec.omega_a + dec.u + 1) * d_v;
    if dd != rhs {
        return fail(IdentityKind::IteratedSplit, dd, rhs);
    }
    if dd < u64::from(omega_a) + 1 {
        return fail(IdentityKind::LowerBound, dd, u64::from(omega_a) + 1);
    }
    Ok(None)
}

fn scan_block(block: &ArithBlock) -> Result<Option<Counterexample>> {
    for i in 0..block.len() {
        let n = block.lo() + i as u64;
        if let Some(c) = check_one(n, block.d_table()[i], block.omega_table()[i], block.bpart()[i])? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

impl Lab {
    /// Checks both divisor identities and the lower bound for every
    /// `n ≤ x_max`, reporting the smallest counterexample if any.
    pub fn identity_scan(&self, x_max: u64) -> Result<IdentityReport> {
        if x_max == 0 {
            return Ok(IdentityReport { x_max, checked: 0, counterexample: None });
        }
        let found = self.scan(x_max, scan_block)?;
        Ok(IdentityReport { x_max, checked: x_max, counterexample: found.into_iter().flatten().next() })
    }
}
