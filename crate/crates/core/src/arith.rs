//! Exact single-integer arithmetic functions.
//!
//! Everything here works from the canonical factorization `n = Π pᵢ^eᵢ`.
//! The split `n = a(n)·b(n)` separates the primes dividing `n` exactly once
//! (the squarefree part `a`) from the prime powers with exponent above one
//! (the powerful part `b`). Together with `d(n) = 2^{ω(a(n))}·d(b(n))` this
//! drives the lower bound `d(d(n)) ≥ ω(a(n)) + 1`.
//!
//! Conventions for `n = 1` follow the empty product: `d(1) = a(1) = b(1) = 1`,
//! `ω(1) = Ω(1) = 0` and `decompose(1) = (0, 0, 1)`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sieve::primes_up_to;

/// Largest accepted input, `2^63 - 1`.
pub const MAX_INPUT: u64 = i64::MAX as u64;

/// Trial division uses this cached prime table first, then falls back to
/// `6k ± 1` candidates for the rare inputs with large prime factors.
const CACHED_PRIME_LIMIT: u64 = 1 << 20;

fn cached_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(CACHED_PRIME_LIMIT))
}

/// Canonical prime factorization: strictly increasing primes, exponents ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Factorization {
    entries: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn entries(&self) -> &[(u64, u32)] {
        &self.entries
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    /// Multiplies the factorization back out. `None` on overflow.
    pub fn value(&self) -> Option<u64> {
        self.entries.iter().try_fold(1u64, |acc, &(p, e)| {
            acc.checked_mul(p.checked_pow(e)?)
        })
    }

    pub fn divisor_count(&self) -> u64 {
        self.entries.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }

    pub fn distinct_primes(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn total_primes(&self) -> u32 {
        self.entries.iter().map(|&(_, e)| e).sum()
    }

    pub fn squarefree_part(&self) -> u64 {
        self.entries
            .iter()
            .filter(|&&(_, e)| e == 1)
            .map(|&(p, _)| p)
            .product()
    }

    pub fn powerful_part(&self) -> u64 {
        self.entries
            .iter()
            .filter(|&&(_, e)| e > 1)
            .map(|&(p, e)| p.pow(e))
            .product()
    }
}

fn check_input(n: u64) -> Result<()> {
    match n {
        0 => Err(Error::ZeroInput),
        n if n > MAX_INPUT => Err(Error::InputTooLarge(n)),
        _ => Ok(()),
    }
}

/// Strips every factor `p` from `m`, returning the exponent removed.
#[inline]
fn strip(m: &mut u64, p: u64) -> u32 {
    let mut e = 0;
    while (*m).is_multiple_of(p) {
        *m /= p;
        e += 1;
    }
    e
}

pub fn factorize(n: u64) -> Result<Factorization> {
    check_input(n)?;
    let mut m = n;
    let mut entries = Vec::new();

    for &p in cached_primes() {
        if p * p > m {
            break;
        }
        let e = strip(&mut m, p);
        if e > 0 {
            entries.push((p, e));
        }
    }

    // Past the cache: candidates 6k ± 1 above the cache limit. Composite
    // candidates never divide since their prime factors were removed.
    let mut k = CACHED_PRIME_LIMIT / 6 + 1;
    while m > 1 {
        let lo = 6 * k - 1;
        if lo.saturating_mul(lo) > m {
            break;
        }
        for c in [lo, lo + 2] {
            let e = strip(&mut m, c);
            if e > 0 {
                entries.push((c, e));
            }
        }
        k += 1;
    }

    if m > 1 {
        entries.push((m, 1));
    }

    let f = Factorization { entries };
    debug_assert_eq!(f.value(), Some(n));
    Ok(f)
}

/// Number of divisors.
pub fn d(n: u64) -> Result<u64> {
    Ok(factorize(n)?.divisor_count())
}

/// `d(d(n))`.
pub fn d_iterate(n: u64) -> Result<u64> {
    d(d(n)?)
}

/// Distinct prime factors `ω(n)`.
pub fn omega(n: u64) -> Result<u32> {
    Ok(factorize(n)?.distinct_primes())
}

/// Prime factors with multiplicity `Ω(n)`.
pub fn big_omega(n: u64) -> Result<u32> {
    Ok(factorize(n)?.total_primes())
}

/// `a(n)`: product of the primes dividing `n` exactly once.
pub fn squarefree_part(n: u64) -> Result<u64> {
    Ok(factorize(n)?.squarefree_part())
}

/// `b(n)`: product of the prime powers of `n` with exponent above one.
pub fn powerful_part(n: u64) -> Result<u64> {
    Ok(factorize(n)?.powerful_part())
}

pub fn is_powerful(n: u64) -> Result<bool> {
    Ok(factorize(n)?.entries().iter().all(|&(_, e)| e >= 2))
}

pub fn is_squarefree(n: u64) -> Result<bool> {
    Ok(factorize(n)?.entries().iter().all(|&(_, e)| e == 1))
}

/// The split `d(n) = 2^{omega_a + u}·v` with `v` odd, where
/// `omega_a = ω(a(n))` and `2^u·v = d(b(n))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorDecomposition {
    pub omega_a: u32,
    pub u: u32,
    pub v: u64,
}

impl DivisorDecomposition {
    /// Builds the decomposition from `ω(a(n))` and `d(b(n))`.
    pub fn from_parts(omega_a: u32, d_b: u64) -> Self {
        debug_assert!(d_b > 0);
        let u = d_b.trailing_zeros();
        DivisorDecomposition { omega_a, u, v: d_b >> u }
    }

    /// `2^{omega_a + u}·v`, which equals `d(n)`.
    pub fn divisor_count(&self) -> u64 {
        self.v << (self.omega_a + self.u)
    }

    /// `(omega_a + u + 1)·d(v)`, which equals `d(d(n))` because the
    /// power of two and `v` are coprime.
    pub fn iterated_divisor_count(&self) -> Result<u64> {
        Ok(u64::from(self.omega_a + self.u + 1) * d(self.v)?)
    }
}

pub fn decompose(n: u64) -> Result<DivisorDecomposition> {
    let f = factorize(n)?;
    let omega_a = f.entries().iter().filter(|&&(_, e)| e == 1).count() as u32;
    let d_b = f
        .entries()
        .iter()
        .filter(|&&(_, e)| e > 1)
        .map(|&(_, e)| u64::from(e) + 1)
        .product();
    Ok(DivisorDecomposition::from_parts(omega_a, d_b))
}
