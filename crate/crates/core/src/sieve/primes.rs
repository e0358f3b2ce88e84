/// All primes `≤ limit`, ascending. Odd-only sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    // index i stands for 2i + 1
    let half = ((limit - 1) / 2 + 1) as usize;
    let mut composite = vec![false; half];
    composite[0] = true;
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) <= limit as usize {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = p * p / 2;
            while j < half {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let estimate = (limit as f64 / (limit as f64).ln().max(1.0) * 1.3) as usize + 8;
    let mut primes = Vec::with_capacity(estimate);
    primes.push(2);
    primes.extend(
        composite
            .iter()
            .enumerate()
            .filter(|&(_, &c)| !c)
            .map(|(i, _)| 2 * i as u64 + 1),
    );
    primes
}

/// Primes complete up to `limit`. Any cofactor left after removing these
/// primes that is below `(limit + 1)²` is itself prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasePrimes {
    primes: Vec<u64>,
    limit: u64,
}

impl BasePrimes {
    pub fn up_to(limit: u64) -> Self {
        BasePrimes { primes: primes_up_to(limit), limit }
    }

    /// Base primes sufficient to sieve every block below `hi`.
    pub fn for_range_end(hi: u64) -> Self {
        Self::up_to(hi.saturating_sub(1).isqrt())
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Whether a cofactor free of base primes is certainly prime.
    pub(crate) fn certifies(&self, residual: u64) -> bool {
        let bound = u128::from(self.limit) + 1;
        u128::from(residual) < bound * bound
    }
}
