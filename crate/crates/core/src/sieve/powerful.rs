use serde::Serialize;

/// Integer cube root: the largest `r` with `r³ ≤ n`.
pub fn icbrt(n: u64) -> u64 {
    let mut r = (n as f64).cbrt() as u64;
    while r > 0 && r.checked_pow(3).is_none_or(|c| c > n) {
        r -= 1;
    }
    while (r + 1).checked_pow(3).is_some_and(|c| c <= n) {
        r += 1;
    }
    r
}

/// `flags[t]` is true when `t` is squarefree, for `0 < t ≤ limit`.
fn squarefree_flags(limit: u64) -> Vec<bool> {
    let limit = limit as usize;
    let mut flags = vec![true; limit + 1];
    flags[0] = false;
    let mut q = 2usize;
    while q * q <= limit {
        let mut m = q * q;
        while m <= limit {
            flags[m] = false;
            m += q * q;
        }
        q += 1;
    }
    flags
}

/// Powerful numbers up to a bound, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerfulList {
    pub bound: u64,
    pub values: Vec<u64>,
}

impl PowerfulList {
    /// `k(bound)`.
    pub fn count(&self) -> u64 {
        self.values.len() as u64
    }

    /// `k(x)` for any `x ≤ bound`.
    pub fn count_up_to(&self, x: u64) -> u64 {
        debug_assert!(x <= self.bound);
        self.values.partition_point(|&v| v <= x) as u64
    }
}

/// Every powerful number `≤ bound`, via the unique representation `s²t³`
/// with `t` squarefree.
pub fn enumerate_powerful(bound: u64) -> PowerfulList {
    let t_max = icbrt(bound);
    let flags = squarefree_flags(t_max);
    let mut values = Vec::new();
    for t in 1..=t_max {
        if !flags[t as usize] {
            continue;
        }
        let cube = t * t * t;
        let s_max = (bound / cube).isqrt();
        values.extend((1..=s_max).map(|s| s * s * cube));
    }
    values.sort_unstable();
    values.dedup();
    PowerfulList { bound, values }
}

/// `k(bound)` without materializing the list: the sum over squarefree
/// `t ≤ bound^{1/3}` of `⌊√(bound/t³)⌋`.
pub fn count_powerful(bound: u64) -> u64 {
    let t_max = icbrt(bound);
    let flags = squarefree_flags(t_max);
    (1..=t_max)
        .filter(|&t| flags[t as usize])
        .map(|t| (bound / (t * t * t)).isqrt())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_powerful;
    use crate::sieve::{sieve_block, BasePrimes};

    #[test]
    fn cube_roots() {
        assert_eq!(icbrt(0), 0);
        assert_eq!(icbrt(7), 1);
        assert_eq!(icbrt(8), 2);
        assert_eq!(icbrt(26), 2);
        assert_eq!(icbrt(27), 3);
        assert_eq!(icbrt(999_999_999_999), 9_999);
        assert_eq!(icbrt(u64::MAX), 2_642_245);
    }

    #[test]
    fn small_bounds_match_brute_force() {
        let brute = |x: u64| -> Vec<u64> { (1..=x).filter(|&n| is_powerful(n).unwrap()).collect() };
        let list = enumerate_powerful(100);
        assert_eq!(list.values, vec![1, 4, 8, 9, 16, 25, 27, 32, 36, 49, 64, 72, 81, 100]);
        assert_eq!(list.values, brute(100));
        assert_eq!(enumerate_powerful(4).values, vec![1, 4]);
        assert_eq!(enumerate_powerful(1).values, vec![1]);
        assert_eq!(count_powerful(100), 14);
        assert_eq!(count_powerful(1), 1);
        for x in 1..=3000 {
            assert_eq!(count_powerful(x), brute(x).len() as u64, "x = {x}");
        }
    }

    #[test]
    fn k_of_million_pinned_by_sieve_oracle() {
        // n is powerful exactly when its powerful part is n itself.
        let x = 1_000_000;
        let block = sieve_block(1, x + 1, &BasePrimes::for_range_end(x + 1)).unwrap();
        let sieved: Vec<u64> = block
            .bpart()
            .iter()
            .enumerate()
            .filter(|&(i, &b)| b == i as u64 + 1)
            .map(|(_, &b)| b)
            .collect();
        let list = enumerate_powerful(x);
        assert_eq!(list.values, sieved);
        assert_eq!(list.count(), 2_027);
        assert_eq!(count_powerful(x), 2_027);
    }

    #[test]
    fn closed_form_matches_enumeration_on_geometric_grid() {
        let mut x = 1u64;
        while x <= 1_000_000 {
            assert_eq!(count_powerful(x), enumerate_powerful(x).count(), "x = {x}");
            x = x * 3 + 1;
        }
    }

    #[test]
    fn list_invariants() {
        let list = enumerate_powerful(200_000);
        assert_eq!(list.values[0], 1);
        assert!(list.values.windows(2).all(|w| w[0] < w[1]));
        assert!(list.values.iter().all(|&v| is_powerful(v).unwrap()));
        assert_eq!(list.count_up_to(100), 14);
        assert_eq!(list.count_up_to(99), 13);
    }
}
