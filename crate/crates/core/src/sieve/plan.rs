/// Default block length, 2²² integers.
pub const DEFAULT_BLOCK_LEN: u64 = 1 << 22;

/// Consecutive `[lo, hi)` windows covering `1..=x_max`; the last one may be
/// shorter.
pub fn block_ranges(x_max: u64, block_len: u64) -> Vec<(u64, u64)> {
    assert!(block_len > 0, "block length must be positive");
    let end = x_max + 1;
    (0..)
        .map(|k| 1 + k * block_len)
        .take_while(|&lo| lo < end)
        .map(|lo| (lo, (lo + block_len).min(end)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covers_range_exactly() {
        assert_eq!(block_ranges(10, 4), vec![(1, 5), (5, 9), (9, 11)]);
        assert_eq!(block_ranges(8, 4), vec![(1, 5), (5, 9)]);
        assert_eq!(block_ranges(1, 1 << 22), vec![(1, 2)]);
        assert!(block_ranges(0, 4).is_empty());
    }
}
