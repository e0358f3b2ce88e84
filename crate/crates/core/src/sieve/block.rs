use std::io::{self, Read, Write};

use crate::error::{Error, Result};

use super::primes::BasePrimes;

/// Exclusive upper end of any block. Divisor counts below this bound fit
/// in 16 bits (the maximum below 10¹² is 6720).
pub const MAX_BLOCK_END: u64 = 1_000_000_000_000;

/// Table widths in bytes, in field order: spf, d, ω, b.
const WIDTHS: [u8; 4] = [8, 2, 1, 8];

/// Arithmetic-function tables for the window `[lo, hi)`.
///
/// Entry `i` describes `n = lo + i`. For `n = 1` the smallest prime factor
/// is recorded as 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithBlock {
    lo: u64,
    hi: u64,
    spf: Vec<u64>,
    d: Vec<u16>,
    omega: Vec<u8>,
    bpart: Vec<u64>,
}

/// Sieves `[lo, hi)`, recovering the exact exponent of every base prime in
/// every element.
pub fn sieve_block(lo: u64, hi: u64, base: &BasePrimes) -> Result<ArithBlock> {
    if lo == 0 || lo >= hi {
        return Err(Error::InvalidRange { lo, hi, reason: "need 1 <= lo < hi" });
    }
    if hi > MAX_BLOCK_END {
        return Err(Error::InvalidRange { lo, hi, reason: "hi exceeds 10^12" });
    }
    let len = (hi - lo) as usize;
    let mut rest: Vec<u64> = (lo..hi).collect();
    let mut spf = vec![0u64; len];
    let mut d = vec![1u16; len];
    let mut omega = vec![0u8; len];
    let mut bpart = vec![1u64; len];

    let top = hi - 1;
    for &p in base.primes() {
        if p * p > top {
            break;
        }
        let first = lo.div_ceil(p) * p;
        let mut i = (first - lo) as usize;
        while i < len {
            let mut r = rest[i] / p;
            let mut e = 1u32;
            while r.is_multiple_of(p) {
                r /= p;
                e += 1;
            }
            rest[i] = r;
            d[i] *= (e + 1) as u16;
            omega[i] += 1;
            if spf[i] == 0 {
                spf[i] = p;
            }
            if e > 1 {
                bpart[i] *= p.pow(e);
            }
            i += p as usize;
        }
    }

    // Whatever survives is 1 or a single prime with exponent 1.
    for i in 0..len {
        let r = rest[i];
        if r > 1 {
            if !base.certifies(r) {
                return Err(Error::IncompleteBasePrimes {
                    n: lo + i as u64,
                    residual: r,
                    limit: base.limit(),
                });
            }
            d[i] *= 2;
            omega[i] += 1;
            if spf[i] == 0 {
                spf[i] = r;
            }
        } else if spf[i] == 0 {
            spf[i] = 1;
        }
    }

    Ok(ArithBlock { lo, hi, spf, d, omega, bpart })
}

impl ArithBlock {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    pub fn spf(&self) -> &[u64] {
        &self.spf
    }

    pub fn d_table(&self) -> &[u16] {
        &self.d
    }

    pub fn omega_table(&self) -> &[u8] {
        &self.omega
    }

    pub fn bpart(&self) -> &[u64] {
        &self.bpart
    }

    /// Whether `lo + i` is prime.
    #[inline]
    pub fn is_prime_at(&self, i: usize) -> bool {
        self.spf[i] == self.lo + i as u64 && self.spf[i] > 1
    }

    /// Writes the tables little-endian: `lo`, `hi` as u64, the four table
    /// widths as u8, then spf, d, ω and b in that order.
    pub fn write_dump<W: Write>(&self, mut w: W) -> io::Result<()> {
        w.write_all(&self.lo.to_le_bytes())?;
        w.write_all(&self.hi.to_le_bytes())?;
        w.write_all(&WIDTHS)?;
        for v in &self.spf {
            w.write_all(&v.to_le_bytes())?;
        }
        for v in &self.d {
            w.write_all(&v.to_le_bytes())?;
        }
        w.write_all(&self.omega)?;
        for v in &self.bpart {
            w.write_all(&v.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_dump<R: Read>(mut r: R) -> io::Result<Self> {
        fn bad(msg: &str) -> io::Error {
            io::Error::new(io::ErrorKind::InvalidData, msg.to_string())
        }
        let mut b8 = [0u8; 8];
        r.read_exact(&mut b8)?;
        let lo = u64::from_le_bytes(b8);
        r.read_exact(&mut b8)?;
        let hi = u64::from_le_bytes(b8);
        let mut widths = [0u8; 4];
        r.read_exact(&mut widths)?;
        if widths != WIDTHS {
            return Err(bad("unsupported table widths"));
        }
        if lo == 0 || lo >= hi || hi > MAX_BLOCK_END {
            return Err(bad("invalid block range"));
        }
        let len = (hi - lo) as usize;

        let mut raw = vec![0u8; len * 8];
        r.read_exact(&mut raw)?;
        let spf = raw.chunks_exact(8).map(|c| u64::from_le_bytes(c.try_into().unwrap())).collect();
        let mut raw = vec![0u8; len * 2];
        r.read_exact(&mut raw)?;
        let d = raw.chunks_exact(2).map(|c| u16::from_le_bytes([c[0], c[1]])).collect();
        let mut omega = vec![0u8; len];
        r.read_exact(&mut omega)?;
        let mut raw = vec![0u8; len * 8];
        r.read_exact(&mut raw)?;
        let bpart = raw.chunks_exact(8).map(|c| u64::from_le_bytes(c.try_into().unwrap())).collect();

        Ok(ArithBlock { lo, hi, spf, d, omega, bpart })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith;

    #[test]
    fn first_ten() {
        let base = BasePrimes::for_range_end(11);
        let block = sieve_block(1, 11, &base).unwrap();
        assert_eq!(block.d_table(), &[1, 2, 2, 3, 2, 4, 2, 4, 3, 4]);
        assert_eq!(block.omega_table(), &[0, 1, 1, 1, 1, 2, 1, 1, 1, 2]);
        assert_eq!(block.spf(), &[1, 2, 3, 2, 5, 2, 7, 2, 3, 2]);
        assert_eq!(block.bpart(), &[1, 1, 1, 4, 1, 1, 1, 8, 9, 1]);
    }

    #[test]
    fn single_element_block() {
        let base = BasePrimes::for_range_end(13);
        let block = sieve_block(12, 13, &base).unwrap();
        assert_eq!(block.bpart(), &[4]);
        assert_eq!(block.d_table(), &[6]);
    }

    #[test]
    fn rejects_bad_ranges() {
        let base = BasePrimes::up_to(100);
        assert!(matches!(sieve_block(0, 10, &base), Err(Error::InvalidRange { .. })));
        assert!(matches!(sieve_block(10, 10, &base), Err(Error::InvalidRange { .. })));
        assert!(matches!(
            sieve_block(MAX_BLOCK_END - 1, MAX_BLOCK_END + 1, &base),
            Err(Error::InvalidRange { .. })
        ));
    }

    #[test]
    fn incomplete_base_primes_detected() {
        // Primes up to 10 cannot certify 11² = 121 or 11·13 = 143.
        let base = BasePrimes::up_to(10);
        let err = sieve_block(100, 150, &base).unwrap_err();
        assert_eq!(err, Error::IncompleteBasePrimes { n: 121, residual: 121, limit: 10 });
        // But the same primes suffice below 121.
        assert!(sieve_block(100, 121, &base).is_ok());
    }

    #[test]
    fn agrees_with_arith_in_offset_window() {
        let (lo, hi) = (999_000_000_000u64, 999_000_020_000u64);
        let base = BasePrimes::for_range_end(hi);
        let block = sieve_block(lo, hi, &base).unwrap();
        for i in (0..block.len()).step_by(7) {
            let n = lo + i as u64;
            let f = arith::factorize(n).unwrap();
            assert_eq!(u64::from(block.d_table()[i]), f.divisor_count(), "n = {n}");
            assert_eq!(u32::from(block.omega_table()[i]), f.distinct_primes());
            assert_eq!(block.bpart()[i], f.powerful_part());
            assert_eq!(block.spf()[i], f.entries()[0].0);
        }
    }

    #[test]
    fn dump_round_trip() {
        let base = BasePrimes::for_range_end(5000);
        let block = sieve_block(4000, 5000, &base).unwrap();
        let mut buf = Vec::new();
        block.write_dump(&mut buf).unwrap();
        assert_eq!(buf.len(), 20 + 1000 * 19);
        assert_eq!(&buf[..8], &4000u64.to_le_bytes());
        assert_eq!(&buf[16..20], &[8, 2, 1, 8]);
        let back = ArithBlock::read_dump(buf.as_slice()).unwrap();
        assert_eq!(back, block);

        buf[16] = 4;
        assert!(ArithBlock::read_dump(buf.as_slice()).is_err());
    }
}
