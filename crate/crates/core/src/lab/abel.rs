use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sieve::enumerate_powerful;
use crate::summation::NeumaierSum;

/// Agreement tolerance between the two evaluations, relative.
pub const ABEL_RTOL: f64 = 1e-9;

/// `Σ_{Y<b≤Z, b powerful} 1/b` evaluated directly and through partial
/// summation against the counting function `k(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AbelCheck {
    pub y: f64,
    pub z: f64,
    pub direct: f64,
    pub abel: f64,
}

impl AbelCheck {
    pub fn agrees(&self) -> bool {
        let scale = self.direct.abs().max(self.abel.abs());
        (self.direct - self.abel).abs() <= ABEL_RTOL * scale + 1e-15
    }
}

/// Evaluates `k(Z)/Z − k(Y)/Y + ∫_Y^Z k(t)/t² dt` exactly piece by piece:
/// `k` is constant between consecutive powerful numbers, so each flat
/// piece `[s, t)` contributes `k(s)·(1/s − 1/t)`.
pub fn abel_check(y: f64, z: f64) -> Result<AbelCheck> {
    if !(y.is_finite() && z.is_finite() && y >= 1.0) {
        return Err(Error::InvalidArgument(format!("abel check needs finite 1 <= Y < Z, got ({y}, {z})")));
    }
    if y >= z {
        return Err(Error::InvalidArgument(format!("abel check needs Y < Z, got ({y}, {z})")));
    }
    let list = enumerate_powerful(z.floor() as u64);
    let inside: Vec<u64> = list.values.iter().copied().filter(|&b| b as f64 > y).collect();

    let direct: NeumaierSum = inside.iter().map(|&b| 1.0 / b as f64).collect();

    let k_y = list.values.len() - inside.len();
    let k_z = list.values.len();
    let mut abel = NeumaierSum::new();
    abel.add(k_z as f64 / z);
    abel.add(-(k_y as f64) / y);
    let mut left = y;
    let mut k = k_y as f64;
    for &b in &inside {
        let b = b as f64;
        abel.add(k * (1.0 / left - 1.0 / b));
        left = b;
        k += 1.0;
    }
    abel.add(k * (1.0 / left - 1.0 / z));

    Ok(AbelCheck { y, z, direct: direct.value(), abel: abel.value() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_to_hundred() {
        let r = abel_check(4.0, 100.0).unwrap();
        let expected: f64 = [8u64, 9, 16, 25, 27, 32, 36, 49, 64, 72, 81, 100].iter().map(|&b| 1.0 / b as f64).sum();
        assert!((r.direct - expected).abs() < 1e-15);
        assert!(r.agrees());
    }

    #[test]
    fn empty_interval() {
        let r = abel_check(50.0, 50.5).unwrap();
        assert_eq!(r.direct, 0.0);
        assert!(r.abel.abs() < 1e-15);
        assert!(r.agrees());
    }

    #[test]
    fn non_integer_endpoints() {
        let r = abel_check(16.5, 1000.25).unwrap();
        assert!(r.agrees());
        let r2 = abel_check(16.0, 1000.0).unwrap();
        // 16 itself is excluded in both
        assert!((r.direct - r2.direct).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_bounds() {
        assert!(abel_check(100.0, 100.0).is_err());
        assert!(abel_check(100.0, 10.0).is_err());
        assert!(abel_check(0.5, 10.0).is_err());
        assert!(abel_check(1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn agrees_to_million() {
        assert!(abel_check(4.0, 1e6).unwrap().agrees());
        assert!(abel_check(100.0, 1e6).unwrap().agrees());
    }
}
