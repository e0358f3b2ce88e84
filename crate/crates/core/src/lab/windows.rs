//! Frozen regression windows.
//!
//! Produced by `cargo run --release --example measure_windows` and widened by
//! a margin around the measured range. Values measured on the oracle run:
//!
//! | quantity | 10⁴ | 10⁵ | 10⁶ | 10⁷ | 10⁸ |
//! |---|---|---|---|---|---|
//! | `#B1·log log x/x` | 0.6443 | 0.7104 | 0.7635 | 0.8083 | |
//! | `#B2·log log x/x` | 0.2918 | 0.2820 | 0.2128 | 0.2056 | |
//! | `#B3/x` | 0.4829 | 0.5027 | 0.5282 | 0.5381 | |
//! | `(#sqf − 6x/π²)/√x` | 0.0373 | 0.0041 | −0.0011 | 0.0063 | |
//! | Turán ratio | 0.3352 | 0.3662 | 0.3934 | 0.4164 | |
//! | `R(x)` | 0.6180 | 0.6368 | 0.6514 | 0.6631 | 0.6726 |
//!
//! Turán at `N = 10³`: 0.3030. At `x = 10⁷`: `Σ_{p≤x} d(p−1)/x` is 0.99426
//! times `ζ(2)ζ(3)/ζ(6)`, and `A₁` is 0.97911 times
//! `Σ_{n≤x} 1/d(n)·√(log x)/x`.

/// `#B1(x)·log log x / x` on `x ∈ {10⁴, …, 10⁷}`.
pub const B1_DENSITY: (f64, f64) = (0.60, 0.90);

/// `#B2(x)·log log x / x` on `x ∈ {10⁴, …, 10⁷}`.
pub const B2_DENSITY: (f64, f64) = (0.18, 0.32);

/// `#B3(x)/x` on `x ∈ {10⁴, …, 10⁷}`.
pub const B3_DENSITY: (f64, f64) = (0.45, 0.57);

/// Positive lower bound for `#B3(x)/x`.
pub const B3_DENSITY_FLOOR: f64 = B3_DENSITY.0;

/// `C` in `|#squarefree(x) − 6x/π²| ≤ C√x`.
pub const SQUAREFREE_C: f64 = 0.05;

/// `Σ_{n≤N} (ω(n) − log log N)² / (N log log N)` on `N ∈ {10³, …, 10⁷}`.
pub const TURAN_RATIO: (f64, f64) = (0.28, 0.45);

/// `R(x) = Σ_{n≤x} 1/d(d(n)) · log log x / x` on `x ∈ {10⁴, …, 10⁸}`.
pub const MAIN_RATIO: (f64, f64) = (0.60, 0.70);

/// `Σ_{p≤x} d(p−1) / (x·ζ(2)ζ(3)/ζ(6))` at `x = 10⁷`.
pub const TITCHMARSH_RATIO: (f64, f64) = (0.97, 1.01);

/// `A₁ / (Σ_{n≤x} 1/d(n)·√(log x)/x)` at `x = 10⁷`. The normalized sum
/// still carries the lower-order terms there and sits above `A₁`.
pub const A1_BRACKET_RATIO: (f64, f64) = (0.95, 1.0);

pub fn inside(window: (f64, f64), v: f64) -> bool {
    window.0 <= v && v <= window.1
}
