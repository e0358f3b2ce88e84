//! Real constants with certified absolute error bounds.
//!
//! All arithmetic is `f64`. Every bound adds a floating-point slop term of
//! `1e-13` per started million accumulated terms on top of the analytic
//! truncation bound.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sieve::primes_up_to;
use crate::summation::NeumaierSum;

const SLOP_PER_MILLION: f64 = 1e-13;

/// Relative rounding allowance for closed forms and single operations.
const ROUNDING: f64 = 4.0 * f64::EPSILON;

/// Largest series length `zeta` will run.
const MAX_ZETA_TERMS: u64 = 1 << 31;

/// Largest prime cutoff for the `A₁` Euler product.
const MAX_EULER_PRIME: u64 = 200_000_000;

fn slop(terms: u64) -> f64 {
    SLOP_PER_MILLION * terms.div_ceil(1_000_000).max(1) as f64
}

/// A value with a certified absolute error and a note on how it was made.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstantValue {
    pub value: f64,
    pub abs_error: f64,
    pub method: String,
}

impl ConstantValue {
    pub fn lower(&self) -> f64 {
        self.value - self.abs_error
    }

    pub fn upper(&self) -> f64 {
        self.value + self.abs_error
    }

    pub fn contains(&self, x: f64) -> bool {
        (self.lower()..=self.upper()).contains(&x)
    }

    fn product(&self, other: &ConstantValue) -> (f64, f64) {
        let value = self.value * other.value;
        let err = self.value.abs() * other.abs_error
            + other.value.abs() * self.abs_error
            + self.abs_error * other.abs_error
            + ROUNDING * value.abs();
        (value, err)
    }

    /// `None` when the denominator's bracket contains zero.
    fn quotient(&self, den: &ConstantValue) -> Option<(f64, f64)> {
        let floor = den.value.abs() - den.abs_error;
        if floor <= 0.0 {
            return None;
        }
        let value = self.value / den.value;
        let err = (self.abs_error + value.abs() * den.abs_error) / floor + ROUNDING * value.abs();
        Some((value, err))
    }
}

fn check_precision(precision: f64) -> Result<()> {
    if precision.is_finite() && precision > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("precision must be positive and finite, got {precision}")))
    }
}

/// `ζ(s)` for real `s > 1`.
///
/// `s = 2` and `s = 6` use `π²/6` and `π⁶/945`. Otherwise the first `N`
/// terms are summed and the tail is bracketed by
/// `∫_{N+1}^∞ t^{-s} dt ≤ Σ_{n>N} n^{-s} ≤ ∫_N^∞ t^{-s} dt`; the value takes
/// the midpoint of that bracket and the error its half-width.
pub fn zeta(s: f64, precision: f64) -> Result<ConstantValue> {
    if !(s.is_finite() && s > 1.0) {
        return Err(Error::InvalidArgument(format!("zeta needs s > 1, got {s}")));
    }
    check_precision(precision)?;

    if s == 2.0 {
        let value = PI * PI / 6.0;
        return Ok(ConstantValue { value, abs_error: ROUNDING * value, method: "closed form pi^2/6".into() });
    }
    if s == 6.0 {
        let value = PI.powi(6) / 945.0;
        return Ok(ConstantValue { value, abs_error: ROUNDING * value, method: "closed form pi^6/945".into() });
    }

    // Half-width of the tail bracket is below N^{-s}/2.
    let n_needed = precision.powf(-1.0 / s).ceil();
    if n_needed > MAX_ZETA_TERMS as f64 {
        return Err(Error::PrecisionUnreachable { what: "zeta series", requested: precision });
    }
    let n = (n_needed as u64).max(8);

    let partial: NeumaierSum = (1..=n).rev().map(|k| (k as f64).powf(-s)).collect();
    let tail_hi = (n as f64).powf(1.0 - s) / (s - 1.0);
    let tail_lo = ((n + 1) as f64).powf(1.0 - s) / (s - 1.0);
    let value = partial.value() + 0.5 * (tail_hi + tail_lo);
    let abs_error = 0.5 * (tail_hi - tail_lo) + slop(n) + ROUNDING * value;
    if abs_error > precision {
        return Err(Error::PrecisionUnreachable { what: "zeta series", requested: precision });
    }
    Ok(ConstantValue {
        value,
        abs_error,
        method: format!("series to N={n}, integral tail bracket midpoint"),
    })
}

/// Evaluates `f` with inner precisions `precision/8, /32, ...` until the
/// propagated bound meets `precision`.
fn refine<F>(precision: f64, what: &'static str, mut f: F) -> Result<(f64, f64, f64)>
where
    F: FnMut(f64) -> Result<(f64, f64)>,
{
    check_precision(precision)?;
    let mut inner = precision / 8.0;
    for _ in 0..8 {
        let (value, err) = f(inner)?;
        if err <= precision {
            return Ok((value, err, inner));
        }
        inner /= 4.0;
    }
    Err(Error::PrecisionUnreachable { what, requested: precision })
}

/// Golomb's constant `c₄ = ζ(3/2)/ζ(3)`.
pub fn golomb_c4(precision: f64) -> Result<ConstantValue> {
    let (value, abs_error, inner) = refine(precision, "c4", |eps| {
        let num = zeta(1.5, eps)?;
        let den = zeta(3.0, eps)?;
        num.quotient(&den).ok_or(Error::PrecisionUnreachable { what: "c4", requested: precision })
    })?;
    Ok(ConstantValue {
        value,
        abs_error,
        method: format!("zeta(3/2)/zeta(3), each to {inner:e}"),
    })
}

/// Linnik's constant `ζ(2)ζ(3)/ζ(6)`.
pub fn linnik_constant(precision: f64) -> Result<ConstantValue> {
    let (value, abs_error, inner) = refine(precision, "linnik", |eps| {
        let z2 = zeta(2.0, eps)?;
        let z3 = zeta(3.0, eps)?;
        let z6 = zeta(6.0, eps)?;
        let (num, num_err) = z2.product(&z3);
        let num = ConstantValue { value: num, abs_error: num_err, method: String::new() };
        num.quotient(&z6).ok_or(Error::PrecisionUnreachable { what: "linnik", requested: precision })
    })?;
    Ok(ConstantValue {
        value,
        abs_error,
        method: format!("zeta(2)zeta(3)/zeta(6), zeta(3) to {inner:e}"),
    })
}

/// Taylor coefficients of `log f(x)` at `x = 0` for
/// `f(x) = √(1−x)·(−log(1−x))/x`, the Euler factor at `p = 1/x`, from
/// `x²` upward. All are negative with magnitude at most `1/24`, so
/// `|log f_p| ≤ x²/(24(1−x)) ≤ 1/(16p²)` for `p ≥ 3`.
const LOG_FACTOR_SERIES: [f64; 8] = [
    -1.0 / 24.0,
    -1.0 / 24.0,
    -109.0 / 2880.0,
    -49.0 / 1440.0,
    -11153.0 / 362880.0,
    -3383.0 / 120960.0,
    -744383.0 / 29030400.0,
    -19087.0 / 806400.0,
];

/// Bound constant `C` in `|log f_p| ≤ C/p²`, valid for `p ≥ 3`.
pub const A1_FACTOR_BOUND: f64 = 1.0 / 16.0;

/// `log(√(p²−p)·log(p/(p−1)))`.
pub fn a1_log_factor(p: u64) -> f64 {
    let x = 1.0 / p as f64;
    if p > 1000 {
        // Truncation after x⁹ is below x¹⁰/20 < 1e-31.
        let mut acc = 0.0;
        for &c in LOG_FACTOR_SERIES.iter().rev() {
            acc = acc * x + c;
        }
        acc * x * x
    } else {
        let neg_log = -(-x).ln_1p();
        (neg_log / x).ln() + 0.5 * (-x).ln_1p()
    }
}

/// `(1/√π)·Π_{p ≤ prime_bound} √(p²−p)·log(p/(p−1))` with no tail claim.
pub fn ramanujan_a1_partial(prime_bound: u64) -> f64 {
    let logs: NeumaierSum = primes_up_to(prime_bound).into_iter().map(a1_log_factor).collect();
    logs.value().exp() / PI.sqrt()
}

/// Ramanujan's constant `A₁ = (1/√π)·Π_p √(p²−p)·log(p/(p−1))`.
///
/// The product runs over primes `≤ P` with `P = ⌈1/(16·precision)⌉`. The
/// omitted factors satisfy `Σ_{p>P} |log f_p| ≤ Σ_{n>P} C/(n(n−1)) = C/P`
/// with `C = 1/16`, so the truncated value is within `value·(e^{C/P} − 1)`.
pub fn ramanujan_a1(precision: f64) -> Result<ConstantValue> {
    check_precision(precision)?;
    let p_cut = (A1_FACTOR_BOUND / precision).ceil().max(3.0);
    if p_cut > MAX_EULER_PRIME as f64 {
        return Err(Error::PrecisionUnreachable { what: "A1 Euler product", requested: precision });
    }
    let p_cut = p_cut as u64;
    let primes = primes_up_to(p_cut);
    let logs: NeumaierSum = primes.iter().map(|&p| a1_log_factor(p)).collect();
    let value = logs.value().exp() / PI.sqrt();

    let log_err = A1_FACTOR_BOUND / p_cut as f64 + slop(primes.len() as u64);
    let abs_error = value * log_err.exp_m1() + ROUNDING * value;
    if abs_error > precision {
        return Err(Error::PrecisionUnreachable { what: "A1 Euler product", requested: precision });
    }
    Ok(ConstantValue {
        value,
        abs_error,
        method: format!(
            "Euler product over {} primes <= {p_cut}, tail |log| <= C/P with C = 1/16",
            primes.len()
        ),
    })
}

/// The defining sequence `H_n − log n`, which decreases to `γ`.
pub fn harmonic_gap(n: u64) -> f64 {
    assert!(n >= 1);
    let h: NeumaierSum = (1..=n).rev().map(|k| 1.0 / k as f64).collect();
    h.value() - (n as f64).ln()
}

/// Euler–Mascheroni `γ` via `H_n − log n − 1/(2n)`, which sits below `γ`
/// by less than `1/(12n²)`.
pub fn euler_gamma(precision: f64) -> Result<ConstantValue> {
    check_precision(precision)?;
    let n_needed = (1.0 / (6.0 * precision)).sqrt().ceil();
    if n_needed > MAX_ZETA_TERMS as f64 {
        return Err(Error::PrecisionUnreachable { what: "euler gamma", requested: precision });
    }
    let n = n_needed.max(1.0) as u64;
    let nf = n as f64;
    let value = harmonic_gap(n) - 0.5 / nf;
    let abs_error = 1.0 / (12.0 * nf * nf) + slop(n) + ROUNDING;
    if abs_error > precision {
        return Err(Error::PrecisionUnreachable { what: "euler gamma", requested: precision });
    }
    Ok(ConstantValue {
        value,
        abs_error,
        method: format!("H_n - log n - 1/(2n) at n={n}, error < 1/(12n^2)"),
    })
}

/// The laboratory's constant table at one precision.
pub fn standard_constants(precision: f64) -> Result<Vec<(&'static str, ConstantValue)>> {
    Ok(vec![
        ("zeta(3/2)", zeta(1.5, precision)?),
        ("zeta(2)", zeta(2.0, precision)?),
        ("zeta(3)", zeta(3.0, precision)?),
        ("zeta(6)", zeta(6.0, precision)?),
        ("c4", golomb_c4(precision)?),
        ("linnik", linnik_constant(precision)?),
        ("A1", ramanujan_a1(precision)?),
        ("gamma", euler_gamma(precision)?),
    ])
}
