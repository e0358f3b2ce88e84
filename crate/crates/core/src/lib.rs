//! Divisor-sum laboratory.
//!
//! Computes `d(n)`, `d(d(n))`, `ω(n)` and the powerful part `b(n)` over
//! large ranges with segmented sieves, evaluates the constants attached to
//! the classical divisor-sum asymptotics with certified error bounds, and
//! checks empirically the ingredients behind
//! `Σ_{n≤x} 1/d(d(n)) ≍ x/log log x`.

pub mod arith;
pub mod cli;
pub mod constants;
pub mod error;
pub mod lab;
pub mod sieve;
pub mod summation;

pub use error::{Error, Result};
