//! Bulk tables of arithmetic functions over integer ranges, plus the
//! enumeration and counting of powerful numbers.

mod block;
mod plan;
mod powerful;
mod primes;

pub use block::{sieve_block, ArithBlock, MAX_BLOCK_END};
pub use plan::{block_ranges, DEFAULT_BLOCK_LEN};
pub use powerful::{count_powerful, enumerate_powerful, icbrt, PowerfulList};
pub use primes::{primes_up_to, BasePrimes};
