//! Numerical machinery for studying prime pairs `(p, p + 2r)` against the
//! Hardy-Littlewood prediction.
//!
//! The crate is `no_std` and needs only `alloc`. Everything here is a pure
//! computation over integers and floats; threading, caching and file IO live
//! in the `primepair` companion crate, which drives the per-segment entry
//! points exposed here ([`sieve::sieve_segment`],
//! [`paircount::count_pairs_in_range`], [`analytic::psi_in_range`]) from a
//! worker pool and merges the partial results.
//!
//! Module map:
//!
//! * [`sieve`]: segmented odd-only sieve of Eratosthenes, prime counts and a
//!   deterministic 64-bit primality test.
//! * [`constants`]: the twin-prime constant, exact singular-series ratios
//!   `C_2r / C_2` and their prefix sums.
//! * [`paircount`]: one-pass multi-gap, multi-checkpoint pair counts and the
//!   log-weighted pair sums.
//! * [`analytic`]: `li`, `li_2`, Chebyshev's `psi`, the oscillation term `T(x)`
//!   and the deviation model.
//! * [`zeros`]: validated tables of zeta-zero ordinates.
//! * [`analysis`]: remainders, quotients and the error function rows.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod analytic;
pub mod constants;
mod error;
pub mod paircount;
pub mod sieve;
pub mod sum;
pub mod zeros;

pub use error::{Error, Result};
