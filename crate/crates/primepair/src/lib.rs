//! Parallel drivers, file formats and the command-line interface on top of
//! `primepair-core`.
//!
//! - [`parallel`]: multi-threaded pair counting, `psi` and zero sums,
//!   bit-identical to the serial kernels
//! - [`cache`]: pair-count tables on disk
//! - [`zeros_io`]: zero-ordinate files, plain or gzipped
//! - [`pipeline`]: the computation steps behind each subcommand
//! - [`reference`]: published values used by `verify`
//! - [`cli`]: argument parsing and subcommands

pub mod cache;
pub mod cli;
pub mod error;
pub mod parallel;
pub mod pipeline;
pub mod progress;
pub mod reference;
pub mod zeros_io;

pub use error::{CliError, Result};
