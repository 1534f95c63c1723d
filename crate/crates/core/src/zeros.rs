//! Tables of positive ordinates `gamma` of the nontrivial zeta zeros
//! `1/2 + i gamma`, in the one-number-per-line layout of the published
//! tables.

use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result};

const FIRST_ZERO: f64 = 14.134_725_142;

/// A validated, strictly increasing list of zero ordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source: String,
}

impl ZeroTable {
    /// Validates ordering and the position of the first zero.
    pub fn new(ordinates: Vec<f64>, source: impl Into<String>) -> Result<Self> {
        let Some(&first) = ordinates.first() else {
            return Err(Error::CorruptData("zero table is empty"));
        };
        if ordinates.windows(2).any(|w| w[0].partial_cmp(&w[1]) != Some(core::cmp::Ordering::Less)) {
            return Err(Error::CorruptData("ordinates are not strictly increasing"));
        }
        if !(14.0..=14.3).contains(&first) {
            return Err(Error::WrongFile { first });
        }
        Ok(Self { ordinates, source: source.into() })
    }

    /// Parses one ordinate per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str, source: impl Into<String>, max_count: Option<usize>) -> Result<Self> {
        let limit = max_count.unwrap_or(usize::MAX);
        let mut ordinates = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if ordinates.len() >= limit {
                break;
            }
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let g: f64 = t.parse().map_err(|_| Error::Parse { line: i + 1 })?;
            if !g.is_finite() || g <= 0.0 {
                return Err(Error::Parse { line: i + 1 });
            }
            ordinates.push(g);
        }
        Self::new(ordinates, source)
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// The first `count` ordinates.
    pub fn truncated(&self, count: usize) -> Result<Self> {
        Self::new(self.ordinates[..count.min(self.len())].to_vec(), self.source.clone())
    }

    /// Sanity check of the first ordinate against the known first zero.
    pub fn first_zero_error(&self) -> f64 {
        libm::fabs(self.ordinates[0] - FIRST_ZERO)
    }
}

/// Riemann-von Mangoldt main term `(T/2pi) log(T/2pi) - T/2pi + 7/8`.
pub fn riemann_von_mangoldt(t: f64) -> f64 {
    let u = t / (2.0 * core::f64::consts::PI);
    u * libm::log(u) - u + 0.875
}

/// Largest `|N(T) - main term|` over the loaded range.
///
/// `N(T)` is a step function jumping by one at each ordinate, so both the
/// value just below and at each `gamma_n` are compared.
pub fn zero_count_check(table: &ZeroTable) -> f64 {
    table
        .ordinates
        .iter()
        .enumerate()
        .map(|(i, &g)| {
            let m = riemann_von_mangoldt(g);
            let below = libm::fabs(i as f64 - m);
            let at = libm::fabs((i + 1) as f64 - m);
            below.max(at)
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    const THREE: &str = "14.134725142\n21.022039639\n25.010857580\n";

    #[test]
    fn parses_three() {
        let t = ZeroTable::parse(THREE, "inline", None).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.ordinates()[1], 21.022039639);
        assert!(zero_count_check(&t).is_finite());
        assert!(t.first_zero_error() < 1e-9);
        let two = ZeroTable::parse(THREE, "inline", Some(2)).unwrap();
        assert_eq!(two.len(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(ZeroTable::parse("", "e", None).unwrap_err(), Error::CorruptData("zero table is empty"));
        assert!(matches!(
            ZeroTable::parse("25.010857580\n21.022039639\n14.134725142\n", "d", None),
            Err(Error::CorruptData(_))
        ));
        assert!(matches!(
            ZeroTable::parse("14.134725142\n25.010857580\n21.022039639\n", "d", None),
            Err(Error::CorruptData(_))
        ));
        assert_eq!(
            ZeroTable::parse("14.134725142\n21.02x\n", "p", None).unwrap_err(),
            Error::Parse { line: 2 }
        );
        assert!(matches!(ZeroTable::parse("21.022039639\n", "w", None), Err(Error::WrongFile { .. })));
    }

    #[test]
    fn comments_and_blank_lines() {
        let t = ZeroTable::parse("# zeros\n\n14.134725142\n  21.022039639  \n", "c", None).unwrap();
        assert_eq!(t.len(), 2);
    }
}
