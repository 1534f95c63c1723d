//! Compensated (Kahan-Babuska-Neumaier) summation.
//!
//! Every long float reduction in this crate goes through [`CompensatedSum`]:
//! sums of `log^2 p` over millions of primes, Chebyshev's `psi` near `10^12`,
//! and the zero sum for `T(x)` all need more than the 15-16 digits a plain
//! running `f64` keeps.

use core::iter::FromIterator;
use core::ops::AddAssign;

/// Running sum with a separate error term.
///
/// The represented value is `hi + lo`; `lo` collects the rounding error of
/// each addition, so the result stays accurate to about one ulp of the total
/// regardless of the number of terms.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    hi: f64,
    lo: f64,
}

impl CompensatedSum {
    pub const fn new() -> Self {
        Self { hi: 0.0, lo: 0.0 }
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.hi + v;
        if libm::fabs(self.hi) >= libm::fabs(v) {
            self.lo += (self.hi - t) + v;
        } else {
            self.lo += (v - t) + self.hi;
        }
        self.hi = t;
    }

    /// Folds another partial sum into this one, keeping both error terms.
    pub fn merge(&mut self, other: &CompensatedSum) {
        self.add(other.hi);
        self.add(other.lo);
    }

    pub fn value(&self) -> f64 {
        self.hi + self.lo
    }

    /// The unevaluated pair `(hi, lo)`.
    pub fn parts(&self) -> (f64, f64) {
        (self.hi, self.lo)
    }

    /// `a - (hi + lo)` evaluated without first rounding the sum, which is
    /// what keeps `x - psi(x)` meaningful when `psi(x)` is near `x`.
    pub fn subtract_from(&self, a: f64) -> f64 {
        (a - self.hi) - self.lo
    }
}

impl AddAssign<f64> for CompensatedSum {
    fn add_assign(&mut self, v: f64) {
        self.add(v);
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::new();
        for v in iter {
            s.add(v);
        }
        s
    }
}
