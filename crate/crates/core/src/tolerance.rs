//! Scale-aware zero tests.
//!
//! Every classification criterion in this crate asks whether some scalar is
//! exactly zero. In floating point that question is answered relative to the
//! magnitude of the summands that produced the scalar: `q` counts as zero iff
//!
//! ```text
//! |q| <= abs + rel * scale
//! ```
//!
//! where `scale` bounds the magnitudes of the terms that were added up to form
//! `q`. Callers that have no better information pass `q.abs()` or `1.0`.

use serde::{Deserialize, Serialize};

/// Absolute and relative tolerances for zero tests.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ToleranceSpec {
    pub abs: f64,
    pub rel: f64,
}

impl ToleranceSpec {
    pub const DEFAULT_ABS: f64 = 1e-12;
    pub const DEFAULT_REL: f64 = 1e-9;

    pub const fn new(abs: f64, rel: f64) -> Self {
        ToleranceSpec { abs, rel }
    }

    /// Same relative tolerance, different absolute one.
    pub const fn with_abs(self, abs: f64) -> Self {
        ToleranceSpec { abs, rel: self.rel }
    }

    /// Threshold below which a quantity of the given summand scale is zero.
    #[inline]
    pub fn threshold(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale.abs()
    }

    #[inline]
    pub fn is_zero(&self, q: f64, scale: f64) -> bool {
        q.abs() <= self.threshold(scale)
    }

    #[inline]
    pub fn is_nonzero(&self, q: f64, scale: f64) -> bool {
        !self.is_zero(q, scale)
    }
}

impl Default for ToleranceSpec {
    fn default() -> Self {
        ToleranceSpec::new(Self::DEFAULT_ABS, Self::DEFAULT_REL)
    }
}
