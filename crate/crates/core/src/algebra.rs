//! Scalar algebra on the unit interval.
//!
//! Every decomposition in this crate is built from two t-norms, Gödel (`min`)
//! and Łukasiewicz (bounded difference), used as a conjugate pair to split a
//! degree `x` against a weight `w`:
//!
//! ```text
//! x = godel_and(x, w) + lukasiewicz_and(x, 1 - w)
//! ```

use std::fmt;

use crate::error::Error;

/// Noise band absorbed when a computed value lands just outside `[0, 1]`.
pub const COMPUTE_TOLERANCE: f64 = 1e-12;

/// A degree in the closed unit interval.
#[derive(Clone, Copy, Debug, Default, PartialEq, PartialOrd)]
pub struct UnitValue(f64);

impl UnitValue {
    pub const ZERO: UnitValue = UnitValue(0.0);
    pub const HALF: UnitValue = UnitValue(0.5);
    pub const ONE: UnitValue = UnitValue(1.0);

    /// Strict constructor: `value` must already lie in `[0, 1]`.
    pub fn new(value: f64) -> Result<Self, Error> {
        Self::with_tolerance(value, 0.0)
    }

    /// Accepts values up to `tolerance` outside `[0, 1]` and clamps them in.
    pub fn with_tolerance(value: f64, tolerance: f64) -> Result<Self, Error> {
        match clamp_unit(value, tolerance) {
            Some(v) => Ok(UnitValue(v)),
            None => Err(Error::OutOfRange { value }),
        }
    }

    /// Wraps a value computed by one of the decompositions.
    ///
    /// Values within [`COMPUTE_TOLERANCE`] of the interval are clamped. Anything
    /// further out means an identity was broken, which is a bug, so this panics.
    pub(crate) fn settle(value: f64) -> Self {
        match clamp_unit(value, COMPUTE_TOLERANCE) {
            Some(v) => UnitValue(v),
            None => panic!("internal error: computed degree {value} is outside [0, 1]"),
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// `1 - x`.
    #[inline]
    pub fn complement(self) -> Self {
        UnitValue(1.0 - self.0)
    }
}

impl From<UnitValue> for f64 {
    fn from(v: UnitValue) -> f64 {
        v.0
    }
}

impl TryFrom<f64> for UnitValue {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self, Error> {
        UnitValue::new(value)
    }
}

impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Clamps `value` into `[0, 1]` if it lies within `tolerance` of the interval.
/// Negative zero is normalised so rendered output never shows `-0`.
pub(crate) fn clamp_unit(value: f64, tolerance: f64) -> Option<f64> {
    if !value.is_finite() {
        return None;
    }
    if value < -tolerance || value > 1.0 + tolerance {
        return None;
    }
    if value <= 0.0 {
        Some(0.0)
    } else if value > 1.0 {
        Some(1.0)
    } else {
        Some(value)
    }
}

/// Gödel t-norm: `min(x, y)`.
#[inline]
pub fn godel_and(x: UnitValue, y: UnitValue) -> UnitValue {
    UnitValue(x.0.min(y.0))
}

/// Łukasiewicz t-norm: `max(x + y - 1, 0)`.
#[inline]
pub fn lukasiewicz_and(x: UnitValue, y: UnitValue) -> UnitValue {
    // keep 1 an exact unit; `x + 1 - 1` can round away from `x`
    if x.0 == 1.0 {
        return y;
    }
    if y.0 == 1.0 {
        return x;
    }
    UnitValue((x.0 + y.0 - 1.0).max(0.0))
}

/// The two parts of a degree split against a weight.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SplitPair {
    /// `min(x, w)`
    pub strong: UnitValue,
    /// `max(x - w, 0)`, the remainder above the weight
    pub weak: UnitValue,
}

impl SplitPair {
    pub fn total(&self) -> f64 {
        self.strong.0 + self.weak.0
    }
}

/// Splits `x` into `x ∘ w` (Gödel) and `x • (1 - w)` (Łukasiewicz).
///
/// The parts add back to `x` up to rounding.
pub fn conjugate_split(x: UnitValue, w: UnitValue) -> SplitPair {
    SplitPair {
        strong: godel_and(x, w),
        weak: lukasiewicz_and(x, w.complement()),
    }
}
