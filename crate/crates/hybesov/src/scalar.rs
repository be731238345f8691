//! Scalar abstraction for the grid math.

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar usable for all field and solver math: f32 or f64.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + rustfft::FftNum
    + std::iter::Sum
    + std::fmt::Display
    + std::fmt::LowerExp
    + Default
{
    /// Shorthand for lossy conversion from `f64` literals and parameters.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 conversion")
    }

    /// Lossy conversion to `f64` for reporting.
    fn to64(self) -> f64 {
        self.to_f64().expect("f64 conversion")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
