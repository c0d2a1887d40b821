//! Floating-point scalar abstraction for the numeric spectral code.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Real scalar the eigensolver and energy computations are generic over.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Relative tolerance used to classify an eigenvalue as zero, as a
    /// multiple of the spectrum scale `max(1, |μ₁|, |μₙ|)`.
    fn default_sign_tol() -> Self;

    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts to any Real")
    }

    fn of_usize(x: usize) -> Self {
        Self::from_usize(x).expect("usize converts to any Real")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("Real converts to f64")
    }
}

impl Real for f64 {
    fn default_sign_tol() -> Self {
        1e-8
    }
}

impl Real for f32 {
    fn default_sign_tol() -> Self {
        1e-4
    }
}
