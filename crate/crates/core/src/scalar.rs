use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, NumAssign};

/// Scalar type for attributes, weights, and time.
///
/// Blanket-implemented; `f64` and `f32` both qualify.
pub trait Real: Float + NumAssign + FromPrimitive + Default + Debug + Display + 'static {}

impl<T> Real for T where T: Float + NumAssign + FromPrimitive + Default + Debug + Display + 'static {}
