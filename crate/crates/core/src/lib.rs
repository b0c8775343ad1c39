//! Trace coordinates on SL(2,ℂ)-character varieties of free groups of rank
//! two and three, with the matrix, polynomial and hyperbolic-geometry
//! machinery around them.

pub mod chars;
pub mod covers;
pub mod error;
pub mod fricke;
pub mod hypgeom;
pub mod mat2;
pub mod polyring;
pub mod random;
pub mod scalar;
pub mod tolerance;
pub mod tracepoly;
pub mod words;

pub use error::{Error, Result};
pub use scalar::{Scalar, Surd};

use num_complex::Complex64;

pub type Rational = num_rational::BigRational;

pub type Mat2C = mat2::Mat2<Complex64>;
pub type Mat2R = mat2::Mat2<f64>;
pub type Mat2Q = mat2::Mat2<Rational>;
pub type Mat3C = mat2::Mat3<Complex64>;
pub type Mat3R = mat2::Mat3<f64>;
pub type Mat3Q = mat2::Mat3<Rational>;
