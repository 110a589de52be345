//! Exact arithmetic: rationals, polynomials, quadratic, biquadratic and
//! cyclotomic fields, and the algebraic-integer scans built on them.

pub mod biquadratic;
pub mod cyclotomic;
pub mod integrality;
pub mod number;
pub mod poly;
pub mod quadratic;
pub mod rational;

pub use biquadratic::{biquad_char_poly, BiquadraticElement};
pub use cyclotomic::{
    cyc_add, cyc_conjugate, cyc_is_rational, cyc_mul, cyc_norm_squared, cyc_root, CyclotomicNumber,
};
pub use poly::RatPoly;
pub use quadratic::{quad_is_algebraic_integer, QuadraticFieldElement};
pub use rational::Rational;
