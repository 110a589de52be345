//! Exact computations for near-group fusion rings and their braided
//! classification.

pub mod affine;
pub mod arith;
pub mod character;
pub mod classify;
pub mod equivariant;
pub mod error;
pub mod extraspecial;
pub mod group;
pub mod metric;
pub mod ring;
pub mod sphere;

pub use error::{Error, Result};
