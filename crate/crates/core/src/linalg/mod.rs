//! Exact dense linear algebra over prime fields.

mod echelon;
mod field;
mod matrix;

pub use echelon::{BasisCoords, Quotient, SpanBuilder};
pub use field::PrimeField;
pub use matrix::{FieldMatrix, RankProfile};
