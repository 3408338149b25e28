//! Polynomials over weighted graded rings and the `.ck` input language.

mod format;
mod graded;
mod monomial;
pub mod parse;
mod polynomial;
mod ring;

pub use graded::GradedDims;
pub use monomial::Monomial;
pub use parse::{parse_document, parse_poly, parse_ring, parse_ring_with, Document, MatrixBlock};
pub use polynomial::Polynomial;
pub use ring::WeightedPolyRing;
