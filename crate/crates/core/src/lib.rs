//! Exact computations on affine cones over projective varieties: Gröbner
//! bases and Hilbert functions, graded pieces of T¹, Koszul Betti tables,
//! Pfaffian formats and classification lookups.

pub mod api;
pub mod classify;
pub mod corpus;
pub mod error;
pub mod field;
pub mod groebner;
pub mod homology;
pub mod linalg;
pub mod pfaffian;
pub mod poly;
pub mod solver;
pub mod t1;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use field::{CoefficientField, Field, PrimeField, Rationals};
pub use groebner::{GroebnerBasis, Ideal};
pub use poly::{GradedDims, Monomial, Polynomial, WeightedPolyRing};
