//! Exact invariant theory of finite-dimensional Lie algebras given by
//! structure constants.
//!
//! The crate computes the index, the fundamental semi-invariant, graded
//! (semi-)invariant generators and their relations, the kernel of the anchor
//! map, and evaluates the numerical coregularity criteria. All arithmetic is
//! over the rationals.

pub type Rational = num_rational::BigRational;

pub mod catalog;
pub mod criteria;
pub mod error;
pub mod grobner;
pub mod invariants;
pub mod jordan;
pub mod kernel;
pub mod lie;
pub mod linalg;
pub mod pfaffian;
pub mod poly;
pub mod polymatrix;
pub mod reduction;
pub mod report;

pub use error::{Error, Result};
pub use poly::{Monomial, MonomialOrder, Polynomial};
