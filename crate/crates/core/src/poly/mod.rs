//! Exact multivariate polynomial arithmetic over the rationals.

pub mod gcd;
pub mod monomial;
pub mod polynomial;
pub mod text;
pub mod univariate;

pub use gcd::{gcd_all, poly_gcd};
pub use monomial::{count_monomials, monomials_of_degree, Monomial, MonomialOrder};
pub use polynomial::{poly_arith, ArithOp, Degree, Polynomial};
pub use text::{default_names, format_poly, format_rational, parse_poly, parse_rational};
pub use univariate::UniPoly;
