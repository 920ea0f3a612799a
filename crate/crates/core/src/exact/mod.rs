//! Exact arithmetic: multivariate polynomials over the rationals and dense
//! matrices of them. No floating point anywhere.

mod matrix;
mod parse;
mod poly;
mod vars;

pub use matrix::{MatrixError, PolyMatrix};
pub use parse::{parse_poly, ParseError};
pub use poly::{Homogeneity, Monomial, Poly, PolyDisplay};
pub use vars::VarNames;
