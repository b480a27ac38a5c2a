//! Exact scalar arithmetic: Laurent polynomials in `q`, polynomials and
//! rational functions in `x`, and trivariate polynomials for the deformed
//! Q-relations.

pub mod laurent;
pub mod multipoly;
pub mod polyx;
pub mod ratfunc;

pub use laurent::LaurentPoly;
pub use multipoly::MultiPoly;
pub use polyx::PolyX;
pub use ratfunc::RatFunc;
