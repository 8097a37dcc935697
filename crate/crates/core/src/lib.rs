//! Exact construction and verification of the six-parameter orthogonal
//! polynomial family on the tetrahedron, together with its univariate and
//! triangle building blocks.
//!
//! Polynomials are [`ratpoly::MPoly`] values with exact rational
//! coefficients, so every ladder relation, composition identity and PDE is
//! checked as a structural equality. Floating point appears only in
//! the quadrature module.

pub mod classical;
pub mod error;
pub mod jacobi1d;
pub mod ladder;
pub mod operator;
pub mod quadrature;
pub mod ratpoly;
pub mod report;
pub mod simplex3d;
pub mod special;
pub mod suites;
pub mod triangle2d;

pub use error::{MathError, PolyError};
pub use ratpoly::{q, qq, MPoly, Point, Rational, Var};
