//! Exact arithmetic for the dynamics of polynomial self-maps of the
//! projective plane.
//!
//! The crate is organized around one pipeline:
//!
//! * [`poly`] / [`parse`] / [`gcd`] / [`roots`] — sparse multivariate
//!   polynomials over arbitrary-precision rationals, with the algebraic
//!   queries (order of vanishing, GCD, rational root extraction) that the
//!   geometry needs.
//! * [`projective`] — normalized rational self-maps of Pⁿ, homogenization,
//!   composition, base points on the hyperplane at infinity.
//! * [`resolution`] / [`pullback`] — resolution of indeterminacy of a P²
//!   map by iterated point blowups, pullback coefficient tables in the
//!   proper-transform basis, and the D-ratio.
//! * [`heights`] — exact Weil heights over Q, orbit iteration with cycle
//!   detection, preperiodic search, deficit and expansion experiments.
//! * [`monoid`] — jointly regular pairs, word weights, and search for
//!   points with finite orbit under the generated monoid.

pub mod gcd;
pub mod heights;
pub mod monoid;
pub mod parse;
pub mod point;
pub mod poly;
pub mod projective;
pub mod pullback;
pub mod resolution;
pub mod roots;

/// Exact rational scalar. `BigRational` keeps the canonical form this crate
/// relies on: reduced fraction, positive denominator.
pub type Rational = num::BigRational;

pub use num::BigInt;

pub use point::ProjPoint;
pub use poly::MultiPoly;
pub use projective::{AffineMap, ProjMap};
