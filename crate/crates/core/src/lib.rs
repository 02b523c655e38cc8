//! Exact evaluation of Euler-Zagier multiple zeta functions near
//! non-positive integer points.
//!
//! The multiple zeta function of depth `d`,
//!
//! ```text
//! zeta_d(s_1, ..., s_d) = sum over m_1,...,m_d >= 1 of
//!     m_1^{-s_1} (m_1+m_2)^{-s_2} ... (m_1+...+m_d)^{-s_d},
//! ```
//!
//! continues meromorphically to all of C^d, but every non-positive integer
//! lattice point lies on its singular set and is a point of indeterminacy:
//! the value of the limit depends on how the point is approached. This crate
//! computes the exact leading term of the expansion
//! `zeta_d(-m_1 + e_1, ..., -m_d + e_d)` as a rational function of the
//! perturbations `e_1, ..., e_d`, and evaluates any limit regime against it:
//!
//! * iterated (coordinatewise) limits in an arbitrary variable order,
//! * directional limits `e = delta * theta`,
//! * monomial-path limits `e_j = c_j * delta^{k_j}`.
//!
//! All symbolic computation is exact over arbitrary-precision rationals.
//! The [`oracle`] module provides independent verification: special values
//! of the Riemann zeta function, the depth-2 stuffle (harmonic product)
//! constraint, and a floating-point Euler-Maclaurin continuation of the
//! depth-2 function for numeric cross-checks near lattice points.

pub mod engine;
pub mod exact;
pub mod oracle;
pub mod rational;
pub mod symbolic;

pub use engine::{Point, SPoint};
pub use rational::Rational;
pub use symbolic::{LinearForm, PathAssignment, RationalFunctionSum, Term};
