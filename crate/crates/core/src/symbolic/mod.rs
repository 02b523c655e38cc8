//! Exact algebra on sums of products of integer powers of linear forms in
//! the perturbation variables `e_1, ..., e_d` — the shape every expansion
//! leading term takes.
//!
//! The representation stays factored (products of linear-form powers) rather
//! than expanded over a common denominator: the engine produces it natively
//! and substitution stays cheap. Full multivariate expansion happens only
//! inside [`RationalFunctionSum::equivalent`].

mod form;
mod path;
mod poly;
mod render;
mod sum;
mod term;

pub use form::LinearForm;
pub use path::{PathAssignment, PathError, PathStep};
pub use poly::{limit_at_zero, DeltaLimit, DeltaPoly, PolyRatio};
pub use render::{rational_latex, sum_from_json, JsonDecodeError, RenderFormat};
pub use sum::RationalFunctionSum;
pub use term::{RawTerm, Term};

/// Errors from symbolic operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolicError {
    /// Sending `e_var -> 0` leaves a pole even after cancellation resolution.
    #[error("limit does not exist: e{var} -> 0 leaves an unresolved pole")]
    LimitDoesNotExist { var: usize },

    /// A denominator factor evaluates to zero at the requested point.
    #[error("denominator form ({form}) vanishes at the evaluation point")]
    DenominatorVanishes { form: String },

    /// A denominator factor becomes the zero polynomial along the path.
    #[error("a denominator factor is identically zero along the path")]
    IdenticallyZeroDenominator,

    /// A vector argument does not match the variable count.
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}
