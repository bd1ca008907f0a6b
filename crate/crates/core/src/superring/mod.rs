//! Exact supercommutative polynomial arithmetic in the generators `c_{ij}`.
//!
//! Indices `1..=m` are even and `m+1..=m+n` are odd; `c_{ij}` has parity
//! `|i| + |j|`. Odd generators anticommute and square to zero. Elements of
//! the localization at `D = det(C₁₁)` carry a single power of `D` as
//! denominator.

mod derive;
mod det;
mod identities;
mod localized;
mod poly;

pub use det::{
    adjugate, big_d, det_localized, det_poly, dminus, dminus_abstract, dplus, dplus_laplace,
    highest_vector, highest_vector_abstract, highest_vector_budgeted, permutations_with_sign, phi,
    y,
};
pub use identities::{
    check_det_identities, check_dminus_expanded, DetIdentityReport, IdentityCheck, IdentityParams,
};
pub use localized::LocalizedElement;
pub use poly::{Ctx, Generator, Monomial, SuperPolynomial, MAX_DIM, MAX_GENS, Q};

use crate::budget::BudgetError;
use thiserror::Error;

/// Failures of ring operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuperringError {
    #[error("unsupported context m={m}, n={n}: need 1 ≤ m+n ≤ 8")]
    BadContext { m: usize, n: usize },
    #[error("index {index} outside {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },
    #[error("divisor must be a nonzero even polynomial")]
    InvalidDivisor,
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("element is not homogeneous for the torus grading")]
    Inhomogeneous,
    #[error("the zero element has no weight")]
    ZeroHasNoWeight,
    #[error(transparent)]
    Budget(#[from] BudgetError),
}
