//! Multiindices, the vectors `ρ_{i|j}`, the operators `σ`, `τ⁺`, `τ⁻`, `τ`,
//! and construction and verification of the even-primitive vectors `v̄(T⁺)`.
//!
//! Operator algebra runs in abstract mode: the odd symbols `y_{kl}` form a
//! wedge basis and coefficients are polynomials in the even generators,
//! with the `C₂₂` generators standing for their `φ`-images. Only
//! [`verify_even_primitive`] substitutes `y_{kl}` and `φ` to obtain an
//! element of the localized superalgebra.
//!
//! `J` entries are stored in `1..=n` and shifted by `m` only where tableau
//! entries or generator indices are formed.

mod build;
mod multiindex;
mod sigma;
mod tau;
mod wedge;

pub use build::{
    basis_for_weight, build_primitive, build_primitive_budgeted, even_lowering_pairs,
    expand_localized, expand_wedge, perturb, rank, verify_even_primitive, BasisReport,
    PrimitiveVector, PrimitivityReport, VectorReport,
};
pub use multiindex::{
    berezinian_shift, content_and_weight, is_left_admissible, is_right_admissible, is_robust,
    q_minus, q_plus, v_ij_denominator, BerezinianShift, ContentWeight, DenominatorVector,
    MultiIndex,
};
pub use sigma::{
    check_congruences, check_p1_division, default_positioning, reversed_positioning, sigma_tensor,
    Positioning, TensorExpression, TensorPolynomial,
};
pub use tau::{
    disjoint_holds, is_insignificant, leading_term_holds, rho_bar_of_sum, tau, tau_minus,
    tau_minus_unsigned, tau_plus, tau_terms_with_rpos, TableauSum,
};
pub use wedge::{rho_bar, rho_single, wedge_reduce, y_index, y_symbol, RhoSum, WedgeExpression};

use crate::budget::BudgetError;
use crate::lr::LrError;
use crate::superring::SuperringError;
use thiserror::Error;

/// Failures of the primitive-vector pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PrimitiveError {
    #[error(transparent)]
    Lr(#[from] LrError),
    #[error(transparent)]
    Ring(#[from] SuperringError),
    #[error(transparent)]
    Budget(#[from] BudgetError),
    #[error("index pair ({i},{j}) outside 1..={m} × 1..={n}")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        m: usize,
        n: usize,
    },
    #[error("repositioning map is inconsistent with T⁺: {0}")]
    InconsistentRpos(String),
    #[error("positioning map is incompatible with the multiindex: {0}")]
    IncompatiblePositioning(String),
    #[error("exact division by {factor} failed")]
    DivisionFailed { factor: String },
    #[error("rank {rank} is below the expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
}
