//! Cooperative cancellation and term-count limits for long computations.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use thiserror::Error;

/// Default polynomial size cap when `SUPERSCHUR_MAX_TERMS` is unset.
pub const DEFAULT_MAX_TERMS: usize = 5_000_000;

/// Environment variable overriding the term cap.
pub const MAX_TERMS_ENV: &str = "SUPERSCHUR_MAX_TERMS";

/// Reasons a budgeted computation stopped early.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BudgetError {
    #[error("computation cancelled")]
    Cancelled,
    #[error("polynomial with {got} terms exceeds the limit of {limit}")]
    TermLimit { limit: usize, got: usize },
}

/// A shared cancellation flag together with a polynomial size cap.
#[derive(Clone, Debug)]
pub struct Budget {
    cancelled: Arc<AtomicBool>,
    max_terms: usize,
}

impl Budget {
    pub fn new(max_terms: usize) -> Self {
        Budget {
            cancelled: Arc::new(AtomicBool::new(false)),
            max_terms,
        }
    }

    /// Reads the cap from `SUPERSCHUR_MAX_TERMS`, falling back to the default.
    pub fn from_env() -> Self {
        let cap = std::env::var(MAX_TERMS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_TERMS);
        Self::new(cap)
    }

    pub fn unlimited() -> Self {
        Self::new(usize::MAX)
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    /// Requests cancellation; every clone observes it.
    pub fn cancel(&self) {
        self.cancelled.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.cancelled.load(Ordering::Relaxed)
    }

    /// Fails if cancelled or if `terms` exceeds the cap.
    pub fn check(&self, terms: usize) -> Result<(), BudgetError> {
        if self.is_cancelled() {
            return Err(BudgetError::Cancelled);
        }
        if terms > self.max_terms {
            return Err(BudgetError::TermLimit {
                limit: self.max_terms,
                got: terms,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::from_env()
    }
}
