//! Exact evaluation of sl_n ladder webs.
//!
//! Ladders are evaluated to sparse matrices over Q(q), clasps are built by
//! the triple clasp recursion, and the local intersection forms kappa are
//! computed from matrices, from the closed product formula and from the
//! explicit recursions for n <= 4.

pub mod clasp;
pub mod error;
pub mod eval;
pub mod qring;
pub mod weights;
pub mod webs;

pub use error::{Error, Result};
