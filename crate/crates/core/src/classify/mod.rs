//! Enumeration, censuses, conjugate transfer and classification.

mod enumerate;
mod rules;
mod transfer;

pub use enumerate::{
    census, enumerate_quiddities, irreducible_census, parity_audit, small_entry_violations, CensusMember,
    EnumerationReport, ParityReport,
};
pub use rules::{classify, expected_irreducibles, ClassificationOutcome, ClassifyFlags, Family, Justification};
pub use transfer::{constraint_polynomials, transfer_theta, DivisibilityCheck, TransferOutcome};

use crate::numfield::FieldError;
use crate::polycrit::PolyCritError;
use crate::reducibility::ReductionError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("need n_max >= 1 and k_bound >= 0")]
    BadBounds,
    #[error("tuple is not a quiddity")]
    NotAQuiddity,
    #[error("irreducibility of the minimal polynomial is only assumed")]
    IrreducibilityUnknown,
    #[error("a generator is required unless it is declared transcendental")]
    MissingGenerator,
    #[error("transferred tuple failed its divisibility certificate")]
    TransferFailed,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    PolyCrit(#[from] PolyCritError),
}
