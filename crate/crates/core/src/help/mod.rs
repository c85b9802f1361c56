//! The HeLP method: Luthar–Passi multiplicities of eigenvalues of torsion
//! units and integer feasibility over their partial augmentations.

pub mod forms;
pub mod inequalities;
pub mod lp;
pub mod pa;
pub mod search;
pub mod table;

use thiserror::Error;

use crate::cyclotomic::CyclotomicError;

pub use forms::{IntForm, LinearForm};
pub use inequalities::{onan_inequalities, InequalityReport, InequalityRow, InequalitySystem, InequalityVariable};
pub use pa::{lupa_multiplicity, multiplicity_form, Distribution, PartialAugmentationVector};
pub use search::{congruence_constraints, feasible_partial_augmentations, Congruence, HelpOutcome, HelpReport};
pub use table::{Character, CharacterTableSlice, ConjugacyClassInfo};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HelpError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("invalid table: {0}")]
    Invalid(String),
    #[error("unknown class {0:?}")]
    UnknownClass(String),
    #[error("unknown character {0:?}")]
    UnknownCharacter(String),
    #[error("character {character} has no value on class {class}")]
    MissingValue { character: String, class: String },
    #[error("power map of class {class} at prime {prime} is missing")]
    MissingPower { class: String, prime: u64 },
    #[error("no partial augmentations given for u^{0}")]
    MissingPowerData(u64),
    #[error("invalid partial augmentation vector: {0}")]
    InvalidVector(String),
    #[error("variable {0} is unbounded; the search region cannot be closed")]
    Unbounded(String),
    #[error("search region of {0} points is too large")]
    SearchTooLarge(u128),
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
}

impl HelpError {
    pub fn from_json(e: serde_json::Error) -> Self {
        HelpError::Json { line: e.line(), column: e.column(), message: e.to_string() }
    }
}
