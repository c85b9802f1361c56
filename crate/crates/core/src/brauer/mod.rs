//! Brauer trees of blocks with cyclic defect: sign-labelled trees with an
//! optional exceptional vertex, the signed character sums on them, the
//! eigenvalue inequality for torsion units, bounds on `γ_s` of simple
//! modules, and the prime-pair verdict engine.

pub mod gamma;
pub mod inequality;
pub mod proof;
pub mod tree;
pub mod verdict;

use thiserror::Error;

use crate::help::HelpError;
use crate::numtheory::NumTheoryError;

pub use gamma::{edge_consistency, gamma_bounds, gamma_bounds_closed_form, BoundCase, Direction, EdgeConsistency, GammaBound};
pub use inequality::{main_inequality_for_unit, main_inequality_holds, MainInequality, MultiplicityAssignment};
pub use proof::{epsilon_admissible, proof_inequalities, surviving_nu_values};
pub use tree::{nu_functional, signed_vertex_sum, validate_tree, vertex_values, BrauerTreeSpec, TreeDiagnostic, TreeEdge, TreeVertex};
pub use verdict::{group_verdict_table, pq_edge_verdict, EdgeVerdict, GroupArithmeticProfile, PairVerdict, VerdictSummary, VerdictTable};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BrauerError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("invalid Brauer tree: {}", .0.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidTree(Vec<TreeDiagnostic>),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("no value given for vertex {0:?}")]
    MissingValue(String),
    #[error("vertex {0:?} is not a leaf")]
    NotALeaf(String),
    #[error("vertex {0:?} is exceptional and cannot play the role of the leaf character")]
    ExceptionalLeaf(String),
    #[error("vertex {0:?} is not a positive leaf of the subtree")]
    NotAPositiveLeaf(String),
    #[error("the subtree on the side of {side:?} contains the exceptional vertex {exceptional:?}")]
    ExceptionalInSubtree { side: String, exceptional: String },
    #[error("{0:?} and {1:?} are not joined by an edge")]
    NotAnEdge(String, String),
    #[error("side condition violated at vertex {vertex:?}: {detail}")]
    SideCondition { vertex: String, detail: String },
    #[error("multiplicity {value} of vertex {vertex:?} is not a non-negative integer")]
    NotMultiplicity { vertex: String, value: String },
    #[error("unit order {n} is not p·m with p = {p} not dividing m")]
    BadUnitOrder { n: u64, p: u64 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("the two primes must differ (got {0} twice)")]
    SamePrime(u64),
    #[error("{prime} does not divide the group order {order}")]
    NotDividing { prime: u64, order: String },
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error(transparent)]
    Help(#[from] HelpError),
    #[error(transparent)]
    NumTheory(#[from] NumTheoryError),
}

impl BrauerError {
    pub fn from_json(e: serde_json::Error) -> Self {
        BrauerError::Json { line: e.line(), column: e.column(), message: e.to_string() }
    }
}
