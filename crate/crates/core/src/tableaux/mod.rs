//! Partitions, skew tableaux, the lattice property, Littlewood–Richardson
//! coefficients and the module-theoretic statements they encode.

mod enumerate;
pub mod jordan;
mod lemmas;
mod lr;
mod modules;
mod partition;
mod tableau;

use thiserror::Error;

pub use enumerate::{compressed_shapes, lattice_tableaux, lattice_tableaux_of};
pub use lemmas::{
    verify_all, verify_lemma_columns_between_lines, verify_lemma_divided_tableau,
    verify_lemma_full_rectangle, verify_lemma_small_branch, VerificationReport, Violation,
    MAX_VERIFY_BOXES,
};
pub use lr::{for_each_lattice_filling, lr_coefficient};
pub use modules::{
    factor_sequence_realizable, submodule_quotient_exists, ModulePartition, Realizability,
};
pub use partition::{part, Partition};
pub use tableau::{is_lattice_word, SkewShape, SkewTableau};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauxError {
    #[error("{0:?} is not a partition")]
    NotAPartition(Vec<u32>),
    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    NotContained { outer: Partition, inner: Partition },
    #[error("filling does not match shape: {0}")]
    ShapeMismatch(String),
    #[error("letter counts {0:?} do not form a partition")]
    ContentNotPartition(Vec<u32>),
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("partition {partition} has a block larger than p = {p}")]
    BlockTooLarge { p: u32, partition: Partition },
    #[error("at most {max} boxes can be verified exhaustively, {requested} requested")]
    TooManyBoxes { requested: u32, max: u32 },
}

/// `γ_s(λ)`: the number of parts of `λ` that are at least `s`.
pub fn gamma(s: u32, lambda: &Partition) -> u32 {
    lambda.gamma(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure_t() -> SkewTableau {
        SkewTableau::straight(vec![vec![1, 2, 1], vec![2, 3], vec![3, 4], vec![5]]).unwrap()
    }

    fn figure_s() -> SkewTableau {
        SkewTableau::skew(&[3, 2, 2, 1], &[1], vec![vec![1, 1], vec![1, 2], vec![2, 3], vec![4]])
            .unwrap()
    }

    #[test]
    fn figure_tableau_t() {
        let t = figure_t();
        assert!(!t.is_semistandard());
        assert_eq!(t.reading_word(), vec![1, 2, 1, 3, 2, 4, 3, 5]);
        assert!(t.is_lattice());
        assert_eq!(t.content().unwrap(), part(&[2, 2, 2, 1, 1]));
        assert_eq!(gamma(2, &t.content().unwrap()), 3);
    }

    #[test]
    fn figure_tableau_s() {
        let s = figure_s();
        assert!(s.is_semistandard());
        assert_eq!(s.reading_word(), vec![1, 1, 2, 1, 3, 2, 4]);
        assert!(s.is_lattice());
        assert_eq!(s.content().unwrap(), part(&[3, 2, 1, 1]));
    }

    #[test]
    fn column_strictness_uses_absolute_columns() {
        // Column 2 holds 1 above 1: not strictly increasing.
        let bad = SkewTableau::skew(&[2, 2], &[1], vec![vec![1], vec![1, 1]]).unwrap();
        assert!(!bad.is_semistandard());
        let good = SkewTableau::skew(&[2, 2], &[1], vec![vec![1], vec![1, 2]]).unwrap();
        assert!(good.is_semistandard());
    }

    #[test]
    fn content_error_for_non_partition_counts() {
        let t = SkewTableau::straight(vec![vec![2]]).unwrap();
        assert!(matches!(t.content(), Err(TableauxError::ContentNotPartition(_))));
    }

    #[test]
    fn shape_mismatch() {
        assert!(SkewTableau::skew(&[2], &[1], vec![vec![1, 1]]).is_err());
        assert!(SkewTableau::skew(&[1], &[2], vec![vec![]]).is_err());
    }
}
