//! Fixed workloads shared by the benchmarks.

use pgq_core::help::PartialAugmentationVector;
use pgq_core::tableaux::{part, Partition};
use pgq_core::CyclotomicElement;

/// A dense element of `Q(ζ_n)` with small integer coefficients.
pub fn dense_element(n: u64, seed: i64) -> CyclotomicElement {
    let terms: Vec<(i64, i64)> = (0..n as i64).map(|a| (a, (a * 7 + seed) % 5 - 2)).collect();
    CyclotomicElement::from_int_terms(n, &terms).expect("n is positive")
}

/// `(λ, μ, ν)` triples with `|λ| = |μ| + |ν|`, of growing size.
pub fn lr_triples() -> Vec<(Partition, Partition, Partition)> {
    vec![
        (part(&[3, 2, 1]), part(&[2, 1]), part(&[2, 1])),
        (part(&[4, 3, 2, 1]), part(&[3, 1]), part(&[3, 2, 1])),
        (part(&[5, 4, 3, 2]), part(&[4, 2, 1]), part(&[4, 2, 1])),
    ]
}

/// The vector of every element of order `p·m` in the bundled S5 table.
pub fn s5_unit(class: &str) -> PartialAugmentationVector {
    let s5 = pgq_core::fixtures::s5();
    PartialAugmentationVector::from_element(&s5, class).expect("class is in the table")
}
