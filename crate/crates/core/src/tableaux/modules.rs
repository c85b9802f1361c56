//! Isomorphism types of modules over `F C_p` in characteristic `p` and the
//! LR criterion for submodule/quotient pairs.

use serde::{Deserialize, Serialize};

use super::{lr_coefficient, Partition, TableauxError};
use crate::arith::is_prime_small;

/// An `F C_p`-module up to isomorphism: the sizes of its Jordan blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModulePartition {
    pub p: u32,
    pub partition: Partition,
}

impl ModulePartition {
    pub fn new(p: u32, partition: Partition) -> Result<Self, TableauxError> {
        if !is_prime_small(p as u64) {
            return Err(TableauxError::NotPrime(p));
        }
        if partition.part(0) > p {
            return Err(TableauxError::BlockTooLarge { p, partition });
        }
        Ok(ModulePartition { p, partition })
    }

    pub fn dim(&self) -> u32 {
        self.partition.size()
    }

    /// Number of indecomposable summands of dimension at least `s`.
    pub fn gamma(&self, s: u32) -> u32 {
        self.partition.gamma(s)
    }

    /// All module types of dimension `dim`.
    pub fn all_of_dim(p: u32, dim: u32) -> Vec<ModulePartition> {
        Partition::all_of_size(dim, p)
            .into_iter()
            .map(|partition| ModulePartition { p, partition })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Realizability {
    Exists,
    DoesNotExist,
    /// The inputs cannot describe a submodule/quotient pair at all.
    Invalid(String),
}

impl Realizability {
    pub fn exists(&self) -> bool {
        matches!(self, Realizability::Exists)
    }
}

/// Whether `m` has a submodule of type `u` with quotient of type `q`; this is
/// the case iff `c^m_{u,q} ≠ 0`.
pub fn submodule_quotient_exists(
    m: &ModulePartition,
    u: &ModulePartition,
    q: &ModulePartition,
) -> Realizability {
    if m.p != u.p || m.p != q.p {
        return Realizability::Invalid("modules over different primes".into());
    }
    if u.dim() + q.dim() != m.dim() {
        return Realizability::Invalid(format!(
            "weight mismatch: {} + {} != {}",
            u.dim(),
            q.dim(),
            m.dim()
        ));
    }
    if lr_coefficient(&m.partition, &u.partition, &q.partition) > 0 {
        Realizability::Exists
    } else {
        Realizability::DoesNotExist
    }
}

/// Whether there is a chain `Q_0 = m ⊇ …` with `E_i ≅ factors[i]` a
/// submodule of `Q_{i-1}`, `Q_i = Q_{i-1}/E_i` and final quotient `top`.
pub fn factor_sequence_realizable(
    m: &ModulePartition,
    factors: &[ModulePartition],
    top: &ModulePartition,
) -> bool {
    let p = m.p;
    let Some((first, rest)) = factors.split_first() else {
        return m == top;
    };
    if first.dim() > m.dim() {
        return false;
    }
    ModulePartition::all_of_dim(p, m.dim() - first.dim())
        .into_iter()
        .any(|q1| submodule_quotient_exists(m, first, &q1).exists() && factor_sequence_realizable(&q1, rest, top))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::part;

    fn mp(v: &[u32]) -> ModulePartition {
        ModulePartition::new(3, part(v)).unwrap()
    }

    #[test]
    fn validation() {
        assert!(ModulePartition::new(4, part(&[1])).is_err());
        assert!(ModulePartition::new(3, part(&[4])).is_err());
    }

    #[test]
    fn simple_cases() {
        assert!(submodule_quotient_exists(&mp(&[3]), &mp(&[1]), &mp(&[2])).exists());
        assert!(!submodule_quotient_exists(&mp(&[3]), &mp(&[1]), &mp(&[1, 1])).exists());
        assert!(matches!(
            submodule_quotient_exists(&mp(&[3]), &mp(&[1]), &mp(&[1])),
            Realizability::Invalid(_)
        ));
    }

    #[test]
    fn swapping_factors() {
        let m = mp(&[3, 2, 1]);
        for s1 in ModulePartition::all_of_dim(3, 2) {
            for s2 in ModulePartition::all_of_dim(3, 2) {
                for t in ModulePartition::all_of_dim(3, 2) {
                    assert_eq!(
                        factor_sequence_realizable(&m, &[s1.clone(), s2.clone()], &t),
                        factor_sequence_realizable(&m, &[s2.clone(), s1.clone()], &t)
                    );
                }
            }
        }
    }
}
