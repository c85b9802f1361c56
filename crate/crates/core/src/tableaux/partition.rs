use std::fmt;

use serde::{Deserialize, Serialize};

use super::TableauxError;

/// An integer partition stored as non-increasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Trailing zeros are dropped; parts must be non-increasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, TableauxError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(TableauxError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Whether `other ⊆ self` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Number of parts that are at least `s`.
    pub fn gamma(&self, s: u32) -> u32 {
        self.0.iter().filter(|&&x| x >= s).count() as u32
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0);
        Partition((1..=w).map(|s| self.gamma(s)).collect())
    }

    /// All partitions of `n` with parts at most `max_part`, in reverse
    /// lexicographic order.
    pub fn all_of_size(n: u32, max_part: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in (1..=max.min(n)).rev() {
                cur.push(k);
                rec(n - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_part, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[u32], i: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(cur.clone()).expect("built non-increasing"));
                return;
            }
            for k in 0..=outer[i].min(cap) {
                cur.push(k);
                rec(outer, i + 1, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, 0, u32::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = TableauxError;
    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Shorthand used in tests and fixtures; panics on invalid input.
pub fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).expect("valid partition")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), part(&[3, 1]));
    }

    #[test]
    fn gamma_and_conjugate() {
        let p = part(&[2, 2, 2, 1, 1]);
        assert_eq!(p.gamma(2), 3);
        assert_eq!(p.gamma(1), 5);
        assert_eq!(p.conjugate(), part(&[5, 3]));
    }

    #[test]
    fn counts() {
        assert_eq!(Partition::all_of_size(5, 5).len(), 7);
        assert_eq!(Partition::all_of_size(6, 3).len(), 7);
        assert_eq!(part(&[2, 1]).subpartitions().len(), 5);
    }
}
