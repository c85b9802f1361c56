//! Independent linear-algebra oracle for `F_p C_p`-modules.
//!
//! A module of type `λ` is `F_p^{|λ|}` with the nilpotent operator
//! `N = c - 1` acting as a shift on Jordan blocks of sizes `λ_i`. Submodules
//! are the `N`-invariant subspaces, enumerated through their reduced row
//! echelon forms; Jordan types of submodule and quotient are read off rank
//! sequences. Nothing here touches tableaux or LR coefficients.

use std::collections::BTreeSet;

use super::Partition;

struct Module {
    blocks: Vec<(usize, usize)>, // (offset, size)
    dim: usize,
}

impl Module {
    fn new(lambda: &Partition) -> Self {
        let mut blocks = Vec::new();
        let mut off = 0;
        for &s in lambda.parts() {
            blocks.push((off, s as usize));
            off += s as usize;
        }
        Module { blocks, dim: off }
    }

    fn apply_n(&self, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.dim];
        for &(o, s) in &self.blocks {
            for j in 0..s.saturating_sub(1) {
                out[o + j + 1] = v[o + j];
            }
        }
        out
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    (1..p).find(|x| (a * x) % p == 1).expect("nonzero residue mod prime")
}

/// Rank of a list of vectors over `F_p`.
fn rank(p: u32, mut rows: Vec<Vec<u32>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] % p != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = inv_mod(rows[r][c] % p, p);
        for x in rows[r].iter_mut() {
            *x = (*x * inv) % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] + p * p - f * rows[r][j] % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

/// Reduces `v` against an RREF basis; zero result means `v` is in the span.
fn in_span(p: u32, basis: &[Vec<u32>], pivots: &[usize], v: &[u32]) -> bool {
    let mut w = v.to_vec();
    for (row, &c) in basis.iter().zip(pivots) {
        let f = w[c] % p;
        if f != 0 {
            for j in 0..w.len() {
                w[j] = (w[j] + p * p - f * row[j] % p) % p;
            }
        }
    }
    w.iter().all(|&x| x % p == 0)
}

fn partition_from_ranks(ranks: &[usize]) -> Partition {
    // ranks[k] = dim N^k(X); blocks of size >= k number ranks[k-1] - ranks[k]
    let conj: Vec<u32> = ranks
        .windows(2)
        .map(|w| (w[0] - w[1]) as u32)
        .take_while(|&x| x > 0)
        .collect();
    Partition::new(conj).expect("rank drops are non-increasing").conjugate()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All pairs `(type of U, type of M/U)` over the `N`-invariant subspaces `U`
/// of the module of type `lambda` over `F_p`.
pub fn realizable_pairs(p: u32, lambda: &Partition) -> BTreeSet<(Partition, Partition)> {
    let m = Module::new(lambda);
    let d = m.dim;
    let maxk = lambda.part(0) as usize;
    let std_basis: Vec<Vec<u32>> = (0..d)
        .map(|i| {
            let mut v = vec![0; d];
            v[i] = 1;
            v
        })
        .collect();
    // N^k V for k = 0..=maxk
    let mut powers_v = vec![std_basis.clone()];
    for k in 1..=maxk {
        let prev: &Vec<Vec<u32>> = &powers_v[k - 1];
        let next = prev.iter().map(|v| m.apply_n(v)).collect();
        powers_v.push(next);
    }
    let mut out = BTreeSet::new();
    for k in 0..=d {
        for pivots in combinations(d, k) {
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &c)| ((c + 1)..d).filter(|j| !pivots.contains(j)).map(move |j| (r, j)))
                .collect();
            let total = (p as usize).pow(free.len() as u32);
            for code in 0..total {
                let mut basis: Vec<Vec<u32>> = pivots
                    .iter()
                    .map(|&c| {
                        let mut v = vec![0; d];
                        v[c] = 1;
                        v
                    })
                    .collect();
                let mut x = code;
                for &(r, j) in &free {
                    basis[r][j] = (x % p as usize) as u32;
                    x /= p as usize;
                }
                if !basis.iter().all(|b| in_span(p, &basis, &pivots, &m.apply_n(b))) {
                    continue;
                }
                let mut ru = vec![k];
                let mut cur = basis.clone();
                for _ in 1..=maxk {
                    cur = cur.iter().map(|v| m.apply_n(v)).collect();
                    ru.push(rank(p, cur.clone()));
                }
                let mut rq = Vec::new();
                for pv in &powers_v {
                    let mut rows = pv.clone();
                    rows.extend(basis.iter().cloned());
                    rq.push(rank(p, rows) - k);
                }
                out.insert((partition_from_ranks(&ru), partition_from_ranks(&rq)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::part;

    #[test]
    fn single_block() {
        let pairs = realizable_pairs(3, &part(&[3]));
        let expect: BTreeSet<_> = [
            (part(&[]), part(&[3])),
            (part(&[1]), part(&[2])),
            (part(&[2]), part(&[1])),
            (part(&[3]), part(&[])),
        ]
        .into_iter()
        .collect();
        assert_eq!(pairs, expect);
    }

    #[test]
    fn two_simple_summands() {
        let pairs = realizable_pairs(3, &part(&[1, 1]));
        assert!(pairs.contains(&(part(&[1]), part(&[1]))));
        assert_eq!(pairs.len(), 3);
    }
}
