//! Backtracking over semistandard lattice fillings of a skew shape.

use super::{Partition, SkewShape};

/// Calls `f` with the rows of every semistandard filling of `shape` whose
/// reading word is a lattice word. With `content = Some(ν)` only fillings of
/// content exactly `ν` are produced.
///
/// Boxes are filled in reading order (rows top to bottom, each row right to
/// left) so that the lattice condition can be checked on every prefix.
pub fn for_each_lattice_filling<F>(shape: &SkewShape, content: Option<&Partition>, mut f: F)
where
    F: FnMut(&[Vec<u32>]),
{
    if let Some(nu) = content {
        if nu.size() != shape.num_boxes() {
            return;
        }
    }
    let nrows = shape.rows();
    let mut rows: Vec<Vec<u32>> = (0..nrows)
        .map(|i| {
            let (a, b) = shape.row_span(i);
            vec![0; (b - a) as usize]
        })
        .collect();
    let mut cells = Vec::new();
    for i in 0..nrows {
        let (a, b) = shape.row_span(i);
        for c in (a..b).rev() {
            cells.push((i, c));
        }
    }
    let limit: Option<Vec<u32>> = content.map(|nu| nu.parts().to_vec());
    let mut counts = vec![0u32; shape.num_boxes() as usize + 1];
    rec(shape, &cells, 0, &mut rows, &mut counts, limit.as_deref(), &mut f);
}

fn rec<F: FnMut(&[Vec<u32>])>(
    shape: &SkewShape,
    cells: &[(usize, u32)],
    k: usize,
    rows: &mut Vec<Vec<u32>>,
    counts: &mut Vec<u32>,
    limit: Option<&[u32]>,
    f: &mut F,
) {
    if k == cells.len() {
        f(rows);
        return;
    }
    let (i, c) = cells[k];
    let (a, b) = shape.row_span(i);
    let idx = (c - a) as usize;
    let lo = if i > 0 && shape.contains_box(i - 1, c) {
        let (a0, _) = shape.row_span(i - 1);
        rows[i - 1][(c - a0) as usize] + 1
    } else {
        1
    };
    let used = counts.iter().take_while(|&&x| x > 0).count() as u32;
    let mut hi = used + 1;
    if c + 1 < b {
        hi = hi.min(rows[i][idx + 1]);
    }
    if let Some(nu) = limit {
        hi = hi.min(nu.len() as u32);
    }
    for v in lo..=hi {
        let vi = (v - 1) as usize;
        if v > 1 && counts[vi] + 1 > counts[vi - 1] {
            continue;
        }
        if let Some(nu) = limit {
            if counts[vi] >= nu[vi] {
                continue;
            }
        }
        counts[vi] += 1;
        rows[i][idx] = v;
        rec(shape, cells, k + 1, rows, counts, limit, f);
        counts[vi] -= 1;
    }
    rows[i][idx] = 0;
}

/// The Littlewood–Richardson coefficient `c^λ_{μ,ν}`; zero whenever
/// `μ ⊄ λ` or the weights do not match.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lambda.contains(mu) || lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    let shape = SkewShape { outer: lambda.clone(), inner: mu.clone() };
    let mut n = 0u64;
    for_each_lattice_filling(&shape, Some(nu), |_| n += 1);
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::part;

    #[test]
    fn small_values() {
        assert_eq!(lr_coefficient(&part(&[2, 1]), &part(&[1]), &part(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&part(&[2, 2]), &part(&[1]), &part(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&part(&[3, 2, 1]), &part(&[2, 1]), &part(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&part(&[2]), &part(&[1, 1]), &part(&[])), 0);
        assert_eq!(lr_coefficient(&part(&[2, 1]), &part(&[1]), &part(&[1])), 0);
    }

    #[test]
    fn empty_inner_gives_one() {
        for n in 0..=6 {
            for lam in Partition::all_of_size(n, n) {
                assert_eq!(lr_coefficient(&lam, &Partition::empty(), &lam), 1, "{lam}");
            }
        }
    }
}
