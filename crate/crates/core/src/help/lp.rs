//! A small exact linear program solver: two-phase tableau simplex with
//! Bland's rule over `BigRational`.
//!
//! Problems have free variables and constraints `a·x ≤ b`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpResult {
    Optimal(BigRational),
    Unbounded,
    Infeasible,
}

/// Constraints `rows[i].0 · x ≤ rows[i].1` over `k` free variables.
#[derive(Clone, Debug, Default)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub rows: Vec<(Vec<BigRational>, BigRational)>,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram { num_vars, rows: Vec::new() }
    }

    pub fn add_le(&mut self, a: Vec<BigRational>, b: BigRational) {
        assert_eq!(a.len(), self.num_vars);
        self.rows.push((a, b));
    }

    pub fn add_ge(&mut self, a: Vec<BigRational>, b: BigRational) {
        self.add_le(a.into_iter().map(|x| -x).collect(), -b);
    }

    /// Maximises `c · x`.
    pub fn maximize(&self, c: &[BigRational]) -> LpResult {
        Tableau::build(self).solve(c)
    }

    pub fn minimize(&self, c: &[BigRational]) -> LpResult {
        let neg: Vec<BigRational> = c.iter().map(|x| -x).collect();
        match self.maximize(&neg) {
            LpResult::Optimal(v) => LpResult::Optimal(-v),
            other => other,
        }
    }
}

struct Tableau {
    // columns: y (k), z (k), slacks (m), artificials (a), rhs
    t: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    k: usize,
    first_art: usize,
    rhs: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let k = lp.num_vars;
        let m = lp.rows.len();
        let negative: Vec<usize> = (0..m).filter(|&i| lp.rows[i].1.is_negative()).collect();
        let first_art = 2 * k + m;
        let rhs = first_art + negative.len();
        let mut t = vec![vec![BigRational::zero(); rhs + 1]; m];
        let mut basis = vec![0; m];
        for (i, (a, b)) in lp.rows.iter().enumerate() {
            let flip = b.is_negative();
            let s = if flip { -BigRational::one() } else { BigRational::one() };
            for j in 0..k {
                t[i][j] = &a[j] * &s;
                t[i][k + j] = -&a[j] * &s;
            }
            t[i][2 * k + i] = s.clone();
            t[i][rhs] = b * &s;
            if flip {
                let col = first_art + negative.iter().position(|&r| r == i).expect("listed");
                t[i][col] = BigRational::one();
                basis[i] = col;
            } else {
                basis[i] = 2 * k + i;
            }
        }
        Tableau { t, basis, k, first_art, rhs }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = BigRational::one() / &self.t[r][c];
        for x in self.t[r].iter_mut() {
            *x *= &inv;
        }
        let prow = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximises `cost · columns` over columns `< ncols`; `false` if unbounded.
    fn run(&mut self, cost: &[BigRational], ncols: usize) -> bool {
        loop {
            let mut enter = None;
            for j in 0..ncols {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut r = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.t[i][j].is_zero() && !cost[b].is_zero() {
                        r -= &cost[b] * &self.t[i][j];
                    }
                }
                if r.is_positive() {
                    enter = Some(j);
                    break;
                }
            }
            let Some(c) = enter else { return true };
            let mut best: Option<(usize, BigRational)> = None;
            for i in 0..self.t.len() {
                if self.t[i][c].is_positive() {
                    let ratio = &self.t[i][self.rhs] / &self.t[i][c];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = best else { return false };
            self.pivot(r, c);
        }
    }

    fn solve(mut self, c: &[BigRational]) -> LpResult {
        let k = self.k;
        let ncols = self.rhs;
        if self.first_art < ncols {
            let mut cost = vec![BigRational::zero(); ncols];
            for x in cost.iter_mut().skip(self.first_art) {
                *x = -BigRational::one();
            }
            self.run(&cost, ncols);
            let infeasible = self
                .basis
                .iter()
                .enumerate()
                .any(|(i, &b)| b >= self.first_art && !self.t[i][self.rhs].is_zero());
            if infeasible {
                return LpResult::Infeasible;
            }
            // drive zero-level artificials out of the basis
            let mut i = 0;
            while i < self.t.len() {
                if self.basis[i] >= self.first_art {
                    if let Some(j) = (0..self.first_art).find(|&j| !self.t[i][j].is_zero()) {
                        self.pivot(i, j);
                    } else {
                        self.t.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
                i += 1;
            }
        }
        let mut cost = vec![BigRational::zero(); ncols];
        for j in 0..k {
            cost[j] = c[j].clone();
            cost[k + j] = -c[j].clone();
        }
        if !self.run(&cost, self.first_art) {
            return LpResult::Unbounded;
        }
        let mut value = BigRational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            value += &cost[b] * &self.t[i][self.rhs];
        }
        LpResult::Optimal(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::q;

    fn v(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| q(x, 1)).collect()
    }

    #[test]
    fn interval() {
        // -8 ≤ x ≤ 2
        let mut lp = LinearProgram::new(1);
        lp.add_le(v(&[1]), q(2, 1));
        lp.add_ge(v(&[1]), q(-8, 1));
        assert_eq!(lp.maximize(&v(&[1])), LpResult::Optimal(q(2, 1)));
        assert_eq!(lp.minimize(&v(&[1])), LpResult::Optimal(q(-8, 1)));
    }

    #[test]
    fn triangle() {
        // x, y ≥ 0, x + 2y ≤ 4, 3x + y ≤ 6
        let mut lp = LinearProgram::new(2);
        lp.add_ge(v(&[1, 0]), q(0, 1));
        lp.add_ge(v(&[0, 1]), q(0, 1));
        lp.add_le(v(&[1, 2]), q(4, 1));
        lp.add_le(v(&[3, 1]), q(6, 1));
        assert_eq!(lp.maximize(&v(&[1, 1])), LpResult::Optimal(q(14, 5)));
        assert_eq!(lp.maximize(&v(&[1, 0])), LpResult::Optimal(q(2, 1)));
        assert_eq!(lp.minimize(&v(&[1, -1])), LpResult::Optimal(q(-2, 1)));
    }

    #[test]
    fn unbounded_and_infeasible() {
        let mut lp = LinearProgram::new(2);
        lp.add_le(v(&[1, 1]), q(1, 1));
        assert_eq!(lp.maximize(&v(&[1, 0])), LpResult::Unbounded);
        lp.add_ge(v(&[1, 1]), q(3, 1));
        assert_eq!(lp.maximize(&v(&[1, 0])), LpResult::Infeasible);
    }

    #[test]
    fn degenerate_equality() {
        // x + y = 1 as two inequalities, 0 ≤ x ≤ 1/2
        let mut lp = LinearProgram::new(2);
        lp.add_le(v(&[1, 1]), q(1, 1));
        lp.add_ge(v(&[1, 1]), q(1, 1));
        lp.add_ge(v(&[1, 0]), q(0, 1));
        lp.add_le(v(&[2, 0]), q(1, 1));
        assert_eq!(lp.maximize(&v(&[0, 1])), LpResult::Optimal(q(1, 1)));
        assert_eq!(lp.minimize(&v(&[0, 1])), LpResult::Optimal(q(1, 2)));
    }
}
