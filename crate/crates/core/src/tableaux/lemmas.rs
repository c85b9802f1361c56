//! Exhaustive checks of four structural facts about semistandard lattice
//! skew tableaux, run over the compressed corpus.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate::{compressed_shapes, lattice_tableaux_of};
use super::{SkewTableau, TableauxError};

pub const MAX_VERIFY_BOXES: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub tableau: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub lemma: String,
    pub max_boxes: u32,
    pub checked: u64,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

type Check = fn(&SkewTableau) -> Vec<String>;

fn run(lemma: &str, max_boxes: u32, check: Check) -> Result<VerificationReport, TableauxError> {
    if max_boxes > MAX_VERIFY_BOXES {
        return Err(TableauxError::TooManyBoxes { requested: max_boxes, max: MAX_VERIFY_BOXES });
    }
    let shapes = compressed_shapes(max_boxes);
    let per_shape: Vec<(u64, Vec<Violation>)> = shapes
        .par_iter()
        .map(|s| {
            let mut n = 0u64;
            let mut bad = Vec::new();
            for t in lattice_tableaux_of(s) {
                n += 1;
                for detail in check(&t) {
                    bad.push(Violation { tableau: t.to_string(), detail });
                }
            }
            (n, bad)
        })
        .collect();
    let mut report = VerificationReport {
        lemma: lemma.to_string(),
        max_boxes,
        checked: 0,
        violations: Vec::new(),
    };
    for (n, v) in per_shape {
        report.checked += n;
        report.violations.extend(v);
    }
    Ok(report)
}

/// Prefix counts of a given letter along the reading word, keyed by box.
fn count_in_prefix(t: &SkewTableau, row: usize, col: u32, letter: u32) -> u32 {
    let mut n = 0;
    for (i, r) in t.rows().iter().enumerate().take(row + 1) {
        let (a, _) = t.shape().row_span(i);
        for (j, &x) in r.iter().enumerate().rev() {
            if i == row && (a + j as u32) < col {
                break;
            }
            if x == letter {
                n += 1;
            }
        }
    }
    n
}

fn small_branch(t: &SkewTableau) -> Vec<String> {
    let mut out = Vec::new();
    for (i, r) in t.rows().iter().enumerate() {
        let (a, b) = t.shape().row_span(i);
        for (j, &e) in r.iter().enumerate() {
            let col = a + j as u32;
            let right = b - col - 1;
            let seen = count_in_prefix(t, i, col, e);
            if seen < right + 1 {
                out.push(format!(
                    "box ({},{}) entry {e}: {right} boxes to the right but w(b) has {seen} copies",
                    i + 1,
                    col + 1
                ));
            }
        }
    }
    out
}

fn full_rectangle(t: &SkewTableau) -> Vec<String> {
    let mut out = Vec::new();
    let sh = t.shape();
    let nrows = sh.rows();
    let (c0, c1) = t.column_span();
    for top in 0..nrows {
        for left in c0..c1 {
            if !sh.contains_box(top, left) {
                continue;
            }
            // grow width first along the top row, then height
            let mut w = 0;
            while sh.contains_box(top, left + w) {
                w += 1;
            }
            for k in 1..=w {
                let mut h = 0;
                while top + h < nrows && (0..k).all(|d| sh.contains_box(top + h, left + d)) {
                    h += 1;
                }
                let g = t.gamma(k);
                if g < h as u32 {
                    out.push(format!(
                        "rectangle {h}x{k} at ({},{}) but gamma_{k} = {g}",
                        top + 1,
                        left + 1
                    ));
                }
            }
        }
    }
    out
}

fn columns_between_lines(t: &SkewTableau) -> Vec<String> {
    let mut out = Vec::new();
    let (c0, c1) = t.column_span();
    let ell = c1 - c0;
    let nrows = t.shape().rows() as u32;
    for k in 0..=ell {
        let first = ell - k;
        // row range (1-based) of boxes in the first ell - k columns
        let mut rmin = u32::MAX;
        let mut rmax = 0;
        for i in 0..t.shape().rows() {
            let (a, b) = t.shape().row_span(i);
            let lo = a.max(c0);
            let hi = b.min(c0 + first);
            if lo < hi {
                rmin = rmin.min(i as u32 + 1);
                rmax = rmax.max(i as u32 + 1);
            }
        }
        if rmax == 0 {
            rmin = 1;
            rmax = 1;
        }
        let g = t.gamma(k + 1);
        for c in 0..rmin {
            for h in (rmax - c)..=nrows.max(rmax - c) {
                if g > h {
                    out.push(format!(
                        "first {first} columns within rows {}..{} but gamma_{} = {g}",
                        c + 1,
                        c + h,
                        k + 1
                    ));
                }
            }
        }
    }
    out
}

fn divided_tableau(t: &SkewTableau) -> Vec<String> {
    let mut out = Vec::new();
    let (c0, c1) = t.column_span();
    let counts = t.letter_counts();
    let max_n = counts.iter().copied().max().unwrap_or(0) + 1;
    for k in 0..=(c1 - c0) {
        let right = t.right_of(c0 + k);
        if !right.is_semistandard() {
            out.push(format!("cut after {k} columns: right part not semistandard"));
        }
        if !right.is_lattice() {
            out.push(format!("cut after {k} columns: right part not lattice"));
            continue;
        }
        for n in 1..=max_n {
            let (g, g2) = (t.gamma(n + k), right.gamma(n));
            if g > g2 {
                out.push(format!("cut after {k} columns: gamma_{} = {g} > gamma'_{n} = {g2}", n + k));
            }
        }
    }
    out
}

pub fn verify_lemma_small_branch(max_boxes: u32) -> Result<VerificationReport, TableauxError> {
    run("small_branch", max_boxes, small_branch)
}

pub fn verify_lemma_full_rectangle(max_boxes: u32) -> Result<VerificationReport, TableauxError> {
    run("full_rectangle", max_boxes, full_rectangle)
}

pub fn verify_lemma_columns_between_lines(
    max_boxes: u32,
) -> Result<VerificationReport, TableauxError> {
    run("columns_between_lines", max_boxes, columns_between_lines)
}

pub fn verify_lemma_divided_tableau(max_boxes: u32) -> Result<VerificationReport, TableauxError> {
    run("divided_tableau", max_boxes, divided_tableau)
}

/// All four reports in a fixed order.
pub fn verify_all(max_boxes: u32) -> Result<Vec<VerificationReport>, TableauxError> {
    Ok(vec![
        verify_lemma_small_branch(max_boxes)?,
        verify_lemma_full_rectangle(max_boxes)?,
        verify_lemma_columns_between_lines(max_boxes)?,
        verify_lemma_divided_tableau(max_boxes)?,
    ])
}
