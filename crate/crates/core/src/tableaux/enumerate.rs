//! Exhaustive corpus of semistandard lattice skew tableaux.
//!
//! Empty rows and empty columns do not change semistandardness, the reading
//! word or any column/row relation between boxes, so every skew tableau is
//! equivalent to one whose shape has a box in every row and every column.
//! The corpus consists of exactly those compressed shapes, ordered by outer
//! weight, then outer partition, then inner partition.

use super::{for_each_lattice_filling, Partition, SkewShape, SkewTableau};

/// All compressed skew shapes with `1..=max_boxes` boxes.
pub fn compressed_shapes(max_boxes: u32) -> Vec<SkewShape> {
    let mut out = Vec::new();
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    for l1 in 1..=max_boxes {
        for m1 in 0..l1 {
            if l1 - m1 > max_boxes {
                continue;
            }
            outer.push(l1);
            inner.push(m1);
            extend(max_boxes - (l1 - m1), &mut outer, &mut inner, &mut out);
            outer.pop();
            inner.pop();
        }
    }
    out.sort_by(|a, b| {
        (a.outer.size(), &a.outer, &a.inner).cmp(&(b.outer.size(), &b.outer, &b.inner))
    });
    out
}

fn extend(budget: u32, outer: &mut Vec<u32>, inner: &mut Vec<u32>, out: &mut Vec<SkewShape>) {
    let (lp, mp) = (*outer.last().unwrap(), *inner.last().unwrap());
    if mp == 0 {
        out.push(SkewShape {
            outer: Partition::new(outer.clone()).expect("non-increasing"),
            inner: Partition::new(inner.clone()).expect("non-increasing"),
        });
    }
    // next row: inner <= mp, outer <= lp, outer >= mp (no empty column),
    // at least one box.
    for m in 0..=mp {
        for l in mp.max(m + 1)..=lp {
            let boxes = l - m;
            if boxes > budget {
                break;
            }
            outer.push(l);
            inner.push(m);
            extend(budget - boxes, outer, inner, out);
            outer.pop();
            inner.pop();
        }
    }
}

/// Every semistandard lattice tableau on a compressed shape with at most
/// `max_boxes` boxes, in corpus order.
pub fn lattice_tableaux_of(shape: &SkewShape) -> Vec<SkewTableau> {
    let mut v = Vec::new();
    for_each_lattice_filling(shape, None, |rows| {
        v.push(SkewTableau::new(shape.clone(), rows.to_vec()).expect("filling matches shape"));
    });
    v
}

pub fn lattice_tableaux(max_boxes: u32) -> Vec<SkewTableau> {
    compressed_shapes(max_boxes).iter().flat_map(lattice_tableaux_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_are_compressed_and_unique() {
        let shapes = compressed_shapes(5);
        let mut seen = std::collections::HashSet::new();
        for s in &shapes {
            assert!(seen.insert(s.clone()));
            assert!(s.num_boxes() >= 1 && s.num_boxes() <= 5);
            for i in 0..s.rows() {
                let (a, b) = s.row_span(i);
                assert!(a < b);
            }
            for c in 0..s.outer.part(0) {
                assert!((0..s.rows()).any(|i| s.contains_box(i, c)));
            }
        }
    }

    #[test]
    fn every_generated_tableau_is_valid() {
        for t in lattice_tableaux(6) {
            assert!(t.is_semistandard(), "{t}");
            assert!(t.is_lattice(), "{t}");
        }
    }

    #[test]
    fn straight_shapes_have_single_yamanouchi_filling() {
        for s in compressed_shapes(6).iter().filter(|s| s.inner.is_empty()) {
            assert_eq!(lattice_tableaux_of(s).len(), 1);
        }
    }
}
