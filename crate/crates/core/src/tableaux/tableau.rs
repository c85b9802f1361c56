use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Partition, TableauxError};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, TableauxError> {
        if !outer.contains(&inner) {
            return Err(TableauxError::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Half-open column range `[inner_i, outer_i)` of row `i` (0-based).
    pub fn row_span(&self, i: usize) -> (u32, u32) {
        (self.inner.part(i), self.outer.part(i))
    }

    pub fn contains_box(&self, row: usize, col: u32) -> bool {
        let (a, b) = self.row_span(row);
        row < self.rows() && a <= col && col < b
    }

    pub fn num_boxes(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }
}

/// A filling of a skew shape; `rows[i]` lists the entries of row `i` from
/// left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self, TableauxError> {
        if rows.len() != shape.rows() {
            return Err(TableauxError::ShapeMismatch(format!(
                "{} rows given for a shape with {} rows",
                rows.len(),
                shape.rows()
            )));
        }
        for (i, r) in rows.iter().enumerate() {
            let (a, b) = shape.row_span(i);
            if r.len() as u32 != b - a {
                return Err(TableauxError::ShapeMismatch(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    r.len(),
                    b - a
                )));
            }
            if r.contains(&0) {
                return Err(TableauxError::ShapeMismatch("entries must be positive".into()));
            }
        }
        Ok(SkewTableau { shape, rows })
    }

    /// Tableau of straight shape whose outer partition is read off the rows.
    pub fn straight(rows: Vec<Vec<u32>>) -> Result<Self, TableauxError> {
        let outer = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        Self::new(SkewShape::new(outer, Partition::empty())?, rows)
    }

    pub fn skew(outer: &[u32], inner: &[u32], rows: Vec<Vec<u32>>) -> Result<Self, TableauxError> {
        let shape = SkewShape::new(Partition::new(outer.to_vec())?, Partition::new(inner.to_vec())?)?;
        Self::new(shape, rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at absolute position (row, column), both 0-based.
    pub fn entry(&self, row: usize, col: u32) -> Option<u32> {
        if !self.shape.contains_box(row, col) {
            return None;
        }
        let (a, _) = self.shape.row_span(row);
        Some(self.rows[row][(col - a) as usize])
    }

    /// Rows weakly increase left to right, columns strictly increase top to
    /// bottom (columns aligned by absolute position).
    pub fn is_semistandard(&self) -> bool {
        if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
            return false;
        }
        for i in 1..self.rows.len() {
            let (a, b) = self.shape.row_span(i);
            for c in a..b {
                if let (Some(up), Some(here)) = (self.entry(i - 1, c), self.entry(i, c)) {
                    if up >= here {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Rows read right to left, from the top row down.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }

    pub fn is_lattice(&self) -> bool {
        is_lattice_word(&self.reading_word())
    }

    /// `counts[k]` is the number of entries equal to `k + 1`.
    pub fn letter_counts(&self) -> Vec<u32> {
        letter_counts(self.rows.iter().flatten().copied())
    }

    /// The content as a partition; fails if the letter counts are not
    /// non-increasing.
    pub fn content(&self) -> Result<Partition, TableauxError> {
        let c = self.letter_counts();
        if c.windows(2).any(|w| w[0] < w[1]) || c.contains(&0) {
            return Err(TableauxError::ContentNotPartition(c));
        }
        Partition::new(c)
    }

    /// `γ_s` of the content: the number of letters occurring at least `s` times.
    pub fn gamma(&self, s: u32) -> u32 {
        self.letter_counts().iter().filter(|&&c| c >= s).count() as u32
    }

    pub fn num_boxes(&self) -> u32 {
        self.shape.num_boxes()
    }

    /// Occupied column range `[min, max)` over all rows; `(0, 0)` if empty.
    pub fn column_span(&self) -> (u32, u32) {
        let mut lo = u32::MAX;
        let mut hi = 0;
        for i in 0..self.shape.rows() {
            let (a, b) = self.shape.row_span(i);
            if a < b {
                lo = lo.min(a);
                hi = hi.max(b);
            }
        }
        if hi == 0 {
            (0, 0)
        } else {
            (lo, hi)
        }
    }

    /// Keeps only the boxes in columns `>= col`, as a new tableau over the
    /// same rows (rows may become empty).
    pub fn right_of(&self, col: u32) -> SkewTableau {
        let outer: Vec<u32> = (0..self.shape.rows()).map(|i| self.shape.outer.part(i)).collect();
        let mut inner = Vec::with_capacity(outer.len());
        let mut rows = Vec::with_capacity(outer.len());
        for (i, r) in self.rows.iter().enumerate() {
            let (a, b) = self.shape.row_span(i);
            let start = a.max(col).min(b);
            inner.push(start);
            rows.push(r[(start - a) as usize..].to_vec());
        }
        // Row starts of a skew shape stay non-increasing after clamping.
        let shape = SkewShape {
            outer: Partition::new(outer.clone()).expect("outer unchanged"),
            inner: Partition::new(inner).unwrap_or_else(|_| Partition::empty()),
        };
        SkewTableau { shape, rows }
    }
}

pub(crate) fn letter_counts<I: IntoIterator<Item = u32>>(it: I) -> Vec<u32> {
    let mut c: Vec<u32> = Vec::new();
    for x in it {
        let k = x as usize;
        if c.len() < k {
            c.resize(k, 0);
        }
        c[k - 1] += 1;
    }
    c
}

/// Every prefix contains at least as many `i` as `i + 1`.
pub fn is_lattice_word(w: &[u32]) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &x in w {
        let k = x as usize;
        if k == 0 {
            return false;
        }
        if counts.len() < k {
            counts.resize(k, 0);
        }
        counts[k - 1] += 1;
        if k > 1 && counts[k - 1] > counts[k - 2] {
            return false;
        }
    }
    true
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} [", self.shape.outer, self.shape.inner)?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", s.join(" "))?;
        }
        write!(f, "]")
    }
}
