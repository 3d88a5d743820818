//! Skew Young diagrams built from a pair of weight sequences.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{DiagramError, EmptyReason, WeightSequence};

/// A box `(row, column)`; rows are numbered from 1, columns may be any
/// integer (including non-positive ones).
pub type Cell = (i64, i64);

/// A validated skew diagram `λ/μ` with at most `N` boxes in every column.
///
/// Rows `1..=M+N` are always present (possibly empty); the box list is in
/// row-reading order: rows downwards, left to right within a row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewDiagram {
    lambda: Vec<i64>,
    mu: Vec<i64>,
    n: usize,
    boxes: Vec<Cell>,
}

/// The JSON form `{"lambda": [...], "mu": [...], "N": n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramInput {
    pub lambda: Vec<i64>,
    #[serde(default)]
    pub mu: Vec<i64>,
    #[serde(rename = "N")]
    pub n: usize,
}

impl DiagramInput {
    pub fn build(&self) -> Result<SkewDiagram, DiagramError> {
        make_skew(&self.lambda, &self.mu, self.n)
    }
}

/// Validate `(λ, μ, N)` and build the diagram.
///
/// `λ` must have length `M + N` where `M = len(μ)`.  When `μ` is empty and
/// `λ` is a non-negative partition it is read as an ordinary Young diagram:
/// it is padded with zeros (or stripped of trailing zeros) to `N` parts, and
/// if all `N` parts are non-zero it is re-encoded as `(λ, 0)/(0)` so that
/// full-height columns are kept.  A partition with more than `N` non-zero
/// rows has a column taller than `N` and is rejected as an empty module.
pub fn make_skew(lambda: &[i64], mu: &[i64], n: usize) -> Result<SkewDiagram, DiagramError> {
    if n == 0 {
        return Err(DiagramError::ZeroRank);
    }
    WeightSequence::new(lambda.to_vec()).map_err(|_| DiagramError::NotNonIncreasing("lambda"))?;
    WeightSequence::new(mu.to_vec()).map_err(|_| DiagramError::NotNonIncreasing("mu"))?;
    let mut lambda = lambda.to_vec();
    let mut mu = mu.to_vec();
    if mu.is_empty() && lambda.iter().all(|&x| x >= 0) {
        let nonzero = lambda.iter().filter(|&&x| x > 0).count();
        if nonzero > n {
            return Err(DiagramError::EmptyModule(EmptyReason::ColumnTooTall {
                column: 1,
                height: nonzero,
                n,
            }));
        }
        lambda.resize(n.max(lambda.len()), 0);
        lambda.truncate(n);
        if nonzero == n {
            lambda.push(0);
            mu.push(0);
        }
    }
    let m = mu.len();
    let mu = mu.as_slice();
    if lambda.len() != m + n {
        return Err(DiagramError::LengthMismatch {
            lambda: lambda.len(),
            mu: m,
            n,
        });
    }
    let bottom = lambda[m + n - 1];
    for i in 0..m {
        if lambda[i] < mu[i] {
            return Err(DiagramError::EmptyModule(EmptyReason::RowInverted {
                row: i + 1,
                lambda: lambda[i],
                mu: mu[i],
            }));
        }
    }
    if m > 0 && mu[m - 1] < bottom {
        return Err(DiagramError::EmptyModule(EmptyReason::MuBelowBottom {
            mu_last: mu[m - 1],
            lambda_last: bottom,
        }));
    }
    let mut boxes = Vec::new();
    for i in 0..m + n {
        let lo = if i < m { mu[i] } else { bottom };
        for j in lo + 1..=lambda[i] {
            boxes.push((i as i64 + 1, j));
        }
    }
    let d = SkewDiagram {
        lambda,
        mu: mu.to_vec(),
        n,
        boxes,
    };
    for (col, cells) in d.columns() {
        if cells.len() > n {
            return Err(DiagramError::EmptyModule(EmptyReason::ColumnTooTall {
                column: col,
                height: cells.len(),
                n,
            }));
        }
    }
    Ok(d)
}

impl SkewDiagram {
    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn mu(&self) -> &[i64] {
        &self.mu
    }

    /// The rank `N` of `gl_N`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `M = len(μ)`.
    pub fn m(&self) -> usize {
        self.mu.len()
    }

    /// Boxes in row-reading order.
    pub fn boxes(&self) -> &[Cell] {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.index_of(c).is_some()
    }

    /// Position of a box in row-reading order.
    pub fn index_of(&self, c: Cell) -> Option<usize> {
        self.boxes.binary_search(&c).ok()
    }

    /// `μ_i` extended by `λ_{M+N}` below row `M` (1-based row index).
    pub fn mu_ext(&self, i: usize) -> i64 {
        if i <= self.m() {
            self.mu[i - 1]
        } else {
            self.lambda[self.lambda.len() - 1]
        }
    }

    /// Columns as `column -> boxes top to bottom`, ordered by column.
    pub fn columns(&self) -> BTreeMap<i64, Vec<Cell>> {
        let mut cols: BTreeMap<i64, Vec<Cell>> = BTreeMap::new();
        for &(i, j) in &self.boxes {
            cols.entry(j).or_default().push((i, j));
        }
        cols
    }

    /// Number of rows `M + N` (including empty ones).
    pub fn num_rows(&self) -> usize {
        self.lambda.len()
    }

    /// Translate to the JSON input form.
    pub fn to_input(&self) -> DiagramInput {
        DiagramInput {
            lambda: self.lambda.clone(),
            mu: self.mu.clone(),
            n: self.n,
        }
    }

    /// Non-empty rows as `(row, first column, last column)`.
    pub fn row_spans(&self) -> Vec<(i64, i64, i64)> {
        let mut out: Vec<(i64, i64, i64)> = Vec::new();
        for &(i, j) in &self.boxes {
            match out.last_mut() {
                Some(last) if last.0 == i => last.2 = j,
                _ => out.push((i, j, j)),
            }
        }
        out
    }

    /// If the boxes form a `rows × cols` rectangle, returns
    /// `(cols, rows, content of the top-left box)`.
    pub fn as_rectangle(&self) -> Option<Rectangle> {
        let spans = self.row_spans();
        let first = spans.first()?;
        let width = first.2 - first.1 + 1;
        for (t, s) in spans.iter().enumerate() {
            if s.0 != first.0 + t as i64 || s.1 != first.1 || s.2 != first.2 {
                return None;
            }
        }
        Some(Rectangle {
            k: width as usize,
            l: spans.len(),
            top_left_content: first.1 - first.0,
        })
    }

    /// If the boxes form a translate of an ordinary Young diagram (rows
    /// left-justified, weakly shrinking downwards), returns its partition
    /// padded with zeros to `N` parts and the content of the top-left box.
    /// The empty diagram is reported as the empty partition with shift 0.
    pub fn as_young(&self) -> Option<(Vec<i64>, i64)> {
        let spans = self.row_spans();
        let Some(first) = spans.first() else {
            return Some((vec![0; self.n], 0));
        };
        let mut parts = Vec::new();
        for (t, s) in spans.iter().enumerate() {
            let len = s.2 - s.1 + 1;
            if s.0 != first.0 + t as i64 || s.1 != first.1 {
                return None;
            }
            if parts.last().is_some_and(|&p| p < len) {
                return None;
            }
            parts.push(len);
        }
        parts.resize(self.n, 0);
        Some((parts, first.1 - first.0))
    }

    /// If the boxes form a translate of a reversed Young diagram (rows
    /// right-justified, weakly growing downwards), returns the partition `α`
    /// (row lengths read bottom to top, padded with zeros to `N` parts) and
    /// the content of the bottom-right box.  The empty diagram is reported
    /// as the empty partition with shift 0.
    pub fn as_reversed_young(&self) -> Option<(Vec<i64>, i64)> {
        let spans = self.row_spans();
        let Some(first) = spans.first() else {
            return Some((vec![0; self.n], 0));
        };
        let mut lens = Vec::new();
        for (t, s) in spans.iter().enumerate() {
            let len = s.2 - s.1 + 1;
            if s.0 != first.0 + t as i64 || s.2 != first.2 {
                return None;
            }
            if lens.last().is_some_and(|&p| p > len) {
                return None;
            }
            lens.push(len);
        }
        let last = spans.last().unwrap();
        lens.reverse();
        lens.resize(self.n, 0);
        Some((lens, last.2 - last.0))
    }
}

/// A rectangular diagram: `k` columns of height `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rectangle {
    pub k: usize,
    pub l: usize,
    pub top_left_content: i64,
}

/// Contents `c = j − i` of the boxes in row-reading order.
pub fn row_tableau_contents(d: &SkewDiagram) -> Vec<i64> {
    d.boxes().iter().map(|&(i, j)| j - i).collect()
}

/// The inverse-column numbering: columns from right to left, each column
/// read upwards.  Returns the number assigned to every box (indexed by the
/// box's row-reading position) and the permutation `g` with
/// `g[p - 1] = q` when the box numbered `p` in the inverse-column numbering
/// is numbered `q` in the row-reading numbering (both 1-based).
pub fn inverse_column_tableau(d: &SkewDiagram) -> (Vec<usize>, Vec<usize>) {
    let mut filling = vec![0; d.len()];
    let mut g = Vec::with_capacity(d.len());
    let mut next = 1;
    for (_, cells) in d.columns().iter().rev() {
        for &c in cells.iter().rev() {
            let q = d.index_of(c).expect("box of diagram");
            filling[q] = next;
            g.push(q + 1);
            next += 1;
        }
    }
    (filling, g)
}

/// Contents of the bottom boxes of the columns having exactly `k` boxes,
/// listed by increasing column.
pub fn column_bottom_contents(d: &SkewDiagram, k: usize) -> Vec<i64> {
    d.columns()
        .values()
        .filter(|cells| cells.len() == k)
        .map(|cells| {
            let (i, j) = *cells.last().unwrap();
            j - i
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nine_box_diagram() -> SkewDiagram {
        make_skew(&[5, 5, 3, 2, 0, -2], &[3, 2, 2, 1], 2).unwrap()
    }

    #[test]
    fn nine_box_example() {
        let d = nine_box_diagram();
        assert_eq!(d.len(), 9);
        assert_eq!(row_tableau_contents(&d), vec![3, 4, 1, 2, 3, 0, -2, -6, -5]);
        let bottoms: Vec<i64> = d
            .columns()
            .values()
            .map(|c| c.last().unwrap().1 - c.last().unwrap().0)
            .collect();
        let mut sorted = bottoms.clone();
        sorted.sort();
        assert_eq!(sorted, vec![-6, -5, -2, 0, 2, 3]);
        assert_eq!(column_bottom_contents(&d, 2), vec![0, 2, 3]);
        let mut k1 = column_bottom_contents(&d, 1);
        k1.sort();
        assert_eq!(k1, vec![-6, -5, -2]);
    }

    #[test]
    fn nine_box_inverse_column_numbering() {
        let d = nine_box_diagram();
        let (filling, g) = inverse_column_tableau(&d);
        assert_eq!(filling, vec![4, 2, 6, 3, 1, 5, 7, 9, 8]);
        assert_eq!(g, vec![5, 2, 4, 1, 6, 3, 7, 9, 8]);
        // g : 4->1, 2->2, 6->3, 3->4, 1->5, 5->6, 7->7, 9->8, 8->9
        for (p, q) in [(4, 1), (2, 2), (6, 3), (3, 4), (1, 5), (5, 6), (7, 7), (9, 8), (8, 9)] {
            assert_eq!(g[p - 1], q);
        }
    }

    #[test]
    fn single_box_and_column() {
        let d = make_skew(&[1, 0], &[], 2).unwrap();
        assert_eq!(d.boxes(), &[(1, 1)]);
        assert_eq!(row_tableau_contents(&d), vec![0]);
        let col = make_skew(&[1, 1, 1, 0], &[], 4).unwrap();
        assert_eq!(row_tableau_contents(&col), vec![0, -1, -2]);
        let (_, g) = inverse_column_tableau(&col);
        assert_eq!(g, vec![3, 2, 1]);
    }

    #[test]
    fn invalid_inputs() {
        assert!(matches!(
            make_skew(&[2, 2], &[], 1),
            Err(DiagramError::EmptyModule(EmptyReason::ColumnTooTall { .. }))
        ));
        assert!(matches!(
            make_skew(&[1, 0, 0], &[2], 2),
            Err(DiagramError::EmptyModule(EmptyReason::RowInverted { .. }))
        ));
        assert!(matches!(
            make_skew(&[3, 2, 1], &[0], 2),
            Err(DiagramError::EmptyModule(EmptyReason::MuBelowBottom { .. }))
        ));
        assert!(matches!(
            make_skew(&[1, 2], &[], 2),
            Err(DiagramError::NotNonIncreasing("lambda"))
        ));
    }

    #[test]
    fn shape_recognition() {
        let rect = make_skew(&[2, 2, 0], &[], 3).unwrap();
        assert_eq!(
            rect.as_rectangle(),
            Some(Rectangle {
                k: 2,
                l: 2,
                top_left_content: 0
            })
        );
        let young = make_skew(&[2, 1, 0], &[], 3).unwrap();
        assert_eq!(young.as_young(), Some((vec![2, 1, 0], 0)));
        assert_eq!(young.as_rectangle(), None);
        assert_eq!(young.as_reversed_young(), None);
        // Reversed diagram of α = (2, 1) for N = 2: rows 1..2 end at column 2.
        let rev = make_skew(&[2, 2, 0, 0], &[1, 0], 2).unwrap();
        assert_eq!(rev.as_reversed_young(), Some((vec![2, 1], 0)));
    }
}
