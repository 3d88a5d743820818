//! Partitions, skew diagrams, tableaux, Gelfand–Zetlin schemes and the
//! Littlewood–Richardson rule.

mod gz;
mod lr;
mod skew;
mod tableau;

use serde::{Deserialize, Serialize};

pub use gz::{enumerate_gz_schemes, scheme_top, GZScheme};
pub use lr::{gamma_extremes, lr_expand};
pub use skew::{
    column_bottom_contents, inverse_column_tableau, make_skew, row_tableau_contents, Cell,
    DiagramInput, Rectangle, SkewDiagram,
};
pub use tableau::{enumerate_ssyt, Tableau, TableauKind};

/// Why a `(λ, μ, N)` triple describes the zero module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmptyReason {
    #[error("lambda_{row} = {lambda} < mu_{row} = {mu}")]
    RowInverted { row: usize, lambda: i64, mu: i64 },
    #[error("mu_M = {mu_last} < lambda_(M+N) = {lambda_last}")]
    MuBelowBottom { mu_last: i64, lambda_last: i64 },
    #[error("column {column} has {height} boxes, more than N = {n}")]
    ColumnTooTall { column: i64, height: usize, n: usize },
}

/// Errors raised while building diagrams.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("empty module: {0}")]
    EmptyModule(EmptyReason),
    #[error("{0} is not a non-increasing sequence")]
    NotNonIncreasing(&'static str),
    #[error("length mismatch: len(lambda) = {lambda} must equal len(mu) + N = {mu} + {n}")]
    LengthMismatch { lambda: usize, mu: usize, n: usize },
    #[error("N must be at least 1")]
    ZeroRank,
}

/// A non-increasing finite sequence of integers (entries may be negative).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct WeightSequence(Vec<i64>);

impl WeightSequence {
    pub fn new(entries: Vec<i64>) -> Result<Self, DiagramError> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(DiagramError::NotNonIncreasing("weight sequence"));
        }
        Ok(WeightSequence(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<i64>> for WeightSequence {
    type Error = DiagramError;
    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        WeightSequence::new(v)
    }
}

impl From<WeightSequence> for Vec<i64> {
    fn from(w: WeightSequence) -> Self {
        w.0
    }
}

/// All partitions with at most `rows` parts, each part at most `cols`.
pub fn partitions_in_box(rows: usize, cols: i64) -> Vec<Vec<i64>> {
    fn rec(rows: usize, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == rows {
            out.push(cur.clone());
            return;
        }
        for p in (0..=max).rev() {
            cur.push(p);
            rec(rows, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}
