//! Numbering and semistandard tableaux on skew diagrams.

use serde::{Deserialize, Serialize};

use super::skew::{inverse_column_tableau, SkewDiagram};

/// Which kind of filling a tableau carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableauKind {
    /// Bijective numbering by rows downwards, left to right.
    Row,
    /// Bijective numbering by columns right to left, upwards in a column.
    InverseColumn,
    /// Semistandard filling with entries `1..=N`.
    Semistandard,
}

/// A filling of a skew diagram; `entries[p]` belongs to the `p`-th box in
/// row-reading order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    pub kind: TableauKind,
    pub entries: Vec<usize>,
}

impl Tableau {
    /// The row-reading numbering `1..=n`.
    pub fn row_numbering(d: &SkewDiagram) -> Tableau {
        Tableau {
            kind: TableauKind::Row,
            entries: (1..=d.len()).collect(),
        }
    }

    /// The inverse-column numbering.
    pub fn inverse_column_numbering(d: &SkewDiagram) -> Tableau {
        Tableau {
            kind: TableauKind::InverseColumn,
            entries: inverse_column_tableau(d).0,
        }
    }

    /// Row-major layout: one array per row `1..=M+N`, spanning the column
    /// range of the whole diagram, with `None` where there is no box.
    pub fn to_rows(&self, d: &SkewDiagram) -> Vec<Vec<Option<usize>>> {
        let (lo, hi) = match (d.boxes().iter().map(|b| b.1).min(), d.boxes().iter().map(|b| b.1).max()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return vec![Vec::new(); d.num_rows()],
        };
        (1..=d.num_rows() as i64)
            .map(|i| {
                (lo..=hi)
                    .map(|j| d.index_of((i, j)).map(|p| self.entries[p]))
                    .collect()
            })
            .collect()
    }

    /// Check the semistandard conditions against a diagram.
    pub fn is_semistandard(&self, d: &SkewDiagram) -> bool {
        let n = d.n();
        d.boxes().iter().enumerate().all(|(p, &(i, j))| {
            let e = self.entries[p];
            if e < 1 || e > n {
                return false;
            }
            let left_ok = d
                .index_of((i, j - 1))
                .is_none_or(|q| self.entries[q] <= e);
            let up_ok = d.index_of((i - 1, j)).is_none_or(|q| self.entries[q] < e);
            left_ok && up_ok
        })
    }
}

/// All semistandard tableaux with entries `1..=N`, in lexicographic order
/// of their row-reading entry sequences.
pub fn enumerate_ssyt(d: &SkewDiagram) -> Vec<Tableau> {
    let n = d.n();
    let cells = d.boxes();
    let left: Vec<Option<usize>> = cells.iter().map(|&(i, j)| d.index_of((i, j - 1))).collect();
    let up: Vec<Option<usize>> = cells.iter().map(|&(i, j)| d.index_of((i - 1, j))).collect();
    let mut out = Vec::new();
    let mut cur = vec![0usize; cells.len()];
    fn rec(
        p: usize,
        n: usize,
        left: &[Option<usize>],
        up: &[Option<usize>],
        cur: &mut Vec<usize>,
        out: &mut Vec<Tableau>,
    ) {
        if p == cur.len() {
            out.push(Tableau {
                kind: TableauKind::Semistandard,
                entries: cur.clone(),
            });
            return;
        }
        let lo = left[p].map_or(1, |q| cur[q]).max(up[p].map_or(1, |q| cur[q] + 1));
        for e in lo..=n {
            cur[p] = e;
            rec(p + 1, n, left, up, cur, out);
        }
    }
    rec(0, n, &left, &up, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::super::make_skew;
    use super::*;

    /// Brute force over all fillings.
    fn brute(d: &SkewDiagram) -> usize {
        let n = d.n();
        let len = d.len();
        let total = n.pow(len as u32);
        (0..total)
            .filter(|&code| {
                let mut c = code;
                let entries: Vec<usize> = (0..len)
                    .map(|_| {
                        let e = c % n + 1;
                        c /= n;
                        e
                    })
                    .collect();
                Tableau {
                    kind: TableauKind::Semistandard,
                    entries,
                }
                .is_semistandard(d)
            })
            .count()
    }

    #[test]
    fn ssyt_counts_match_brute_force() {
        let cases: Vec<(Vec<i64>, Vec<i64>, usize)> = vec![
            (vec![2, 1], vec![], 2),
            (vec![1, 0], vec![], 2),
            (vec![1, 1], vec![], 2),
            (vec![2, 1, 0], vec![], 3),
            (vec![3, 2, 0], vec![1], 2),
            (vec![5, 5, 3, 2, 0, -2], vec![3, 2, 2, 1], 2),
        ];
        for (l, m, n) in cases {
            let d = make_skew(&l, &m, n).unwrap();
            let all = enumerate_ssyt(&d);
            assert_eq!(all.len(), brute(&d), "{l:?}/{m:?}");
            assert!(all.iter().all(|t| t.is_semistandard(&d)));
            assert!(all.windows(2).all(|w| w[0].entries < w[1].entries));
        }
        assert_eq!(enumerate_ssyt(&make_skew(&[2, 1], &[], 2).unwrap()).len(), 2);
        assert_eq!(enumerate_ssyt(&make_skew(&[1, 1], &[], 2).unwrap()).len(), 1);
        assert_eq!(enumerate_ssyt(&make_skew(&[1, 0, 0], &[], 3).unwrap()).len(), 3);
    }

    #[test]
    fn row_layout_uses_nulls() {
        let d = make_skew(&[2, 1, 0], &[1], 2).unwrap();
        let t = Tableau::row_numbering(&d);
        assert_eq!(t.to_rows(&d), vec![vec![None, Some(1)], vec![Some(2), None], vec![None, None]]);
    }
}
