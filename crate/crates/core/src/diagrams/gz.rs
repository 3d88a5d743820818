//! Gelfand–Zetlin schemes of type `λ` with the first `M` rows fixed by `μ`.

use serde::{Deserialize, Serialize};

use super::{make_skew, DiagramError};

/// A triangular array: `rows[m - 1]` holds `λ_{m,1}, …, λ_{m,m}` for
/// `m = 1..=M+N`; the last row is `λ` itself.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GZScheme {
    pub rows: Vec<Vec<i64>>,
}

impl GZScheme {
    /// Entry `λ_{m,i}` (1-based indices).
    pub fn get(&self, m: usize, i: usize) -> i64 {
        self.rows[m - 1][i - 1]
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    /// Betweenness `λ_{m,i} ≥ λ_{m−1,i} ≥ λ_{m,i+1}` everywhere.
    pub fn is_betweenness(&self) -> bool {
        (2..=self.height()).all(|m| {
            (1..m).all(|i| self.get(m, i) >= self.get(m - 1, i) && self.get(m - 1, i) >= self.get(m, i + 1))
        })
    }

    /// Membership in the scheme set for `(λ, μ)`.
    pub fn is_member(&self, lambda: &[i64], mu: &[i64]) -> bool {
        let m = mu.len();
        self.height() == lambda.len()
            && self.rows.iter().enumerate().all(|(t, r)| r.len() == t + 1)
            && self.rows[lambda.len() - 1] == lambda
            && (1..=m).all(|r| self.rows[r - 1] == mu[..r])
            && self.is_betweenness()
    }

    /// The scheme with `λ_{m,i}` changed by `delta`, if still a member.
    pub fn adjusted(&self, lambda: &[i64], mu: &[i64], m: usize, i: usize, delta: i64) -> Option<GZScheme> {
        let mut s = self.clone();
        s.rows[m - 1][i - 1] += delta;
        s.is_member(lambda, mu).then_some(s)
    }
}

/// All schemes of type `λ` whose rows `1..=M` equal the prefixes of `μ`,
/// sorted lexicographically.
pub fn enumerate_gz_schemes(lambda: &[i64], mu: &[i64], n: usize) -> Result<Vec<GZScheme>, DiagramError> {
    let d = make_skew(lambda, mu, n)?;
    let lambda = d.lambda().to_vec();
    let mu = d.mu();
    let m = mu.len();
    let mut out = Vec::new();
    // rows_rev[t] holds row (top - t).
    let mut rows_rev: Vec<Vec<i64>> = vec![lambda.clone()];
    fn fill_row(
        upper: &[i64],
        lower_bound_mu: &[i64],
        i: usize,
        cur: &mut Vec<i64>,
        acc: &mut Vec<Vec<i64>>,
    ) {
        if i == upper.len() - 1 {
            acc.push(cur.clone());
            return;
        }
        let hi = upper[i];
        let mut lo = upper[i + 1];
        if let Some(&b) = lower_bound_mu.get(i) {
            lo = lo.max(b);
        }
        for v in lo..=hi {
            cur.push(v);
            fill_row(upper, lower_bound_mu, i + 1, cur, acc);
            cur.pop();
        }
    }
    fn rec(m: usize, mu: &[i64], rows_rev: &mut Vec<Vec<i64>>, out: &mut Vec<GZScheme>) {
        let upper = rows_rev.last().unwrap().clone();
        let level = upper.len();
        // Stop at row M (which must equal μ), or at row 1 when M = 0.
        if level == m.max(1) {
            if m > 0 && upper != mu {
                return;
            }
            let mut rows: Vec<Vec<i64>> = (1..m).map(|r| mu[..r].to_vec()).collect();
            rows.extend(rows_rev.iter().rev().cloned());
            let s = GZScheme { rows };
            if s.is_betweenness() {
                out.push(s);
            }
            return;
        }
        let mut cands = Vec::new();
        fill_row(&upper, mu, 0, &mut Vec::new(), &mut cands);
        for c in cands {
            rows_rev.push(c);
            rec(m, mu, rows_rev, out);
            rows_rev.pop();
        }
    }
    rec(m, mu, &mut rows_rev, &mut out);
    out.sort();
    Ok(out)
}

/// The distinguished scheme `Λ°`:
/// `μ_i` for rows `m ≤ M`; `min(λ_i, μ_{i−m+M})` for `m > M` and
/// `i > m − M`; `λ_i` otherwise.
pub fn scheme_top(lambda: &[i64], mu: &[i64], n: usize) -> Result<GZScheme, DiagramError> {
    let d = make_skew(lambda, mu, n)?;
    let lambda = d.lambda();
    let mu = d.mu();
    let mm = mu.len();
    let rows = (1..=lambda.len())
        .map(|m| {
            (1..=m)
                .map(|i| {
                    if m <= mm {
                        mu[i - 1]
                    } else if i > m - mm {
                        lambda[i - 1].min(mu[i + mm - m - 1])
                    } else {
                        lambda[i - 1]
                    }
                })
                .collect()
        })
        .collect();
    Ok(GZScheme { rows })
}
