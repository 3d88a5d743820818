//! Littlewood–Richardson expansion of products of `gl_N` characters.

use std::collections::BTreeMap;

fn padded(v: &[i64], n: usize) -> Vec<i64> {
    let mut out = v.to_vec();
    out.resize(n.max(out.len()), 0);
    out
}

/// The multiset `Γ_{αβ}`: every `γ` with at most `N` rows together with the
/// number of Littlewood–Richardson tableaux of shape `γ/β` and content `α`
/// (semistandard fillings whose reverse reading word — rows top to bottom,
/// each row right to left — is a lattice word).
///
/// `α` and `β` are partitions with at most `N` non-zero parts; shorter
/// inputs are padded with zeros.  Keys are sorted lexicographically.
pub fn lr_expand(alpha: &[i64], beta: &[i64], n: usize) -> BTreeMap<Vec<i64>, usize> {
    let alpha = padded(alpha, n);
    let beta = padded(beta, n);
    let total: i64 = alpha.iter().sum::<i64>() + beta.iter().sum::<i64>();
    let mut out = BTreeMap::new();
    let mut gamma = Vec::with_capacity(n);
    enumerate_gammas(&alpha, &beta, n, total, &mut gamma, &mut |g| {
        let c = count_lr_fillings(g, &beta, &alpha);
        if c > 0 {
            out.insert(g.to_vec(), c);
        }
    });
    out
}

fn enumerate_gammas(
    alpha: &[i64],
    beta: &[i64],
    n: usize,
    remaining: i64,
    gamma: &mut Vec<i64>,
    f: &mut dyn FnMut(&[i64]),
) {
    let i = gamma.len();
    if i == n {
        if remaining == 0 {
            f(gamma);
        }
        return;
    }
    let lo = beta[i];
    let mut hi = beta[i] + alpha[0];
    if let Some(&prev) = gamma.last() {
        hi = hi.min(prev);
    }
    hi = hi.min(remaining);
    for g in lo..=hi {
        gamma.push(g);
        enumerate_gammas(alpha, beta, n, remaining - g, gamma, f);
        gamma.pop();
    }
}

/// Number of LR tableaux of shape `γ/β` with content `α`.
fn count_lr_fillings(gamma: &[i64], beta: &[i64], alpha: &[i64]) -> usize {
    // Reading order: rows top to bottom, each row right to left.
    let mut cells = Vec::new();
    for (i, (&g, &b)) in gamma.iter().zip(beta).enumerate() {
        if g < b {
            return 0;
        }
        for j in (b..g).rev() {
            cells.push((i, j));
        }
    }
    let mut counts = vec![0i64; alpha.len()];
    let mut filling: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    fn rec(
        p: usize,
        cells: &[(usize, i64)],
        beta: &[i64],
        alpha: &[i64],
        counts: &mut Vec<i64>,
        filling: &mut BTreeMap<(usize, i64), usize>,
    ) -> usize {
        if p == cells.len() {
            return usize::from(counts.as_slice() == alpha);
        }
        let (i, j) = cells[p];
        // Row weakly increases to the right: the box to the right (already
        // filled) bounds the entry from above.
        let hi = filling.get(&(i, j + 1)).copied().unwrap_or(alpha.len() - 1);
        // Column strictly increases downwards.
        let lo = if i > 0 && j >= beta[i - 1] {
            filling.get(&(i - 1, j)).map_or(0, |&e| e + 1)
        } else {
            0
        };
        let mut total = 0;
        for e in lo..=hi.min(i) {
            if counts[e] >= alpha[e] || (e > 0 && counts[e] + 1 > counts[e - 1]) {
                continue;
            }
            counts[e] += 1;
            filling.insert((i, j), e);
            total += rec(p + 1, cells, beta, alpha, counts, filling);
            filling.remove(&(i, j));
            counts[e] -= 1;
        }
        total
    }
    rec(0, &cells, beta, alpha, &mut counts, &mut filling)
}

/// `(min_i, max_i)` where
/// `min_i = max(α_i+β_N, α_{i+1}+β_{N−1}, …, α_N+β_i)` and
/// `max_i = min(α_1+β_i, α_2+β_{i−1}, …, α_i+β_1)` (1-based `i`).
pub fn gamma_extremes(alpha: &[i64], beta: &[i64], n: usize, i: usize) -> (i64, i64) {
    assert!((1..=n).contains(&i), "row index out of range");
    let a = padded(alpha, n);
    let b = padded(beta, n);
    let min_i = (0..=n - i).map(|j| a[i + j - 1] + b[n - j - 1]).max().unwrap();
    let max_i = (0..i).map(|j| a[j] + b[i - j - 1]).min().unwrap();
    (min_i, max_i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_products() {
        let g = lr_expand(&[1, 0], &[1, 0], 2);
        assert_eq!(g.into_iter().collect::<Vec<_>>(), vec![(vec![1, 1], 1), (vec![2, 0], 1)]);
        let g = lr_expand(&[0, 0], &[2, 1], 2);
        assert_eq!(g.into_iter().collect::<Vec<_>>(), vec![(vec![2, 1], 1)]);
        let g = lr_expand(&[1, 0, 0], &[1, 1, 0], 3);
        assert_eq!(
            g.into_iter().collect::<Vec<_>>(),
            vec![(vec![1, 1, 1], 1), (vec![2, 1, 0], 1)]
        );
        // s_21 * s_21 in three variables contains s_321 twice.
        let g = lr_expand(&[2, 1, 0], &[2, 1, 0], 3);
        assert_eq!(g[&vec![3, 2, 1]], 2);
    }

    #[test]
    fn extremes_examples() {
        assert_eq!(gamma_extremes(&[1, 0], &[1, 0], 2, 1), (1, 2));
        assert_eq!(gamma_extremes(&[4, 3, 1], &[4, 3, 1], 3, 2), (4, 7));
        assert_eq!(gamma_extremes(&[0, 0, 0], &[3, 1, 0], 3, 2), (1, 1));
    }
}
