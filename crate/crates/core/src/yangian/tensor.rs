//! Index arithmetic on tensor powers `(C^N)^{⊗n}` and the position
//! permutation operators acting on them.
//!
//! A basis word `w = (w_1, …, w_n)` with letters in `0..N` is encoded as
//! `Σ_p w_p N^{n−p}`: the first tensor factor is the most significant
//! digit, matching the Kronecker-product convention of the matrix layer.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exactalg::{Rat, RatMatrix, SparseMatrix};

/// One tensor factor `V(c + h)` of the vector module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorFactor {
    pub content: i64,
    pub h: Rat,
}

impl VectorFactor {
    /// The point `−c − h` at which the factor's R-matrix is evaluated.
    pub fn evaluation_point(&self) -> Rat {
        -(&Rat::from(self.content) + &self.h)
    }
}

/// The space `V(c_1 + h) ⊗ … ⊗ V(c_n + h)` in a fixed factor order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorSpace {
    pub n: usize,
    pub factors: Vec<VectorFactor>,
}

impl TensorSpace {
    pub fn new(n: usize, factors: Vec<VectorFactor>) -> Self {
        TensorSpace { n, factors }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `N^n`, or `None` on overflow.
    pub fn dim(&self) -> Option<usize> {
        checked_pow(self.n, self.factors.len())
    }
}

pub(crate) fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    (0..exp).try_fold(1usize, |acc, _| acc.checked_mul(base))
}

/// Letters of the word with code `code` (length `len`, alphabet `0..n`).
pub fn decode(code: usize, n: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    let mut c = code;
    for p in (0..len).rev() {
        out[p] = c % n;
        c /= n;
    }
    out
}

/// Inverse of [`decode`].
pub fn encode(word: &[usize], n: usize) -> usize {
    word.iter().fold(0, |acc, &w| acc * n + w)
}

/// Weight of a word: the number of occurrences of every letter.
pub fn word_weight(word: &[usize], n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for &w in word {
        out[w] += 1;
    }
    out
}

/// Apply a permutation of tensor positions to a word: the letter at
/// position `p` moves to position `perm[p]`.
pub fn permute_word(word: &[usize], perm: &[usize]) -> Vec<usize> {
    let mut out = vec![0; word.len()];
    for (p, &w) in word.iter().enumerate() {
        out[perm[p]] = w;
    }
    out
}

/// Sign of a permutation given in one-line notation.
pub fn sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut s = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = perm[p];
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

/// The operator exchanging tensor positions `a` and `b` (0-based) of
/// `(C^N)^{⊗len}`.
pub fn transposition(n: usize, len: usize, a: usize, b: usize) -> SparseMatrix {
    let dim = checked_pow(n, len).expect("tensor dimension overflow");
    let mut m = RatMatrix::zeros(dim, dim);
    for code in 0..dim {
        let mut w = decode(code, n, len);
        w.swap(a, b);
        m[(encode(&w, n), code)] = Rat::one();
    }
    m.to_sparse()
}

/// Dense version of [`transposition`].
pub fn transposition_dense(n: usize, len: usize, a: usize, b: usize) -> RatMatrix {
    transposition(n, len, a, b).to_dense()
}

/// The flip `P` on `C^N ⊗ C^N`.
pub fn flip(n: usize) -> RatMatrix {
    transposition_dense(n, 2, 0, 1)
}

/// Exchange of two blocks of tensor factors: maps `x ⊗ y` (with `x` in a
/// space of dimension `da`, `y` of dimension `db`) to `y ⊗ x`.
pub fn block_swap(da: usize, db: usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(da * db, da * db);
    for x in 0..da {
        for y in 0..db {
            m[(y * da + x, x * db + y)] = Rat::one();
        }
    }
    m
}

/// A sparse vector with integer-valued accumulation, used when applying
/// sums of permutation operators to basis words.
pub(crate) fn accumulate(terms: impl IntoIterator<Item = (usize, i64)>) -> BTreeMap<usize, i64> {
    let mut acc = BTreeMap::new();
    for (k, v) in terms {
        *acc.entry(k).or_insert(0) += v;
    }
    acc.retain(|_, v| *v != 0);
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_decode_roundtrip() {
        for code in 0..27 {
            assert_eq!(encode(&decode(code, 3, 3), 3), code);
        }
        assert_eq!(decode(5, 2, 3), vec![1, 0, 1]);
    }

    #[test]
    fn signs() {
        assert_eq!(sign(&[0, 1, 2]), 1);
        assert_eq!(sign(&[1, 0, 2]), -1);
        assert_eq!(sign(&[1, 2, 0]), 1);
    }

    #[test]
    fn block_swap_matches_kron() {
        let a = RatMatrix::from_i64(&[vec![1, 2], vec![3, 4]]);
        let b = RatMatrix::from_i64(&[vec![0, 1, 0], vec![5, 0, 1], vec![1, 1, 1]]);
        let s = block_swap(2, 3);
        let lhs = &(&s * &a.kron(&b)) * &s.transpose();
        assert_eq!(lhs, b.kron(&a));
    }
}
