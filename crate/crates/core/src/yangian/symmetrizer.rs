//! Young symmetrizers of skew diagrams acting on tensor positions.
//!
//! Boxes are numbered in row-reading order; box `p` is tensor position
//! `p`.  `P` sums over the permutations preserving every row, `Q` is the
//! signed sum over the permutations preserving every column and
//! `Y = P·Q`.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::diagrams::SkewDiagram;
use crate::exactalg::{Rat, RatMatrix, SparseMatrix, Subspace};

use super::tensor::{accumulate, checked_pow, decode, encode, permute_word, sign, word_weight};
use super::YangianError;

/// Largest ambient tensor dimension `N^n` the symmetrizer code accepts.
pub const AMBIENT_LIMIT: usize = 1 << 16;

/// Group elements of `Π_blocks S(block)` as `(one-line permutation, sign)`.
fn block_group(blocks: &[Vec<usize>], len: usize) -> Vec<(Vec<usize>, i64)> {
    let per_block: Vec<Vec<Vec<usize>>> = blocks
        .iter()
        .map(|b| b.iter().copied().permutations(b.len()).collect())
        .collect();
    per_block
        .iter()
        .map(|v| v.iter())
        .multi_cartesian_product()
        .map(|images| {
            let mut perm: Vec<usize> = (0..len).collect();
            for (block, image) in blocks.iter().zip(images) {
                for (&src, &dst) in block.iter().zip(image) {
                    perm[src] = dst;
                }
            }
            let s = sign(&perm);
            (perm, s)
        })
        .collect()
}

fn row_blocks(d: &SkewDiagram) -> Vec<Vec<usize>> {
    let mut rows: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (p, &(i, _)) in d.boxes().iter().enumerate() {
        rows.entry(i).or_default().push(p);
    }
    rows.into_values().collect()
}

fn column_blocks(d: &SkewDiagram) -> Vec<Vec<usize>> {
    d.columns()
        .into_values()
        .map(|cells| cells.iter().map(|&c| d.index_of(c).unwrap()).collect())
        .collect()
}

/// The row group, column group and the symmetrizers of one diagram.
#[derive(Clone, Debug)]
pub struct SymmetrizerSet {
    n: usize,
    len: usize,
    ambient: usize,
    row_group: Vec<(Vec<usize>, i64)>,
    column_group: Vec<(Vec<usize>, i64)>,
    pub p_sym: SparseMatrix,
    pub q_sym: SparseMatrix,
    pub y_sym: SparseMatrix,
}

impl SymmetrizerSet {
    /// Number of tensor positions (boxes).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `N^n`.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// `Q·e_w` as an integer combination of basis words.
    fn q_word(&self, code: usize) -> BTreeMap<usize, i64> {
        let w = decode(code, self.n, self.len);
        accumulate(
            self.column_group
                .iter()
                .map(|(perm, s)| (encode(&permute_word(&w, perm), self.n), *s)),
        )
    }

    /// `P·v` for an integer combination `v` of basis words.
    fn p_combination(&self, v: &BTreeMap<usize, i64>) -> BTreeMap<usize, i64> {
        accumulate(v.iter().flat_map(|(&code, &c)| {
            let w = decode(code, self.n, self.len);
            self.row_group
                .iter()
                .map(move |(perm, _)| (encode(&permute_word(&w, perm), self.n), c))
        }))
    }

    /// `Y·e_w` as an integer combination of basis words.
    pub fn y_word(&self, code: usize) -> BTreeMap<usize, i64> {
        self.p_combination(&self.q_word(code))
    }

    /// Rank of `Y`, computed block by block: `Y` preserves the weight of
    /// basis words, so it is block diagonal in the weight grading.
    pub fn rank(&self) -> usize {
        let mut blocks: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for code in 0..self.ambient_dim() {
            blocks
                .entry(word_weight(&decode(code, self.n, self.len), self.n))
                .or_default()
                .push(code);
        }
        blocks
            .values()
            .map(|codes| {
                let index: BTreeMap<usize, usize> =
                    codes.iter().enumerate().map(|(k, &c)| (c, k)).collect();
                let cols: Vec<Vec<Rat>> = codes
                    .iter()
                    .map(|&c| {
                        let mut v = vec![Rat::zero(); codes.len()];
                        for (r, x) in self.y_word(c) {
                            v[index[&r]] = Rat::from(x);
                        }
                        v
                    })
                    .collect();
                RatMatrix::from_columns(codes.len(), &cols).rank()
            })
            .sum()
    }
}

impl SymmetrizerSet {
    /// The two groups without materialized matrices (all three matrices
    /// are left as `0 × 0` placeholders).
    pub(crate) fn groups_only(d: &SkewDiagram) -> Result<SymmetrizerSet, YangianError> {
        let n = d.n();
        let len = d.len();
        let ambient = checked_pow(n, len)
            .filter(|&a| a <= AMBIENT_LIMIT)
            .ok_or(YangianError::AmbientTooLarge { boxes: len, n })?;
        let empty = SparseMatrix::from_triplets(0, 0, []);
        let set = SymmetrizerSet {
            n,
            len,
            ambient,
            row_group: block_group(&row_blocks(d), len),
            column_group: block_group(&column_blocks(d), len),
            p_sym: empty.clone(),
            q_sym: empty.clone(),
            y_sym: empty,
        };
        Ok(set)
    }
}

/// Build `P`, `Q` and `Y = P·Q` for a diagram on `(C^N)^{⊗n}`.
pub fn young_symmetrizer(d: &SkewDiagram) -> Result<SymmetrizerSet, YangianError> {
    let mut set = SymmetrizerSet::groups_only(d)?;
    let ambient = set.ambient;
    let mut p = Vec::new();
    let mut q = Vec::new();
    let mut y = Vec::new();
    for code in 0..ambient {
        let single = BTreeMap::from([(code, 1i64)]);
        for (r, x) in set.p_combination(&single) {
            p.push((r, code, Rat::from(x)));
        }
        for (r, x) in set.q_word(code) {
            q.push((r, code, Rat::from(x)));
        }
        for (r, x) in set.y_word(code) {
            y.push((r, code, Rat::from(x)));
        }
    }
    set.p_sym = SparseMatrix::from_triplets(ambient, ambient, p);
    set.q_sym = SparseMatrix::from_triplets(ambient, ambient, q);
    set.y_sym = SparseMatrix::from_triplets(ambient, ambient, y);
    Ok(set)
}

/// A weight-homogeneous reduced-echelon basis of `im Y` together with the
/// weight of every basis vector.
#[derive(Clone, Debug)]
pub struct SymmetrizerImage {
    pub basis: Subspace,
    pub weights: Vec<Vec<usize>>,
}

/// Basis of the image of the Young symmetrizer of `d`.
///
/// Only words whose letters strictly increase down every column are fed
/// to `Y`: any other word is killed by `Q` or equals `±` such a word
/// under `Q`.
pub fn symmetrizer_image(d: &SkewDiagram) -> Result<SymmetrizerImage, YangianError> {
    let set = SymmetrizerSet::groups_only(d)?;
    Ok(image_of(&set, d))
}

pub(crate) fn image_of(set: &SymmetrizerSet, d: &SkewDiagram) -> SymmetrizerImage {
    let ambient = set.ambient;
    let n = d.n();
    let len = d.len();
    let columns = column_blocks(d);
    let mut basis = Subspace::new(ambient);
    for code in 0..ambient {
        let w = decode(code, n, len);
        if !columns
            .iter()
            .all(|col| col.windows(2).all(|p| w[p[0]] < w[p[1]]))
        {
            continue;
        }
        let yw = set.y_word(code);
        if yw.is_empty() {
            continue;
        }
        let mut v = vec![Rat::zero(); ambient];
        for (r, x) in yw {
            v[r] = Rat::from(x);
        }
        basis.insert(v);
    }
    let weights = basis
        .basis()
        .iter()
        .map(|v| {
            let code = v.iter().position(|x| !x.is_zero()).expect("non-zero basis vector");
            word_weight(&decode(code, n, len), n)
        })
        .collect();
    SymmetrizerImage { basis, weights }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{enumerate_ssyt, make_skew};

    #[test]
    fn single_box_is_identity() {
        let d = make_skew(&[1, 0], &[], 2).unwrap();
        let s = young_symmetrizer(&d).unwrap();
        assert_eq!(s.y_sym.to_dense(), RatMatrix::identity(2));
        assert_eq!(s.p_sym.to_dense(), RatMatrix::identity(2));
        assert_eq!(s.q_sym.to_dense(), RatMatrix::identity(2));
    }

    #[test]
    fn ranks_match_tableaux() {
        let cases: Vec<(Vec<i64>, Vec<i64>, usize)> = vec![
            (vec![2, 1], vec![], 2),
            (vec![1, 1, 0], vec![], 3),
            (vec![2, 1, 0], vec![], 3),
            (vec![3, 2, 0], vec![1], 2),
            (vec![2, 2, 0], vec![], 3),
        ];
        for (l, m, n) in cases {
            let d = make_skew(&l, &m, n).unwrap();
            let s = young_symmetrizer(&d).unwrap();
            let ssyt = enumerate_ssyt(&d).len();
            assert_eq!(s.rank(), ssyt, "{l:?}/{m:?}");
            assert_eq!(symmetrizer_image(&d).unwrap().basis.dim(), ssyt);
            // Y = P·Q.
            let pq = &s.p_sym.to_dense() * &s.q_sym.to_dense();
            assert_eq!(pq, s.y_sym.to_dense());
        }
    }

    #[test]
    fn column_is_antisymmetrizer() {
        let d = make_skew(&[1, 1, 0], &[], 3).unwrap();
        let s = young_symmetrizer(&d).unwrap();
        assert_eq!(s.rank(), 3);
        let y = s.y_sym.to_dense();
        let p = crate::yangian::tensor::transposition_dense(3, 2, 0, 1);
        assert_eq!(&p * &y, y.scale(&Rat::from(-1)));
    }
}
