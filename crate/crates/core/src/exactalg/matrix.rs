//! Dense and sparse matrices over the rationals, with exact elimination.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use super::Rat;

/// A dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rat) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    /// Build from row vectors (all of equal length).
    pub fn from_rows(rows: &[Vec<Rat>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().cloned().collect(),
        }
    }

    /// Build from column vectors of common length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<Rat>]) -> Self {
        RatMatrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    /// Build from integer rows (convenience for tests and examples).
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let rr: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rat::from(x)).collect())
            .collect();
        RatMatrix::from_rows(&rr)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        if c.is_zero() {
            return RatMatrix::zeros(self.rows, self.cols);
        }
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &RatMatrix, c: &Rat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b * c;
            }
        }
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &RatMatrix) -> RatMatrix {
        let (r2, c2) = (other.rows, other.cols);
        let mut out = RatMatrix::zeros(self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * r2 + k, j * c2 + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(r, j)] * &f;
                    m[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut s = Subspace::new(self.cols);
        for i in 0..self.rows {
            s.insert(self.row(i).to_vec());
        }
        s.dim()
    }

    /// Basis of the right kernel `{v : self v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -&m[(r, f)];
                }
                v
            })
            .collect()
    }

    /// Basis of the column space (a subset of the columns).
    pub fn image(&self) -> Vec<Vec<Rat>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&c| self.column(c)).collect()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = RatMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Rat::one()
            } else {
                Rat::zero()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(RatMatrix::from_fn(n, n, |i, j| m[(i, j + n)].clone()))
    }

    /// Determinant by fraction-tracking elimination.
    pub fn det(&self) -> Rat {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            let inv = piv.recip();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    if m[(c, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(c, j)] * &f;
                    m[(i, j)] -= v;
                }
            }
        }
        det
    }

    /// Restrict a (square) operator to an invariant subspace.
    ///
    /// Returns the matrix of the operator in the subspace basis, or `None`
    /// if the subspace is not invariant.
    pub fn restrict_to(&self, sub: &Subspace) -> Option<RatMatrix> {
        let basis = sub.basis();
        let k = basis.len();
        let mut out = RatMatrix::zeros(k, k);
        for (j, b) in basis.iter().enumerate() {
            let img = self.mul_vec(b);
            let coords = sub.coordinates(&img)?;
            for (i, c) in coords.into_iter().enumerate() {
                out[(i, j)] = c;
            }
        }
        Some(out)
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix::from_dense(self)
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, o: &RatMatrix) -> RatMatrix {
        let mut out = self.clone();
        out.add_scaled(o, &Rat::one());
        out
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, o: &RatMatrix) -> RatMatrix {
        let mut out = self.clone();
        out.add_scaled(o, &Rat::from(-1));
        out
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, o: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = RatMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(Rat::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Compressed-row sparse matrix used in hot loops (spinning vectors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, Rat)>>,
}

impl SparseMatrix {
    pub fn from_dense(m: &RatMatrix) -> Self {
        let entries = (0..m.rows)
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| (j, x.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: m.rows,
            cols: m.cols,
            entries,
        }
    }

    /// Build from `(row, col, value)` triplets; repeated positions are
    /// summed and zero results dropped.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, Rat)>) -> Self {
        let mut acc: Vec<std::collections::BTreeMap<usize, Rat>> = vec![Default::default(); rows];
        for (i, j, x) in triplets {
            assert!(i < rows && j < cols, "triplet out of range");
            *acc[i].entry(j).or_default() += x;
        }
        let entries = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        SparseMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    /// Non-zero entries of row `i` as `(column, value)`.
    pub fn row_entries(&self, i: usize) -> &[(usize, Rat)] {
        &self.entries[i]
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        self.entries
            .iter()
            .map(|row| {
                let mut acc = Rat::zero();
                for (j, a) in row {
                    if !v[*j].is_zero() {
                        acc += a * &v[*j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut entries = vec![Vec::new(); self.cols];
        for (i, row) in self.entries.iter().enumerate() {
            for (j, a) in row {
                entries[*j].push((i, a.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn to_dense(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.rows, self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, a) in row {
                m[(i, *j)] = a.clone();
            }
        }
        m
    }
}

/// A subspace of `Q^n` kept as a reduced echelon basis.
///
/// Every stored vector has a pivot coordinate equal to one and all other
/// stored vectors vanish at that coordinate, so coordinates of a member
/// vector are read off directly at the pivots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by<I: IntoIterator<Item = Vec<Rat>>>(ambient: usize, vs: I) -> Self {
        let mut s = Subspace::new(ambient);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::spanned_by(
            ambient,
            (0..ambient).map(|i| {
                let mut v = vec![Rat::zero(); ambient];
                v[i] = Rat::one();
                v
            }),
        )
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after eliminating against the basis.
    pub fn reduce(&self, mut v: Vec<Rat>) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient);
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= y * &f;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v.to_vec()).iter().all(Rat::is_zero)
    }

    /// Insert `v`; returns `true` if the dimension grew.
    pub fn insert(&mut self, v: Vec<Rat>) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        // Keep the basis fully reduced at the new pivot.
        for b in self.basis.iter_mut() {
            if b[p].is_zero() {
                continue;
            }
            let f = b[p].clone();
            for (x, y) in b.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= y * &f;
                }
            }
        }
        self.basis.push(r);
        self.pivots.push(p);
        true
    }

    /// Coordinates of `v` in the stored basis, `None` if `v` is not a member.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let coords: Vec<Rat> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = vec![Rat::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in recon.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x += y * c;
                }
            }
        }
        if recon.as_slice() == v {
            Some(coords)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_kernel_inverse() {
        let m = RatMatrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).iter().all(Rat::is_zero));
        assert!(m.inverse().is_none());
        assert!(m.det().is_zero());

        let a = RatMatrix::from_i64(&[vec![2, 1], vec![7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, RatMatrix::identity(2));
        assert_eq!(a.det(), Rat::from(1));
    }

    #[test]
    fn kron_dimensions_and_values() {
        let a = RatMatrix::from_i64(&[vec![1, 2], vec![0, 1]]);
        let b = RatMatrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert_eq!(k[(0, 3)], Rat::from(2));
        assert_eq!(k[(2, 3)], Rat::from(1));
    }

    #[test]
    fn subspace_coordinates() {
        let mut s = Subspace::new(3);
        assert!(s.insert(vec![Rat::from(1), Rat::from(1), Rat::from(0)]));
        assert!(s.insert(vec![Rat::from(0), Rat::from(1), Rat::from(1)]));
        assert!(!s.insert(vec![Rat::from(1), Rat::from(2), Rat::from(1)]));
        let v = vec![Rat::from(2), Rat::from(5), Rat::from(3)];
        let c = s.coordinates(&v).unwrap();
        let mut recon = vec![Rat::zero(); 3];
        for (ci, b) in c.iter().zip(s.basis()) {
            for (x, y) in recon.iter_mut().zip(b) {
                *x += y * ci;
            }
        }
        assert_eq!(recon, v);
        assert!(s.coordinates(&[Rat::from(1), Rat::from(0), Rat::from(0)]).is_none());
    }
}
