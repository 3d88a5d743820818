//! Span closures: generated algebras and invariant subspaces.

use super::{Rat, RatMatrix, SparseMatrix, Subspace};

fn flatten(m: &RatMatrix) -> Vec<Rat> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

/// Dimension of the unital associative algebra generated by `generators`.
///
/// The span is grown breadth-first by left multiplication with generators
/// until it is stable or its dimension reaches `cap`.  All generators must
/// be square of a common size; with no generators the algebra is `Q·Id`.
pub fn algebra_closure_dim(generators: &[RatMatrix], cap: usize) -> usize {
    let Some(d) = generators.first().map(RatMatrix::rows) else {
        return 1;
    };
    assert!(generators.iter().all(|g| g.rows() == d && g.cols() == d));
    let sparse: Vec<SparseMatrix> = generators.iter().map(RatMatrix::to_sparse).collect();
    let mut span = Subspace::new(d * d);
    let mut frontier = Vec::new();
    let id = RatMatrix::identity(d);
    if span.insert(flatten(&id)) {
        frontier.push(id);
    }
    for g in generators {
        if span.insert(flatten(g)) {
            frontier.push(g.clone());
        }
    }
    while let Some(m) = frontier.pop() {
        if span.dim() >= cap.min(d * d) {
            break;
        }
        for g in &sparse {
            let prod = sparse_times_dense(g, &m);
            if span.insert(flatten(&prod)) {
                frontier.push(prod);
            }
        }
    }
    span.dim()
}

fn sparse_times_dense(a: &SparseMatrix, b: &RatMatrix) -> RatMatrix {
    let cols: Vec<Vec<Rat>> = (0..b.cols()).map(|j| a.mul_vec(&b.column(j))).collect();
    RatMatrix::from_columns(a.rows(), &cols)
}

/// Smallest subspace containing `seed` and stable under every generator.
pub fn invariant_closure(generators: &[RatMatrix], seed: &[Rat]) -> Subspace {
    let sparse: Vec<SparseMatrix> = generators.iter().map(RatMatrix::to_sparse).collect();
    invariant_closure_sparse(&sparse, seed)
}

/// [`invariant_closure`] for generators already in sparse form.
pub fn invariant_closure_sparse(generators: &[SparseMatrix], seed: &[Rat]) -> Subspace {
    let mut span = Subspace::new(seed.len());
    if !span.insert(seed.to_vec()) {
        return span;
    }
    let mut frontier = vec![seed.to_vec()];
    while let Some(v) = frontier.pop() {
        if span.is_full() {
            break;
        }
        for g in generators {
            let w = g.mul_vec(&v);
            if span.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    span
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(d: usize, i: usize, j: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(d, d);
        m[(i, j)] = Rat::one();
        m
    }

    #[test]
    fn closure_of_identity_and_units() {
        assert_eq!(algebra_closure_dim(&[RatMatrix::identity(3)], 9), 1);
        let units: Vec<RatMatrix> = (0..3)
            .flat_map(|i| (0..3).map(move |j| unit(3, i, j)))
            .collect();
        assert_eq!(algebra_closure_dim(&units, 9), 9);
        // A single nilpotent shift generates the upper-triangular
        // polynomial algebra of dimension 3.
        let shift = &unit(3, 0, 1) + &unit(3, 1, 2);
        assert_eq!(algebra_closure_dim(&[shift], 9), 3);
    }

    #[test]
    fn invariant_closure_basics() {
        let seed = vec![Rat::from(1), Rat::from(2), Rat::from(0)];
        let s = invariant_closure(&[RatMatrix::identity(3)], &seed);
        assert_eq!(s.dim(), 1);
        let shift = &unit(3, 0, 1) + &unit(3, 1, 2);
        let e3 = vec![Rat::zero(), Rat::zero(), Rat::one()];
        assert_eq!(invariant_closure(std::slice::from_ref(&shift), &e3).dim(), 3);
        let e1 = vec![Rat::one(), Rat::zero(), Rat::zero()];
        assert_eq!(invariant_closure(&[shift], &e1).dim(), 1);
    }
}
