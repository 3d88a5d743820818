//! Quantum minors of the matrix `T(u)` and the series `A_k, B_k, C_k, D_k`.

use itertools::Itertools;

use crate::exactalg::{Poly, PolyMatrix, Rat, RatFnMatrix, RatMatrix};

use super::action::GeneratorSet;
use super::tensor::sign;
use super::YangianError;

fn validate(gen: &GeneratorSet, i_seq: &[usize], j_seq: &[usize]) -> Result<(), YangianError> {
    let n = gen.n();
    let ok = |s: &[usize]| s.iter().all(|&x| (1..=n).contains(&x)) && s.windows(2).all(|w| w[0] < w[1]);
    if i_seq.len() != j_seq.len() || i_seq.is_empty() || !ok(i_seq) || !ok(j_seq) {
        return Err(YangianError::BadIndexSequence(format!("{i_seq:?}, {j_seq:?}")));
    }
    Ok(())
}

fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    (0..k)
        .permutations(k)
        .map(|p| {
            let s = sign(&p);
            (p, s)
        })
        .collect()
}

/// Common denominator `den(u)·den(u−1)⋯den(u−k+1)` of a `k × k` minor.
pub fn minor_denominator(gen: &GeneratorSet, k: usize) -> Poly {
    (0..k).fold(Poly::one(), |acc, t| &acc * &gen.den().shift(&Rat::from(-(t as i64))))
}

/// The quantum minor
/// `Σ_g sgn g · T_{i_1 j_g(1)}(u) T_{i_2 j_g(2)}(u−1) ⋯ T_{i_k j_g(k)}(u−k+1)`.
pub fn quantum_minor(gen: &GeneratorSet, i_seq: &[usize], j_seq: &[usize]) -> Result<RatFnMatrix, YangianError> {
    validate(gen, i_seq, j_seq)?;
    let k = i_seq.len();
    let dim = gen.dim();
    let mut num = PolyMatrix::zero(dim, dim);
    for (g, s) in signed_permutations(k) {
        let term = (0..k).fold(PolyMatrix::identity(dim), |acc, t| {
            acc.mul(&gen.num(i_seq[t], j_seq[g[t]]).shift(&Rat::from(-(t as i64))))
        });
        num = if s > 0 { num.add(&term) } else { num.sub(&term) };
    }
    Ok(RatFnMatrix::new(num, minor_denominator(gen, k))?)
}

/// The same minor in the second ordering
/// `Σ_g sgn g · T_{i_g(k) j_k}(u−k+1) ⋯ T_{i_g(1) j_1}(u)`.
pub fn quantum_minor_reversed(
    gen: &GeneratorSet,
    i_seq: &[usize],
    j_seq: &[usize],
) -> Result<RatFnMatrix, YangianError> {
    validate(gen, i_seq, j_seq)?;
    let k = i_seq.len();
    let dim = gen.dim();
    let mut num = PolyMatrix::zero(dim, dim);
    for (g, s) in signed_permutations(k) {
        let term = (0..k).rev().fold(PolyMatrix::identity(dim), |acc, t| {
            acc.mul(&gen.num(i_seq[g[t]], j_seq[t]).shift(&Rat::from(-(t as i64))))
        });
        num = if s > 0 { num.add(&term) } else { num.sub(&term) };
    }
    Ok(RatFnMatrix::new(num, minor_denominator(gen, k))?)
}

/// The quantum minor at a point (first ordering); `None` at a pole.
pub fn quantum_minor_at(
    gen: &GeneratorSet,
    i_seq: &[usize],
    j_seq: &[usize],
    u: &Rat,
) -> Result<Option<RatMatrix>, YangianError> {
    validate(gen, i_seq, j_seq)?;
    let k = i_seq.len();
    let mut values = Vec::with_capacity(k);
    for t in 0..k {
        match gen.eval_all(&(u - &Rat::from(t))) {
            Some(v) => values.push(v),
            None => return Ok(None),
        }
    }
    let n = gen.n();
    let dim = gen.dim();
    let mut out = RatMatrix::zeros(dim, dim);
    for (g, s) in signed_permutations(k) {
        let term = (0..k).fold(RatMatrix::identity(dim), |acc, t| {
            &acc * &values[t][(i_seq[t] - 1) * n + j_seq[g[t]] - 1]
        });
        out.add_scaled(&term, &Rat::from(s));
    }
    Ok(Some(out))
}

/// The quantum minor applied to a vector, as `(numerator column, common
/// denominator)` with polynomial entries in `u`.
pub fn quantum_minor_apply(
    gen: &GeneratorSet,
    i_seq: &[usize],
    j_seq: &[usize],
    v: &[Rat],
) -> Result<(PolyMatrix, Poly), YangianError> {
    validate(gen, i_seq, j_seq)?;
    let k = i_seq.len();
    let dim = gen.dim();
    let col = PolyMatrix::constant(RatMatrix::from_columns(dim, &[v.to_vec()]));
    let mut num = PolyMatrix::zero(dim, 1);
    for (g, s) in signed_permutations(k) {
        // Apply the rightmost factor first.
        let term = (0..k).rev().fold(col.clone(), |acc, t| {
            gen.num(i_seq[t], j_seq[g[t]]).shift(&Rat::from(-(t as i64))).mul(&acc)
        });
        num = if s > 0 { num.add(&term) } else { num.sub(&term) };
    }
    Ok((num, minor_denominator(gen, k)))
}

/// Index sequences `i = (1, …, k)` and `j = (1, …, k−1, k+1)`.
pub fn abcd_indices(k: usize) -> (Vec<usize>, Vec<usize>) {
    let i: Vec<usize> = (1..=k).collect();
    let mut j: Vec<usize> = (1..k).collect();
    j.push(k + 1);
    (i, j)
}

/// The four minors `A_k = Q_ii`, `B_k = Q_ij`, `C_k = Q_ji`, `D_k = Q_jj`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbcdSeries {
    pub a: RatFnMatrix,
    pub b: RatFnMatrix,
    pub c: RatFnMatrix,
    pub d: RatFnMatrix,
}

/// `A_k, B_k, C_k, D_k` for `1 ≤ k ≤ N − 1`.
pub fn abcd_series(gen: &GeneratorSet, k: usize) -> Result<AbcdSeries, YangianError> {
    if k == 0 || k >= gen.n() {
        return Err(YangianError::BadIndexSequence(format!("k = {k} outside 1..N-1")));
    }
    let (i, j) = abcd_indices(k);
    Ok(AbcdSeries {
        a: quantum_minor(gen, &i, &i)?,
        b: quantum_minor(gen, &i, &j)?,
        c: quantum_minor(gen, &j, &i)?,
        d: quantum_minor(gen, &j, &j)?,
    })
}

/// `A_k(u)` for `0 ≤ k ≤ N`, with `A_0 = 1`.
pub fn a_series(gen: &GeneratorSet, k: usize) -> Result<RatFnMatrix, YangianError> {
    if k == 0 {
        return Ok(RatFnMatrix::from_poly(PolyMatrix::identity(gen.dim())));
    }
    let i: Vec<usize> = (1..=k).collect();
    quantum_minor(gen, &i, &i)
}

/// `A_k(u)` at a point, `A_0 = 1`.
pub fn a_series_at(gen: &GeneratorSet, k: usize, u: &Rat) -> Result<Option<RatMatrix>, YangianError> {
    if k == 0 {
        return Ok(Some(RatMatrix::identity(gen.dim())));
    }
    let i: Vec<usize> = (1..=k).collect();
    quantum_minor_at(gen, &i, &i, u)
}

/// `θ`: the module with every `T_ij(u)` replaced by the transpose of
/// `T_ji(u)`, i.e. the dual action in the dual basis.
pub fn transpose_generators(gen: &GeneratorSet) -> GeneratorSet {
    let n = gen.n();
    let num = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .map(|(i, j)| gen.num(j, i).transpose())
        .collect();
    GeneratorSet::new(n, gen.dim(), num, gen.den().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::ModuleSpec;
    use crate::yangian::module_action;

    #[test]
    fn orderings_agree_and_determinant_is_central() {
        let specs = [ModuleSpec::vector(2, Rat::zero()), ModuleSpec::vector(2, Rat::new(1, 3))];
        let m = module_action(&specs).unwrap();
        let q1 = quantum_minor(&m.gens, &[1, 2], &[1, 2]).unwrap();
        let q2 = quantum_minor_reversed(&m.gens, &[1, 2], &[1, 2]).unwrap();
        assert_eq!(q1, q2);
        let ad = q1.num.clone();
        for coeff in ad.coeffs() {
            for g in m.gens.coefficient_matrices() {
                assert_eq!(coeff * &g, &g * coeff);
            }
        }
        // Pointwise and symbolic forms agree.
        let u = Rat::new(11, 3);
        assert_eq!(quantum_minor_at(&m.gens, &[1, 2], &[1, 2], &u).unwrap(), q1.eval(&u));
    }

    #[test]
    fn single_index_minor_is_generator() {
        let m = module_action(&[ModuleSpec::vector(3, Rat::zero())]).unwrap();
        assert_eq!(quantum_minor(&m.gens, &[2], &[3]).unwrap(), m.gens.t(2, 3));
        assert!(quantum_minor(&m.gens, &[2, 1], &[1, 2]).is_err());
        assert!(quantum_minor(&m.gens, &[4], &[1]).is_err());
    }

    #[test]
    fn theta_swaps_b_and_c() {
        let m = module_action(&[ModuleSpec::young(&[2, 1, 0], 3, Rat::new(1, 2))]).unwrap();
        let t = transpose_generators(&m.gens);
        for k in 1..3 {
            let s = abcd_series(&m.gens, k).unwrap();
            let st = abcd_series(&t, k).unwrap();
            assert_eq!(st.b.num, s.c.num.transpose());
            assert_eq!(st.c.num, s.b.num.transpose());
        }
    }
}
