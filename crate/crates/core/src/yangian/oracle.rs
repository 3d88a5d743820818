//! Brute-force checks on realized modules: irreducibility, cyclicity,
//! the defining relations and the coproduct of quantum minors.

use itertools::Itertools;

use crate::criteria::ModuleSpec;
use crate::exactalg::{algebra_closure_dim, invariant_closure_sparse, Rat, RatMatrix, SparseMatrix};

use super::action::{module_action_with_cap, GeneratorSet};
use super::minors::{quantum_minor, quantum_minor_at, quantum_minor_reversed};
use super::YangianError;

/// Sample points avoiding the poles of `T(u)` and of its shifts by
/// `0..shifts`.
pub fn sample_points(gen: &GeneratorSet, count: usize, shifts: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(count);
    let mut t: i64 = 0;
    while out.len() < count {
        // Non-integral points interleaved on both sides of the origin.
        let u = Rat::new(if t % 2 == 0 { 3 * t + 1 } else { -3 * t - 2 }, 7) + Rat::new(1, 11);
        t += 1;
        if (0..shifts).all(|s| !gen.den().eval(&(&u - &Rat::from(s))).is_zero()) {
            out.push(u);
        }
    }
    out
}

/// Check `(u−v)[T_ij(u), T_kl(v)] = T_kj(v)T_il(u) − T_kj(u)T_il(v)` for
/// all index quadruples at the given point pairs.
pub fn check_defining_relations(gen: &GeneratorSet, pairs: &[(Rat, Rat)]) -> bool {
    let n = gen.n();
    pairs.iter().all(|(u, v)| {
        let (Some(tu), Some(tv)) = (gen.eval_all(u), gen.eval_all(v)) else {
            return true;
        };
        let d = u - v;
        let at = |m: &[RatMatrix], i: usize, j: usize| m[i * n + j].clone();
        (0..n).cartesian_product(0..n).all(|(i, j)| {
            (0..n).cartesian_product(0..n).all(|(k, l)| {
                let a = at(&tu, i, j);
                let b = at(&tv, k, l);
                let lhs = (&(&a * &b) - &(&b * &a)).scale(&d);
                let rhs = &(&at(&tv, k, j) * &at(&tu, i, l)) - &(&at(&tu, k, j) * &at(&tv, i, l));
                lhs == rhs
            })
        })
    })
}

/// Default point pairs for [`check_defining_relations`]: `2·deg + 1`
/// pairs with distinct coordinates.
pub fn default_relation_pairs(gen: &GeneratorSet) -> Vec<(Rat, Rat)> {
    let count = 2 * gen.degree_bound() + 1;
    let pts = sample_points(gen, 2 * count, 1);
    pts.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect()
}

/// Both orderings of the quantum minor `Q_{i,j}(u)` agree exactly.
pub fn minor_orderings_agree(gen: &GeneratorSet, i_seq: &[usize], j_seq: &[usize]) -> Result<bool, YangianError> {
    Ok(quantum_minor(gen, i_seq, j_seq)? == quantum_minor_reversed(gen, i_seq, j_seq)?)
}

/// Every coefficient of the quantum determinant `A_N(u)` commutes with
/// every coefficient of every `T_ij(u)`.
pub fn determinant_is_central(gen: &GeneratorSet) -> Result<bool, YangianError> {
    let idx: Vec<usize> = (1..=gen.n()).collect();
    let qdet = quantum_minor(gen, &idx, &idx)?;
    let gens = gen.coefficient_matrices();
    Ok(qdet
        .num
        .coeffs()
        .iter()
        .all(|c| gens.iter().all(|g| (c * g) == (g * c))))
}

fn transposed(gens: &[SparseMatrix]) -> Vec<SparseMatrix> {
    gens.iter().map(SparseMatrix::transpose).collect()
}

/// `ζ` generates the whole module.
pub fn cyclicity_oracle(gen: &GeneratorSet, zeta: &[Rat]) -> bool {
    invariant_closure_sparse(&gen.sparse_coefficients(), zeta).is_full()
}

/// `ζ` lies in every non-zero submodule: the functional dual to `ζ`
/// generates the dual module.  The coordinates of `ζ` serve as that
/// functional because realized bases are weight-homogeneous and `ζ` spans
/// its weight space.
pub fn cocyclicity_oracle(gen: &GeneratorSet, zeta: &[Rat]) -> bool {
    invariant_closure_sparse(&transposed(&gen.sparse_coefficients()), zeta).is_full()
}

/// Burnside test: the coefficients generate the full matrix algebra.
pub fn burnside_irreducible(gen: &GeneratorSet) -> bool {
    let d = gen.dim();
    algebra_closure_dim(&gen.coefficient_matrices(), d * d) == d * d
}

/// How [`irreducible_oracle_detailed`] reached its verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleMethod {
    /// Norton's criterion with a singular element of the generated algebra.
    Norton,
    /// Dimension of the generated algebra.
    Burnside,
}

/// Irreducibility verdict with the method used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct OracleVerdict {
    pub irreducible: bool,
    pub method: OracleMethod,
}

/// Exact irreducibility test.
///
/// Uses Norton's criterion: for `θ` in the generated algebra with
/// one-dimensional kernel spanned by `v`, and `w` spanning `ker θ^T`, the
/// module is irreducible iff `v` generates it and `w` generates the dual.
/// The element is `θ = H − λ` with `H = Σ_i (N−i+1)·T_ii^{(1)}` and `λ`
/// its largest eigenvalue.  Falls back to the Burnside closure when that
/// eigenvalue is not simple.
pub fn irreducible_oracle_detailed(gen: &GeneratorSet) -> OracleVerdict {
    let d = gen.dim();
    if d == 1 {
        return OracleVerdict {
            irreducible: true,
            method: OracleMethod::Norton,
        };
    }
    let n = gen.n();
    let mut h = RatMatrix::zeros(d, d);
    for i in 1..=n {
        h.add_scaled(&gen.first_coefficient(i, i), &Rat::from((n - i + 1) as i64));
    }
    let burnside = || OracleVerdict {
        irreducible: burnside_irreducible(gen),
        method: OracleMethod::Burnside,
    };
    let diagonal = (0..d).all(|i| (0..d).all(|j| i == j || h[(i, j)].is_zero()));
    if !diagonal {
        return burnside();
    }
    let top = (0..d).map(|i| h[(i, i)].clone()).max().expect("non-empty");
    let top_idx: Vec<usize> = (0..d).filter(|&i| h[(i, i)] == top).collect();
    if top_idx.len() != 1 {
        return burnside();
    }
    // For diagonal H the kernels of θ and θ^T are both the coordinate line.
    let mut v = vec![Rat::zero(); d];
    v[top_idx[0]] = Rat::one();
    let gens = gen.sparse_coefficients();
    let forward = invariant_closure_sparse(&gens, &v).is_full();
    let irreducible = forward && invariant_closure_sparse(&transposed(&gens), &v).is_full();
    OracleVerdict {
        irreducible,
        method: OracleMethod::Norton,
    }
}

/// `true` iff the realized module is irreducible.
pub fn irreducible_oracle(gen: &GeneratorSet) -> bool {
    irreducible_oracle_detailed(gen).irreducible
}

/// Strictly increasing sequences of length `k` in `1..=n`.
fn increasing_sequences(n: usize, k: usize) -> Vec<Vec<usize>> {
    (1..=n).combinations(k).collect()
}

/// Check that the quantum minor `Q_{i,j}(u)` of a tensor product equals
/// `Σ Q^{(1)}_{i,k^{(1)}}(u) ⊗ Q^{(2)}_{k^{(1)},k^{(2)}}(u) ⊗ ⋯ ⊗ Q^{(n)}_{k^{(n−1)},j}(u)`
/// at the given points.
pub fn coproduct_minor_check(
    specs: &[ModuleSpec],
    i_seq: &[usize],
    j_seq: &[usize],
    points: &[Rat],
    cap: usize,
) -> Result<bool, YangianError> {
    let module = module_action_with_cap(specs, cap)?;
    let n = module.gens.n();
    let k = i_seq.len();
    let middles = increasing_sequences(n, k);
    let factors = &module.factors;
    for u in points {
        let Some(lhs) = quantum_minor_at(&module.gens, i_seq, j_seq, u)? else {
            continue;
        };
        let mut rhs = RatMatrix::zeros(module.dim(), module.dim());
        let chains = std::iter::repeat_n(middles.iter(), factors.len() - 1)
            .multi_cartesian_product();
        let chains: Vec<Vec<&Vec<usize>>> = if factors.len() == 1 {
            vec![Vec::new()]
        } else {
            chains.collect()
        };
        for chain in chains {
            let mut seqs: Vec<&[usize]> = vec![i_seq];
            seqs.extend(chain.iter().map(|s| s.as_slice()));
            seqs.push(j_seq);
            let mut term = RatMatrix::identity(1);
            for (f, w) in factors.iter().zip(seqs.windows(2)) {
                let Some(q) = quantum_minor_at(&f.gens, w[0], w[1], u)? else {
                    return Err(YangianError::Inconsistent("factor pole at a sample point".into()));
                };
                term = term.kron(&q);
            }
            rhs = &rhs + &term;
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yangian::{module_action, DEFAULT_DIM_CAP};

    #[test]
    fn vector_pairs() {
        let pair = |d: Rat| {
            module_action(&[ModuleSpec::vector(2, Rat::zero()), ModuleSpec::vector(2, d)]).unwrap()
        };
        let generic = pair(Rat::new(1, 2));
        assert!(irreducible_oracle(&generic.gens));
        assert!(burnside_irreducible(&generic.gens));
        for d in [1, -1] {
            let m = pair(Rat::from(d));
            assert!(!irreducible_oracle(&m.gens));
            assert!(!burnside_irreducible(&m.gens));
        }
        assert!(irreducible_oracle(&pair(Rat::from(2)).gens));
    }

    #[test]
    fn relations_hold() {
        for specs in [
            vec![ModuleSpec::young(&[2, 1], 2, Rat::new(1, 3))],
            vec![ModuleSpec::vector(3, Rat::zero()), ModuleSpec::vector(3, Rat::from(4))],
        ] {
            let m = module_action(&specs).unwrap();
            assert!(check_defining_relations(&m.gens, &default_relation_pairs(&m.gens)));
            assert!(determinant_is_central(&m.gens).unwrap());
        }
    }

    #[test]
    fn coproduct_of_minors() {
        let specs = vec![ModuleSpec::vector(2, Rat::zero()), ModuleSpec::vector(2, Rat::new(2, 3))];
        let pts = [Rat::new(5, 2), Rat::new(-7, 3), Rat::from(9)];
        assert!(coproduct_minor_check(&specs, &[1], &[2], &pts, DEFAULT_DIM_CAP).unwrap());
        assert!(coproduct_minor_check(&specs, &[1, 2], &[1, 2], &pts, DEFAULT_DIM_CAP).unwrap());
    }
}
