//! The intertwiner `R_{αβ}` between the two coproduct actions on
//! `V_α ⊗ V_β`, and its Jucys–Murphy closed form.

use std::collections::BTreeMap;

use crate::criteria::ModuleSpec;
use crate::diagrams::row_tableau_contents;
use crate::exactalg::{Poly, PolyMatrix, Rat, RatFnMatrix, RatMatrix, SparseMatrix};

use super::action::{module_action_with_cap, realize, RealizedModule, DEFAULT_DIM_CAP};
use super::symmetrizer::young_symmetrizer;
use super::tensor::{block_swap, decode, encode, transposition_dense};
use super::YangianError;

/// The leading Laurent coefficient at `z = 0` of the ordered R-matrix
/// product, restricted to `im Y_α ⊗ im Y_β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwiner {
    /// Matrix in the Kronecker basis of the two realized modules.
    pub matrix: RatMatrix,
    /// Laurent order at `z = 0`.
    pub order: i64,
    /// Dimension of `V_α ⊗ V_β`.
    pub dim: usize,
}

impl Intertwiner {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.dim
    }
}

/// Pairs `(k, l)` (1-based) in the product order: `(i, j)` precedes
/// `(k, l)` if `i > k`, or `i = k` and `j < l`.
pub fn pair_order(m: usize, n: usize) -> Vec<(usize, usize)> {
    (1..=m).rev().flat_map(|k| (1..=n).map(move |l| (k, l))).collect()
}

type State = BTreeMap<usize, Poly>;

/// The rational function in `z`
/// `Π_{(k,l)} R_{k,m+l}(−a_k−h_A, −b_l−h_B−z) · (Y_α ⊗ Y_β)` restricted
/// to `im Y_α ⊗ im Y_β`, in the Kronecker basis of the two realized
/// modules.
pub fn intertwiner_function(a: &RealizedModule, b: &RealizedModule) -> Result<RatFnMatrix, YangianError> {
    if a.diagram.n() != b.diagram.n() {
        return Err(YangianError::MismatchedRank(a.diagram.n(), b.diagram.n()));
    }
    let n = a.diagram.n();
    let m = a.diagram.len();
    let nb = b.diagram.len();
    let len = m + nb;
    let ca = row_tableau_contents(&a.diagram);
    let cb = row_tableau_contents(&b.diagram);
    let amb_b = b.image.basis.ambient();
    // Cleared factor for (k, l): (z + δ_kl) + P_{k, m+l} with
    // δ_kl = b_l + h_B − a_k − h_A.
    let factors: Vec<(usize, usize, Rat)> = pair_order(m, nb)
        .into_iter()
        .map(|(k, l)| {
            let delta = &(&Rat::from(cb[l - 1]) + &b.spec.h) - &(&Rat::from(ca[k - 1]) + &a.spec.h);
            (k - 1, m + l - 1, delta)
        })
        .collect();
    let den = factors
        .iter()
        .fold(Poly::one(), |acc, (_, _, d)| &acc * &Poly::linear(d.clone()));
    let sparse = |v: &[Rat]| -> Vec<(usize, Rat)> {
        v.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k, x.clone()))
            .collect()
    };
    let ba: Vec<Vec<(usize, Rat)>> = a.image.basis.basis().iter().map(|v| sparse(v)).collect();
    let bb: Vec<Vec<(usize, Rat)>> = b.image.basis.basis().iter().map(|v| sparse(v)).collect();
    let piv_a = a.image.basis.pivots();
    let piv_b = b.image.basis.pivots();
    let (da, db) = (ba.len(), bb.len());
    let dim = da * db;
    let mut coeffs = vec![RatMatrix::zeros(dim, dim); factors.len() + 1];
    for (ia, va) in ba.iter().enumerate() {
        for (ib, vb) in bb.iter().enumerate() {
            let mut state: State = BTreeMap::new();
            for (ca_code, x) in va {
                for (cb_code, y) in vb {
                    state.insert(ca_code * amb_b + cb_code, Poly::constant(x * y));
                }
            }
            for (p, q, delta) in factors.iter().rev() {
                state = apply_pair(&state, n, len, *p, *q, delta);
            }
            let col = ia * db + ib;
            // Coordinates at the pivot pairs, then an exact membership check.
            let mut recon: State = BTreeMap::new();
            for (ja, (pa, wa)) in piv_a.iter().zip(&ba).enumerate() {
                for (jb, (pb, wb)) in piv_b.iter().zip(&bb).enumerate() {
                    let Some(c) = state.get(&(pa * amb_b + pb)) else {
                        continue;
                    };
                    for (t, x) in c.coeffs().iter().enumerate() {
                        coeffs[t][(ja * db + jb, col)] = x.clone();
                    }
                    for (ka, x) in wa {
                        for (kb, y) in wb {
                            let e = recon.entry(ka * amb_b + kb).or_insert_with(Poly::zero);
                            *e = &*e + &c.scale(&(x * y));
                        }
                    }
                }
            }
            recon.retain(|_, p| !p.is_zero());
            if recon != state {
                return Err(YangianError::Inconsistent(
                    "R-matrix product leaves im Y_α ⊗ im Y_β".into(),
                ));
            }
        }
    }
    Ok(RatFnMatrix::new(PolyMatrix::new(dim, dim, coeffs), den)?)
}

fn apply_pair(state: &State, n: usize, len: usize, p: usize, q: usize, delta: &Rat) -> State {
    let lin = Poly::linear(delta.clone());
    let mut out: State = BTreeMap::new();
    for (code, x) in state {
        let e = out.entry(*code).or_insert_with(Poly::zero);
        *e = &*e + &(&lin * x);
        let mut w = decode(*code, n, len);
        w.swap(p, q);
        let e = out.entry(encode(&w, n)).or_insert_with(Poly::zero);
        *e = &*e + x;
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// Build `R_{αβ}`: the first non-zero Laurent coefficient at `z = 0`.
pub fn intertwiner(spec_a: &ModuleSpec, spec_b: &ModuleSpec) -> Result<Intertwiner, YangianError> {
    intertwiner_with_cap(spec_a, spec_b, DEFAULT_DIM_CAP)
}

/// [`intertwiner`] with an explicit dimension cap.
pub fn intertwiner_with_cap(spec_a: &ModuleSpec, spec_b: &ModuleSpec, cap: usize) -> Result<Intertwiner, YangianError> {
    let a = realize(spec_a)?;
    let b = realize(spec_b)?;
    let dim = a.dim() * b.dim();
    if dim > cap {
        return Err(YangianError::DimensionCapExceeded { dim, cap });
    }
    let f = intertwiner_function(&a, &b)?;
    let (order, matrix) = f.laurent_leading(&Rat::zero())?;
    Ok(Intertwiner { matrix, order, dim })
}

/// Check `R · Δ′(T_ij(u)) = Δ(T_ij(u)) · R` exactly, where `Δ` is the
/// action on `V_A ⊗ V_B` and `Δ′` the action of `V_B ⊗ V_A` carried over
/// by the factor exchange.
pub fn check_intertwining(r: &Intertwiner, spec_a: &ModuleSpec, spec_b: &ModuleSpec) -> Result<bool, YangianError> {
    let ab = module_action_with_cap(&[spec_a.clone(), spec_b.clone()], usize::MAX)?;
    let ba = module_action_with_cap(&[spec_b.clone(), spec_a.clone()], usize::MAX)?;
    let (da, db) = (ab.factors[0].dim(), ab.factors[1].dim());
    if r.dim != da * db {
        return Err(YangianError::Inconsistent("intertwiner has the wrong size".into()));
    }
    // swap: V_B ⊗ V_A → V_A ⊗ V_B.
    let swap = block_swap(db, da);
    let swapped = ba.gens.conjugate(&swap, &swap.transpose());
    let n = ab.gens.n();
    for i in 1..=n {
        for j in 1..=n {
            let lhs = swapped.num(i, j).left_mul(&r.matrix);
            let rhs = ab.gens.num(i, j).right_mul(&r.matrix);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Check that a special pair has the required shapes: `A` a reversed
/// Young diagram with bottom-right content 0 and `B` a Young diagram with
/// top-left content 0.
fn special_contents(spec_a: &ModuleSpec, spec_b: &ModuleSpec) -> Result<(Vec<i64>, Vec<i64>), YangianError> {
    let da = spec_a.diagram()?;
    let db = spec_b.diagram()?;
    if da.n() != db.n() {
        return Err(YangianError::MismatchedRank(da.n(), db.n()));
    }
    match da.as_reversed_young() {
        Some((_, 0)) => {}
        _ => {
            return Err(YangianError::ShapeNotSpecial(
                "first module must be a reversed Young diagram ending in content 0".into(),
            ))
        }
    }
    match db.as_young() {
        Some((_, 0)) => {}
        _ => {
            return Err(YangianError::ShapeNotSpecial(
                "second module must be a Young diagram starting at content 0".into(),
            ))
        }
    }
    Ok((row_tableau_contents(&da), row_tableau_contents(&db)))
}

fn symmetrizer_pair(spec_a: &ModuleSpec, spec_b: &ModuleSpec) -> Result<RatMatrix, YangianError> {
    let ya = young_symmetrizer(&spec_a.diagram()?)?.y_sym.to_dense();
    let yb = young_symmetrizer(&spec_b.diagram()?)?.y_sym.to_dense();
    Ok(ya.kron(&yb))
}

fn checked_recip(x: Rat) -> Result<Rat, YangianError> {
    if x.is_zero() {
        Err(YangianError::PoleAtEqualArguments)
    } else {
        Ok(x.recip())
    }
}

/// The ordered product `Π R_{k,m+l}(−a_k−h, −b_l−z) · (Y_α ⊗ Y_β)` on the
/// full tensor space, at numeric `(h, z)`.
pub fn direct_product_form(spec_a: &ModuleSpec, spec_b: &ModuleSpec, h: &Rat, z: &Rat) -> Result<RatMatrix, YangianError> {
    let ca = row_tableau_contents(&spec_a.diagram()?);
    let cb = row_tableau_contents(&spec_b.diagram()?);
    let n = spec_a.n;
    let (m, nb) = (ca.len(), cb.len());
    let mut out = RatMatrix::identity(crate::yangian::tensor::checked_pow(n, m + nb).unwrap());
    for (k, l) in pair_order(m, nb) {
        let u = -(&Rat::from(ca[k - 1]) + h);
        let v = -(&Rat::from(cb[l - 1]) + z);
        let mut r = RatMatrix::identity(out.rows());
        r.add_scaled(&transposition_dense(n, m + nb, k - 1, m + l - 1), &checked_recip(&u - &v)?);
        out = &out * &r;
    }
    Ok(&out * &symmetrizer_pair(spec_a, spec_b)?)
}

/// The Jucys–Murphy form
/// `Π_k (h−X_k−z)/(h+a_k−z) · Π_l (h−X_{m+l}−z)/(h−b_l−z) · (Y_α ⊗ Y_β)`
/// with `X_p = Σ_{q>p} P_{pq}`, for a reversed Young diagram `α` (with
/// `a_m = 0`) and a Young diagram `β` (with `b_1 = 0`).
pub fn jucys_murphy_form(spec_a: &ModuleSpec, spec_b: &ModuleSpec, h: &Rat, z: &Rat) -> Result<RatMatrix, YangianError> {
    let (ca, cb) = special_contents(spec_a, spec_b)?;
    let n = spec_a.n;
    let len = ca.len() + cb.len();
    let dim = crate::yangian::tensor::checked_pow(n, len).unwrap();
    let x = jucys_murphy_elements(n, len);
    let hz = h - z;
    let mut out = RatMatrix::identity(dim);
    for (p, xp) in x.iter().enumerate() {
        let pole = if p < ca.len() {
            &hz + &Rat::from(ca[p])
        } else {
            &hz - &Rat::from(cb[p - ca.len()])
        };
        let mut f = RatMatrix::scalar(dim, &hz);
        f.add_scaled(&xp.to_dense(), &Rat::from(-1));
        out = &out * &f.scale(&checked_recip(pole)?);
    }
    Ok(&out * &symmetrizer_pair(spec_a, spec_b)?)
}

/// `X_p = Σ_{q>p} P_{pq}` for `p = 1..len` on `(C^N)^{⊗len}`.
pub fn jucys_murphy_elements(n: usize, len: usize) -> Vec<SparseMatrix> {
    (0..len)
        .map(|p| {
            let dim = crate::yangian::tensor::checked_pow(n, len).unwrap();
            let mut m = RatMatrix::zeros(dim, dim);
            for q in p + 1..len {
                m = &m + &transposition_dense(n, len, p, q);
            }
            m.to_sparse()
        })
        .collect()
}

/// `Π_p (h − X_p)` restricted to `im Y_α ⊗ im Y_β`, the numerator of the
/// Jucys–Murphy form at `z = 0`.
pub fn jucys_murphy_numerator(spec_a: &ModuleSpec, spec_b: &ModuleSpec, h: &Rat) -> Result<RatMatrix, YangianError> {
    let (ca, cb) = special_contents(spec_a, spec_b)?;
    let a = realize(spec_a)?;
    let b = realize(spec_b)?;
    let n = spec_a.n;
    let len = ca.len() + cb.len();
    let dim = crate::yangian::tensor::checked_pow(n, len).unwrap();
    let mut prod = RatMatrix::identity(dim);
    for xp in jucys_murphy_elements(n, len) {
        let mut f = RatMatrix::scalar(dim, h);
        f.add_scaled(&xp.to_dense(), &Rat::from(-1));
        prod = &prod * &f;
    }
    let basis_a = a.image.basis.basis();
    let basis_b = b.image.basis.basis();
    let kron_basis: Vec<Vec<Rat>> = basis_a
        .iter()
        .flat_map(|x| basis_b.iter().map(move |y| x.iter().flat_map(|s| y.iter().map(move |t| s * t)).collect()))
        .collect();
    let sub = crate::exactalg::Subspace::spanned_by(dim, kron_basis.clone());
    let cols: Vec<Vec<Rat>> = kron_basis
        .iter()
        .map(|v| {
            sub.coordinates(&prod.mul_vec(v))
                .ok_or_else(|| YangianError::Inconsistent("Π(h − X_p) leaves the image".into()))
        })
        .collect::<Result<_, _>>()?;
    Ok(RatMatrix::from_columns(kron_basis.len(), &cols))
}
