//! The Yangian action on realized elementary modules and their tensor
//! products.
//!
//! For one diagram with boxes `1..n` (row-reading order) of contents
//! `c_p` and shift `h`, the series `T(u)` acts on `(C^N)^{⊗n}` through
//! the auxiliary-space product `R_{01}(u, −c_1−h) ⋯ R_{0n}(u, −c_n−h)`.
//! After clearing the scalar denominator `Π_p (u + c_p + h)` every
//! `T_ij(u)` is a polynomial matrix; it preserves the image of the Young
//! symmetrizer, where it is recorded in a reduced-echelon basis.
//! Tensor products use the coproduct `T_ij ↦ Σ_k T_ik ⊗ T_kj`.

use std::collections::BTreeMap;

use crate::criteria::ModuleSpec;
use crate::diagrams::{row_tableau_contents, SkewDiagram};
use crate::exactalg::{Poly, PolyMatrix, Rat, RatFnMatrix, RatMatrix, SparseMatrix, Subspace};

use super::symmetrizer::{image_of, SymmetrizerImage, SymmetrizerSet};
use super::tensor::{decode, encode, TensorSpace, VectorFactor};
use super::YangianError;

/// Default bound on the dimension of realized modules.
pub const DEFAULT_DIM_CAP: usize = 64;

/// The action of all `T_ij(u)` on a realized module: `T_ij(u)` acts as
/// `num_ij(u) / den(u)` with a common monic scalar denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    n: usize,
    dim: usize,
    num: Vec<PolyMatrix>,
    den: Poly,
}

impl GeneratorSet {
    /// Assemble from numerators indexed `(i − 1)·N + (j − 1)`.
    pub fn new(n: usize, dim: usize, num: Vec<PolyMatrix>, den: Poly) -> Self {
        assert_eq!(num.len(), n * n);
        assert!(num.iter().all(|m| m.rows() == dim && m.cols() == dim));
        GeneratorSet { n, dim, num, den }
    }

    /// The trivial one-dimensional module `T_ij(u) = δ_ij`.
    pub fn trivial(n: usize) -> Self {
        let num = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    PolyMatrix::identity(1)
                } else {
                    PolyMatrix::zero(1, 1)
                }
            })
            .collect();
        GeneratorSet::new(n, 1, num, Poly::one())
    }

    /// The rank `N`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the module.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Degree of the common denominator (the number of boxes).
    pub fn degree_bound(&self) -> usize {
        self.den.degree().unwrap_or(0)
    }

    /// Cleared numerator of `T_ij(u)` (1-based indices).
    pub fn num(&self, i: usize, j: usize) -> &PolyMatrix {
        &self.num[(i - 1) * self.n + (j - 1)]
    }

    /// `T_ij(u)` as a rational-function matrix.
    pub fn t(&self, i: usize, j: usize) -> RatFnMatrix {
        RatFnMatrix {
            num: self.num(i, j).clone(),
            den: self.den.clone(),
        }
    }

    /// `T_ij(u)` at a point; `None` at a pole.
    pub fn eval(&self, i: usize, j: usize, u: &Rat) -> Option<RatMatrix> {
        let d = self.den.eval(u);
        if d.is_zero() {
            return None;
        }
        Some(self.num(i, j).eval(u).scale(&d.recip()))
    }

    /// All `T_ij(u)` at a point, indexed `(i − 1)·N + (j − 1)`.
    pub fn eval_all(&self, u: &Rat) -> Option<Vec<RatMatrix>> {
        let d = self.den.eval(u);
        if d.is_zero() {
            return None;
        }
        let inv = d.recip();
        Some(self.num.iter().map(|m| m.eval(u).scale(&inv)).collect())
    }

    /// Every non-zero coefficient matrix of every numerator.  Together with
    /// the identity they span the same space as the coefficients of the
    /// series `T_ij(u)`.
    pub fn coefficient_matrices(&self) -> Vec<RatMatrix> {
        self.num
            .iter()
            .flat_map(|m| m.coeffs().iter().filter(|c| !c.is_zero()).cloned())
            .collect()
    }

    /// [`coefficient_matrices`](Self::coefficient_matrices) in sparse form.
    pub fn sparse_coefficients(&self) -> Vec<SparseMatrix> {
        self.num
            .iter()
            .flat_map(|m| m.coeffs().iter().filter(|c| !c.is_zero()).map(RatMatrix::to_sparse))
            .collect()
    }

    /// The coefficient of `u^{-1}` in `T_ij(u)`: the `gl_N` generator.
    pub fn first_coefficient(&self, i: usize, j: usize) -> RatMatrix {
        let deg = self.degree_bound();
        if deg == 0 {
            return RatMatrix::zeros(self.dim, self.dim);
        }
        let mut m = self.num(i, j).coeff(deg - 1);
        if i == j {
            m.add_scaled(&RatMatrix::identity(self.dim), &-self.den.coeff(deg - 1));
        }
        m
    }

    /// The coproduct action on `self ⊗ other`.
    pub fn coproduct(&self, other: &GeneratorSet) -> GeneratorSet {
        assert_eq!(self.n, other.n, "coproduct of modules for different N");
        let n = self.n;
        let dim = self.dim * other.dim;
        let num = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .map(|(i, j)| {
                (1..=n).fold(PolyMatrix::zero(dim, dim), |acc, k| {
                    acc.add(&self.num(i, k).kron(other.num(k, j)))
                })
            })
            .collect();
        GeneratorSet::new(n, dim, num, &self.den * &other.den)
    }

    /// `S·T_ij(u)·S^{-1}` for an invertible change of basis `S`.
    pub fn conjugate(&self, s: &RatMatrix, s_inv: &RatMatrix) -> GeneratorSet {
        let num = self
            .num
            .iter()
            .map(|m| m.left_mul(s).right_mul(s_inv))
            .collect();
        GeneratorSet::new(self.n, self.dim, num, self.den.clone())
    }
}

/// One elementary module realized inside `(C^N)^{⊗n}`.
#[derive(Clone, Debug)]
pub struct RealizedModule {
    pub spec: ModuleSpec,
    pub diagram: SkewDiagram,
    pub space: TensorSpace,
    pub image: SymmetrizerImage,
    pub gens: GeneratorSet,
    /// Coordinates of `Y·e_{κ°}` in the image basis.
    pub zeta: Vec<Rat>,
}

impl RealizedModule {
    pub fn dim(&self) -> usize {
        self.gens.dim()
    }
}

/// Realize one elementary module.
pub fn realize(spec: &ModuleSpec) -> Result<RealizedModule, YangianError> {
    let d = spec.diagram()?;
    let n = d.n();
    let contents = row_tableau_contents(&d);
    let space = TensorSpace::new(
        n,
        contents
            .iter()
            .map(|&c| VectorFactor {
                content: c,
                h: spec.h.clone(),
            })
            .collect(),
    );
    let sym = SymmetrizerSet::groups_only(&d)?;
    let image = image_of(&sym, &d);
    let gens = realized_action(&space, &image.basis)?;
    let zeta = singular_coordinates(&d, &sym, &image.basis)?;
    Ok(RealizedModule {
        spec: spec.clone(),
        diagram: d,
        space,
        image,
        gens,
        zeta,
    })
}

/// Coordinates of `Y·e_{κ°}` where `κ°(p)` is the depth of box `p` in its
/// column.
fn singular_coordinates(
    d: &SkewDiagram,
    sym: &SymmetrizerSet,
    basis: &Subspace,
) -> Result<Vec<Rat>, YangianError> {
    let mut depth = vec![0usize; d.len()];
    for cells in d.columns().values() {
        for (t, &c) in cells.iter().enumerate() {
            depth[d.index_of(c).unwrap()] = t;
        }
    }
    let code = encode(&depth, d.n());
    let mut v = vec![Rat::zero(); basis.ambient()];
    for (r, x) in sym.y_word(code) {
        v[r] = Rat::from(x);
    }
    if v.iter().all(Rat::is_zero) {
        return Err(YangianError::NotSingular("Y·e_κ° vanishes".into()));
    }
    basis
        .coordinates(&v)
        .ok_or_else(|| YangianError::Inconsistent("Y·e_κ° outside the image of Y".into()))
}

type PolyState = BTreeMap<(usize, usize), Poly>;

/// The action of `T(u)` on `space`, compressed to the invariant subspace
/// `basis` (checked exactly).
pub fn realized_action(space: &TensorSpace, basis: &Subspace) -> Result<GeneratorSet, YangianError> {
    let n = space.n;
    let len = space.len();
    let dim = basis.dim();
    let shifts: Vec<Rat> = space
        .factors
        .iter()
        .map(|f| &Rat::from(f.content) + &f.h)
        .collect();
    let den = shifts
        .iter()
        .fold(Poly::one(), |acc, s| &acc * &Poly::linear(s.clone()));
    let sparse_basis: Vec<Vec<(usize, Rat)>> = basis
        .basis()
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k, x.clone()))
                .collect()
        })
        .collect();
    let mut coeffs: Vec<Vec<RatMatrix>> = vec![vec![RatMatrix::zeros(dim, dim); len + 1]; n * n];
    for (col, b) in sparse_basis.iter().enumerate() {
        for j in 0..n {
            let mut state: PolyState = b
                .iter()
                .map(|(code, x)| ((j, *code), Poly::constant(x.clone())))
                .collect();
            for p in (0..len).rev() {
                state = apply_factor(&state, n, len, p, &shifts[p]);
            }
            for i in 0..n {
                let coords: Vec<Poly> = basis
                    .pivots()
                    .iter()
                    .map(|&piv| state.get(&(i, piv)).cloned().unwrap_or_else(Poly::zero))
                    .collect();
                // Exact membership check of T_ij(u)·b in the subspace.
                let mut recon: BTreeMap<usize, Poly> = BTreeMap::new();
                for (c, bv) in coords.iter().zip(&sparse_basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (code, x) in bv {
                        let e = recon.entry(*code).or_insert_with(Poly::zero);
                        *e = &*e + &c.scale(x);
                    }
                }
                recon.retain(|_, p| !p.is_zero());
                let actual: BTreeMap<usize, Poly> = state
                    .iter()
                    .filter(|((a, _), p)| *a == i && !p.is_zero())
                    .map(|((_, code), p)| (*code, p.clone()))
                    .collect();
                if recon != actual {
                    return Err(YangianError::Inconsistent(format!(
                        "T_{}{}(u) does not preserve the realized subspace",
                        i + 1,
                        j + 1
                    )));
                }
                for (row, c) in coords.iter().enumerate() {
                    for (t, x) in c.coeffs().iter().enumerate() {
                        coeffs[i * n + j][t][(row, col)] = x.clone();
                    }
                }
            }
        }
    }
    let num = coeffs
        .into_iter()
        .map(|c| PolyMatrix::new(dim, dim, c))
        .collect();
    Ok(GeneratorSet::new(n, dim, num, den))
}

/// Apply the cleared factor `(u + s) + P_{0p}` to a state in
/// `C^N ⊗ (C^N)^{⊗len}` indexed by `(auxiliary letter, word code)`.
fn apply_factor(state: &PolyState, n: usize, len: usize, p: usize, s: &Rat) -> PolyState {
    let lin = Poly::linear(s.clone());
    let mut out: PolyState = BTreeMap::new();
    for ((a, code), x) in state {
        let e = out.entry((*a, *code)).or_insert_with(Poly::zero);
        *e = &*e + &(&lin * x);
        let mut w = decode(*code, n, len);
        let letter = w[p];
        w[p] = *a;
        let e = out.entry((letter, encode(&w, n))).or_insert_with(Poly::zero);
        *e = &*e + x;
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// A tensor product of realized elementary modules.
#[derive(Clone, Debug)]
pub struct TensorModule {
    pub factors: Vec<RealizedModule>,
    pub gens: GeneratorSet,
}

impl TensorModule {
    pub fn dim(&self) -> usize {
        self.gens.dim()
    }

    /// `ζ = ζ^{(1)} ⊗ ⋯ ⊗ ζ^{(n)}` in tensor coordinates.
    pub fn zeta(&self) -> Vec<Rat> {
        self.factors.iter().fold(vec![Rat::one()], |acc, f| {
            acc.iter()
                .flat_map(|a| f.zeta.iter().map(move |b| a * b))
                .collect()
        })
    }

    /// Weights of the basis vectors (Kronecker order).
    pub fn weights(&self) -> Vec<Vec<usize>> {
        let n = self.gens.n();
        self.factors.iter().fold(vec![vec![0; n]], |acc, f| {
            acc.iter()
                .flat_map(|a| {
                    f.image
                        .weights
                        .iter()
                        .map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect())
                })
                .collect()
        })
    }

    pub fn specs(&self) -> Vec<ModuleSpec> {
        self.factors.iter().map(|f| f.spec.clone()).collect()
    }
}

/// Realize `V^{(1)} ⊗ ⋯ ⊗ V^{(n)}` with the default dimension cap.
pub fn module_action(specs: &[ModuleSpec]) -> Result<TensorModule, YangianError> {
    module_action_with_cap(specs, DEFAULT_DIM_CAP)
}

/// Realize a tensor product, refusing results of dimension above `cap`.
pub fn module_action_with_cap(specs: &[ModuleSpec], cap: usize) -> Result<TensorModule, YangianError> {
    let Some(first) = specs.first() else {
        return Err(YangianError::NoModules);
    };
    for s in specs {
        if s.n != first.n {
            return Err(YangianError::MismatchedRank(first.n, s.n));
        }
    }
    let factors = specs.iter().map(realize).collect::<Result<Vec<_>, _>>()?;
    let dim = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.dim()))
        .unwrap_or(usize::MAX);
    if dim > cap {
        return Err(YangianError::DimensionCapExceeded { dim, cap });
    }
    let gens = factors
        .iter()
        .skip(1)
        .fold(factors[0].gens.clone(), |acc, f| acc.coproduct(&f.gens));
    Ok(TensorModule { factors, gens })
}
