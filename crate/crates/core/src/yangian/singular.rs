//! Singular vectors, eigenvalues of `A_k(u)` and Drinfeld polynomials.

use crate::criteria::DrinfeldData;
use crate::diagrams::{GZScheme, SkewDiagram};
use crate::exactalg::{Poly, Rat, RatFn};

use super::action::{GeneratorSet, RealizedModule, TensorModule};
use super::minors::{abcd_indices, minor_denominator, quantum_minor_apply};
use super::YangianError;

/// Whether every coefficient of `C_1(u), …, C_{N−1}(u)` annihilates `v`.
pub fn is_singular(gen: &GeneratorSet, v: &[Rat]) -> Result<bool, YangianError> {
    if v.iter().all(Rat::is_zero) {
        return Ok(false);
    }
    for k in 1..gen.n() {
        let (i, j) = abcd_indices(k);
        let (num, _) = quantum_minor_apply(gen, &j, &i, v)?;
        if !num.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The vector `ζ = ζ^{(1)} ⊗ ⋯ ⊗ ζ^{(n)}`, checked to be singular.
pub fn singular_vector(module: &TensorModule) -> Result<Vec<Rat>, YangianError> {
    let zeta = module.zeta();
    if !is_singular(&module.gens, &zeta)? {
        return Err(YangianError::NotSingular("some C_k(u) does not annihilate ζ".into()));
    }
    Ok(zeta)
}

/// If `v` is an eigenvector of the minor `Q_{i,j}(u)`, its eigenvalue.
pub fn minor_eigenvalue(
    gen: &GeneratorSet,
    i_seq: &[usize],
    j_seq: &[usize],
    v: &[Rat],
) -> Result<Option<RatFn>, YangianError> {
    let Some(r) = v.iter().position(|x| !x.is_zero()) else {
        return Ok(None);
    };
    let (num, den) = quantum_minor_apply(gen, i_seq, j_seq, v)?;
    let dim = gen.dim();
    let entry = |row: usize| Poly::new(num.coeffs().iter().map(|c| c[(row, 0)].clone()).collect());
    let p = entry(r).scale(&v[r].recip());
    for row in 0..dim {
        if entry(row) != p.scale(&v[row]) {
            return Ok(None);
        }
    }
    Ok(Some(RatFn::new(p, den)))
}

/// Eigenvalues of `A_0(u) = 1, A_1(u), …, A_N(u)` on `v`.
pub fn a_eigenvalues(gen: &GeneratorSet, v: &[Rat]) -> Result<Vec<RatFn>, YangianError> {
    let mut out = vec![RatFn::one()];
    for k in 1..=gen.n() {
        let i: Vec<usize> = (1..=k).collect();
        let e = minor_eigenvalue(gen, &i, &i, v)?
            .ok_or_else(|| YangianError::NotSingular(format!("not an eigenvector of A_{k}(u)")))?;
        out.push(e);
    }
    Ok(out)
}

/// Check `A_{k+1}(u) A_{k−1}(u−1) / (A_k(u) A_k(u−1)) · ζ = P_k(u−1)/P_k(u) · ζ`
/// for `k = 1..N−1`, as exact identities of rational functions.
pub fn drinfeld_check(gen: &GeneratorSet, zeta: &[Rat], expected: &DrinfeldData) -> Result<bool, YangianError> {
    if !is_singular(gen, zeta)? {
        return Err(YangianError::NotSingular("drinfeld_check needs a singular vector".into()));
    }
    let a = a_eigenvalues(gen, zeta)?;
    let minus_one = Rat::from(-1);
    for k in 1..gen.n() {
        let lhs = a[k + 1]
            .mul(&a[k - 1].shift(&minus_one))
            .div(&a[k].mul(&a[k].shift(&minus_one)));
        let p = expected.poly(k);
        let rhs = RatFn::new(p.shift(&minus_one), p);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ρ_k(u) = Π_{i≤M} (u+h+μ_i−i−k+1)/(u+h−i−k+1) · Π_{i≤M+k} (u+h−i+1)`.
pub fn rho(d: &SkewDiagram, h: &Rat, k: usize) -> RatFn {
    let lin = |c: i64| Poly::linear(h + &Rat::from(c));
    let mut num = Poly::one();
    let mut den = Poly::one();
    for (idx, &mu) in d.mu().iter().enumerate() {
        let i = idx as i64 + 1;
        let k = k as i64;
        num = &num * &lin(mu - i - k + 1);
        den = &den * &lin(-i - k + 1);
    }
    for i in 1..=(d.m() + k) as i64 {
        num = &num * &lin(-i + 1);
    }
    RatFn::new(num, den)
}

/// Eigenvalue of `A_k(u)` on `ξ_Λ` in the elementary module:
/// `Π_{i≤M+k} (u+h+λ_{M+k,i}−i+1) / ρ_k(u)`.
pub fn elementary_a_eigenvalue(d: &SkewDiagram, h: &Rat, scheme: &GZScheme, k: usize) -> RatFn {
    if k == 0 {
        return RatFn::one();
    }
    let row = d.m() + k;
    let prod = (1..=row).fold(Poly::one(), |acc, i| {
        &acc * &Poly::linear(h + &Rat::from(scheme.get(row, i) - i as i64 + 1))
    });
    RatFn::from_poly(prod).div(&rho(d, h, k))
}

/// The scalar `f(u)` with realized `A_1(u) = f(u) · A_1(u)` of the
/// elementary module, read off on `ζ` and the scheme `Λ°`.
pub fn twist_factor(module: &RealizedModule) -> Result<RatFn, YangianError> {
    let top = crate::diagrams::scheme_top(module.diagram.lambda(), module.diagram.mu(), module.diagram.n())?;
    let a1 = minor_eigenvalue(&module.gens, &[1], &[1], &module.zeta)?
        .ok_or_else(|| YangianError::NotSingular("ζ is not an eigenvector of A_1(u)".into()))?;
    Ok(a1.div(&elementary_a_eigenvalue(&module.diagram, &module.spec.h, &top, 1)))
}

/// `F_k(u) = f(u) f(u−1) ⋯ f(u−k+1)`: the factor picked up by `A_k(u)`
/// under `T(u) ↦ f(u)·T(u)`.
pub fn twist_power(f: &RatFn, k: usize) -> RatFn {
    (0..k).fold(RatFn::one(), |acc, t| acc.mul(&f.shift(&Rat::from(-(t as i64)))))
}

/// Check that the realized `A_k(u)` eigenvalues on `ζ` equal the
/// elementary ones at `Λ°` up to the twist `F_k`, for all `k`.
pub fn zeta_matches_top_scheme(module: &RealizedModule) -> Result<bool, YangianError> {
    let d = &module.diagram;
    let top = crate::diagrams::scheme_top(d.lambda(), d.mu(), d.n())?;
    let f = twist_factor(module)?;
    let a = a_eigenvalues(&module.gens, &module.zeta)?;
    Ok((1..=d.n()).all(|k| a[k] == twist_power(&f, k).mul(&elementary_a_eigenvalue(d, &module.spec.h, &top, k))))
}

/// Denominator of the `k × k` minors, re-exported for eigenvalue checks.
pub fn a_denominator(gen: &GeneratorSet, k: usize) -> Poly {
    minor_denominator(gen, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::{drinfeld_roots, ModuleSpec};
    use crate::yangian::{module_action, realize};

    #[test]
    fn vector_module_drinfeld() {
        let spec = ModuleSpec::vector(2, Rat::new(1, 2));
        let m = module_action(std::slice::from_ref(&spec)).unwrap();
        let z = singular_vector(&m).unwrap();
        assert_eq!(z, vec![Rat::one(), Rat::zero()]);
        let dr = drinfeld_roots(&spec).unwrap();
        assert_eq!(dr.poly(1), Poly::linear(Rat::new(1, 2)));
        assert!(drinfeld_check(&m.gens, &z, &dr).unwrap());
    }

    #[test]
    fn single_modules_are_consistent() {
        let specs = [
            ModuleSpec::young(&[2, 1, 0], 3, Rat::new(1, 3)),
            ModuleSpec::rectangle(2, 1, 2, Rat::from(2)),
            ModuleSpec::new(&[2, 1, 0], &[1], 2, Rat::zero()),
            ModuleSpec::young(&[1, 1, 0], 3, Rat::from(-1)),
        ];
        for s in specs {
            let m = module_action(std::slice::from_ref(&s)).unwrap();
            let z = singular_vector(&m).unwrap();
            assert!(drinfeld_check(&m.gens, &z, &drinfeld_roots(&s).unwrap()).unwrap(), "{s:?}");
            assert!(zeta_matches_top_scheme(&realize(&s).unwrap()).unwrap(), "{s:?}");
        }
    }
}
