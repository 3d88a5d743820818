//! Rational spectra: minimal polynomials, rational root finding and
//! simultaneous diagonalization of commuting families.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{AlgebraError, Poly, Rat, RatMatrix, Subspace};

/// Minimal polynomial (monic) of the vector `v` under `a`: the monic
/// polynomial `p` of least degree with `p(a) v = 0`.
pub fn local_minimal_polynomial(a: &RatMatrix, v: &[Rat]) -> Poly {
    let n = v.len();
    let mut krylov: Vec<Vec<Rat>> = Vec::new();
    let mut span = Subspace::new(n);
    let mut cur = v.to_vec();
    loop {
        if !span.insert(cur.clone()) {
            // Solve cur = sum c_i krylov_i.
            let m = RatMatrix::from_columns(n, &krylov);
            let k = krylov.len();
            let aug = RatMatrix::from_fn(n, k + 1, |i, j| {
                if j < k {
                    m[(i, j)].clone()
                } else {
                    cur[i].clone()
                }
            });
            let (r, pivots) = aug.rref();
            let mut coeffs = vec![Rat::zero(); k + 1];
            for (row, &p) in pivots.iter().enumerate() {
                if p < k {
                    coeffs[p] = -&r[(row, k)];
                }
            }
            coeffs[k] = Rat::one();
            return Poly::new(coeffs);
        }
        krylov.push(cur.clone());
        cur = a.mul_vec(&cur);
    }
}

/// Minimal polynomial of a square matrix (lcm of the local minimal
/// polynomials of the standard basis vectors).
pub fn minimal_polynomial(a: &RatMatrix) -> Poly {
    let n = a.rows();
    let mut acc = Poly::one();
    for i in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[i] = Rat::one();
        // Skip vectors already annihilated by the current lcm.
        if poly_apply(a, &acc, &e).iter().all(Rat::is_zero) {
            continue;
        }
        let p = local_minimal_polynomial(a, &e);
        let g = Poly::gcd(&acc, &p);
        acc = (&acc * &p).div_rem(&g).0.monic();
    }
    acc
}

/// `p(a) v` by Horner's scheme.
pub fn poly_apply(a: &RatMatrix, p: &Poly, v: &[Rat]) -> Vec<Rat> {
    let mut acc = vec![Rat::zero(); v.len()];
    for c in p.coeffs().iter().rev() {
        acc = a.mul_vec(&acc);
        for (x, y) in acc.iter_mut().zip(v) {
            if !y.is_zero() {
                *x += c * y;
            }
        }
    }
    acc
}

/// All distinct rational roots of a polynomial, sorted ascending.
///
/// Works on the squarefree part made into a monic integer polynomial, finds
/// roots modulo a prime for which it stays squarefree, Hensel-lifts them
/// past the root bound and keeps the lifts that are exact roots.
pub fn rational_roots(p: &Poly) -> Vec<Rat> {
    if p.is_zero() {
        return Vec::new();
    }
    let sf = p.squarefree();
    let Some(deg) = sf.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    // Integer primitive coefficients.
    let lcm = sf
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = sf
        .coeffs()
        .iter()
        .map(|c| (c.numer() * &lcm) / c.denom())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    for c in ints.iter_mut() {
        *c /= &content;
    }
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(Rat::zero());
        ints.remove(0);
    }
    let n = ints.len() - 1;
    if n >= 1 {
        let a = ints[n].clone();
        // Monic q(y) = a^(n-1) p(y / a).
        let mut q = vec![BigInt::zero(); n + 1];
        let mut pow = BigInt::one();
        for i in (0..n).rev() {
            q[i] = &ints[i] * &pow;
            pow *= &a;
        }
        q[n] = BigInt::one();
        for y in integer_roots_monic(&q) {
            roots.push(Rat::from_bigints(y, a.clone()));
        }
    }
    roots.sort();
    roots
}

fn eval_big(q: &[BigInt], y: &BigInt) -> BigInt {
    q.iter().rev().fold(BigInt::zero(), |acc, c| acc * y + c)
}

fn eval_mod(q: &[u64], y: u64, p: u64) -> u64 {
    q.iter()
        .rev()
        .fold(0u64, |acc, &c| ((acc as u128 * y as u128 + c as u128) % p as u128) as u64)
}

fn poly_mod_p(q: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    q.iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
        .collect()
}

fn inv_mod_u64(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * a as u128 % p as u128) as u64;
        }
        a = (a as u128 * a as u128 % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim_mod(&mut r);
    let db = b.len() - 1;
    let inv = inv_mod_u64(b[db], p);
    while r.len() > db {
        let top = r.len() - 1;
        let f = (r[top] as u128 * inv as u128 % p as u128) as u64;
        let shift = top - db;
        for (i, &bc) in b.iter().enumerate() {
            let sub = (f as u128 * bc as u128 % p as u128) as u64;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        trim_mod(&mut r);
    }
    r
}

fn gcd_degree_mod(a: &[u64], b: &[u64], p: u64) -> usize {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim_mod(&mut x);
    trim_mod(&mut y);
    while !y.is_empty() {
        let r = rem_mod(&x, &y, p);
        x = y;
        y = r;
    }
    x.len().saturating_sub(1)
}

fn small_primes(from: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut c = from;
    while out.len() < count {
        if (2..).take_while(|d| d * d <= c).all(|d| !c.is_multiple_of(d)) {
            out.push(c);
        }
        c += 1;
    }
    out
}

/// Integer roots of a monic integer polynomial with non-zero constant term
/// and no repeated roots over Q.
fn integer_roots_monic(q: &[BigInt]) -> Vec<BigInt> {
    let n = q.len() - 1;
    if n == 1 {
        return vec![-q[0].clone()];
    }
    let bound: BigInt = q.iter().map(|c| c.abs()).max().unwrap() + 1;
    let deriv: Vec<BigInt> = (1..=n).map(|i| &q[i] * BigInt::from(i)).collect();
    for p in small_primes(1009, 400) {
        let qm = poly_mod_p(q, p);
        let dm = poly_mod_p(&deriv, p);
        if gcd_degree_mod(&qm, &dm, p) != 0 {
            continue;
        }
        let residues: Vec<u64> = (0..p).filter(|&r| eval_mod(&qm, r, p) == 0).collect();
        let mut out = Vec::new();
        for r in residues {
            let mut m = BigInt::from(p);
            let mut y = BigInt::from(r);
            while m <= &bound * 2 {
                let m2 = &m * &m;
                let fy = eval_big(q, &y).mod_floor(&m2);
                let dy = eval_big(&deriv, &y).mod_floor(&m2);
                let inv = mod_inverse(&dy, &m2).expect("simple root lifts");
                y = (&y - fy * inv).mod_floor(&m2);
                m = m2;
            }
            // Symmetric representative.
            if &y * 2 > m {
                y -= &m;
            }
            if eval_big(q, &y).is_zero() {
                out.push(y);
            }
        }
        return out;
    }
    // Exhaustive fallback: should not be reachable for squarefree input.
    let mut out = Vec::new();
    let b = bound.to_i64().unwrap_or(i64::MAX).min(1_000_000);
    for y in -b..=b {
        let yb = BigInt::from(y);
        if eval_big(q, &yb).is_zero() {
            out.push(yb);
        }
    }
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Distinct rational eigenvalues of `a` together with a flag telling whether
/// the whole spectrum is rational and `a` is diagonalizable.
pub fn rational_spectrum(a: &RatMatrix) -> (Vec<Rat>, bool) {
    let mp = minimal_polynomial(a);
    let roots = rational_roots(&mp);
    let split = mp.degree() == Some(roots.len());
    (roots, split)
}

/// One joint eigenvector with the eigenvalue of every family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointEigen {
    pub vector: Vec<Rat>,
    pub eigenvalues: Vec<Rat>,
}

/// Joint eigenbasis of a commuting family of square matrices.
///
/// Fails with [`AlgebraError::NotSimultaneouslyDiagonalizable`] when some
/// member has irrational spectrum or is not diagonalizable on a joint
/// eigenspace, or when a joint eigenspace has dimension larger than one.
/// Output is sorted lexicographically by the eigenvalue tuple.
pub fn simultaneous_eigenbasis(
    dim: usize,
    family: &[RatMatrix],
) -> Result<Vec<JointEigen>, AlgebraError> {
    for m in family {
        if m.rows() != dim || m.cols() != dim {
            return Err(AlgebraError::DimensionMismatch);
        }
    }
    let mut blocks: Vec<(Subspace, Vec<Rat>)> = vec![(Subspace::full(dim), Vec::new())];
    for a in family {
        let mut next = Vec::new();
        for (block, vals) in blocks {
            let restricted = a.restrict_to(&block).ok_or_else(|| {
                AlgebraError::NotSimultaneouslyDiagonalizable(
                    "family does not commute: joint eigenspace not invariant".into(),
                )
            })?;
            let w = block.dim();
            if w == 1 {
                let mut v = vals.clone();
                v.push(restricted[(0, 0)].clone());
                next.push((block, v));
                continue;
            }
            let (roots, split) = rational_spectrum(&restricted);
            if !split {
                return Err(AlgebraError::NotSimultaneouslyDiagonalizable(
                    "irrational or non-semisimple spectrum".into(),
                ));
            }
            let mut total = 0;
            for lam in roots {
                let shifted = &restricted - &RatMatrix::scalar(w, &lam);
                let ker = shifted.kernel();
                total += ker.len();
                let vecs = ker.into_iter().map(|coords| {
                    let mut v = vec![Rat::zero(); dim];
                    for (c, b) in coords.iter().zip(block.basis()) {
                        if c.is_zero() {
                            continue;
                        }
                        for (x, y) in v.iter_mut().zip(b) {
                            if !y.is_zero() {
                                *x += c * y;
                            }
                        }
                    }
                    v
                });
                let sub = Subspace::spanned_by(dim, vecs);
                let mut v = vals.clone();
                v.push(lam);
                next.push((sub, v));
            }
            if total != w {
                return Err(AlgebraError::NotSimultaneouslyDiagonalizable(
                    "matrix not diagonalizable on a joint eigenspace".into(),
                ));
            }
        }
        blocks = next;
    }
    let mut out = Vec::with_capacity(blocks.len());
    for (block, vals) in blocks {
        if block.dim() != 1 {
            return Err(AlgebraError::NotSimultaneouslyDiagonalizable(format!(
                "joint eigenspace of dimension {}",
                block.dim()
            )));
        }
        out.push(JointEigen {
            vector: block.basis()[0].clone(),
            eigenvalues: vals,
        });
    }
    out.sort_by(|a, b| a.eigenvalues.cmp(&b.eigenvalues));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from(n)
    }

    #[test]
    fn roots_of_products_of_linear_factors() {
        let roots = vec![Rat::new(-7, 3), r(0), Rat::new(1, 2), r(5), r(123456789)];
        let mut p = Poly::from_roots(&roots);
        // Add a repeated root and an irreducible quadratic factor.
        p = &p * &Poly::from_roots(&[r(5)]);
        p = &p * &Poly::new(vec![r(2), r(0), r(1)]);
        assert_eq!(rational_roots(&p), roots);
        assert!(rational_roots(&Poly::new(vec![r(-2), r(0), r(1)])).is_empty());
    }

    #[test]
    fn minimal_polynomial_of_diagonal_and_jordan() {
        let d = RatMatrix::from_i64(&[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 3]]);
        assert_eq!(minimal_polynomial(&d), Poly::from_roots(&[r(2), r(3)]));
        let j = RatMatrix::from_i64(&[vec![2, 1], vec![0, 2]]);
        assert_eq!(minimal_polynomial(&j), Poly::from_roots(&[r(2), r(2)]));
        assert!(!rational_spectrum(&j).1);
    }

    #[test]
    fn eigenbasis_diag_and_degenerate() {
        let d = RatMatrix::from_i64(&[vec![1, 0], vec![0, 2]]);
        let e = simultaneous_eigenbasis(2, &[d]).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e[0].eigenvalues, vec![r(1)]);
        assert_eq!(e[1].eigenvalues, vec![r(2)]);
        assert!(matches!(
            simultaneous_eigenbasis(2, &[RatMatrix::identity(2)]),
            Err(AlgebraError::NotSimultaneouslyDiagonalizable(_))
        ));
    }

    #[test]
    fn eigenbasis_of_commuting_pair_in_non_standard_basis() {
        // A = S diag(1,1,2) S^-1, B = S diag(3,4,3) S^-1.
        let s = RatMatrix::from_i64(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        let si = s.inverse().unwrap();
        let a = &(&s * &RatMatrix::from_i64(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 2]])) * &si;
        let b = &(&s * &RatMatrix::from_i64(&[vec![3, 0, 0], vec![0, 4, 0], vec![0, 0, 3]])) * &si;
        let e = simultaneous_eigenbasis(3, &[a.clone(), b.clone()]).unwrap();
        assert_eq!(e.len(), 3);
        for je in &e {
            let av = a.mul_vec(&je.vector);
            let expect: Vec<Rat> = je.vector.iter().map(|x| x * &je.eigenvalues[0]).collect();
            assert_eq!(av, expect);
            let bv = b.mul_vec(&je.vector);
            let expect: Vec<Rat> = je.vector.iter().map(|x| x * &je.eigenvalues[1]).collect();
            assert_eq!(bv, expect);
        }
    }
}
