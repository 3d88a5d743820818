//! The Yang R-matrix `R(u, v) = 1 + P/(u − v)`.

use crate::exactalg::{Poly, PolyMatrix, Rat, RatMatrix};

use super::tensor::{flip, transposition_dense};
use super::YangianError;

/// `R(u, v)` on `C^N ⊗ C^N` at a rational point.
pub fn yang_r(n: usize, u: &Rat, v: &Rat) -> Result<RatMatrix, YangianError> {
    let diff = u - v;
    if diff.is_zero() {
        return Err(YangianError::PoleAtEqualArguments);
    }
    let mut r = RatMatrix::identity(n * n);
    r.add_scaled(&flip(n), &diff.recip());
    Ok(r)
}

/// The cleared form `(u − v)·R(u, v) = (u − v) + P` as a polynomial matrix
/// in `u` for fixed `v`.
pub fn yang_r_cleared(n: usize, v: &Rat) -> PolyMatrix {
    let id = PolyMatrix::scalar_poly(n * n, &Poly::linear(-v));
    id.add(&PolyMatrix::constant(flip(n)))
}

/// `R_{ab}(u, v)` acting on positions `a`, `b` (0-based) of
/// `(C^N)^{⊗len}`.
pub fn yang_r_on(
    n: usize,
    len: usize,
    a: usize,
    b: usize,
    u: &Rat,
    v: &Rat,
) -> Result<RatMatrix, YangianError> {
    let diff = u - v;
    if diff.is_zero() {
        return Err(YangianError::PoleAtEqualArguments);
    }
    let p = transposition_dense(n, len, a, b);
    let mut r = RatMatrix::identity(p.rows());
    r.add_scaled(&p, &diff.recip());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_case() {
        let r = yang_r(1, &Rat::from(3), &Rat::from(1)).unwrap();
        assert_eq!(r[(0, 0)], Rat::new(3, 2));
        assert!(matches!(
            yang_r(2, &Rat::one(), &Rat::one()),
            Err(YangianError::PoleAtEqualArguments)
        ));
    }

    #[test]
    fn unitarity_and_yang_baxter() {
        let pts = [(3, 7, 11), (-2, 5, 1), (1, 2, 4)];
        for n in [2usize, 3] {
            for &(a, b, c) in &pts {
                let (u, v, w) = (Rat::new(a, 3), Rat::new(b, 2), Rat::from(c));
                let ruv = yang_r(n, &u, &v).unwrap();
                let rvu = yang_r(n, &v, &u).unwrap();
                let d = &u - &v;
                let expect = RatMatrix::scalar(n * n, &(Rat::one() - (&d * &d).recip()));
                assert_eq!(&ruv * &rvu, expect);
                let r12 = yang_r_on(n, 3, 0, 1, &u, &v).unwrap();
                let r13 = yang_r_on(n, 3, 0, 2, &u, &w).unwrap();
                let r23 = yang_r_on(n, 3, 1, 2, &v, &w).unwrap();
                assert_eq!(&(&r12 * &r13) * &r23, &(&r23 * &r13) * &r12);
            }
        }
    }

    #[test]
    fn cleared_form_evaluates() {
        let v = Rat::new(-1, 2);
        let u = Rat::from(4);
        let m = yang_r_cleared(2, &v).eval(&u);
        assert_eq!(m, yang_r(2, &u, &v).unwrap().scale(&(&u - &v)));
    }
}
