//! Matrices of polynomials in one formal variable, and rational-function
//! matrices with a scalar denominator.

use super::{AlgebraError, Poly, Rat, RatMatrix};

/// A matrix polynomial `C_0 + C_1 x + ... + C_n x^n` with all coefficient
/// matrices of the same shape.  Trailing zero coefficients are trimmed, so
/// the zero polynomial matrix has no coefficients (but still knows its
/// shape).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    coeffs: Vec<RatMatrix>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, mut coeffs: Vec<RatMatrix>) -> Self {
        assert!(coeffs.iter().all(|c| c.rows() == rows && c.cols() == cols));
        while coeffs.last().is_some_and(RatMatrix::is_zero) {
            coeffs.pop();
        }
        PolyMatrix { rows, cols, coeffs }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix::new(rows, cols, Vec::new())
    }

    pub fn constant(m: RatMatrix) -> Self {
        PolyMatrix::new(m.rows(), m.cols(), vec![m])
    }

    pub fn identity(n: usize) -> Self {
        PolyMatrix::constant(RatMatrix::identity(n))
    }

    /// `p(x) * Id_n` for a scalar polynomial `p`.
    pub fn scalar_poly(n: usize, p: &Poly) -> Self {
        PolyMatrix::new(
            n,
            n,
            p.coeffs().iter().map(|c| RatMatrix::scalar(n, c)).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn coeffs(&self) -> &[RatMatrix] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> RatMatrix {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| RatMatrix::zeros(self.rows, self.cols))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> RatMatrix {
        let mut acc = RatMatrix::zeros(self.rows, self.cols);
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(x);
            acc.add_scaled(c, &Rat::one());
        }
        acc
    }

    pub fn add(&self, o: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyMatrix::new(
            self.rows,
            self.cols,
            (0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect(),
        )
    }

    pub fn sub(&self, o: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyMatrix::new(
            self.rows,
            self.cols,
            (0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect(),
        )
    }

    pub fn mul(&self, o: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        if self.is_zero() || o.is_zero() {
            return PolyMatrix::zero(self.rows, o.cols);
        }
        let mut out = vec![RatMatrix::zeros(self.rows, o.cols); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    let p = a * b;
                    out[i + j].add_scaled(&p, &Rat::one());
                }
            }
        }
        PolyMatrix::new(self.rows, o.cols, out)
    }

    /// Multiply by a scalar polynomial.
    pub fn mul_poly(&self, p: &Poly) -> PolyMatrix {
        if self.is_zero() || p.is_zero() {
            return PolyMatrix::zero(self.rows, self.cols);
        }
        let mut out =
            vec![RatMatrix::zeros(self.rows, self.cols); self.coeffs.len() + p.coeffs().len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, c) in p.coeffs().iter().enumerate() {
                out[i + j].add_scaled(a, c);
            }
        }
        PolyMatrix::new(self.rows, self.cols, out)
    }

    pub fn scale(&self, c: &Rat) -> PolyMatrix {
        PolyMatrix::new(
            self.rows,
            self.cols,
            self.coeffs.iter().map(|m| m.scale(c)).collect(),
        )
    }

    /// Apply a constant matrix on the left.
    pub fn left_mul(&self, m: &RatMatrix) -> PolyMatrix {
        PolyMatrix::new(
            m.rows(),
            self.cols,
            self.coeffs.iter().map(|c| m * c).collect(),
        )
    }

    /// Apply a constant matrix on the right.
    pub fn right_mul(&self, m: &RatMatrix) -> PolyMatrix {
        PolyMatrix::new(
            self.rows,
            m.cols(),
            self.coeffs.iter().map(|c| c * m).collect(),
        )
    }

    /// Apply an arbitrary coefficient-wise linear map.
    pub fn map(&self, f: impl Fn(&RatMatrix) -> RatMatrix) -> PolyMatrix {
        let coeffs: Vec<RatMatrix> = self.coeffs.iter().map(f).collect();
        let (r, c) = coeffs
            .first()
            .map_or((self.rows, self.cols), |m| (m.rows(), m.cols()));
        PolyMatrix::new(r, c, coeffs)
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::new(
            self.cols,
            self.rows,
            self.coeffs.iter().map(RatMatrix::transpose).collect(),
        )
    }

    pub fn kron(&self, o: &PolyMatrix) -> PolyMatrix {
        let (r, c) = (self.rows * o.rows, self.cols * o.cols);
        if self.is_zero() || o.is_zero() {
            return PolyMatrix::zero(r, c);
        }
        let mut out = vec![RatMatrix::zeros(r, c); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j].add_scaled(&a.kron(b), &Rat::one());
                }
            }
        }
        PolyMatrix::new(r, c, out)
    }

    /// The matrix polynomial `x -> M(x + c)`.
    pub fn shift(&self, c: &Rat) -> PolyMatrix {
        let n = self.coeffs.len();
        let mut out = vec![RatMatrix::zeros(self.rows, self.cols); n];
        // (x + c)^e = sum_t binom(e, t) c^(e-t) x^t
        for (e, m) in self.coeffs.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            let mut binom = Rat::one();
            for t in (0..=e).rev() {
                // coefficient binom(e, t) * c^(e - t)
                let f = &binom * &c.pow((e - t) as i32);
                out[t].add_scaled(m, &f);
                if t > 0 {
                    binom = binom * Rat::from(t) / Rat::from(e - t + 1);
                }
            }
        }
        PolyMatrix::new(self.rows, self.cols, out)
    }

    /// Index of the lowest non-zero coefficient (`None` if zero).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|m| !m.is_zero())
    }
}

/// A matrix of rational functions `num(x) / den(x)` with a scalar
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFnMatrix {
    pub num: PolyMatrix,
    pub den: Poly,
}

impl RatFnMatrix {
    pub fn new(num: PolyMatrix, den: Poly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(RatFnMatrix { num, den })
    }

    pub fn from_poly(num: PolyMatrix) -> Self {
        RatFnMatrix {
            num,
            den: Poly::one(),
        }
    }

    pub fn rows(&self) -> usize {
        self.num.rows()
    }

    pub fn cols(&self) -> usize {
        self.num.cols()
    }

    /// Value at a point, `None` if the denominator vanishes there.
    pub fn eval(&self, x: &Rat) -> Option<RatMatrix> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x).scale(&d.recip()))
    }

    pub fn mul(&self, o: &RatFnMatrix) -> RatFnMatrix {
        RatFnMatrix {
            num: self.num.mul(&o.num),
            den: &self.den * &o.den,
        }
    }

    pub fn add(&self, o: &RatFnMatrix) -> RatFnMatrix {
        if self.den == o.den {
            return RatFnMatrix {
                num: self.num.add(&o.num),
                den: self.den.clone(),
            };
        }
        RatFnMatrix {
            num: self.num.mul_poly(&o.den).add(&o.num.mul_poly(&self.den)),
            den: &self.den * &o.den,
        }
    }

    /// Leading Laurent coefficient at `point`: writes the function as
    /// `sum_{d >= order} C_d (x - point)^d` and returns `(order, C_order)`.
    pub fn laurent_leading(&self, point: &Rat) -> Result<(i64, RatMatrix), AlgebraError> {
        let num = self.num.shift(point);
        let den = self.den.shift(point);
        let vn = num.valuation().ok_or(AlgebraError::IdenticallyZero)?;
        let vd = den
            .coeffs()
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(AlgebraError::ZeroDenominator)?;
        let coeff = num.coeffs()[vn].scale(&den.coeffs()[vd].recip());
        Ok((vn as i64 - vd as i64, coeff))
    }
}
