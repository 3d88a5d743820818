//! Univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rat;

/// A polynomial `c_0 + c_1 x + ... + c_n x^n`, coefficients stored in
/// ascending order with no trailing zeros (the zero polynomial is empty).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    /// The linear polynomial `x + c`.
    pub fn linear(c: Rat) -> Self {
        Poly::new(vec![c, Rat::one()])
    }

    /// `prod (x - r)` over the given roots.
    pub fn from_roots(roots: &[Rat]) -> Self {
        roots
            .iter()
            .fold(Poly::one(), |acc, r| &acc * &Poly::linear(-r))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// The polynomial `x -> p(x + c)`.
    pub fn shift(&self, c: &Rat) -> Poly {
        // Horner in the polynomial ring.
        let lin = Poly::linear(c.clone());
        let mut acc = Poly::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(a.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from(i))
                .collect(),
        )
    }

    /// Monic associate (zero stays zero).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Euclidean division: `(q, r)` with `self = q * d + r`, `deg r < deg d`.
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.leading().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let c = &r[top] * &lead_inv;
            let shift = top - dd;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[shift + i] -= &c * dc;
                }
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(Rat::is_zero) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Squarefree part `p / gcd(p, p')`, monic.
    pub fn squarefree(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = Poly::gcd(self, &self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Multiplicity of `r` as a root (0 if not a root; the zero polynomial
    /// reports `usize::MAX`).
    pub fn root_multiplicity(&self, r: &Rat) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Poly::linear(-r);
        let mut p = self.clone();
        let mut m = 0;
        loop {
            let (q, rem) = p.div_rem(&lin);
            if !rem.is_zero() {
                return m;
            }
            m += 1;
            p = q;
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})u")?,
                _ => write!(f, "({c})u^{i}")?,
            }
        }
        Ok(())
    }
}
