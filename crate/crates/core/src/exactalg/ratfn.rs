//! Scalar rational functions in one variable.

use super::{Poly, Rat};

/// `num(x) / den(x)` with a non-zero denominator; equality is decided by
/// cross-multiplication, so no normalization is needed.
#[derive(Clone, Debug)]
pub struct RatFn {
    pub num: Poly,
    pub den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFn { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFn::new(p, Poly::one())
    }

    pub fn one() -> Self {
        RatFn::from_poly(Poly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, o: &RatFn) -> RatFn {
        RatFn::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn div(&self, o: &RatFn) -> RatFn {
        assert!(!o.num.is_zero(), "division by the zero function");
        RatFn::new(&self.num * &o.den, &self.den * &o.num)
    }

    /// `x -> f(x + c)`.
    pub fn shift(&self, c: &Rat) -> RatFn {
        RatFn::new(self.num.shift(c), self.den.shift(c))
    }

    /// Value at a point, `None` at a zero of the stored denominator.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// Value of the continuous extension at `x`: the common factors
    /// `(t − x)` are cancelled first.  `None` if the function has a pole.
    pub fn limit(&self, x: &Rat) -> Option<Rat> {
        if self.num.is_zero() {
            return Some(Rat::zero());
        }
        let vn = self.num.root_multiplicity(x);
        let vd = self.den.root_multiplicity(x);
        if vn > vd {
            return Some(Rat::zero());
        }
        if vn < vd {
            return None;
        }
        let root = Poly::from_roots(&vec![x.clone(); vn]);
        let n = self.num.div_rem(&root).0;
        let d = self.den.div_rem(&root).0;
        Some(n.eval(x) / d.eval(x))
    }
}

impl PartialEq for RatFn {
    fn eq(&self, o: &RatFn) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl Eq for RatFn {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_and_limits() {
        let x = Poly::x();
        let a = RatFn::new(&x * &x, x.clone());
        assert_eq!(a, RatFn::from_poly(x.clone()));
        assert_eq!(a.limit(&Rat::zero()), Some(Rat::zero()));
        let b = RatFn::new(Poly::linear(Rat::from(1)), Poly::linear(Rat::from(1)));
        assert_eq!(b.limit(&Rat::from(-1)), Some(Rat::one()));
        assert_eq!(RatFn::new(Poly::one(), x).limit(&Rat::zero()), None);
    }
}
