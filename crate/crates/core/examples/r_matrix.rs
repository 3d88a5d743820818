//! The Yang R-matrix: unitarity and the Yang–Baxter equation in exact
//! arithmetic.

use yangtensor::exactalg::{Rat, RatMatrix};
use yangtensor::yangian::{yang_r, yang_r_on};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (u, v, w) = (Rat::new(1, 2), Rat::new(-2, 3), Rat::new(5, 7));
    for n in [2, 3] {
        let r = |a, b, x: &Rat, y: &Rat| yang_r_on(n, 3, a, b, x, y);
        let lhs = &(&r(0, 1, &u, &v)? * &r(0, 2, &u, &w)?) * &r(1, 2, &v, &w)?;
        let rhs = &(&r(1, 2, &v, &w)? * &r(0, 2, &u, &w)?) * &r(0, 1, &u, &v)?;
        println!("N = {n}: Yang–Baxter holds: {}", lhs == rhs);
        let d = &u - &v;
        let unitary = &yang_r(n, &u, &v)? * &yang_r(n, &v, &u)?
            == RatMatrix::scalar(n * n, &(&Rat::one() - &(&d * &d).recip()));
        println!("N = {n}: R(u,v)R(v,u) = 1 - (u-v)^-2: {unitary}");
    }
    println!("R(u,u) is rejected: {}", yang_r(2, &u, &u).is_err());
    Ok(())
}
