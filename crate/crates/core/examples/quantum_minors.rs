//! Quantum minors of a realized tensor product: both orderings, the
//! central quantum determinant and the coproduct rule.

use yangtensor::criteria::ModuleSpec;
use yangtensor::exactalg::Rat;
use yangtensor::yangian::{
    abcd_series, coproduct_minor_check, determinant_is_central, minor_orderings_agree, module_action,
    DEFAULT_DIM_CAP,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs = vec![ModuleSpec::vector(3, Rat::zero()), ModuleSpec::vector(3, Rat::new(2, 3))];
    let m = module_action(&specs)?;
    println!("orderings agree for Q_(12),(23): {}", minor_orderings_agree(&m.gens, &[1, 2], &[2, 3])?);
    println!("quantum determinant is central: {}", determinant_is_central(&m.gens)?);
    let s = abcd_series(&m.gens, 1)?;
    println!("B_1(u) numerator degree: {:?}", s.b.num.degree());
    let points = [Rat::new(5, 2), Rat::new(-7, 3), Rat::from(9)];
    println!(
        "coproduct of Q_(12),(12): {}",
        coproduct_minor_check(&specs, &[1, 2], &[1, 2], &points, DEFAULT_DIM_CAP)?
    );
    Ok(())
}
