//! The intertwiner of a (reversed Young, Young) pair: its rank over a
//! window of shifts, the intertwining identity and the Jucys–Murphy form.

use yangtensor::criteria::{thm23_noninvertible_set, ModuleSpec};
use yangtensor::exactalg::Rat;
use yangtensor::yangian::{check_intertwining, direct_product_form, intertwiner, jucys_murphy_form};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (alpha, beta) = ([1, 0], [2, 0]);
    println!("predicted non-invertible h: {:?}", thm23_noninvertible_set(&alpha, &beta, 2));
    for h in -3..=3 {
        let a = ModuleSpec::reversed_young(&alpha, 2, Rat::from(h));
        let b = ModuleSpec::young(&beta, 2, Rat::zero());
        let r = intertwiner(&a, &b)?;
        println!(
            "h = {h:>2}: rank {}/{} (order {}), intertwines: {}",
            r.rank(),
            r.dim,
            r.order,
            check_intertwining(&r, &a, &b)?
        );
    }
    let a = ModuleSpec::reversed_young(&alpha, 2, Rat::zero());
    let b = ModuleSpec::young(&beta, 2, Rat::zero());
    let (h, z) = (Rat::new(1, 3), Rat::new(2, 7));
    println!(
        "product form equals the Jucys–Murphy form: {}",
        jucys_murphy_form(&a, &b, &h, &z)? == direct_product_form(&a, &b, &h, &z)?
    );
    Ok(())
}
