//! Combinatorial irreducibility and invertibility criteria, without any
//! matrices.

use yangtensor::criteria::{
    drinfeld_roots, thm23_noninvertible_set, thm23_report, thm33_report, thm34_report, x_set, ModuleSpec,
};
use yangtensor::exactalg::Rat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rect = ModuleSpec::rectangle(2, 1, 2, Rat::zero());
    println!("Drinfeld roots of the 2x1 rectangle: {:?}", drinfeld_roots(&rect)?.roots);
    println!("X-set: {:?}", x_set(&rect)?.values);

    for h in -3..=3 {
        let specs = [rect.clone(), ModuleSpec::vector(2, Rat::from(h))];
        let r34 = thm34_report(&specs)?;
        let r33 = thm33_report(&specs)?;
        println!("h = {h:>2}: rectangle criterion {:<11} sufficient condition {}", r34.verdict, r33.verdict);
    }

    println!("non-invertible h for alpha=(1), beta=(2): {:?}", thm23_noninvertible_set(&[1], &[2], 2));
    let a = ModuleSpec::reversed_young(&[1], 2, Rat::from(2));
    let b = ModuleSpec::young(&[2], 2, Rat::zero());
    println!("{}", serde_json::to_string_pretty(&thm23_report(&a, &b)?)?);
    Ok(())
}
