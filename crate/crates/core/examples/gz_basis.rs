//! Recover the Gelfand–Zetlin basis of an elementary module as joint
//! eigenlines and check the raising/lowering operators on it.

use yangtensor::criteria::ModuleSpec;
use yangtensor::exactalg::Rat;
use yangtensor::yangian::gz_eigenbasis_report;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for spec in [
        ModuleSpec::vector(2, Rat::new(1, 3)),
        ModuleSpec::young(&[2, 1], 2, Rat::zero()),
        ModuleSpec::young(&[2, 1, 0], 3, Rat::new(1, 2)),
    ] {
        let r = gz_eigenbasis_report(&spec)?;
        println!(
            "{:?}/{:?} N={}: dim {}, {} schemes, eigenvalues match {}, {} transitions, passed {}",
            spec.lambda,
            spec.mu,
            spec.n,
            r.dim,
            r.schemes,
            r.eigenvalues_match,
            r.transitions,
            r.passed()
        );
    }
    Ok(())
}
