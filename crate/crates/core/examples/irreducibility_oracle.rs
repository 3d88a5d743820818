//! Decide irreducibility of a tensor product by brute force and compare
//! with the combinatorial criterion.

use yangtensor::criteria::{thm34_irreducible, ModuleSpec};
use yangtensor::exactalg::Rat;
use yangtensor::yangian::{cocyclicity_oracle, cyclicity_oracle, irreducible_oracle_detailed, module_action};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for h in [Rat::new(1, 2), Rat::from(-1), Rat::from(1), Rat::from(2)] {
        let specs = vec![ModuleSpec::rectangle(2, 1, 2, Rat::zero()), ModuleSpec::vector(2, h.clone())];
        let m = module_action(&specs)?;
        let zeta = m.zeta();
        let v = irreducible_oracle_detailed(&m.gens);
        println!(
            "h = {h:>4}: oracle {} ({:?}), criterion {}, zeta cyclic {}, cocyclic {}",
            v.irreducible,
            v.method,
            thm34_irreducible(&specs)?,
            cyclicity_oracle(&m.gens, &zeta),
            cocyclicity_oracle(&m.gens, &zeta),
        );
    }
    Ok(())
}
