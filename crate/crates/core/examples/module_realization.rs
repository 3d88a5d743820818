//! Realize an elementary module inside the image of a Young symmetrizer,
//! then check its singular vector and Drinfeld polynomials.

use yangtensor::criteria::{drinfeld_roots, ModuleSpec};
use yangtensor::exactalg::Rat;
use yangtensor::yangian::{
    a_eigenvalues, check_defining_relations, default_relation_pairs, drinfeld_check, module_action, realize,
    singular_vector, young_symmetrizer, zeta_matches_top_scheme,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = ModuleSpec::young(&[2, 1, 0], 3, Rat::new(1, 3));
    let d = spec.diagram()?;
    let y = young_symmetrizer(&d)?;
    println!("symmetrizer on a {}-dimensional space has rank {}", y.ambient_dim(), y.rank());

    let m = module_action(std::slice::from_ref(&spec))?;
    println!("realized dimension {}", m.dim());
    println!("defining relations hold: {}", check_defining_relations(&m.gens, &default_relation_pairs(&m.gens)));

    let zeta = singular_vector(&m)?;
    for (k, e) in a_eigenvalues(&m.gens, &zeta)?.iter().enumerate() {
        println!("A_{k}(u) acts on zeta by {e:?}");
    }
    println!("Drinfeld polynomials match: {}", drinfeld_check(&m.gens, &zeta, &drinfeld_roots(&spec)?)?);
    println!("eigenvalues match the top scheme: {}", zeta_matches_top_scheme(&realize(&spec)?)?);
    Ok(())
}
