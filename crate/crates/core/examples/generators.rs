// Prints both generating systems for the swap group: the orbit power sums
// `J[mu]` with `|mu| <= h` and the resolvent coefficients `G[a;beta]`.

use invring::invariants::GeneratorStatus;
use invring::{
    galois_resolvent, group_closure, noether_generators, Error, GeneratorKey, RationalMatrix,
};

fn main() -> Result<(), Error> {
    let swap = RationalMatrix::from_ints(&[&[0, 1], &[1, 0]]);
    let group = group_closure(&[swap], None, 100)?;

    let system = noether_generators(&group)?;
    println!("orbit power sums, |mu| <= {}", system.order);
    for gen in &system.generators {
        let note = match &gen.status {
            GeneratorStatus::Distinct => String::new(),
            GeneratorStatus::Zero => "  (zero)".to_string(),
            GeneratorStatus::DuplicateOf(rep) => {
                format!("  (same as {})", GeneratorKey::J(rep.clone()))
            }
        };
        println!(
            "  {} = {}{}",
            GeneratorKey::J(gen.sum.mu.clone()),
            gen.sum.value,
            note
        );
    }

    let table = galois_resolvent(&group);
    println!("resolvent coefficients");
    for (key, value) in table.entries() {
        println!("  {} = {}", key, value);
    }
    Ok(())
}
