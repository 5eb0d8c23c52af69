// Builds the resolvent of C3 in the combined ring `z, u, x` and checks
// that its coefficients reassemble the product and that the derivative
// identity vanishes for every coordinate and group element.

use invring::invariants::{resolvent_product, CombinedRing};
use invring::{
    galois_resolvent, group_closure, resolvent_derivative_identity, Error, RationalMatrix,
};

fn main() -> Result<(), Error> {
    let c3 = group_closure(
        &[RationalMatrix::from_ints(&[&[0, -1], &[1, -1]])],
        None,
        100,
    )?;
    let ring = CombinedRing::new(c3.dim());
    let names = ring.names();

    let phi = resolvent_product(&c3);
    println!("Phi = {}", phi.display_with(&names));
    let table = galois_resolvent(&c3);
    println!(
        "{} nonzero coefficients, reassembled: {}",
        table.len(),
        table.reconstruct() == phi
    );

    for i in 1..=c3.dim() {
        for k in 1..=c3.order() {
            let d = resolvent_derivative_identity(&c3, i, k)?;
            println!("i = {}, k = {}: {}", i, k, d);
        }
    }
    Ok(())
}
