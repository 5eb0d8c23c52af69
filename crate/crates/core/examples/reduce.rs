// Newton reduction of power sums above the order, both one step at a time
// and all the way down.

use invring::{group_closure, Error, ExponentVector, GeneratorKey, RationalMatrix, Rewriter};

fn main() -> Result<(), Error> {
    let swap = RationalMatrix::from_ints(&[&[0, 1], &[1, 0]]);
    let group = group_closure(&[swap], None, 100)?;
    let mut rw = Rewriter::new(&group)?;

    let mu = ExponentVector::from([3, 0]);
    println!(
        "one step:  {} = {}",
        GeneratorKey::J(mu.clone()),
        rw.newton_step(&mu)?
    );

    for mu in [[3, 0], [2, 2], [5, 1]] {
        let mu = ExponentVector::from(mu);
        let cert = rw.reduce_high_j(&mu)?;
        let ok = rw.realize(&cert)? == *rw.orbit_sum(&mu)?;
        println!("{} = {}    verified: {}", GeneratorKey::J(mu), cert, ok);
    }
    Ok(())
}
