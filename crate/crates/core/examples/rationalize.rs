// Turns a rational invariant whose numerator and denominator are not
// themselves invariant into a quotient of polynomial invariants.

use invring::{
    group_closure, parse_polynomial, rationalize_invariant, Error, RationalInvariant,
    RationalMatrix,
};

fn main() -> Result<(), Error> {
    let swap = RationalMatrix::from_ints(&[&[0, 1], &[1, 0]]);
    let group = group_closure(&[swap], None, 100)?;

    // (x1 + x2) * x1 / x1 is invariant as a function, the parts are not
    let p = parse_polynomial("(x1 + x2)*x1", 2)?;
    let q = parse_polynomial("x1", 2)?;
    let w = RationalInvariant::new(p, q)?;
    println!("p/q with p = {}, q = {}", w.numerator, w.denominator);

    let r = rationalize_invariant(&group, &w)?;
    println!("P = {}", r.numerator);
    println!("Q = {}", r.denominator);
    println!("same function: {}", r.same_function(&w)?);
    println!(
        "P, Q invariant: {}",
        r.invariance_witness(&group)?.is_none()
    );
    Ok(())
}
