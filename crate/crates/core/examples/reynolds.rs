// Averages a few polynomials over the cyclic group of order 4 acting by
// quarter turns.

use invring::{group_closure, is_invariant, parse_polynomial, reynolds, Error, RationalMatrix};

fn main() -> Result<(), Error> {
    let rot = RationalMatrix::from_ints(&[&[0, -1], &[1, 0]]);
    let c4 = group_closure(&[rot], None, 100)?;
    for text in ["x1", "x1^2", "x1^3*x2", "x1^4 + 2*x1*x2"] {
        let f = parse_polynomial(text, 2)?;
        let avg = reynolds(&c4, &f)?;
        println!(
            "R({}) = {}    invariant: {}",
            f,
            avg,
            is_invariant(&c4, &avg)?
        );
    }
    Ok(())
}
