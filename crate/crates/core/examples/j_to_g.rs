// Converts orbit power sum certificates into the resolvent basis for the
// cyclic group of order 3.

use invring::{group_closure, parse_polynomial, reynolds, Error, RationalMatrix, Rewriter};

fn main() -> Result<(), Error> {
    let c3 = group_closure(
        &[RationalMatrix::from_ints(&[&[0, -1], &[1, -1]])],
        None,
        100,
    )?;
    let mut rw = Rewriter::new(&c3)?;
    for text in ["x1^2 - x1*x2 + x2^2", "x1^3"] {
        let f = reynolds(&c3, &parse_polynomial(text, 2)?)?;
        let j = rw.rewrite_in_j(&f)?;
        let g = rw.j_to_g(&j)?;
        println!("f = {}", f);
        println!("  J: {}", j);
        println!("  G: {}", g);
        println!(
            "  both realize f: {}",
            rw.realize(&j)? == f && rw.realize(&g)? == f
        );
    }
    Ok(())
}
