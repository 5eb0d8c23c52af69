// Closes generator sets into finite groups and shows the cap on an
// infinite one.

use invring::{group_closure, Error, RationalMatrix};

fn main() -> Result<(), Error> {
    let t12 = RationalMatrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let t23 = RationalMatrix::from_ints(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
    let s3 = group_closure(&[t12, t23], None, 100)?;
    println!("S3 from two transpositions: order {}", s3.order());
    for (k, m) in s3.elements().iter().enumerate() {
        println!("  A{} = {}", k + 1, m);
    }

    let c3 = group_closure(
        &[RationalMatrix::from_ints(&[&[0, -1], &[1, -1]])],
        None,
        100,
    )?;
    println!("companion matrix of z^2 + z + 1: order {}", c3.order());

    let shear = RationalMatrix::from_ints(&[&[1, 1], &[0, 1]]);
    match group_closure(&[shear], None, 500) {
        Err(e @ Error::NotFiniteWithinCap { .. }) => println!("shear: {}", e),
        other => println!("shear: unexpected {:?}", other.map(|g| g.order())),
    }
    Ok(())
}
