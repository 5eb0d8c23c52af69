// Rewrites invariants of S3 in the orbit power sums and checks each
// certificate by expanding it.

use invring::{group_closure, parse_polynomial, reynolds, Error, RationalMatrix, Rewriter};

fn main() -> Result<(), Error> {
    let t12 = RationalMatrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let t23 = RationalMatrix::from_ints(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
    let s3 = group_closure(&[t12, t23], None, 100)?;
    let mut rw = Rewriter::new(&s3)?;

    let disc = parse_polynomial("((x1 - x2)*(x1 - x3)*(x2 - x3))^2", 3)?;
    let avg = reynolds(&s3, &parse_polynomial("x1^4*x2^3 - 2*x3^7", 3)?)?;
    for f in [parse_polynomial("x1*x2*x3", 3)?, disc, avg] {
        let cert = rw.rewrite_in_j(&f)?;
        let ok = rw.realize(&cert)? == f;
        println!("{}", f);
        println!("  = {}", cert);
        println!(
            "  {} terms, keys up to degree {}, verified: {}",
            cert.len(),
            cert.max_key_degree(),
            ok
        );
    }
    Ok(())
}
