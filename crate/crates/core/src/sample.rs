//! Seeded random polynomials for property checks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poly::{ExponentVector, Polynomial};
use crate::rational::int;

/// Deterministic generator used by `selfcheck` and the test suites.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A polynomial in `n` variables with up to `terms` monomials of total
/// degree at most `max_degree` and integer coefficients in
/// `-bound..=bound`.
pub fn random_polynomial<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: u32,
    terms: usize,
    bound: i64,
) -> Polynomial {
    let mut out = Vec::with_capacity(terms);
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u32; n];
        for _ in 0..d {
            exps[rng.gen_range(0..n)] += 1;
        }
        let c = rng.gen_range(-bound..=bound);
        out.push((ExponentVector::new(exps), int(c)));
    }
    Polynomial::from_terms(n, out).expect("exponent vectors have length n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn respects_bounds_and_is_reproducible() {
        let a = random_polynomial(&mut rng(7), 3, 5, 10, 9);
        let b = random_polynomial(&mut rng(7), 3, 5, 10, 9);
        assert_eq!(a, b);
        assert!(a.total_degree().unwrap_or(0) <= 5);
        assert!(a.len() <= 10);
        assert_eq!(a.nvars(), 3);
    }
}
