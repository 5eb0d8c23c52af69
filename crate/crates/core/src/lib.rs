//! Exact invariant rings of finite groups of rational matrices.
//!
//! Given generators of a finite matrix group, the crate builds the full
//! element list, averages polynomials over the group, constructs two finite
//! generating systems for the ring of polynomial invariants (orbit power
//! sums of degree at most the group order, and the coefficients of the
//! resolvent `prod_k (z + u . A_k x)`), and rewrites any invariant in either
//! system. Rewrites are returned as certificates that are checked by
//! expanding them back out. All arithmetic is over exact rationals.
//!
//! ```
//! use invring::{group_closure, parse_polynomial, rewrite_in_j, RationalMatrix};
//!
//! let swap = RationalMatrix::from_ints(&[&[0, 1], &[1, 0]]);
//! let group = group_closure(&[swap], None, 100).unwrap();
//! let f = parse_polynomial("x1^3 + x2^3", 2).unwrap();
//! let cert = rewrite_in_j(&group, &f).unwrap();
//! assert_eq!(cert.to_string(), "J[2,0]*J[1,0] - (1/2)*J[1,1]*J[1,0]");
//! ```

pub mod cli;
mod error;
pub mod group;
pub mod invariants;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod sample;

pub use cli::parse_polynomial;
pub use error::{Error, Result};
pub use group::{act, group_closure, MatrixGroup, DEFAULT_CLOSURE_CAP};
pub use invariants::{
    galois_resolvent, invariance_witness, is_invariant, j_to_g, noether_generators,
    orbit_power_sum, rationalize_invariant, reduce_high_j, resolvent_derivative_identity,
    rewrite_in_g, rewrite_in_j, reynolds, Basis, GeneratorKey, GeneratorPolynomial, JSystem,
    OrbitPowerSum, RationalInvariant, ResolventKey, ResolventTable, Rewriter,
};
pub use matrix::RationalMatrix;
pub use poly::{ExponentVector, Polynomial};
pub use rational::Rational;
