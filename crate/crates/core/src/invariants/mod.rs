//! Polynomial invariants of a finite matrix group.
//!
//! Averaging over the group ([`reynolds`]) projects onto the invariant ring.
//! Two finite generating systems are built from the element list: the orbit
//! power sums `J[mu]` with `|mu| <= h` ([`noether_generators`]) and the
//! coefficients of the resolvent `prod_k (z + u . A_k x)`
//! ([`galois_resolvent`]). Rewrites into either system come back as
//! [`GeneratorPolynomial`] certificates that can be realized and compared
//! against the input.
//!
//! Certificate coefficients are rational: averaging divides by `h` and the
//! power-sum recursions divide by integers.

mod certificate;
mod quotient;
mod resolvent;
mod rewrite;

use std::collections::HashMap;

pub use certificate::{Basis, GeneratorKey, GeneratorMonomial, GeneratorPolynomial, ResolventKey};
pub use quotient::{rationalize_invariant, RationalInvariant};
pub use resolvent::{
    galois_resolvent, resolvent_derivative_identity, resolvent_product, CombinedRing,
    ResolventTable,
};
pub use rewrite::{j_to_g, newton_step, reduce_high_j, rewrite_in_g, rewrite_in_j, Rewriter};

use crate::error::{Error, Result};
use crate::group::{act, MatrixGroup};
use crate::poly::{Accumulator, ExponentVector, Polynomial};
use crate::rational::Rational;

/// `(1/h) * sum_k f(A_k x)`.
pub fn reynolds(group: &MatrixGroup, f: &Polynomial) -> Result<Polynomial> {
    Error::check_dim(group.dim(), f.nvars())?;
    let mut acc = Accumulator::new(f.nvars());
    for g in group.elements() {
        acc.add_poly(&act(g, f)?);
    }
    let h = Rational::from_integer(group.order().into());
    Ok(acc.finish().scale(&h.recip()))
}

/// Zero-based index of the first element that moves `f`, if any.
pub fn invariance_witness(group: &MatrixGroup, f: &Polynomial) -> Result<Option<usize>> {
    Error::check_dim(group.dim(), f.nvars())?;
    for (k, g) in group.elements().iter().enumerate() {
        if act(g, f)? != *f {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// True when `f(A_k x) = f(x)` for every element (not just generators).
pub fn is_invariant(group: &MatrixGroup, f: &Polynomial) -> Result<bool> {
    Ok(invariance_witness(group, f)?.is_none())
}

/// `J[mu] = sum_k prod_i ((A_k x)_i)^mu_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPowerSum {
    pub mu: ExponentVector,
    pub value: Polynomial,
}

pub fn orbit_power_sum(group: &MatrixGroup, mu: &ExponentVector) -> Result<OrbitPowerSum> {
    Error::check_dim(group.dim(), mu.len())?;
    if mu.is_constant() {
        return Err(Error::Domain(
            "orbit power sum needs a nonzero exponent vector".into(),
        ));
    }
    let x_mu = Polynomial::monomial(Rational::from_integer(1.into()), mu.clone());
    let mut acc = Accumulator::new(group.dim());
    for g in group.elements() {
        acc.add_poly(&act(g, &x_mu)?);
    }
    Ok(OrbitPowerSum {
        mu: mu.clone(),
        value: acc.finish(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorStatus {
    Distinct,
    Zero,
    /// Same value as an earlier generator.
    DuplicateOf(ExponentVector),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JGenerator {
    pub sum: OrbitPowerSum,
    pub status: GeneratorStatus,
}

/// All `J[mu]` with `1 <= |mu| <= h`, by increasing degree and, within a
/// degree, from `x1^d` downwards in lex order. Zero and repeated values are
/// kept and flagged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JSystem {
    pub order: usize,
    pub generators: Vec<JGenerator>,
}

impl JSystem {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn get(&self, mu: &ExponentVector) -> Option<&JGenerator> {
        self.generators.iter().find(|g| &g.sum.mu == mu)
    }
}

pub fn noether_generators(group: &MatrixGroup) -> Result<JSystem> {
    let n = group.dim();
    let h = group.order() as u32;
    let mut generators = Vec::new();
    let mut first_seen: HashMap<Polynomial, ExponentVector> = HashMap::new();
    for d in 1..=h {
        for mu in ExponentVector::all_of_degree(n, d) {
            let sum = orbit_power_sum(group, &mu)?;
            let status = if sum.value.is_zero() {
                GeneratorStatus::Zero
            } else if let Some(rep) = first_seen.get(&sum.value) {
                GeneratorStatus::DuplicateOf(rep.clone())
            } else {
                first_seen.insert(sum.value.clone(), mu.clone());
                GeneratorStatus::Distinct
            };
            generators.push(JGenerator { sum, status });
        }
    }
    Ok(JSystem {
        order: group.order(),
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::group_closure;
    use crate::matrix::RationalMatrix;
    use crate::rational::{frac, int};

    fn grp(rows: &[&[i64]]) -> MatrixGroup {
        group_closure(&[RationalMatrix::from_ints(rows)], None, 100).unwrap()
    }

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn reynolds_examples() {
        let c2 = grp(&[&[-1]]);
        assert!(reynolds(&c2, &x(1, 0)).unwrap().is_zero());
        assert_eq!(reynolds(&c2, &x(1, 0).pow(2)).unwrap(), x(1, 0).pow(2));
        let s2 = grp(&[&[0, 1], &[1, 0]]);
        let r = reynolds(&s2, &x(2, 0).pow(2)).unwrap();
        assert_eq!(r, (&x(2, 0).pow(2) + &x(2, 1).pow(2)).scale(&frac(1, 2)));
        assert!(reynolds(&s2, &x(3, 0)).is_err());
    }

    #[test]
    fn invariance_examples() {
        let s2 = grp(&[&[0, 1], &[1, 0]]);
        assert!(is_invariant(&s2, &(&x(2, 0) + &x(2, 1))).unwrap());
        assert_eq!(
            invariance_witness(&s2, &(&x(2, 0) - &x(2, 1))).unwrap(),
            Some(1)
        );
        let c3 = grp(&[&[0, -1], &[1, -1]]);
        let q = &(&x(2, 0).pow(2) + &x(2, 1).pow(2)) - &(&x(2, 0) * &x(2, 1));
        assert!(is_invariant(&c3, &q).unwrap());
        assert!(!is_invariant(&c3, &x(2, 0)).unwrap());
    }

    #[test]
    fn orbit_sum_examples() {
        let s2 = grp(&[&[0, 1], &[1, 0]]);
        let j11 = orbit_power_sum(&s2, &[1, 1].into()).unwrap();
        assert_eq!(j11.value, (&x(2, 0) * &x(2, 1)).scale(&int(2)));
        let j20 = orbit_power_sum(&s2, &[2, 0].into()).unwrap();
        assert_eq!(j20.value, &x(2, 0).pow(2) + &x(2, 1).pow(2));
        let triv = MatrixGroup::trivial(2);
        let j31 = orbit_power_sum(&triv, &[3, 1].into()).unwrap();
        assert_eq!(j31.value, &x(2, 0).pow(3) * &x(2, 1));
        assert!(orbit_power_sum(&s2, &[0, 0].into()).is_err());
        assert!(orbit_power_sum(&s2, &[1].into()).is_err());
    }

    #[test]
    fn generator_tables() {
        let c2 = grp(&[&[-1]]);
        let sys = noether_generators(&c2).unwrap();
        assert_eq!(sys.len(), 2);
        assert_eq!(sys.generators[0].status, GeneratorStatus::Zero);
        assert_eq!(sys.generators[1].sum.value, x(1, 0).pow(2).scale(&int(2)));

        let triv = MatrixGroup::trivial(1);
        let sys = noether_generators(&triv).unwrap();
        assert_eq!(sys.len(), 1);
        assert_eq!(sys.generators[0].sum.value, x(1, 0));

        let s2 = grp(&[&[0, 1], &[1, 0]]);
        let sys = noether_generators(&s2).unwrap();
        // C(2+2, 2) - 1
        assert_eq!(sys.len(), 5);
        let mus: Vec<_> = sys
            .generators
            .iter()
            .map(|g| g.sum.mu.as_slice().to_vec())
            .collect();
        assert_eq!(
            mus,
            vec![vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(
            sys.generators[1].status,
            GeneratorStatus::DuplicateOf([1, 0].into())
        );
        assert_eq!(
            sys.generators[4].status,
            GeneratorStatus::DuplicateOf([2, 0].into())
        );
        assert_eq!(sys.generators[3].status, GeneratorStatus::Distinct);
    }
}
