use crate::error::{Error, Result};
use crate::group::{act, MatrixGroup};
use crate::poly::Polynomial;

/// A quotient `numerator / denominator` of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInvariant {
    pub numerator: Polynomial,
    pub denominator: Polynomial,
}

impl RationalInvariant {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        Error::check_dim(numerator.nvars(), denominator.nvars())?;
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalInvariant {
            numerator,
            denominator,
        })
    }

    /// Same rational function: `p * q' = q * p'`.
    pub fn same_function(&self, other: &RationalInvariant) -> Result<bool> {
        let lhs = self.numerator.try_mul(&other.denominator)?;
        let rhs = self.denominator.try_mul(&other.numerator)?;
        Ok(lhs == rhs)
    }

    /// First element `A_k` (zero-based) with `p(A_k x) q(x) != p(x) q(A_k x)`.
    pub fn invariance_witness(&self, group: &MatrixGroup) -> Result<Option<usize>> {
        Error::check_dim(group.dim(), self.numerator.nvars())?;
        for (k, g) in group.elements().iter().enumerate() {
            let lhs = &act(g, &self.numerator)? * &self.denominator;
            let rhs = &self.numerator * &act(g, &self.denominator)?;
            if lhs != rhs {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }
}

/// Multiplies numerator and denominator by every conjugate `q(A_k x)` of the
/// denominator other than `q` itself. Both parts of the result are
/// polynomial invariants. Common factors are not cancelled.
pub fn rationalize_invariant(
    group: &MatrixGroup,
    w: &RationalInvariant,
) -> Result<RationalInvariant> {
    if w.denominator.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if let Some(witness) = w.invariance_witness(group)? {
        return Err(Error::NotInvariantFunction { witness });
    }
    let mut conjugates = Polynomial::one(group.dim());
    for g in group.elements().iter().filter(|g| !g.is_identity()) {
        conjugates = &conjugates * &act(g, &w.denominator)?;
    }
    Ok(RationalInvariant {
        numerator: &w.numerator * &conjugates,
        denominator: &w.denominator * &conjugates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::group_closure;
    use crate::invariants::is_invariant;
    use crate::matrix::RationalMatrix;
    use crate::rational::int;

    fn grp(rows: &[&[i64]]) -> MatrixGroup {
        group_closure(&[RationalMatrix::from_ints(rows)], None, 100).unwrap()
    }

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn swap_example() {
        let s2 = grp(&[&[0, 1], &[1, 0]]);
        let (x1, x2) = (x(2, 0), x(2, 1));
        let w = RationalInvariant::new(&x1 * &(&x1 + &x2), x1.clone()).unwrap();
        let r = rationalize_invariant(&s2, &w).unwrap();
        assert_eq!(r.numerator, &(&x1 * &x2) * &(&x1 + &x2));
        assert_eq!(r.denominator, &x1 * &x2);
        assert!(is_invariant(&s2, &r.numerator).unwrap());
        assert!(is_invariant(&s2, &r.denominator).unwrap());
        assert!(r.same_function(&w).unwrap());
    }

    #[test]
    fn trivial_group_leaves_quotient_alone() {
        let t = MatrixGroup::trivial(2);
        let w =
            RationalInvariant::new(x(2, 0), &x(2, 1) + &Polynomial::constant(2, int(1))).unwrap();
        assert_eq!(rationalize_invariant(&t, &w).unwrap(), w);
    }

    #[test]
    fn sign_group_example() {
        let c2 = grp(&[&[-1]]);
        let x1 = x(1, 0);
        let w = RationalInvariant::new(x1.pow(3), x1.clone()).unwrap();
        let r = rationalize_invariant(&c2, &w).unwrap();
        assert_eq!(r.numerator, -&x1.pow(4));
        assert_eq!(r.denominator, -&x1.pow(2));
    }

    #[test]
    fn errors() {
        let s2 = grp(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            RationalInvariant::new(x(2, 0), Polynomial::zero(2)),
            Err(Error::ZeroDenominator)
        );
        let w = RationalInvariant::new(x(2, 0), x(2, 1).pow(2)).unwrap();
        assert_eq!(
            rationalize_invariant(&s2, &w),
            Err(Error::NotInvariantFunction { witness: 1 })
        );
        let bad = RationalInvariant {
            numerator: x(2, 0),
            denominator: Polynomial::zero(2),
        };
        assert_eq!(
            rationalize_invariant(&s2, &bad),
            Err(Error::ZeroDenominator)
        );
    }
}
