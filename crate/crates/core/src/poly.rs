//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] is a map from [`ExponentVector`] to nonzero [`Rational`]
//! coefficients together with an explicit variable count, so the zero
//! polynomial still knows which ring it lives in. Monomials are ordered
//! graded-lexicographically (higher total degree first, ties broken by
//! lex with `x1 > x2 > ...`), and that order drives printing.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;

/// Exponents of one monomial, one entry per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        ExponentVector(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Componentwise sum. Panics if the lengths differ.
    pub fn plus(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.len(), other.len(), "exponent vector length mismatch");
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, or `None` if `other` does not divide `self`.
    pub fn minus(&self, other: &ExponentVector) -> Option<ExponentVector> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    /// All exponent vectors of length `n` and total degree exactly `d`, in
    /// descending graded-lex order (`x1^d` first).
    pub fn all_of_degree(n: usize, d: u32) -> Vec<ExponentVector> {
        fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
            if prefix.len() + 1 == n {
                prefix.push(d);
                out.push(ExponentVector(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=d).rev() {
                prefix.push(e);
                go(n, d - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(ExponentVector(Vec::new()));
            }
            return out;
        }
        go(n, d, &mut Vec::with_capacity(n), &mut out);
        out
    }

    /// Exponent vectors `beta <= self` (componentwise) with `|beta| = d`.
    pub fn sub_vectors_of_degree(&self, d: u32) -> Vec<ExponentVector> {
        fn go(bound: &[u32], d: u32, prefix: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
            let i = prefix.len();
            if i == bound.len() {
                if d == 0 {
                    out.push(ExponentVector(prefix.clone()));
                }
                return;
            }
            let rest: u32 = bound[i + 1..].iter().sum();
            let hi = bound[i].min(d);
            let lo = d.saturating_sub(rest);
            for e in (lo..=hi).rev() {
                prefix.push(e);
                go(bound, d - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if d <= self.degree() {
            go(&self.0, d, &mut Vec::with_capacity(self.len()), &mut out);
        }
        out
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(c, ExponentVector::zeros(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable `x_{i+1}` (zero-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Rational::one(), ExponentVector::unit(nvars, i))
    }

    pub fn monomial(c: Rational, exponents: ExponentVector) -> Self {
        let nvars = exponents.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        Polynomial { nvars, terms }
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, merging
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut acc = Accumulator::new(nvars);
        for (e, c) in terms {
            Error::check_dim(nvars, e.len())?;
            acc.add_term(e, c);
        }
        Ok(acc.finish())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(ExponentVector::degree)
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.degree() == d)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&ExponentVector::zeros(self.nvars))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coefficient_of(&self, mu: &ExponentVector) -> Result<Rational> {
        Error::check_dim(self.nvars, mu.len())?;
        Ok(self.terms.get(mu).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        Error::check_dim(self.nvars, other.nvars)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_into(&mut terms, e, c);
        }
        Ok(Polynomial {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        Error::check_dim(self.nvars, other.nvars)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_into(&mut terms, e, &-c);
        }
        Ok(Polynomial {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        Error::check_dim(self.nvars, other.nvars)?;
        let mut acc = Accumulator::new(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                acc.add_term(e1.plus(e2), c1 * c2);
            }
        }
        Ok(acc.finish())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `p(M x)`: substitutes `x_i <- sum_j M[i][j] x_j` for every variable.
    pub fn linear_substitute(&self, m: &RationalMatrix) -> Result<Polynomial> {
        Error::check_dim(self.nvars, m.dim())?;
        let n = self.nvars;

        if let Some(mapping) = m.monomial_form() {
            // each x_i goes to a scalar multiple of a single variable
            let mut acc = Accumulator::new(n);
            for (e, c) in &self.terms {
                let mut exps = vec![0u32; n];
                let mut coeff = c.clone();
                for (i, &k) in e.as_slice().iter().enumerate() {
                    if k > 0 {
                        let (j, ref s) = mapping[i];
                        exps[j] += k;
                        coeff *= num_traits::pow(s.clone(), k as usize);
                    }
                }
                acc.add_term(ExponentVector(exps), coeff);
            }
            return Ok(acc.finish());
        }

        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                let terms = (0..n).map(|j| (ExponentVector::unit(n, j), m.get(i, j).clone()));
                Polynomial::from_terms(n, terms).expect("unit vectors have matching length")
            })
            .collect();
        let mut max_exp = vec![0u32; n];
        for e in self.terms.keys() {
            for (i, &k) in e.as_slice().iter().enumerate() {
                max_exp[i] = max_exp[i].max(k);
            }
        }
        let powers: Vec<PowerCache> = images
            .into_iter()
            .zip(&max_exp)
            .map(|(y, &k)| PowerCache::new(y, k))
            .collect();

        let mut acc = Accumulator::new(n);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(n, c.clone());
            for (i, &k) in e.as_slice().iter().enumerate() {
                if k > 0 {
                    term = &term * powers[i].get(k);
                }
            }
            acc.add_poly(&term);
        }
        Ok(acc.finish())
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        Error::check_dim(self.nvars, point.len())?;
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, &k) in point.iter().zip(e.as_slice()) {
                if k > 0 {
                    v *= num_traits::pow(x.clone(), k as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Partial derivative with respect to variable `var` (zero-based).
    pub fn derivative(&self, var: usize) -> Result<Polynomial> {
        if var >= self.nvars {
            return Err(Error::IndexOutOfRange {
                what: "variable",
                index: var + 1,
                max: self.nvars,
            });
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e.get(var);
            if k > 0 {
                let mut exps = e.0.clone();
                exps[var] -= 1;
                terms.insert(ExponentVector(exps), c * Rational::from_integer(k.into()));
            }
        }
        Ok(Polynomial {
            nvars: self.nvars,
            terms,
        })
    }

    /// Replaces variable `var` (zero-based) by the polynomial `q`.
    pub fn substitute_var(&self, var: usize, q: &Polynomial) -> Result<Polynomial> {
        Error::check_dim(self.nvars, q.nvars)?;
        if var >= self.nvars {
            return Err(Error::IndexOutOfRange {
                what: "variable",
                index: var + 1,
                max: self.nvars,
            });
        }
        let max_k = self.terms.keys().map(|e| e.get(var)).max().unwrap_or(0);
        let powers = PowerCache::new(q.clone(), max_k);
        let mut acc = Accumulator::new(self.nvars);
        for (e, c) in &self.terms {
            let k = e.get(var);
            let mut rest = e.0.clone();
            rest[var] = 0;
            let mono = Polynomial::monomial(c.clone(), ExponentVector(rest));
            if k == 0 {
                acc.add_poly(&mono);
            } else {
                acc.add_poly(&(&mono * powers.get(k)));
            }
        }
        Ok(acc.finish())
    }

    /// Substitutes `values[i]` (all in one common ring) for variable `i`.
    /// Nested Horner evaluation, one variable at a time.
    pub fn compose(&self, values: &[Polynomial]) -> Result<Polynomial> {
        Error::check_dim(self.nvars, values.len())?;
        let target = match values.first() {
            Some(v) => v.nvars,
            None => 0,
        };
        for v in values {
            Error::check_dim(target, v.nvars)?;
        }
        let terms: Vec<(&[u32], &Rational)> =
            self.terms.iter().map(|(e, c)| (e.as_slice(), c)).collect();
        let mut caches: Vec<HashMap<u32, Polynomial>> = vec![HashMap::new(); values.len()];
        Ok(horner(&terms, 0, values, target, &mut caches))
    }

    /// Re-embeds into a ring with `nvars` variables, sending variable `i`
    /// to variable `offset + i`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Polynomial {
        assert!(offset + self.nvars <= nvars, "embedding does not fit");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut exps = vec![0; nvars];
                exps[offset..offset + self.nvars].copy_from_slice(&e.0);
                (ExponentVector(exps), c.clone())
            })
            .collect();
        Polynomial { nvars, terms }
    }

    /// Canonical text with custom variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayWith { poly: self, names }
    }

    fn write_with(
        &self,
        f: &mut fmt::Formatter<'_>,
        name: &dyn Fn(usize) -> String,
    ) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in e.as_slice().iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(name(i)),
                    _ => factors.push(format!("{}^{}", name(i), k)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

struct DisplayWith<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for DisplayWith<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.write_with(f, &|i| self.names[i].clone())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, &|i| format!("x{}", i + 1))
    }
}

fn cached_power<'a>(
    cache: &'a mut HashMap<u32, Polynomial>,
    base: &Polynomial,
    k: u32,
) -> &'a Polynomial {
    cache.entry(k).or_insert_with(|| base.pow(k))
}

fn horner(
    terms: &[(&[u32], &Rational)],
    var: usize,
    values: &[Polynomial],
    target: usize,
    caches: &mut [HashMap<u32, Polynomial>],
) -> Polynomial {
    if var == values.len() {
        let c: Rational = terms.iter().map(|(_, c)| (*c).clone()).sum();
        return Polynomial::constant(target, c);
    }
    let mut groups: BTreeMap<u32, Vec<(&[u32], &Rational)>> = BTreeMap::new();
    for &(e, c) in terms {
        groups.entry(e[var]).or_default().push((e, c));
    }
    // p = sum_k v^k p_k, evaluated from the highest k down
    let mut acc: Option<Polynomial> = None;
    let mut prev = 0;
    for (&k, group) in groups.iter().rev() {
        let inner = horner(group, var + 1, values, target, caches);
        acc = Some(match acc {
            None => inner,
            Some(a) => {
                let step = cached_power(&mut caches[var], &values[var], prev - k);
                &(&a * step) + &inner
            }
        });
        prev = k;
    }
    let acc = acc.unwrap_or_else(|| Polynomial::zero(target));
    if prev > 0 {
        let step = cached_power(&mut caches[var], &values[var], prev);
        &acc * step
    } else {
        acc
    }
}

fn add_into(terms: &mut BTreeMap<ExponentVector, Rational>, e: &ExponentVector, c: &Rational) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(e) {
        Some(a) => {
            *a += c;
            if a.is_zero() {
                terms.remove(e);
            }
        }
        None => {
            terms.insert(e.clone(), c.clone());
        }
    }
}

/// Hash-based sum of many terms, converted to canonical form once at the end.
pub(crate) struct Accumulator {
    nvars: usize,
    terms: HashMap<ExponentVector, Rational>,
}

impl Accumulator {
    pub(crate) fn new(nvars: usize) -> Self {
        Accumulator {
            nvars,
            terms: HashMap::new(),
        }
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        *self.terms.entry(e).or_insert_with(Rational::zero) += c;
    }

    pub(crate) fn add_poly(&mut self, p: &Polynomial) {
        for (e, c) in &p.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub(crate) fn finish(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }
}

/// Powers `y, y^2, ..., y^max` computed once.
struct PowerCache {
    powers: Vec<Polynomial>,
}

impl PowerCache {
    fn new(y: Polynomial, max: u32) -> Self {
        let mut powers = Vec::with_capacity(max as usize);
        if max >= 1 {
            powers.push(y.clone());
            for _ in 1..max {
                let next = powers.last().expect("nonempty") * &y;
                powers.push(next);
            }
        }
        PowerCache { powers }
    }

    fn get(&self, k: u32) -> &Polynomial {
        &self.powers[k as usize - 1]
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    /// Panics on a variable-count mismatch; use [`Polynomial::try_add`] to get an error.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs)
            .expect("polynomial variable counts differ")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs)
            .expect("polynomial variable counts differ")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs)
            .expect("polynomial variable counts differ")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn c(n: usize, v: i64) -> Polynomial {
        Polynomial::constant(n, int(v))
    }

    #[test]
    fn difference_of_squares() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let p = &(&x1 + &x2) * &(&x1 - &x2);
        assert_eq!(p, &x1.pow(2) - &x2.pow(2));
        assert_eq!(p.to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn additive_identity() {
        let p = &x(2, 0).pow(3) - &c(2, 4);
        assert_eq!(&p + &Polynomial::zero(2), p);
    }

    #[test]
    fn square_of_sum_matches_term_by_term_expansion() {
        // oracle: enumerate the four products (a_i * a_j) of the two terms
        let parts = [x(2, 0), x(2, 1)];
        let mut oracle = Polynomial::zero(2);
        for a in &parts {
            for b in &parts {
                oracle = &oracle + &(a * b);
            }
        }
        let s = &parts[0] + &parts[1];
        let p = &s * &s;
        assert_eq!(p, oracle);
        assert_eq!(p.to_string(), "x1^2 + 2*x1*x2 + x2^2");
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert_eq!(
            x(2, 0).try_add(&x(3, 0)),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
        assert!(x(2, 0).try_mul(&x(1, 0)).is_err());
        assert!(x(2, 0).coefficient_of(&ExponentVector::from([1])).is_err());
        assert!(x(2, 0).evaluate(&[int(1)]).is_err());
        assert!(x(2, 0)
            .linear_substitute(&RationalMatrix::identity(3))
            .is_err());
    }

    #[test]
    fn substitution_examples() {
        let m = RationalMatrix::from_ints(&[&[-1]]);
        assert_eq!(x(1, 0).linear_substitute(&m).unwrap(), -&x(1, 0));

        let swap = RationalMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        let p = &x(2, 0) * &x(2, 1);
        assert_eq!(p.linear_substitute(&swap).unwrap(), p);

        let rot = RationalMatrix::from_ints(&[&[0, -1], &[1, -1]]);
        let q = x(2, 0).pow(2).linear_substitute(&rot).unwrap();
        assert_eq!(q, x(2, 1).pow(2));
        // evaluation oracle at a few rational points: q(v) = (-v2)^2
        for (a, b) in [(1, 2), (-3, 5), (7, -4), (2, 9), (-1, -8)] {
            let v = [frac(a, 3), frac(b, 7)];
            let direct = num_traits::pow(-v[1].clone(), 2);
            assert_eq!(q.evaluate(&v).unwrap(), direct);
        }
    }

    #[test]
    fn general_substitution_path() {
        // non-monomial matrix exercises the power-cache path
        let m = RationalMatrix::from_ints(&[&[1, 1], &[0, 1]]);
        let p = &x(2, 0).pow(2) + &x(2, 1);
        let q = p.linear_substitute(&m).unwrap();
        let expected = &(&x(2, 0) + &x(2, 1)).pow(2) + &x(2, 1);
        assert_eq!(q, expected);
    }

    #[test]
    fn coefficients() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let p = &x1.pow(2) + &(&c(2, 2) * &(&x1 * &x2));
        assert_eq!(p.coefficient_of(&[1, 1].into()).unwrap(), int(2));
        assert_eq!(x1.pow(2).coefficient_of(&[0, 2].into()).unwrap(), int(0));
        let cube = (&x1 + &x2).pow(3);
        // binomial oracle: C(3,2) = 3
        assert_eq!(cube.coefficient_of(&[2, 1].into()).unwrap(), int(3));
    }

    #[test]
    fn evaluation() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let p = &x1.pow(2) + &x2.pow(2);
        assert_eq!(p.evaluate(&[int(1), int(1)]).unwrap(), int(2));
        assert_eq!(
            Polynomial::zero(2).evaluate(&[int(3), int(4)]).unwrap(),
            int(0)
        );
        let q = &(&x1 * &x2) - &x2.pow(2);
        assert_eq!(q.evaluate(&[frac(2, 3), frac(1, 2)]).unwrap(), frac(1, 12));
    }

    #[test]
    fn derivative_and_variable_substitution() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let p = &x1.pow(3) * &x2;
        assert_eq!(p.derivative(0).unwrap(), &c(2, 3) * &(&x1.pow(2) * &x2));
        assert!(p.derivative(2).is_err());
        let q = p.substitute_var(0, &(&x2 + &c(2, 1))).unwrap();
        assert_eq!(q, &(&x2 + &c(2, 1)).pow(3) * &x2);
    }

    #[test]
    fn composition_matches_termwise_substitution() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let p = Polynomial::from_terms(
            3,
            [
                (ExponentVector::from([2, 0, 1]), int(3)),
                (ExponentVector::from([0, 3, 0]), frac(-1, 2)),
                (ExponentVector::from([1, 1, 1]), int(5)),
                (ExponentVector::from([0, 0, 0]), int(7)),
            ],
        )
        .unwrap();
        let values = [&x1 + &x2, &x1 * &x2, &x2.pow(2) - &c(2, 1)];
        let mut naive = Polynomial::zero(2);
        for (e, k) in p.terms() {
            let mut t = Polynomial::constant(2, k.clone());
            for (v, &d) in values.iter().zip(e.as_slice()) {
                t = &t * &v.pow(d);
            }
            naive = &naive + &t;
        }
        assert_eq!(p.compose(&values).unwrap(), naive);
        assert!(p.compose(&values[..2]).is_err());
        assert!(Polynomial::zero(3).compose(&values).unwrap().is_zero());
    }

    #[test]
    fn printing_order_and_fractions() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let p = &(&x2.scale(&frac(-1, 2)) + &x1.pow(2)) - &c(2, 3);
        assert_eq!(p.to_string(), "x1^2 - 1/2*x2 - 3");
        assert_eq!((-&x1).to_string(), "-x1");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
    }

    #[test]
    fn degree_enumeration_is_descending_graded_lex() {
        let all = ExponentVector::all_of_degree(2, 2);
        let raw: Vec<_> = all.iter().map(|e| e.as_slice().to_vec()).collect();
        assert_eq!(raw, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(ExponentVector::all_of_degree(3, 4).len(), 15);
        let mu = ExponentVector::from([2, 1]);
        let subs: Vec<_> = mu
            .sub_vectors_of_degree(2)
            .iter()
            .map(|e| e.as_slice().to_vec())
            .collect();
        assert_eq!(subs, vec![vec![2, 0], vec![1, 1]]);
    }
}
