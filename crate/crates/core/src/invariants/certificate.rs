//! Polynomials in formal generator symbols.
//!
//! A [`GeneratorPolynomial`] is a rewrite certificate: a polynomial whose
//! variables are orbit power sums `J[mu]` or resolvent coefficients
//! `G[alpha;alphas]`. Substituting the concrete invariant for each symbol
//! (its *realization*) must give back the invariant that was rewritten.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{ExponentVector, Polynomial};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Orbit power sums.
    J,
    /// Resolvent coefficients.
    G,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::J => f.write_str("j"),
            Basis::G => f.write_str("g"),
        }
    }
}

/// Index `(alpha; alphas)` of the resolvent coefficient of `z^alpha u^alphas`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResolventKey {
    pub z_power: u32,
    pub u_powers: ExponentVector,
}

impl ResolventKey {
    pub fn new(z_power: u32, u_powers: impl Into<ExponentVector>) -> Self {
        ResolventKey {
            z_power,
            u_powers: u_powers.into(),
        }
    }

    /// Degree of the coefficient as a polynomial in `x`.
    pub fn degree(&self) -> u32 {
        self.u_powers.degree()
    }
}

impl Ord for ResolventKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.u_powers
            .cmp(&other.u_powers)
            .then_with(|| other.z_power.cmp(&self.z_power))
    }
}

impl PartialOrd for ResolventKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ResolventKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G[{};{}]", self.z_power, join(self.u_powers.as_slice()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKey {
    J(ExponentVector),
    G(ResolventKey),
}

impl GeneratorKey {
    pub fn basis(&self) -> Basis {
        match self {
            GeneratorKey::J(_) => Basis::J,
            GeneratorKey::G(_) => Basis::G,
        }
    }

    /// Degree of the generator in `x`.
    pub fn degree(&self) -> u32 {
        match self {
            GeneratorKey::J(mu) => mu.degree(),
            GeneratorKey::G(k) => k.degree(),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            GeneratorKey::J(mu) => mu.len(),
            GeneratorKey::G(k) => k.u_powers.len(),
        }
    }
}

impl fmt::Display for GeneratorKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorKey::J(mu) => write!(f, "J[{}]", join(mu.as_slice())),
            GeneratorKey::G(k) => k.fmt(f),
        }
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// A product of generator symbols with multiplicities, sorted by key.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GeneratorMonomial(Vec<(GeneratorKey, u32)>);

impl GeneratorMonomial {
    pub fn one() -> Self {
        GeneratorMonomial(Vec::new())
    }

    pub fn single(key: GeneratorKey) -> Self {
        GeneratorMonomial(vec![(key, 1)])
    }

    pub fn factors(&self) -> &[(GeneratorKey, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree in `x` of the realized product.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(k, e)| k.degree() * e).sum()
    }

    fn times(&self, other: &GeneratorMonomial) -> GeneratorMonomial {
        let mut merged: BTreeMap<GeneratorKey, u32> = self.0.iter().cloned().collect();
        for (k, e) in &other.0 {
            *merged.entry(k.clone()).or_insert(0) += e;
        }
        GeneratorMonomial(merged.into_iter().collect())
    }

    /// Printing order: higher degree first, then by factors from the
    /// largest key down.
    fn print_cmp(&self, other: &GeneratorMonomial) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            let a = self.0.iter().rev();
            let b = other.0.iter().rev();
            for ((ka, ea), (kb, eb)) in a.zip(b) {
                let o = kb.cmp(ka).then_with(|| eb.cmp(ea));
                if o != Ordering::Equal {
                    return o;
                }
            }
            other.0.len().cmp(&self.0.len())
        })
    }
}

impl fmt::Display for GeneratorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (k, e)) in self.0.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{}", k)?;
            } else {
                write!(f, "{}^{}", k, e)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorPolynomial {
    basis: Basis,
    terms: BTreeMap<GeneratorMonomial, Rational>,
}

impl GeneratorPolynomial {
    pub fn zero(basis: Basis) -> Self {
        GeneratorPolynomial {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(basis: Basis, c: Rational) -> Self {
        let mut p = Self::zero(basis);
        if !c.is_zero() {
            p.terms.insert(GeneratorMonomial::one(), c);
        }
        p
    }

    pub fn generator(key: GeneratorKey) -> Self {
        let basis = key.basis();
        let mut terms = BTreeMap::new();
        terms.insert(GeneratorMonomial::single(key), Rational::one());
        GeneratorPolynomial { basis, terms }
    }

    pub fn basis(&self) -> Basis {
        self.basis
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

    pub fn terms(&self) -> impl Iterator<Item = (&GeneratorMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&GeneratorMonomial::one())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Every generator symbol that occurs.
    pub fn keys(&self) -> BTreeSet<GeneratorKey> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(k, _)| k.clone()))
            .collect()
    }

    /// Largest `x`-degree of any symbol that occurs (0 for a constant).
    pub fn max_key_degree(&self) -> u32 {
        self.keys()
            .iter()
            .map(GeneratorKey::degree)
            .max()
            .unwrap_or(0)
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: GeneratorMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(a) => {
                *a += c;
                if a.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &GeneratorPolynomial, c: &Rational) {
        debug_assert_eq!(self.basis, other.basis);
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn plus(&self, other: &GeneratorPolynomial) -> GeneratorPolynomial {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn minus(&self, other: &GeneratorPolynomial) -> GeneratorPolynomial {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, c: &Rational) -> GeneratorPolynomial {
        let mut out = Self::zero(self.basis);
        out.add_scaled(self, c);
        out
    }

    pub fn times(&self, other: &GeneratorPolynomial) -> GeneratorPolynomial {
        debug_assert_eq!(self.basis, other.basis);
        let mut out = Self::zero(self.basis);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> GeneratorPolynomial {
        let mut result = Self::constant(self.basis, Rational::one());
        for _ in 0..k {
            result = result.times(self);
        }
        result
    }

    /// Replaces every symbol by a generator polynomial in the `target`
    /// basis. Powers of each replacement are computed once.
    pub fn substitute<F>(&self, target: Basis, mut replace: F) -> Result<GeneratorPolynomial>
    where
        F: FnMut(&GeneratorKey) -> Result<GeneratorPolynomial>,
    {
        let mut images: HashMap<GeneratorKey, Vec<GeneratorPolynomial>> = HashMap::new();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (k, e) in &m.0 {
                if !images.contains_key(k) {
                    let img = replace(k)?;
                    if img.basis != target && !img.is_zero() {
                        return Err(Error::MalformedCertificate(format!(
                            "replacement for {} is in the {} basis, expected {}",
                            k, img.basis, target
                        )));
                    }
                    images.insert(k.clone(), vec![img]);
                }
                let powers = images.get_mut(k).expect("inserted above");
                while powers.len() < *e as usize {
                    let next = powers.last().expect("nonempty").times(&powers[0]);
                    powers.push(next);
                }
                term = term.times(&powers[*e as usize - 1]);
                if term.is_zero() {
                    break;
                }
            }
            out.add_scaled(&term, &Rational::one());
        }
        Ok(out)
    }

    /// Expands the certificate with concrete values for each symbol.
    pub fn realize<F>(&self, nvars: usize, mut value: F) -> Result<Polynomial>
    where
        F: FnMut(&GeneratorKey) -> Result<Polynomial>,
    {
        let keys: Vec<GeneratorKey> = self.keys().into_iter().collect();
        let values = keys
            .iter()
            .map(|k| {
                let v = value(k)?;
                Error::check_dim(nvars, v.nvars())?;
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        if keys.is_empty() {
            return Ok(Polynomial::constant(nvars, self.constant_term()));
        }
        self.to_polynomial(&keys).compose(&values)
    }

    /// The certificate as an ordinary polynomial whose `i`-th variable is
    /// `keys[i]`. Every key that occurs must be listed.
    pub fn to_polynomial(&self, keys: &[GeneratorKey]) -> Polynomial {
        let index: HashMap<&GeneratorKey, usize> =
            keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u32; keys.len()];
            for (k, d) in &m.0 {
                e[index[k]] += d;
            }
            (ExponentVector::new(e), c.clone())
        });
        Polynomial::from_terms(keys.len(), terms).expect("lengths match")
    }

    /// Inverse of [`GeneratorPolynomial::to_polynomial`].
    pub fn from_polynomial(basis: Basis, p: &Polynomial, keys: &[GeneratorKey]) -> Self {
        let mut out = Self::zero(basis);
        for (e, c) in p.terms() {
            let factors = e
                .as_slice()
                .iter()
                .zip(keys)
                .filter(|(&d, _)| d > 0)
                .map(|(&d, k)| (k.clone(), d))
                .collect::<BTreeMap<_, _>>();
            out.terms
                .insert(GeneratorMonomial(factors.into_iter().collect()), c.clone());
        }
        out
    }
}

impl fmt::Display for GeneratorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| a.0.print_cmp(b.0));
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else if abs.is_integer() {
                write!(f, "{}*{}", abs, m)?;
            } else {
                write!(f, "({})*{}", abs, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn j(mu: &[u32]) -> GeneratorPolynomial {
        GeneratorPolynomial::generator(GeneratorKey::J(mu.to_vec().into()))
    }

    #[test]
    fn printing() {
        let p = j(&[1, 1]).scale(&frac(1, 2));
        assert_eq!(p.to_string(), "(1/2)*J[1,1]");
        let q = j(&[2, 0])
            .times(&j(&[1, 0]))
            .minus(&j(&[1, 1]).times(&j(&[1, 0])).scale(&frac(1, 2)));
        assert_eq!(q.to_string(), "J[2,0]*J[1,0] - (1/2)*J[1,1]*J[1,0]");
        let r = j(&[1])
            .pow(2)
            .scale(&int(-3))
            .plus(&GeneratorPolynomial::constant(Basis::J, int(7)));
        assert_eq!(r.to_string(), "-3*J[1]^2 + 7");
        let g = GeneratorPolynomial::generator(GeneratorKey::G(ResolventKey::new(0, [2, 0])));
        assert_eq!(g.to_string(), "G[0;2,0]");
        assert_eq!(GeneratorPolynomial::zero(Basis::G).to_string(), "0");
    }

    #[test]
    fn arithmetic_cancels() {
        let a = j(&[1]).plus(&j(&[2]));
        assert!(a.minus(&a).is_zero());
        assert_eq!(a.keys().len(), 2);
        assert_eq!(a.max_key_degree(), 2);
    }

    #[test]
    fn realization_and_substitution() {
        let x = Polynomial::var(1, 0);
        let cert = j(&[1]).pow(2).scale(&int(3));
        let value = |k: &GeneratorKey| match k {
            GeneratorKey::J(mu) => Ok(x.pow(mu.degree())),
            GeneratorKey::G(_) => unreachable!(),
        };
        assert_eq!(cert.realize(1, value).unwrap(), x.pow(2).scale(&int(3)));
        let sub = cert
            .substitute(Basis::J, |_| {
                Ok(j(&[1]).plus(&GeneratorPolynomial::constant(Basis::J, int(1))))
            })
            .unwrap();
        // 3 (J1 + 1)^2
        assert_eq!(sub.to_string(), "3*J[1]^2 + 6*J[1] + 3");
    }
}
