//! Rewriting invariants in the orbit power sums and resolvent coefficients.
//!
//! With `xi_k = u . (A_k x)`, the power sums `S_m = sum_k xi_k^m` expand as
//! `S_m = sum_{|nu| = m} (m! / nu!) u^nu J[nu]`, and the elementary symmetric
//! functions `e_j` of the `xi_k` are the resolvent coefficients:
//! `e_j = sum_{|beta| = j} G[h-j; beta] u^beta`. Newton's identities relate
//! the two; comparing coefficients of `u^mu` turns each identity into a
//! statement about single invariants.
//!
//! For `m > h` the identity `S_m = sum_{j=1..h} (-1)^(j-1) e_j S_{m-j}`
//! gives
//!
//! ```text
//! (m!/mu!) J[mu] = sum_j (-1)^(j-1) sum_{beta <= mu, |beta| = j}
//!                      G[h-j; beta] * ((m-j)! / (mu-beta)!) * J[mu-beta]
//! ```
//!
//! where each `G[h-j; beta]` is itself an invariant of degree `j <= h` and so
//! is a linear combination of `J`s of degree `j`. Every `J` on the right has
//! degree below `m`, so repeating the step ends with all degrees `<= h`.

use std::collections::HashMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::group::MatrixGroup;
use crate::poly::{Accumulator, ExponentVector, Polynomial};
use crate::rational::{multinomial, Rational};

use super::certificate::{Basis, GeneratorKey, GeneratorPolynomial, ResolventKey};
use super::resolvent::{galois_resolvent, ResolventTable};
use super::{invariance_witness, noether_generators, orbit_power_sum, GeneratorStatus, JSystem};

/// Rewriting state for one group: generator tables and memoized reductions.
pub struct Rewriter<'g> {
    group: &'g MatrixGroup,
    system: JSystem,
    resolvent: Option<ResolventTable>,
    orbit_sums: HashMap<ExponentVector, Polynomial>,
    /// Distinct nonzero `J[mu]` with `|mu| <= h`, in enumeration order.
    /// Reductions are carried out in the polynomial ring with one variable
    /// per entry and converted to certificates at the end.
    slots: Vec<GeneratorKey>,
    slot_of: HashMap<ExponentVector, usize>,
    /// `J[mu]` for `|mu| > h`, fully reduced, in the slot ring.
    reduced: HashMap<ExponentVector, Polynomial>,
    /// `G[key]` written linearly in the `J` of the same degree, in the slot ring.
    linear_g: HashMap<ResolventKey, Polynomial>,
    /// `J[mu]` (for `|mu| <= h`) in the `G` basis.
    g_of_j: HashMap<ExponentVector, GeneratorPolynomial>,
    newton: Option<Vec<Polynomial>>,
}

impl<'g> Rewriter<'g> {
    pub fn new(group: &'g MatrixGroup) -> Result<Self> {
        let system = noether_generators(group)?;
        let mut slots = Vec::new();
        let mut slot_of = HashMap::new();
        for gen in &system.generators {
            let rep = match &gen.status {
                GeneratorStatus::Zero => continue,
                GeneratorStatus::Distinct => {
                    slots.push(GeneratorKey::J(gen.sum.mu.clone()));
                    slots.len() - 1
                }
                GeneratorStatus::DuplicateOf(rep) => slot_of[rep],
            };
            slot_of.insert(gen.sum.mu.clone(), rep);
        }
        Ok(Rewriter {
            group,
            system,
            resolvent: None,
            slots,
            slot_of,
            orbit_sums: HashMap::new(),
            reduced: HashMap::new(),
            linear_g: HashMap::new(),
            g_of_j: HashMap::new(),
            newton: None,
        })
    }

    pub fn group(&self) -> &MatrixGroup {
        self.group
    }

    pub fn j_system(&self) -> &JSystem {
        &self.system
    }

    pub fn resolvent(&mut self) -> &ResolventTable {
        let group = self.group;
        self.resolvent
            .get_or_insert_with(|| galois_resolvent(group))
    }

    fn order(&self) -> u32 {
        self.group.order() as u32
    }

    pub fn orbit_sum(&mut self, mu: &ExponentVector) -> Result<&Polynomial> {
        if !self.orbit_sums.contains_key(mu) {
            let value = match self.system.get(mu) {
                Some(g) => g.sum.value.clone(),
                None => orbit_power_sum(self.group, mu)?.value,
            };
            self.orbit_sums.insert(mu.clone(), value);
        }
        Ok(&self.orbit_sums[mu])
    }

    /// Concrete value of a generator symbol.
    pub fn value_of(&mut self, key: &GeneratorKey) -> Result<Polynomial> {
        match key {
            GeneratorKey::J(mu) => self.orbit_sum(mu).cloned(),
            GeneratorKey::G(k) => Ok(self
                .resolvent()
                .get(k)
                .cloned()
                .unwrap_or_else(|| Polynomial::zero(k.u_powers.len()))),
        }
    }

    pub fn realize(&mut self, cert: &GeneratorPolynomial) -> Result<Polynomial> {
        let n = self.group.dim();
        for key in cert.keys() {
            if key.arity() != n {
                return Err(Error::MalformedCertificate(format!(
                    "{} does not have {} indices",
                    key, n
                )));
            }
        }
        cert.realize(n, |k| self.value_of(k))
    }

    /// `J[mu]` with `|mu| <= h`, replaced by the first enumerated generator
    /// with the same value; zero generators become 0.
    fn canonical_j(&self, mu: &ExponentVector) -> GeneratorPolynomial {
        match self.system.get(mu).map(|g| &g.status) {
            Some(GeneratorStatus::Zero) => GeneratorPolynomial::zero(Basis::J),
            Some(GeneratorStatus::DuplicateOf(rep)) => {
                GeneratorPolynomial::generator(GeneratorKey::J(rep.clone()))
            }
            _ => GeneratorPolynomial::generator(GeneratorKey::J(mu.clone())),
        }
    }

    fn slot_ring(&self) -> usize {
        self.slots.len()
    }

    /// `canonical_j` in the slot ring.
    fn slot_poly(&self, mu: &ExponentVector) -> Polynomial {
        match self.slot_of.get(mu) {
            Some(&i) => Polynomial::var(self.slot_ring(), i),
            None => Polynomial::zero(self.slot_ring()),
        }
    }

    fn to_certificate(&self, p: &Polynomial) -> GeneratorPolynomial {
        GeneratorPolynomial::from_polynomial(Basis::J, p, &self.slots)
    }

    /// `f = a + sum c_mu x^mu` becomes `a + sum (c_mu / h) J[mu]`, which is
    /// exact when `f` is invariant. Only for `deg f <= h`.
    fn average_low_degree(&self, f: &Polynomial) -> Polynomial {
        let h_inv = Rational::from_integer(self.group.order().into()).recip();
        let mut out = Polynomial::zero(self.slot_ring());
        for (e, c) in f.terms() {
            if e.is_constant() {
                out = &out + &Polynomial::constant(self.slot_ring(), c.clone());
            } else {
                out = &out + &self.slot_poly(e).scale(&(c * &h_inv));
            }
        }
        out
    }

    fn linear_g(&mut self, key: &ResolventKey) -> Polynomial {
        if let Some(c) = self.linear_g.get(key) {
            return c.clone();
        }
        let value = self.resolvent().get(key).cloned();
        let lin = match value {
            Some(v) => self.average_low_degree(&v),
            None => Polynomial::zero(self.slot_ring()),
        };
        self.linear_g.insert(key.clone(), lin.clone());
        lin
    }

    /// One application of the `m > h` Newton identity. Keys of the result
    /// have degree at most `max(h, |mu| - 1)`.
    pub fn newton_step(&mut self, mu: &ExponentVector) -> Result<GeneratorPolynomial> {
        Error::check_dim(self.group.dim(), mu.len())?;
        let h = self.order();
        let m = mu.degree();
        if m <= h {
            return Err(Error::Domain(format!(
                "{} has degree {} <= h = {}; nothing to reduce",
                GeneratorKey::J(mu.clone()),
                m,
                h
            )));
        }
        let mut out = GeneratorPolynomial::zero(Basis::J);
        for j in 1..=h {
            let sign = if j % 2 == 1 {
                Rational::one()
            } else {
                -Rational::one()
            };
            for beta in mu.sub_vectors_of_degree(j) {
                let lin = self.linear_g(&ResolventKey {
                    z_power: h - j,
                    u_powers: beta.clone(),
                });
                if lin.is_zero() {
                    continue;
                }
                let g = self.to_certificate(&lin);
                let nu = mu.minus(&beta).expect("beta <= mu");
                let j_nu = if nu.degree() <= h {
                    self.canonical_j(&nu)
                } else {
                    GeneratorPolynomial::generator(GeneratorKey::J(nu.clone()))
                };
                let weight = Rational::from_integer(multinomial(nu.as_slice()));
                out.add_scaled(&g.times(&j_nu), &(&sign * &weight));
            }
        }
        let scale = Rational::from_integer(multinomial(mu.as_slice())).recip();
        Ok(out.scale(&scale))
    }

    /// `J[mu]` for `|mu| > h`, rewritten with all keys of degree `<= h`.
    pub fn reduce_high_j(&mut self, mu: &ExponentVector) -> Result<GeneratorPolynomial> {
        Error::check_dim(self.group.dim(), mu.len())?;
        if mu.degree() <= self.order() {
            return Err(Error::Domain(format!(
                "reduction needs |mu| > h = {}, got |mu| = {}",
                self.order(),
                mu.degree()
            )));
        }
        let budget = (mu.degree() - self.order()) as usize;
        let p = self.reduce_rec(mu, 0, budget)?;
        Ok(self.to_certificate(&p))
    }

    fn reduce_rec(
        &mut self,
        mu: &ExponentVector,
        depth: usize,
        budget: usize,
    ) -> Result<Polynomial> {
        let h = self.order();
        if mu.degree() <= h {
            return Ok(self.slot_poly(mu));
        }
        if let Some(p) = self.reduced.get(mu) {
            return Ok(p.clone());
        }
        // each step lowers the degree by at least one
        if depth >= budget {
            return Err(Error::Internal(format!(
                "reduction of {} did not terminate within {} steps",
                GeneratorKey::J(mu.clone()),
                budget
            )));
        }
        let scale = Rational::from_integer(multinomial(mu.as_slice())).recip();
        let mut acc = Accumulator::new(self.slot_ring());
        for j in 1..=h {
            let sign = if j % 2 == 1 {
                scale.clone()
            } else {
                -scale.clone()
            };
            for beta in mu.sub_vectors_of_degree(j) {
                let lin = self.linear_g(&ResolventKey {
                    z_power: h - j,
                    u_powers: beta.clone(),
                });
                if lin.is_zero() {
                    continue;
                }
                let nu = mu.minus(&beta).expect("beta <= mu");
                let rest = self.reduce_rec(&nu, depth + 1, budget)?;
                let factor = &sign * Rational::from_integer(multinomial(nu.as_slice()));
                for (e1, c1) in lin.terms() {
                    let c1 = c1 * &factor;
                    for (e2, c2) in rest.terms() {
                        acc.add_term(e1.plus(e2), &c1 * c2);
                    }
                }
            }
        }
        let full = acc.finish();
        self.reduced.insert(mu.clone(), full.clone());
        Ok(full)
    }

    /// Certificate in the `J` basis with all keys of degree `<= h`.
    pub fn rewrite_in_j(&mut self, f: &Polynomial) -> Result<GeneratorPolynomial> {
        if let Some(witness) = invariance_witness(self.group, f)? {
            return Err(Error::NotInvariant { witness });
        }
        let h = self.order();
        let h_inv = Rational::from_integer(self.group.order().into()).recip();
        let mut acc = Polynomial::zero(self.slot_ring());
        for (e, c) in f.terms() {
            let part = if e.is_constant() {
                Polynomial::constant(self.slot_ring(), c.clone())
            } else if e.degree() <= h {
                self.slot_poly(e).scale(&(c * &h_inv))
            } else {
                let budget = (e.degree() - h) as usize;
                self.reduce_rec(e, 0, budget)?.scale(&(c * &h_inv))
            };
            acc = &acc + &part;
        }
        Ok(self.to_certificate(&acc))
    }

    /// Newton polynomials `P_r(e_1..e_h)` with `S_r = P_r(e)` for `r <= h`.
    fn newton_polynomials(&mut self) -> &[Polynomial] {
        let h = self.order() as usize;
        self.newton.get_or_insert_with(|| {
            let e = |j: usize| Polynomial::var(h, j - 1);
            let mut p: Vec<Polynomial> = Vec::with_capacity(h);
            for r in 1..=h {
                // S_r = sum_{j<r} (-1)^(j-1) e_j S_{r-j} + (-1)^(r-1) r e_r
                let mut s = e(r).scale(&Rational::from_integer((r as i64).into()));
                if r % 2 == 0 {
                    s = -&s;
                }
                for j in 1..r {
                    let t = &e(j) * &p[r - j - 1];
                    s = if j % 2 == 1 { &s + &t } else { &s - &t };
                }
                p.push(s);
            }
            p
        })
    }

    /// `J[mu]` (`|mu| <= h`) written in the resolvent coefficients.
    fn j_in_g(&mut self, mu: &ExponentVector) -> Result<GeneratorPolynomial> {
        if let Some(c) = self.g_of_j.get(mu) {
            return Ok(c.clone());
        }
        let r = mu.degree() as usize;
        let h = self.order();
        let p_r = self.newton_polynomials()[r - 1].clone();
        self.resolvent();
        let table = self.resolvent.as_ref().expect("computed above");
        let mut out = GeneratorPolynomial::zero(Basis::G);
        for (e, c) in p_r.terms() {
            let mut degrees = Vec::new();
            for (idx, &k) in e.as_slice().iter().enumerate() {
                degrees.extend(std::iter::repeat_n((idx + 1) as u32, k as usize));
            }
            let coeff = u_coefficient_of_product(table, h, &degrees, mu);
            out.add_scaled(&coeff, c);
        }
        let out = out.scale(&Rational::from_integer(multinomial(mu.as_slice())).recip());
        self.g_of_j.insert(mu.clone(), out.clone());
        Ok(out)
    }

    pub fn j_to_g(&mut self, cert: &GeneratorPolynomial) -> Result<GeneratorPolynomial> {
        if cert.basis() != Basis::J {
            return Err(Error::MalformedCertificate(
                "expected a J-basis certificate".into(),
            ));
        }
        let h = self.order();
        let n = self.group.dim();
        for key in cert.keys() {
            match &key {
                GeneratorKey::J(mu) if mu.len() == n && mu.degree() >= 1 && mu.degree() <= h => {}
                _ => {
                    return Err(Error::MalformedCertificate(format!(
                        "{} is not a J key with {} indices and degree 1..={}",
                        key, n, h
                    )))
                }
            }
        }
        cert.substitute(Basis::G, |k| match k {
            GeneratorKey::J(mu) => self.j_in_g(mu),
            GeneratorKey::G(_) => unreachable!("checked above"),
        })
    }

    pub fn rewrite_in_g(&mut self, f: &Polynomial) -> Result<GeneratorPolynomial> {
        let cert = self.rewrite_in_j(f)?;
        self.j_to_g(&cert)
    }
}

/// Coefficient of `u^mu` in `prod_t e_{degrees[t]}`, with
/// `e_j = sum_{|beta| = j} G[h-j; beta] u^beta`, as a `G` certificate.
fn u_coefficient_of_product(
    table: &ResolventTable,
    h: u32,
    degrees: &[u32],
    mu: &ExponentVector,
) -> GeneratorPolynomial {
    let Some((&j, rest)) = degrees.split_first() else {
        return if mu.is_constant() {
            GeneratorPolynomial::constant(Basis::G, Rational::one())
        } else {
            GeneratorPolynomial::zero(Basis::G)
        };
    };
    let mut out = GeneratorPolynomial::zero(Basis::G);
    for beta in mu.sub_vectors_of_degree(j) {
        let key = ResolventKey {
            z_power: h - j,
            u_powers: beta.clone(),
        };
        if table.get(&key).is_none() {
            continue;
        }
        let tail = u_coefficient_of_product(table, h, rest, &mu.minus(&beta).expect("beta <= mu"));
        if tail.is_zero() {
            continue;
        }
        out.add_scaled(
            &GeneratorPolynomial::generator(GeneratorKey::G(key)).times(&tail),
            &Rational::one(),
        );
    }
    out
}

pub fn rewrite_in_j(group: &MatrixGroup, f: &Polynomial) -> Result<GeneratorPolynomial> {
    Rewriter::new(group)?.rewrite_in_j(f)
}

pub fn rewrite_in_g(group: &MatrixGroup, f: &Polynomial) -> Result<GeneratorPolynomial> {
    Rewriter::new(group)?.rewrite_in_g(f)
}

pub fn reduce_high_j(group: &MatrixGroup, mu: &ExponentVector) -> Result<GeneratorPolynomial> {
    Rewriter::new(group)?.reduce_high_j(mu)
}

pub fn newton_step(group: &MatrixGroup, mu: &ExponentVector) -> Result<GeneratorPolynomial> {
    Rewriter::new(group)?.newton_step(mu)
}

pub fn j_to_g(group: &MatrixGroup, cert: &GeneratorPolynomial) -> Result<GeneratorPolynomial> {
    Rewriter::new(group)?.j_to_g(cert)
}
