//! The resolvent `Phi(z, u) = prod_k (z + xi_k)` with
//! `xi_k = u_1 (A_k x)_1 + ... + u_n (A_k x)_n`, and its coefficient table.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::group::MatrixGroup;
use crate::matrix::RationalMatrix;
use crate::poly::{Accumulator, ExponentVector, Polynomial};
use crate::rational::Rational;

use super::certificate::ResolventKey;

/// Variable layout of `Q[z, u_1..u_n, x_1..x_n]`: `z` first, then the `u`
/// block, then the `x` block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CombinedRing {
    n: usize,
}

impl CombinedRing {
    pub fn new(n: usize) -> Self {
        CombinedRing { n }
    }

    pub fn nvars(&self) -> usize {
        2 * self.n + 1
    }

    pub fn z(&self) -> usize {
        0
    }

    pub fn u(&self, i: usize) -> usize {
        1 + i
    }

    pub fn x(&self, i: usize) -> usize {
        1 + self.n + i
    }

    /// A polynomial in `x_1..x_n` viewed inside the combined ring.
    pub fn embed_x(&self, p: &Polynomial) -> Polynomial {
        p.embed(self.nvars(), 1 + self.n)
    }

    /// `(g x)_i` as a polynomial in the combined ring.
    pub fn image_coordinate(&self, g: &RationalMatrix, i: usize) -> Polynomial {
        let terms = (0..self.n).map(|j| {
            (
                ExponentVector::unit(self.nvars(), self.x(j)),
                g.get(i, j).clone(),
            )
        });
        Polynomial::from_terms(self.nvars(), terms).expect("lengths match")
    }

    /// `xi = sum_i u_i (g x)_i`.
    pub fn linear_form(&self, g: &RationalMatrix) -> Polynomial {
        let nv = self.nvars();
        let mut acc = Accumulator::new(nv);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut e = vec![0; nv];
                e[self.u(i)] = 1;
                e[self.x(j)] = 1;
                acc.add_term(ExponentVector::new(e), g.get(i, j).clone());
            }
        }
        acc.finish()
    }

    pub fn names(&self) -> Vec<String> {
        let mut names = vec!["z".to_string()];
        names.extend((1..=self.n).map(|i| format!("u{}", i)));
        names.extend((1..=self.n).map(|i| format!("x{}", i)));
        names
    }

    /// Splits an exponent vector into `(z power, u block, x block)`.
    pub fn split(&self, e: &ExponentVector) -> (u32, ExponentVector, ExponentVector) {
        let s = e.as_slice();
        (
            s[0],
            ExponentVector::new(s[1..=self.n].to_vec()),
            ExponentVector::new(s[1 + self.n..].to_vec()),
        )
    }
}

/// Expanded `prod_k (z + xi_k)` in the combined ring.
pub fn resolvent_product(group: &MatrixGroup) -> Polynomial {
    let ring = CombinedRing::new(group.dim());
    let z = Polynomial::var(ring.nvars(), ring.z());
    let mut phi = Polynomial::one(ring.nvars());
    for g in group.elements() {
        phi = &phi * &(&z + &ring.linear_form(g));
    }
    phi
}

/// Coefficients `G[alpha; alphas](x)` of `z^alpha u^alphas` in the resolvent,
/// for `alpha + |alphas| = h`, `alpha != h`. Zero coefficients are absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolventTable {
    order: usize,
    dim: usize,
    entries: BTreeMap<ResolventKey, Polynomial>,
}

impl ResolventTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &ResolventKey) -> Option<&Polynomial> {
        self.entries.get(key)
    }

    /// Entries by increasing degree, within a degree from `u1^d` down.
    pub fn entries(&self) -> impl Iterator<Item = (&ResolventKey, &Polynomial)> {
        let mut v: Vec<_> = self.entries.iter().collect();
        v.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| b.0.u_powers.cmp(&a.0.u_powers))
        });
        v.into_iter()
    }

    /// `z^h + sum G[alpha;alphas](x) z^alpha u^alphas` in the combined ring.
    pub fn reconstruct(&self) -> Polynomial {
        let ring = CombinedRing::new(self.dim);
        let nv = ring.nvars();
        let mut acc = Accumulator::new(nv);
        let mut lead = vec![0; nv];
        lead[0] = self.order as u32;
        acc.add_term(ExponentVector::new(lead), Rational::from_integer(1.into()));
        for (key, coeff) in &self.entries {
            for (e, c) in coeff.terms() {
                let mut exps = Vec::with_capacity(nv);
                exps.push(key.z_power);
                exps.extend_from_slice(key.u_powers.as_slice());
                exps.extend_from_slice(e.as_slice());
                acc.add_term(ExponentVector::new(exps), c.clone());
            }
        }
        acc.finish()
    }
}

pub fn galois_resolvent(group: &MatrixGroup) -> ResolventTable {
    let n = group.dim();
    let h = group.order() as u32;
    let ring = CombinedRing::new(n);
    let phi = resolvent_product(group);
    let mut buckets: BTreeMap<ResolventKey, Vec<(ExponentVector, Rational)>> = BTreeMap::new();
    for (e, c) in phi.terms() {
        let (alpha, u, x) = ring.split(e);
        if alpha == h {
            continue;
        }
        buckets
            .entry(ResolventKey {
                z_power: alpha,
                u_powers: u,
            })
            .or_default()
            .push((x, c.clone()));
    }
    let entries = buckets
        .into_iter()
        .map(|(k, terms)| {
            (
                k,
                Polynomial::from_terms(n, terms).expect("x block has length n"),
            )
        })
        .filter(|(_, p)| !p.is_zero())
        .collect();
    ResolventTable {
        order: group.order(),
        dim: n,
        entries,
    }
}

/// `[dPhi/du_i - (A_k x)_i * dPhi/dz]` at `z = -xi_k`, in the combined
/// ring. Indices are one-based. The result is always zero; this makes the
/// identity executable.
pub fn resolvent_derivative_identity(
    group: &MatrixGroup,
    i: usize,
    k: usize,
) -> Result<Polynomial> {
    let n = group.dim();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            what: "variable",
            index: i,
            max: n,
        });
    }
    if k == 0 || k > group.order() {
        return Err(Error::IndexOutOfRange {
            what: "element",
            index: k,
            max: group.order(),
        });
    }
    let ring = CombinedRing::new(n);
    let g = group.element(k - 1);
    let phi = resolvent_product(group);
    let d_u = phi.derivative(ring.u(i - 1))?;
    let d_z = phi.derivative(ring.z())?;
    let bracket = &d_u - &(&ring.image_coordinate(g, i - 1) * &d_z);
    bracket.substitute_var(ring.z(), &-&ring.linear_form(g))
}
