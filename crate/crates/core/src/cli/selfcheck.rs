use std::collections::HashSet;

use crate::error::Result;
use crate::group::MatrixGroup;
use crate::invariants::{
    is_invariant, resolvent_derivative_identity, resolvent_product, reynolds, Rewriter,
};
use crate::poly::ExponentVector;
use crate::sample::{random_polynomial, rng};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
}

fn outcome(name: impl Into<String>, passed: bool) -> CheckOutcome {
    CheckOutcome {
        name: name.into(),
        passed,
    }
}

/// Identity checks and a seeded property suite for one group.
pub fn selfcheck(group: &MatrixGroup) -> Result<Vec<CheckOutcome>> {
    let n = group.dim();
    let h = group.order();
    let mut out = Vec::new();

    let set: HashSet<_> = group.elements().iter().collect();
    let closed = group
        .elements()
        .iter()
        .all(|a| group.elements().iter().all(|b| set.contains(&(a * b))));
    let inverses = group
        .elements()
        .iter()
        .all(|a| group.elements().iter().any(|b| (a * b).is_identity()));
    out.push(outcome(
        "group: identity first, closed under products, inverses present",
        group.element(0).is_identity() && closed && inverses,
    ));

    let mut all_zero = true;
    for i in 1..=n {
        for k in 1..=h {
            all_zero &= resolvent_derivative_identity(group, i, k)?.is_zero();
        }
    }
    out.push(outcome(
        format!(
            "derivative identity vanishes for all {} (i, k) pairs",
            n * h
        ),
        all_zero,
    ));

    let mut rw = Rewriter::new(group)?;
    let table = rw.resolvent().clone();
    out.push(outcome(
        "resolvent coefficients reassemble the expanded product",
        table.reconstruct() == resolvent_product(group),
    ));

    let mut j_ok = true;
    for gen in &rw.j_system().generators {
        j_ok &= is_invariant(group, &gen.sum.value)?
            && gen.sum.value.is_homogeneous_of_degree(gen.sum.mu.degree());
    }
    out.push(outcome(
        format!(
            "all {} orbit power sums are invariant and homogeneous",
            rw.j_system().len()
        ),
        j_ok,
    ));

    let mut g_ok = true;
    for (key, value) in table.entries() {
        g_ok &= is_invariant(group, value)? && value.is_homogeneous_of_degree(key.degree());
    }
    out.push(outcome(
        format!(
            "all {} resolvent coefficients are invariant and homogeneous",
            table.len()
        ),
        g_ok,
    ));

    let mut reduce_ok = true;
    let mus = ExponentVector::all_of_degree(n, h as u32 + 1);
    for mu in &mus {
        let cert = rw.reduce_high_j(mu)?;
        let expected = rw.orbit_sum(mu)?.clone();
        reduce_ok &= cert.max_key_degree() <= h as u32 && rw.realize(&cert)? == expected;
    }
    out.push(outcome(
        format!("reduction of all {} power sums of degree h + 1", mus.len()),
        reduce_ok,
    ));

    let mut r = rng(0x5eed);
    let max_degree = h as u32 + 2;
    let mut reynolds_ok = true;
    for _ in 0..10 {
        let f = random_polynomial(&mut r, n, max_degree, 6, 9);
        let avg = reynolds(group, &f)?;
        reynolds_ok &= reynolds(group, &avg)? == avg && is_invariant(group, &avg)?;
    }
    out.push(outcome(
        "averaging is idempotent and lands in the invariants",
        reynolds_ok,
    ));

    let mut rewrite_ok = true;
    let mut g_rewrite_ok = true;
    for _ in 0..5 {
        let f = reynolds(group, &random_polynomial(&mut r, n, max_degree, 4, 9))?;
        let cert = rw.rewrite_in_j(&f)?;
        rewrite_ok &= cert.max_key_degree() <= h as u32 && rw.realize(&cert)? == f;
        let g_cert = rw.j_to_g(&cert)?;
        g_rewrite_ok &= rw.realize(&g_cert)? == f;
    }
    out.push(outcome(
        "random invariants rewrite with generators of degree <= h",
        rewrite_ok,
    ));
    out.push(outcome(
        "J certificates convert to the resolvent basis",
        g_rewrite_ok,
    ));

    Ok(out)
}
