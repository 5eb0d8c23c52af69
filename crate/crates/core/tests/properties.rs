//! Algebraic laws checked on generated inputs.

use proptest::prelude::*;

use invring::rational::frac;
use invring::{
    act, group_closure, is_invariant, j_to_g, orbit_power_sum, parse_polynomial,
    rationalize_invariant, rewrite_in_j, reynolds, ExponentVector, MatrixGroup, Polynomial,
    Rational, RationalInvariant, RationalMatrix, Rewriter,
};

fn test_groups() -> Vec<MatrixGroup> {
    let close = |gens: &[RationalMatrix]| group_closure(gens, None, 100).unwrap();
    vec![
        close(&[RationalMatrix::from_ints(&[&[-1]])]),
        close(&[RationalMatrix::from_ints(&[&[0, 1], &[1, 0]])]),
        close(&[RationalMatrix::from_ints(&[&[0, -1], &[1, -1]])]),
        close(&[RationalMatrix::from_ints(&[&[0, -1], &[1, 0]])]),
        close(&[
            RationalMatrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]),
            RationalMatrix::from_ints(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]),
        ]),
    ]
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn poly(n: usize, max_degree: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_degree, n), rational()),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        let terms = terms.into_iter().map(|(mut e, c)| {
            // keep the total degree in range
            while e.iter().sum::<u32>() > max_degree {
                let i = e.iter().position(|&x| x > 0).unwrap();
                e[i] -= 1;
            }
            (ExponentVector::new(e), c)
        });
        Polynomial::from_terms(n, terms).unwrap()
    })
}

fn matrix(n: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(prop::collection::vec(rational(), n), n)
        .prop_map(|rows| RationalMatrix::new(rows).unwrap())
}

fn group_and_poly(max_degree: u32) -> impl Strategy<Value = (usize, Polynomial)> {
    (0usize..4).prop_flat_map(move |k| {
        let n = if k == 0 { 1 } else { 2 };
        (Just(k), poly(n, max_degree, 5))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(2, 4, 5), b in poly(2, 4, 5), c in poly(2, 4, 5)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(2), a.clone());
    }

    #[test]
    fn printing_reparses(p in poly(3, 5, 6)) {
        prop_assert_eq!(parse_polynomial(&p.to_string(), 3).unwrap(), p);
    }

    #[test]
    fn substitution_composes(p in poly(2, 4, 4), m in matrix(2), n in matrix(2)) {
        let twice = p.linear_substitute(&n).unwrap().linear_substitute(&m).unwrap();
        prop_assert_eq!(twice, p.linear_substitute(&(&n * &m)).unwrap());
    }

    #[test]
    fn substitution_commutes_with_evaluation(
        p in poly(2, 4, 4),
        m in matrix(2),
        v in prop::collection::vec(rational(), 2),
    ) {
        let lhs = p.linear_substitute(&m).unwrap().evaluate(&v).unwrap();
        prop_assert_eq!(lhs, p.evaluate(&m.apply(&v).unwrap()).unwrap());
    }

    #[test]
    fn action_composes((k, p) in group_and_poly(4), a in 0usize..4, b in 0usize..4) {
        let g = &test_groups()[k];
        let g1 = g.element(a % g.order());
        let g2 = g.element(b % g.order());
        let lhs = act(g1, &act(g2, &p).unwrap()).unwrap();
        prop_assert_eq!(lhs, act(&(g2 * g1), &p).unwrap());
    }

    #[test]
    fn reynolds_is_linear_and_fixes_invariants(
        (k, p) in group_and_poly(5),
        q_seed in poly(2, 5, 4),
        c in rational(),
    ) {
        let g = &test_groups()[k];
        let q = if g.dim() == 1 { Polynomial::constant(1, c.clone()) } else { q_seed };
        let lhs = reynolds(g, &(&p + &q.scale(&c))).unwrap();
        let rhs = &reynolds(g, &p).unwrap() + &reynolds(g, &q).unwrap().scale(&c);
        prop_assert_eq!(lhs, rhs);
        let inv = reynolds(g, &p).unwrap();
        prop_assert_eq!(&reynolds(g, &(&inv * &p)).unwrap(), &(&inv * &reynolds(g, &p).unwrap()));
    }

    #[test]
    fn rewrites_realize_and_convert((k, p) in group_and_poly(7)) {
        let g = &test_groups()[k];
        let f = reynolds(g, &p).unwrap();
        let cert = rewrite_in_j(g, &f).unwrap();
        prop_assert!(cert.max_key_degree() <= g.order() as u32);
        let mut rw = Rewriter::new(g).unwrap();
        prop_assert_eq!(rw.realize(&cert).unwrap(), f.clone());
        let g_cert = j_to_g(g, &cert).unwrap();
        prop_assert_eq!(rw.realize(&g_cert).unwrap(), f);
    }

    #[test]
    fn power_sums_are_homogeneous_invariants(k in 0usize..5, raw in prop::collection::vec(0u32..4, 3)) {
        let g = &test_groups()[k];
        let mut mu: Vec<u32> = raw[..g.dim()].to_vec();
        if mu.iter().all(|&x| x == 0) {
            mu[0] = 1;
        }
        let mu = ExponentVector::new(mu);
        let j = orbit_power_sum(g, &mu).unwrap().value;
        prop_assert!(j.is_homogeneous_of_degree(mu.degree()));
        prop_assert!(is_invariant(g, &j).unwrap());
    }

    #[test]
    fn rationalization_preserves_the_function((k, p) in group_and_poly(3), q in poly(2, 2, 3)) {
        let g = &test_groups()[k];
        let q = if g.dim() == 1 { parse_polynomial("x1 - 2", 1).unwrap() } else { q };
        prop_assume!(!q.is_zero());
        let num = &reynolds(g, &p).unwrap() * &q;
        let w = RationalInvariant::new(num, q).unwrap();
        let r = rationalize_invariant(g, &w).unwrap();
        prop_assert!(r.same_function(&w).unwrap());
        prop_assert!(r.invariance_witness(g).unwrap().is_none());
    }
}

#[test]
fn closing_a_closed_group_changes_nothing() {
    for g in test_groups() {
        let again = group_closure(g.elements(), Some(g.dim()), 100).unwrap();
        assert_eq!(again.order(), g.order());
        assert!(g.elements().iter().all(|m| again.contains(m)));
    }
}

#[test]
fn engine_types_cross_threads() {
    fn check<T: Send + Sync>() {}
    check::<Polynomial>();
    check::<MatrixGroup>();
    check::<RationalInvariant>();
    check::<invring::GeneratorPolynomial>();
    check::<invring::ResolventTable>();
    check::<Rewriter<'static>>();
}
