use std::sync::OnceLock;

use minpoly_core::ffgrp::{self, MatGroup};
use minpoly_core::lie::{self, GroupSpec};
use num_bigint::BigUint;
use proptest::prelude::*;

fn su33() -> &'static MatGroup {
    static G: OnceLock<MatGroup> = OnceLock::new();
    G.get_or_init(|| ffgrp::build_group(&GroupSpec::su(3, 3)).unwrap())
}

fn sp43() -> &'static MatGroup {
    static G: OnceLock<MatGroup> = OnceLock::new();
    G.get_or_init(|| ffgrp::build_group(&GroupSpec::sp(2, 3)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conjugation_preserves_class(i in 0usize..6048, j in 0usize..6048) {
        let g = su33();
        let (x, h) = (g.elements()[i], g.elements()[j]);
        let y = g.mul(g.mul(h, x), g.inverse(h));
        let data = g.classes();
        prop_assert_eq!(data.membership[g.index_of(y).unwrap()], data.membership[i]);
    }

    #[test]
    fn symplectic_conjugation_preserves_class(i in 0usize..51840, j in 0usize..51840) {
        let g = sp43();
        let (x, h) = (g.elements()[i], g.elements()[j]);
        let y = g.mul(g.mul(h, x), g.inverse(h));
        let data = g.classes();
        prop_assert_eq!(data.membership[g.index_of(y).unwrap()], data.membership[i]);
        prop_assert_eq!(g.element_order(y), g.element_order(x));
    }
}

#[test]
fn class_equations_and_forms() {
    for g in [su33(), sp43()] {
        let data = g.classes();
        data.validate().unwrap();
        let e = data.exponent() as i64;
        for c in 0..data.len() {
            assert_eq!(data.power(c, e), 0);
            assert_eq!(g.order() % data.centralizer_order(c), 0);
        }
        for &x in g.elements() {
            assert!(g.is_member_matrix(&g.space().decode(x)));
        }
    }
}

/// Every classical group up to order 10^6 that the enumerator supports.
fn small_specs() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for q in 2..=99u64 {
        if lie::prime_power(q).is_some() {
            out.push(GroupSpec::sl(2, q));
        }
    }
    for (n, qs) in [(3u32, &[2u64, 3, 4, 5][..]), (4, &[2][..])] {
        out.extend(qs.iter().map(|&q| GroupSpec::sl(n, q)));
    }
    out.extend([3u64, 4, 5].map(|q| GroupSpec::su(3, q)));
    out.push(GroupSpec::su(4, 2));
    out.extend([2u64, 3, 4].map(|q| GroupSpec::sp(2, q)));
    out
}

#[test]
fn enumeration_matches_formulas_and_sylow_criterion() {
    let limit = BigUint::from(1_000_000u32);
    for spec in small_specs() {
        let order = spec.order().unwrap();
        assert!(order <= limit, "{spec}");
        let g = ffgrp::build_group(&spec).unwrap();
        assert_eq!(BigUint::from(g.order()), order, "{spec}");
        let primes: Vec<u64> = minpoly_core::arith::factorize_u64(g.order())
            .unwrap()
            .primes()
            .map(|p| p.try_into().unwrap())
            .collect();
        for p in primes {
            if p == 2 || p == spec.r {
                continue;
            }
            let formula = lie::cyclic_sylow(&spec, p).unwrap().cyclic;
            assert_eq!(formula, ffgrp::sylow_is_cyclic_bruteforce(&g, p), "{spec} p={p}");
        }
    }
}
