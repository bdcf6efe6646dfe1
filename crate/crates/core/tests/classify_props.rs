use std::collections::BTreeMap;

use minpoly_core::arith::is_prime_u64;
use minpoly_core::classify::{self, ExceptionalCover, Outcome};
use minpoly_core::lie::{self, Family, GroupSpec};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::prelude::*;

const PRIME_POWERS: [u64; 12] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 13, 16, 16];

fn spec_strategy() -> impl Strategy<Value = Option<GroupSpec>> {
    (0usize..Family::ALL.len(), 1u32..=12, prop::sample::select(PRIME_POWERS.to_vec()))
        .prop_map(|(f, n, q)| GroupSpec::new(Family::ALL[f], n, q).ok())
}

fn prime_strategy() -> impl Strategy<Value = u64> {
    (2u64..=2000).prop_filter("prime", |&p| is_prime_u64(p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn classify_is_total_and_deterministic(
        spec in spec_strategy(),
        p in prime_strategy(),
        ell in prop::sample::select(vec![0u64, 2, 3, 5, 7]),
    ) {
        let Some(spec) = spec else { return Ok(()) };
        let a = classify::classify(&spec, p, ell);
        let b = classify::classify(&spec, p, ell);
        prop_assert!(a.is_ok(), "{spec} p={p} ell={ell}: {a:?}");
        prop_assert_eq!(&a, &b);
        let c = a.unwrap();
        if let Outcome::ExceptionalPossible { exceptional_order, .. } = &c.outcome {
            prop_assert!(c.sylow_cyclic);
            if let Ok(tori) = lie::exceptional_torus_orders(&spec) {
                prop_assert!(
                    tori.iter().any(|t| (t % exceptional_order).is_zero()),
                    "{spec} p={p}: {exceptional_order} divides none of {tori:?}"
                );
            }
        }
    }

    #[test]
    fn sl_of_two_power_rank_is_never_exceptional(
        k in 1u32..=3,
        q in prop::sample::select(PRIME_POWERS.to_vec()),
        p in prime_strategy(),
        ell in prop::sample::select(vec![0u64, 2, 3, 5, 7]),
    ) {
        let spec = GroupSpec::sl(1 << k, q);
        let c = classify::classify(&spec, p, ell).unwrap();
        prop_assert!(c.exceptional().is_none(), "{spec} p={p}: {:?}", c.outcome);
    }

    #[test]
    fn restriction_round_trips(
        p in prop::sample::select(vec![3u64, 5, 7, 11, 13]),
        k in 1u32..=2,
        m in 1i64..20,
        c in -20i64..20,
    ) {
        let a = p.pow(k);
        prop_assume!(m + c >= 0 && (p as i64) * m - 1 + c >= 0);
        let d = classify::RestrictionDecomposition {
            m: BigInt::from(m),
            c: BigInt::from(c),
            regular_left: BigInt::from(p as i64 * m - 1),
        };
        let values: BTreeMap<u64, BigInt> = classify::reconstruct(a, &d);
        let back = classify::restriction_decomposition(a, &values, p).unwrap();
        prop_assert_eq!(back, d);
    }
}

#[test]
fn cover_rows_are_below_order_and_dimension() {
    for cover in ExceptionalCover::ALL {
        for ell in [0u64, 2, 3, 5, 7, 13] {
            for row in classify::m9t_lookup(cover, ell) {
                assert!(row.degree < row.g_order && row.degree <= row.dim, "{cover}: {row:?}");
            }
        }
    }
}

#[test]
fn exceptional_torus_orders_divide_group_orders() {
    for fam in Family::ALL {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            for n in 1..=8 {
                let Ok(spec) = GroupSpec::new(fam, n, q) else { continue };
                let Ok(tori) = lie::exceptional_torus_orders(&spec) else { continue };
                let order: BigUint = spec.order().unwrap();
                for t in tori {
                    assert!((&order % &t).is_zero(), "{spec}: {t}");
                }
            }
        }
    }
}
