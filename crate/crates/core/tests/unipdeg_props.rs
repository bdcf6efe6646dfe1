use minpoly_core::unipdeg::{self, q, QPolynomial};
use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use proptest::prelude::*;

#[test]
fn hook_degree_at_j_one() {
    for d in 3..=7u32 {
        for qq in 2..=9u64 {
            let qb = BigUint::from(qq);
            let expect = &qb * (qb.pow(d - 1) - 1u32) / (&qb - 1u32);
            assert_eq!(unipdeg::hook_degree(d, 1, qq).unwrap(), expect, "d={d} q={qq}");
        }
    }
}

#[test]
fn table_degrees_are_positive_integers_at_even_q() {
    let t = unipdeg::d4minus_table();
    for qq in [2u64, 4, 8, 16, 32] {
        for (label, poly) in &t.ordinary {
            let v = poly.eval_int(qq).unwrap_or_else(|e| panic!("{label} at q={qq}: {e}"));
            assert!(v.is_positive(), "{label} at q={qq}");
        }
    }
}

#[test]
fn sp4_degrees_are_positive_integers_at_odd_q() {
    for qq in [3u64, 5, 7, 9, 11, 13, 25, 27] {
        let d = unipdeg::sp4_degree_data(qq).unwrap();
        let mut all: Vec<&BigInt> = d.unipotent.iter().map(|(_, v)| v).collect();
        all.extend(d.weil.iter().chain([&d.psi, &d.psi_s, &d.psi_t]).chain(d.psi_st.iter()));
        assert!(all.iter().all(|v| v.is_positive()), "q={qq}: {all:?}");
    }
}

fn poly() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-20i64..20, 0..6).prop_map(|c| QPolynomial::from_ints(&c))
}

proptest! {
    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in poly(), x in -7i64..8) {
        let xb = BigInt::from(x);
        prop_assert_eq!((&a + &b).eval(&xb), a.eval(&xb) + b.eval(&xb));
        prop_assert_eq!((&a * &b).eval(&xb), a.eval(&xb) * b.eval(&xb));
        prop_assert_eq!((&a - &b).eval(&xb), a.eval(&xb) - b.eval(&xb));
    }

    #[test]
    fn half_cube_is_integral_on_even_q(k in 1u64..40) {
        prop_assert!(q::half_cube().eval_int(2 * k).is_ok());
        prop_assert!(q::half_cube().eval_int(2 * k + 1).is_err());
    }
}
