use motzkin_ct::triangles::{
    binomial, binomial_direct, extended_row, extended_t, general_a, motzkin_generating_polynomial,
    motzkin_t, t_via_ct,
};
use motzkin_ct::TriangleSpec;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

#[test]
fn three_routes_agree_up_to_row_50() {
    for n in 0..=50u32 {
        let n64 = i64::from(n);
        let gf = motzkin_generating_polynomial(n);
        assert_eq!(gf.coefficient(n64 + 1), BigInt::zero(), "T({n},{})", n64 + 1);
        for k in -3..=2 * n64 + 5 {
            let ct = gf.coefficient(k);
            if k <= n64 {
                assert_eq!(ct, motzkin_t(n, k), "T({n},{k})");
            }
            match extended_t(n, k) {
                Ok(v) => assert_eq!(ct, v, "extended T({n},{k})"),
                Err(_) => assert!(ct.is_zero(), "CT outside the window at ({n},{k})"),
            }
        }
    }
    assert_eq!(t_via_ct(7, 9), extended_t(7, 9).unwrap());
}

#[test]
fn binomial_routes_agree_up_to_60() {
    for n in 0..=60u32 {
        for k in -1..=i64::from(n) + 1 {
            assert_eq!(binomial(n, k), binomial_direct(i64::from(n), k));
        }
    }
}

#[test]
fn extended_row_lengths() {
    for n in 0..20 {
        assert_eq!(extended_row(n).len(), 2 * n as usize + 3);
    }
}

fn palindromic_spec() -> impl Strategy<Value = TriangleSpec> {
    prop_oneof![Just(1usize), Just(2), Just(3)]
        .prop_flat_map(|half| prop::collection::vec(1i64..=9, half + 1))
        .prop_map(|left| {
            let mut coeffs = left.clone();
            coeffs.extend(left.iter().rev().skip(1));
            TriangleSpec::new(coeffs).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn general_rows_are_anti_palindromic(spec in palindromic_spec(), n in 0u32..=30) {
        let row = spec.row(n);
        let top = row.len() - 1;
        let dn = i64::from(spec.degree()) * i64::from(n);
        prop_assert_eq!(top as i64, dn + 2);
        for k in 0..=top {
            prop_assert_eq!(&row[k], &-row[top - k].clone());
        }
        prop_assert!(general_a(&spec, n, dn / 2 + 1).is_zero());
        prop_assert!(general_a(&spec, n, -1).is_zero());
        prop_assert!(general_a(&spec, n, dn + 3).is_zero());
    }
}
