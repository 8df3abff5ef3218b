use aydc::cyclotomic::{q_factorial, q_integer};
use aydc::Cyclotomic;
use proptest::prelude::*;

fn scalar(order: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 1..6).prop_map(move |terms| {
        terms.iter().enumerate().fold(Cyclotomic::zero(), |acc, (k, &(n, d))| {
            let c = Cyclotomic::from_fraction(n, d).unwrap();
            &acc + &(&c * &Cyclotomic::root_of_unity(order, k as i64))
        })
    })
}

fn order() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 12])
}

proptest! {
    #[test]
    fn field_laws((a, b, c) in order().prop_flat_map(|n| (scalar(n), scalar(n), scalar(n)))) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn inverse(a in order().prop_flat_map(scalar)) {
        if a.is_zero() {
            prop_assert!(a.inverse().is_err());
        } else {
            let inv = a.inverse().unwrap();
            prop_assert!((&a * &inv).is_one());
            prop_assert!((&inv * &a).is_one());
        }
    }

    #[test]
    fn serde_is_canonical(a in order().prop_flat_map(scalar)) {
        let text = serde_json::to_string(&a).unwrap();
        let back: Cyclotomic = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn mixed_orders_agree_after_lifting(a in scalar(3), b in scalar(4)) {
        // Q(ζ_3) and Q(ζ_4) both sit inside Q(ζ_12)
        prop_assert_eq!(&a * &b, &a.lift(12) * &b.lift(12));
    }
}

#[test]
fn roots_of_unity_sum_to_zero() {
    for n in 2..=12u32 {
        let sum = (0..n as i64).fold(Cyclotomic::zero(), |acc, k| &acc + &Cyclotomic::root_of_unity(n, k));
        assert!(sum.is_zero(), "n = {n}");
        assert!(Cyclotomic::root_of_unity(n, n as i64).is_one());
        assert_eq!(Cyclotomic::root_of_unity(n, 1).multiplicative_order(64), Some(n as u64));
    }
}

#[test]
fn q_numbers_vanish_at_the_order() {
    for p in [2u32, 3, 5, 7] {
        let w = Cyclotomic::root_of_unity(p, 1);
        assert!(q_integer(p, &w).is_zero());
        for k in 1..p {
            assert!(!q_factorial(k, &w).is_zero());
        }
        // (n)_ω = (1 − ω^n)/(1 − ω)
        for n in 0..2 * p {
            let closed = (&Cyclotomic::one() - &w.pow(n as i64).unwrap())
                .try_div(&(&Cyclotomic::one() - &w))
                .unwrap();
            assert_eq!(q_integer(n, &w), closed);
        }
    }
}
