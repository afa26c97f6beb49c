use pisano_core::modfib::{fib10, fib_mod, lucas_mod, pisano_period};
use pisano_core::subseq::{is_cyclic_shift, subsequence_period, SubsequenceSpec};
use pisano_core::{compute_shift, star_polygon, verify_quasi, QuasiClass};
use proptest::prelude::*;

fn f(n: i64, m: u64) -> u64 {
    fib_mod(n, m).unwrap().value()
}

proptest! {
    #[test]
    fn recurrence_holds(n in -1_000_000_000i64..1_000_000_000, m in 2u64..10_000) {
        prop_assert_eq!((f(n, m) + f(n + 1, m)) % m, f(n + 2, m));
    }

    #[test]
    fn addition_law(a in -100_000i64..100_000, b in -100_000i64..100_000, m in 2u64..500) {
        let rhs = (f(a - 1, m) * f(b, m) + f(a, m) * f(b + 1, m)) % m;
        prop_assert_eq!(f(a + b, m), rhs);
    }

    #[test]
    fn word_width_does_not_matter(n in any::<i64>(), m in 2u8..=255) {
        let narrow = u64::from(fib_mod(n, m).unwrap().value());
        let wide = fib_mod(n, u128::from(m)).unwrap().value() as u64;
        let mid = u64::from(fib_mod(n, u16::from(m)).unwrap().value());
        prop_assert_eq!(narrow, wide);
        prop_assert_eq!(narrow, mid);
    }

    #[test]
    fn huge_modulus_matches_u128_reference(n in 0i64..5_000, m in (1u64 << 62)..u64::MAX) {
        // straightforward iteration in u128
        let (mut a, mut b) = (0u128, 1u128);
        for _ in 0..n {
            let c = (a + b) % u128::from(m);
            a = b;
            b = c;
        }
        prop_assert_eq!(u128::from(f(n, m)), a);
    }

    #[test]
    fn pisano_lookup_agrees(m in 2u32..200, n in -10_000i64..10_000) {
        let p = pisano_period(m).unwrap();
        prop_assert_eq!(p.at(n), fib_mod(n, m).unwrap().value());
    }

    #[test]
    fn lucas_is_sum_of_neighbours(n in -1_000_000i64..1_000_000, m in 2u64..1_000) {
        prop_assert_eq!(lucas_mod(n, m).unwrap().value(), (f(n - 1, m) + f(n + 1, m)) % m);
    }

    #[test]
    fn rotations_are_cyclic_shifts(v in prop::collection::vec(0u8..10, 0..40), s in 0usize..40) {
        let mut w = v.clone();
        if !w.is_empty() {
            let len = w.len();
            w.rotate_left(s % len);
        }
        prop_assert!(is_cyclic_shift(&v, &w));
    }

    #[test]
    fn complete_subsequences_follow_their_certificate(k in 0u32..60, idx in 0usize..16, j in 0i64..10_000) {
        let units = [1u32, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 49, 53, 59];
        let r = units[idx];
        let cert = compute_shift(k, r).unwrap();
        prop_assert_eq!(fib10(i64::from(k) + i64::from(r) * j), cert.predicted_term(j));
    }
}

#[test]
fn pisano_period_is_minimal_and_closed() {
    for m in 2u32..=300 {
        let p = pisano_period(m).unwrap();
        let len = p.len() as i64;
        assert_eq!((f(len, m.into()), f(len + 1, m.into())), (0, 1 % u64::from(m)));
        assert!(len <= 6 * i64::from(m), "m={m}");
        let res = p.residues();
        assert!(res.windows(2).skip(1).all(|w| !(w[0] == 0 && w[1] == 1)));
    }
}

#[test]
fn both_class_needs_digits_zero_or_five() {
    for s in SubsequenceSpec::all() {
        let p = subsequence_period(s);
        let class = verify_quasi(&p);
        if class == QuasiClass::Both {
            assert!(p.terms().iter().all(|&t| t == 0 || t == 5), "{s:?}");
        }
        let poly = star_polygon(s);
        assert_eq!(poly.n as usize, p.len());
    }
}
