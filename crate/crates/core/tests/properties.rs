use proptest::prelude::*;

use trigroups::adim::{adim_general, is_r_arithmetic};
use trigroups::arith::{fold_finite, gcd, odd_prime, Order, Sign, Triple};
use trigroups::curvature::{abkab_check, c_bound_for_prime, curvature_sign, curvature_sign_unchecked, sandwich_folded, sandwich_sign_small};
use trigroups::multiplicity::{multiplicity, MultiplicityMode};

fn hyperbolic(max: u64) -> impl Strategy<Value = Triple> {
    (2..=max, 2..=max, 2..=max).prop_filter_map("not hyperbolic", |(a, b, c)| Triple::new(a, b, c).ok())
}

fn unit(t: &Triple, k: u64) -> u64 {
    // Nearest unit mod 2m at or after k.
    let two_m = t.two_m() as u64;
    (k % two_m..).find(|&k| gcd(k, two_m) == 1).unwrap()
}

fn abc(t: &Triple) -> (u64, u64, u64) {
    let f: Vec<u64> = t.finite_entries().collect();
    (f[0], f[1], f[2])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn abkab_holds_for_units(t in hyperbolic(60), k in 1u64..10_000) {
        let k = unit(&t, k);
        prop_assert!(abkab_check(t.a(), t.b(), k));
        prop_assert!(abkab_check(t.a(), t.c(), k));
        prop_assert!(abkab_check(t.b(), t.c(), k));
    }

    #[test]
    fn positive_means_angle_excess(t in hyperbolic(60).prop_filter("compact", |t| t.is_compact()), k in 1u64..10_000) {
        let k = unit(&t, k);
        let (a, b, c) = abc(&t);
        if curvature_sign(&t, k).unwrap() == Sign::Positive {
            let (ka, kb, kc) = (fold_finite(k, a), fold_finite(k, b), fold_finite(k, c));
            prop_assert!(ka * b * c + kb * a * c + kc * a * b > a * b * c);
        }
    }

    #[test]
    fn sign_ignores_entry_order(a in 2u64..=30, b in 2u64..=30, c in 2u64..=30, k in 1u64..1000) {
        let (ka, kb, kc) = (fold_finite(k, a), fold_finite(k, b), fold_finite(k, c));
        let s = sandwich_folded(a, b, c, ka, kb, kc).sign();
        prop_assert_eq!(sandwich_folded(b, a, c, kb, ka, kc).sign(), s);
        prop_assert_eq!(sandwich_folded(c, b, a, kc, kb, ka).sign(), s);
        prop_assert_eq!(sandwich_folded(a, c, b, ka, kc, kb).sign(), s);
        prop_assert_eq!(sandwich_folded(b, c, a, kb, kc, ka).sign(), s);
    }

    #[test]
    fn small_sandwich_matches_wide(a in 2i64..100_000, b in 2i64..100_000, c in 2i64..100_000, k in 1u64..1 << 40) {
        let (ka, kb, kc) = (fold_finite(k, a as u64), fold_finite(k, b as u64), fold_finite(k, c as u64));
        let wide = sandwich_folded(a as u64, b as u64, c as u64, ka, kb, kc).sign();
        prop_assert_eq!(sandwich_sign_small(a, b, c, ka as i64, kb as i64, kc as i64), wide);
    }

    #[test]
    fn prime_bound_forces_hyperbolic(a in 2u64..=40, b in 3u64..=40, qi in 0usize..40, extra in 0u64..2000) {
        let (a, b) = (a.min(b), a.max(b));
        // The qi-th odd prime not dividing ab.
        let q = (1..).map(odd_prime).filter(|q| (a * b) % q != 0).nth(qi).unwrap();
        let bound = c_bound_for_prime(a, b, q).unwrap();
        let mut c = (bound as u64).max(b) + extra;
        if c % q == 0 {
            c += 1;
        }
        let Ok(t) = Triple::new(a, b, c) else { return Ok(()) };
        prop_assert_eq!(curvature_sign_unchecked(&t, q), Sign::Negative);
    }

    #[test]
    fn multiplicity_chain(t in hyperbolic(50)) {
        let rep = multiplicity(&t, MultiplicityMode::ForceBrute);
        prop_assert!(rep.h2 <= rep.h && rep.h <= rep.h1);
        let full = adim_general(&t).unwrap();
        prop_assert_eq!(full.phi2m % rep.h, 0);
        prop_assert_eq!(full.hyperbolic_ks % rep.h, 0);
        prop_assert!(is_r_arithmetic(&t, full.adim).unwrap());
    }
}

#[test]
fn noncompact_entries_never_flip() {
    let t = Triple::new(3, Order::Infinity, Order::Infinity).unwrap();
    for k in [1u64, 5, 7, 11] {
        assert_eq!(curvature_sign(&t, k).unwrap(), Sign::Negative);
    }
}
