//! Exact sign of the curvature
//! `kappa(a,b,c;k) = 1 - (x^2 + y^2 + z^2 + 2xyz)` with `x = cos(k pi/a)` etc.
//!
//! For finite `c`, `kappa >= 0` exactly when the folded `k_c/c` lies between
//! `|k_a/a + k_b/b - 1|` and `1 - |k_a/a - k_b/b|`. Cross-multiplied this is
//! a pair of integer comparisons, evaluated here in `i128`: with the bounds
//! used by the enumeration, products like `k_c*a*b` exceed `i64`.

use serde::Serialize;

use crate::arith::{fold, fold_finite, gcd_u128, Order, Sign, Triple};
use crate::error::{Error, Result};

pub type CurvatureSign = Sign;

/// The three sides of the integer sandwich
/// `left <= middle <= right  <=>  kappa >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Sandwich {
    pub ka: u64,
    pub kb: u64,
    pub kc: u64,
    /// `c * |k_a b + k_b a - ab|`
    pub left: i128,
    /// `k_c * a * b`
    pub middle: i128,
    /// `c * (ab - |k_a b - k_b a|)`
    pub right: i128,
}

impl Sandwich {
    pub fn sign(&self) -> Sign {
        if self.left == self.middle || self.middle == self.right {
            Sign::Zero
        } else if self.left < self.middle && self.middle < self.right {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// Sandwich for finite `a, b, c` and folded residues.
#[inline]
pub fn sandwich_folded(a: u64, b: u64, c: u64, ka: u64, kb: u64, kc: u64) -> Sandwich {
    let (a, b, c) = (a as i128, b as i128, c as i128);
    let (ka_, kb_, kc_) = (ka as i128, kb as i128, kc as i128);
    let ab = a * b;
    Sandwich {
        ka,
        kb,
        kc,
        left: c * (ka_ * b + kb_ * a - ab).abs(),
        middle: kc_ * ab,
        right: c * (ab - (ka_ * b - kb_ * a).abs()),
    }
}

/// [`Sandwich::sign`] in `i64`, valid when `2abc < 2^62`.
#[inline]
pub fn sandwich_sign_small(a: i64, b: i64, c: i64, ka: i64, kb: i64, kc: i64) -> Sign {
    let ab = a * b;
    let left = c * (ka * b + kb * a - ab).abs();
    let middle = kc * ab;
    let right = c * (ab - (ka * b - kb * a).abs());
    if left == middle || middle == right {
        Sign::Zero
    } else if left < middle && middle < right {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Sign from already folded residues; `c = None` means `c = oo`.
#[inline]
pub fn curvature_sign_folded(a: u64, b: u64, c: Option<u64>, ka: u64, kb: u64, kc: u64) -> Sign {
    match c {
        None => Sign::Negative,
        Some(c) => sandwich_folded(a, b, c, ka, kb, kc).sign(),
    }
}

/// The sandwich for `t` at `k`, or `None` when `c = oo`.
pub fn sandwich(t: &Triple, k: u64) -> Option<Sandwich> {
    match t.entries() {
        [Order::Finite(a), Order::Finite(b), Order::Finite(c)] => Some(sandwich_folded(
            a,
            b,
            c,
            fold_finite(k, a),
            fold_finite(k, b),
            fold_finite(k, c),
        )),
        _ => None,
    }
}

/// Sign of `kappa(t; k)`. Requires `gcd(k, 2m) = 1`; a hyperbolic `t` then never
/// yields [`Sign::Zero`], so callers treat Zero as an invariant breach.
pub fn curvature_sign(t: &Triple, k: u64) -> Result<Sign> {
    if gcd_u128(k as u128, t.two_m()) != 1 {
        return Err(Error::NotUnit { k: k as u128, two_m: t.two_m() });
    }
    Ok(match sandwich(t, k) {
        // Every conjugate of a noncompact triangle is hyperbolic.
        None => Sign::Negative,
        Some(s) => s.sign(),
    })
}

/// Same as [`curvature_sign`] but without the unit check, for probing
/// degenerate inputs such as Euclidean triples.
pub fn curvature_sign_unchecked(t: &Triple, k: u64) -> Sign {
    sandwich(t, k).map_or(Sign::Negative, |s| s.sign())
}

/// Smallest `c` from which `(a, b, c)` is hyperbolic at conjugate `q` for all `c`
/// not divisible by `q`: `ceil(q ab / |q_a b + q_b a - ab|)`.
pub fn c_bound_for_prime(a: u64, b: u64, q: u64) -> Result<u128> {
    let ab = a as u128 * b as u128;
    if ab.is_multiple_of(q as u128) {
        return Err(Error::PrimeDividesPair { q, ab });
    }
    let (qa, qb) = (fold_finite(q, a) as i128, fold_finite(q, b) as i128);
    let den = (qa * b as i128 + qb * a as i128 - ab as i128).unsigned_abs();
    // Zero only for (2, 2), which admits no hyperbolic c.
    if den == 0 {
        return Err(Error::NotHyperbolic { triple: format!("({a}, {b}, c)"), chi: Sign::Positive });
    }
    Ok((q as u128 * ab).div_ceil(den))
}

/// `|ab - k_a b - k_b a| >= 1`.
pub fn abkab_check(a: Order, b: Order, k: u64) -> bool {
    match (a, b) {
        (Order::Finite(a), Order::Finite(b)) => {
            let (ka, kb) = (fold(k, a.into()) as i128, fold(k, b.into()) as i128);
            (a as i128 * b as i128 - ka * b as i128 - kb * a as i128).abs() >= 1
        }
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: u64, b: u64, c: u64) -> Triple {
        Triple::new(a, b, c).unwrap()
    }

    #[test]
    fn sign_examples() {
        assert_eq!(curvature_sign(&t(2, 3, 7), 1).unwrap(), Sign::Negative);
        assert_eq!(curvature_sign(&t(2, 3, 7), 11).unwrap(), Sign::Positive);
        assert_eq!(curvature_sign(&t(2, 3, 7), 5).unwrap(), Sign::Positive);
        let noncompact = Triple::new(2, 3, Order::Infinity).unwrap();
        assert_eq!(curvature_sign(&noncompact, 5).unwrap(), Sign::Negative);
        let euclid = Triple::new_unchecked(2, 3, 6).unwrap();
        assert_eq!(curvature_sign_unchecked(&euclid, 1), Sign::Zero);
        assert!(matches!(curvature_sign(&t(2, 3, 7), 7), Err(Error::NotUnit { .. })));
    }

    #[test]
    fn sandwich_values() {
        let s = sandwich(&t(2, 3, 7), 11).unwrap();
        assert_eq!((s.ka, s.kb, s.kc), (1, 1, 3));
        // 1/6 <= 3/7 <= 5/6 scaled by 42
        assert_eq!((s.left, s.middle, s.right), (7, 18, 35));
    }

    #[test]
    fn bound_examples() {
        assert_eq!(c_bound_for_prime(2, 3, 5).unwrap(), 30);
        assert_eq!(c_bound_for_prime(2, 4, 7).unwrap(), 28);
        assert_eq!(c_bound_for_prime(3, 3, 5).unwrap(), 15);
        assert!(c_bound_for_prime(3, 5, 5).is_err());
        assert!(matches!(c_bound_for_prime(2, 2, 3), Err(Error::NotHyperbolic { .. })));
    }

    #[test]
    fn abkab_examples() {
        assert!(abkab_check(2.into(), 3.into(), 1));
        assert!(abkab_check(3.into(), 4.into(), 5));
        assert!(abkab_check(5.into(), 7.into(), 11));
    }

    #[test]
    fn identity_class_is_hyperbolic() {
        for a in 2..=20 {
            for b in a..=20 {
                for c in b..=40 {
                    if let Ok(tr) = Triple::new(a, b, c) {
                        assert_eq!(curvature_sign(&tr, 1).unwrap(), Sign::Negative, "{tr}");
                    }
                }
            }
        }
    }

    #[test]
    fn large_entries_do_not_overflow() {
        // Near the r = 1 safe-mode ceiling: c ~ 18 * 241^4.
        let (a, b, c) = (722u64, 348_485u64, 60_724_709_417u64);
        let s = sandwich_folded(a, b, c, 1, 1, 1);
        assert!(s.left > 0 && s.right > 0);
        assert_eq!(s.middle, a as i128 * b as i128);
    }
}
