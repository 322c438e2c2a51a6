//! Arithmetic dimension: the number of Galois classes `k mod 2m` (up to `H`)
//! whose conjugate triangle is hyperbolic.

use serde::Serialize;

use crate::arith::{chi_sign, euler_phi, gcd, Order, Sign, Triple};
use crate::curvature::{sandwich_folded, sandwich_sign_small};
use crate::error::{Error, Result};
use crate::multiplicity::{h_exact, multiplicity, MultiplicityMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AdimResult {
    pub adim: u128,
    pub m: u128,
    pub phi2m: u128,
    pub h: u128,
    /// `phi(2m) / h`, the degree of the invariant trace field.
    pub classes: u128,
    pub hyperbolic_ks: u128,
    pub spherical_ks: u128,
}

/// Full scans refuse `2m` beyond this.
pub const SCAN_LIMIT: u128 = 1 << 40;

struct Scan {
    hyperbolic: u128,
    spherical: u128,
    stopped: bool,
}

/// Unit test for residues `k mod 2s`: a lookup table for moderate `s`, gcd beyond.
enum UnitTest {
    Table(Vec<bool>),
    Gcd(u64),
}

impl UnitTest {
    const TABLE_LIMIT: u64 = 1 << 16;

    fn new(s: u64, eager: bool) -> UnitTest {
        if eager && s <= Self::TABLE_LIMIT {
            UnitTest::Table((0..2 * s).map(|r| gcd(r, s) == 1).collect())
        } else {
            UnitTest::Gcd(s)
        }
    }

    #[inline]
    fn is_unit(&self, r: u64) -> bool {
        match self {
            UnitTest::Table(t) => t[r as usize],
            UnitTest::Gcd(s) => gcd(r, *s) == 1,
        }
    }
}

/// Walks the odd `k` in `[1, 2m)` coprime to `2m`, tallying curvature signs,
/// and stops once more than `stop_after` hyperbolic `k` have been seen.
///
/// `k` and `2m - k` fold to the same residues, so only `k < m` is visited and
/// every hit counts twice. `eager` builds unit tables, which pays off only
/// for scans expected to run to completion.
fn scan(t: &Triple, stop_after: Option<u128>, eager: bool) -> Result<Scan> {
    let [Order::Finite(a), Order::Finite(b), Order::Finite(c)] = t.entries() else {
        unreachable!("scan called on a noncompact triple");
    };
    let m = t.m();
    let (a2, b2, c2) = (2 * a, 2 * b, 2 * c);
    let (ua, ub, uc) = (UnitTest::new(a, eager), UnitTest::new(b, eager), UnitTest::new(c, eager));
    // k mod 2s for each entry, advanced by 2 per step.
    let (mut ra, mut rb, mut rc) = (1 % a2, 1 % b2, 1 % c2);
    let small = 2 * a as u128 * b as u128 * c as u128 <= 1 << 62;
    let mut out = Scan { hyperbolic: 0, spherical: 0, stopped: false };
    let mut k: u128 = 1;
    while k < m {
        // Every prime factor of 2m divides 2, a, b or c, and k is odd.
        if ua.is_unit(ra) && ub.is_unit(rb) && uc.is_unit(rc) {
            let ka = if ra > a { a2 - ra } else { ra };
            let kb = if rb > b { b2 - rb } else { rb };
            let kc = if rc > c { c2 - rc } else { rc };
            let sign = if small {
                sandwich_sign_small(a as i64, b as i64, c as i64, ka as i64, kb as i64, kc as i64)
            } else {
                sandwich_folded(a, b, c, ka, kb, kc).sign()
            };
            match sign {
                Sign::Negative => {
                    out.hyperbolic += 2;
                    if stop_after.is_some_and(|cap| out.hyperbolic > cap) {
                        out.stopped = true;
                        return Ok(out);
                    }
                }
                Sign::Positive => out.spherical += 2,
                Sign::Zero => return Err(Error::ZeroCurvature { triple: t.to_string(), k }),
            }
        }
        k += 2;
        ra = step(ra, a2);
        rb = step(rb, b2);
        rc = step(rc, c2);
    }
    Ok(out)
}

#[inline]
fn step(r: u64, modulus: u64) -> u64 {
    let r = r + 2;
    if r >= modulus {
        r - modulus
    } else {
        r
    }
}

fn result(t: &Triple, hyperbolic: u128, spherical: u128, h: u128) -> Result<AdimResult> {
    if !hyperbolic.is_multiple_of(h) {
        return Err(Error::NonDivisible { triple: t.to_string(), hyperbolic, h });
    }
    let phi2m = euler_phi(t.two_m());
    Ok(AdimResult {
        adim: hyperbolic / h,
        m: t.m(),
        phi2m,
        h,
        classes: phi2m / h,
        hyperbolic_ks: hyperbolic,
        spherical_ks: spherical,
    })
}

/// `adim(t)`. Noncompact triples take the fast path: all their conjugates
/// are hyperbolic, so the answer is `phi(2m) / #H`.
pub fn adim(t: &Triple) -> Result<AdimResult> {
    if !t.is_compact() {
        let h = multiplicity(t, MultiplicityMode::Auto).h;
        let phi = euler_phi(t.two_m());
        return result(t, phi, 0, h);
    }
    adim_general(t)
}

/// `adim(t)` by scanning every unit, including for noncompact triples.
pub fn adim_general(t: &Triple) -> Result<AdimResult> {
    if !t.is_hyperbolic() {
        return Err(Error::NotHyperbolic { triple: t.to_string(), chi: chi_sign(t.a(), t.b(), t.c()) });
    }
    if t.two_m() > SCAN_LIMIT {
        return Err(Error::TooLarge(format!("2m = {}", t.two_m())));
    }
    let h = multiplicity(t, MultiplicityMode::Auto).h;
    if !t.is_compact() {
        let (mut hyp, mut sph) = (0u128, 0u128);
        for k in 1..t.two_m() as u64 {
            if gcd(k, t.two_m() as u64) != 1 {
                continue;
            }
            match crate::curvature::curvature_sign(t, k)? {
                Sign::Negative => hyp += 1,
                Sign::Positive => sph += 1,
                Sign::Zero => return Err(Error::ZeroCurvature { triple: t.to_string(), k: k as u128 }),
            }
        }
        return result(t, hyp, sph, h);
    }
    let s = scan(t, None, true)?;
    result(t, s.hyperbolic, s.spherical, h)
}

/// `Some(adim(t))` when `adim(t) <= cap`, `None` otherwise. Stops scanning as
/// soon as more than `cap * #H` hyperbolic units have been seen.
pub fn adim_at_most(t: &Triple, cap: u128) -> Result<Option<u128>> {
    let h = h_exact(t);
    if !t.is_compact() {
        let a = euler_phi(t.two_m()) / h;
        return Ok((a <= cap).then_some(a));
    }
    let s = scan(t, Some(cap * h), false)?;
    if s.stopped {
        return Ok(None);
    }
    if s.hyperbolic % h != 0 {
        return Err(Error::NonDivisible { triple: t.to_string(), hyperbolic: s.hyperbolic, h });
    }
    Ok(Some(s.hyperbolic / h))
}

/// Whether `adim(t) == r`, with early exit.
pub fn is_r_arithmetic(t: &Triple, r: u128) -> Result<bool> {
    Ok(adim_at_most(t, r)? == Some(r))
}

/// `adim` straight from three orders; sorts and validates.
pub fn adim_of(a: Order, b: Order, c: Order) -> Result<AdimResult> {
    adim(&Triple::new(a, b, c)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const OO: Order = Order::Infinity;

    fn ad(a: impl Into<Order>, b: impl Into<Order>, c: impl Into<Order>) -> AdimResult {
        adim(&Triple::new(a, b, c).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(ad(2, 3, 7).adim, 1);
        assert_eq!(ad(2, 3, 13).adim, 2);
        assert_eq!(ad(2, 3, 19).adim, 3);
        assert_eq!(ad(7, OO, OO).adim, 3);
        assert_eq!(ad(OO, OO, OO).adim, 1);
        assert_eq!(ad(11, 11, OO).adim, 5);
        let r = ad(2, 3, 7);
        assert_eq!((r.m, r.phi2m, r.h, r.classes), (42, 24, 8, 3));
        assert_eq!((r.hyperbolic_ks, r.spherical_ks), (8, 16));
    }

    #[test]
    fn r_arithmetic() {
        let t = Triple::new(2, 3, 7).unwrap();
        assert!(is_r_arithmetic(&t, 1).unwrap());
        assert!(!is_r_arithmetic(&t, 2).unwrap());
        assert!(is_r_arithmetic(&Triple::new(2, 3, 11).unwrap(), 1).unwrap());
        assert_eq!(adim_at_most(&Triple::new(2, 3, 19).unwrap(), 2).unwrap(), None);
    }

    #[test]
    fn general_path_matches_fast_path_for_noncompact() {
        for a in 2..=40u64 {
            for b in [Order::Finite(a), Order::Finite(a + 1), OO] {
                let Ok(t) = Triple::new(a, b, OO) else { continue };
                assert_eq!(adim(&t).unwrap(), adim_general(&t).unwrap(), "{t}");
            }
        }
    }

    #[test]
    fn result_invariants_up_to_60() {
        for a in 2..=60u64 {
            for b in a..=60 {
                for c in b..=60 {
                    let Ok(t) = Triple::new(a, b, c) else { continue };
                    let r = adim(&t).unwrap();
                    assert_eq!(r.hyperbolic_ks + r.spherical_ks, r.phi2m, "{t}");
                    assert_eq!(r.h * r.adim, r.hyperbolic_ks, "{t}");
                    assert!(r.adim >= 1 && r.adim <= r.classes, "{t}");
                    if c > 30 {
                        continue;
                    }
                    assert_eq!(adim_at_most(&t, r.adim).unwrap(), Some(r.adim), "{t}");
                    if r.adim > 1 {
                        assert_eq!(adim_at_most(&t, r.adim - 1).unwrap(), None, "{t}");
                    }
                }
            }
        }
    }

    #[test]
    fn non_hyperbolic_is_rejected() {
        let t = Triple::new_unchecked(2, 3, 6).unwrap();
        assert!(matches!(adim_general(&t), Err(Error::NotHyperbolic { .. })));
    }
}
