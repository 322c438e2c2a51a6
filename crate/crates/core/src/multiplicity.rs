//! `#H`: how many units `k mod 2m` give the same conjugate triangle as `k = 1`.
//!
//! `k` lies in `H1` when `cos(k pi/s) = ±cos(pi/s)` for every finite `s`, i.e.
//! `k ≡ ±1 (mod s)`. The sign flips exactly when `k ≡ s ± 1 (mod 2s)`. `k` is
//! in `H` when the flips leave the triple of cosines unchanged up to an even
//! number of sign changes, and in `H2` when nothing flips.
//!
//! An order 2 entry has cosine 0, so its sign never matters: `k ≡ 3 (mod 4)`
//! is not counted as a flip, and any flip parity is admissible once 2 is
//! an entry.

use serde::Serialize;

use crate::arith::{gcd, gcd_u128, ord2, Order, Triple};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    BruteForce,
    ClosedForm,
    /// Exact count by lifting residue choices through the CRT.
    ResidueLift,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MultiplicityMode {
    Auto,
    ForceBrute,
    ForceClosed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityReport {
    pub h: u128,
    pub h1: u128,
    pub h2: u128,
    /// Pairs of finite entries that are coprime.
    pub t: u8,
    /// Pairs of finite entries with gcd at most 2.
    pub u: u8,
    pub method: Method,
    /// Closed form against the exact count, when both were computed.
    pub agreement: Option<bool>,
}

/// Above this `2m` the closed form is not cross-checked under `Auto`.
pub const CLOSED_CHECK_LIMIT: u128 = 1_000_000;
/// Above this `2m`, `Auto` switches from the scan to the residue lift.
pub const BRUTE_LIMIT: u128 = 100_000_000;

fn pair_counts(t: &Triple) -> (u8, u8) {
    let fin: Vec<u64> = t.finite_entries().collect();
    let (mut coprime, mut small) = (0, 0);
    for i in 0..fin.len() {
        for j in i + 1..fin.len() {
            let g = gcd(fin[i], fin[j]);
            coprime += u8::from(g == 1);
            small += u8::from(g <= 2);
        }
    }
    (coprime, small)
}

#[derive(Default)]
struct Tally {
    h: u128,
    h1: u128,
    h2: u128,
}

impl Tally {
    fn add(&mut self, flips: u32, has_two: bool, weight: u128) {
        self.h1 += weight;
        if flips == 0 {
            self.h2 += weight;
        }
        if flips.is_multiple_of(2) || has_two {
            self.h += weight;
        }
    }

    fn report(self, t: &Triple, method: Method) -> MultiplicityReport {
        let (tc, uc) = pair_counts(t);
        MultiplicityReport { h: self.h, h1: self.h1, h2: self.h2, t: tc, u: uc, method, agreement: None }
    }
}

/// Scan of all `k` in `[1, 2m]` coprime to `2m`. Even `k` never are, so
/// only odd `k` are visited.
pub fn multiplicity_brute(t: &Triple) -> MultiplicityReport {
    let fin: Vec<u64> = t.finite_entries().collect();
    let fin = &fin[..];
    let has_two = fin.contains(&2);
    let two_m = t.two_m();
    // Residues k mod 2s, stepped alongside k to avoid a division per entry.
    let mut res_buf = [0u64; 3];
    let res = &mut res_buf[..fin.len()];
    for (r, &s) in res.iter_mut().zip(fin) {
        *r = 1 % (2 * s);
    }
    let mut tally = Tally::default();
    let mut k: u128 = 1;
    while k < two_m {
        let mut in_h1 = true;
        let mut flips = 0;
        for (&r, &s) in res.iter().zip(fin) {
            // k ≡ ±1 (mod s), i.e. k mod 2s is one of 1, s - 1, s + 1, 2s - 1.
            if r == 1 || r == 2 * s - 1 {
                continue;
            }
            if r == s - 1 || r == s + 1 {
                flips += 1;
                continue;
            }
            in_h1 = false;
            break;
        }
        if in_h1 && gcd_u128(k, two_m) == 1 {
            tally.add(flips, has_two, 1);
        }
        k += 2;
        for (r, &s) in res.iter_mut().zip(fin) {
            *r += 2;
            if *r >= 2 * s {
                *r -= 2 * s;
            }
        }
    }
    tally.report(t, Method::BruteForce)
}

/// Exact count without scanning: choose for each finite `s` a residue
/// `k mod 2s` in `{1, 2s-1, s-1, s+1}` (odd ones only), keep the pairwise
/// compatible choices; each lifts to exactly one `k mod 2m`.
pub fn multiplicity_lift(t: &Triple) -> MultiplicityReport {
    let fin: Vec<u64> = t.finite_entries().collect();
    let has_two = fin.contains(&2);
    let choices: Vec<Vec<(u64, bool)>> = fin.iter().map(|&s| residue_choices(s)).collect();
    let mut tally = Tally::default();
    let mut pick: Vec<(u64, bool)> = Vec::with_capacity(fin.len());
    lift(&fin, &choices, &mut pick, &mut tally, has_two);
    tally.report(t, Method::ResidueLift)
}

/// `(residue mod 2s, flips)` for the admissible odd residues.
fn residue_choices(s: u64) -> Vec<(u64, bool)> {
    let m = 2 * s;
    let mut out: Vec<(u64, bool)> = Vec::with_capacity(4);
    for (r, flip) in [(1 % m, false), (m - 1, false), (s - 1, true), ((s + 1) % m, true)] {
        if r % 2 == 1 && !out.iter().any(|&(x, _)| x == r) {
            out.push((r, flip));
        }
    }
    out
}

fn lift(fin: &[u64], choices: &[Vec<(u64, bool)>], pick: &mut Vec<(u64, bool)>, tally: &mut Tally, has_two: bool) {
    let i = pick.len();
    if i == fin.len() {
        let flips = pick.iter().filter(|p| p.1).count() as u32;
        tally.add(flips, has_two, 1);
        return;
    }
    for &(r, flip) in &choices[i] {
        let ok = (0..i).all(|j| {
            let g = gcd(2 * fin[i], 2 * fin[j]);
            r % g == pick[j].0 % g
        });
        if ok {
            pick.push((r, flip));
            lift(fin, choices, pick, tally, has_two);
            pick.pop();
        }
    }
}

fn pow2_at_least_2(e: u8) -> u128 {
    (1u128 << e).max(2)
}

/// Closed forms for `#H`, `#H1`, `#H2`.
///
/// Known weak spots: with `a = 2` the `#H1` formula counts the vacuous
/// condition mod 2 as a real sign choice and overcounts, and for one infinite
/// entry the criterion for `H = H1` is read off the proof rather than the
/// statement. `#H` is cross-checked against [`multiplicity_brute`] under
/// [`MultiplicityMode::Auto`].
pub fn multiplicity_closed(t: &Triple) -> MultiplicityReport {
    let (tc, uc) = pair_counts(t);
    let (h, h1, h2) = match t.infinite_count() {
        3 => (1, 1, 1),
        2 => (2, 2, 2),
        1 => {
            let (a, b) = (t.a().value().unwrap(), t.b().value().unwrap());
            let g = gcd(a, b);
            let any_even = a % 2 == 0 || b % 2 == 0;
            let h1 = if g <= 2 && any_even {
                8
            } else if g > 2 && !any_even {
                2
            } else {
                4
            };
            let h2 = if g == 1 { 4 } else { 2 };
            let h = if ord2(a) == ord2(b) && g != 2 { h1 } else { h1 / 2 };
            (h, h1, h2)
        }
        _ => {
            let v: Vec<u64> = t.finite_entries().collect();
            let h2 = pow2_at_least_2(tc);
            if v.iter().all(|x| x % 2 == 1) {
                let h1 = pow2_at_least_2(uc);
                (h1, h1, h2)
            } else {
                let h1 = 2 * pow2_at_least_2(uc);
                let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
                let full = perms.iter().any(|p| {
                    let (x, y, z) = (v[p[0]], v[p[1]], v[p[2]]);
                    let case_i = uc <= 1 && ord2(x) == ord2(y) && ord2(y) > ord2(z);
                    let case_ii = uc == 2
                        && gcd(x, y) == 1
                        && gcd(x, z) == 1
                        && ord2(y) == ord2(z)
                        && ord2(y) > 0;
                    case_i || case_ii
                });
                (if full { h1 } else { h1 / 2 }, h1, h2)
            }
        }
    };
    MultiplicityReport { h, h1, h2, t: tc, u: uc, method: Method::ClosedForm, agreement: None }
}

/// `#H` by the requested method. `Auto` uses an exact count (the scan when
/// `2m <= BRUTE_LIMIT`, the residue lift beyond) and, for `2m <= CLOSED_CHECK_LIMIT`,
/// records whether the closed form agrees on `#H`.
pub fn multiplicity(t: &Triple, mode: MultiplicityMode) -> MultiplicityReport {
    match mode {
        MultiplicityMode::ForceBrute => multiplicity_brute(t),
        MultiplicityMode::ForceClosed => multiplicity_closed(t),
        MultiplicityMode::Auto => {
            let mut rep = if t.two_m() <= BRUTE_LIMIT { multiplicity_brute(t) } else { multiplicity_lift(t) };
            if t.two_m() <= CLOSED_CHECK_LIMIT {
                rep.agreement = Some(multiplicity_closed(t).h == rep.h);
            }
            rep
        }
    }
}

/// `#H` as used on the hot path of the enumeration: exact and O(1).
pub fn h_exact(t: &Triple) -> u128 {
    multiplicity_lift(t).h
}

/// Convenience wrapper validating orders and hyperbolicity.
pub fn multiplicity_of(a: Order, b: Order, c: Order, mode: MultiplicityMode) -> Result<MultiplicityReport> {
    Ok(multiplicity(&Triple::new(a, b, c)?, mode))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::euler_phi;

    const OO: Order = Order::Infinity;

    fn h(a: impl Into<Order>, b: impl Into<Order>, c: impl Into<Order>) -> u128 {
        multiplicity_brute(&Triple::new(a, b, c).unwrap()).h
    }

    #[test]
    fn brute_examples() {
        assert_eq!(h(2, 3, 7), 8);
        assert_eq!(h(4, 4, 4), 2);
        assert_eq!(h(2, 3, 8), 8);
        assert_eq!(h(3, 5, 7), 8);
        assert_eq!(h(3, 4, 4), 8);
        assert_eq!(h(OO, OO, OO), 1);
        for a in 2..40 {
            assert_eq!(h(a, OO, OO), 2);
        }
    }

    #[test]
    fn closed_examples() {
        let c = |a, b, cc| multiplicity_closed(&Triple::new(a, b, cc).unwrap()).h;
        assert_eq!(c(3, 5, 7), 8);
        assert_eq!(c(3, 4, 4), 8);
        assert_eq!(c(2, 3, 8), 8);
        assert_eq!(c(2, 3, 7), 8);
        let r = multiplicity(&Triple::new(2, 3, 7).unwrap(), MultiplicityMode::Auto);
        assert_eq!((r.h, r.agreement), (8, Some(true)));
    }

    #[test]
    fn lift_matches_brute() {
        let mut pool: Vec<Order> = (2..=40).map(Order::Finite).collect();
        pool.push(OO);
        for (i, &a) in pool.iter().enumerate() {
            for (j, &b) in pool.iter().enumerate().skip(i) {
                for &c in &pool[j..] {
                    let Ok(t) = Triple::new(a, b, c) else { continue };
                    let (x, y) = (multiplicity_brute(&t), multiplicity_lift(&t));
                    assert_eq!((x.h, x.h1, x.h2), (y.h, y.h1, y.h2), "{t}");
                }
            }
        }
    }

    #[test]
    fn subgroup_chain_and_divisibility() {
        for a in 2..=30u64 {
            for b in a..=30 {
                for c in b..=30 {
                    let Ok(t) = Triple::new(a, b, c) else { continue };
                    let r = multiplicity_brute(&t);
                    assert!(r.h2 <= r.h && r.h <= r.h1, "{t}");
                    assert!(r.h1 == r.h || r.h1 == 2 * r.h, "{t}");
                    assert_eq!(euler_phi(t.two_m()) % r.h, 0, "{t}");
                }
            }
        }
    }

    #[test]
    fn residue_choices_dedupe() {
        assert_eq!(residue_choices(2), vec![(1, false), (3, false)]);
        assert_eq!(residue_choices(3), vec![(1, false), (5, false)]);
        assert_eq!(residue_choices(4), vec![(1, false), (7, false), (3, true), (5, true)]);
        assert_eq!(residue_choices(5), vec![(1, false), (9, false)]);
    }
}
