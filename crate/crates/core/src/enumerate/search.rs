//! The per-pair search over `c`.
//!
//! For an odd prime `q` not dividing `ab`, every `c >= bound(q)` with `q ∤ c`
//! makes the `q`-th conjugate hyperbolic. An `r`-arithmetic triple has at
//! most `r - 1` hyperbolic classes besides the identity, so once `r` primes
//! are "active" (their bound is below `c`) one of them must divide `c`. The
//! primes are dealt round-robin into `r` running products; below the next
//! bound only multiples of those products need testing, and once every
//! product exceeds `c_max` nothing is left to test.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::adim::is_r_arithmetic;
use crate::arith::{fold_finite, PrimeTable, Triple};
use crate::curvature::c_bound_for_prime;
use crate::enumerate::{Bounds, FoundVia, TripleRecord};
use crate::error::Result;

/// Bound value to the primes sharing it, in increasing bound order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundToPrimes(pub BTreeMap<u128, Vec<u64>>);

impl BoundToPrimes {
    /// Bounds for the first `count` odd primes not dividing `a * b`.
    pub fn build(a: u64, b: u64, count: usize, primes: &[u64]) -> Result<BoundToPrimes> {
        let mut map: BTreeMap<u128, Vec<u64>> = BTreeMap::new();
        let mut taken = 0;
        for &q in primes {
            if taken == count {
                break;
            }
            if a.is_multiple_of(q) || b.is_multiple_of(q) {
                continue;
            }
            map.entry(c_bound_for_prime(a, b, q)?).or_default().push(q);
            taken += 1;
        }
        assert_eq!(taken, count, "prime table too short for a={a} b={b}");
        Ok(BoundToPrimes(map))
    }
}

/// Per-run data shared by all pairs.
#[derive(Clone, Debug)]
pub struct SearchContext {
    pub bounds: Bounds,
    pub r: usize,
    primes: Arc<Vec<u64>>,
    /// Most distinct odd prime factors of any `b <= b_max`.
    omega_max: usize,
    /// Least `K` with the product of the first `K` odd primes above `c_max`.
    k0: usize,
}

impl SearchContext {
    pub fn new(bounds: &Bounds, r: usize) -> SearchContext {
        let (mut omega_max, mut prod) = (0, 1u128);
        let mut k0 = 0;
        let mut acc = 1u128;
        for i in 1.. {
            let p = crate::arith::odd_prime(i) as u128;
            if prod * p <= bounds.b_max as u128 {
                prod *= p;
                omega_max += 1;
            }
            if acc <= bounds.c_max as u128 {
                acc *= p;
                k0 += 1;
            }
            if prod * p > bounds.b_max as u128 && acc > bounds.c_max as u128 {
                break;
            }
        }
        let primes = PrimeTable::global().with_count(bounds.max_prime_index + 2 * omega_max + 8);
        SearchContext { bounds: *bounds, r, primes, omega_max, k0 }
    }

    /// Smallest `b` from which `(a, b)` needs no search at all: the direct scan
    /// range is empty, and enough primes have `bound(q) <= b <= c_min` that
    /// every running product passes `c_max` before the first nonempty range.
    ///
    /// For `q < b`, `bound(q) <= b` exactly when `b >= 2qa / (a - q_a)`. A pair's
    /// prime list is the first `n` odd primes not dividing `ab`, which contains
    /// all but at most `omega_max` of the first `n + omega_max` primes not
    /// dividing `a`.
    pub fn skip_threshold(&self, a: u64) -> u64 {
        let n = self.bounds.max_prime_index;
        let need = self.omega_max + self.r * self.k0;
        let mut thresholds: Vec<u128> = self
            .primes
            .iter()
            .filter(|&&q| !a.is_multiple_of(q))
            .take(n + self.omega_max)
            .map(|&q| {
                let qa = fold_finite(q, a) as u128;
                (2 * q as u128 * a as u128).div_ceil(a as u128 - qa)
            })
            .collect();
        if thresholds.len() < need || need == 0 {
            return u64::MAX;
        }
        thresholds.sort_unstable();
        let t = thresholds[need - 1].min(u64::MAX as u128) as u64;
        t.max(self.bounds.direct_limit + 1)
    }
}

/// Everything `search_cs` needs about one `(a, b)`.
#[derive(Clone, Debug)]
pub struct PairContext {
    pub a: u64,
    pub b: u64,
    /// Smallest `c >= b` with `(a, b, c)` hyperbolic.
    pub c_min: u64,
    pub direct_limit: u64,
    pub c_max: u64,
    pub bound_to_primes: BoundToPrimes,
}

impl PairContext {
    pub fn new(a: u64, b: u64, bounds: &Bounds, ctx: &SearchContext) -> PairContext {
        PairContext::with_primes(a, b, bounds, &ctx.primes)
    }

    pub fn with_primes(a: u64, b: u64, bounds: &Bounds, primes: &[u64]) -> PairContext {
        let btp = BoundToPrimes::build(a, b, bounds.max_prime_index, primes)
            .expect("primes in the list do not divide ab");
        PairContext {
            a,
            b,
            c_min: c_min(a, b),
            direct_limit: bounds.direct_limit,
            c_max: bounds.c_max,
            bound_to_primes: btp,
        }
    }
}

/// Smallest `c >= b` making `(a, b, c)` hyperbolic: `c > ab / (ab - a - b)`.
pub fn c_min(a: u64, b: u64) -> u64 {
    let (ab, s) = (a * b, a + b);
    assert!(ab > s, "({a}, {b}) admits no hyperbolic c");
    b.max(ab / (ab - s) + 1)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub direct_candidates: u64,
    pub divisor_candidates: u64,
}

/// Emits every `c` with `adim(a, b, c) = r` (possibly more than once).
pub fn search_cs(pair: &PairContext, r: u128, mut sink: impl FnMut(TripleRecord)) -> Result<SearchStats> {
    let (a, b) = (pair.a, pair.b);
    let mut stats = SearchStats::default();
    let mut test = |c: u64, via: FoundVia| -> Result<()> {
        let t = Triple::new(a, b, c)?;
        if is_r_arithmetic(&t, r)? {
            sink(TripleRecord { triple: t, adim: r, compact: true, found_via: via });
        }
        Ok(())
    };

    for c in pair.c_min..=pair.direct_limit {
        stats.direct_candidates += 1;
        test(c, FoundVia::DirectScan)?;
    }

    let mut divisors = vec![1u64; r as usize];
    let mut next = 0;
    let mut start = pair.direct_limit as u128 + 1;
    let end = pair.c_max as u128 + 1;
    let sentinel = std::iter::once((end, Vec::new()));
    let mut groups: Vec<(u128, Vec<u64>)> = pair.bound_to_primes.0.clone().into_iter().collect();
    if !pair.bound_to_primes.0.contains_key(&end) {
        groups.extend(sentinel);
        groups.sort_by_key(|g| g.0);
    }
    for (bound, primes) in groups {
        if start >= end || divisors.iter().all(|&d| d > pair.c_max) {
            break;
        }
        let lo = start.max(pair.c_min as u128);
        let hi = bound.min(end);
        if lo < hi {
            for d in minimal_divisors(&divisors) {
                let d = d as u128;
                let mut c = lo.div_ceil(d) * d;
                while c < hi {
                    stats.divisor_candidates += 1;
                    test(c as u64, FoundVia::DivisorFilter)?;
                    c += d;
                }
            }
        }
        start = start.max(bound);
        for q in primes {
            divisors[next] = divisors[next].saturating_mul(q);
            next = (next + 1) % divisors.len();
        }
    }
    Ok(stats)
}

/// Divisors none of whose proper divisors are also in the list: their
/// multiples cover all the others'.
fn minimal_divisors(divisors: &[u64]) -> Vec<u64> {
    let mut ds = divisors.to_vec();
    ds.sort_unstable();
    ds.dedup();
    let mut out: Vec<u64> = Vec::with_capacity(ds.len());
    for d in ds {
        if !out.iter().any(|&e| d % e == 0) {
            out.push(d);
        }
    }
    out
}
