//! Grow-only table of odd primes.
//!
//! Indexing is 1-based over the *odd* primes: index 1 is 3, index 36 is 157.
//! Bounds elsewhere that count over all primes (2 included) must convert.

use std::sync::{Arc, OnceLock, RwLock};

/// Shared, lazily extended list of odd primes in increasing order.
///
/// Readers take a cheap `Arc` snapshot. Extension sieves a fresh, larger
/// vector and only then swaps it in, so a snapshot is never partially filled.
pub struct PrimeTable {
    primes: RwLock<Arc<Vec<u64>>>,
}

impl PrimeTable {
    fn new() -> PrimeTable {
        PrimeTable { primes: RwLock::new(Arc::new(sieve_odd(1 << 12))) }
    }

    pub fn global() -> &'static PrimeTable {
        static TABLE: OnceLock<PrimeTable> = OnceLock::new();
        TABLE.get_or_init(PrimeTable::new)
    }

    pub fn snapshot(&self) -> Arc<Vec<u64>> {
        self.primes.read().expect("prime table lock poisoned").clone()
    }

    pub fn count(&self) -> usize {
        self.snapshot().len()
    }

    /// Snapshot holding at least `n` odd primes.
    pub fn with_count(&self, n: usize) -> Arc<Vec<u64>> {
        let snap = self.snapshot();
        if snap.len() >= n {
            return snap;
        }
        let mut limit = (snap.last().copied().unwrap_or(3) as usize).max(64) * 2;
        loop {
            let fresh = sieve_odd(limit);
            if fresh.len() >= n {
                return self.publish(fresh);
            }
            limit *= 2;
        }
    }

    /// Snapshot containing every odd prime `<= bound`.
    pub fn up_to(&self, bound: u64) -> Arc<Vec<u64>> {
        let snap = self.snapshot();
        if snap.last().is_some_and(|&p| p >= bound) {
            return snap;
        }
        self.publish(sieve_odd(bound as usize))
    }

    fn publish(&self, fresh: Vec<u64>) -> Arc<Vec<u64>> {
        let mut guard = self.primes.write().expect("prime table lock poisoned");
        if guard.len() < fresh.len() {
            *guard = Arc::new(fresh);
        }
        guard.clone()
    }
}

/// The `i`-th odd prime, 1-indexed (`odd_prime(1) == 3`).
pub fn odd_prime(i: usize) -> u64 {
    assert!(i >= 1, "odd prime indices start at 1");
    PrimeTable::global().with_count(i)[i - 1]
}

/// Odd primes `<= limit`, by a sieve of Eratosthenes.
fn sieve_odd(limit: usize) -> Vec<u64> {
    if limit < 3 {
        return Vec::new();
    }
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    let mut i = 3;
    while i <= limit {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += 2 * i;
            }
        }
        i += 2;
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The `r`-th smallest prime (2 included) not dividing `n`.
pub fn ndp(n: u128, r: usize) -> u64 {
    assert!(r >= 1);
    let mut seen = 0;
    if !n.is_multiple_of(2) {
        seen += 1;
        if seen == r {
            return 2;
        }
    }
    let mut idx = 1;
    loop {
        let p = odd_prime(idx);
        if !n.is_multiple_of(p as u128) {
            seen += 1;
            if seen == r {
                return p;
            }
        }
        idx += 1;
    }
}

/// Largest prime strictly below `n`.
pub fn prime_below(n: u64) -> u64 {
    assert!(n > 2);
    (2..n).rev().find(|&p| is_prime(p)).expect("2 is prime")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_prime_indexing() {
        assert_eq!(odd_prime(1), 3);
        assert_eq!(odd_prime(2), 5);
        assert_eq!(odd_prime(36), 157);
        assert_eq!(odd_prime(52), 241);
        assert_eq!(odd_prime(5000), 48619);
    }

    #[test]
    fn ndp_examples() {
        assert_eq!(ndp(84, 1), 5);
        assert_eq!(ndp(84, 2), 11);
        assert_eq!(ndp(1, 1), 2);
        assert_eq!(ndp(2 * 42, 3), 13);
    }

    #[test]
    fn ndp_by_direct_scan() {
        for n in (1u128..=100_000).step_by(97) {
            for r in 1..=10 {
                let q = ndp(n, r);
                assert!(is_prime(q));
                assert_ne!(n % q as u128, 0);
                let below = (2..q).filter(|&p| is_prime(p) && n % p as u128 != 0).count();
                assert_eq!(below, r - 1, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn sieve_agrees_with_trial_division() {
        let table = PrimeTable::global().up_to(20_000);
        let want: Vec<u64> = (3..=20_000).filter(|&n| is_prime(n)).collect();
        assert_eq!(&table[..want.len()], &want[..]);
        assert_eq!(prime_below(251), 241);
        assert_eq!(prime_below(383), 383 - 4);
    }

    #[test]
    fn concurrent_growth_is_consistent() {
        let handles: Vec<_> = (1..8)
            .map(|t| std::thread::spawn(move || odd_prime(t * 3000)))
            .collect();
        for (t, h) in (1..8).zip(handles) {
            let p = h.join().unwrap();
            assert!(is_prime(p));
            assert_eq!(PrimeTable::global().snapshot()[t * 3000 - 1], p);
        }
    }
}
