//! Exact integer primitives: orders with infinity, gcd/lcm/ord2/phi,
//! residue folding and the hyperbolicity test.

mod order;
pub mod primes;

use std::fmt;

use serde::Serialize;

pub use order::{Order, Triple};
pub use primes::{ndp, odd_prime, PrimeTable};

/// Three-valued sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}

/// Exact sign of `chi = 1/a + 1/b + 1/c - 1` for entries in any order.
///
/// With finite set `F`, `chi` has the sign of `sum over i in F of prod(F - i) - prod(F)`;
/// each infinite entry just drops out of both sides.
pub fn chi_sign(a: Order, b: Order, c: Order) -> Sign {
    let fin: Vec<u128> = [a, b, c].iter().filter_map(|o| o.value()).map(u128::from).collect();
    let prod: u128 = fin.iter().product();
    let sum: u128 = (0..fin.len())
        .map(|i| fin.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| *v).product::<u128>())
        .sum();
    // No finite entries: the empty sum 0 against the empty product 1.
    match sum.cmp(&prod) {
        std::cmp::Ordering::Less => Sign::Negative,
        std::cmp::Ordering::Equal => Sign::Zero,
        std::cmp::Ordering::Greater => Sign::Positive,
    }
}

/// `k_s`: the representative of `±k mod 2s` in `[0, s]`; `k` itself when `s = oo`.
pub fn fold(k: u64, s: Order) -> u64 {
    match s {
        Order::Infinity => k,
        Order::Finite(s) => fold_finite(k, s),
    }
}

#[inline]
pub fn fold_finite(k: u64, s: u64) -> u64 {
    let r = k % (2 * s);
    if r > s {
        2 * s - r
    } else {
        r
    }
}

/// Binary gcd.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    if a == 0 || b == 0 {
        return a | b;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            (a, b) = (b, a);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

pub fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn lcm_u128(a: u128, b: u128) -> u128 {
    a / gcd_u128(a, b) * b
}

/// `lcm` over the finite orders, skipping infinities; 1 for an empty set.
pub fn lcm_orders(orders: &[Order]) -> u128 {
    orders.iter().filter_map(|o| o.value()).fold(1, |acc, s| lcm_u128(acc, s as u128))
}

/// 2-adic valuation. `ord2(0)` is defined as 0 here; callers never pass 0.
pub fn ord2(n: u64) -> u32 {
    if n == 0 {
        0
    } else {
        n.trailing_zeros()
    }
}

/// Prime factorization by trial division, as `(p, e)` pairs in increasing `p`.
pub fn factorize(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut p = 2u128;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u128) -> u128 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}
