//! Vertex orders and sorted hyperbolic triples.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{chi_sign, lcm_u128, Sign};
use crate::error::{Error, Result};

/// One vertex parameter of a triangle: a finite integer `n >= 2` or infinity.
///
/// Infinity is its own variant so that no arithmetic on finite values can
/// silently absorb it. It compares greater than every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(u64),
    Infinity,
}

impl Order {
    /// Validated constructor for a finite order.
    pub fn finite(n: u64) -> Result<Order> {
        if n < 2 {
            return Err(Error::InvalidOrder(n.to_string()));
        }
        Ok(Order::Finite(n))
    }

    pub fn value(self) -> Option<u64> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Order::Infinity)
    }

    fn validate(self) -> Result<Order> {
        match self {
            Order::Finite(n) if n < 2 => Err(Error::InvalidOrder(n.to_string())),
            o => Ok(o),
        }
    }
}

impl Ord for Order {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Order::Finite(x), Order::Finite(y)) => x.cmp(y),
            (Order::Finite(_), Order::Infinity) => Ordering::Less,
            (Order::Infinity, Order::Finite(_)) => Ordering::Greater,
            (Order::Infinity, Order::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Order {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinity => f.write_str("oo"),
        }
    }
}

impl FromStr for Order {
    type Err = Error;

    /// Accepts a decimal integer `>= 2`, or `oo` / `inf` / `infinity` / `∞`.
    fn from_str(s: &str) -> Result<Order> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "oo" | "inf" | "infinity" | "∞" => return Ok(Order::Infinity),
            _ => {}
        }
        let n: u64 = t.parse().map_err(|_| Error::InvalidOrder(t.to_string()))?;
        Order::finite(n)
    }
}

impl From<u64> for Order {
    /// Unvalidated conversion, for literals in tests and tables. Use
    /// [`Order::finite`] for untrusted input.
    fn from(n: u64) -> Order {
        Order::Finite(n)
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Order::Finite(n) => serializer.serialize_u64(*n),
            Order::Infinity => serializer.serialize_str("oo"),
        }
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Order, D::Error> {
        struct OrderVisitor;

        impl Visitor<'_> for OrderVisitor {
            type Value = Order;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer >= 2 or the string \"oo\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Order, E> {
                Order::finite(v).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Order, E> {
                let v = u64::try_from(v).map_err(E::custom)?;
                self.visit_u64(v)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Order, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(OrderVisitor)
    }
}

/// A sorted triple `a <= b <= c` together with `m = lcm` of its finite entries.
///
/// [`Triple::new`] only admits hyperbolic triples. [`Triple::new_unchecked`]
/// skips that test and exists for probing precondition failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    a: Order,
    b: Order,
    c: Order,
    m: u128,
}

impl Triple {
    /// Sorts the entries and requires `chi(a,b,c) < 0`.
    pub fn new(a: impl Into<Order>, b: impl Into<Order>, c: impl Into<Order>) -> Result<Triple> {
        let t = Triple::new_unchecked(a, b, c)?;
        match chi_sign(t.a, t.b, t.c) {
            Sign::Negative => Ok(t),
            chi => Err(Error::NotHyperbolic { triple: t.to_string(), chi }),
        }
    }

    /// Sorts and validates the entries without requiring hyperbolicity.
    pub fn new_unchecked(
        a: impl Into<Order>,
        b: impl Into<Order>,
        c: impl Into<Order>,
    ) -> Result<Triple> {
        let mut v = [a.into().validate()?, b.into().validate()?, c.into().validate()?];
        v.sort();
        let m = v.iter().filter_map(|o| o.value()).fold(1u128, |acc, s| lcm_u128(acc, s as u128));
        Ok(Triple { a: v[0], b: v[1], c: v[2], m })
    }

    pub fn a(&self) -> Order {
        self.a
    }

    pub fn b(&self) -> Order {
        self.b
    }

    pub fn c(&self) -> Order {
        self.c
    }

    pub fn entries(&self) -> [Order; 3] {
        [self.a, self.b, self.c]
    }

    /// The finite entries, in increasing order.
    pub fn finite_entries(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries().into_iter().filter_map(Order::value)
    }

    /// `lcm` of the finite entries; 1 when every entry is infinite.
    pub fn m(&self) -> u128 {
        self.m
    }

    pub fn two_m(&self) -> u128 {
        2 * self.m
    }

    pub fn is_compact(&self) -> bool {
        !self.c.is_infinite()
    }

    pub fn is_hyperbolic(&self) -> bool {
        chi_sign(self.a, self.b, self.c) == Sign::Negative
    }

    /// Number of infinite entries.
    pub fn infinite_count(&self) -> usize {
        self.entries().iter().filter(|o| o.is_infinite()).count()
    }
}

impl Ord for Triple {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.a, self.b, self.c).cmp(&(other.a, other.b, other.c))
    }
}

impl PartialOrd for Triple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Triple {
    /// As the array `[a, b, c]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(serializer)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}
