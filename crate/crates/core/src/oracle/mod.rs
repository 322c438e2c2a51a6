//! Independent reference computations for differential testing: κ evaluated
//! numerically with rigorous error bounds, exhaustive small-box enumeration,
//! and the embedded golden classification lists.
//!
//! Nothing here feeds the main computation path.

pub mod ball;
pub mod golden;

use crate::adim::{adim_at_most, adim_general};
use crate::arith::{Order, Sign, Triple};
use crate::enumerate::{FoundVia, TripleRecord};
use crate::error::{Error, Result};
use ball::{cos_pi_ratio, pi, Ball};

/// A value of κ with a rigorous error radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KappaEstimate {
    pub value: f64,
    pub radius: f64,
    /// Working precision in bits; 53 for the plain `f64` path.
    pub bits: u32,
    conclusive: bool,
}

impl KappaEstimate {
    pub fn sign(&self) -> Option<Sign> {
        if !self.conclusive {
            None
        } else if self.value < 0.0 {
            Some(Sign::Negative)
        } else {
            Some(Sign::Positive)
        }
    }
}

fn cos_ball(k: u64, s: Order, pi: &Ball) -> Ball {
    match s {
        Order::Infinity => Ball::exact_int(1, pi.prec),
        Order::Finite(s) => cos_pi_ratio(k, s, pi),
    }
}

/// κ at a fixed working precision.
pub fn kappa_ball(t: &Triple, k: u64, bits: u32) -> KappaEstimate {
    let p = pi(bits + 16);
    let [x, y, z] = t.entries().map(|s| cos_ball(k, s, &p));
    let quad = x.mul(&x).add(&y.mul(&y)).add(&z.mul(&z)).add(&x.mul(&y).mul(&z).mul_int(2));
    let kappa = Ball::exact_int(1, p.prec).sub(&quad);
    KappaEstimate {
        value: kappa.mid_f64(),
        radius: kappa.rad_f64(),
        bits,
        conclusive: kappa.sign_known(),
    }
}

/// κ with precision doubled from 64 up to 4096 bits until its sign is certain.
/// The last estimate is returned either way; check [`KappaEstimate::sign`].
pub fn kappa_float(t: &Triple, k: u64) -> KappaEstimate {
    let mut bits = 64;
    loop {
        let est = kappa_ball(t, k, bits);
        if est.conclusive || bits >= 4096 {
            return est;
        }
        bits *= 2;
    }
}

/// Sign of κ according to the oracle, or an error when no precision decides it.
pub fn kappa_sign(t: &Triple, k: u64) -> Result<Sign> {
    kappa_float(t, k).sign().ok_or_else(|| Error::Inconclusive { triple: t.to_string(), k: k as u128 })
}

/// `cos(j pi / s)` for `0 <= j < 2s` and all `s` up to a limit, rounded from
/// ball values, for fast sweeps.
pub struct CosTable {
    rows: Vec<Vec<f64>>,
}

impl CosTable {
    pub fn new(max_s: u64) -> CosTable {
        let p = pi(128);
        let rows = (0..=max_s)
            .map(|s| if s < 2 { Vec::new() } else { (0..2 * s).map(|j| cos_pi_ratio(j, s, &p).mid_f64()).collect() })
            .collect();
        CosTable { rows }
    }

    /// `cos(j pi / s)` indexed by `j` in `[0, 2s)`.
    pub fn row(&self, s: u64) -> &[f64] {
        &self.rows[s as usize]
    }

    /// `cos(k pi / s)`, or 1 for `s = oo`.
    pub fn cos(&self, k: u64, s: Order) -> f64 {
        match s {
            Order::Infinity => 1.0,
            Order::Finite(s) => self.rows[s as usize][(k % (2 * s)) as usize],
        }
    }

    /// κ from table cosines. Each cosine is within `1e-16` and the formula
    /// adds a few roundings, so `1e-13` is a safe radius.
    pub fn kappa(&self, t: &Triple, k: u64) -> KappaEstimate {
        let [x, y, z] = t.entries().map(|s| self.cos(k, s));
        let value = 1.0 - (x * x + y * y + z * z + 2.0 * x * y * z);
        let radius = 1e-13;
        KappaEstimate { value, radius, bits: 53, conclusive: value.abs() > radius }
    }

    /// Table value when it is clearly away from zero, otherwise the
    /// escalating ball evaluation.
    pub fn kappa_sign(&self, t: &Triple, k: u64) -> Result<Sign> {
        let est = self.kappa(t, k);
        if est.value.abs() > 1e-9 {
            return Ok(if est.value < 0.0 { Sign::Negative } else { Sign::Positive });
        }
        kappa_sign(t, k)
    }
}

/// Every `r`-arithmetic triple whose finite entries are at most `bound`, by
/// exhaustive search. Compact triples use the scanning path with early exit;
/// noncompact ones are scanned in full rather than taking the closed form.
pub fn brute_enumerate(r: u128, bound: u64) -> Result<Vec<TripleRecord>> {
    let oo = Order::Infinity;
    let mut out = Vec::new();
    let mut push = |t: Triple, compact: bool| {
        let found_via = if compact { FoundVia::DirectScan } else { FoundVia::NoncompactLoop };
        out.push(TripleRecord { triple: t, adim: r, compact, found_via });
    };
    for a in 2..=bound {
        for b in a..=bound {
            for c in b..=bound {
                let Ok(t) = Triple::new(a, b, c) else { continue };
                if adim_at_most(&t, r)? == Some(r) {
                    push(t, true);
                }
            }
        }
    }
    let mut noncompact = vec![Triple::new(oo, oo, oo)?];
    for a in 2..=bound {
        noncompact.push(Triple::new(a, oo, oo)?);
        for b in a..=bound {
            if let Ok(t) = Triple::new(a, b, oo) {
                noncompact.push(t);
            }
        }
    }
    for t in noncompact {
        if adim_general(&t)?.adim == r {
            push(t, false);
        }
    }
    out.sort_by_key(|rec| rec.triple);
    Ok(out)
}
