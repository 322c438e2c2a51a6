//! Complete enumeration of the triples with a given arithmetic dimension `r`.
//!
//! The compact search runs over `a < 3q`, `b < 6q^2`, `c < 18q^4`, where `q`
//! bounds the `r`-th nondividing prime of `2m`. For each `(a, b)` the small
//! values of `c` are scanned directly and the rest are reached through a
//! divisor filter (see [`search`]). Noncompact triples have every finite entry
//! at most `2q` and are checked exhaustively.

pub mod search;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::adim::{adim, adim_at_most};
use crate::arith::primes::{prime_below, PrimeTable};
use crate::arith::{odd_prime, Order, Triple};
use crate::error::{Error, Result};

pub use search::{search_cs, BoundToPrimes, PairContext, SearchContext, SearchStats};

/// How `maxNDP`, the largest nondividing prime the bounds must cover, is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundMode {
    /// Odd-prime index `max(36, 2r + 5)`. Fast; not backed by a proof.
    Paper,
    /// Largest prime below `max(251, ceil(5 r ln r))`.
    Safe,
    /// An explicit 1-based odd-prime index.
    ExplicitIndex(usize),
}

impl fmt::Display for BoundMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundMode::Paper => f.write_str("paper"),
            BoundMode::Safe => f.write_str("safe"),
            BoundMode::ExplicitIndex(n) => write!(f, "index:{n}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    pub r: u64,
    pub bound_mode: BoundMode,
    /// Number of odd primes (not dividing `ab`) fed to the divisor filter.
    /// `None` means `maxNDPIndex * r`.
    pub max_prime_index: Option<usize>,
    /// `c` up to `direct_scan_limit_multiplier * maxNDP` is scanned directly.
    pub direct_scan_limit_multiplier: u64,
    /// Worker threads; 0 lets the pool decide.
    pub threads: usize,
    /// Skip `(a, b)` pairs for which the divisor filter provably tests nothing.
    pub skip_settled_pairs: bool,
}

impl EnumerationConfig {
    pub fn new(r: u64) -> EnumerationConfig {
        EnumerationConfig {
            r,
            bound_mode: BoundMode::Paper,
            max_prime_index: None,
            direct_scan_limit_multiplier: 2,
            threads: 0,
            skip_settled_pairs: true,
        }
    }

    pub fn with_mode(mut self, mode: BoundMode) -> Self {
        self.bound_mode = mode;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_ndp_index: usize,
    pub max_ndp: u64,
    pub a_max: u64,
    pub b_max: u64,
    pub c_max: u64,
    /// Inclusive bound on finite entries of noncompact triples.
    pub noncompact_max: u64,
    pub max_prime_index: usize,
    /// Last `c` covered by the direct scan.
    pub direct_limit: u64,
}

fn odd_prime_index(p: u64) -> usize {
    let table = PrimeTable::global().up_to(p);
    table.binary_search(&p).expect("not an odd prime") + 1
}

pub fn bounds_for_r(cfg: &EnumerationConfig) -> Bounds {
    assert!(cfg.r >= 1, "r must be positive");
    let (max_ndp_index, max_ndp) = match cfg.bound_mode {
        BoundMode::Paper => {
            let i = 36.max(2 * cfg.r as usize + 5);
            (i, odd_prime(i))
        }
        BoundMode::Safe => {
            let r = cfg.r as f64;
            let threshold = 251.max((5.0 * r * r.ln()).ceil() as u64);
            let p = prime_below(threshold);
            (odd_prime_index(p), p)
        }
        BoundMode::ExplicitIndex(i) => (i, odd_prime(i)),
    };
    let q = max_ndp;
    Bounds {
        max_ndp_index,
        max_ndp,
        a_max: 3 * q - 1,
        b_max: 6 * q * q - 1,
        c_max: 18 * q.pow(4) - 1,
        noncompact_max: 2 * q,
        max_prime_index: cfg.max_prime_index.unwrap_or(max_ndp_index * cfg.r as usize),
        direct_limit: cfg.direct_scan_limit_multiplier * q,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FoundVia {
    DirectScan,
    DivisorFilter,
    NoncompactLoop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TripleRecord {
    pub triple: Triple,
    pub adim: u128,
    pub compact: bool,
    pub found_via: FoundVia,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    pub pairs: u64,
    pub pairs_skipped: u64,
    pub direct_candidates: u64,
    pub divisor_candidates: u64,
    pub noncompact_candidates: u64,
}

impl EnumerationStats {
    fn merge(mut self, o: EnumerationStats) -> EnumerationStats {
        self.pairs += o.pairs;
        self.pairs_skipped += o.pairs_skipped;
        self.direct_candidates += o.direct_candidates;
        self.divisor_candidates += o.divisor_candidates;
        self.noncompact_candidates += o.noncompact_candidates;
        self
    }
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub bounds: Bounds,
    pub records: Vec<TripleRecord>,
    pub stats: EnumerationStats,
}

impl Enumeration {
    pub fn compact_count(&self) -> usize {
        self.records.iter().filter(|r| r.compact).count()
    }

    pub fn noncompact_count(&self) -> usize {
        self.records.len() - self.compact_count()
    }
}

/// Sorted, deduplicated `r`-arithmetic triples, each re-verified by a full
/// [`adim`] computation.
pub fn enumerate(cfg: &EnumerationConfig) -> Result<Vec<TripleRecord>> {
    Ok(enumerate_with_stats(cfg)?.records)
}

pub fn enumerate_with_stats(cfg: &EnumerationConfig) -> Result<Enumeration> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    pool.install(|| run(cfg))
}

fn run(cfg: &EnumerationConfig) -> Result<Enumeration> {
    let bounds = bounds_for_r(cfg);
    let r = cfg.r as u128;
    let ctx = search::SearchContext::new(&bounds, cfg.r as usize);

    let compact: Vec<(Vec<TripleRecord>, EnumerationStats)> = (2..=bounds.a_max)
        .into_par_iter()
        .map(|a| compact_for_a(a, &bounds, &ctx, r, cfg.skip_settled_pairs))
        .collect::<Result<_>>()?;

    let (mut found, mut stats) = (BTreeMap::new(), EnumerationStats::default());
    for (recs, st) in compact {
        stats = stats.merge(st);
        for rec in recs {
            found.entry(rec.triple).or_insert(rec);
        }
    }

    let (noncompact, nst) = noncompact_pass(&bounds, r)?;
    stats = stats.merge(nst);
    for rec in noncompact {
        found.entry(rec.triple).or_insert(rec);
    }

    let records: Vec<TripleRecord> = found.into_values().collect();
    records.par_iter().try_for_each(|rec| {
        let got = adim(&rec.triple)?.adim;
        if got != r {
            return Err(Error::PostVerification { triple: rec.triple.to_string(), got, want: r });
        }
        Ok(())
    })?;
    Ok(Enumeration { bounds, records, stats })
}

fn compact_for_a(
    a: u64,
    bounds: &Bounds,
    ctx: &search::SearchContext,
    r: u128,
    skip: bool,
) -> Result<(Vec<TripleRecord>, EnumerationStats)> {
    let mut out = Vec::new();
    let mut stats = EnumerationStats::default();
    let b_skip = if skip { ctx.skip_threshold(a) } else { u64::MAX };
    for b in a.max(3)..=bounds.b_max {
        stats.pairs += 1;
        if b >= b_skip {
            stats.pairs_skipped += bounds.b_max - b + 1;
            stats.pairs += bounds.b_max - b;
            break;
        }
        let pair = PairContext::new(a, b, bounds, ctx);
        let st = search_cs(&pair, r, |rec| out.push(rec))?;
        stats.direct_candidates += st.direct_candidates;
        stats.divisor_candidates += st.divisor_candidates;
    }
    Ok((out, stats))
}

fn noncompact_pass(bounds: &Bounds, r: u128) -> Result<(Vec<TripleRecord>, EnumerationStats)> {
    let mut out = Vec::new();
    let mut stats = EnumerationStats::default();
    let n = bounds.noncompact_max;
    let mut test = |t: Triple| -> Result<()> {
        stats.noncompact_candidates += 1;
        if let Some(d) = adim_at_most(&t, r)? {
            if d == r {
                out.push(TripleRecord { triple: t, adim: d, compact: false, found_via: FoundVia::NoncompactLoop });
            }
        }
        Ok(())
    };
    let oo = Order::Infinity;
    test(Triple::new(oo, oo, oo)?)?;
    for a in 2..=n {
        test(Triple::new(a, oo, oo)?)?;
        for b in a..=n {
            if let Ok(t) = Triple::new(a, b, oo) {
                test(t)?;
            }
        }
    }
    Ok((out, stats))
}
