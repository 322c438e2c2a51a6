//! Published classification lists, embedded from `golden/`.
//!
//! `golden/r<k>.txt` holds one triple per line as `a b c`, with `oo` for an
//! infinite entry and `#` starting a comment. `golden/counts.tsv` has columns
//! `r`, `compact`, `noncompact`.

use std::collections::BTreeSet;
use std::path::Path;

use crate::arith::{Order, Triple};
use crate::error::{Error, Result};

pub const FIXTURES: [(&str, &str); 6] = [
    ("r1.txt", include_str!("../../golden/r1.txt")),
    ("r2.txt", include_str!("../../golden/r2.txt")),
    ("r3.txt", include_str!("../../golden/r3.txt")),
    ("r4.txt", include_str!("../../golden/r4.txt")),
    ("r5.txt", include_str!("../../golden/r5.txt")),
    ("counts.tsv", include_str!("../../golden/counts.tsv")),
];

/// Largest `r` with a full list.
pub const MAX_LISTED_R: u64 = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenSet {
    pub r: u64,
    pub compact: Vec<Triple>,
    pub noncompact: Vec<Triple>,
    pub counts: Option<(usize, usize)>,
}

impl GoldenSet {
    pub fn all(&self) -> BTreeSet<Triple> {
        self.compact.iter().chain(&self.noncompact).copied().collect()
    }

    pub fn has_lists(&self) -> bool {
        !self.compact.is_empty() || !self.noncompact.is_empty()
    }
}

/// Triples from fixture text, sorted. Blank lines and `#` comments are skipped.
pub fn parse_fixture(text: &str) -> Result<Vec<Triple>> {
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = || Error::Parse(format!("fixture line {}: {line:?}", no + 1));
        if fields.len() != 3 {
            return Err(bad());
        }
        let o = |s: &str| s.parse::<Order>().map_err(|_| bad());
        out.push(Triple::new(o(fields[0])?, o(fields[1])?, o(fields[2])?)?);
    }
    out.sort();
    Ok(out)
}

/// `(r, compact, noncompact)` rows of the counts table.
pub fn parse_counts(text: &str) -> Result<Vec<(u64, usize, usize)>> {
    let mut rdr = csv::ReaderBuilder::new().delimiter(b'\t').from_reader(text.as_bytes());
    rdr.deserialize::<(u64, usize, usize)>()
        .map(|row| row.map_err(|e| Error::Parse(format!("counts table: {e}"))))
        .collect()
}

fn split(r: u64, triples: Vec<Triple>, counts: Option<(usize, usize)>) -> GoldenSet {
    let (compact, noncompact) = triples.into_iter().partition(|t| t.is_compact());
    GoldenSet { r, compact, noncompact, counts }
}

fn embedded(name: &str) -> &'static str {
    FIXTURES.iter().find(|f| f.0 == name).map(|f| f.1).expect("fixture is embedded")
}

pub fn counts() -> Vec<(u64, usize, usize)> {
    parse_counts(embedded("counts.tsv")).expect("embedded counts table parses")
}

/// Embedded data for `r`: lists for `r <= 5`, counts up to 15, `None` beyond.
pub fn load(r: u64) -> Option<GoldenSet> {
    let count = counts().into_iter().find(|c| c.0 == r).map(|c| (c.1, c.2));
    if (1..=MAX_LISTED_R).contains(&r) {
        let triples = parse_fixture(embedded(&format!("r{r}.txt"))).expect("embedded fixture parses");
        Some(split(r, triples, count))
    } else {
        count.map(|c| GoldenSet { r, compact: Vec::new(), noncompact: Vec::new(), counts: Some(c) })
    }
}

/// A fixture file from disk, for `r`.
pub fn load_path(r: u64, path: &Path) -> Result<GoldenSet> {
    let text = std::fs::read_to_string(path)?;
    Ok(split(r, parse_fixture(&text)?, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_match_counts() {
        for r in 1..=5 {
            let g = load(r).unwrap();
            let (nc, nn) = g.counts.unwrap();
            assert_eq!((g.compact.len(), g.noncompact.len()), (nc, nn), "r={r}");
            assert_eq!(g.all().len(), nc + nn);
        }
        assert_eq!(load(12).unwrap().counts, Some((699, 92)));
        assert_eq!(load(15).unwrap().counts, Some((86, 8)));
        assert!(load(16).is_none());
    }

    #[test]
    fn fixture_rejects_garbage() {
        assert!(parse_fixture("2 3\n").is_err());
        assert!(parse_fixture("2 3 6\n").is_err());
        assert!(parse_fixture("2 x 7\n").is_err());
        assert_eq!(parse_fixture("# c\n\n2 3 7 # tail\n").unwrap().len(), 1);
    }

    #[test]
    fn lists_are_sorted_and_disjoint() {
        let sets: Vec<_> = (1..=5).map(|r| load(r).unwrap().all()).collect();
        for i in 0..5 {
            for j in i + 1..5 {
                assert!(sets[i].is_disjoint(&sets[j]), "r={} and r={}", i + 1, j + 1);
            }
        }
    }
}
