//! Text, CSV and JSON renderings of enumeration output. Infinity is always
//! written as `oo`.

use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{Order, Triple};
use crate::enumerate::{FoundVia, TripleRecord};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    a: Order,
    b: Order,
    c: Order,
    adim: u128,
    compact: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonRow {
    a: Order,
    b: Order,
    c: Order,
    adim: u128,
    compact: bool,
    found_via: FoundVia,
}

/// The part of a record every format preserves.
pub type RecordKey = (Triple, u128, bool);

pub fn key(rec: &TripleRecord) -> RecordKey {
    (rec.triple, rec.adim, rec.compact)
}

pub fn write_records(records: &[TripleRecord], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Text => {
            for rec in records {
                let [a, b, c] = rec.triple.entries();
                writeln!(out, "{a} {b} {c}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            // An empty result still gets its header.
            if records.is_empty() {
                w.write_record(["a", "b", "c", "adim", "compact"]).map_err(csv_err)?;
            }
            for rec in records {
                let [a, b, c] = rec.triple.entries();
                w.serialize(CsvRow { a, b, c, adim: rec.adim, compact: rec.compact }).map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let rows: Vec<JsonRow> = records
                .iter()
                .map(|rec| {
                    let [a, b, c] = rec.triple.entries();
                    JsonRow { a, b, c, adim: rec.adim, compact: rec.compact, found_via: rec.found_via }
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &rows).map_err(|e| Error::Parse(e.to_string()))?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(format!("csv: {e}"))
}

pub fn read_csv(input: impl Read) -> Result<Vec<RecordKey>> {
    let mut rdr = csv::Reader::from_reader(input);
    let mut out = Vec::new();
    for row in rdr.deserialize::<CsvRow>() {
        let row = row.map_err(csv_err)?;
        out.push((Triple::new(row.a, row.b, row.c)?, row.adim, row.compact));
    }
    Ok(out)
}

pub fn read_json(input: impl Read) -> Result<Vec<RecordKey>> {
    let rows: Vec<JsonRow> = serde_json::from_reader(input).map_err(|e| Error::Parse(e.to_string()))?;
    rows.into_iter()
        .map(|row| Ok((Triple::new(row.a, row.b, row.c)?, row.adim, row.compact)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn recs() -> Vec<TripleRecord> {
        let oo = Order::Infinity;
        vec![
            TripleRecord { triple: Triple::new(2, 3, 7).unwrap(), adim: 1, compact: true, found_via: FoundVia::DirectScan },
            TripleRecord { triple: Triple::new(2, 3, oo).unwrap(), adim: 1, compact: false, found_via: FoundVia::NoncompactLoop },
        ]
    }

    fn render(format: Format, records: &[TripleRecord]) -> String {
        let mut buf = Vec::new();
        write_records(records, format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn csv_shape() {
        let s = render(Format::Csv, &recs());
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines, ["a,b,c,adim,compact", "2,3,7,1,true", "2,3,oo,1,false"]);
        assert_eq!(render(Format::Csv, &[]).trim(), "a,b,c,adim,compact");
    }

    #[test]
    fn round_trips() {
        let want: Vec<RecordKey> = recs().iter().map(key).collect();
        assert_eq!(read_csv(render(Format::Csv, &recs()).as_bytes()).unwrap(), want);
        let json = render(Format::Json, &recs());
        assert!(json.contains("\"oo\""));
        assert_eq!(read_json(json.as_bytes()).unwrap(), want);
        assert_eq!(render(Format::Text, &recs()), "2 3 7\n2 3 oo\n");
    }
}
