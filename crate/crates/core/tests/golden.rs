use sha2::{Digest, Sha256};
use trigroups::enumerate::{enumerate, EnumerationConfig};
use trigroups::oracle::golden::{self, FIXTURES};
use trigroups::output::{key, read_csv, read_json, write_records, Format};

// Guards the transcribed fixtures against accidental edits.
const CHECKSUMS: [(&str, &str); 6] = [
    ("r1.txt", "a27d7fa2d676cc6c775209f4064b8fafe50716d9a0f947a4e28e0e6aa539308d"),
    ("r2.txt", "674daf57db1a5b57b7ce32e6c69c7337da2631759bcf4f8a2c4d32cca6d0d974"),
    ("r3.txt", "0126d1c9f1833c5327b88b7a13071ec3ba5c35585e4b38e6346815de3c04f1f1"),
    ("r4.txt", "78eaf1fa37e9f7b46078f2394179da1dbcfb83e4b1995934af605781ee46240b"),
    ("r5.txt", "ee73a54f2223308608cfdd03afd92b2700b0299745dfb2da0bf5a1988f79d695"),
    ("counts.tsv", "e760710b189540b1d2f46104d2499d2361887d5fd35ea8e33d69e67a1fdf3b5e"),
];

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[test]
fn fixture_checksums() {
    for ((name, text), (want_name, want)) in FIXTURES.iter().zip(CHECKSUMS) {
        assert_eq!(*name, want_name);
        assert_eq!(hex(&Sha256::digest(text.as_bytes())), want, "{name} changed");
    }
}

#[test]
fn r1_round_trips_and_is_thread_independent() {
    let one = enumerate(&EnumerationConfig::new(1).with_threads(1)).unwrap();
    let two = enumerate(&EnumerationConfig::new(1).with_threads(2)).unwrap();
    let render = |recs, f| {
        let mut buf = Vec::new();
        write_records(recs, f, &mut buf).unwrap();
        buf
    };
    for f in [Format::Text, Format::Csv, Format::Json] {
        assert_eq!(render(&one, f), render(&two, f));
    }
    let want: Vec<_> = one.iter().map(key).collect();
    assert_eq!(read_csv(&render(&one, Format::Csv)[..]).unwrap(), want);
    assert_eq!(read_json(&render(&one, Format::Json)[..]).unwrap(), want);

    let got: std::collections::BTreeSet<_> = one.iter().map(|r| r.triple).collect();
    assert_eq!(got, golden::load(1).unwrap().all());
}
