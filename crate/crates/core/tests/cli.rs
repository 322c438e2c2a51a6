use std::process::{Command, Output};

fn tg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trigroups")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn adim_reports() {
    let o = tg(&["adim", "2", "3", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("triple=(2, 3, 7)\nadim=1\n"), "{out}");

    let o = tg(&["adim", "oo", "inf", "∞"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("adim=1"));

    let o = tg(&["adim", "2", "2", "oo"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not hyperbolic"), "{}", stderr(&o));
    assert!(stderr(&o).contains("zero"), "{}", stderr(&o));

    let o = tg(&["adim", "2", "3", "6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_1() {
    assert_eq!(tg(&["adim", "2", "x", "7"]).status.code(), Some(1));
    assert_eq!(tg(&["adim", "1", "3", "7"]).status.code(), Some(1));
    assert_eq!(tg(&["enumerate", "0"]).status.code(), Some(1));
    assert_eq!(tg(&["bogus"]).status.code(), Some(1));
    assert_eq!(tg(&["--help"]).status.code(), Some(0));
}

#[test]
fn adim_formats() {
    let o = tg(&["adim", "2", "3", "13", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["adim"], 2);
    assert_eq!(v["triple"], "(2, 3, 13)");
    let o = tg(&["adim", "2", "3", "13", "--format", "csv"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("triple,adim,m,phi2m,h,classes,hyperbolic_ks,spherical_ks"));
    assert!(lines.next().unwrap().contains(",2,"));
}

#[test]
fn multiplicity_and_curvature() {
    let out = stdout(&tg(&["multiplicity", "2", "3", "7"]));
    assert!(out.contains("h=8") && out.contains("agreement=true"), "{out}");
    let out = stdout(&tg(&["multiplicity", "2", "3", "7", "--method", "closed"]));
    assert!(out.contains("method=ClosedForm"), "{out}");

    let o = tg(&["curvature", "2", "3", "7", "11"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("sign=positive"));
    assert!(out.contains("left=7 middle=18 right=35"), "{out}");
    assert_eq!(tg(&["curvature", "2", "3", "7", "7"]).status.code(), Some(2));
}

#[test]
fn enumerate_r1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r1.csv");
    let o = tg(&["enumerate", "1", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "r=1 compact=76 noncompact=9");
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("a,b,c,adim,compact"));
    assert_eq!(lines.next(), Some("2,3,7,1,true"));
    assert_eq!(csv.lines().count(), 86);
    assert!(csv.contains("oo,oo,oo,1,false"));

    // Without --out the summary goes to stderr, records to stdout.
    let o = tg(&["enumerate", "1", "--threads", "1"]);
    assert_eq!(stderr(&o).trim(), "r=1 compact=76 noncompact=9");
    assert_eq!(stdout(&o).lines().count(), 85);
}

#[test]
fn verify_exit_codes() {
    let o = tg(&["verify", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("r=1 expected=85 found=85 missing=0 extra=0"));

    let dir = tempfile::tempdir().unwrap();
    let tampered = dir.path().join("r1.txt");
    let text = trigroups::oracle::golden::FIXTURES[0].1.replace("2 3 7\n", "2 3 13\n");
    std::fs::write(&tampered, text).unwrap();
    let o = tg(&["verify", "1", "--golden", tampered.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    let out = stdout(&o);
    assert!(out.contains("missing (2, 3, 13)") && out.contains("extra (2, 3, 7)"), "{out}");

    assert_eq!(tg(&["verify", "9"]).status.code(), Some(1));
}

#[test]
fn published_counts() {
    let out = stdout(&tg(&["counts", "--published", "--max-r", "3"]));
    assert_eq!(out, "r\tcompact\tnoncompact\n1\t76\t9\n2\t148\t16\n3\t111\t13\n");
}
