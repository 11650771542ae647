use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use leonard::cli::{Bundle, CatalogRecord};

const T357: [&str; 10] = ["--a", "3", "--b", "5", "--c", "7", "--q", "2", "--d", "3"];

fn leonard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leonard"))
        .args(args)
        .env_remove("LEONARD_FIELD")
        .env_remove("SOURCE_DATE_EPOCH")
        .output()
        .expect("binary runs")
}

fn with(base: &[&str], rest: &[&str]) -> Vec<String> {
    base.iter().chain(rest).map(|s| s.to_string()).collect()
}

fn code(args: &[String]) -> i32 {
    let v: Vec<&str> = args.iter().map(String::as_str).collect();
    leonard(&v).status.code().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_worked_examples() {
    assert_eq!(code(&with(&["validate"], &T357)), 0);
    let o = leonard(&["validate", "--a", "3", "--b", "5", "--c", "2", "--q", "2", "--d", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("T-RQRAC3: c²=q²"));
    let o = leonard(&["validate", "--a", "3", "--b", "5", "--c", "2", "--q", "2", "--d", "3", "--pair-only"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn parse_and_io_errors() {
    assert_eq!(leonard(&["validate", "--a", "x", "--b", "5", "--c", "7", "--q", "2", "--d", "3"]).status.code(), Some(2));
    assert_eq!(code(&with(&["--field", "GF:1000", "validate"], &T357)), 2);
    assert_eq!(leonard(&["verify", "--from", "/nonexistent/bundle.json"]).status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.json");
    fs::write(&junk, "not json").unwrap();
    assert_eq!(leonard(&["verify", "--from", path_str(&junk)]).status.code(), Some(2));
    assert_eq!(code(&with(&["build", "--out", "/nonexistent/dir/b.json"], &T357)), 3);
}

#[test]
fn field_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_leonard"))
        .args(["validate", "--a", "3", "--b", "5", "--c", "7", "--q", "2", "--d", "3", "--format", "structured"])
        .env("LEONARD_FIELD", "GF:1009")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    for line in String::from_utf8(o.stdout).unwrap().lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["pass"], true);
    }
}

#[test]
fn build_verify_round_trip_and_mutation() {
    let dir = tempfile::tempdir().unwrap();
    let bundle = dir.path().join("bundle.json");
    assert_eq!(code(&with(&["build", "--emit", "idempotents", "--out", path_str(&bundle)], &T357)), 0);
    let o = leonard(&["verify", "--from", path_str(&bundle)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));

    let text = fs::read_to_string(&bundle).unwrap();
    let b: Bundle = serde_json::from_str(&text).unwrap();
    let idem = b.idempotents.as_ref().unwrap();
    assert_eq!(idem.e.len() + idem.e_star.len() + idem.e_eps.len(), 3 * 4);

    let mut bad = b.clone();
    bad.a_eps.rows[1][1] = "1".into();
    let mutated = dir.path().join("mutated.json");
    fs::write(&mutated, serde_json::to_string(&bad).unwrap()).unwrap();
    let o = leonard(&["verify", "--from", path_str(&mutated)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("differs at (1,1)"));

    let mut bad = b.clone();
    bad.idempotents.as_mut().unwrap().e_star[2].rows[0][0] = "5".into();
    fs::write(&mutated, serde_json::to_string(&bad).unwrap()).unwrap();
    let o = leonard(&["verify", "--from", path_str(&mutated)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("stored idempotents: E*_2"));

    let plain = leonard(&with(&["build"], &T357).iter().map(String::as_str).collect::<Vec<_>>());
    let b2: Bundle = serde_json::from_slice(&plain.stdout).unwrap();
    assert!(b2.idempotents.is_none());
    assert_eq!(b2.m, b.m);
}

#[test]
fn build_rejects_inadmissible() {
    let o = leonard(&["build", "--a", "3", "--b", "5", "--c", "2", "--q", "2", "--d", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("T-RQRAC3"));
}

#[test]
fn orbit_and_twins_listings() {
    let o = leonard(&with(&["orbit", "--group", "z2cubed"], &T357).iter().map(String::as_str).collect::<Vec<_>>());
    let lines: Vec<String> = String::from_utf8(o.stdout).unwrap().lines().map(String::from).collect();
    assert_eq!(lines.len(), 8);
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(sorted, lines);

    let o = leonard(&with(&["twins"], &T357).iter().map(String::as_str).collect::<Vec<_>>());
    let out = String::from_utf8(o.stdout).unwrap();
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.ends_with("case (i)")));

    let o = leonard(&["twins", "--a", "-3", "--b", "5", "--c", "4/15", "--q", "2", "--d", "3"]);
    let out = String::from_utf8(o.stdout).unwrap();
    assert_eq!(out.lines().count(), 2);
    assert!(out.lines().all(|l| l.ends_with("case (ii)")));
}

#[test]
fn classify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");

    let o = leonard(&with(&["orbit"], &T357).iter().map(String::as_str).collect::<Vec<_>>());
    fs::write(&input, &o.stdout).unwrap();
    let o = leonard(&["classify", "--input", path_str(&input), "--d", "3", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let recs: Vec<CatalogRecord> =
        String::from_utf8(o.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0].members, Some(8));
    assert!(recs[0].verified);
    assert_eq!(recs[0].timestamp, "1970-01-01T00:00:00Z");

    fs::write(&input, "(3,5,7;2)\n(1/3,1/5,1/7;1/2)\n").unwrap();
    let o = leonard(&["classify", "--input", path_str(&input), "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().count(), 2);

    fs::write(&input, "").unwrap();
    let o = leonard(&["classify", "--input", path_str(&input)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());

    fs::write(&input, "(3,5,7;2)\ngarbage\n").unwrap();
    let o = leonard(&["classify", "--input", path_str(&input), "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = leonard(&["classify", "--input", path_str(&input), "--d", "3", "--strict"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_is_reproducible_and_verified() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let cat = dir.path().join(name);
        let o = leonard(&[
            "--field", "GF:1009", "enumerate", "--d", "4", "--count", "10", "--seed", "7", "--catalog",
            path_str(&cat),
        ]);
        assert_eq!(o.status.code(), Some(0));
        (o.stdout, fs::read(&cat).unwrap())
    };
    let (out1, cat1) = run("one.jsonl");
    let (out2, cat2) = run("two.jsonl");
    assert_eq!(out1, out2);
    assert_eq!(cat1, cat2);
    let recs: Vec<CatalogRecord> =
        String::from_utf8(cat1).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 10);
    assert!(recs.iter().all(|r| r.verified && r.field == "GF:1009"));

    let o = Command::new(env!("CARGO_BIN_EXE_leonard"))
        .args(["--field", "GF:1009", "enumerate", "--d", "3", "--count", "1", "--format", "structured"])
        .env("SOURCE_DATE_EPOCH", "1700000000")
        .output()
        .unwrap();
    let rec: CatalogRecord = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rec.timestamp, "2023-11-14T22:13:20Z");

    let o = leonard(&["--field", "GF:11", "enumerate", "--d", "4", "--count", "1", "--attempts", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no admissible tuple found after 3 attempts"));
}
