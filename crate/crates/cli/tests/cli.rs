use std::collections::BTreeMap;
use std::process::Command;

use canred_cli::{run, OutputRecord, SEMIGROUP_COLUMNS};
use serde_json::Value;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn canred(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("canred").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json_lines(text: &str) -> Vec<Value> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn csv_rows(text: &str) -> Vec<BTreeMap<String, String>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().unwrap().clone();
    reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            header.iter().map(String::from).zip(r.iter().map(String::from)).collect()
        })
        .collect()
}

/// The CSV rendering of one JSON value.
fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

fn assert_same_data(csv_text: &str, json_text: &str) {
    let rows = csv_rows(csv_text);
    let objects = json_lines(json_text);
    assert_eq!(rows.len(), objects.len());
    for (row, obj) in rows.iter().zip(&objects) {
        let obj = obj.as_object().unwrap();
        assert_eq!(row.len() + 1, obj.len(), "CSV drops only the kind field");
        for (key, value) in obj.iter().filter(|(k, _)| k.as_str() != "kind") {
            assert_eq!(row[key], cell(value), "field {key}");
        }
    }
}

#[test]
fn classify_json_example() {
    let r = canred(&["classify", "3", "4", "5", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v = &json_lines(&r.out)[0];
    assert_eq!(v["kind"], "report");
    assert_eq!(v["almost_gorenstein"], true);
    assert_eq!(v["min_mono_colength"], 2);
    assert_eq!(v["type"], 2);
    assert_eq!(v["canonical_index"], 2);
}

#[test]
fn classify_three_seven_eight() {
    let r = canred(&["classify", "3", "7", "8", "--format", "json"]);
    let v = &json_lines(&r.out)[0];
    assert_eq!(v["has_canonical_reduction"], false);
    assert_eq!(v["two_agl"], true);
    assert_eq!(v["almost_gorenstein"], false);
}

#[test]
fn classify_regular_ring() {
    let r = canred(&["classify", "1"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("gorenstein              yes"));
    assert!(r.out.contains("regular ring"));
    let j = canred(&["classify", "1", "--format", "json"]);
    assert_eq!(json_lines(&j.out)[0]["reduction_number_m"], Value::Null);
}

#[test]
fn classify_rejects_bad_input() {
    for args in [
        &["classify", "4", "6"][..],
        &["classify", "0", "3"],
        &["classify", "x"],
        &["classify"],
    ] {
        let r = canred(args);
        assert_eq!(r.code, 2, "{args:?}");
        assert!(!r.err.is_empty());
        assert!(r.out.is_empty());
    }
}

#[test]
fn classify_csv_matches_json() {
    for gens in [&["3", "4", "5"][..], &["1"], &["3", "7", "8"], &["5", "6", "7", "9"]] {
        let mut csv_args = vec!["classify"];
        csv_args.extend_from_slice(gens);
        let mut json_args = csv_args.clone();
        csv_args.extend(["--format", "csv"]);
        json_args.extend(["--format", "json"]);
        assert_same_data(&canred(&csv_args).out, &canred(&json_args).out);
    }
}

#[test]
fn ideal_atlas_examples() {
    let r = canred(&["ideal-atlas", "3", "4", "5", "--format", "json"]);
    let v = &json_lines(&r.out)[0];
    assert_eq!(v["maximal_shifts"], serde_json::json!([3, 4, 5]));
    let colengths: Vec<(i64, i64)> = v["colengths"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["shift"].as_i64().unwrap(), c["colength"].as_i64().unwrap()))
        .collect();
    assert_eq!(&colengths[..3], &[(3, 2), (4, 3), (5, 4)]);

    let g = canred(&["ideal-atlas", "4", "5", "6", "--format", "json"]);
    let v = &json_lines(&g.out)[0];
    assert_eq!(v["maximal_shifts"], serde_json::json!([0]));
    assert_eq!(v["canonical_ideal"], v["shifts"]);

    let t = canred(&["ideal-atlas", "3", "7", "8", "--format", "json"]);
    let v = &json_lines(&t.out)[0];
    assert_eq!(v["maximal_shifts"], serde_json::json!([6, 7, 8]));
    let shifts: Vec<i64> = v["colengths"].as_array().unwrap().iter().map(|c| c["shift"].as_i64().unwrap()).collect();
    assert!(!shifts.contains(&3));

    let text = canred(&["ideal-atlas", "3", "4", "5"]);
    assert!(text.out.contains("maximal shifts  3, 4, 5"));
}

#[test]
fn enumerate_rows_and_counts() {
    let r = canred(&["enumerate", "--genus", "3", "--format", "csv"]);
    assert_eq!(r.code, 0);
    let rows = csv_rows(&r.out);
    assert_eq!(rows.len(), 8);
    let header: Vec<String> = csv::Reader::from_reader(r.out.as_bytes())
        .headers()
        .unwrap()
        .iter()
        .map(String::from)
        .collect();
    assert_eq!(header, SEMIGROUP_COLUMNS);
    assert!(r.err.contains("total  8"));

    let zero = canred(&["enumerate", "--genus", "0"]);
    assert_eq!(csv_rows(&zero.out).len(), 1);
}

#[test]
fn enumerate_filter_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ncr.csv");
    let r = canred(&[
        "enumerate",
        "--genus",
        "7",
        "--filter",
        "no-canonical-reduction",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("total  19"), "{}", r.out);
    let rows = csv_rows(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(rows.len(), 19);
    assert!(rows.iter().all(|row| row["CR"] == "false"));
    assert!(rows.iter().any(|row| row["generators"] == "3;7;8" && row["g"] == "4"));

    let two = canred(&["enumerate", "--genus", "6", "--filter", "2agl", "--format", "json"]);
    assert!(json_lines(&two.out).iter().all(|v| v["twoAGL"] == true));
}

#[test]
fn enumerate_csv_matches_json() {
    let csv = canred(&["enumerate", "--genus", "7"]);
    let json = canred(&["enumerate", "--genus", "7", "--format", "json"]);
    assert_same_data(&csv.out, &json.out);
    assert_eq!(csv.err, json.err);
}

#[test]
fn enumerate_errors() {
    let r = canred(&["enumerate", "--genus", "31"]);
    assert_eq!(r.code, 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("missing").join("x.csv");
    let r = canred(&["enumerate", "--genus", "2", "--out", bad.to_str().unwrap()]);
    assert_eq!(r.code, 3);
    assert!(r.err.contains("x.csv"));
    let r = canred(&["enumerate", "--genus", "2", "--filter", "bogus"]);
    assert_eq!(r.code, 2);
}

#[test]
fn verify_examples() {
    let r = canred(&["verify", "--genus", "8"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("0 violations"));
    assert_eq!(canred(&["verify", "--genus", "0"]).code, 0);

    let c8 = canred(&["verify", "--genus", "8", "--checks", "C8"]);
    assert_eq!(c8.code, 0);
    let line = c8.out.lines().find(|l| l.trim_start().starts_with("C8")).unwrap();
    assert!(line.contains(" 155/155 "), "{line}");
    assert!(!c8.out.contains("C1 "));

    let bad = canred(&["verify", "--genus", "3", "--checks", "C1,C99"]);
    assert_eq!(bad.code, 2);
}

#[test]
fn verify_json_records() {
    let r = canred(&["verify", "--genus", "5", "--checks", "C1,C2", "--format", "json"]);
    let records = json_lines(&r.out);
    let census: Vec<&Value> = records.iter().filter(|v| v["kind"] == "census").collect();
    assert_eq!(census.len(), 6);
    assert_eq!(census[5]["total"], 12);
    assert!(records.iter().any(|v| v["kind"] == "tally" && v["check"] == "C2"));
    assert!(!records.iter().any(|v| v["kind"] == "violation"));
}

#[test]
fn audit_markers() {
    let r = canred(&["audit-paper"]);
    assert_eq!(r.code, 0);
    let a3 = r.out.lines().find(|l| l.starts_with("a=3 ")).unwrap();
    assert!(a3.contains("f=2 ") && a3.contains("stated f=5") && a3.contains("DISAGREES(f)"));
    assert!(a3.contains("CR=true"));
    let a7 = r.out.lines().find(|l| l.starts_with("a=7 ")).unwrap();
    assert!(a7.contains("f=20 "));
    let e4 = r.out.lines().find(|l| l.starts_with("e=4 i=1 j=2")).unwrap();
    assert!(e4.contains("CR=true"));
    assert!(r.out.contains("I = (t^4,t^5): canonical=true colength 3 stated 4 DISAGREES(ℓ)"));
    assert!(r.out.contains("K = (t^3,t^4): colength 2 stated 2 AGREES"));
}

#[test]
fn records_round_trip() {
    let mut lines = Vec::new();
    lines.extend(json_lines(&canred(&["audit-paper", "--format", "json"]).out));
    lines.extend(json_lines(&canred(&["verify", "--genus", "4", "--format", "json"]).out));
    lines.extend(json_lines(&canred(&["enumerate", "--genus", "4", "--format", "json"]).out));
    lines.extend(json_lines(&canred(&["classify", "3", "4", "5", "--format", "json"]).out));
    lines.extend(json_lines(&canred(&["ideal-atlas", "3", "7", "8", "--format", "json"]).out));
    let kinds: std::collections::BTreeSet<String> =
        lines.iter().map(|v| v["kind"].as_str().unwrap().to_string()).collect();
    assert!(kinds.len() >= 8, "{kinds:?}");
    for v in lines {
        let record: OutputRecord = serde_json::from_value(v.clone()).unwrap();
        let text = record.to_json_line();
        let again: OutputRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(again, record);
        assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), v);
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_canred");
    let ok = Command::new(bin).args(["classify", "3", "4", "5"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("⟨3,4,5⟩"));
    let usage = Command::new(bin).args(["classify", "4", "6"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
