use std::process::Command;

use fourbar_interface::wire::{ConfigRecord, CSV_COLUMNS};
use serde_json::Value;

fn fourbar(args: &[&str]) -> (i32, String, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_fourbar")).args(args).output().unwrap();
    (o.status.code().unwrap(), String::from_utf8(o.stdout).unwrap(), String::from_utf8(o.stderr).unwrap())
}

fn ok_json(args: &[&str]) -> Value {
    let (code, out, err) = fourbar(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn classify_rhombus() {
    let v = ok_json(&["classify", "--lengths", "1,1,1,1"]);
    assert_eq!(v["class"], "rhombus");
    assert_eq!(v["orthodiagonal"], false);
    let o = ok_json(&["classify", "--lengths", "3,2.8284271247461903,2.449489742783178,2.6457513110645907", "--tol", "1e-9"]);
    assert_eq!((o["class"].as_str(), o["orthodiagonal"].as_bool()), (Some("elliptic"), Some(true)));
}

#[test]
fn solve_rhombus_at_two() {
    let v = ok_json(&["solve", "--lengths", "1,1,1,1", "--x", "2"]);
    let records: Vec<ConfigRecord> = serde_json::from_value(v["records"].clone()).unwrap();
    let finite: Vec<_> = records.iter().filter(|r| r.y.den != 0.0).collect();
    assert_eq!(finite.len(), 1);
    let t = finite[0].tangents().unwrap().map(|p| p.value());
    assert!((t[1] - 0.5).abs() < 1e-12 && (t[2] - 2.0).abs() < 1e-12 && (t[3] - 0.5).abs() < 1e-12);
    // the other solution is on the circle at infinity
    assert_eq!(records.len(), 2);
    assert!(ok_json(&["solve", "--lengths", "2,2,1,1", "--x", "-0.5"])["records"].as_array().unwrap().is_empty());
    assert_eq!(ok_json(&["solve", "--lengths", "2,1,2,1", "--x", "inf"])["records"].as_array().unwrap().len(), 1);
}

#[test]
fn isogram_butterfly_csv() {
    let (code, out, _) = fourbar(&["trace", "--lengths", "2,1,2,1", "--branch", "2", "--samples", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut rd = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(rd.headers().unwrap().iter().collect::<Vec<_>>(), CSV_COLUMNS);
    let rows: Vec<_> = rd.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 3);
    for r in rows {
        let f = |i: usize| r[i].parse::<f64>().unwrap();
        // w = −y as projective points
        let (y, w) = ((f(3), f(4)), (f(7), f(8)));
        assert!((y.0 * w.1 + y.1 * w.0).abs() < 1e-12);
    }
}

#[test]
fn csv_and_json_agree() {
    let args = ["trace", "--lengths", "2,3,4,6", "--branch", "1", "--samples", "7"];
    let json: Vec<ConfigRecord> = serde_json::from_value(ok_json(&args)).unwrap();
    let (_, csv_out, _) = fourbar(&[&args[..], &["--format", "csv"]].concat());
    let mut rd = csv::Reader::from_reader(csv_out.as_bytes());
    for (rec, row) in json.iter().zip(rd.records()) {
        let row = row.unwrap();
        let f = |i: usize| row[i].parse::<f64>().unwrap();
        assert_eq!(f(0), rec.s.unwrap());
        assert_eq!([f(1), f(2), f(9), f(13), f(21), f(22)], [rec.x.num, rec.x.den, rec.rho_x, rec.vertices[0][0], rec.u, rec.v]);
        assert_eq!(&row[23], rec.self_intersected.to_string());
    }
}

#[test]
fn other_subcommands() {
    let inf = ok_json(&["infinity", "--lengths", "2,3,4,6"]);
    let sols = inf["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 8);
    assert!(sols.iter().all(|s| s["reachable"].is_boolean() && s["condition"]["description"].is_string()));
    let rep = ok_json(&["report", "--lengths", "1,2,3,3.5"]);
    assert_eq!(rep["grashof"]["holds"], true);
    assert_eq!(rep["fully_rotating"], serde_json::json!(["x", "w"]));
    assert!(rep["identities"]["max_residual"].as_f64().unwrap() < 1e-12);
    let ids = ok_json(&["identities", "--lengths", "2,3,4,6"]);
    assert_eq!(ids["identities"].as_array().unwrap().len(), 7);
}

#[test]
fn errors_go_to_stderr_with_exit_codes() {
    let (code, out, err) = fourbar(&["classify", "--lengths", "5,1,1,1"]);
    assert_eq!((code, out.is_empty()), (1, true));
    assert!(err.contains("alpha"));
    for bad in [
        &["classify", "--lengths", "1,1"][..],
        &["trace", "--lengths", "1,1,1,1", "--branch", "7"],
        &["trace", "--lengths", "1,1,1,1", "--branch", "1", "--samples", "1"],
        &["solve", "--lengths", "1,1,1,1", "--x", "abc"],
        &["nonsense"],
    ] {
        let (code, out, _) = fourbar(bad);
        assert_eq!((code, out.as_str()), (2, ""), "{bad:?}");
    }
}
