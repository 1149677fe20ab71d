//! End-to-end behaviour of the `leibnitz` binary.

use std::process::{Command, Output};

use leibnitz::kernel::{parse_rational, render};
use leibnitz::special::leibnitz;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibnitz")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn lines(args: &[&str]) -> Vec<String> {
    stdout(args).lines().map(str::to_string).collect()
}

#[test]
fn num_commands() {
    assert_eq!(lines(&["num", "leibnitz", "4", "2"]), ["1/30"]);
    assert_eq!(lines(&["num", "leibnitz", "0", "0"]), ["1"]);
    assert_eq!(lines(&["num", "daehee", "3"]), ["-3/2"]);
    assert_eq!(lines(&["num", "changhee", "5"]), ["-15/4"]);
    assert_eq!(lines(&["num", "y", "2", "-1"]), ["-1/2"]);
    assert_eq!(lines(&["num", "gen", "1", "0", "--symbolic"]), ["a^2/2 - a*b + b^2/2"]);
    assert_eq!(lines(&["num", "gen", "4", "2", "0", "1"]), ["1/30"]);
    assert_eq!(lines(&["num", "gen", "0", "0", "-1/2", "3"]), ["7/2"]);
}

#[test]
fn printed_rationals_round_trip() {
    for n in 0..=12 {
        for k in 0..=n {
            let text = stdout(&["num", "leibnitz", &n.to_string(), &k.to_string()]);
            let parsed = parse_rational(text.trim()).unwrap();
            assert_eq!(parsed, leibnitz(n, k).unwrap());
            assert_eq!(render(&parsed), text.trim());
        }
    }
}

#[test]
fn series_dumps() {
    assert_eq!(lines(&["series", "leibnitz", "1"]), ["u^0: 1", "u^1: 1/2 + 1/2*t"]);
    assert_eq!(lines(&["series", "daehee", "2"]), ["u^0: 1", "u^1: -1/2", "u^2: 1/3"]);
    assert_eq!(lines(&["series", "changhee", "2"]), ["u^0: 1", "u^1: -1/2", "u^2: 1/4"]);
    assert_eq!(lines(&["series", "y", "1", "--lambda", "-1"]), ["u^0: -1", "u^1: -1/2"]);
}

#[test]
fn volkenborn_commands() {
    assert_eq!(lines(&["volkenborn", "poly", "0", "0", "1"]), ["1/6"]);
    assert_eq!(lines(&["volkenborn", "poly", "0", "1"]), ["-1/2"]);
    assert_eq!(lines(&["volkenborn", "product", "1", "1"]), ["1/6"]);
    assert_eq!(run(&["volkenborn", "check-a11", "--depth", "15"]).status.code(), Some(0));
    assert_eq!(run(&["volkenborn", "check-ki1", "--depth", "15"]).status.code(), Some(0));
}

fn json_cells(args: &[&str]) -> Vec<Vec<String>> {
    let json: Value = serde_json::from_str(&stdout(args)).unwrap();
    json["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            std::iter::once(r["label"].as_str().unwrap().to_string())
                .chain(r["cells"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_string()))
                .collect()
        })
        .collect()
}

fn csv_cells(args: &[&str]) -> Vec<Vec<String>> {
    stdout(args).lines().skip(1).map(|l| l.split(',').map(str::to_string).collect()).collect()
}

fn md_cells(args: &[&str]) -> Vec<Vec<String>> {
    stdout(args)
        .lines()
        .skip(2)
        .map(|l| {
            let inner = l.strip_prefix("| ").unwrap().strip_suffix(" |").unwrap();
            inner.split(" | ").map(|c| c.trim().to_string()).collect()
        })
        .collect()
}

#[test]
fn table_formats_carry_identical_cells() {
    for table in ["triangle", "gen-k1", "gen-k2", "gen-matrix", "classical-matrix"] {
        let json = json_cells(&["table", table, "--format", "json"]);
        assert_eq!(csv_cells(&["table", table, "--format", "csv"]), json, "{table}");
        assert_eq!(md_cells(&["table", table]), json, "{table}");
    }
}

#[test]
fn table_spot_cells() {
    let classical = json_cells(&["table", "classical-matrix", "--format", "json"]);
    assert_eq!(classical.len(), 9);
    assert_eq!(classical[8][1 + 3], "1/504");
    assert_eq!(classical[2][1 + 5], "");
    let gen = json_cells(&["table", "gen-matrix", "--format", "json"]);
    assert_eq!(gen.len(), 4);
    assert_eq!(gen[0][1], "-a + b");
    assert_eq!(gen[0][2], "");
    let tri = json_cells(&["table", "triangle", "4", "--format", "json"]);
    assert_eq!(tri[2][1..4], ["1/3", "1/6", "1/3"]);
    let k1 = json_cells(&["table", "gen-k1", "--format", "json"]);
    assert_eq!(k1.len(), 5);
    assert_eq!(k1[0][1], "");
    assert_eq!(k1[1][1], "a^2/2 - a*b + b^2/2");
}

#[test]
fn exit_codes() {
    let pole = run(&["num", "y", "2", "1/1"]);
    assert_eq!(pole.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&pole.stderr).contains("lambda = 1"));

    let bad = run(&["num", "y", "2", "3/x"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("position 2"));

    assert_eq!(run(&["num", "leibnitz", "2", "3"]).status.code(), Some(2));
    assert_eq!(run(&["num", "gen", "2", "1"]).status.code(), Some(2));
    assert_eq!(run(&["num", "gen", "2", "1", "1", "1"]).status.code(), Some(0));
    assert_eq!(run(&["series", "y", "2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "NOT-AN-ID"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "REC", "--t-samples", "1,,2"]).status.code(), Some(2));

    assert_eq!(run(&["verify", "REC", "GF-L", "--depth", "8"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "THM-IK1", "--depth", "2"]).status.code(), Some(1));
}

#[test]
fn verify_reports_in_every_format() {
    let args = ["verify", "REC", "--depth", "3", "--self-test-fault"];
    let md = run(&[&args[..], &["--format", "md"]].concat());
    assert_eq!(md.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&md.stdout).contains("1001/1000"));

    let csv = run(&[&args[..], &["--format", "csv"]].concat());
    let csv = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(csv.lines().next().unwrap(), "id,params,status,lhs,rhs,note");
    assert!(csv.lines().any(|l| l.starts_with("SELFTEST-CORRUPT,n=0;k=0,fail,1,1001/1000")));

    let json: Value = serde_json::from_slice(&run(&[&args[..], &["--format", "json"]].concat()).stdout).unwrap();
    assert_eq!(json["summary"]["failed"], 10);
    assert_eq!(json["entries"].as_array().unwrap().len(), json["summary"]["total"].as_u64().unwrap() as usize);
}

#[test]
fn custom_samples_are_used() {
    let json: Value = serde_json::from_str(&stdout(&[
        "verify", "GF-Y", "--lambda-samples", "-1, 7/3", "--format", "json",
    ]))
    .unwrap();
    let lambdas: Vec<&str> = json["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["params"]["lambda"].as_str().unwrap())
        .collect();
    assert_eq!(lambdas, ["-1", "7/3"]);
}
