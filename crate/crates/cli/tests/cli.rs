use std::process::{Command, Output};

use pigraph::report::{AnalysisReport, SweepReport, Table1Report};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pigraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Parses through both the typed report and an untyped value, and checks
/// that each re-serializes to the same bytes.
fn round_trip<T: Serialize + DeserializeOwned>(text: &str) -> T {
    let typed: T = serde_json::from_str(text).unwrap();
    let mut again = serde_json::to_string_pretty(&typed).unwrap();
    again.push('\n');
    assert_eq!(again, text);

    let value: serde_json::Value = serde_json::from_str(text).unwrap();
    let mut again = serde_json::to_string_pretty(&value).unwrap();
    again.push('\n');
    assert_eq!(again, text);
    typed
}

fn mus(r: &AnalysisReport, ideal: usize) -> Vec<String> {
    r.ideals[ideal]
        .powers
        .iter()
        .map(|p| p.mu_closed_form.to_string())
        .collect()
}

#[test]
fn analyze_z6() {
    let out = run(&[
        "analyze",
        "--ring",
        "Z6",
        "--prime",
        "3",
        "--max-power",
        "3",
        "--checks",
        "all",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r: AnalysisReport = round_trip(&stdout(&out));
    assert!(r.passed);
    assert_eq!(mus(&r, 0), ["4", "10", "20"]);
}

#[test]
fn analyze_z8() {
    let out = run(&[
        "analyze",
        "--ring",
        "Z8",
        "--prime",
        "2",
        "--max-power",
        "3",
        "--checks",
        "all",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r: AnalysisReport = round_trip(&stdout(&out));
    assert_eq!(mus(&r, 0), ["15", "94", "378"]);
    let oracle: Vec<String> = r.ideals[0]
        .powers
        .iter()
        .map(|p| p.mu_oracle.as_ref().unwrap().to_string())
        .collect();
    assert_eq!(oracle, ["15", "94", "378"]);
}

#[test]
fn analyze_abstract() {
    let out = run(&["analyze", "--ab", "2,6", "--max-power", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r: AnalysisReport = round_trip(&stdout(&out));
    assert_eq!(mus(&r, 0), ["13"]);
}

#[test]
fn analyze_product_ring_by_member_set() {
    let out = run(&[
        "analyze",
        "--ring",
        "Z2xZ3",
        "--prime-set",
        "(0,0),(0,1),(0,2)",
        "--max-power",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("K_2 v co-K_3"), "{text}");
    assert!(text.trim_end().ends_with("result: PASS"));
}

#[test]
fn text_output_has_count_table() {
    let out = run(&[
        "analyze",
        "--ring",
        "Z8",
        "--prime",
        "2",
        "--max-power",
        "2",
    ]);
    let text = stdout(&out);
    assert!(text.contains("mu(closed)"));
    let row = text
        .lines()
        .find(|l| l.trim_start().starts_with("2 "))
        .unwrap();
    assert!(row.contains("94"), "{row}");
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["analyze", "--ring", "Q6"][..],
        &["analyze", "--ring", "Z8", "--prime", "4"],
        &["analyze", "--ring", "Z6", "--ab", "1,2"],
        &["analyze", "--ab", "2,0"],
        &["analyze", "--ab", "2,2", "--max-power", "0"],
        &["analyze", "--ab", "2,2", "--checks", "bogus"],
        &["sweep", "--family", "zpm", "--primes", "4"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn non_prime_selector_names_witness() {
    let out = run(&["analyze", "--ring", "Z8", "--prime", "4"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("primality witness"), "{err}");
}

#[test]
fn cap_overflow_is_a_failure() {
    let out = run(&[
        "analyze",
        "--ring",
        "Z8",
        "--prime",
        "2",
        "--cap-gens",
        "100",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let r: AnalysisReport = round_trip(&stdout(&out));
    assert!(!r.passed);
    assert!(r.ideals[0].errors.iter().any(|e| e.contains("cap")));

    let out = run(&["analyze", "--ring", "Z64", "--cap-ring", "32"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table1_passes() {
    let out = run(&["table1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r: Table1Report = round_trip(&stdout(&out));
    assert_eq!(r.status, "PASS");
    assert!(r.mismatches.is_empty());

    let text = stdout(&run(&["table1"]));
    assert!(text.contains("15 / 94 / 378"));
    assert!(text.trim_end().ends_with("PASS"));
}

#[test]
fn table1_fault_injection() {
    let faulty = |a, b, n| {
        let mut v = pigraph_core::count_generators(a, b, n);
        if n == 2 {
            v += 1u32;
        }
        v
    };
    let r = pigraph::table1_with(&faulty).unwrap();
    assert_eq!(r.status, "FAIL");
    let cells: Vec<_> = r
        .mismatches
        .iter()
        .map(|m| (m.ring.as_str(), m.n, m.expected))
        .collect();
    assert_eq!(cells, [("Z6", 2, 10), ("Z8", 2, 94)]);
}

#[test]
fn sweep_zpm() {
    let out = run(&[
        "sweep",
        "--family",
        "zpm",
        "--primes",
        "2,3",
        "--exponents",
        "2,3",
        "--max-power",
        "1",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r: SweepReport = round_trip(&stdout(&out));
    let mu = |ring: &str| r.rows.iter().find(|row| row.ring == ring).unwrap().mu[0].to_string();
    assert_eq!(mu("Z8"), "15");
    assert_eq!(mu("Z9"), "13");
    assert_eq!(mu("Z4"), "2");
}

#[test]
fn sweep_zn_without_oracle() {
    let out = run(&[
        "sweep",
        "--family",
        "zn",
        "--from",
        "2",
        "--to",
        "20",
        "--max-power",
        "2",
        "--no-oracle",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r: SweepReport = round_trip(&stdout(&out));
    assert!(r.rows.iter().all(|row| row.oracle.is_none()));
    assert_eq!(r.rows.iter().filter(|row| row.ring == "Z16").count(), 1);
}

#[test]
fn graph_export() {
    let out = run(&["graph", "--ring", "Z6", "--prime", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3: 1 2 4 5\n1: 3\n2: 3\n4: 3\n5: 3\n");

    let out = run(&["graph", "--ab", "2,1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["part_A"], serde_json::json!(["u1", "u2"]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn output_is_deterministic() {
    let args = ["analyze", "--ring", "Z12", "--max-power", "2", "--json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn golden_fixtures() {
    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures");
    for (file, args) in [
        ("table1.txt", &["table1"][..]),
        (
            "analyze_z6_p3.txt",
            &[
                "analyze",
                "--ring",
                "Z6",
                "--prime",
                "3",
                "--max-power",
                "3",
            ],
        ),
        (
            "analyze_z6_p3.json",
            &[
                "analyze",
                "--ring",
                "Z6",
                "--prime",
                "3",
                "--max-power",
                "2",
                "--json",
            ],
        ),
        (
            "graph_z8_p2.json",
            &["graph", "--ring", "Z8", "--prime", "2", "--json"],
        ),
    ] {
        let expected = std::fs::read_to_string(format!("{fixtures}/{file}")).unwrap();
        assert_eq!(stdout(&run(args)), expected, "{file}");
    }
}
