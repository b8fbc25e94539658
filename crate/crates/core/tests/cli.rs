use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trisasaki"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn verify_g2_json() {
    let o = run(&["verify", "G2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["dim_m"], 11);
    assert_eq!(v["einstein_constant"], 10);
    assert_eq!(v["passed"], true);
    let names: Vec<&str> = v["sections"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|s| s["checks"].as_array().unwrap())
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"Einstein Ric = 10 g"));
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn report_a1_is_the_three_sphere() {
    let o = run(&["report", "A1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("S^3"));
    assert!(s.contains("| n | 0 |"));
    assert!(s.contains("| Einstein constant | 2 |"));
}

#[test]
fn table_lists_all_families() {
    let o = run(&["table", "--format", "md", "--max-rank", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for f in [
        "S^{4n+3}",
        "RP^{4n+3}",
        "SU(m)/S(U(m-2)×U(1))",
        "SO(k)/(SO(k-4)×Sp(1))",
        "G2/Sp(1)",
        "F4/Sp(3)",
        "E6/SU(6)",
        "E7/Spin(12)",
        "E8/E7",
    ] {
        assert!(s.contains(f), "{f}");
    }
}

#[test]
fn table_csv_has_one_row_per_type() {
    let o = run(&["table", "--format", "csv", "--max-rank", "4"]);
    let s = stdout(&o);
    let mut rdr = csv::Reader::from_reader(s.as_bytes());
    let types: Vec<String> = rdr.records().map(|r| r.unwrap()[0].to_string()).collect();
    assert!(types.contains(&"C4".to_string()) && types.contains(&"E8".to_string()));
    assert!(!types.contains(&"B2".to_string()));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "Z3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "B1"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn sampled_output_is_byte_identical() {
    let args = [
        "verify",
        "B4",
        "--mode",
        "sampled",
        "--samples",
        "1000",
        "--seed",
        "42",
        "--format",
        "json",
    ];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["curvature"]["seed"], 42);
    assert_eq!(v["curvature"]["exhaustive"], false);
}

#[test]
fn check_selection_and_csv() {
    let o = run(&[
        "verify",
        "A3",
        "--checks",
        "identities,nomizu",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("Nomizu case formula"));
    assert!(!s.contains("Einstein"));
}

#[test]
fn verify_all_small_ranks() {
    let o = run(&["verify", "all", "--max-rank", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let labels: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["type"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"]);
}

#[test]
fn roots_listing_and_structure_dump() {
    let o = run(&["roots", "G2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 6);
    assert_eq!(v["highest_root"], serde_json::json!([3, 2]));
    let o = run(&["roots", "A1", "--structure"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 3);
    assert_eq!(v["basis"], serde_json::json!(["E[1]", "H1", "E[-1]"]));
}
