use std::process::{Command, Output};

use serde_json::Value;

fn mvis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn profile_of_hoffman_singleton() {
    let out = mvis(&["profile", "--graph", "hoffman-singleton"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["srg"], serde_json::json!([50, 7, 0, 1]));
    assert_eq!(v["is_moore_diam2"], true);
}

#[test]
fn profile_of_cycle() {
    let v = json(&mvis(&["profile", "--graph", "cycle:5"]));
    assert_eq!(v["diameter"], 2);
    assert_eq!(v["girth"], 5);
}

#[test]
fn missing_file_exits_two() {
    let out = mvis(&["profile", "--graph", "file:missing.txt"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cannot open"));
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_file_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, "n=3\n0 1\n1 1\n").unwrap();
    let out = mvis(&["profile", "--graph", &format!("file:{}", path.display())]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        mvis(&["profile", "--graph", "wheel:5"]).status.code(),
        Some(2)
    );
    assert_eq!(mvis(&["profile"]).status.code(), Some(2));
    assert_eq!(mvis(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        mvis(&["profile", "--graph", "cycle:2"]).status.code(),
        Some(2)
    );
}

#[test]
fn check_exit_codes() {
    // 0={1,2} is adjacent to 7={3,4} and 8={3,5}, which meet in 3.
    let path = mvis(&["check", "--graph", "petersen", "--set", "7,0,8"]);
    assert_eq!(path.status.code(), Some(1));
    let v = json(&path);
    assert_eq!(v["is_mv"], false);
    assert_eq!(v["analysis"]["induced_max_degree"], 2);

    let matching = mvis(&["check", "--graph", "petersen", "--set", "0,7,1,5,2,4"]);
    assert_eq!(matching.status.code(), Some(0), "{}", stderr(&matching));
    assert_eq!(
        json(&matching)["analysis"]["matching_edges"]
            .as_array()
            .unwrap()
            .len(),
        3
    );

    let empty = mvis(&["check", "--graph", "cycle:6", "--set", ""]);
    assert_eq!(empty.status.code(), Some(0));
    assert_eq!(json(&empty)["is_mv"], true);

    assert_eq!(
        mvis(&["check", "--graph", "petersen", "--set", "0,10"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        mvis(&["check", "--graph", "petersen", "--set", "0,a"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn polynomial_of_petersen() {
    let v = json(&mvis(&["polynomial", "--graph", "petersen"]));
    assert_eq!(
        v["polynomial"],
        "1 + 10x + 45x^2 + 90x^3 + 80x^4 + 30x^5 + 5x^6"
    );
    assert_eq!(
        v["coefficients"],
        serde_json::json!([1, 10, 45, 90, 80, 30, 5])
    );
}

#[test]
fn polynomial_guard() {
    let out = mvis(&["polynomial", "--graph", "hoffman-singleton"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--force"));
}

#[test]
fn mu_certificate_round_trips_through_check() {
    for graph in ["hoffman-singleton", "petersen", "cycle:7", "complete:5"] {
        let out = mvis(&["mu", "--graph", graph]);
        assert_eq!(out.status.code(), Some(0));
        let v = json(&out);
        assert_eq!(v["proven"], true);
        for key in [
            "problem",
            "graph",
            "optimum",
            "certificate",
            "nodes",
            "ms",
            "proven",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        let cert: Vec<String> = v["certificate"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap().to_string())
            .collect();
        assert_eq!(cert.len() as u64, v["optimum"].as_u64().unwrap());
        let check = mvis(&["check", "--graph", graph, "--set", &cert.join(",")]);
        assert_eq!(check.status.code(), Some(0), "{graph}");
        assert_eq!(json(&check)["is_mv"], true);
    }
    assert_eq!(
        json(&mvis(&["mu", "--graph", "hoffman-singleton"]))["optimum"],
        20
    );
}

#[test]
fn mu_canonical_is_deterministic() {
    let a = json(&mvis(&["mu", "--graph", "petersen", "--canonical"]));
    let b = json(&mvis(&["mu", "--graph", "petersen", "--canonical"]));
    assert_eq!(a["certificate"], b["certificate"]);
    assert_eq!(a["optimum"], 6);
}

#[test]
fn counting_flags() {
    let v = json(&mvis(&[
        "induced-matching",
        "--graph",
        "petersen",
        "--count",
        "2",
    ]));
    assert_eq!(v["count"], 15);
    let v = json(&mvis(&["mu", "--graph", "petersen", "--count", "6"]));
    assert_eq!(v["count"], 5);
    let v = json(&mvis(&["mu", "--graph", "cycle:6", "--count", "3"]));
    assert_eq!(v["count"], 14);
}

#[test]
fn induced_matching_of_hoffman_singleton() {
    let v = json(&mvis(&["induced-matching", "--graph", "hoffman-singleton"]));
    assert_eq!(v["optimum"], 10);
    assert_eq!(v["certificate"].as_array().unwrap().len(), 10);
}

#[test]
fn limit_breach_exits_three() {
    let out = mvis(&["mu", "--graph", "hoffman-singleton", "--max-nodes", "100"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["proven"], false);
    let out = mvis(&[
        "induced-matching",
        "--graph",
        "hoffman-singleton",
        "--limit-ms",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bounds_json() {
    let v = json(&mvis(&["bounds", "--graph", "hoffman-singleton"]));
    assert_eq!(
        (v["prop1"].clone(), v["lemma6"].clone()),
        (31.into(), 43.into())
    );
    assert_eq!(
        (v["degree_count"].clone(), v["jensen"].clone()),
        (26.into(), 20.into())
    );
    let v = json(&mvis(&["bounds", "--graph", "cycle:4"]));
    assert!(v["lemma6"].is_null());
    assert_eq!(
        v["applicability"]["lemma6"]["reason"],
        "unique-common-neighbour fails"
    );
}

#[test]
fn export_lp_to_file_and_stdout() {
    let out = mvis(&["export-lp", "--graph", "complete:2"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "Maximize\nx0 + x1\nSubject To\nc0: x1 + x0 <= 2\nc1: x0 + x1 <= 2\nBinary\nx0 x1\nEnd\n"
    );
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hs.lp");
    let out = mvis(&[
        "export-lp",
        "--graph",
        "hoffman-singleton",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["constraints"], 50);
    let text = std::fs::read_to_string(&path).unwrap();
    let model = mvis::solver::parse_lp(&text).unwrap();
    assert_eq!(model.variables, 50);
}

#[test]
fn verify_paper_passes() {
    let out = mvis(&["verify-paper"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
    assert!(text.contains("0 failed"));
}

#[test]
fn verify_paper_filter() {
    let v = json(&mvis(&["verify-paper", "--only", "petersen", "--json"]));
    let rows = v["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    assert!(rows
        .iter()
        .all(|r| r["family"] == "petersen" && r["passed"] == true));
}
