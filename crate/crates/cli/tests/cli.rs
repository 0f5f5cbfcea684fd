use std::path::Path;
use std::process::{Command, Output};

fn lyid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lyid")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)).unwrap()
}

/// Second column of `index tree` lines, checking indices count from 1.
fn trees(out: &str) -> Vec<String> {
    out.lines()
        .enumerate()
        .map(|(i, l)| {
            let (idx, tree) = l.split_once(' ').unwrap();
            assert_eq!(idx, (i + 1).to_string());
            tree.to_string()
        })
        .collect()
}

fn lines(text: &str) -> Vec<String> {
    text.lines().map(str::to_string).collect()
}

#[test]
fn types_match_the_published_lists() {
    for (n, file) in [(5, "types5.txt"), (6, "types6.txt")] {
        let o = lyid(&["types", "--degree", &n.to_string()]);
        assert!(o.status.success());
        assert_eq!(trees(&stdout(&o)), lines(&data(file)));
    }
    let o = lyid(&["types", "--degree", "8", "--class", "binary"]);
    assert_eq!(trees(&stdout(&o)), lines(&data("binary8.txt")));
}

#[test]
fn skew_generators_in_degree_eight() {
    let o = lyid(&["types", "--degree", "8", "--class", "binary", "--skew"]);
    assert!(o.status.success());
    assert_eq!(lines(&stdout(&o)), lines(&data("skew8.txt")));
}

#[test]
fn rendered_types() {
    let o = lyid(&["types", "--degree", "3", "--render"]);
    assert_eq!(stdout(&o), "1 <a,b,c>\n2 [[a,b],c]\n");
}

#[test]
fn counts_table() {
    let o = lyid(&["counts"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows.len(), 12);
    assert_eq!(rows[11][..5], ["12", "41161", "451", "0", "40710"]);
    assert_eq!(rows[7][5..], ["2609145", "18144"]);
    assert_eq!(rows[1][6], "-");
}

#[test]
fn invalid_degrees_fail_cleanly() {
    for args in [
        &["types", "--degree", "0"][..],
        &["counts", "--max-degree", "99"],
        &["analyze", "--degree", "9"],
        &["analyze", "--degree", "6", "--char", "5"],
        &["analyze", "--degree", "6", "--char", "100"],
        &["analyze", "--degree", "6", "--partitions", "4+1"],
    ] {
        let o = lyid(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("lyid: "), "{args:?}");
    }
}

#[test]
fn analyze_degree_six_with_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let timings = dir.path().join("t.json");
    let dumps = dir.path().join("dumps");
    let o = lyid(&[
        "analyze",
        "--degree",
        "6",
        "--report",
        report.to_str().unwrap(),
        "--timings",
        timings.to_str().unwrap(),
        "--dump-dir",
        dumps.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r["degree"], 6);
    assert_eq!(r["characteristic"], 101);
    assert_eq!(r["generators"], 252);
    let parts = r["partitions"].as_array().unwrap();
    assert_eq!(parts.len(), 11);
    assert!(parts.iter().all(|p| p["contained"] == true));
    let t: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&timings).unwrap()).unwrap();
    assert_eq!(t.as_object().unwrap().len(), 11);
    assert!(dumps.join("1e6_identities.dump").exists());
    assert!(dumps.join("3_2_1_skew.dump").exists());
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let o = lyid(&["analyze", "--degree", "5", "--char", "0", "--report", path.to_str().unwrap()]);
        assert!(o.status.success());
        std::fs::read(path).unwrap()
    };
    let first = run("a.json");
    assert_eq!(first, run("b.json"));
    // Wall times live in the separate timings file.
    assert!(!String::from_utf8(first).unwrap().contains("seconds"));
}

#[test]
fn degree_eight_sign_matches_golden_tables() {
    let dir = tempfile::tempdir().unwrap();
    let o = lyid(&[
        "analyze",
        "--degree",
        "8",
        "--char",
        "0",
        "--partitions",
        "sign",
        "--dump-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("false"));
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("golden");
    for (ours, theirs) in [("1e8_identities.dump", "sign8_identities.dump"), ("1e8_skew.dump", "sign8_skew.dump")] {
        assert_eq!(
            std::fs::read_to_string(dir.path().join(ours)).unwrap(),
            std::fs::read_to_string(golden.join(theirs)).unwrap()
        );
    }
}

#[test]
fn aborted_partitions_exit_with_three() {
    let o = lyid(&["analyze", "--degree", "6", "--partitions", "3+2+1", "--max-rows", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("aborted"));
}

#[test]
fn identity_below_degree_eight() {
    let o = lyid(&["identity", "--degree", "7"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("no such identity exists below degree 8"));
}

#[test]
fn identity_file_round_trip_and_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let o = lyid(&["identity", "--format", "file"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("term 7 12345678 -3/2"));
    let path = dir.path().join("theorem.id");
    std::fs::write(&path, &text).unwrap();
    let o = lyid(&["certify", "--identity", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "not a consequence of anticommutativity: true\nconsequence of the defining identities: true\n"
    );

    let broken = dir.path().join("broken.id");
    std::fs::write(&broken, text.replace("-3/2", "-1")).unwrap();
    let o = lyid(&["certify", "--identity", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("defining identities: false"));
}

#[test]
fn identity_text_lists_the_terms() {
    let o = lyid(&["identity"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let coeffs: Vec<&str> = out
        .lines()
        .skip_while(|l| !l.trim_start().starts_with("type"))
        .skip(1)
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    assert_eq!(coeffs, ["1", "-3/2", "-1", "1", "2", "3", "2", "-2"]);
    assert!(out.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["4", "1", "[[[[a,b],c],[d,e]],[[f,g],h]]"]));
}

#[test]
fn verify_on_bundled_algebras() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("theorem.id");
    std::fs::write(&path, stdout(&lyid(&["identity", "--format", "file"]))).unwrap();
    for name in ["zero", "cross-product", "leibniz-2", "leibniz-3"] {
        let o = lyid(&["verify", "--identity", path.to_str().unwrap(), "--algebra", &format!("bundled:{name}"), "--trials", "3"]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
        assert!(stdout(&o).starts_with("pass: 3 random trials"));
    }
}

#[test]
fn verify_reports_a_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.id");
    // The Jacobi sum alone fails once the bracket is projected away from
    // the subalgebra.
    std::fs::write(&path, "degree 3\nalternating true\nclass binary\nterm 1 123 1\n").unwrap();
    let o = lyid(&["verify", "--identity", path.to_str().unwrap(), "--algebra", "bundled:reductive-sl4", "--trials", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(out.starts_with("FAIL"));
    assert!(out.contains("x1 = ("));
}

#[test]
fn validate_algebra_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    let o = lyid(&["algebra", "cross-product"]);
    assert!(o.status.success());
    std::fs::write(&good, stdout(&o)).unwrap();
    let o = lyid(&["validate-algebra", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"dimension": 3, "construction": "lie",
            "bilinear": [[1,2,1,"1"],[2,1,1,"-1"],[1,3,2,"1"],[3,1,2,"-1"]]}"#,
    )
    .unwrap();
    let o = lyid(&["validate-algebra", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("LY3"), "{}", stdout(&o));
}

#[test]
fn bundled_algebra_listing() {
    let out = stdout(&lyid(&["algebra"]));
    for name in ["zero", "cross-product", "leibniz-2", "leibniz-3", "reductive-sl4"] {
        assert!(out.contains(name), "{name}");
    }
    assert_eq!(lyid(&["algebra", "nope"]).status.code(), Some(1));
}
