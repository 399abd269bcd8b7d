use std::process::{Command, Output};

use braid3_core::{homfly, BraidWord, KnotTable, LaurentPoly2};

fn braid3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braid3"))
        .args(args)
        .env_remove("BRAID3_MAX_BANDS")
        .output()
        .expect("run braid3")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix(": "))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn reduce_figure_eight() {
    let out = braid3(&["reduce", "[1 -2 1 -2]"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(field(&text, "kind"), "B");
    assert_eq!(field(&text, "minimal length"), "4");
    assert_eq!(field(&text, "chi"), "-1");
    assert_eq!(field(&text, "genus"), "1");
}

#[test]
fn reduce_structured() {
    let out = braid3(&["--format", "structured", "reduce", "[1 1 1 2]"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["minimal_length"], 4);
    assert_eq!(v["chi"], -1);
    assert_eq!(v["genus"], 1);
    assert_eq!(v["kind"], "TypeAPositive");
}

#[test]
fn homfly_matches_library() {
    let out = braid3(&["homfly", "[1 2]"]);
    assert_eq!(stdout(&out).trim(), "1*v^0*z^0");

    let word = "[1 -2 3 3 -1 2]";
    let out = braid3(&["homfly", word]);
    let printed: LaurentPoly2 = stdout(&out).trim().parse().unwrap();
    assert_eq!(printed, homfly(&word.parse::<BraidWord>().unwrap()));

    let out = braid3(&["--format", "structured", "homfly", word]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let parsed: LaurentPoly2 = v["homfly"].as_str().unwrap().parse().unwrap();
    assert_eq!(parsed, printed);
}

#[test]
fn homfly_at_point_is_a_residue() {
    let out = braid3(&["homfly", "--at-point", "[1 1 1 2]"]);
    assert!(out.status.success());
    let value: u64 = stdout(&out).trim().parse().unwrap();
    assert!(value < (1 << 61) - 1);
}

#[test]
fn invariants_structured() {
    let out = braid3(&["--format", "structured", "invariants", "[1 1 1 2 -1 2]"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["genus"], 1);
    assert_eq!(v["components"], 1);
}

#[test]
fn torus_and_pretzel() {
    let out = braid3(&["torus", "-3"]);
    assert!(out.status.success());
    let p: LaurentPoly2 = stdout(&out).trim().parse().unwrap();
    assert_eq!(p, homfly(&"[-1 -1 -1 2]".parse::<BraidWord>().unwrap()));

    let out = braid3(&["pretzel", "2", "2", "2", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(field(&text, "chi"), "-4");
    assert_eq!(field(&text, "max deg_v"), "11");
    assert_eq!(field(&text, "mwf bound"), "4");

    assert_eq!(braid3(&["pretzel", "1", "2", "3"]).status.code(), Some(1));
}

#[test]
fn enumerate_lengths() {
    let out = braid3(&["enumerate", "--length", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("word,kind,chi,components,genus,homfly,name")
    );
    assert!(lines.count() >= 2);
}

#[test]
fn genus_one_census() {
    let out = braid3(&["enumerate", "--genus", "1", "--max-bands", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut names: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    names.sort();
    assert_eq!(names, ["3_1", "4_1", "5_2"]);
}

#[test]
fn check_poly_outcomes() {
    let trefoil = "2*v^2*z^0 + -1*v^4*z^0 + 1*v^2*z^2";
    let out = braid3(&["check-poly", "--poly", trefoil]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("Realizable"), "{text}");
    assert!(text.contains("3_1"));

    let out = braid3(&["check-poly", "--poly", trefoil, "--max-bands", "3"]);
    assert!(stdout(&out).starts_with("Inconclusive"));

    // v-span 6 is too wide for three strands
    let out = braid3(&["check-poly", "--poly", "1*v^0*z^0 + 1*v^6*z^0 + -1*v^2*z^0"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("NotRealizable"));
}

#[test]
fn make_table_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let out = braid3(&["make-table", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let table = KnotTable::load(&path).unwrap();
    assert_eq!(table, braid3_core::knot_table::make_table());

    let out = braid3(&[
        "enumerate",
        "--genus",
        "1",
        "--max-bands",
        "6",
        "--table",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
}

#[test]
fn max_bands_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_braid3"))
        .args(["check-poly", "--poly", "2*v^2*z^0 + -1*v^4*z^0 + 1*v^2*z^2"])
        .env("BRAID3_MAX_BANDS", "3")
        .output()
        .unwrap();
    assert!(stdout(&out).starts_with("Inconclusive"));
}

#[test]
fn exit_codes() {
    assert_eq!(braid3(&["--help"]).status.code(), Some(0));
    assert_eq!(braid3(&["--version"]).status.code(), Some(0));
    assert_eq!(braid3(&[]).status.code(), Some(1));
    assert_eq!(braid3(&["bogus"]).status.code(), Some(1));
    assert_eq!(braid3(&["reduce", "[4]"]).status.code(), Some(1));
    assert_eq!(braid3(&["reduce", "[1 2"]).status.code(), Some(1));
    assert_eq!(
        braid3(&["check-poly", "--poly", "0"]).status.code(),
        Some(1)
    );
    assert_eq!(
        braid3(&["enumerate", "--table", "/nonexistent/table.csv"])
            .status
            .code(),
        Some(1)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "x,1,1*v^q*z^0\n").unwrap();
    let out = braid3(&[
        "enumerate",
        "--length",
        "1",
        "--table",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn caps_must_be_positive() {
    let out = braid3(&["check-poly", "--poly", "1*v^0*z^0", "--max-bands", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let out = braid3(&["enumerate", "--max-bands", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verbose_reports_on_stderr_only() {
    let quiet = braid3(&["homfly", "[1 1 2]"]);
    let loud = braid3(&["-v", "homfly", "[1 1 2]"]);
    assert_eq!(quiet.stdout, loud.stdout);
    assert!(String::from_utf8_lossy(&loud.stderr).contains("elapsed"));
}
