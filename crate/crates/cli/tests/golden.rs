//! Byte-for-byte comparisons of CLI output with checked-in files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cobound::bounds::{BoundCertificate, Obstruction};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

/// Runs the binary from the bundled knot directory.
fn cobound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cobound"))
        .args(args)
        .current_dir(root().join("knots"))
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = cobound(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name))
        .unwrap()
}

#[test]
fn cover_example() {
    assert_eq!(stdout_of(&["cover", "--knot", "6_1.json", "--n", "3"]), golden("cover_6_1_n3.txt"));
    assert_eq!(stdout_of(&["cover", "--knot", "unknot.json", "--n", "5"]), "0\n");
    assert_eq!(stdout_of(&["cover", "--knot", "10_3.json", "--n", "7"]), "Z2059 + Z2059\n");
}

#[test]
fn bound_example() {
    let out = stdout_of(&[
        "bound", "--k1", "P1.json", "--mult1", "4", "--k0", "P2.json", "--mult0", "2", "--g", "0",
    ]);
    assert_eq!(out, golden("bound_4p1_2p2_g0.txt"));
    assert!(out.starts_with("G_0 ⊆ Q(4,2)\n"));
}

#[test]
fn staircase_example() {
    let out = stdout_of(&["staircase", "--corners", "(2,3),(5,1)", "--format", "ascii"]);
    assert_eq!(out, golden("staircase_two_corners.txt"));
}

#[test]
fn metacyclic_example() {
    let args = ["metacyclic", "bound", "--alpha", "10", "--m", "1", "--g", "0", "--n", "1"];
    assert_eq!(stdout_of(&args), golden("metacyclic_bound.txt"));
    assert!(stdout_of(&args).starts_with("c0 ≥ 5 "));
}

#[test]
fn svg_family_example() {
    let out = stdout_of(&["staircase", "--corners", "(4,2)", "--shifts", "10", "--format", "svg"]);
    assert_eq!(out, golden("staircase_shifts_4_2.svg"));
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["bound", "--k1", "P1", "--mult1", "3", "--k0", "P2", "--g-max", "5", "--format", "json"];
    assert_eq!(cobound(&args).stdout, cobound(&args).stdout);
}

#[test]
fn certificate_json_round_trips() {
    let text = stdout_of(&["metacyclic", "bound", "--alpha", "10", "--m", "1", "--g", "0", "--n", "1", "--format", "json"]);
    assert_eq!(text, golden("metacyclic_bound.json"));
    let cert = BoundCertificate::from_json(&text).unwrap();
    assert_eq!(cert.to_json() + "\n", text);

    let text = stdout_of(&[
        "bound", "--k1", "P1.json", "--mult1", "4", "--k0", "P2.json", "--mult0", "2", "--g", "1",
        "--format", "json",
    ]);
    let o: Obstruction = serde_json::from_str(&text).unwrap();
    assert_eq!(o.corner(), (3, 1));
    for c in &o.certificates {
        assert_eq!(&BoundCertificate::from_json(&c.to_json()).unwrap(), c);
    }
    assert_eq!(serde_json::to_string_pretty(&o).unwrap() + "\n", text);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("cobound-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig.svg");
    let out = cobound(&["staircase", "--corners", "(2,3),(5,1)", "--format", "svg", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("<?xml"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(cobound(&["cover", "--knot", "missing.json", "--n", "3"]).status.code(), Some(2));
    assert_eq!(cobound(&["cover", "--knot", "6_1.json", "--n", "1"]).status.code(), Some(2));
    assert_eq!(cobound(&["cover", "--knot", "6_1.json", "--n", "99999999999999999999"]).status.code(), Some(2));
    assert_eq!(cobound(&["cover", "--knot", "6_1.json", "--n", "3", "--format", "svg"]).status.code(), Some(2));
    assert_eq!(cobound(&["metacyclic", "bound", "--alpha", "10", "--m", "1", "--g", "1", "--n", "2"]).status.code(), Some(2));
    assert_eq!(cobound(&["staircase"]).status.code(), Some(2));
    assert_eq!(cobound(&["--help"]).status.code(), Some(0));

    let dir = std::env::temp_dir().join(format!("cobound-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"name": "x", "seifert": [[1, 0], [0, 1]]}"#).unwrap();
    let out = cobound(&["cover", "--knot", bad.to_str().unwrap(), "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(cobound(&["cover", "--knot", bad.to_str().unwrap(), "--n", "2"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn big_decimal_arguments() {
    let out = stdout_of(&[
        "metacyclic", "bound", "--alpha", "100000000000000000000000000001", "--m", "3", "--g", "0", "--n", "1",
    ]);
    assert!(out.starts_with("c0 ≥ 50000000000000000000000000000 "), "{out}");
    let out = stdout_of(&[
        "metacyclic", "realize", "--n", "2", "--m", "1", "--alpha", "123456789012345678901234567890", "--beta", "0", "--g", "0",
    ]);
    assert_eq!(out, "Q(493827156049382715604938271562,1)\n");
}

#[test]
fn metacyclic_subcommands() {
    assert_eq!(stdout_of(&["metacyclic", "homology", "--knot", "6_1"]), "Z7 + Z7 + Z7 + Z21\n");
    assert_eq!(stdout_of(&["metacyclic", "eigen", "--family", "alpha-6_1", "--scale", "4", "--p", "7"]), "8\n");
    assert_eq!(
        stdout_of(&["metacyclic", "multi-eigen", "--family", "beta-10_3", "--n", "3", "--a", "2", "--scale", "1", "--p", "19"]),
        "5\n"
    );
    assert_eq!(stdout_of(&["metacyclic", "lens", "--n", "3", "--a", "2"]), "2 L(3,2) # 3 L(9,2) # 2 S1xS2\n");
    assert!(stdout_of(&["metacyclic", "metabolizers", "--n", "1", "--m", "1"]).starts_with("3 metabolizers\n"));
    assert!(stdout_of(&["metacyclic", "support", "--n", "2", "--m", "1", "--g", "0"]).starts_with("holds: "));
    let rev = stdout_of(&["metacyclic", "reversibility", "--knot", "P333_6_1_10_3.json"]);
    assert!(rev.contains("case 1: basis [[1, 0, 0, 0], [0, 0, 0, 1]]; pattern couples [6_1], reverse couples [10_3]"));
    assert_eq!(rev.matches("case 3").count(), 8);
}
