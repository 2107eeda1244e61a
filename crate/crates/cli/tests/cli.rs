use std::process::Command;

use braidnf_cli::run_args;

fn ok(args: &[&str]) -> String {
    let out = run_args(std::iter::once("braidnf").chain(args.iter().copied()));
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn fails(args: &[&str]) -> (i32, String) {
    let out = run_args(std::iter::once("braidnf").chain(args.iter().copied()));
    assert!(out.stdout.is_empty());
    (out.code, out.stderr)
}

#[test]
fn normalize() {
    assert_eq!(ok(&["normalize", "--strands", "4", "3 -2 -2 1"]), "1 3 2 -1 -1 -2\n");
    assert_eq!(ok(&["normalize", "--strands", "3", ""]), "\n");
    assert_eq!(ok(&["normalize", "--strands", "3", "2 1 2"]), "1 2 1\n");
    assert_eq!(
        ok(&["normalize", "--strands", "4", "--pretty", "3 -2 -2 1"]),
        "x1 x3 x2 x1^-2 x2^-1\n"
    );
    assert_eq!(
        ok(&["normalize", "--strands", "4", "--report", "3 -2 -2 1"]),
        include_str!("golden/normalize_report.txt")
    );
    assert_eq!(fails(&["normalize", "--strands", "3", "3"]).0, 1);
    assert_eq!(fails(&["normalize", "--strands", "3", "1 x"]).0, 1);
}

#[test]
fn crossings() {
    assert_eq!(ok(&["crossings", "--strands", "4", "3 -2 -2 1"]), "3,4 -2,4 -2,4 1,2\n");
    assert_eq!(
        ok(&["from-crossings", "--strands", "4", "1,2 3,4 1,4 -2,4 -2,4 -1,4"]),
        "1 3 2 -1 -1 -2\n"
    );
    let (code, err) = fails(&["from-crossings", "--strands", "3", "-1,3"]);
    assert_eq!(code, 1);
    assert!(err.contains("invalid crossing at position 1"), "{err}");
    let c = ok(&["crossings", "--strands", "5", "4 -1 2 3 -3 2 -4"]);
    let w = ok(&["from-crossings", "--strands", "5", c.trim()]);
    assert_eq!(w, "4 -1 2 3 -3 2 -4\n");
}

#[test]
fn residue() {
    let input = "3,4 -2,4 -2,4 1,2";
    let want = "1,2 3,4 1,4 -2,4 -2,4 -1,4\n";
    for s in ["leftmost", "rightmost", "random:1", "random:99"] {
        assert_eq!(ok(&["residue", "--strands", "4", "--strategy", s, input]), want);
    }
    assert_eq!(ok(&["residue", "--strands", "4", ""]), "\n");
    assert_eq!(fails(&["residue", "--strands", "4", "--strategy", "middle", input]).0, 1);
    assert_eq!(fails(&["residue", "--strands", "3", "1,3"]).0, 1);
    assert_eq!(fails(&["residue", "--strands", "4", "--max-steps", "1", input]).0, 2);
}

#[test]
fn random() {
    assert_eq!(ok(&["random", "--strands", "2", "--stop", "1.0", "--seed", "7"]), "\n");
    let args = ["random", "--strands", "5", "--stop", "0.2,0.2,0.15,0.1", "--seed", "3"];
    let a = ok(&args);
    assert_eq!(a, ok(&args));
    assert_eq!(ok(&["normalize", "--strands", "5", a.trim()]), a);
    assert_eq!(fails(&["random", "--strands", "3", "--stop", "0", "--seed", "1"]).0, 1);
    assert_eq!(fails(&["random", "--strands", "4", "--stop", "0.5,0.5", "--seed", "1"]).0, 1);
}

#[test]
fn equal() {
    assert_eq!(ok(&["equal", "--strands", "3", "1 2 1", "2 1 2"]), "equal\n");
    assert_eq!(ok(&["equal", "--strands", "3", "1", "2"]), "not-equal\n");
    assert_eq!(ok(&["equal", "--strands", "4", "3 -2 1", "3 -2 1"]), "equal\n");
}

#[test]
fn artin() {
    assert_eq!(ok(&["artin", "equal", "abab", "baba"]), "equal\n");
    assert_eq!(ok(&["artin", "equal", "a", "b"]), "not-equal\n");
    assert_eq!(ok(&["artin", "normalize", "--report", "ab"]), "a b\nm = 1\nw1 = b\n");
    assert_eq!(ok(&["artin", "normalize", ""]), "\n");
    assert_eq!(fails(&["artin", "normalize", "abc"]).0, 1);
}

#[test]
fn diagram() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.svg");
    let p = path.to_str().unwrap();
    assert_eq!(ok(&["diagram", "--strands", "4", "--bold", "4", "--out", p, "3 -2 -2 1"]), "");
    let first = std::fs::read_to_string(&path).unwrap();
    assert_eq!(first, include_str!("golden/example_bold4.svg"));
    ok(&["diagram", "--strands", "4", "--bold", "4", "--out", p, "3 -2 -2 1"]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);
    let missing = dir.path().join("no/such/dir/d.svg");
    assert_eq!(fails(&["diagram", "--strands", "3", "--out", missing.to_str().unwrap(), "1"]).0, 1);
    assert_eq!(fails(&["diagram", "--strands", "3", "--bold", "4", "1"]).0, 1);
}

#[test]
fn binary_streams_and_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_braidnf");
    let out = Command::new(bin)
        .args(["normalize", "--strands", "4", "-3 2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "-3 2\n");
    let out = Command::new(bin)
        .args(["from-crossings", "--strands", "3", "-1,3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().contains("position 1"));
}
