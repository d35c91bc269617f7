use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sqsym"))
        .args(args)
        .env_remove("SQSYM_MAX_VERTICES")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn example() -> String {
    fixture("example2.json").to_str().unwrap().to_string()
}

#[test]
fn chromatic_matches_the_golden_files() {
    for (format, golden) in [("text", "example2_invariant.txt"), ("json", "example2_invariant.json")] {
        let out = run(&["--format", format, "chromatic", &example()], "");
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        assert_eq!(stdout(&out), std::fs::read_to_string(fixture(golden)).unwrap());
    }
    for method in ["oracle", "chambers", "theorem"] {
        let out = run(&["chromatic", "--method", method, &example()], "");
        assert_eq!(stdout(&out), std::fs::read_to_string(fixture("example2_invariant.txt")).unwrap(), "{method}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "chambers", &example()];
    let first = run(&args, "");
    let second = run(&args, "");
    assert_eq!(first.stdout, second.stdout);
    let a = run(&["gen", "random", "4", "--seed", "11"], "");
    let b = run(&["gen", "random", "4", "--seed", "11"], "");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn dims_lists_graded_dimensions() {
    let out = run(&["dims", "--max", "4"], "");
    assert_eq!(stdout(&out).trim(), "1 3 10 34 116");
}

#[test]
fn verify_theorem_reports_the_term_count() {
    let out = run(&["verify-theorem", &example()], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "oracle == chambers == theorem: OK (4 t-degrees, 8 M-terms)");
}

#[test]
fn raw_rank_rule_mismatch_exits_one() {
    let graph = r#"{"d":3,"edges":[{"u":1,"v":3,"sign":"+","tau_u":"-","tau_v":"+"}]}"#;
    let out = run(&["verify-theorem", "--rule", "rank", "-"], graph);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("MISMATCH"));
    let out = run(&["verify-theorem", "-"], graph);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn symmetry_reads_from_a_pipe() {
    let generated = run(&["gen", "circulant-switched", "5", "2", "1"], "");
    assert_eq!(generated.status.code(), Some(0));
    let out = run(&["symmetry", "-"], &stdout(&generated));
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "signed-symmetric: true (t-degrees 0..10)");

    let out = run(&["symmetry", &example()], "");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn files_and_inline_literals() {
    let dir = tempfile::tempdir().unwrap();
    let left = dir.path().join("left.json");
    std::fs::write(&left, r#"{"terms":[{"k":1,"lam":[],"coef":"1"}]}"#).unwrap();
    let out = run(&["product", left.to_str().unwrap(), r#"{"terms":[{"k":1,"lam":[],"coef":"1"}]}"#], "");
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "M[2;]");

    let out = run(&["product", "F[d=2; S={1}; eps=-+]", "F[d=2; S={0}; eps=++]"], "");
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).matches("F[").count(), 6);
}

#[test]
fn counting_and_chambers() {
    let out = run(&["count", &example(), "--m", "2", "--t", "1"], "");
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "12");
    let out = run(&["chambers", &example()], "");
    assert_eq!(stdout(&out).lines().count(), 6);
    let out = run(&["verify-zaslavsky", &example()], "");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    let bad = r#"{"d":2,"edges":[{"u":1,"v":2,"sign":"+","tau_u":"+","tau_v":"+"}]}"#;
    let out = run(&["chromatic", bad], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("sign != -tau_u*tau_v on edge 0"), "{}", stderr(&out));

    let out = run(&["chromatic", "/no/such/file.json"], "");
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["--max-vertices", "1", "chromatic", &example()], "");
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["frobnicate"], "");
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["--help"], "");
    assert_eq!(out.status.code(), Some(0));
}
