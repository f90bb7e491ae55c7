use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn tl(args: &[&str]) -> Output {
    tl_stdin(args, "")
}

fn tl_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tl"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn tl");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(p).unwrap()
}

fn check_golden(args: &[&str], name: &str) {
    let o = tl(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), golden(name), "{args:?}");
}

#[test]
fn golden_outputs() {
    check_golden(&["render", "--theory", "Kn", "--n", "2", "h1"], "render_h1.txt");
    check_golden(&["render", "--theory", "K", "--format", "svg", "u1 n1"], "render_circle.svg");
    check_golden(&["render", "--theory", "Kn", "--n", "3", "--format", "svg", "h2 h1"], "render_h2h1.svg");
    check_golden(&["matrix", "--p", "2", "--n", "2", "h1"], "matrix_h1.txt");
    check_golden(&["matrix", "--p", "3", "--n", "2", "--format", "csv", "h1"], "matrix_h1_p3.csv");
    check_golden(&["braid-check", "--p", "2", "--n", "3"], "braid_p2n3.txt");
    check_golden(&["braid-check", "--p", "3", "--n", "2", "--word", "s1"], "braid_word_p3.txt");
    check_golden(&["normalize", "--theory", "L", "a2^() b1^(()) C3^(())()"], "normalize_l.txt");
    check_golden(&["normalize", "--theory", "K", "n1 u3 u1 n1 u2"], "normalize_k.txt");
    check_golden(&["normalize", "--theory", "Kn", "--n", "4", "h1 h2 h3 h1 h2 h1 h1"], "normalize_kn.txt");
    check_golden(&["crown", "--theory", "K", "u1 u1 n2"], "crown.txt");
}

#[test]
fn svg_has_one_loop_legend() {
    let s = stdout(&tl(&["render", "--format", "svg", "u1 n1"]));
    assert_eq!(s.matches("class=\"loop-legend\"").count(), 1);
    let s = stdout(&tl(&["render", "--format", "svg", "u1"]));
    assert_eq!(s.matches("loop-legend").count(), 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["render", "--theory", "Kn", "--n", "5", "--format", "svg", "h2 h1 h4 h3 h2"];
    assert_eq!(tl(&args).stdout, tl(&args).stdout);
    let args = ["independent", "--p", "2", "--n", "4"];
    assert_eq!(tl(&args).stdout, tl(&args).stdout);
}

#[test]
fn spec_examples() {
    let o = tl(&["eq", "--theory", "K", "u1 n1", "u2 n2"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "equal\n"));
    let o = tl(&["count", "--jones", "4"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "14\n"));
    let o = tl(&["matrix", "--p", "2", "--n", "2", "h1"]);
    assert_eq!(stdout(&o), "1 0 0 1\n0 0 0 0\n0 0 0 0\n1 0 0 1\n");
}

#[test]
fn exit_codes_per_subcommand() {
    let code = |args: &[&str]| tl(args).status.code().unwrap();
    // normalize
    assert_eq!(code(&["normalize", "--theory", "K", "u1 n2"]), 0);
    assert_eq!(code(&["normalize", "--theory", "K", "u0"]), 1);
    // eq
    assert_eq!(code(&["eq", "--theory", "J", "u1 n1", "1"]), 0);
    assert_eq!(code(&["eq", "--theory", "K", "u1 n1", "1"]), 2);
    assert_eq!(code(&["eq", "--theory", "K", "--frieze", "--ignore-loops", "u1 n1", "1"]), 0);
    assert_eq!(code(&["eq", "--theory", "Kn", "--n", "3", "h1 h2 h1", "h1"]), 0);
    assert_eq!(code(&["eq", "--theory", "Kn", "--n", "3", "h1", "h2"]), 2);
    assert_eq!(code(&["eq", "--theory", "Kn", "h1", "h2"]), 1);
    assert_eq!(code(&["eq", "--arrow", "phi 0 . gamma 0", "id 0"]), 2);
    assert_eq!(code(&["eq", "--arrow", "--theory", "J", "phi 0 . gamma 0", "id 0"]), 0);
    assert_eq!(code(&["eq", "--arrow", "phi 0 . phi 0", "id 0"]), 1);
    // render
    assert_eq!(code(&["render", "u1"]), 0);
    assert_eq!(code(&["render", "--format", "csv", "u1"]), 1);
    // matrix
    assert_eq!(code(&["matrix", "--p", "2", "u1"]), 0);
    assert_eq!(code(&["matrix", "--p", "2", "--arrow", "F(phi 0)"]), 0);
    assert_eq!(code(&["matrix", "--p", "2", "--n", "12", "h1"]), 1);
    assert_eq!(code(&["matrix", "--p", "2", "--n", "3", "--max-dim", "4", "h1"]), 1);
    // braid-check
    assert_eq!(code(&["braid-check", "--p", "3", "--n", "3", "--branch", "-"]), 0);
    assert_eq!(code(&["braid-check", "--p", "3", "--n", "3", "--alpha", "0"]), 1);
    assert_eq!(code(&["braid-check", "--p", "2", "--n", "3", "--word", "s3"]), 1);
    // count
    assert_eq!(code(&["count", "--matchings", "5"]), 0);
    assert_eq!(code(&["count"]), 1);
    assert_eq!(code(&["count", "--jones", "40"]), 1);
    // balance
    assert_eq!(code(&["balance", "u1", "1"]), 0);
    assert_eq!(code(&["balance", "--collapse", "u1 u1", "1"]), 0);
    assert_eq!(code(&["balance", "--collapse", "u1 n1", "1"]), 2);
    // crown
    assert_eq!(code(&["crown", "u1"]), 0);
    assert_eq!(code(&["crown", "u1 ("]), 1);
    // independent
    assert_eq!(code(&["independent", "--p", "2", "--n", "3"]), 0);
    assert_eq!(code(&["independent", "--p", "2", "--n", "20"]), 1);
    // equiv-j
    assert_eq!(code(&["equiv-j", "--p", "2", "u1 n1", "1"]), 0);
    assert_eq!(code(&["equiv-j", "--p", "2", "n1 u1", "1"]), 2);
    // usage
    assert_eq!(code(&[]), 1);
    assert_eq!(code(&["bogus"]), 1);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn values_on_stdout() {
    assert_eq!(stdout(&tl(&["balance", "u1", "1"])), "1\n");
    assert_eq!(stdout(&tl(&["balance", "--collapse", "u1 u1", "1"])), "2\n");
    assert_eq!(stdout(&tl(&["crown", "--theory", "Kn", "--n", "3", "h2"])), "(4, 4)\n");
    assert_eq!(stdout(&tl(&["count", "--matchings", "6"])), "132\n");
    assert_eq!(stdout(&tl(&["independent", "--p", "3", "--n", "3"])), "independent, rank 5 of 5\n");
    let o = tl(&["braid-check", "--p", "2", "--n", "3", "--search", "2"]);
    assert!(stdout(&o).contains("  s1 s1\n"));
}

#[test]
fn stdin_dash() {
    let o = tl_stdin(&["normalize", "--theory", "Kn", "--n", "3", "-"], "h1 h2 h1\n");
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "h1\n"));
    let o = tl_stdin(&["eq", "--theory", "K", "-", "u2 n2"], "u1 n1");
    assert_eq!(o.status.code(), Some(0));
    let o = tl_stdin(&["eq", "--theory", "K", "-", "-"], "u1 n1");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn errors_go_to_stderr() {
    let o = tl(&["normalize", "--theory", "K", "u1 x7"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.starts_with("error: parse error at position 3"), "{err}");
}
