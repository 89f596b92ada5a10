use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_equisig"))
}

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/corpus").join(name)
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn field(text: &str, key: &str) -> i64 {
    let prefix = format!("{key}: ");
    text.lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .parse()
        .unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("equisig-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn error_files_exit_with_their_codes() {
    let cases = [
        ("syntax_error.json", 2, "parse.json"),
        ("bad_label.json", 2, "parse.segment-range"),
        ("broken_sign.json", 3, "validate.symmetry-sign"),
        ("inadmissible.json", 4, "admissibility.h-end"),
    ];
    for (file, code, tag) in cases {
        for sub in ["validate", "compute"] {
            let o = run(&[sub, corpus(file).to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(code), "{sub} {file}");
            assert!(stderr(&o).starts_with(&format!("error[{tag}]")), "{}", stderr(&o));
            assert!(o.stdout.is_empty());
        }
    }
}

#[test]
fn valid_corpus_validates() {
    for file in ["trefoil.json", "trefoil_kinks.json", "trefoil_r2.json"] {
        let o = run(&["validate", corpus(file).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(stdout(&o).starts_with("ok: "));
        let o = run(&["compute", corpus(file).to_str().unwrap()]);
        assert_eq!(field(&stdout(&o), "sigma_tilde"), -2);
    }
}

#[test]
fn io_and_usage_errors_exit_one() {
    assert_eq!(run(&["compute", "/nonexistent/file.json"]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    let o = run(&["catalog", "emit", "nope"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error[catalog.unknown-key]"));
    assert_eq!(run(&["catalog", "emit", "unknot", "--n", "3"]).status.code(), Some(1));
}

#[test]
fn catalog_emit_pipes_into_compute() {
    let emitted = run(&["catalog", "emit", "torus", "--n", "2"]);
    assert!(emitted.status.success());
    let o = run_stdin(&["compute"], &emitted.stdout);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(field(&text, "sigma_tilde"), -4);
    assert_eq!(field(&text, "crossings"), 5);
    assert_eq!(field(&text, "bg4_lower"), 2);
    let dash = run_stdin(&["compute", "-"], &emitted.stdout);
    assert_eq!(dash.stdout, o.stdout);
}

#[test]
fn catalog_list_names_every_entry() {
    let text = stdout(&run(&["catalog", "list"]));
    for key in ["unknot", "torus", "7_4b_plus", "7_4b_minus", "trefoil_kinks", "trefoil_r2"] {
        assert!(text.lines().any(|l| l.starts_with(key)), "{key}");
    }
}

#[test]
fn json_report_for_7_4b_minus() {
    let path = data("7_4b_minus.json");
    let o = run(&["compute", "--json", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 11);
    assert_eq!(v["alternating"], false);
    assert_eq!(v["e"], 8);
    assert_eq!(v["gsig"], -2);
    assert_eq!(v["sigma_tilde"], -10);
    assert_eq!(v["bg4_lower"], 5);
    assert_eq!(v["intermediates"]["goeritz"].as_array().unwrap().len(), 8);
    // byte-stable across runs
    assert_eq!(run(&["compute", "--json", path.to_str().unwrap()]).stdout, o.stdout);
}

#[test]
fn explain_extends_the_plain_report() {
    let path = data("7_4b_plus.json");
    let plain = stdout(&run(&["compute", path.to_str().unwrap()]));
    let explained = stdout(&run(&["compute", "--explain", path.to_str().unwrap()]));
    assert!(explained.starts_with(&plain));
    assert!(explained.contains("goeritz basis:"));
    assert!(explained.contains("alternating fast path: -6"));
}

#[test]
fn connect_sum_and_mirror_write_valid_diagrams() {
    let plus = data("7_4b_plus.json");
    let minus = data("7_4b_minus.json");
    let mirrored = tmp("m7_4b_minus.json");
    let o = run(&["mirror", minus.to_str().unwrap(), "-o", mirrored.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = run(&["compute", mirrored.to_str().unwrap()]);
    assert_eq!(field(&stdout(&o), "sigma_tilde"), 10);

    let sum = tmp("sum.json");
    let o = run(&[
        "connect-sum",
        plus.to_str().unwrap(),
        mirrored.to_str().unwrap(),
        "--output",
        sum.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&run(&["compute", sum.to_str().unwrap()]));
    assert_eq!(field(&text, "crossings"), 18);
    assert_eq!(field(&text, "sigma_tilde"), 4);

    // stdout when no output file is given
    let o = run(&["mirror", plus.to_str().unwrap()]);
    let o = run_stdin(&["compute"], &o.stdout);
    assert_eq!(field(&stdout(&o), "sigma_tilde"), 6);
    let _ = std::fs::remove_dir_all(mirrored.parent().unwrap());
}

#[test]
fn connect_sum_rejects_a_bad_summand() {
    let o = run(&[
        "connect-sum",
        corpus("trefoil.json").to_str().unwrap(),
        corpus("broken_sign.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
}
