mod support;

use std::io::Write;
use std::process::{Command as Proc, Stdio};

use ainfty::io::{parse_bytes, random_input, run, Command, Flags, ParseError};
use support::{corpus, round_trip, CAP};

fn flags() -> Flags {
    Flags { arity_cap: CAP, seed: None, json: false, quiet: false }
}

fn bin() -> Proc {
    let mut p = Proc::new(env!("CARGO_BIN_EXE_ainfty"));
    p.env_remove("AINF_ARITY_CAP");
    p
}

fn corpus_file(name: &str) -> String {
    support::corpus_dir().join(name).to_string_lossy().into_owned()
}

#[test]
fn corpus_has_thirty_files() {
    assert!(corpus().len() >= 30);
}

#[test]
fn corpus_round_trips() {
    for (name, text) in corpus() {
        round_trip(&name, &text).unwrap();
    }
}

#[test]
fn corpus_is_not_already_canonical() {
    let changed = corpus()
        .iter()
        .filter(|(_, t)| parse_bytes(t.as_bytes(), CAP).unwrap().canonical() != *t)
        .count();
    assert!(changed >= 20, "only {changed} corpus files differ from canonical form");
}

#[test]
fn expected_failures_in_corpus() {
    let read = |n: &str| std::fs::read(support::corpus_dir().join(n)).unwrap();
    assert_eq!(run(Command::CheckComplex, &read("complex_bad.txt"), &[], &flags()).exit, 1);
    let o = run(Command::K0, &read("presentation.txt"), &[], &flags());
    assert_eq!(o.exit, 1);
    assert!(o.reports.iter().any(|r| r.check.starts_with("theta:") && !r.passed()));
}

#[test]
fn emitted_files_reparse() {
    let mut cases = vec![(Command::Snake, std::fs::read_to_string(support::corpus_dir().join("snake.txt")).unwrap())];
    for seed in 0..8 {
        cases.push((Command::TsCompose, random_input("ts", seed).unwrap()));
        cases.push((Command::Assemble, random_input("datum", seed).unwrap()));
    }
    for (cmd, text) in cases {
        let o = run(cmd, text.as_bytes(), &[], &flags());
        assert_eq!(o.exit, 0, "{} failed: {:?}", cmd.name(), o.reports);
        let emitted = o.emitted.expect("command emits a file");
        let doc = parse_bytes(emitted.as_bytes(), CAP).unwrap_or_else(|e| panic!("{}: {e}\n{emitted}", cmd.name()));
        assert_eq!(doc.canonical(), emitted, "emitted text is canonical");
        if cmd != Command::Snake {
            assert_eq!(run(Command::ConeDecomp, emitted.as_bytes(), &[], &flags()).exit, 0);
        }
    }
}

#[test]
fn fuzzed_inputs_only_give_parse_errors() {
    let (ok, bad) = support::fuzz(10_000, 11).unwrap();
    assert!(ok > 0 && bad > 0, "accepted {ok}, rejected {bad}");
}

#[test]
fn errors_carry_positions() {
    match parse_bytes(b"complex C dim 2\nd 01\nd 1x\n", CAP) {
        Err(ParseError::Syntax { line: 3, .. }) | Err(ParseError::Dimension { line: 3, .. }) => {}
        other => panic!("{other:?}"),
    }
    match parse_bytes(b"complex C dim 1\n\xff\n", CAP) {
        Err(ParseError::Syntax { line: 2, column: 1, .. }) => {}
        other => panic!("{other:?}"),
    }
    match parse_bytes(b"complex C dim 100000\n", CAP) {
        Err(ParseError::Dimension { line: 1, .. }) => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn binary_exit_codes() {
    let status = |args: &[&str]| bin().args(args).stdout(Stdio::null()).stderr(Stdio::null()).status().unwrap();
    assert_eq!(status(&["check-complex", &corpus_file("complex_basic.txt")]).code(), Some(0));
    assert_eq!(status(&["check-complex", &corpus_file("complex_bad.txt")]).code(), Some(1));
    assert_eq!(status(&["check-complex", "/nonexistent/file.txt"]).code(), Some(2));
    assert_eq!(status(&["no-such-command", "-"]).code(), Some(2));
    assert_eq!(status(&["assemble", "random:datum", "--seed", "3", "--quiet"]).code(), Some(0));
    assert_eq!(status(&["assemble", "random:nothing"]).code(), Some(2));

    let mut child = bin().args(["check-complex", "-"]).stdin(Stdio::piped()).stdout(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(b"complex C dim 2\nd 0 0\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ERROR "));
}

#[test]
fn json_output_is_valid() {
    let out = bin().args(["index", &corpus_file("profiles.txt"), "--json"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "index");
    assert_eq!(v["reports"].as_array().unwrap().len(), 3);
}

#[test]
fn arity_cap_from_environment() {
    let note = |file: &str, input: Option<&str>, cap: &str| {
        let mut child = bin()
            .args(["check-ainf", file, "--json"])
            .env("AINF_ARITY_CAP", cap)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .unwrap();
        let mut stdin = child.stdin.take().unwrap();
        if let Some(t) = input {
            stdin.write_all(t.as_bytes()).unwrap();
        }
        drop(stdin);
        let out = child.wait_with_output().unwrap();
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        v.to_string()
    };
    let text = "category A dg C\ncomplex C dim 2\nd 00\nd 10\n";
    for cap in ["2", "3", "5"] {
        assert!(note("-", Some(text), cap).contains(&format!("arity cap {cap};")));
    }
    // the file's own `cap` key wins over the environment
    assert!(note(&corpus_file("random_category_42.txt"), None, "2").contains("arity cap 4;"));
}

#[test]
fn reports_are_deterministic() {
    for (name, text) in corpus() {
        for cmd in Command::ALL {
            let a = run(cmd, text.as_bytes(), &[], &flags());
            let b = run(cmd, text.as_bytes(), &[], &flags());
            assert_eq!(a.render(&flags()), b.render(&flags()), "{name} {}", cmd.name());
        }
    }
}
