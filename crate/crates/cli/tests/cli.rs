//! End-to-end checks of the `rees` binary: golden outputs, determinism,
//! exit codes, and the poset JSON format.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use proptest::prelude::*;
use rees_cli::json::{poset_from_json, poset_to_json};
use rees_core::zoo;

fn rees(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rees")).args(args).output().expect("binary runs")
}

fn rees_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rees"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn table_matches_published_columns() {
    let text = stdout(&rees(&["table", "--max-n", "10"]));
    let expected = "  n          D_n    (-1)^n mu  factorization
  0            1            0  0
  1            0            1  1 * 1
  2            1            2  2 * 1
  3            2           15  3 * 5
  4            9          116  4 * 29
  5           44         1165  5 * 233
  6          265        13974  6 * 2329
  7         1854       195643  7 * 27949
  8        14833      3130280  8 * 391285
  9       133496     56345049  9 * 6260561
 10      1334961   1126900970  10 * 112690097
";
    assert_eq!(text, expected);
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["table", "--format", "json"],
        vec!["zoo", "cube", "2"],
        vec!["verify", "falling", "--max-n", "4", "--format", "json"],
        vec!["homology", "rees-cube", "2"],
    ] {
        let a = stdout(&rees(&args));
        let b = stdout(&rees(&args));
        assert_eq!(a, b, "non-deterministic output for {args:?}");
    }
}

#[test]
fn rees_pipe_to_mobius() {
    let cube = stdout(&rees(&["zoo", "cube", "2"]));
    let rees_poset = stdout(&rees_with_stdin(&["rees", "-", "zoo:chain:3"], &cube));
    let mu = stdout(&rees_with_stdin(&["mobius", "-"], &rees_poset));
    assert_eq!(mu.trim(), "2");
}

#[test]
fn mobius_flags() {
    let out = stdout(&rees(&["mobius", "--poset", "zoo:boolean:4", "--rees-chain", "4"]));
    assert_eq!(out.trim(), "-9");
    let out = stdout(&rees(&[
        "mobius",
        "--poset",
        "zoo:cube:5",
        "--rees-chain",
        "6",
        "--method",
        "compositions",
    ]));
    assert_eq!(out.trim(), "-1165");
    let out = stdout(&rees(&["mobius", "zoo:boolean:3", "--method", "zeta"]));
    assert_eq!(out.trim(), "-1");
}

#[test]
fn bijection_worked_examples() {
    let fwd = stdout(&rees(&["bijection", "forward", "(135764928)"]));
    assert_eq!(fwd.trim(), "9 |8| |2| 6 |4| 7 5 3 |1|");
    let inv = stdout(&rees(&["bijection", "inverse", "8 |7| |2| 6 |1| 9 |5| 4 |3|"]));
    assert_eq!(inv.trim(), "(16827)(3495)");
}

#[test]
fn falling_list_golden() {
    let out = stdout(&rees(&["falling", "2", "--list"]));
    assert_eq!(out, "0 -1 |-2| 3\n0 |-1| |-2| 3\n");
    let count = stdout(&rees(&["falling", "7"]));
    assert_eq!(count.trim(), "195643");
}

#[test]
fn exit_codes() {
    // success
    assert_eq!(rees(&["derange", "4"]).status.code(), Some(0));
    // usage errors
    assert_eq!(rees(&["mobius"]).status.code(), Some(2), "missing poset reference");
    assert_eq!(rees(&["verify", "nonsense"]).status.code(), Some(2), "unknown suite");
    assert_eq!(rees(&["homology", "rees-cube", "4"]).status.code(), Some(2), "n=4 needs --slow");
    assert_eq!(rees(&["table", "--max-n", "12"]).status.code(), Some(2), "table beyond 10 needs --slow");
    assert_eq!(rees(&["zoo", "chain", "0"]).status.code(), Some(2), "chain 0 rejected");
    // verification suites succeed
    assert_eq!(rees(&["verify", "all", "--max-n", "3"]).status.code(), Some(0));
}

#[test]
fn boundary_dump_is_sorted_triplets() {
    let out = stdout(&rees(&["homology", "rees-cube", "1", "--dump-boundary", "1"]));
    let rows: Vec<Vec<i64>> = out
        .lines()
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect();
    assert!(!rows.is_empty());
    let mut sorted = rows.clone();
    sorted.sort();
    assert_eq!(rows, sorted);
    assert!(rows.iter().all(|r| r.len() == 3 && (r[2] == 1 || r[2] == -1)));
}

#[test]
fn out_file_writes_same_bytes() {
    let dir = std::env::temp_dir().join("rees-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let direct = stdout(&rees(&["table", "--format", "csv"]));
    let out = rees(&["table", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn poset_json_roundtrip(family in 0..4u32, n in 1..4u32) {
        let p = match family {
            0 => zoo::chain(n + 1),
            1 => zoo::boolean_algebra(n),
            2 => zoo::cubical_lattice(n),
            _ => zoo::tary_tree(2, n + 1),
        };
        let text = poset_to_json(&p);
        let q = poset_from_json(&text).unwrap();
        prop_assert_eq!(p.len(), q.len());
        prop_assert_eq!(p.ranks(), q.ranks());
        prop_assert_eq!(p.labels(), q.labels());
        prop_assert_eq!(
            p.covers().collect::<Vec<_>>(),
            q.covers().collect::<Vec<_>>()
        );
        prop_assert_eq!(p.bottom(), q.bottom());
        prop_assert_eq!(p.top(), q.top());
        // and serialization is stable through the roundtrip
        prop_assert_eq!(text, poset_to_json(&q));
    }
}
