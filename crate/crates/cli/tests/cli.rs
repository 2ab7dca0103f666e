use std::fs;
use std::path::PathBuf;

use nicecolor::format::{parse_coloring, parse_instance};
use nicecolor::is_nice;
use tempfile::TempDir;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("nicecolor").chain(args.iter().copied());
    let code = nicecolor_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

#[test]
fn four_triples_fair_but_not_colorable() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "t.txt", "1 2 3\n1 4 5\n2 4 5\n6 7 8\n");
    let (code, out, _) = run(&["check", "--colors", "2", f.to_str().unwrap()]);
    assert_eq!(out, "FAIR NOT-SPECIAL NOT-COLORABLE\n");
    assert_eq!(code, 1);
}

#[test]
fn one_color_on_disjoint_pair() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "t.txt", "1 2 3\n4 5 6\n");
    let (code, out, _) = run(&["color", "--colors", "1", f.to_str().unwrap()]);
    assert_eq!(out, "1 0\n2 0\n");
    assert_eq!(code, 0);
}

#[test]
fn generated_special_instances_are_flagged() {
    let dir = TempDir::new().unwrap();
    for seed in ["0", "1", "2"] {
        let (code, text, _) = run(&["gen", "--special", "--n", "7", "--seed", seed]);
        assert_eq!(code, 0);
        let f = write(&dir, "s.txt", &text);
        let (code, out, _) = run(&["check", "--colors", "2", f.to_str().unwrap()]);
        assert!(
            out.ends_with("SPECIAL NOT-COLORABLE\n") && !out.contains("NOT-SPECIAL"),
            "{out}"
        );
        assert_eq!(code, 1);
    }
}

#[test]
fn output_is_reproducible() {
    let a = run(&["gen", "--n", "50", "--m", "12", "--seed", "9"]);
    let b = run(&["gen", "--n", "50", "--m", "12", "--seed", "9"]);
    assert_eq!(a, b);
    let c = run(&["gen", "--n", "50", "--m", "12", "--seed", "10"]);
    assert_ne!(a.1, c.1);

    let dir = TempDir::new().unwrap();
    let f = write(&dir, "g.txt", &a.1);
    let first = run(&["color", f.to_str().unwrap()]);
    assert_eq!(first, run(&["color", f.to_str().unwrap()]));
}

#[test]
fn color_output_reads_back_nice() {
    let dir = TempDir::new().unwrap();
    for (seed, colors, k, partial) in [
        (1, "2", "3", false),
        (2, "2", "3", true),
        (3, "3", "3", false),
        (4, "2", "4", true),
    ] {
        let (_, text, _) = run(&["gen", "--n", "40", "--m", "10", "--k", k, "--seed", &seed.to_string()]);
        let f = write(&dir, "g.txt", &text);
        let mut args = vec!["color", "--colors", colors, f.to_str().unwrap()];
        if partial {
            args.push("--partial");
        }
        let (code, out, _) = run(&args);
        let (ts, _) = parse_instance(&text).unwrap();
        if out == "NONE\n" {
            assert_eq!(code, 1);
            continue;
        }
        assert_eq!(code, 0);
        let col = parse_coloring(&out, ts.len(), colors.parse().unwrap()).unwrap();
        assert!(is_nice(&ts, &col), "seed {seed}");
        if partial {
            let bound = k.parse::<usize>().unwrap() + 1;
            assert!(col.class_sizes().iter().all(|&s| s <= bound));
        }
    }
}

#[test]
fn hypergraph_round_trip() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "t.txt", "1 2 3\n1 4 5\n");
    let (code, h, _) = run(&["hypergraph", "to", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(h, "2 5\n-\n2\n2\n1\n1\n");
    let g = write(&dir, "h.txt", &h);
    let (code, back, _) = run(&["hypergraph", "from", g.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(back, "1 2 3\n1 4 5\n");
}

#[test]
fn schedule_text_and_infeasible() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.txt", "a 1 2 3\nb 4 5 6\nc 7 8 9\nd 1 5 9\n");
    let (code, out, _) = run(&["schedule", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("group 1: a b c d\n"), "{out}");
    assert_eq!(out.lines().count(), 4);

    let (code, json, _) = run(&["schedule", "--json", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["groups"][0]["rounds"].as_array().unwrap().len(), 3);

    let f = write(&dir, "q.txt", "a 1 2 3\nb 1 4 5\nc 1 6 7\nd 1 8 9\n");
    let (code, out, _) = run(&["schedule", f.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.starts_with("INFEASIBLE: problem 1"), "{out}");

    let f = write(&dir, "r.txt", "a 1 2 3\nb 4 5 6\n");
    assert_eq!(run(&["schedule", f.to_str().unwrap()]).0, 1);
}

#[test]
fn input_errors_exit_two_with_one_line() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "1 2 3\n1 2\n");
    for args in [
        vec!["check", bad.to_str().unwrap()],
        vec!["check", "/nonexistent/file"],
        vec!["color", "--colors", "0", bad.to_str().unwrap()],
        vec!["frobnicate"],
        vec!["gen", "--n", "3", "--m", "2"],
        vec!["gen", "--special", "--n", "3"],
    ] {
        let (code, out, err) = run(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1, "{err}");
    }
    let (_, _, err) = run(&["check", bad.to_str().unwrap()]);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn fair_only() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "t.txt", "1 2 3\n1 4 5\n");
    assert_eq!(
        run(&["check", "--fair-only", f.to_str().unwrap()]),
        (1, "NOT-FAIR\n".into(), String::new())
    );
    let f = write(&dir, "u.txt", "1 2 3\n4 5 6\n1 2 3\n4 5 6\n");
    assert_eq!(
        run(&["check", "--fair-only", f.to_str().unwrap()]),
        (0, "FAIR\n".into(), String::new())
    );
}
