use std::fs;
use std::process::{Command, Output};

use tempfile::tempdir;

fn nothree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nothree")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_reports_ok_and_collinear() {
    let dir = tempdir().unwrap();
    let good = dir.path().join("good.tsv");
    let bad = dir.path().join("bad.tsv");
    let empty = dir.path().join("empty.tsv");
    fs::write(&good, "0\t0\n1\t1\n2\t4\n").unwrap();
    fs::write(&bad, "0\t0\n1\t1\n2\t2\n").unwrap();
    fs::write(&empty, "").unwrap();

    let out = nothree(&["verify", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "OK 3 points");

    let out = nothree(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("COLLINEAR"));

    let out = nothree(&["verify", "--brute", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    let out = nothree(&["verify", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "OK 0 points");
}

#[test]
fn malformed_input_exits_with_two() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("junk.tsv");
    fs::write(&path, "1\t2\nthree\t4\n").unwrap();
    assert_eq!(nothree(&["verify", path.to_str().unwrap()]).status.code(), Some(2));
    let missing = dir.path().join("missing.tsv");
    assert_eq!(nothree(&["verify", missing.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(nothree(&["gen", "parabola", "--p", "9"]).status.code(), Some(2));
    assert_eq!(nothree(&["gen", "greedy", "--variant", "zigzag", "--n", "5"]).status.code(), Some(2));
}

#[test]
fn parabola_output_round_trips_through_verify() {
    let dir = tempdir().unwrap();
    let tsv = dir.path().join("p.tsv");
    let report = dir.path().join("p.json");
    let out = nothree(&[
        "gen", "parabola", "--p", "5", "--a", "0", "--b", "0",
        "--out", tsv.to_str().unwrap(), "--report", report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&tsv).unwrap(), "0\t0\n1\t1\n2\t4\n3\t4\n4\t1\n");
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["count"], 5);
    assert_eq!(nothree(&["verify", tsv.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn greedy_writes_to_stdout_deterministically() {
    let a = nothree(&["gen", "greedy", "--variant", "lexle", "--n", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), "1\t1\n2\t1\n3\t2\n4\t2\n5\t5\n");
    let b = nothree(&["gen", "greedy", "--variant", "lexle", "--n", "5", "--engine", "oracle"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn extensible_report_and_density() {
    let dir = tempdir().unwrap();
    let tsv = dir.path().join("ext.tsv");
    let report = dir.path().join("ext.json");
    let run = |path: &std::path::Path, rep: &std::path::Path| {
        nothree(&[
            "gen", "extensible", "--eps", "0.5", "--c", "24", "--n-max", "16",
            "--out", path.to_str().unwrap(), "--report", rep.to_str().unwrap(),
        ])
    };
    assert_eq!(run(&tsv, &report).status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    let squares = json["squares"].as_array().unwrap();
    assert_eq!(squares.len(), 4);
    for s in squares {
        let p = s["p"].as_u64().unwrap();
        assert_eq!(
            s["tally_sum"].as_u64().unwrap(),
            p * s["red_total"].as_u64().unwrap() + s["blue_total"].as_u64().unwrap()
        );
    }

    let (tsv2, report2) = (dir.path().join("again.tsv"), dir.path().join("again.json"));
    assert_eq!(run(&tsv2, &report2).status.code(), Some(0));
    assert_eq!(fs::read(&tsv).unwrap(), fs::read(&tsv2).unwrap());
    assert_eq!(fs::read(&report).unwrap(), fs::read(&report2).unwrap());

    let out = nothree(&["density", tsv.to_str().unwrap(), "--grids", "2^13,65536", "--eps", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(lines[0], "N\tcount\tratio");
    assert!(lines[1].starts_with("8192\t1\t"));
    assert_eq!(lines.len(), 3);
}

#[test]
fn plot_writes_svg() {
    let dir = tempdir().unwrap();
    let tsv = dir.path().join("p.tsv");
    let svg = dir.path().join("p.svg");
    fs::write(&tsv, "0\t0\n1\t1\n2\t4\n").unwrap();
    let out = nothree(&["plot", tsv.to_str().unwrap(), "--out", svg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("<circle").count(), 3);
}
