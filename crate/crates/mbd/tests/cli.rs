use std::process::{Command, Output};

fn mbd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mbd")).args(args).env_remove("MBD_BUDGET").output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_odd_path_in_the_staller_start_game() {
    let o = mbd(&["solve", "path:5", "--a", "1", "--b", "1", "--starter", "S"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "S");
}

#[test]
fn grid_table_lists_b1() {
    let o = mbd(&["threshold", "grid:2:2", "--table", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "b_1=3"), "{}", stdout(&o));
    let o = mbd(&["threshold", "grid:2:2", "--kind", "b'", "--index", "1"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = mbd(&["threshold", "grid:2:2", "--table", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "mbd.threshold-table/1");
}

#[test]
fn invariants() {
    assert_eq!(stdout(&mbd(&["invariant", "star:4", "--name", "sigma"])).trim(), "4");
    assert_eq!(stdout(&mbd(&["invariant", "cycle:10", "--name", "ltilde:2"])).trim(), "4");
    assert_eq!(stdout(&mbd(&["invariant", "C~", "--name", "gamma"])).trim(), "1");
    let o = mbd(&["invariant", "path:4", "--name", "lexstar"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["width"], 1);
    assert_eq!(mbd(&["invariant", "path:4", "--name", "omega"]).status.code(), Some(2));
}

#[test]
fn graph_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("p3.edges");
    std::fs::write(&f, "n 3\n0 1\n1 2\n").unwrap();
    let o = mbd(&["solve", f.to_str().unwrap(), "--a", "1", "--b", "1", "--starter", "S"]);
    assert_eq!(stdout(&o).trim(), "S");
    let o = mbd(&["generate", "path", "3"]);
    assert_eq!(stdout(&o).trim(), "Bg");
    let o = mbd(&["solve", "Bg", "--a", "1", "--b", "1", "--starter", "D"]);
    assert_eq!(stdout(&o).trim(), "D");
}

#[test]
fn distinct_exit_codes() {
    let malformed = mbd(&["solve", "C!", "--a", "1", "--b", "1", "--starter", "D"]);
    assert_eq!(malformed.status.code(), Some(3));
    let inapplicable =
        mbd(&["match", "path:5", "--a", "1", "--b", "1", "--starter", "S", "--dstrat", "pairing", "--sstrat", "best"]);
    assert_eq!(inapplicable.status.code(), Some(4));
    let budget = mbd(&["solve", "cycle:12", "--a", "1", "--b", "2", "--starter", "S", "--budget", "5"]);
    assert_eq!(budget.status.code(), Some(5));
    let usage = mbd(&["solve", "path:5", "--a", "0", "--b", "1", "--starter", "D"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn budget_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_mbd"))
        .args(["solve", "cycle:12", "--a", "1", "--b", "2", "--starter", "S"])
        .env("MBD_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn match_writes_transcripts() {
    let dir = tempfile::tempdir().unwrap();
    let text = dir.path().join("t.txt");
    let json = dir.path().join("t.json");
    for dest in [&text, &json] {
        let o = mbd(&[
            "match",
            "cycle:10",
            "--a",
            "1",
            "--b",
            "2",
            "--starter",
            "S",
            "--dstrat",
            "best",
            "--sstrat",
            "large:2",
            "--transcript",
            dest.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), "S");
    }
    let record = mbd::formats::parse_transcript_text(&std::fs::read_to_string(&text).unwrap()).unwrap();
    assert_eq!(record.winner, mbd_core::Player::Staller);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["schema"], "mbd.transcript/1");
    assert_eq!(v["staller"], "large:2");
}

fn without_timing(mut v: serde_json::Value) -> serde_json::Value {
    match &mut v {
        serde_json::Value::Object(m) => {
            m.remove("wall_ms");
            for x in m.values_mut() {
                *x = without_timing(x.take());
            }
        }
        serde_json::Value::Array(a) => {
            for x in a.iter_mut() {
                *x = without_timing(x.take());
            }
        }
        _ => {}
    }
    v
}

#[test]
fn verify_paper_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for name in ["a.json", "b.json"] {
        let path = dir.path().join(name);
        let o = mbd(&["verify-paper", "--suite", "quick", "--json", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        reports.push(std::fs::read_to_string(path).unwrap());
    }
    let parse = |s: &str| without_timing(serde_json::from_str(s).unwrap());
    assert_eq!(parse(&reports[0]), parse(&reports[1]));
    assert_eq!(parse(&reports[0])["schema"], "mbd.battery-report/1");

    let once = || stdout(&mbd(&["verify-paper", "--criterion", "1,8", "--no-timing", "--json", "-"]));
    assert_eq!(once(), once());
}
