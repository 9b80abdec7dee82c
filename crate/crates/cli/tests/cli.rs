use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_braidwo"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn normalize_prints_exponent_sequence() {
    let o = run(&["normalize", "212"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "(1,1,1)");
}

#[test]
fn hydra_trace_of_2211() {
    let o = run(&["hydra", "run", "2211", "--trace"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 16);
    assert!(s.lines().last().unwrap().contains("T = 14"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["normalize", "13"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["hardy", "w^(w)", "5", "--budget-bits", "64"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["hydra", "run", "(1,1,1)", "--max-steps", "3"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["special", "mirror", "[3: <2>, <0>]", "--convention", "n-2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["special", "mirror", "[3: <2>, <0>]"]).status.code(), Some(0));
}

#[test]
fn json_is_deterministic_and_versioned() {
    let args = ["--json", "mirror", "122112211", "--horizon", "8"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], "braidwo.cli/1");
    assert_eq!(v["unexplained"], 0);
}

#[test]
fn sci_digest_for_large_values() {
    let o = run(&["--sci", "--json", "hydra", "length", "(2,2,2)"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["length"]["bits"], 1163);
    let full = stdout(&run(&["hydra", "length", "(2,2,2)", "--method", "hardy"]));
    assert_eq!(full.trim(), v["length"]["value"].as_str().unwrap());
}

#[test]
fn counts_and_enumerations() {
    assert_eq!(stdout(&run(&["count", "total", "6"])).trim(), "487");
    let dir = tempfile::tempdir().unwrap();
    let o = bin()
        .args(["enum", "divisors", "3"])
        .env("BRAIDWO_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 48);
    assert!(dir.path().join("div-3.tsv").exists());
    let s = stdout(&run(&["enum", "s", "1", "3"]));
    assert_eq!(s.lines().last().unwrap(), format!("{}\t(1,1,1)", s.lines().count()));
}

#[test]
fn battle_replays_and_saves_trace() {
    let dir = tempfile::tempdir().unwrap();
    let play = |name: &str| {
        let path = dir.path().join(name);
        let mut child = bin()
            .args(["hydra", "battle", "121", "--trace-file"])
            .arg(&path)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .unwrap();
        // 9 is never permitted and must be re-prompted
        let script: String = std::iter::once("9\n".to_string())
            .chain((0..200).map(|_| "1\n".to_string()))
            .collect();
        child.stdin.take().unwrap().write_all(script.as_bytes()).ok();
        let o = child.wait_with_output().unwrap();
        (stdout(&o), std::fs::read_to_string(path).unwrap())
    };
    let (out1, trace1) = play("a.tsv");
    let (_, trace2) = play("b.tsv");
    assert!(out1.contains("choose one of"));
    assert_eq!(trace1, trace2);

    let path = dir.path().join("q.tsv");
    let mut child = bin()
        .args(["hydra", "battle", "(1,1,1)", "--trace-file"])
        .arg(&path)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"1\nquit\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(path).unwrap().lines().count(), 2);
}

#[test]
fn experiment_writes_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let o = bin()
        .args(["wo", "experiment", "1", "--f", "const:0", "--manifest"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(o.status.success());
    let m: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(m["schema"], "braidwo.manifest/1");
    assert_eq!(m["outcome"]["report"]["length"], 6);
    assert_eq!(m["exit_code"], 0);
}

#[test]
fn verify_single_suite() {
    let o = run(&["--json", "verify", "lengths"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["results"][0]["passed"], true);
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
}
