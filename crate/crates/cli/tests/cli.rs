use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tancone"))
        .args(args)
        .env_remove("TANCONE_CONFIG")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--format", "json", "--quiet"];
    all.extend_from_slice(args);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout));
    });
    (v, out.status.code().unwrap())
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn tangentcone_frobenius_example() {
    let (v, code) = json(&["tangentcone", "4,5,11"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "tancone/v1");
    assert_eq!(v["mu_I_star"], 4);
    assert_eq!(v["mu_I"], 3);
    let gens: Vec<&str> = v["I_star_gens"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g.as_str().unwrap())
        .collect();
    for g in ["x*z", "y*z", "z^2", "y^4"] {
        assert!(gens.contains(&g), "{gens:?}");
    }
    assert_eq!(v["cm"], false);
    assert_eq!(v["hilbert_cross_check"], "pass");
}

#[test]
fn family_bresinsky_passes() {
    let (v, code) = json(&["family", "bresinsky", "--h", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    assert_eq!(v["mu_i_star"], 8);
    assert_eq!(v["mu_i"], 8);
}

#[test]
fn semigroup_shift() {
    let (v, code) = json(&["semigroup", "info", "3,5,7", "--shift", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["generators"], serde_json::json!([4, 6]));
    let (v, _) = json(&["semigroup", "info", "3,5,7", "--shift", "2"]);
    assert_eq!(v["generators"], serde_json::json!([5, 7, 9]));
}

#[test]
fn betti_commands() {
    let (v, code) = json(&["betti", "3,5,7"]);
    assert_eq!(code, 0);
    assert_eq!(v["betti"], serde_json::json!([1, 3, 2]));
    let (v, _) = json(&["betti", "3,5,7", "--star"]);
    assert_eq!(v["betti"], serde_json::json!([1, 3, 2]));
    assert_eq!(v["composition_zero"], true);
}

#[test]
fn ideal_command() {
    let (v, code) = json(&["ideal", "3,4,5"]);
    assert_eq!(code, 0);
    assert_eq!(v["mu_I"], 3);
}

#[test]
fn usage_errors_exit_2_with_json_on_stderr() {
    let out = run(&["--format", "json", "tangentcone", "3,x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["schema"], "tancone/v1");
    assert_eq!(err["error"]["kind"], "usage");

    assert_eq!(run(&["family", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["family", "shibuta"]).status.code(), Some(2));
    assert_eq!(run(&["family", "sally", "--h", "3"]).status.code(), Some(2));
    assert_eq!(
        run(&["--max-degree", "0", "ideal", "3,5"]).status.code(),
        Some(2)
    );
}

#[test]
fn budget_exit_3() {
    let out = run(&[
        "--format",
        "json",
        "--max-pairs",
        "2",
        "tangentcone",
        "7,9,11,13",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "budget");
}

#[test]
fn text_numbers_match_json() {
    for args in [
        vec!["tangentcone", "4,5,11"],
        vec!["semigroup", "info", "7,9,11"],
        vec!["family", "frobenius", "--a", "5", "--b", "7"],
    ] {
        let (v, _) = json(&args);
        let text = stdout(&run(&args));
        let mut nums = Vec::new();
        collect_numbers(&v, &mut nums);
        for n in nums {
            assert!(
                text.contains(&n),
                "{n} missing from text output of {args:?}"
            );
        }
    }
}

fn collect_numbers(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Number(n) => out.push(n.to_string()),
        Value::Array(a) => a.iter().for_each(|x| collect_numbers(x, out)),
        Value::Object(m) => m.values().for_each(|x| collect_numbers(x, out)),
        _ => {}
    }
}

#[test]
fn scan_json_lines_and_csv() {
    let out = run(&[
        "--quiet", "scan", "--base", "3,5,7", "--kmax", "16", "--jsonl",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines[0]["kind"], "scan_summary");
    assert_eq!(lines.len(), 1 + 17);
    assert!(lines.iter().all(|l| l["schema"] == "tancone/v1"));

    let out = run(&[
        "--quiet", "--format", "csv", "scan", "--base", "3,5,7", "--kmax", "16",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("k,"));
    assert_eq!(text.lines().count(), 18);
}

#[test]
fn scan_reports_period() {
    let (v, code) = json(&["scan", "--base", "3,5,7", "--betti", "--auto-extend"]);
    assert_eq!(code, 0);
    assert_eq!(v["detected_period"], 4);
    assert_eq!(v["verdicts"]["periodicity"], "pass");
}

#[test]
fn heartbeat_goes_to_stderr() {
    let out = run(&["scan", "--base", "0,1,2", "--kmax", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("[tancone]"));
    assert!(!stdout(&out).contains("[tancone]"));
}

#[test]
fn conjecture_width_small() {
    let (v, code) = json(&["conjecture", "width", "--wmax", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
    assert!(v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn conjecture_tilde_seeded_runs_repeat() {
    let args = [
        "conjecture",
        "tilde",
        "--random",
        "5",
        "--max-gen",
        "15",
        "--seed",
        "7",
    ];
    let (a, code) = json(&args);
    let (b, _) = json(&args);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    let (v, code) = json(&["conjecture", "tilde", "--samples", "3,5,7;7,9,11"]);
    assert_eq!(code, 0);
    assert_eq!(v["cases"], 2);
}

#[test]
fn config_file_and_env() {
    let dir = std::env::temp_dir().join(format!("tancone-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.conf");
    std::fs::write(&path, "# bundle\nformat = json\npair_budget = 2\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_tancone"))
        .args(["tangentcone", "7,9,11,13"])
        .env("TANCONE_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // flags override the file
    let out = Command::new(env!("CARGO_BIN_EXE_tancone"))
        .args(["--max-pairs", "100000", "tangentcone", "4,5,11"])
        .env("TANCONE_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["mu_I_star"], 4);
    std::fs::write(&path, "bogus = 1\n").unwrap();
    let out = run(&["--config", path.to_str().unwrap(), "ideal", "3,5"]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}
