use std::process::{Command, Output};

fn schubkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubkit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn compute_examples() {
    for (args, want) in [
        (["compute", "grothendieck", "132"], "x1 + x2 - x1*x2"),
        (["compute", "top", "132"], "-x1*x2"),
        (["compute", "lascoux", "2,1"], "x1^2*x2"),
    ] {
        let o = schubkit(&args);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), want);
    }
}

#[test]
fn compute_json_round_trips() {
    let o = schubkit(&["--format", "json", "compute", "grothendieck", "1432"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let p: schubkit::MultiPolynomial = serde_json::from_value(v["polynomial"].clone()).unwrap();
    assert_eq!(p, schubkit::polynomial::grothendieck(&"1432".parse().unwrap()));
}

#[test]
fn verify_passes_with_exit_zero() {
    let o = schubkit(&["--format", "json", "verify", "engines", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["suite"], "engines");
    assert_eq!(v["cases_run"], 24);
    assert_eq!(v["cases_passed"], 24);

    let o = schubkit(&["verify", "thm-1.1", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS vexillary-top n=4"));
}

#[test]
fn operational_errors_exit_two() {
    assert_eq!(schubkit(&["compute", "grothendieck", "1x2"]).status.code(), Some(2));
    assert_eq!(schubkit(&["--max-n", "3", "compute", "grothendieck", "1243"]).status.code(), Some(2));
    assert_eq!(schubkit(&["verify", "engines", "--n", "9"]).status.code(), Some(2));
    assert_eq!(schubkit(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(schubkit(&["--weyl-size-bound", "0", "compute", "chi", "1,1"]).status.code(), Some(2));
}

#[test]
fn environment_mirrors_flags() {
    let o = Command::new(env!("CARGO_BIN_EXE_schubkit"))
        .args(["verify", "fireworks-top"])
        .env("SCHUBKIT_N", "4")
        .env("SCHUBKIT_FORMAT", "json")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 4);
}

#[test]
fn cache_dir_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let plain = stdout(&schubkit(&["compute", "homogenized", "2143"]));
    let cold = stdout(&schubkit(&["--cache-dir", d, "compute", "homogenized", "2143"]));
    let warm = stdout(&schubkit(&["--cache-dir", d, "compute", "homogenized", "2143"]));
    assert_eq!(plain, cold);
    assert_eq!(cold, warm);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn renders() {
    let o = stdout(&schubkit(&["render", "diagram", "18273564"]));
    let rows: Vec<&str> = o.lines().collect();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[1], "·□□□□□□·");
    assert_eq!(rows[3], "··□□□□··");
    assert_eq!(rows[5], "···□····");
    assert_eq!(stdout(&schubkit(&["render", "bpd", "rothe", "21"])), "·┌\n┌┼\n");
    assert!(stdout(&schubkit(&["render", "sbd-state", "1432"])).contains('◆'));
}

#[test]
fn search_and_classify() {
    let o = stdout(&schubkit(&["--format", "json", "search-a", "13542"]));
    let v: serde_json::Value = serde_json::from_str(&o).unwrap();
    assert!(!v["witness"].is_null());
    let o = stdout(&schubkit(&["--format", "json", "classify", "769821534"]));
    let v: serde_json::Value = serde_json::from_str(&o).unwrap();
    assert_eq!(v["chain"]["block_minima"], serde_json::json!([6, 1, 3]));
    assert_eq!(v["almost_vexillary"], true);
}

#[test]
fn other_subcommands_run() {
    for args in [
        vec!["diagram", "skyline:0,6,0,4,0,1,1,0", "--view", "snow"],
        vec!["ortho", "rothe:1432"],
        vec!["ortho", "skyline:0,2,1", "--flat"],
        vec!["sbd", "1432", "--a", "right", "--list"],
        vec!["--max-n", "9", "sbd", "769821534", "--a", "chain"],
        vec!["bpd", "2143", "--method", "droop", "--list"],
        vec!["chi", "rothe:1432"],
    ] {
        let o = schubkit(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}
