use std::io::Write;
use std::process::{Command, Output};

fn cybar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cybar")).args(args).output().unwrap()
}

fn scenario(name: &str) -> String {
    format!("{}/scenarios/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn temp_file(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("cybar-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    path
}

#[test]
fn selftest_passes() {
    let out = cybar(&["selftest"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().last().unwrap().contains("0 fail, 0 flagged"));
}

#[test]
fn failing_job_exits_one() {
    let out = cybar(&["run", &scenario("corrupted.scn")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("witness: d0d2 fails"));
}

#[test]
fn flagged_only_exits_zero_with_a_warning() {
    let out = cybar(&["build", &scenario("comparison.scn"), "--cap", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("flagged"));
    assert!(String::from_utf8_lossy(&out.stdout).contains("[flagged]"));
}

#[test]
fn bad_input_exits_two() {
    let bad = temp_file("bad.scn", "monoid Z2 = cyclic 2\nhomology nerve(Q) upto 2\n");
    let out = cybar(&["run", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&out.stderr), "error: line 2: undefined monoid `Q`\n");
    assert_eq!(cybar(&["run", "/nonexistent/file.scn"]).status.code(), Some(2));
    assert_ne!(cybar(&["selftest", "--trunc", "0"]).status.code(), Some(0));
}

#[test]
fn subcommands_select_jobs() {
    let out = cybar(&["verify", &scenario("comparison.scn"), "--format", "records"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| !l.contains("\"check\":\"build\"")));
    assert_eq!(text.lines().count(), 12);
    let out = cybar(&["build", &scenario("comparison.scn"), "--format", "records"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains("\"counts\":[1,5,9,13]"));
}

#[test]
fn counterexample_defaults_to_the_zero_monoid() {
    let out = cybar(&["counterexample", "--format", "records"]);
    assert_eq!(out.status.code(), Some(0));
    let line = String::from_utf8(out.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["degrees_checked"], 3);
    assert!(v["witness"].as_str().unwrap().starts_with("(x,0,x)"));
}

#[test]
fn sset_files_are_accepted() {
    let path = temp_file("rp.sset", &cyclic_bar::sset::format::to_text(
        &cyclic_bar::bar::nerve(std::sync::Arc::new(cyclic_bar::algebra::cyclic(2)), 3).unwrap(),
    ).unwrap());
    let out = cybar(&["homology", path.to_str().unwrap(), "--format", "records"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(String::from_utf8(out.stdout).unwrap().trim()).unwrap();
    let groups: Vec<String> = v["table"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            let t = r["torsion"].as_array().unwrap();
            match (r["betti"].as_u64().unwrap(), t.first()) {
                (1, None) => "Z".to_string(),
                (0, Some(d)) => format!("Z/{}", d.as_str().unwrap()),
                (0, None) => "0".to_string(),
                other => format!("{other:?}"),
            }
        })
        .collect();
    assert_eq!(groups, ["Z", "Z/2", "0"]);
    let out = cybar(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn records_are_deterministic() {
    let args = ["run", &scenario("selftest.scn"), "--format", "records", "--seed", "5"];
    let a = cybar(&args).stdout;
    let b = cybar(&args).stdout;
    assert_eq!(a, b);
    let mut par = args.to_vec();
    par.push("--parallel");
    assert_eq!(cybar(&par).stdout, a);
    for line in String::from_utf8(a).unwrap().lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        for key in ["check", "instance", "degrees_checked", "status"] {
            assert!(v.get(key).is_some(), "{line}");
        }
    }
}

#[test]
fn timing_is_opt_in() {
    let plain = String::from_utf8(cybar(&["counterexample", "--format", "records"]).stdout).unwrap();
    assert!(!plain.contains("elapsed_ms"));
    let timed = String::from_utf8(cybar(&["counterexample", "--format", "records", "--timing"]).stdout).unwrap();
    assert!(timed.contains("elapsed_ms"));
}
