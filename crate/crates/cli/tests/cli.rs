use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use knotforge_cli::RunReport;

const ROOT: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../..");

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotforge"))
        .current_dir(dir)
        .env_remove("KNOTFORGE_TABLE")
        .args(args)
        .output()
        .unwrap()
}

fn run(args: &[&str]) -> Output {
    run_in(Path::new(ROOT), args)
}

fn report(args: &[&str]) -> RunReport {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    RunReport::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("knotforge-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn alex_examples() {
    let r = report(&["alex", "11a_201", "--det"]);
    assert_eq!(r.results["alexander"], "4 - 20*t + 33*t^2 - 20*t^3 + 4*t^4");
    assert_eq!(r.results["determinant"], 81);
    let r = report(&["alex", "10_99", "--ideal", "2", "--ideal", "3"]);
    assert_eq!(r.results["ideals"]["2"], "1 - 2*t + 3*t^2 - 2*t^3 + t^4");
    assert_eq!(r.results["ideals"]["3"], "1");
    assert_eq!(report(&["alex", "unknot"]).results["alexander"], "1");
    let r = report(&["alex", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"]);
    assert_eq!(r.results["alexander"], "1 - t + t^2");
}

#[test]
fn talex_examples() {
    let r = report(&["talex", "6_1", "--p", "7", "--rep", "data/rho0.json"]);
    assert_eq!(r.results["polynomial"], "1");
    assert_eq!(r.results["meridian_factor"], "1 + 3*t + t^2");
    let r = report(&["talex", "unknot", "--p", "5", "--rep", "trivial"]);
    assert_eq!(r.results["polynomial"], "1 / (4 + t)");
    assert_eq!(r.results["degree"], -1);
    let r = report(&["talex", "11a_201", "--p", "7", "--enumerate", "--target", "1 + 3*t + t^2"]);
    assert_eq!(r.results["target_matches"], 0);
    assert_eq!(r.results["counts"]["sl2_classes_all"], 33);
}

#[test]
fn symun_examples() {
    let r = report(&["symun", "verify", "--partial", "3_1", "--marks", "1,3", "--twists", "2", "--p", "5", "--trials", "5"]);
    assert_eq!(r.results["all_hold"], true);
    assert_eq!(r.results["trials"].as_array().unwrap().len(), 5);
    let r = report(&["symun", "build", "--partial", "3_1", "--marks", "1,3", "--twists", "0"]);
    assert_eq!(r.results["alexander"], "1 - 2*t + 3*t^2 - 2*t^3 + t^4");
    assert_eq!(r.results["planar"], true);
    assert!(r.warnings.is_empty());
    let r = report(&["symun", "build", "--partial", "3_1", "--marks", "2,4", "--twists", "2"]);
    assert_eq!(r.results["axis_on_right"], serde_json::json!([true, true]));
    let r = report(&["symun", "verify", "--partial", "4_1", "--marks", "1,3,5", "--twists", "-2,4", "--p", "7", "--trials", "3"]);
    assert_eq!(r.results["all_hold"], true);
    assert!(r.warnings.iter().any(|w| w.contains("do not lie on one face")));
    for t in r.results["trials"].as_array().unwrap() {
        assert_eq!(t["deg_lhs"].as_i64().unwrap(), 2 * t["deg_partial"].as_i64().unwrap() + 2);
    }
}

#[test]
fn obstruct_examples() {
    let r = report(&["obstruct", "11a_201", "--candidate", "6_1", "--p", "7", "--rep", "data/rho0.json"]);
    assert_eq!(r.results["obstructed"], true);
    assert_eq!(r.results["quick_checks"]["all_pass"], true);
    assert!(!r.assumed_context.is_empty());
    let r = report(&["obstruct", "11a_201", "--candidate", "9_1"]);
    assert_eq!(r.results["quick_checks"]["alexander_square"], false);
    assert_eq!(r.results["quick_checks"]["deg_candidate"], 8);
    let r = report(&["obstruct", "6_1", "--candidate", "unknot"]);
    assert_eq!(r.results["quick_checks"]["degree_divisible_by_4"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["alex", "no_such_knot"]).status.code(), Some(2));
    assert_eq!(run(&["alex"]).status.code(), Some(2));
    assert_eq!(run(&["alex", "X[1,2,3]"]).status.code(), Some(1));
    let odd = ["symun", "verify", "--partial", "3_1", "--marks", "1,3", "--twists", "1", "--p", "5"];
    assert_eq!(run(&odd).status.code(), Some(1));
    assert_eq!(run(&["talex", "8_20", "--p", "5", "--enumerate", "--budget", "1"]).status.code(), Some(3));
    assert_eq!(run(&["symun", "build", "--partial", "3_1", "--marks", "1,3", "--twists", "2,2"]).status.code(), Some(2));
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let args = ["obstruct", "11a_201", "--candidate", "6_1", "--p", "7", "--json"];
    let a = run(&args).stdout;
    let b = run(&args).stdout;
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert_eq!(RunReport::from_json(&text).unwrap().to_json(), text);
    assert!(!text.contains("timing_ms"));
    let timed = report(&["alex", "3_1", "--timing"]);
    assert!(timed.timing_ms.is_some());
}

#[test]
fn parallel_jobs_do_not_change_results() {
    let a = run(&["talex", "4_1", "--p", "7", "--enumerate", "--json"]).stdout;
    let b = run(&["--jobs", "2", "talex", "4_1", "--p", "7", "--enumerate", "--json"]).stdout;
    let strip = |v: Vec<u8>| {
        let mut r = RunReport::from_json(&String::from_utf8(v).unwrap()).unwrap();
        r.command.clear();
        r
    };
    assert_eq!(strip(a), strip(b));
}

#[test]
fn table_import_and_lookup() {
    let dir = scratch("import");
    let src = Path::new(ROOT).join("data/knots.csv");
    let out = run_in(&dir, &["table", "import", src.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let r = RunReport::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(r.results["entries"], 11);
    assert!(dir.join(".knotforge/knots.csv").is_file());
    let out = run_in(&dir, &["alex", "6_1", "--det", "--json"]);
    let r = RunReport::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(r.results["determinant"], 9);
}

#[test]
fn table_errors_and_env_var() {
    let dir = scratch("errors");
    let trefoil = "\"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"";
    std::fs::write(dir.join("dup.csv"), format!("name,pd\nk,{trefoil}\nk,{trefoil}\n")).unwrap();
    let out = run_in(&dir, &["table", "import", "dup.csv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    std::fs::write(dir.join("empty.csv"), "").unwrap();
    let out = run_in(&dir, &["table", "import", "empty.csv", "--json"]);
    assert!(out.status.success());
    let r = RunReport::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(r.results["entries"], 0);
    assert!(!r.warnings.is_empty());

    std::fs::write(dir.join("mine.csv"), format!("name,pd\nmy_trefoil,{trefoil}\n")).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_knotforge"))
        .current_dir(&dir)
        .env("KNOTFORGE_TABLE", dir.join("mine.csv"))
        .args(["alex", "my_trefoil", "--json"])
        .output()
        .unwrap();
    let r = RunReport::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(r.results["alexander"], "1 - t + t^2");
}
