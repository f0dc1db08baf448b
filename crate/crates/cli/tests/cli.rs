use std::process::{Command, Output};

fn mnqt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mnqt"))
        .args(args)
        .env_remove("MNQT_DEGREE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn kostka_entry_as_json() {
    let o = mnqt(&["kostka", "--lambda", "2", "--mu", "1,1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], "t");
    assert_eq!(v["mu"], "1,1");
}

#[test]
fn methods_agree_on_a_table() {
    let direct = stdout(&mnqt(&["kostka", "--n", "4", "--method", "direct"]));
    let green = stdout(&mnqt(&["kostka", "--n", "4", "--method", "via-green"]));
    let a: serde_json::Value = serde_json::from_str(&direct).unwrap();
    let b: serde_json::Value = serde_json::from_str(&green).unwrap();
    assert_eq!(a["entries"], b["entries"]);
}

#[test]
fn bad_partition_is_a_usage_error() {
    let o = mnqt(&["kostka", "--lambda", "2,x", "--mu", "1,1,1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("'x'"), "{err}");
    assert!(err.contains("2,x"), "{err}");
}

#[test]
fn injected_fault_names_the_cell() {
    let o = mnqt(&["verify", "kostka", "--inject-kostka", "2,1;1,1,1", "--format", "text"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL [9]"), "{out}");
    assert!(out.contains("(2,1;1,1,1)"), "{out}");
}

#[test]
fn output_is_deterministic() {
    let args = ["--threads", "4", "green", "--n", "4"];
    assert_eq!(stdout(&mnqt(&args)), stdout(&mnqt(&args)));
    let mn = ["mn", "--mu", "2,1", "--k", "2", "--alphabet", "a-1"];
    assert_eq!(stdout(&mnqt(&mn)), stdout(&mnqt(&mn)));
}

#[test]
fn degree_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_mnqt"))
        .args(["kostka", "--n", "4"])
        .env("MNQT_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("truncation degree 3"), "{}", stderr(&o));
    let o = mnqt(&["--degree", "4", "kostka", "--n", "4", "--format", "text"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "4\t2,2\tt^2"));
}

#[test]
fn pieri_inversion_checks() {
    let o = mnqt(&["invert-pieri", "--lambda", "3,1", "--check"]);
    assert!(o.status.success(), "{}", stderr(&o));
}
