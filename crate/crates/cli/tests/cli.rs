use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symideal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn kostka_example() {
    let o = run(&["kostka", "--shape", "4,3,1", "--content", "3,3,2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "2");
    let o = run(&["kostka", "--shape", "4,3,1", "--content", "3,3,2", "--method", "both", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["agree"], true);
}

#[test]
fn check_bound_tight_case() {
    let o = run(&["check-bound", "--d", "3", "--r", "1", "--n", "5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("equality=true threshold=true"));
    let o = run(&["check-bound", "--d", "3", "--r", "1", "--n-range", "4..12", "--json"]);
    assert_eq!(code(&o), 0);
    let cells: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cells = cells.as_array().unwrap();
    assert_eq!(cells.len(), 9);
    assert_eq!(cells[0]["equality"], false);
    assert_eq!(cells[1]["equality"], true);
    // n must exceed d
    assert_eq!(code(&run(&["check-bound", "--d", "3", "--r", "1", "--n", "3"])), 2);
}

#[test]
fn verify_subcommands_pass() {
    assert_eq!(code(&run(&["verify", "appendix"])), 0);
    assert_eq!(code(&run(&["verify", "inequality", "--n", "4..7"])), 0);
    assert_eq!(code(&run(&["verify", "main-inequality", "--d", "3", "--n", "6"])), 0);
    assert_eq!(code(&run(&["verify", "bound-grid", "--d", "2..3", "--extra-n", "6"])), 0);
    assert_eq!(
        code(&run(&["verify", "elementary", "--n-max", "20", "--l-max", "5", "--p-max", "5"])),
        0
    );
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["no-such-command"])), 2);
    assert_eq!(code(&run(&["kostka", "--shape", "1,2", "--content", "3"])), 2);
    assert_eq!(code(&run(&["kostka", "--shape", "2,1", "--content", "2"])), 2);
    let capped = run(&[
        "--cap", "3", "kostka", "--shape", "2,2", "--content", "2,2", "--method", "enumerate",
    ]);
    assert_eq!(code(&capped), 3);
    assert_eq!(code(&run(&["--cap", "4", "character-table", "--n", "5"])), 3);
    // below the threshold no certified single generator exists
    assert_eq!(code(&run(&["construct-j", "--n", "4", "--d", "3", "--emit", "generator"])), 1);
}

#[test]
fn decomposition_json_round_trips_through_files() {
    let o = run(&["decompose-rd", "--n", "5", "--d", "3", "--json"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["mults"]["5"], 3);
    assert_eq!(v["mults"]["4,1"], 4);
    let path = scratch("r3_5.json", &text);
    let o = run(&["min-generators", "--decomposition", path.to_str().unwrap(), "--json"]);
    let out: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(out["decomposition"], v);
    assert_eq!(out["min_generators"], 3);
    let o = run(&["max-submodule", "--r", "1", "--decomposition", path.to_str().unwrap(), "--json"]);
    let m: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(m["mults"]["5"], 1);
}

#[test]
fn ideal_recognition_from_files() {
    let text = scratch("gens.poly", "# two generators\n1 * x1^2\n\n1 * x1 x2\n");
    let o = run(&["min-generators-ideal", "--n", "2", "--gens", text.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("min symmetric generators 2"));
    let json = scratch(
        "gens.json",
        r#"[{"n":3,"terms":[{"coeff":"1","exponents":[3,0,0]},{"coeff":"1","exponents":[0,3,0]},{"coeff":"1","exponents":[0,0,3]}]}]"#,
    );
    let o = run(&["min-generators-ideal", "--n", "3", "--gens", json.to_str().unwrap(), "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["min_generators"], 1);
    assert_eq!(v["principal"], true);
}

#[test]
fn emitted_j_basis_feeds_back_as_generators() {
    let o = run(&["construct-j", "--n", "3", "--d", "2", "--emit", "basis"]);
    assert_eq!(code(&o), 0);
    let path = scratch("j32.poly", &stdout(&o));
    let o = run(&["min-generators-ideal", "--n", "3", "--gens", path.to_str().unwrap(), "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 5);
    assert_eq!(v["min_generators"], 1);

    let o = run(&["--seed", "9", "construct-j", "--n", "5", "--d", "3", "--emit", "generator"]);
    assert_eq!(code(&o), 0);
    let path = scratch("g53.poly", &stdout(&o));
    let o = run(&["min-generators-ideal", "--n", "5", "--gens", path.to_str().unwrap(), "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 33);
    assert_eq!(v["principal"], true);
}

#[test]
fn construct_j_report() {
    let o = run(&["construct-j", "--n", "5", "--d", "3", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim_jd"], 33);
    assert_eq!(v["dim_w"], 2);
    assert_eq!(v["hilbert_d"], 2);
    assert_eq!(v["principal"], true);
    assert_eq!(v["generator"]["certified"], true);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["decompose-rd", "--n", "7", "--d", "4", "--json"][..],
        &["verify", "bound-grid", "--d", "2..4", "--extra-n", "5", "--json"][..],
        &["character-table", "--n", "5", "--format", "json"][..],
        &["construct-j", "--n", "5", "--d", "3", "--json"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        let mut seq = vec!["--sequential"];
        seq.extend_from_slice(args);
        assert_eq!(run(&seq).stdout, a.stdout, "{args:?}");
    }
}

#[test]
fn misc_commands() {
    let o = run(&["partitions", "--d", "3"]);
    assert!(stdout(&o).starts_with("(3)\n(2,1)\n(1,1,1)\n"));
    let o = run(&["partitions", "--d", "3", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["a000070"], 4);
    let o = run(&["specht-dim", "--shape", "3,2,1"]);
    assert_eq!(stdout(&o).trim(), "16");
    let o = run(&["hilbert", "--n", "5", "--d", "3", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let values: Vec<i64> = v["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["value"].as_i64().unwrap())
        .collect();
    assert_eq!(values, vec![1, 5, 15, 2, 0]);
    let o = run(&["character-table", "--n", "3", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let row = v["rows"].as_array().unwrap().iter().find(|r| r["shape"] == "2,1").unwrap();
    assert_eq!(row["values"], serde_json::json!([-1, 0, 2]));
}
