use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sylowrestrict"))
        .args(args)
        .env_remove("SYLOWRESTRICT_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn char_eval_values() {
    for (lambda, class, expected) in [
        ("3,1", "2,2", "-1"),
        ("4", "1,1,1,1", "1"),
        ("2,2", "4", "0"),
        ("3,2", "1,1,1,1,1", "5"),
    ] {
        let o = run(&["char-eval", lambda, class]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), expected, "χ^{lambda}({class})");
    }
}

#[test]
fn char_eval_split_class() {
    let plus = stdout(&run(&[
        "char-eval",
        "3,1,1",
        "--perm",
        "(1 2 3 4 5)",
        "--sign",
        "+",
    ]));
    let minus = stdout(&run(&[
        "char-eval",
        "3,1,1",
        "--perm",
        "(1 2 3 4 5)",
        "--sign",
        "-",
    ]));
    assert_ne!(plus, minus);
    assert!(plus.contains('5'), "{plus}");
}

#[test]
fn degree_and_delta2() {
    assert_eq!(stdout(&run(&["degree", "3,2"])).trim(), "5");
    assert_eq!(stdout(&run(&["delta2", "4,2"])).trim(), "2,1");
    assert_eq!(run(&["delta2", "3,2"]).status.code(), Some(2));
}

#[test]
fn restrict_distinct_counts() {
    let q5 = json(&["restrict", "4,1", "--p", "2", "--group", "Q"]);
    assert_eq!(q5["distinct_count"], 4);
    assert_eq!(q5["degree"], 4);
    let p4 = json(&["restrict", "2,2", "--p", "2"]);
    assert_eq!(p4["group"], "P");
    let total: u64 = p4["multiplicities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["multiplicity"].as_u64().unwrap())
        .sum();
    assert_eq!(total as i64 + p4["residual_degree"].as_i64().unwrap(), 2);
}

#[test]
fn lr_coefficient_json() {
    let v = json(&["lr", "3,2,1", "2,1", "2,1", "--witnesses", "1"]);
    assert_eq!(v["coefficient"], 2);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn core_quotient_json() {
    let v = json(&["core-quotient", "3,1", "--e", "2"]);
    assert_eq!(v["weight"], 2);
    assert_eq!(v["core"], "-");
}

#[test]
fn verify_examples_pass() {
    for args in [
        vec![
            "verify",
            "--statement",
            "theorem-a",
            "--p",
            "2",
            "--n",
            "1..12",
        ],
        vec!["verify", "--statement", "jlms-bijection", "--k", "1..4"],
        vec![
            "verify",
            "--statement",
            "theorem-a",
            "--p",
            "3",
            "--n",
            "1..12",
        ],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        let line: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
        assert_eq!(line["pass"], true);
    }
}

#[test]
fn verify_all_emits_one_line_per_statement() {
    let o = run(&["verify", "--all", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(lines.len() >= 14);
    assert!(lines.iter().all(|l| l["pass"] == true));
}

#[test]
fn no_timing_output_is_reproducible() {
    let args = [
        "verify",
        "--statement",
        "theorem-a",
        "--p",
        "2",
        "--n",
        "1..10",
        "--workers",
        "3",
        "--no-timing",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["bogus"],
        vec!["char-eval", "3,1", "2,1"],
        vec!["char-eval", "3,x", "4"],
        vec!["restrict", "3,1"],
        vec!["verify", "--statement", "nonsense"],
        vec!["verify", "--statement", "theorem-a", "--k", "2"],
        vec!["core-quotient", "3,1", "--e", "1"],
        vec!["degree", "3,1", "--format", "yaml"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn budget_exceeded_exits_1() {
    let o = run(&[
        "verify",
        "--statement",
        "theorem-a",
        "--p",
        "2",
        "--n",
        "1..12",
        "--budget",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_sylowrestrict"))
        .args(["restrict", "4,4", "--p", "2"])
        .env("SYLOWRESTRICT_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn csv_and_text_formats() {
    let csv = stdout(&run(&["hooks", "2,1", "--format", "csv"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("row,col,length,arm,leg"));
    assert_eq!(lines.count(), 3);

    let text = stdout(&run(&["hooks", "10,3,1", "--format", "text"]));
    assert_eq!(text, "12 10  9  7  6  5  4  3  2  1\n 4  2  1\n 1\n");

    let csv = stdout(&run(&[
        "verify",
        "--statement",
        "lr-oracle",
        "--n",
        "0..4",
        "--format",
        "csv",
        "--no-timing",
    ]));
    assert!(csv.starts_with("statement,params,pass"));
    assert!(csv.lines().nth(1).unwrap().starts_with("lr-oracle,"));
}

#[test]
fn out_writes_to_file() {
    let path = std::env::temp_dir().join(format!("sylowrestrict-cli-{}.json", std::process::id()));
    let o = run(&[
        "restrict",
        "4,1",
        "--p",
        "2",
        "--group",
        "Q",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["distinct_count"], 4);
}
