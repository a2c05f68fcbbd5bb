use std::process::{Command, Output};

fn scat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scat")).args(args).env_remove("SCAT_CAP").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = scat(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    scat(args).status.code().unwrap()
}

const RUNNING_TREE: &str = "[3,4,0,0,4,0,0,0,0,0,0,2,5,0,0,0,0,0,0]";
const RUNNING_PATH: &str = "s=3,4,4,2,5; mu=0,2,6,0,5";

#[test]
fn counts() {
    assert_eq!(stdout(&["count", "2,2,2,2"]), "14\n");
    assert_eq!(stdout(&["count", "3,4,3"]), "15\n");
    assert_eq!(stdout(&["count", ""]), "1\n");
    assert_eq!(stdout(&["count", "3,4,3", "--all-methods"]), "recurrence 15\ndeterminant 15\nexhaustive 15\n");
    assert_eq!(stdout(&["--format", "jsonl", "count", "2,2,2"]), "{\"count\":5,\"s\":[2,2,2]}\n");
}

#[test]
fn listings() {
    assert_eq!(stdout(&["list", "path", "2,2"]), "s=2,2; mu=0,2\ns=2,2; mu=1,1\ncount 2\n");
    assert_eq!(stdout(&["list", "tree", ""]), "[0]\ncount 1\n");
    let words = stdout(&["list", "stirling312", "3,4,3"]);
    let lines: Vec<&str> = words.lines().collect();
    assert_eq!(lines.len(), 16);
    assert_eq!(lines[15], "count 15");
    assert!(lines[..15].iter().all(|w| w.len() == 7));
}

#[test]
fn listings_line_up_across_families() {
    let trees = stdout(&["list", "tree", "2,3,2"]);
    let partitions = stdout(&["list", "ncpartition", "2,3,2"]);
    for (t, p) in trees.lines().zip(partitions.lines()).filter(|(t, _)| t.starts_with('[')) {
        assert_eq!(stdout(&["convert", "tree", "ncpartition", t]).trim_end(), p);
    }
}

#[test]
fn conversions() {
    assert_eq!(stdout(&["convert", "tree", "stirling312", RUNNING_TREE]), "2233321155554\n");
    assert_eq!(stdout(&["convert", "path", "ncpartition", RUNNING_PATH]), "1,2,6,7,8|3,4,5|9,10,11,12,13\n");
    assert_eq!(stdout(&["convert", "path", "parens", RUNNING_PATH]), "(**(****)*)*((*****)*)\n");
    assert_eq!(stdout(&["convert", "stirling312", "tree", "2233321155554"]), format!("{}\n", RUNNING_TREE));
    assert_eq!(
        stdout(&["convert", "ncpartition", "path", "1,2,6,7,8|3,4,5|9,10,11,12,13", "--s", "3,4,4,2,5"]),
        format!("{}\n", RUNNING_PATH)
    );
}

#[test]
fn convert_to_same_family_is_identity() {
    let samples = [
        ("tree", RUNNING_TREE),
        ("path", RUNNING_PATH),
        ("stirling312", "2233321155554"),
        ("matching", "1,10,11|2,3,4,9|5,6,7,8|12,18|13,14,15,16,17"),
        ("parens", "(**(****)*)*((*****)*)"),
    ];
    for (family, text) in samples {
        assert_eq!(stdout(&["convert", family, family, text]).trim_end(), text);
    }
    let angulation = stdout(&["convert", "tree", "angulation", RUNNING_TREE]);
    assert_eq!(stdout(&["convert", "angulation", "angulation", angulation.trim_end()]), angulation);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["count", "2,x"]), 2);
    assert_eq!(code(&["list", "ncpartition", "1,2"]), 2);
    assert_eq!(code(&["rational", "4", "6"]), 2);
    assert_eq!(code(&["convert", "stirling312", "tree", "212"]), 2);
    assert_eq!(code(&["bogus"]), 2);
    assert_eq!(code(&["--cap", "3", "list", "tree", "2,2,2"]), 3);
    assert_eq!(code(&["--cap", "5", "list", "tree", "2,2,2"]), 0);
    let capped = Command::new(env!("CARGO_BIN_EXE_scat"))
        .args(["count", "2,2,2,2", "--all-methods"])
        .env("SCAT_CAP", "13")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
    assert!(capped.stdout.is_empty());
}

#[test]
fn rational_and_narayana() {
    assert_eq!(stdout(&["rational", "5", "13"]), "3,4,3,4,3\n");
    assert_eq!(stdout(&["rational", "5", "8"]), "2,3,2,3,2\n");
    let n = stdout(&["narayana", "2,2,2"]);
    assert_eq!(n.lines().count(), 5);
    assert!(n.lines().all(|l| l.ends_with(" 1:1 2:3 3:1")));
    assert_eq!(stdout(&["narayana", "1,2", "--statistic", "peaks"]), "peaks 1:1\n");
    assert_eq!(code(&["narayana", "1,2", "--statistic", "partition-blocks"]), 2);
}

#[test]
fn parking() {
    assert_eq!(stdout(&["parking", "count", "1,1,1"]), "16\n");
    assert_eq!(stdout(&["parking", "list", "1,1"]), "0,0\n0,1\n1,0\ncount 3\n");
    assert_eq!(stdout(&["list", "decorated-path", "2,2"]).lines().last(), Some("count 3"));
}

#[test]
fn arw_report() {
    let report = stdout(&["arw-compare", "5", "13", "--mu", "0,2,4,4,2"]);
    let v: serde_json::Value = serde_json::from_str(report.trim_end()).unwrap();
    assert_eq!(v["arw"], serde_json::json!([[1, 2, 5, 6, 9, 10], [3, 4], [7, 8], [11, 12]]));
    assert_eq!(v["ours"], serde_json::json!([[1, 2, 5, 6, 10], [3, 4], [7, 8, 9], [11, 12]]));
    assert_eq!(v["equal"], serde_json::json!(false));
    let all = stdout(&["arw-compare", "3", "4", "--all"]);
    assert_eq!(all.lines().count(), 6);
}

#[test]
fn verify_passes() {
    let out = stdout(&["verify", "5"]);
    assert!(out.ends_with("verified 32 signatures, 0 failures\n"), "{}", out);
    assert!(stdout(&["verify", "0"]).ends_with("verified 1 signatures, 0 failures\n"));
    let rational = stdout(&["--format", "jsonl", "verify", "8", "--rational-only"]);
    for line in rational.lines() {
        serde_json::from_str::<serde_json::Value>(line).unwrap();
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "jsonl", "list", "angulation", "3,2,2"];
    assert_eq!(stdout(&args), stdout(&args));
}
