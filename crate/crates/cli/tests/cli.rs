use std::path::PathBuf;
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn motzkin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motzkin"))
        .args(args)
        .arg("--fixtures")
        .arg(fixtures())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn records(o: &Output) -> Vec<serde_json::Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON object per line"))
        .collect()
}

#[test]
fn triangle_rows() {
    let o = motzkin(&["triangle", "--kind", "motzkin", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n1 1\n1 2 2\n1 3 5 4\n");

    let o = motzkin(&["triangle", "--kind", "extended", "--max-n", "1"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("1 1 0 -1 -1"));

    let o = motzkin(&["triangle", "--kind", "extended", "--max-n", "6"]);
    for (n, line) in stdout(&o).lines().enumerate() {
        assert_eq!(line.split(' ').count(), 2 * n + 3);
    }
    let o = motzkin(&["triangle", "--kind", "motzkin", "--max-n", "6"]);
    for (n, line) in stdout(&o).lines().enumerate() {
        assert_eq!(line.split(' ').count(), n + 1);
    }

    let o = motzkin(&["triangle", "--kind", "catalan-variant", "--max-n", "2"]);
    assert_eq!(stdout(&o), "1 -1\n1 0 -1\n1 1 -1 -1\n");
    let o = motzkin(&["triangle", "--kind", "general", "--coeffs", "1,2,1", "--max-n", "1"]);
    assert_eq!(stdout(&o), "1 0 -1\n1 2 0 -2 -1\n");
}

#[test]
fn triangle_rejects_bad_specs() {
    for coeffs in ["1,2,3", "1,1", "0,1,0"] {
        let o = motzkin(&["triangle", "--kind", "general", "--coeffs", coeffs]);
        assert_eq!(o.status.code(), Some(2), "{coeffs}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("invalid triangle spec"));
    }
    let o = motzkin(&["triangle", "--kind", "general"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_sweeps() {
    let o = motzkin(&["verify", "theorem1", "--max-n", "50"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("theorem1: 51/51 pass\n"));

    let o = motzkin(&["verify", "theorem2", "--max-s", "30", "--max-d", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("theorem2: 150/150 pass"));

    let o = motzkin(&["verify", "general", "--coeffs", "1,1,1", "--max-n", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("general: 11/11 pass"));

    let o = motzkin(&["verify", "pascal-analogy", "--max-n", "40"]);
    assert!(stdout(&o).contains("41/41 pass"));
    let o = motzkin(&["verify", "term-bridge", "--max-k", "9", "--max-d", "3"]);
    assert!(stdout(&o).contains("30/30 pass"));
}

#[test]
fn theorem2_divisibility_flag() {
    let o = motzkin(&["verify", "theorem2", "--max-s", "3", "--max-d", "2", "--require-divisibility"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first failure at (2, 2)"), "{}", stdout(&o));
    let o = motzkin(&[
        "verify", "theorem2", "--max-s", "30", "--max-d", "5", "--require-divisibility", "--coprime-only",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("104/104 pass"));
}

#[test]
fn verify_unknown_identity_is_usage_error() {
    let o = motzkin(&["verify", "theorem3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn records_and_plain_agree() {
    let o = motzkin(&["--format", "records", "verify", "theorem1", "--max-n", "5"]);
    let recs = records(&o);
    assert_eq!(recs.len(), 7);
    assert_eq!(recs[5]["identity"], "theorem1");
    assert_eq!(recs[5]["params"]["n"], 5);
    assert_eq!(recs[5]["values"]["half_T"], "1805");
    assert_eq!(recs[5]["equal"], true);
    assert_eq!(recs[6]["summary"]["passed"], 6);
    assert_eq!(o.status.code(), motzkin(&["verify", "theorem1", "--max-n", "5"]).status.code());

    let plain = motzkin(&["verify", "theorem2", "--max-s", "4", "--max-d", "2", "--require-divisibility"]);
    let rec = motzkin(&[
        "--format", "records", "verify", "theorem2", "--max-s", "4", "--max-d", "2", "--require-divisibility",
    ]);
    assert_eq!(plain.status.code(), rec.status.code());
    let recs = records(&rec);
    assert!(recs.iter().any(|r| r["equal"] == false && r.get("error").is_some()));
}

#[test]
fn cores_command() {
    let o = motzkin(&["cores", "--s", "3", "--d", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "count=4 formula=4 triangle=4 consistent\n");
    let o = motzkin(&["cores", "--s", "3", "--d", "2"]);
    assert_eq!(stdout(&o), "count=6 formula=6 triangle=6 consistent\n");
    let o = motzkin(&["cores", "--s", "4", "--d", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = motzkin(&["cores", "--s", "4"]);
    assert_eq!(o.status.code(), Some(2));

    let o = motzkin(&["cores", "--s", "2", "--d", "1", "--by-size"]);
    assert_eq!(stdout(&o), "count=2 formula=2 triangle=2 consistent\n  size 0: 1\n  size 1: 1\n");
    let o = motzkin(&["--format", "records", "cores", "--s", "5", "--d", "2"]);
    let recs = records(&o);
    assert_eq!(recs[0]["values"]["count"], "38");
    assert_eq!(recs[0]["equal"], true);
}

#[test]
fn compare_fixtures() {
    for seq in ["problem-lhs", "motzkin-row-concat", "trinomial-row-concat"] {
        let o = motzkin(&["compare", seq]);
        assert_eq!(o.status.code(), Some(0), "{seq}: {}", stdout(&o));
    }
}

#[test]
fn compare_edge_cases() {
    let dir = tempfile::tempdir().unwrap();

    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "# nothing here\n").unwrap();
    let o = motzkin(&["compare", "problem-lhs", "--file", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));

    let corrupt = dir.path().join("corrupt.txt");
    std::fs::write(&corrupt, "0 0\n1 1\n2 6\n3 39\n4 256\n").unwrap();
    let o = motzkin(&["compare", "problem-lhs", "--file", corrupt.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("mismatch at index 3: b-file has 39, computed 38"));

    let malformed = dir.path().join("malformed.txt");
    std::fs::write(&malformed, "0 0\n1 one\n").unwrap();
    let o = motzkin(&["compare", "problem-lhs", "--file", malformed.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":2:"));

    let missing = dir.path().join("missing.txt");
    let o = motzkin(&["compare", "problem-lhs", "--file", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
