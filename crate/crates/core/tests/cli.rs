use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qfano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfano"))
        .args(args)
        .env_remove("QFANO_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn qfano_cached(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfano"))
        .args(args)
        .env("QFANO_CACHE_DIR", dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn h_text() {
    let o = qfano(&["h", "--n", "3", "--m", "2", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 + q^2 + 2q^4 + q^6\n");
    assert_eq!(stdout(&qfano(&["h", "--n", "5", "--m", "0"])), "1\n");
}

#[test]
fn h_range_error() {
    let o = qfano(&["h", "--n", "3", "--m", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.contains("0 <= m <= n-1"), "{err}");
}

#[test]
fn h_json_and_all_methods() {
    let v: Value = serde_json::from_str(&stdout(&qfano(&[
        "h", "--n", "3", "--m", "2", "--format", "json",
    ])))
    .unwrap();
    assert_eq!(v["terms"][2], serde_json::json!([4, "2"]));
    let o = qfano(&[
        "h", "--n", "6", "--m", "3", "--method", "all", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["agree"], Value::Bool(true));
    assert_eq!(v["methods"].as_object().unwrap().len(), 6);
}

#[test]
fn betti_formats() {
    let o = qfano(&["betti", "--g", "3", "--kplane", "1", "--format", "csv"]);
    assert_eq!(stdout(&o), "1,0,1,6,2,6,16,6,2,6,1,0,1\n");
    assert_eq!(
        stdout(&qfano(&["betti", "--g", "1", "--kplane", "0"])),
        "1,2,1\n"
    );
    let v: Value = serde_json::from_str(&stdout(&qfano(&[
        "betti", "--g", "3", "--kplane", "1", "--format", "json",
    ])))
    .unwrap();
    assert_eq!(v["g"], 3);
    assert_eq!(v["kplane"], 1);
    assert_eq!(v["dim"], 6);
    assert_eq!(v["betti"].as_array().unwrap().len(), 13);
    let latex = stdout(&qfano(&[
        "betti", "--g", "1", "--kplane", "0", "--format", "latex",
    ]));
    assert!(latex.contains("$b_k$ & 1 & 2 & 1 \\\\"), "{latex}");
}

#[test]
fn decomp_formats() {
    let latex = stdout(&qfano(&[
        "decomp", "--g", "3", "--i", "2", "--format", "latex",
    ]));
    assert!(latex.starts_with("\\begin{tabular}"));
    // Columns are j = 1, 2, 3, so the first cell of the k = 0 row is N_2(0, 1).
    let row = latex
        .lines()
        .find(|l| l.starts_with("0 & "))
        .expect("k = 0 row");
    assert!(row.starts_with("0 & 1 & "), "{row}");

    let v: Value = serde_json::from_str(&stdout(&qfano(&[
        "decomp", "--g", "3", "--i", "2", "--format", "json",
    ])))
    .unwrap();
    assert_eq!(v["g"], 3);
    assert_eq!(v["i"], 2);
    let entries = v["entries"].as_array().unwrap();
    assert!(entries.contains(&serde_json::json!({"k": 0, "j": 1, "N": 1})));
    for e in entries {
        assert!(e["N"].as_u64().unwrap() > 0);
    }

    let csv = stdout(&qfano(&[
        "decomp", "--g", "3", "--i", "2", "--format", "csv",
    ]));
    assert_eq!(csv.lines().next(), Some("k,j=1,j=2,j=3"));
    let text = stdout(&qfano(&["decomp", "--g", "3", "--i", "2"]));
    assert!(text.lines().next().unwrap().contains("k\\j"));
    assert_eq!(
        qfano(&["decomp", "--g", "3", "--i", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn stalks_formats() {
    assert_eq!(
        stdout(&qfano(&["stalks", "--n", "3", "--i", "2", "--j", "0"])),
        "-8: 1\n-6: 1\n-4: 2\n-2: 1\n"
    );
    let csv = stdout(&qfano(&[
        "stalks", "--n", "3", "--i", "2", "--j", "0", "--format", "csv",
    ]));
    assert_eq!(csv, "degree,dim\n-8,1\n-6,1\n-4,2\n-2,1\n");
    let v: Value = serde_json::from_str(&stdout(&qfano(&[
        "stalks", "--n", "3", "--i", "2", "--j", "1", "--format", "json",
    ])))
    .unwrap();
    assert_eq!(v["dims"].as_array().unwrap().len(), 2);
    assert_eq!(
        qfano(&["stalks", "--n", "3", "--i", "1", "--j", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_suites() {
    let o = qfano(&["verify", "--suite", "inductive", "--nmax", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("78 passed, 0 failed\n"));

    let o = qfano(&[
        "verify", "--suite", "bailey", "--m", "3", "--n", "5", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["status"], "pass");
    assert_eq!(lines[0]["witness"], Value::Null);
    assert_eq!(lines[0]["params"]["m"], 3);

    // A point with a vanishing denominator is a usage error.
    assert_eq!(
        qfano(&["verify", "--suite", "bailey", "--m", "2", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qfano(&["verify", "--suite", "everything"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_all_is_deterministic() {
    let a = qfano(&["verify", "--suite", "all", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    let b = qfano(&["verify", "--suite", "all", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    for line in stdout(&a).lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "pass", "{line}");
    }
}

#[test]
fn cache_roundtrip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let commands: [&[&str]; 4] = [
        &["h", "--n", "7", "--m", "4", "--method", "all"],
        &["betti", "--g", "4", "--kplane", "1", "--format", "json"],
        &["decomp", "--g", "4", "--i", "3", "--format", "latex"],
        &[
            "stalks", "--n", "5", "--i", "3", "--j", "1", "--format", "csv",
        ],
    ];
    for args in commands {
        let plain = qfano(args);
        let first = qfano_cached(dir.path(), args);
        let second = qfano_cached(dir.path(), args);
        assert_eq!(plain.stdout, first.stdout, "{args:?}");
        assert_eq!(plain.stdout, second.stdout, "{args:?}");
        assert_eq!(second.status.code(), Some(0));
    }
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 4);

    // The flag works as well as the environment variable.
    let flag_dir = tempfile::tempdir().unwrap();
    let flag = flag_dir.path().to_str().unwrap();
    let o = qfano(&["--cache-dir", flag, "betti", "--g", "2", "--kplane", "0"]);
    assert_eq!(stdout(&o), "1,0,1,4,1,0,1\n");
    assert_eq!(std::fs::read_dir(flag_dir.path()).unwrap().count(), 1);

    let entry: Value = serde_json::from_str(
        &std::fs::read_to_string(
            std::fs::read_dir(flag_dir.path())
                .unwrap()
                .next()
                .unwrap()
                .unwrap()
                .path(),
        )
        .unwrap(),
    )
    .unwrap();
    assert!(entry["key"].as_str().unwrap().contains("cmd=betti"));
    assert!(entry["created_at"].as_u64().is_some());
}
