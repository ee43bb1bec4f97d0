use std::process::{Command, Output};

use isocert::cli::RunDocument;

fn isocert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isocert")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    isocert(args).status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["classify", "-6,-5,1,3,7"]), 0);
    assert_eq!(code(&["classify", "1,2,3,4,5"]), 3);
    assert_eq!(code(&["classify", "1/0,2,3,4,5"]), 2);
    assert_eq!(code(&["avalues", "0,0,0,0,0"]), 0);
    assert_eq!(code(&["sample", "--type", "1", "--count", "0"]), 2);
    assert_eq!(code(&["sample", "--type", "custom", "--where", "l1>0", "--count", "2"]), 5);
    assert_eq!(code(&["verify", "everything"]), 2);
    assert_eq!(code(&["verify", "identities", "--negative-control", "--only", "LNEW1"]), 1);
}

#[test]
fn verify_selected_identities() {
    let o = isocert(&["--format", "structured", "verify", "identities", "--only", "VEC1,AL"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = RunDocument::from_json(&stdout(&o)).unwrap();
    let ids: Vec<&str> = doc.report.records.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids, ["AL", "VEC1"]);
    assert!(doc.report.records.iter().all(|r| r.status == "verified_zero"));
    assert_eq!(doc.report.summary.verified, 2);
}

#[test]
fn sample_and_probe() {
    let o = isocert(&["sample", "--type", "4", "--count", "1000", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("violations: 0"));
    let o = isocert(&["--format", "structured", "probe", "--target", "top-pair", "--steps", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = RunDocument::from_json(&stdout(&o)).unwrap();
    let verdict = |id: &str| doc.report.records.iter().find(|r| r.id == id).unwrap().status.clone();
    assert_eq!(verdict("u1"), "diverges_plus");
    assert_eq!(verdict("u2"), "diverges_plus");
}

#[test]
fn out_file_and_report_round_trip() {
    let dir = std::env::temp_dir().join(format!("isocert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.json");
    let p = path.to_str().unwrap();
    let o = isocert(&["--format", "structured", "--out", p, "avalues", "-6,-5,1,3,7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let o = isocert(&["--format", "structured", "report", p]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), written);
    let text = isocert(&["report", p]);
    assert!(stdout(&text).contains("signs: ++++-"));

    let mut doc = RunDocument::from_json(&written).unwrap();
    doc.report.summary.verified += 1;
    std::fs::write(&path, doc.to_json()).unwrap();
    assert_eq!(code(&["report", p]), 2);
    std::fs::write(&path, "not json").unwrap();
    assert_eq!(code(&["report", p]), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}
