//! Drives the command line in-process and round-trips a structured report.

use isocert::cli::{run, RunDocument};

fn main() {
    let inv = run(["isocert", "--format", "structured", "verify", "identities", "--only", "VEC1,AL"]);
    println!("exit {}", inv.code);
    let doc = RunDocument::from_json(&inv.stdout).unwrap();
    for r in &doc.report.records {
        println!("{} {} degree={:?} terms={:?}", r.id, r.status, r.degree, r.terms);
    }
    println!("round trip identical: {}", doc.to_json() == inv.stdout);

    let inv = run(["isocert", "sample", "--type", "1", "--count", "0"]);
    println!("count 0 -> exit {}: {}", inv.code, inv.stdout.lines().find(|l| l.starts_with("error")).unwrap_or(""));
}
