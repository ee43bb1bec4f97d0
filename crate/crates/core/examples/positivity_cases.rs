//! Certifies the sign claims of each case and prints the step outcomes.

use isocert::verify::positivity::verify_case_positivity;

fn main() {
    for case in 1..=4 {
        let reports = verify_case_positivity(case).expect("known case");
        for r in &reports {
            println!("case {case} {:<18} {:?} {:?} samples={}", r.claim_id, r.method, r.status, r.samples);
            for s in r.steps.iter().filter(|s| !s.passed) {
                println!("    FAILED {:?} {} {:?} {}", s.kind, s.subject, s.region, s.detail);
            }
        }
    }
}
