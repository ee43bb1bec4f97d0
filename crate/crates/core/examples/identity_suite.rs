//! Runs the whole identity catalog and prints one line per identity.

use isocert::verify::{verify_identities, CatalogMode};

fn main() {
    let reports = verify_identities(&[], CatalogMode::default()).expect("catalog ids");
    for r in &reports {
        println!(
            "{:<16} {:<16?} parts={:<2} max_deg={:<3} max_terms={:<6} {:>8.2?}",
            r.identity_id, r.status, r.parts, r.max_degree, r.max_intermediate_terms, r.elapsed
        );
        if let Some(d) = &r.detail {
            println!("    {d}");
        }
    }
    let ok = reports.iter().filter(|r| r.is_verified()).count();
    println!("{ok}/{} verified", reports.len());
}
