//! Classifies a few tuples: ordering, multiplicities, corollary type.

use isocert::curvature::{classify, ingest};

fn main() {
    for text in ["-6,-5,1,3,7", "-2,-2,1,1,2", "-4,-3,-2,-2,11", "-3,-3,1,2,3", "-0.5,-0.5,-0.5,-0.5,2", "1,2,3,4,-10"] {
        let t = ingest(text, true).unwrap();
        let c = classify(&t);
        let kind = c.corollary_type.map_or("-".to_string(), |k| format!("type {}", k.number()));
        println!(
            "{text:>22} -> {t:<22} partition {:?} {kind:<7} excluded {} flipped {}",
            c.partition,
            c.excluded_by_hypothesis(),
            t.was_flipped()
        );
    }
    println!("1,2,3,4,5: {}", ingest("1,2,3,4,5", true).unwrap_err());
}
