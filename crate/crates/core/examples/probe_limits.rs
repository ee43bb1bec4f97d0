//! Probes `u_i` near each degenerate configuration.

use isocert::assumption::{limit_probe, probe_target, ProbeThresholds, PROBE_TARGETS};

fn main() {
    for name in PROBE_TARGETS {
        let (base, dir) = probe_target(name).unwrap();
        let rep = limit_probe(name, &base, &dir, 24, &ProbeThresholds::default()).unwrap();
        println!("{name}: {:?}", rep.verdicts);
        for (i, row) in rep.u.iter().enumerate().skip(18) {
            let vals: Vec<String> = row.iter().map(|x| format!("{:.3e}", x.to_f64())).collect();
            println!("  eps=2^-{} {}", i + 1, vals.join(" "));
        }
    }
}
