//! Second-order reductions at two-curvature points and the Clifford products.

use isocert::verify::clifford::clifford_check;
use isocert::verify::rigidity::quadratic_form;
use isocert::verify::verify_rigidity_case;

fn main() {
    for case in 1..=2 {
        let rep = verify_rigidity_case(case).unwrap();
        println!("case {case}: {:?}", rep.status);
        println!("  remaining form: {}", quadratic_form(case));
    }
    for k in 1..=4 {
        let c = clifford_check(k).unwrap();
        println!(
            "S^{k} x S^{}: curvatures {} with x^2 = {}; sigma1 = {}, S = {}",
            5 - k,
            c.curvatures.join(", "),
            c.x_squared,
            c.sigma1,
            c.s
        );
    }
}
