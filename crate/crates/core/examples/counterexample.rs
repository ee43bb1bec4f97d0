//! A five-distinct tuple where `A(5) < 0`, by both routes, with `L(r)` and `u_i`.

use isocert::assumption::{a_closed_form, a_values_direct, l_u_values};
use isocert::curvature::ingest;

fn main() {
    let t = ingest("-6,-5,1,3,7", true).unwrap();
    let direct = a_values_direct(&t).unwrap();
    let closed = a_closed_form(&t).unwrap();
    for r in 0..5 {
        println!("A({}) = {:>11}  (closed form {})", r + 1, direct.values[r], closed.values[r]);
    }
    let lu = l_u_values(&t).unwrap();
    for r in 0..5 {
        println!("L({}) = {:<22} u{} = {}", r + 1, lu.l[r], r + 1, lu.u[r]);
    }
    println!("L(r) * prod (li - lj)^2 == A(r): {}", lu.bridge_holds);
}
