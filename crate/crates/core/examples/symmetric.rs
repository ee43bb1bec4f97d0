//! Symmetric functions of a curvature tuple and Newton's identities.

use isocert::polycore::Rat;
use isocert::symfun::{newton_convert, NewtonDirection, SymBasis};

fn main() {
    let t = [-6, -5, 1, 3, 7].map(Rat::int);
    let b = SymBasis::of(&t);
    for k in 0..5 {
        println!("sigma{} = {:>6}   p{} = {:>6}", k + 1, b.sigma[k], k + 1, b.power[k]);
    }
    let sigma = newton_convert(NewtonDirection::PowerToSigma, &b.power);
    let power = newton_convert(NewtonDirection::SigmaToPower, &b.sigma);
    println!("newton round trip: {}", sigma == b.sigma && power == b.power);
}
