//! The polynomial engine: parsing, arithmetic, derivatives, exact division and a cone certificate.

use isocert::polycore::{certify, parse_expression, Cone, VarCtx};

fn main() {
    let ctx = VarCtx::of(&["x", "y", "z"]);
    let p = parse_expression("(x + y)^3 - 3*x*y*(x + y)", &ctx).unwrap();
    println!("p          = {p}");
    println!("dp/dx      = {}", p.differentiate("x", 1).unwrap());
    println!("d^3p/dy^3  = {}", p.differentiate("y", 3).unwrap());

    let f = parse_expression("x^2 - y^2", &ctx).unwrap();
    let g = parse_expression("x - y", &ctx).unwrap();
    println!("(x^2-y^2)/(x-y) = {}", f.exact_div(&g).unwrap());
    println!("x^2/(x-y): {}", parse_expression("x^2", &ctx).unwrap().exact_div(&g).unwrap_err());

    let square = parse_expression("4*x^2 + 12*x*z + 9*z^2", &ctx).unwrap();
    println!("sqrt       = {}", square.sqrt_exact().unwrap());

    let cone = Cone::chain(&ctx, "z > y > x > 0").unwrap();
    let q = parse_expression("z^2 - x*y", &ctx).unwrap();
    println!("{q} > 0 on {}: {}", cone.render(&ctx), certify(&q, &cone).unwrap());
    let r = parse_expression("x - y + 1/2*z", &ctx).unwrap();
    println!("{r} > 0 on {}: {}", cone.render(&ctx), certify(&r, &cone).unwrap());
}
