//! Wedge products, exterior derivatives on the S⁷ coframe and the Hodge
//! star in an orthonormal frame.

use g2forms::exterior::{d_squared_check, ext_d, hodge_star_frame, CoframeSpec, Form};
use g2forms::scalars::ParamPoly;

fn main() -> g2forms::Result<()> {
    let cf = CoframeSpec::s7();
    println!("generators: {:?}", cf.names());
    for name in ["e1", "f1", "dt"] {
        println!("d{name} = {}", cf.render(&ext_d(&cf.gen(name), &cf)?));
    }
    println!("d^2 = 0 on every generator: {}", d_squared_check(&cf));

    let xi = &(&cf.gen("e1").wedge(&cf.gen("f1")) + &cf.gen("e2").wedge(&cf.gen("f2"))) + &cf.gen("e3").wedge(&cf.gen("f3"));
    println!("xi = {}", cf.render(&xi));
    println!("d xi = {}", cf.render(&ext_d(&xi, &cf)?));

    let x = Form::from_indices(&[0, 1, 2], ParamPoly::integer(3));
    let star = hodge_star_frame(&x, 7);
    println!("*(3 X123) = {:?}, ** = {:?}", star, hodge_star_frame(&star, 7));
    Ok(())
}
