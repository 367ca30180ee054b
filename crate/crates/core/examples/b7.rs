//! The Berger space SO(5)/SO(3): the pulled-back frame and its
//! nearly-parallel G₂ structure.

use g2forms::structures::{build_b7, np2_mu};
use g2forms::suite::{b7_numeric_mu, verify_space, Space};

fn main() -> g2forms::Result<()> {
    let (phi, frame, cf) = build_b7();
    for (i, y) in frame.elements().iter().enumerate() {
        println!("Y{} = {}", i + 1, cf.render(y));
    }
    println!("phi = {}", cf.render(&phi));
    let mu = np2_mu(&phi, &frame, &cf)?;
    let (num, res) = b7_numeric_mu(10);
    println!("mu = {mu}, float evaluator gives {num:.12} (residual {res:.1e})");
    for r in verify_space(Space::B7) {
        println!("{}", r.render_text());
    }
    Ok(())
}
