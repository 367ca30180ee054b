//! The nearly-parallel G₂ structure on the squashed S⁷ and its SU(3)
//! reduction.

use g2forms::structures::s7::{chi, upsilon};
use g2forms::structures::{build_s7_squashed, np2_mu, verify_np2};

fn main() -> g2forms::Result<()> {
    let (phi, frame, cf) = build_s7_squashed();
    println!("phi = {}", cf.render(&phi));
    let mu = np2_mu(&phi, &frame, &cf)?;
    println!("d phi = mu * phi, mu = {mu} ~ {:.6}", mu.to_f64());
    println!("{}", verify_np2("s7-squashed", &phi, &frame, &cf).render_text());
    println!("Upsilon = {}", cf.render(&upsilon(&cf)));
    println!("chi = {}", cf.render(&chi(&cf)));
    Ok(())
}
