//! Constraint systems of the two-parameter families and the claimed
//! solution sets.

use g2forms::scalars::{AlgebraicScalar, Unknown};
use g2forms::structures::ansatz::{AnsatzFamily, System};
use g2forms::structures::constraints::solve_mu;
use g2forms::structures::family_constraints;
use g2forms::structures::solutions::{b7_mu_constraint, point, s7_family_report, b7_family_report};

fn main() {
    let fam = AnsatzFamily::S7Style;
    let cs = family_constraints(fam, System::Nhf);
    let cf = fam.coframe();
    println!("{} nhf constraints:", cs.len());
    for c in cs.iter().take(6) {
        println!("  {}", c.render(&cf.names()));
    }
    let at = point(AlgebraicScalar::integer(1), AlgebraicScalar::integer(2), AlgebraicScalar::one());
    println!("mu at (lambda, a, b) = (1, 2, 1): {:?}", solve_mu(&cs, &at).map(|m| m.to_string()));
    println!("{}", s7_family_report().render_text());

    if let Some(p) = b7_mu_constraint() {
        println!("b7-style, b = 0: {} = 0 (linear in {})", p, Unknown::Mu.name());
    }
    println!("{}", b7_family_report().render_text());
}
