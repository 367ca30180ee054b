//! Numeric search for zeros of the joint B⁷-style system on a small grid.
//! Pass `full` to sweep the default grid.

use g2forms::structures::ansatz::{AnsatzFamily, System};
use g2forms::structures::sweep::{numeric_sweep, SweepConfig};

fn main() {
    let cfg = if std::env::args().any(|a| a == "full") {
        SweepConfig::default()
    } else {
        SweepConfig {
            lambda: (0.5, 1.2),
            a: (0.0, 1.0),
            b: (-0.5, 0.5),
            ..SweepConfig::default()
        }
    };
    let r = numeric_sweep(AnsatzFamily::B7Style, System::Joint, &cfg);
    println!("{} grid points, {} candidates, {} zeros", r.grid_points, r.candidates, r.zeros.len());
    for c in &r.clusters {
        println!(
            "cluster of {} around (lambda, a, b) = ({:.6}, {:.6}, {:.6}), mu in [{:.6}, {:.6}]",
            c.size, c.centroid[0], c.centroid[1], c.centroid[2], c.mu_range.0, c.mu_range.1
        );
    }
}
