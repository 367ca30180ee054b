//! Unit quaternions, the double cover SU(2) → SO(3), and the curvature of
//! the quaternionic connection on S⁷.

use g2forms::exterior::CoframeSpec;
use g2forms::quaternionic::{mat3_mul, rational_unit_quaternion, so3_matrix, verify_curvature_components};
use g2forms::structures::s7::{connection, omega};

fn main() -> g2forms::Result<()> {
    let a = rational_unit_quaternion([1, 2, 0, 0]);
    let b = rational_unit_quaternion([2, 0, 1, 1]);
    println!("a = {:?}\nb = {:?}", a.q, b.q);
    let m = so3_matrix(&a)?;
    for row in &m {
        println!("  {}", row.iter().map(ToString::to_string).collect::<Vec<_>>().join("  "));
    }
    let hom = so3_matrix(&(&a * &b))? == mat3_mul(&m, &so3_matrix(&b)?);
    println!("so3(ab) = so3(a) so3(b): {hom}");

    let cf = CoframeSpec::s7();
    let phi = connection(&cf);
    let big_phi = verify_curvature_components(&phi, &cf)?;
    let w = omega(&cf);
    for k in 1..=3 {
        println!("Phi_{k} = {}", cf.render(&big_phi.c[k]));
        println!("  equals omega_{k}/2: {}", big_phi.c[k] == w.c[k].scale_alg(&g2forms::scalars::AlgebraicScalar::ratio(1, 2)));
    }
    Ok(())
}
