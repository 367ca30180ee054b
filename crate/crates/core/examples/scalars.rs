//! Exact arithmetic in Q(√3, √5) and trigonometric polynomials over it.

use g2forms::scalars::{AlgebraicScalar, TrigScalar};

fn main() {
    let lam = AlgebraicScalar::sqrt5_times(2, 5);
    println!("lambda = {lam}, lambda^2 = {}, 1/lambda = {}", lam.square(), lam.inverse().unwrap());
    let x = &AlgebraicScalar::sqrt3() + &AlgebraicScalar::sqrt5();
    println!("(sqrt3 + sqrt5)^2 = {}", x.square());

    // c_k = cos(t + 2πk/3), s_k = sin(t + 2πk/3) rewritten in integer frequencies
    let (c1, s1) = (TrigScalar::c(1), TrigScalar::s(1));
    println!("c1 = {c1}");
    println!("c1^2 + s1^2 = {}", &(&c1 * &c1) + &(&s1 * &s1));
    println!("d/dt (c1 s1) = {}", (&c1 * &s1).deriv());
    let sum: TrigScalar = (1..=3).fold(TrigScalar::zero(), |acc, k| &acc + &TrigScalar::c(k));
    println!("c1 + c2 + c3 = {sum}");
}
