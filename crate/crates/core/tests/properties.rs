mod common;

use common::*;
use g2forms::quaternionic::rational_unit_quaternion;
use g2forms::structures::ansatz::AnsatzFamily;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use std::sync::OnceLock;

fn exact(family: AnsatzFamily) -> &'static ExactResiduals {
    static S7: OnceLock<ExactResiduals> = OnceLock::new();
    static B7: OnceLock<ExactResiduals> = OnceLock::new();
    match family {
        AnsatzFamily::S7Style => S7.get_or_init(|| ExactResiduals::new(family)),
        AnsatzFamily::B7Style => B7.get_or_init(|| ExactResiduals::new(family)),
    }
}

fn ratio(max: i64) -> impl Strategy<Value = (i64, i64)> {
    (-max..=max, 1i64..=6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hodge_star_is_an_involution(seed: u64, degree in 0usize..=7) {
        let mut rng = StdRng::seed_from_u64(seed);
        let x = random_form(&mut rng, 7, Some(degree), 5);
        prop_assert_eq!(hodge_involution(&x), Ok(()));
    }

    #[test]
    fn wedge_is_graded_commutative_and_associative(seed: u64, p in 0usize..=3, q in 0usize..=3, r in 0usize..=2) {
        let mut rng = StdRng::seed_from_u64(seed);
        let x = random_form(&mut rng, 7, Some(p), 4);
        let y = random_form(&mut rng, 7, Some(q), 4);
        let z = random_form(&mut rng, 7, Some(r), 4);
        prop_assert_eq!(wedge_laws(&x, &y, &z), Ok(()));
    }

    #[test]
    fn double_cover_is_a_homomorphism(a in prop::array::uniform4(-9i64..=9), b in prop::array::uniform4(-9i64..=9)) {
        let (a, b) = (rational_unit_quaternion(a), rational_unit_quaternion(b));
        prop_assert_eq!(double_cover(&a, &b), Ok(()));
    }

    #[test]
    fn trig_scalars_form_a_differential_ring(seed: u64, t in 0.0f64..std::f64::consts::PI) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (x, y, z) = (random_trig(&mut rng), random_trig(&mut rng), random_trig(&mut rng));
        prop_assert_eq!(trig_ring_and_leibniz(&x, &y, &z, t), Ok(()));
    }

    #[test]
    fn exact_and_float_residuals_agree(
        s7 in any::<bool>(),
        lam in ratio(12).prop_filter("lambda != 0", |(n, _)| *n != 0),
        a in ratio(12),
        b in ratio(8),
        mu in ratio(12),
        t in 0.01f64..1.04,
    ) {
        let family = if s7 { AnsatzFamily::S7Style } else { AnsatzFamily::B7Style };
        prop_assert_eq!(exact_vs_float(exact(family), [lam, a, b, mu], t), Ok(()));
    }
}
