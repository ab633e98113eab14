use braidkit::reps::{build_rep, check_relations, commutant_dimension, RepParams};
use braidkit::suites::{computed_k_spectrum, expected_k_spectrum, multiset_close};
use proptest::prelude::*;
use std::f64::consts::PI;

fn params() -> impl Strategy<Value = RepParams> {
    (0u32..=6, 0.25f64..1.75, -PI..PI, -PI..PI, any::<bool>()).prop_map(|(two_l, q, phi, psi, neg)| {
        let mut p = RepParams::new(two_l, q, phi, psi);
        p.sign = if neg { -1.0 } else { 1.0 };
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relations_hold(p in params()) {
        let r = build_rep(&p);
        let rep = check_relations(&r, &p.ctx, 1e-10).unwrap();
        prop_assert!(rep.pass, "max residual {}", rep.max_residual);
    }

    #[test]
    fn adjoints(p in params()) {
        let r = build_rep(&p);
        prop_assert!((&r.kstar - r.k.adjoint()).norm() < 1e-12);
        prop_assert!((&r.f - r.e.adjoint()).norm() < 1e-12);
    }

    #[test]
    fn k_spectrum(p in params()) {
        let r = build_rep(&p);
        let got = computed_k_spectrum(&r);
        let tol = 1e-9 * got.iter().map(|z| z.norm()).fold(1.0, f64::max);
        prop_assert!(multiset_close(&got, &expected_k_spectrum(&p), tol));
    }

    #[test]
    fn irreducible(p in params()) {
        prop_assume!((p.ctx.q - 1.0).abs() > 0.05);
        let r = build_rep(&p);
        prop_assert_eq!(commutant_dimension(&r, 1e-8).unwrap(), 1);
    }
}

#[test]
fn direct_sums_split() {
    let a = build_rep(&RepParams::new(2, 0.7, 0.3, 0.4));
    let b = build_rep(&RepParams::new(1, 0.7, 0.3, 0.4));
    assert_eq!(commutant_dimension(&a.direct_sum(&b), 1e-8).unwrap(), 2);
    assert_eq!(commutant_dimension(&a.direct_sum(&a), 1e-8).unwrap(), 4);
}
