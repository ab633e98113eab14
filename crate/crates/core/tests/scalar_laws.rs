use braidkit_core::scalars::{NumericContext, Scalar, Var};
use num_complex::Complex64;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-3i64..=3, -3i32..=3, -3i32..=3, -1i32..=1, 0i32..=1), 1..4).prop_map(|ts| {
        ts.into_iter().fold(Scalar::zero(), |acc, (c, s, u, w, l)| {
            let t = Scalar::monomial(c, &[(Var::S, s), (Var::U, u), (Var::W, w), (Var::Param(0), l)]);
            &acc + &t
        })
    })
}

fn rational() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent()).prop_map(|(n, d)| if d.is_zero() { n } else { n.div(&d).unwrap() })
}

fn ctx() -> NumericContext {
    NumericContext::new(0.63, 0.41, 1.3).with_param(0, Complex64::new(0.8, 0.0))
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-9 * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn conjugation(a in rational(), b in rational()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        // s and the parameters are real, u and w are phases
        if let Ok(v) = a.eval(&ctx()) {
            prop_assert!(close(a.conj().eval(&ctx()).unwrap(), v.conj()));
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in rational(), b in rational()) {
        let c = ctx();
        if let (Ok(x), Ok(y)) = (a.eval(&c), b.eval(&c)) {
            prop_assert!(close((&a + &b).eval(&c).unwrap(), x + y));
            prop_assert!(close((&a * &b).eval(&c).unwrap(), x * y));
        }
    }

    #[test]
    fn substitution_commutes_with_evaluation(a in laurent()) {
        let c = NumericContext::new(0.63, 0.0, 1.3).with_param(0, Complex64::new(0.8, 0.0));
        let sub = a.subs(&[(Var::U, Scalar::one())]).unwrap();
        prop_assert!(close(sub.eval(&c).unwrap(), a.eval(&c).unwrap()));
    }
}

#[test]
fn q_is_the_square_of_s() {
    assert_eq!(&Scalar::s() * &Scalar::s(), Scalar::q());
    let half = Scalar::monomial(1, &[(Var::S, 1)]);
    let v = half.eval(&NumericContext::new(0.49, 0.0, 0.0)).unwrap();
    assert!((v.re - 0.7).abs() < 1e-15);
}
