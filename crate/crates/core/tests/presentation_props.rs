use braidkit_core::ncpoly::{Gen, NCPoly};
use braidkit_core::presentations::{builtin, Presentation};
use braidkit_core::scalars::{Scalar, Var};
use proptest::prelude::*;

const NAMES: [&str; 4] = ["su-qphi2", "hat-u2", "u2", "su2"];

fn coeff() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -2i32..=2, -2i32..=2).prop_map(|(c, s, u)| Scalar::monomial(c, &[(Var::S, s), (Var::U, u)]))
}

fn raw_word() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..64, 0..4)
}

fn raw_poly() -> impl Strategy<Value = Vec<(Scalar, Vec<usize>)>> {
    prop::collection::vec((coeff(), raw_word()), 1..3)
}

fn build(p: &Presentation, raw: &[(Scalar, Vec<usize>)]) -> NCPoly {
    let n = p.alphabet.len();
    let mut acc = NCPoly::zero();
    for (c, w) in raw {
        let gens: Vec<Gen> = w.iter().map(|&i| (i % n) as Gen).collect();
        acc = acc.add(&NCPoly::term(p.alphabet.word(&gens), c.clone()));
    }
    p.nf(&acc).unwrap()
}

fn homogeneous(p: &Presentation, w: &[usize]) -> NCPoly {
    let n = p.alphabet.len();
    let gens: Vec<Gen> = w.iter().map(|&i| (i % n) as Gen).collect();
    NCPoly::from_word(p.alphabet.word(&gens))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent(which in 0usize..4, a in raw_poly()) {
        let p = builtin(NAMES[which]).unwrap();
        let x = build(&p, &a);
        prop_assert_eq!(p.nf(&x).unwrap(), x);
    }

    #[test]
    fn multiplication_is_associative(which in 0usize..4, a in raw_poly(), b in raw_poly(), c in raw_poly()) {
        let p = builtin(NAMES[which]).unwrap();
        let (x, y, z) = (build(&p, &a), build(&p, &b), build(&p, &c));
        let left = p.mul(&p.mul(&x, &y).unwrap(), &z).unwrap();
        let right = p.mul(&x, &p.mul(&y, &z).unwrap()).unwrap();
        prop_assert!(left.sub(&right).is_zero());
    }

    #[test]
    fn counit_is_multiplicative(which in 0usize..4, a in raw_poly(), b in raw_poly()) {
        let p = builtin(NAMES[which]).unwrap();
        let (x, y) = (build(&p, &a), build(&p, &b));
        let xy = p.mul(&x, &y).unwrap();
        let lhs = p.counit_poly(&xy).unwrap();
        let rhs = &p.counit_poly(&x).unwrap() * &p.counit_poly(&y).unwrap();
        prop_assert!((&lhs - &rhs).is_zero());
    }

    #[test]
    fn star_reverses_products(which in 0usize..4, a in raw_poly(), b in raw_poly()) {
        let p = builtin(NAMES[which]).unwrap();
        prop_assume!(p.has_star);
        let (x, y) = (build(&p, &a), build(&p, &b));
        let lhs = p.nf(&p.star(&p.mul(&x, &y).unwrap())).unwrap();
        let rhs = p.mul(&p.nf(&p.star(&y)).unwrap(), &p.nf(&p.star(&x)).unwrap()).unwrap();
        prop_assert!(lhs.sub(&rhs).is_zero());
        prop_assert_eq!(p.nf(&p.star(&p.star(&x))).unwrap(), x);
    }

    #[test]
    fn products_respect_the_grading(which in 0usize..4, a in raw_word(), b in raw_word()) {
        let p = builtin(NAMES[which]).unwrap();
        let (x, y) = (homogeneous(&p, &a), homogeneous(&p, &b));
        let want = x.delta_degree(&p.alphabet).unwrap() + y.delta_degree(&p.alphabet).unwrap();
        let xy = p.mul(&x, &y).unwrap();
        if !xy.is_zero() {
            prop_assert_eq!(xy.delta_degree(&p.alphabet).unwrap(), want);
        }
    }
}

#[test]
fn builtins_are_well_formed() {
    for name in NAMES {
        let p = builtin(name).unwrap();
        p.validate().unwrap();
        for r in &p.relations {
            assert!(p.nf(r).unwrap().is_zero(), "{name}: relation survives");
            assert!(p.counit_poly(r).unwrap().is_zero(), "{name}: counit");
            r.delta_degree(&p.alphabet).unwrap();
        }
        assert!(p.rules.local_confluence_check(4).is_confluent(), "{name}");
    }
}
