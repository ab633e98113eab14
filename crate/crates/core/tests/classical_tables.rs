use braidkit_core::duality::{at_trivial_phase, left_action_table, LeftAction, Pairing, PairingTable};
use braidkit_core::hopf::map_scalars;
use braidkit_core::ncpoly::NCPoly;
use braidkit_core::presentations::{su_qphi2, uq_hat_u2, uq_su2_classical, Presentation};
use braidkit_core::scalars::{Scalar, Var};

fn at_u_one(p: &Presentation) -> Presentation {
    map_scalars(p, |s| s.subs(&[(Var::U, Scalar::one())]).unwrap()).unwrap()
}

fn q_half(e: i32) -> Scalar {
    Scalar::monomial(1, &[(Var::S, e)])
}

#[test]
fn braided_action_reduces_to_the_classical_one() {
    let (ub, ab) = (uq_hat_u2(), su_qphi2());
    let braided = left_action_table(&LeftAction::new(Pairing::standard(&ub, &ab))).unwrap();

    let uc = uq_su2_classical();
    let ac = at_u_one(&su_qphi2());
    let classical = left_action_table(&LeftAction::new(Pairing::new(&uc, &ac, PairingTable::classical(&uc, &ac)))).unwrap();

    let mut compared = 0;
    for (h, x, v) in &braided {
        // k* collapses onto k when the phase is trivial
        let h = match h.as_str() {
            "kstar" => "k",
            "kstar_inv" => "k_inv",
            other => other,
        };
        let (_, _, want) = classical.iter().find(|(hc, xc, _)| hc == h && xc == x).expect("same generators");
        let got = at_trivial_phase(v);
        assert_eq!(
            got.display(&ab.alphabet).to_string(),
            want.display(&ac.alphabet).to_string(),
            "{h} acting on {x}"
        );
        compared += 1;
    }
    assert_eq!(compared, 24);
}

#[test]
fn classical_table_by_hand() {
    let uc = uq_su2_classical();
    let ac = at_u_one(&su_qphi2());
    let table = left_action_table(&LeftAction::new(Pairing::new(&uc, &ac, PairingTable::classical(&uc, &ac)))).unwrap();
    let m = |c: Scalar, g: &str| ac.mono(c, &[g]);
    let q = Scalar::q();
    let expected: Vec<(&str, &str, NCPoly)> = vec![
        ("e", "alpha", NCPoly::zero()),
        ("e", "alpha_star", m(Scalar::one(), "gamma")),
        ("e", "gamma", NCPoly::zero()),
        ("e", "gamma_star", m(-q.inv().unwrap(), "alpha")),
        ("f", "alpha", m(-q.clone(), "gamma_star")),
        ("f", "alpha_star", NCPoly::zero()),
        ("f", "gamma", m(Scalar::one(), "alpha_star")),
        ("f", "gamma_star", NCPoly::zero()),
        ("k", "alpha", m(q_half(-1), "alpha")),
        ("k", "alpha_star", m(q_half(1), "alpha_star")),
        ("k", "gamma", m(q_half(-1), "gamma")),
        ("k", "gamma_star", m(q_half(1), "gamma_star")),
        ("k_inv", "alpha", m(q_half(1), "alpha")),
        ("k_inv", "gamma_star", m(q_half(-1), "gamma_star")),
    ];
    for (h, x, want) in expected {
        let (_, _, got) = table.iter().find(|(a, b, _)| a == h && b == x).unwrap();
        assert_eq!(got, &want, "{h} acting on {x}");
    }
}
