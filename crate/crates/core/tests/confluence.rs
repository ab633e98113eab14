use braidkit_core::ncpoly::{Alphabet, NCPoly, RewriteSystem};
use braidkit_core::presentations::su_qphi2;

/// SU relations oriented naively by length-lex, leaving out γγ* = γ*γ.
fn naive_su_without_commutation() -> (Alphabet, RewriteSystem) {
    let p = su_qphi2();
    let mut al = p.alphabet.clone();
    for g in &mut al.gens {
        g.weight = 1;
    }
    let gg = p.word(&["gamma", "gamma_star"]);
    let gg_rev = p.word(&["gamma_star", "gamma"]);
    let is_commutation = |r: &NCPoly| r.len() == 2 && !r.coeff(&gg).is_zero() && !r.coeff(&gg_rev).is_zero();
    let mut stated = Vec::new();
    // the first seven relations are the stated ones
    for r in p.relations[..7].iter().filter(|r| !is_commutation(r)) {
        let mut q = NCPoly::zero();
        for (w, c) in r.terms() {
            q.add_term(al.word(w.gens()), c.clone());
        }
        stated.push(q);
    }
    assert_eq!(stated.len(), 6);
    let rs = RewriteSystem::from_relations(&al, &stated).unwrap();
    (al, rs)
}

#[test]
fn completed_su_system_is_confluent() {
    let p = su_qphi2();
    let c = p.rules.local_confluence_check(4);
    assert!(c.overlaps_checked > 0);
    assert!(c.is_confluent());
}

#[test]
fn missing_commutation_rule_diverges() {
    let (al, rs) = naive_su_without_commutation();
    let c = rs.local_confluence_check(4);
    let words: Vec<String> = c.failures.iter().map(|f| al.format_word(&f.word)).collect();
    let target = al.word_of(&["gamma_star", "gamma", "alpha"]).unwrap();
    assert!(c.failures.iter().any(|f| f.word == target), "divergent overlaps: {words:?}");
}
