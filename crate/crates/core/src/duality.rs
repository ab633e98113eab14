//! Pairings between a braided Hopf algebra and its dual, the mutual braiding
//! Ξ, the actions they induce, and the axiom suites for those actions.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::hopf::{
    antipode, antipode_word, coproduct_word, coproduct_word_raw, phase, AxiomReport, HopfError,
};
use crate::ncpoly::{Alphabet, Gen, NCPoly, Word};
use crate::presentations::{sc, Presentation};
use crate::scalars::{Scalar, Var};

/// Pairing values on generator pairs; anything missing pairs to zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairingTable {
    entries: BTreeMap<(Gen, Gen), Scalar>,
}

impl PairingTable {
    pub fn new() -> PairingTable {
        PairingTable::default()
    }

    pub fn set(&mut self, h: Gen, a: Gen, v: Scalar) {
        if v.is_zero() {
            self.entries.remove(&(h, a));
        } else {
            self.entries.insert((h, a), v);
        }
    }

    pub fn get(&self, h: Gen, a: Gen) -> Scalar {
        self.entries.get(&(h, a)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Gen, Gen), &Scalar)> {
        self.entries.iter()
    }

    fn from_ids(u: &Presentation, a: &Presentation, vals: &[(&str, &str, Scalar)]) -> PairingTable {
        let mut t = PairingTable::new();
        for (h, x, v) in vals {
            t.set(u.index(h), a.index(x), v.clone());
        }
        t
    }

    /// Generator values between the braided û(2) algebra and SU_{q,φ}(2).
    pub fn hat_u2_su(u: &Presentation, a: &Presentation) -> PairingTable {
        PairingTable::from_ids(
            u,
            a,
            &[
                ("e", "gamma_star", sc(-1, -2, -4)),
                ("f", "gamma", Scalar::one()),
                ("k", "alpha", sc(1, -1, 2)),
                ("k", "alpha_star", sc(1, 1, -2)),
                ("kstar", "alpha", sc(1, -1, -2)),
                ("kstar", "alpha_star", sc(1, 1, 2)),
                ("k_inv", "alpha", sc(1, 1, -2)),
                ("k_inv", "alpha_star", sc(1, -1, 2)),
                ("kstar_inv", "alpha", sc(1, 1, 2)),
                ("kstar_inv", "alpha_star", sc(1, -1, -2)),
            ],
        )
    }

    /// The unbraided pairing of U_q(su(2)) with SU_q(2).
    pub fn classical(u: &Presentation, a: &Presentation) -> PairingTable {
        PairingTable::from_ids(
            u,
            a,
            &[
                ("e", "gamma_star", sc(-1, -2, 0)),
                ("f", "gamma", Scalar::one()),
                ("k", "alpha", sc(1, -1, 0)),
                ("k", "alpha_star", sc(1, 1, 0)),
                ("k_inv", "alpha", sc(1, 1, 0)),
                ("k_inv", "alpha_star", sc(1, -1, 0)),
            ],
        )
    }
}

/// The mutual braiding between an acting algebra H and a module algebra A:
/// Ξ(h⊗a) = u^{2δ(h)δ(a)} a⊗h.
#[derive(Clone, Debug)]
pub struct CrossBraiding<'a> {
    pub h: &'a Presentation,
    pub a: &'a Alphabet,
}

impl CrossBraiding<'_> {
    /// Phase of Ξ on homogeneous words.
    pub fn xi(&self, h: &Word, a: &Word) -> Scalar {
        phase(self.h, self.h.alphabet.word_delta(h) * self.a.word_delta(a))
    }

    /// Phase of the inverse of Ξ on a⊗h.
    pub fn xi_inv(&self, a: &Word, h: &Word) -> Scalar {
        phase(self.h, -self.h.alphabet.word_delta(h) * self.a.word_delta(a))
    }

    /// The phase written for Ξ^{-1} in the right action, u^{+2δ(h)δ(a)}.
    pub fn xi_right(&self, a: &Word, h: &Word) -> Scalar {
        self.xi(h, a)
    }
}

/// A braided pairing ⟨H, A⟩ extended from generator values.
pub struct Pairing<'a> {
    pub u: &'a Presentation,
    pub a: &'a Presentation,
    table: PairingTable,
    memo: RefCell<BTreeMap<(Word, Word), Scalar>>,
}

impl<'a> Pairing<'a> {
    pub fn new(u: &'a Presentation, a: &'a Presentation, table: PairingTable) -> Pairing<'a> {
        Pairing { u, a, table, memo: RefCell::new(BTreeMap::new()) }
    }

    /// The braided pairing between U_{q,φ}(û(2)) and SU_{q,φ}(2).
    pub fn standard(u: &'a Presentation, a: &'a Presentation) -> Pairing<'a> {
        let t = PairingTable::hat_u2_su(u, a);
        Pairing::new(u, a, t)
    }

    pub fn table(&self) -> &PairingTable {
        &self.table
    }

    pub fn cross(&self) -> CrossBraiding<'a> {
        CrossBraiding { h: self.u, a: &self.a.alphabet }
    }

    fn dh(&self, w: &Word) -> i32 {
        self.u.alphabet.word_delta(w)
    }

    fn da(&self, w: &Word) -> i32 {
        self.a.alphabet.word_delta(w)
    }

    /// ⟨h, a⟩ on words. Words need not be in normal form.
    pub fn pair_words(&self, h: &Word, a: &Word) -> Result<Scalar, HopfError> {
        if h.is_empty() {
            return self.a.counit_word(a).ok_or(HopfError::MissingTable("counit"));
        }
        if a.is_empty() {
            return self.u.counit_word(h).ok_or(HopfError::MissingTable("counit"));
        }
        if h.len() == 1 && a.len() == 1 {
            return Ok(self.table.get(h.gens()[0], a.gens()[0]));
        }
        let key = (h.clone(), a.clone());
        if let Some(v) = self.memo.borrow().get(&key) {
            return Ok(v.clone());
        }
        let mut acc = Scalar::zero();
        if h.len() > 1 {
            // ⟨g h', a⟩ = Σ u^{2δ(h')δ(a₁)} ⟨g, a₁⟩⟨h', a₂⟩
            let g = self.u.alphabet.word(&h.gens()[..1]);
            let rest = self.u.alphabet.word(&h.gens()[1..]);
            for (legs, c) in coproduct_word_raw(self.a, a)?.terms() {
                let l = self.pair_words(&g, &legs[0])?;
                if l.is_zero() {
                    continue;
                }
                let r = self.pair_words(&rest, &legs[1])?;
                let ph = phase(self.u, self.dh(&rest) * self.da(&legs[0]));
                acc = &acc + &(&(c * &ph) * &(&l * &r));
            }
        } else {
            // ⟨g, x b⟩ = Σ u^{2δ(g₂)δ(x)} ⟨g₁, x⟩⟨g₂, b⟩
            let x = self.a.alphabet.word(&a.gens()[..1]);
            let b = self.a.alphabet.word(&a.gens()[1..]);
            for (legs, c) in coproduct_word_raw(self.u, h)?.terms() {
                let l = self.pair_words(&legs[0], &x)?;
                if l.is_zero() {
                    continue;
                }
                let r = self.pair_words(&legs[1], &b)?;
                let ph = phase(self.u, self.dh(&legs[1]) * self.da(&x));
                acc = &acc + &(&(c * &ph) * &(&l * &r));
            }
        }
        self.memo.borrow_mut().insert(key, acc.clone());
        Ok(acc)
    }

    /// ⟨h, a⟩, splitting a first whenever possible. Used to cross-check the
    /// two extension orders.
    pub fn pair_words_alt(&self, h: &Word, a: &Word) -> Result<Scalar, HopfError> {
        if h.len() <= 1 || a.len() <= 1 {
            return self.pair_words(h, a);
        }
        let x = self.a.alphabet.word(&a.gens()[..1]);
        let b = self.a.alphabet.word(&a.gens()[1..]);
        let mut acc = Scalar::zero();
        for (legs, c) in coproduct_word_raw(self.u, h)?.terms() {
            let l = self.pair_words_alt(&legs[0], &x)?;
            if l.is_zero() {
                continue;
            }
            let r = self.pair_words_alt(&legs[1], &b)?;
            let ph = phase(self.u, self.dh(&legs[1]) * self.da(&x));
            acc = &acc + &(&(c * &ph) * &(&l * &r));
        }
        Ok(acc)
    }

    pub fn pair(&self, h: &NCPoly, a: &NCPoly) -> Result<Scalar, HopfError> {
        let mut acc = Scalar::zero();
        for (hw, hc) in h.terms() {
            for (aw, ac) in a.terms() {
                let v = self.pair_words(hw, aw)?;
                acc = &acc + &(&(hc * ac) * &v);
            }
        }
        Ok(acc)
    }

    /// Right action x ⊲ h = Σ u^{2δ(h)δ(x₂)} ⟨h, x₁⟩ x₂.
    pub fn right_action_word(&self, x: &Word, h: &Word) -> Result<NCPoly, HopfError> {
        let cross = self.cross();
        let mut r = NCPoly::zero();
        for (legs, c) in coproduct_word_raw(self.a, x)?.terms() {
            let v = self.pair_words(h, &legs[0])?;
            if v.is_zero() {
                continue;
            }
            let ph = cross.xi_right(&legs[1], h);
            r.add_term(legs[1].clone(), &(c * &ph) * &v);
        }
        Ok(self.a.nf(&r)?)
    }

    pub fn right_action(&self, x: &NCPoly, h: &NCPoly) -> Result<NCPoly, HopfError> {
        let mut r = NCPoly::zero();
        for (xw, xc) in x.terms() {
            for (hw, hc) in h.terms() {
                r = r.add(&self.right_action_word(xw, hw)?.scale(&(xc * hc)));
            }
        }
        Ok(r)
    }
}

/// A left action of a braided Hopf algebra on an algebra.
pub trait Action {
    fn acting(&self) -> &Presentation;
    fn target(&self) -> &Presentation;
    fn name(&self) -> String;

    /// h ⊳ a for words, in normal form.
    fn act_word(&self, h: &Word, a: &Word) -> Result<NCPoly, HopfError>;

    fn act(&self, h: &NCPoly, a: &NCPoly) -> Result<NCPoly, HopfError> {
        let mut r = NCPoly::zero();
        for (hw, hc) in h.terms() {
            for (aw, ac) in a.terms() {
                r = r.add(&self.act_word(hw, aw)?.scale(&(hc * ac)));
            }
        }
        Ok(r)
    }
}

/// h ⊳ x = (id⊗⟨,⟩)(Ξ⊗id)(id⊗Δ)(h⊗x) = Σ u^{2δ(h)δ(x₁)} ⟨h, x₂⟩ x₁.
pub struct LeftAction<'a> {
    pub pairing: Pairing<'a>,
}

impl<'a> LeftAction<'a> {
    pub fn new(pairing: Pairing<'a>) -> LeftAction<'a> {
        LeftAction { pairing }
    }
}

impl Action for LeftAction<'_> {
    fn acting(&self) -> &Presentation {
        self.pairing.u
    }

    fn target(&self) -> &Presentation {
        self.pairing.a
    }

    fn name(&self) -> String {
        format!("{} on {}", self.pairing.u.name, self.pairing.a.name)
    }

    fn act_word(&self, h: &Word, x: &Word) -> Result<NCPoly, HopfError> {
        let p = &self.pairing;
        let cross = p.cross();
        let mut r = NCPoly::zero();
        for (legs, c) in coproduct_word_raw(p.a, x)?.terms() {
            let v = p.pair_words(h, &legs[1])?;
            if v.is_zero() {
                continue;
            }
            r.add_term(legs[0].clone(), &(c * &cross.xi(h, &legs[0])) * &v);
        }
        Ok(p.a.nf(&r)?)
    }
}

/// h ⊳ g = Σ u^{2δ(h₂)δ(g)} h₁ g S(h₂) within one braided Hopf algebra.
pub struct AdjointAction<'a> {
    pub p: &'a Presentation,
}

impl Action for AdjointAction<'_> {
    fn acting(&self) -> &Presentation {
        self.p
    }

    fn target(&self) -> &Presentation {
        self.p
    }

    fn name(&self) -> String {
        format!("adjoint action of {}", self.p.name)
    }

    fn act_word(&self, h: &Word, g: &Word) -> Result<NCPoly, HopfError> {
        let p = self.p;
        let dg = p.alphabet.word_delta(g);
        let mut r = NCPoly::zero();
        for (legs, c) in coproduct_word(p, h)?.terms() {
            let s = antipode_word(p, &legs[1])?;
            let ph = phase(p, p.alphabet.word_delta(&legs[1]) * dg);
            let left = NCPoly::from_word(legs[0].concat(g));
            r = r.add(&p.mul(&left, &s)?.scale(&(c * &ph)));
        }
        Ok(r)
    }
}

/// An action given on generator pairs and extended to words by
/// h ⊳ (x b) = Σ u^{2δ(h₂)δ(x)} (h₁ ⊳ x)(h₂ ⊳ b) and (g h') ⊳ a = g ⊳ (h' ⊳ a).
pub struct TableAction<'a> {
    pub h: &'a Presentation,
    pub a: &'a Presentation,
    pub label: String,
    table: BTreeMap<(Gen, Gen), NCPoly>,
    memo: RefCell<BTreeMap<(Word, Word), NCPoly>>,
}

impl<'a> TableAction<'a> {
    pub fn new(
        h: &'a Presentation,
        a: &'a Presentation,
        label: &str,
        table: BTreeMap<(Gen, Gen), NCPoly>,
    ) -> TableAction<'a> {
        TableAction { h, a, label: String::from(label), table, memo: RefCell::new(BTreeMap::new()) }
    }

    /// Tabulate another action on generator pairs.
    pub fn tabulate(action: &'a dyn Action, label: &str) -> Result<TableAction<'a>, HopfError> {
        let (h, a) = (action.acting(), action.target());
        let mut table = BTreeMap::new();
        for g in 0..h.alphabet.len() as Gen {
            for x in 0..a.alphabet.len() as Gen {
                let v = action.act_word(&h.alphabet.word(&[g]), &a.alphabet.word(&[x]))?;
                table.insert((g, x), v);
            }
        }
        Ok(TableAction::new(h, a, label, table))
    }

    pub fn table(&self) -> &BTreeMap<(Gen, Gen), NCPoly> {
        &self.table
    }

    fn act_gen(&self, g: Gen, a: &Word) -> Result<NCPoly, HopfError> {
        if a.is_empty() {
            let e = self.h.counit_word(&self.h.alphabet.word(&[g])).ok_or(HopfError::MissingTable("counit"))?;
            return Ok(NCPoly::constant(e));
        }
        if a.len() == 1 {
            return Ok(self.table.get(&(g, a.gens()[0])).cloned().unwrap_or_else(NCPoly::zero));
        }
        let x = self.a.alphabet.word(&a.gens()[..1]);
        let b = self.a.alphabet.word(&a.gens()[1..]);
        let dx = self.a.alphabet.word_delta(&x);
        let gw = self.h.alphabet.word(&[g]);
        let mut r = NCPoly::zero();
        for (legs, c) in coproduct_word(self.h, &gw)?.terms() {
            let l = self.act_word(&legs[0], &x)?;
            if l.is_zero() {
                continue;
            }
            let rr = self.act_word(&legs[1], &b)?;
            let ph = phase(self.h, self.h.alphabet.word_delta(&legs[1]) * dx);
            r = r.add(&self.a.mul(&l, &rr)?.scale(&(c * &ph)));
        }
        Ok(r)
    }
}

impl Action for TableAction<'_> {
    fn acting(&self) -> &Presentation {
        self.h
    }

    fn target(&self) -> &Presentation {
        self.a
    }

    fn name(&self) -> String {
        self.label.clone()
    }

    fn act_word(&self, h: &Word, a: &Word) -> Result<NCPoly, HopfError> {
        if h.is_empty() {
            return Ok(self.a.nf(&NCPoly::from_word(a.clone()))?);
        }
        let key = (h.clone(), a.clone());
        if let Some(v) = self.memo.borrow().get(&key) {
            return Ok(v.clone());
        }
        // (g h') ⊳ a = g ⊳ (h' ⊳ a)
        let rest = self.h.alphabet.word(&h.gens()[1..]);
        let inner = self.act_word(&rest, a)?;
        let mut r = NCPoly::zero();
        for (w, c) in inner.terms() {
            r = r.add(&self.act_gen(h.gens()[0], w)?.scale(c));
        }
        let r = self.a.nf(&r)?;
        self.memo.borrow_mut().insert(key, r.clone());
        Ok(r)
    }
}

fn word_poly(w: &Word) -> NCPoly {
    NCPoly::from_word(w.clone())
}

/// Module-algebra axioms of an action on generators of H and normal words of
/// A up to `degree`.
pub fn check_module_algebra(action: &dyn Action, degree: usize) -> AxiomReport {
    let mut rep = AxiomReport::default();
    let (hp, ap) = (action.acting(), action.target());
    let (hal, aal) = (&hp.alphabet, &ap.alphabet);
    let hgens: Vec<Word> = (0..hal.len()).map(|g| hal.word(&[g as Gen])).collect();
    let basis = ap.basis(degree);
    let show = |h: &Word, a: &Word| format!("{} ⊳ {}", hal.format_word(h), aal.format_word(a));

    for a in &basis {
        // units
        match action.act_word(&Word::unit(), a) {
            Ok(r) => rep.zero("unit-acts-trivially", aal.format_word(a), &r.sub(&word_poly(a)), aal),
            Err(e) => rep.error("unit-acts-trivially", aal.format_word(a), e),
        }
    }
    for h in &hgens {
        match (action.act_word(h, &Word::unit()), hp.counit_word(h)) {
            (Ok(r), Some(e)) => rep.zero("action-on-unit", hal.format_word(h), &r.sub(&NCPoly::constant(e)), aal),
            (Err(e), _) => rep.error("action-on-unit", hal.format_word(h), e),
            (_, None) => rep.error("action-on-unit", hal.format_word(h), "no counit"),
        }
    }

    for h in &hgens {
        for a in &basis {
            let el = show(h, a);
            let ha = match action.act_word(h, a) {
                Ok(v) => v,
                Err(e) => {
                    rep.error("action", el, e);
                    continue;
                }
            };
            // grading and compatibility of the action with Ξ
            let (dh, da) = (hal.word_delta(h), aal.word_delta(a));
            let mut grading = NCPoly::zero();
            let mut xi_res = NCPoly::zero();
            for (w, c) in ha.terms() {
                if aal.word_delta(w) != dh + da {
                    grading.add_term(w.clone(), c.clone());
                }
                let lhs = phase(hp, dh * aal.word_delta(w));
                let rhs = phase(hp, dh * dh + dh * da);
                xi_res.add_term(w.clone(), c * &(&lhs - &rhs));
            }
            rep.zero("grading", el.clone(), &grading, aal);
            rep.zero("xi-compatibility", el.clone(), &xi_res, aal);

            for g in &hgens {
                let el = format!("{} | {}", hal.format_word(&h.concat(g)), aal.format_word(a));
                let res = (|| -> Result<NCPoly, HopfError> {
                    let lhs = action.act(&hp.nf(&word_poly(&h.concat(g)))?, &word_poly(a))?;
                    let inner = action.act_word(g, a)?;
                    let rhs = action.act(&word_poly(h), &inner)?;
                    Ok(lhs.sub(&rhs))
                })();
                match res {
                    Ok(r) => rep.zero("composition", el, &r, aal),
                    Err(e) => rep.error("composition", el, e),
                }
            }
        }
        // Ξ is compatible with the coproduct of H
        if let Ok(d) = coproduct_word(hp, h) {
            for x in 0..aal.len() {
                let a = aal.word(&[x as Gen]);
                let da = aal.word_delta(&a);
                let mut res = Scalar::zero();
                for (legs, c) in d.terms() {
                    let l = phase(hp, hal.word_delta(h) * da);
                    let r = &phase(hp, hal.word_delta(&legs[0]) * da) * &phase(hp, hal.word_delta(&legs[1]) * da);
                    res = &res + &(c * &(&l - &r));
                }
                rep.record(
                    "xi-coproduct",
                    show(h, &a),
                    if res.is_zero() { None } else { Some(format!("{res}")) },
                );
            }
        }
    }

    // h ⊳ (ab) = Σ u^{2δ(h₂)δ(a)} (h₁ ⊳ a)(h₂ ⊳ b)
    for h in &hgens {
        let d = match coproduct_word(hp, h) {
            Ok(d) => d,
            Err(e) => {
                rep.error("product-law", hal.format_word(h), e);
                continue;
            }
        };
        for a in &basis {
            for b in &basis {
                if a.is_empty() || b.is_empty() || a.len() + b.len() > degree {
                    continue;
                }
                let el = format!("{} ⊳ ({} · {})", hal.format_word(h), aal.format_word(a), aal.format_word(b));
                let res = (|| -> Result<NCPoly, HopfError> {
                    let lhs = action.act(&word_poly(h), &ap.nf(&word_poly(&a.concat(b)))?)?;
                    let mut rhs = NCPoly::zero();
                    for (legs, c) in d.terms() {
                        let l = action.act_word(&legs[0], a)?;
                        if l.is_zero() {
                            continue;
                        }
                        let r = action.act_word(&legs[1], b)?;
                        let ph = phase(hp, hal.word_delta(&legs[1]) * aal.word_delta(a));
                        rhs = rhs.add(&ap.mul(&l, &r)?.scale(&(c * &ph)));
                    }
                    Ok(lhs.sub(&rhs))
                })();
                match res {
                    Ok(r) => rep.zero("product-law", el, &r, aal),
                    Err(e) => rep.error("product-law", el, e),
                }
            }
        }
    }

    // the action descends to both quotients
    for h in &hgens {
        for (i, r) in ap.relations.iter().enumerate() {
            let el = format!("{} ⊳ relation {i}", hal.format_word(h));
            match action.act(&word_poly(h), r) {
                Ok(v) => rep.zero("target-relations", el, &v, aal),
                Err(e) => rep.error("target-relations", el, e),
            }
        }
    }
    for (i, r) in hp.relations.iter().enumerate() {
        for x in 0..aal.len() {
            let a = aal.word(&[x as Gen]);
            let el = format!("relation {i} ⊳ {}", aal.format_word(&a));
            match action.act(r, &word_poly(&a)) {
                Ok(v) => rep.zero("acting-relations", el, &v, aal),
                Err(e) => rep.error("acting-relations", el, e),
            }
        }
    }
    rep
}

/// Right module-algebra axioms for x ⊲ h, with the braided product law
/// (ab) ⊲ h = Σ u^{2δ(b)δ(h₁)} (a ⊲ h₁)(b ⊲ h₂).
pub fn check_right_module_algebra(p: &Pairing<'_>, degree: usize) -> AxiomReport {
    let mut rep = AxiomReport::default();
    let (hp, ap) = (p.u, p.a);
    let (hal, aal) = (&hp.alphabet, &ap.alphabet);
    let hgens: Vec<Word> = (0..hal.len()).map(|g| hal.word(&[g as Gen])).collect();
    let basis = ap.basis(degree);
    let show = |a: &Word, h: &Word| format!("{} ⊲ {}", aal.format_word(a), hal.format_word(h));

    for a in &basis {
        match p.right_action_word(a, &Word::unit()) {
            Ok(r) => rep.zero("unit-acts-trivially", aal.format_word(a), &r.sub(&word_poly(a)), aal),
            Err(e) => rep.error("unit-acts-trivially", aal.format_word(a), e),
        }
    }
    for h in &hgens {
        match (p.right_action_word(&Word::unit(), h), hp.counit_word(h)) {
            (Ok(r), Some(e)) => rep.zero("action-on-unit", hal.format_word(h), &r.sub(&NCPoly::constant(e)), aal),
            (Err(e), _) => rep.error("action-on-unit", hal.format_word(h), e),
            (_, None) => rep.error("action-on-unit", hal.format_word(h), "no counit"),
        }
    }
    for h in &hgens {
        for a in &basis {
            let el = show(a, h);
            let ah = match p.right_action_word(a, h) {
                Ok(v) => v,
                Err(e) => {
                    rep.error("action", el, e);
                    continue;
                }
            };
            let want = hal.word_delta(h) + aal.word_delta(a);
            let mut grading = NCPoly::zero();
            for (w, c) in ah.terms() {
                if aal.word_delta(w) != want {
                    grading.add_term(w.clone(), c.clone());
                }
            }
            rep.zero("grading", el, &grading, aal);
            // (a ⊲ h) ⊲ g = a ⊲ (hg)
            for g in &hgens {
                let el = format!("{} | {}", aal.format_word(a), hal.format_word(&h.concat(g)));
                let res = (|| -> Result<NCPoly, HopfError> {
                    let lhs = p.right_action(&ah, &word_poly(g))?;
                    let rhs = p.right_action(&word_poly(a), &hp.nf(&word_poly(&h.concat(g)))?)?;
                    Ok(lhs.sub(&rhs))
                })();
                match res {
                    Ok(r) => rep.zero("composition", el, &r, aal),
                    Err(e) => rep.error("composition", el, e),
                }
            }
        }
    }
    for h in &hgens {
        let d = match coproduct_word(hp, h) {
            Ok(d) => d,
            Err(e) => {
                rep.error("product-law", hal.format_word(h), e);
                continue;
            }
        };
        for a in &basis {
            for b in &basis {
                if a.is_empty() || b.is_empty() || a.len() + b.len() > degree {
                    continue;
                }
                let el = format!("({} · {}) ⊲ {}", aal.format_word(a), aal.format_word(b), hal.format_word(h));
                let res = (|| -> Result<NCPoly, HopfError> {
                    let lhs = p.right_action(&ap.nf(&word_poly(&a.concat(b)))?, &word_poly(h))?;
                    let mut rhs = NCPoly::zero();
                    for (legs, c) in d.terms() {
                        let l = p.right_action_word(a, &legs[0])?;
                        if l.is_zero() {
                            continue;
                        }
                        let r = p.right_action_word(b, &legs[1])?;
                        let ph = phase(hp, aal.word_delta(b) * hal.word_delta(&legs[0]));
                        rhs = rhs.add(&ap.mul(&l, &r)?.scale(&(c * &ph)));
                    }
                    Ok(lhs.sub(&rhs))
                })();
                match res {
                    Ok(r) => rep.zero("product-law", el, &r, aal),
                    Err(e) => rep.error("product-law", el, e),
                }
            }
        }
    }
    for h in &hgens {
        for (i, r) in ap.relations.iter().enumerate() {
            let el = format!("relation {i} ⊲ {}", hal.format_word(h));
            match p.right_action(r, &word_poly(h)) {
                Ok(v) => rep.zero("target-relations", el, &v, aal),
                Err(e) => rep.error("target-relations", el, e),
            }
        }
    }
    for (i, r) in hp.relations.iter().enumerate() {
        for x in 0..aal.len() {
            let a = aal.word(&[x as Gen]);
            let el = format!("{} ⊲ relation {i}", aal.format_word(&a));
            match p.right_action(&word_poly(&a), r) {
                Ok(v) => rep.zero("acting-relations", el, &v, aal),
                Err(e) => rep.error("acting-relations", el, e),
            }
        }
    }
    rep
}

/// Pairing identities: antipode symmetry, the two phase identities, both
/// extension orders, product rules against reduced products and relations.
pub fn check_pairing_properties(p: &Pairing<'_>, degree: usize) -> AxiomReport {
    let mut rep = AxiomReport::default();
    let (u, a) = (p.u, p.a);
    let (ual, aal) = (&u.alphabet, &a.alphabet);
    let ub = u.basis(degree);
    let ab = a.basis(degree);
    let ugens: Vec<Word> = (0..ual.len()).map(|g| ual.word(&[g as Gen])).collect();
    let agens: Vec<Word> = (0..aal.len()).map(|g| aal.word(&[g as Gen])).collect();
    let show = |h: &Word, x: &Word| format!("<{}, {}>", ual.format_word(h), aal.format_word(x));
    let scal = |s: Scalar| if s.is_zero() { None } else { Some(format!("{s}")) };

    for h in &ub {
        for x in &ab {
            let el = show(h, x);
            let res = (|| -> Result<_, HopfError> {
                let sh = antipode(u, &word_poly(h))?;
                let sx = antipode(a, &word_poly(x))?;
                let anti = &p.pair(&sh, &word_poly(x))? - &p.pair(&word_poly(h), &sx)?;
                let orders = &p.pair_words(h, x)? - &p.pair_words_alt(h, x)?;
                Ok((anti, orders))
            })();
            match res {
                Ok((s, o)) => {
                    rep.record("antipode-symmetry", el.clone(), scal(s));
                    rep.record("extension-orders", el.clone(), scal(o));
                }
                Err(e) => rep.error("antipode-symmetry", el.clone(), e),
            }
            let v = match p.pair_words(h, x) {
                Ok(v) => v,
                Err(_) => continue,
            };
            if v.is_zero() {
                continue;
            }
            // ⟨h,a⟩ b picks up u^{2δ(a)δ(b) + 2δ(h)δ(b)} and must not change
            for b in &agens {
                let e = ual.word_delta(h) * aal.word_delta(b) + aal.word_delta(x) * aal.word_delta(b);
                rep.record("phase-identity-module", format!("{el} {}", aal.format_word(b)), scal(&v * &(&phase(u, e) - &Scalar::one())));
            }
            for g in &ugens {
                let e = ual.word_delta(h) * ual.word_delta(g) + ual.word_delta(g) * aal.word_delta(x);
                rep.record("phase-identity-acting", format!("{} {el}", ual.format_word(g)), scal(&v * &(&phase(u, e) - &Scalar::one())));
            }
        }
    }

    // product rules against reduced products on both sides
    for h in &ub {
        let dh = match crate::hopf::coproduct(u, &word_poly(h)) {
            Ok(d) => d,
            Err(e) => {
                rep.error("product-rule", ual.format_word(h), e);
                continue;
            }
        };
        for x in &ab {
            for y in &ab {
                if x.is_empty() || y.is_empty() || x.len() + y.len() > degree {
                    continue;
                }
                let el = format!("<{}, {} · {}>", ual.format_word(h), aal.format_word(x), aal.format_word(y));
                let res = (|| -> Result<Scalar, HopfError> {
                    let lhs = p.pair(&word_poly(h), &a.nf(&word_poly(&x.concat(y)))?)?;
                    let mut rhs = Scalar::zero();
                    for (legs, c) in dh.terms() {
                        let ph = phase(u, ual.word_delta(&legs[1]) * aal.word_delta(x));
                        let v = &p.pair_words(&legs[0], x)? * &p.pair_words(&legs[1], y)?;
                        rhs = &rhs + &(&(c * &ph) * &v);
                    }
                    Ok(&lhs - &rhs)
                })();
                match res {
                    Ok(s) => rep.record("product-rule", el, scal(s)),
                    Err(e) => rep.error("product-rule", el, e),
                }
            }
        }
    }
    for x in &ab {
        let dx = match crate::hopf::coproduct(a, &word_poly(x)) {
            Ok(d) => d,
            Err(e) => {
                rep.error("coproduct-rule", aal.format_word(x), e);
                continue;
            }
        };
        for h in &ub {
            for g in &ub {
                if h.is_empty() || g.is_empty() || h.len() + g.len() > degree {
                    continue;
                }
                let el = format!("<{} · {}, {}>", ual.format_word(h), ual.format_word(g), aal.format_word(x));
                let res = (|| -> Result<Scalar, HopfError> {
                    let lhs = p.pair(&u.nf(&word_poly(&h.concat(g)))?, &word_poly(x))?;
                    let mut rhs = Scalar::zero();
                    for (legs, c) in dx.terms() {
                        let ph = phase(u, ual.word_delta(g) * aal.word_delta(&legs[0]));
                        let v = &p.pair_words(h, &legs[0])? * &p.pair_words(g, &legs[1])?;
                        rhs = &rhs + &(&(c * &ph) * &v);
                    }
                    Ok(&lhs - &rhs)
                })();
                match res {
                    Ok(s) => rep.record("coproduct-rule", el, scal(s)),
                    Err(e) => rep.error("coproduct-rule", el, e),
                }
            }
        }
    }

    // relations pair to zero against all monomials up to degree 3
    let ub3 = u.basis(degree.max(3));
    let ab3 = a.basis(degree.max(3));
    for (i, r) in u.relations.iter().enumerate() {
        for x in &ab3 {
            let el = format!("<relation {i}, {}>", aal.format_word(x));
            match p.pair(r, &word_poly(x)) {
                Ok(s) => rep.record("acting-relations", el, scal(s)),
                Err(e) => rep.error("acting-relations", el, e),
            }
        }
    }
    for (i, r) in a.relations.iter().enumerate() {
        for h in &ub3 {
            let el = format!("<{}, relation {i}>", ual.format_word(h));
            match p.pair(&word_poly(h), r) {
                Ok(s) => rep.record("target-relations", el, scal(s)),
                Err(e) => rep.error("target-relations", el, e),
            }
        }
    }
    rep
}

/// The phase of the star on H⊗A: (h⊗a)* = φ(δ(h), δ(a)) h*⊗a* with
/// φ(x, y) = b^x u^{−2xy}, where b = e^α.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarPhaseModel {
    pub base: Scalar,
}

impl Default for StarPhaseModel {
    fn default() -> Self {
        StarPhaseModel { base: Scalar::one() }
    }
}

impl StarPhaseModel {
    /// α left free, carried by the parameter slot `slot`.
    pub fn free(slot: u8) -> StarPhaseModel {
        StarPhaseModel { base: Scalar::param(slot) }
    }

    pub fn phi(&self, x: i32, y: i32) -> Scalar {
        let b = self.base.pow(x).expect("nonzero base");
        &b * &Scalar::u_pow(-2 * x * y)
    }

    /// Both functional equations on every integer tuple in `range`.
    pub fn check_functional_equations(&self, range: core::ops::RangeInclusive<i32>) -> AxiomReport {
        let mut rep = AxiomReport::default();
        let r: Vec<i32> = range.collect();
        let res = |l: Scalar, rr: Scalar| {
            let d = &l - &rr;
            if d.is_zero() {
                None
            } else {
                Some(format!("{d}"))
            }
        };
        // φ(g+h, a) = φ(h, g+a) φ(g, a) u^{2hg}
        for &g in &r {
            for &h in &r {
                for &a in &r {
                    let l = self.phi(g + h, a);
                    let rr = &(&self.phi(h, g + a) * &self.phi(g, a)) * &Scalar::u_pow(2 * h * g);
                    rep.record("star-phase-product", format!("g={g} h={h} a={a}"), res(l, rr));
                }
            }
        }
        // φ(h₁+h₂, a+b) = φ(h₁, a) φ(h₂, b) u^{−2h₂a} u^{−2h₁b}
        for &h1 in &r {
            for &h2 in &r {
                for &a in &r {
                    for &b in &r {
                        let l = self.phi(h1 + h2, a + b);
                        let rr = &(&self.phi(h1, a) * &self.phi(h2, b)) * &Scalar::u_pow(-2 * h2 * a - 2 * h1 * b);
                        rep.record("star-phase-coproduct", format!("h1={h1} h2={h2} a={a} b={b}"), res(l, rr));
                    }
                }
            }
        }
        rep
    }
}

/// (h ⊳ a)* = φ(δ(S(h)), δ(a)) (S(h))* ⊳ a* on generators h and normal
/// words a up to `degree`.
pub fn check_star_compatibility(action: &dyn Action, model: &StarPhaseModel, degree: usize) -> AxiomReport {
    let mut rep = AxiomReport::default();
    let (hp, ap) = (action.acting(), action.target());
    let (hal, aal) = (&hp.alphabet, &ap.alphabet);
    for g in 0..hal.len() {
        let h = hal.word(&[g as Gen]);
        for a in &ap.basis(degree) {
            let el = format!("{} ⊳ {}", hal.format_word(&h), aal.format_word(a));
            match star_residual(action, model, &h, a) {
                Ok(r) => rep.zero("star-compatibility", el, &r, aal),
                Err(e) => rep.error("star-compatibility", el, e),
            }
        }
    }
    rep
}

fn star_residual(action: &dyn Action, model: &StarPhaseModel, h: &Word, a: &Word) -> Result<NCPoly, HopfError> {
    let (hp, ap) = (action.acting(), action.target());
    let lhs = ap.nf(&ap.star(&action.act_word(h, a)?))?;
    let a_star = ap.star(&word_poly(a));
    let da = ap.alphabet.word_delta(a);
    let mut rhs = NCPoly::zero();
    for (w, c) in antipode(hp, &word_poly(h))?.terms() {
        let hs = hp.star(&NCPoly::term(w.clone(), c.clone()));
        let ph = model.phi(hp.alphabet.word_delta(w), da);
        rhs = rhs.add(&action.act(&hs, &a_star)?.scale(&ph));
    }
    Ok(lhs.sub(&ap.nf(&rhs)?))
}

/// Constraints on b = e^α from star compatibility: each pair (x, r) says
/// b^x = r. The exponent α vanishes when every r is 1 (α real).
pub fn star_phase_constraints(action: &dyn Action, degree: usize) -> Result<Vec<(i32, Scalar)>, HopfError> {
    let (hp, ap) = (action.acting(), action.target());
    let model = StarPhaseModel::default();
    let mut out = Vec::new();
    for g in 0..hp.alphabet.len() {
        let h = hp.alphabet.word(&[g as Gen]);
        for a in &ap.basis(degree) {
            let lhs = ap.nf(&ap.star(&action.act_word(&h, a)?))?;
            let a_star = ap.star(&word_poly(a));
            let da = ap.alphabet.word_delta(a);
            let mut rhs = NCPoly::zero();
            let mut x = 0;
            for (w, c) in antipode(hp, &word_poly(&h))?.terms() {
                x = hp.alphabet.word_delta(w);
                let hs = hp.star(&NCPoly::term(w.clone(), c.clone()));
                rhs = rhs.add(&action.act(&hs, &a_star)?.scale(&model.phi(x, da)));
            }
            let rhs = ap.nf(&rhs)?;
            if x == 0 {
                continue;
            }
            if let Some((w, c)) = rhs.lead() {
                let ratio = lhs.coeff(w).div(c).map_err(|_| HopfError::MissingTable("ratio"))?;
                out.push((x, ratio));
            }
        }
    }
    Ok(out)
}

/// Left action of û(2) on SU_{q,φ}(2) tabulated on generators.
pub fn left_action_table(action: &dyn Action) -> Result<Vec<(String, String, NCPoly)>, HopfError> {
    let (hp, ap) = (action.acting(), action.target());
    let mut out = Vec::new();
    for g in 0..hp.alphabet.len() as Gen {
        for x in 0..ap.alphabet.len() as Gen {
            let v = action.act_word(&hp.alphabet.word(&[g]), &ap.alphabet.word(&[x]))?;
            out.push((hp.alphabet.gen(g).id.clone(), ap.alphabet.gen(x).id.clone(), v));
        }
    }
    Ok(out)
}

/// Right action tabulated on generators.
pub fn right_action_table(p: &Pairing<'_>) -> Result<Vec<(String, String, NCPoly)>, HopfError> {
    let mut out = Vec::new();
    for x in 0..p.a.alphabet.len() as Gen {
        for g in 0..p.u.alphabet.len() as Gen {
            let v = p.right_action_word(&p.a.alphabet.word(&[x]), &p.u.alphabet.word(&[g]))?;
            out.push((p.a.alphabet.gen(x).id.clone(), p.u.alphabet.gen(g).id.clone(), v));
        }
    }
    Ok(out)
}

/// Substitute u → 1 in a polynomial.
pub fn at_trivial_phase(p: &NCPoly) -> NCPoly {
    p.map_coeffs(|s| s.subs(&[(Var::U, Scalar::one())]).expect("u = 1 is regular"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{su_qphi2, uq_hat_u2};

    #[test]
    fn pairing_examples() {
        let (u, a) = (uq_hat_u2(), su_qphi2());
        let p = Pairing::standard(&u, &a);
        assert_eq!(p.pair(&u.gen("k"), &a.gen("alpha")).unwrap(), sc(1, -1, 2));
        assert_eq!(p.pair(&u.gen("e"), &a.gen("gamma_star")).unwrap(), sc(-1, -2, -4));
        let aa = a.mono(Scalar::one(), &["alpha", "alpha"]);
        assert_eq!(p.pair(&u.gen("k"), &aa).unwrap(), sc(1, -2, 4));
        assert!(p.pair(&NCPoly::one(), &NCPoly::one()).unwrap().is_one());
    }

    #[test]
    fn left_action_examples() {
        let (u, a) = (uq_hat_u2(), su_qphi2());
        let act = LeftAction::new(Pairing::standard(&u, &a));
        assert_eq!(act.act(&u.gen("f"), &a.gen("gamma")).unwrap(), a.gen("alpha_star"));
        assert_eq!(
            act.act(&u.gen("e"), &a.gen("gamma_star")).unwrap(),
            a.mono(sc(-1, -2, -4), &["alpha"])
        );
    }

    #[test]
    fn right_action_examples() {
        let (u, a) = (uq_hat_u2(), su_qphi2());
        let p = Pairing::standard(&u, &a);
        assert_eq!(p.right_action(&a.gen("alpha"), &u.gen("e")).unwrap(), a.gen("gamma"));
        assert_eq!(p.right_action(&a.gen("gamma"), &u.gen("f")).unwrap(), a.gen("alpha"));
        let x = u.mono(Scalar::one(), &["k", "kstar"]).sub(&NCPoly::one());
        let gg = a.mono(Scalar::one(), &["gamma_star", "gamma"]);
        assert!(p.right_action(&gg, &x).unwrap().is_zero());
    }

    #[test]
    fn right_module_algebra() {
        let (u, a) = (uq_hat_u2(), su_qphi2());
        let p = Pairing::standard(&u, &a);
        let rep = check_right_module_algebra(&p, 2);
        assert!(rep.pass(), "{:?}", rep.failures().next());
        assert!(rep.summary().iter().any(|(k, n, _)| k == "product-law" && *n > 0));
    }

    #[test]
    fn adjoint_examples() {
        let u = uq_hat_u2();
        let ad = AdjointAction { p: &u };
        assert_eq!(ad.act(&u.gen("k"), &u.gen("e")).unwrap(), u.mono(sc(1, -2, 4), &["e"]));
        assert_eq!(ad.act(&NCPoly::one(), &u.gen("f")).unwrap(), u.gen("f"));
        assert!(ad.act(&u.gen("e"), &NCPoly::one()).unwrap().is_zero());
    }

    #[test]
    fn cross_braiding_inverse() {
        let (u, a) = (uq_hat_u2(), su_qphi2());
        let x = CrossBraiding { h: &u, a: &a.alphabet };
        for g in 0..u.alphabet.len() as Gen {
            for y in 0..a.alphabet.len() as Gen {
                let (hw, aw) = (u.alphabet.word(&[g]), a.alphabet.word(&[y]));
                assert!((&x.xi(&hw, &aw) * &x.xi_inv(&aw, &hw)).is_one());
            }
        }
        let e = u.word(&["e"]);
        let g = a.word(&["gamma"]);
        assert_eq!(x.xi(&e, &g), Scalar::u_pow(8));
    }

    #[test]
    fn star_phase_model_equations() {
        let m = StarPhaseModel::default();
        assert!(m.check_functional_equations(-2..=2).pass());
        let free = StarPhaseModel::free(7);
        assert!(free.check_functional_equations(-1..=1).pass());
    }
}


