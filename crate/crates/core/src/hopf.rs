//! Braided coalgebra structure: coproduct, counit, antipode, the braiding Ψ,
//! the grading twist and the axiom suite.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::ncpoly::{Alphabet, NCPoly, NcError, Word};
use crate::presentations::{Presentation, PresentationError};
use crate::scalars::Scalar;
pub use crate::tensor::TensorPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("presentation has no {0} table")]
    MissingTable(&'static str),
    #[error("not homogeneous in (mu, nu): {0}")]
    UngradedGenerator(String),
    #[error(transparent)]
    Rewrite(#[from] NcError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// u^{2 d1 d2}, the braiding phase between degrees d1 and d2.
pub fn psi_phase(d1: i32, d2: i32) -> Scalar {
    Scalar::u_pow(2 * d1 * d2)
}

/// One checked identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomEntry {
    pub axiom: String,
    pub element: String,
    /// Rendered residual; empty when the identity holds.
    pub residual: String,
    pub pass: bool,
}

/// Outcome of a suite of identities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub entries: Vec<AxiomEntry>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn record(&mut self, axiom: &str, element: String, residual: Option<String>) {
        let pass = residual.is_none();
        self.entries.push(AxiomEntry {
            axiom: axiom.to_string(),
            element,
            residual: residual.unwrap_or_default(),
            pass,
        });
    }

    /// Record a polynomial residual that must vanish.
    pub fn zero(&mut self, axiom: &str, element: String, r: &NCPoly, al: &Alphabet) {
        let res = if r.is_zero() { None } else { Some(format!("{}", r.display(al))) };
        self.record(axiom, element, res);
    }

    pub fn zero_tensor(&mut self, axiom: &str, element: String, r: &TensorPoly, al: &Alphabet) {
        let res = if r.is_zero() { None } else { Some(format!("{}", r.display(al))) };
        self.record(axiom, element, res);
    }

    /// Record a failure caused by an error during evaluation.
    pub fn error(&mut self, axiom: &str, element: String, e: impl core::fmt::Display) {
        self.record(axiom, element, Some(format!("error: {e}")));
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.entries.extend(other.entries);
    }

    /// Count of checks per axiom name, sorted by name.
    pub fn summary(&self) -> Vec<(String, usize, usize)> {
        let mut m: alloc::collections::BTreeMap<String, (usize, usize)> = Default::default();
        for e in &self.entries {
            let v = m.entry(e.axiom.clone()).or_default();
            v.0 += 1;
            if e.pass {
                v.1 += 1;
            }
        }
        m.into_iter().map(|(k, (n, p))| (k, n, p)).collect()
    }
}

fn word_delta(al: &Alphabet, w: &Word) -> i32 {
    al.word_delta(w)
}

/// The phase u^{2e} in a braided presentation, 1 otherwise.
pub fn phase(p: &Presentation, e: i32) -> Scalar {
    if p.braided {
        psi_phase(e, 1)
    } else {
        Scalar::one()
    }
}

/// Braided product of two tensors of equal rank:
/// (x_1⊗…⊗x_n)(y_1⊗…⊗y_n) = Π_{i>j} u^{2δ(x_i)δ(y_j)} x_1y_1 ⊗ … ⊗ x_ny_n.
pub fn braided_mul(p: &Presentation, x: &TensorPoly, y: &TensorPoly) -> Result<TensorPoly, NcError> {
    braided_mul_raw(p, x, y).normalize(&p.rules)
}

/// Braided product without reduction: slots are plain concatenations.
pub fn braided_mul_raw(p: &Presentation, x: &TensorPoly, y: &TensorPoly) -> TensorPoly {
    let al = &p.alphabet;
    let n = x.rank();
    let mut raw = TensorPoly::zero(n);
    for (xs, xc) in x.terms() {
        let dx: Vec<i32> = xs.iter().map(|w| word_delta(al, w)).collect();
        for (ys, yc) in y.terms() {
            let dy: Vec<i32> = ys.iter().map(|w| word_delta(al, w)).collect();
            let mut e = 0;
            for i in 0..n {
                for j in 0..i {
                    e += dx[i] * dy[j];
                }
            }
            let words: Vec<Word> = xs.iter().zip(ys.iter()).map(|(a, b)| a.concat(b)).collect();
            raw.add_term(words, &(xc * yc) * &phase(p, e));
        }
    }
    raw
}

fn coproduct_table(p: &Presentation) -> Result<&Vec<TensorPoly>, HopfError> {
    p.coproduct.as_ref().ok_or(HopfError::MissingTable("coproduct"))
}

/// Δ of a word, extended multiplicatively through the braided product.
pub fn coproduct_word(p: &Presentation, w: &Word) -> Result<TensorPoly, HopfError> {
    let table = coproduct_table(p)?;
    let mut acc = TensorPoly::one(2);
    for &g in w.gens() {
        acc = braided_mul(p, &acc, &table[g as usize])?;
    }
    Ok(acc)
}

/// Δ of a word without reducing the legs; legs are products of table legs.
pub fn coproduct_word_raw(p: &Presentation, w: &Word) -> Result<TensorPoly, HopfError> {
    let table = coproduct_table(p)?;
    let mut acc = TensorPoly::one(2);
    for &g in w.gens() {
        acc = braided_mul_raw(p, &acc, &table[g as usize]);
    }
    Ok(acc)
}

/// Δ of a polynomial (each word expanded as written, then reduced).
pub fn coproduct(p: &Presentation, x: &NCPoly) -> Result<TensorPoly, HopfError> {
    let mut acc = TensorPoly::zero(2);
    for (w, c) in x.terms() {
        acc = acc.add(&coproduct_word(p, w)?.scale(c));
    }
    Ok(acc)
}

pub fn counit(p: &Presentation, x: &NCPoly) -> Result<Scalar, HopfError> {
    p.counit_poly(x).ok_or(HopfError::MissingTable("counit"))
}

/// S of a word: S(xy) = u^{2δ(x)δ(y)} S(y)S(x), applied letter by letter.
pub fn antipode_word(p: &Presentation, w: &Word) -> Result<NCPoly, HopfError> {
    let table = p.antipode.as_ref().ok_or(HopfError::MissingTable("antipode"))?;
    let al = &p.alphabet;
    let mut acc = NCPoly::one();
    let mut d_acc = 0;
    // acc = S(g_1 … g_i); S(g_1…g_i g_{i+1}) = u^{2δ(g_1…g_i)δ(g_{i+1})} S(g_{i+1}) S(g_1…g_i)
    for &g in w.gens() {
        let dg = al.delta(g);
        let sg = &table[g as usize];
        acc = p.mul(sg, &acc)?.scale(&phase(p, d_acc * dg));
        d_acc += dg;
    }
    Ok(acc)
}

pub fn antipode(p: &Presentation, x: &NCPoly) -> Result<NCPoly, HopfError> {
    let mut acc = NCPoly::zero();
    for (w, c) in x.terms() {
        acc = acc.add(&antipode_word(p, w)?.scale(c));
    }
    Ok(acc)
}

/// Ψ on two slots of a tensor: swap slots i and i+1 with the phase u^{2δδ}.
pub fn psi_at(p: &Presentation, t: &TensorPoly, i: usize, inverse: bool) -> TensorPoly {
    let al = &p.alphabet;
    let mut r = TensorPoly::zero(t.rank());
    for (ws, c) in t.terms() {
        let e = word_delta(al, &ws[i]) * word_delta(al, &ws[i + 1]);
        let ph = phase(p, if inverse { -e } else { e });
        let mut v = ws.clone();
        v.swap(i, i + 1);
        r.add_term(v, c * &ph);
    }
    r
}

/// Ψ(x⊗y) componentwise on homogeneous parts.
pub fn braid_psi(p: &Presentation, x: &NCPoly, y: &NCPoly) -> TensorPoly {
    psi_at(p, &TensorPoly::from_slots(&[x.clone(), y.clone()]), 0, false)
}

pub fn braid_psi_inv(p: &Presentation, x: &NCPoly, y: &NCPoly) -> TensorPoly {
    psi_at(p, &TensorPoly::from_slots(&[x.clone(), y.clone()]), 0, true)
}

fn apply_counit_slot(p: &Presentation, t: &TensorPoly, i: usize) -> Result<TensorPoly, HopfError> {
    let table = p.counit.as_ref().ok_or(HopfError::MissingTable("counit"))?;
    let _ = table;
    Ok(t.expand_slot(i, 0, |w| {
        let c = p.counit_word(w).unwrap_or_else(Scalar::zero);
        Ok(TensorPoly::simple(Vec::new(), c))
    })?)
}

fn apply_coproduct_slot(p: &Presentation, t: &TensorPoly, i: usize) -> Result<TensorPoly, HopfError> {
    let mut err = None;
    let r = t.expand_slot(i, 2, |w| match coproduct_word(p, w) {
        Ok(x) => Ok(x),
        Err(HopfError::Rewrite(e)) => Err(e),
        Err(e) => {
            err = Some(e);
            Ok(TensorPoly::zero(2))
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(r),
    }
}

fn apply_antipode_slot(p: &Presentation, t: &TensorPoly, i: usize) -> Result<TensorPoly, HopfError> {
    let mut err = None;
    let r = t.map_slot(i, |w| match antipode_word(p, w) {
        Ok(x) => Ok(x),
        Err(HopfError::Rewrite(e)) => Err(e),
        Err(e) => {
            err = Some(e);
            Ok(NCPoly::zero())
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(r),
    }
}

/// (Δ⊗id)Δ(x) − (id⊗Δ)Δ(x).
pub fn coassociativity_residual(p: &Presentation, x: &NCPoly) -> Result<TensorPoly, HopfError> {
    let d = coproduct(p, x)?;
    let l = apply_coproduct_slot(p, &d, 0)?;
    let r = apply_coproduct_slot(p, &d, 1)?;
    Ok(l.sub(&r).normalize(&p.rules)?)
}

/// m(S⊗id)Δ(x) and m(id⊗S)Δ(x).
pub fn antipode_sides(p: &Presentation, x: &NCPoly) -> Result<(NCPoly, NCPoly), HopfError> {
    let d = coproduct(p, x)?;
    let l = apply_antipode_slot(p, &d, 0)?.multiply_out(&p.rules)?;
    let r = apply_antipode_slot(p, &d, 1)?.multiply_out(&p.rules)?;
    Ok((l, r))
}

/// (ε⊗id)Δ(x) and (id⊗ε)Δ(x).
pub fn counit_sides(p: &Presentation, x: &NCPoly) -> Result<(NCPoly, NCPoly), HopfError> {
    let d = coproduct(p, x)?;
    let l = apply_counit_slot(p, &d, 0)?.to_poly();
    let r = apply_counit_slot(p, &d, 1)?.to_poly();
    Ok((p.nf(&l)?, p.nf(&r)?))
}

/// S(xy) via the composite m∘Ψ∘(S⊗S) on x⊗y.
pub fn antipode_composite(p: &Presentation, x: &Word, y: &Word) -> Result<NCPoly, HopfError> {
    let sx = antipode_word(p, x)?;
    let sy = antipode_word(p, y)?;
    let t = braid_psi(p, &sx, &sy);
    Ok(t.multiply_out(&p.rules)?)
}

/// Check all braided Hopf axioms on normal words up to `degree`.
pub fn check_braided_hopf(p: &Presentation, degree: usize) -> AxiomReport {
    let mut rep = AxiomReport::default();
    let al = &p.alphabet;
    let basis = p.basis(degree);
    let gens: Vec<Word> = (0..al.len()).map(|g| al.word(&[g as u8])).collect();
    let name = |w: &Word| al.format_word(w);

    for x in &basis {
        let xp = NCPoly::from_word(x.clone());
        match coassociativity_residual(p, &xp) {
            Ok(r) => rep.zero_tensor("coassociativity", name(x), &r, al),
            Err(e) => rep.error("coassociativity", name(x), e),
        }
        match counit_sides(p, &xp) {
            Ok((l, r)) => {
                rep.zero("counit-left", name(x), &l.sub(&xp), al);
                rep.zero("counit-right", name(x), &r.sub(&xp), al);
            }
            Err(e) => rep.error("counit", name(x), e),
        }
        match (antipode_sides(p, &xp), counit(p, &xp)) {
            (Ok((l, r)), Ok(eps)) => {
                let unit = NCPoly::constant(eps);
                rep.zero("antipode-left", name(x), &l.sub(&unit), al);
                rep.zero("antipode-right", name(x), &r.sub(&unit), al);
            }
            (Err(e), _) | (_, Err(e)) => rep.error("antipode", name(x), e),
        }
    }

    // multiplicativity of Δ, ε and anti-multiplicativity of S on products
    for x in &basis {
        for y in &basis {
            if x.len() + y.len() > degree || x.is_empty() || y.is_empty() {
                continue;
            }
            let el = format!("{} | {}", name(x), name(y));
            let xy = match p.nf(&NCPoly::from_word(x.concat(y))) {
                Ok(v) => v,
                Err(e) => {
                    rep.error("product", el, e);
                    continue;
                }
            };
            let res = (|| -> Result<_, HopfError> {
                let lhs = coproduct(p, &xy)?;
                let rhs = braided_mul(p, &coproduct_word(p, x)?, &coproduct_word(p, y)?)?;
                let d_res = lhs.sub(&rhs);
                let e_res = &counit(p, &xy)? - &(&counit(p, &NCPoly::from_word(x.clone()))?
                    * &counit(p, &NCPoly::from_word(y.clone()))?);
                let s_lhs = antipode(p, &xy)?;
                let s_rhs = p
                    .mul(&antipode_word(p, y)?, &antipode_word(p, x)?)?
                    .scale(&phase(p, al.word_delta(x) * al.word_delta(y)));
                let s_comp = antipode_composite(p, x, y)?;
                Ok((d_res, e_res, s_lhs.sub(&s_rhs), s_lhs.sub(&s_comp)))
            })();
            match res {
                Ok((d, e, s, sc)) => {
                    rep.zero_tensor("coproduct-homomorphism", el.clone(), &d, al);
                    let er = if e.is_zero() { None } else { Some(format!("{e}")) };
                    rep.record("counit-homomorphism", el.clone(), er);
                    rep.zero("antipode-antihomomorphism", el.clone(), &s, al);
                    rep.zero("antipode-composite", el, &sc, al);
                }
                Err(e) => rep.error("product", el, e),
            }
        }
    }

    // structure maps vanish on every relation, evaluated word by word before reduction
    for (i, r) in p.relations.iter().enumerate() {
        let el = format!("relation {i}: {}", r.display(al));
        match coproduct(p, r) {
            Ok(t) => rep.zero_tensor("coproduct-on-relations", el.clone(), &t, al),
            Err(e) => rep.error("coproduct-on-relations", el.clone(), e),
        }
        match antipode(p, r) {
            Ok(s) => rep.zero("antipode-on-relations", el.clone(), &s, al),
            Err(e) => rep.error("antipode-on-relations", el.clone(), e),
        }
        match counit(p, r) {
            Ok(c) => rep.record(
                "counit-on-relations",
                el.clone(),
                if c.is_zero() { None } else { Some(format!("{c}")) },
            ),
            Err(e) => rep.error("counit-on-relations", el.clone(), e),
        }
        if p.has_star {
            match p.nf(&p.star(r)) {
                Ok(s) => rep.zero("star-closure", el, &s, al),
                Err(e) => rep.error("star-closure", el, e),
            }
        }
    }

    // braiding: hexagons, naturality with Δ, invertibility
    for x in &gens {
        for y in &gens {
            for z in &gens {
                let t = TensorPoly::simple(alloc::vec![x.clone(), y.clone(), z.clone()], Scalar::one());
                let el = format!("{} ⊗ {} ⊗ {}", name(x), name(y), name(z));
                let res = (|| -> Result<_, HopfError> {
                    // Ψ(m⊗id) = (id⊗m)(Ψ⊗id)(id⊗Ψ)
                    let l1 = psi_at(p, &t.contract(0, &p.rules)?, 0, false);
                    let r1 = psi_at(p, &psi_at(p, &t, 1, false), 0, false).contract(1, &p.rules)?;
                    // Ψ(id⊗m) = (m⊗id)(id⊗Ψ)(Ψ⊗id)
                    let l2 = psi_at(p, &t.contract(1, &p.rules)?, 0, false);
                    let r2 = psi_at(p, &psi_at(p, &t, 0, false), 1, false).contract(0, &p.rules)?;
                    Ok((l1.sub(&r1), l2.sub(&r2)))
                })();
                match res {
                    Ok((a, b)) => {
                        rep.zero_tensor("hexagon-product-left", el.clone(), &a, al);
                        rep.zero_tensor("hexagon-product-right", el, &b, al);
                    }
                    Err(e) => rep.error("hexagon", el, e),
                }
            }
        }
    }
    for x in &gens {
        for y in &gens {
            let el = format!("{} ⊗ {}", name(x), name(y));
            let t = TensorPoly::simple(alloc::vec![x.clone(), y.clone()], Scalar::one());
            let back = psi_at(p, &psi_at(p, &t, 0, false), 0, true);
            rep.zero_tensor("psi-invertible", el.clone(), &back.sub(&t), al);
            let res = (|| -> Result<_, HopfError> {
                // (Δ⊗id)Ψ(x⊗y) = (id⊗Ψ)(Ψ⊗id)(x⊗Δy)
                let l = apply_coproduct_slot(p, &psi_at(p, &t, 0, false), 0)?;
                let r = psi_at(p, &psi_at(p, &apply_coproduct_slot(p, &t, 1)?, 0, false), 1, false);
                // (id⊗Δ)Ψ(x⊗y) = (Ψ⊗id)(id⊗Ψ)(Δx⊗y)
                let l2 = apply_coproduct_slot(p, &psi_at(p, &t, 0, false), 1)?;
                let r2 = psi_at(p, &psi_at(p, &apply_coproduct_slot(p, &t, 0)?, 1, false), 0, false);
                Ok((l.sub(&r), l2.sub(&r2)))
            })();
            match res {
                Ok((a, b)) => {
                    rep.zero_tensor("psi-coproduct-left", el.clone(), &a, al);
                    rep.zero_tensor("psi-coproduct-right", el, &b, al);
                }
                Err(e) => rep.error("psi-coproduct", el, e),
            }
        }
    }

    if p.has_star {
        for x in &gens {
            // S(S(x*)*) = x
            let res = (|| -> Result<_, HopfError> {
                let xs = p.star(&NCPoly::from_word(x.clone()));
                let a = antipode(p, &xs)?;
                let b = antipode(p, &p.star(&a))?;
                Ok(b.sub(&NCPoly::from_word(x.clone())))
            })();
            match res {
                Ok(r) => rep.zero("antipode-star", name(x), &r, al),
                Err(e) => rep.error("antipode-star", name(x), e),
            }
        }
    }
    rep
}

/// θ(w) = Σ_{i<j} μ_i ν_j − μ_j ν_i, the twist exponent of a word.
pub fn twist_exponent(al: &Alphabet, w: &Word) -> i32 {
    let g = w.gens();
    let mut e = 0;
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let (a, b) = (al.gen(g[i]), al.gen(g[j]));
            e += a.mu * b.nu - b.mu * a.nu;
        }
    }
    e
}

fn check_bihomogeneous(al: &Alphabet, p: &NCPoly, what: &str) -> Result<(), HopfError> {
    let mut it = p.terms().map(|(w, _)| al.word_mu_nu(w));
    if let Some(first) = it.next() {
        if it.any(|d| d != first) {
            return Err(HopfError::UngradedGenerator(String::from(what)));
        }
    }
    Ok(())
}

/// Rewrite a polynomial written with the old product in terms of the new one.
fn to_twisted(al: &Alphabet, p: &NCPoly) -> NCPoly {
    let mut r = NCPoly::zero();
    for (w, c) in p.terms() {
        r.add_term(w.clone(), c * &Scalar::u_pow(-twist_exponent(al, w)));
    }
    r
}

/// Deform a (μ, ν)-graded Hopf algebra into a braided one:
/// x∗y = u^{μ(x)ν(y) − μ(y)ν(x)} xy, Δ_φ(x) = Σ u^{δ(x₁)δ(x₂)} x₁⊗x₂,
/// S_φ(x) = u^{δ(x)²} S(x), ε unchanged.
pub fn twist(source: &Presentation) -> Result<Presentation, HopfError> {
    let al = &source.alphabet;
    for r in &source.relations {
        check_bihomogeneous(al, r, &format!("{}", r.display(al)))?;
    }
    let cop = coproduct_table(source)?;
    let ant = source.antipode.as_ref().ok_or(HopfError::MissingTable("antipode"))?;
    let counit = source.counit.clone().ok_or(HopfError::MissingTable("counit"))?;
    let relations: Vec<NCPoly> = source.relations.iter().map(|r| to_twisted(al, r)).collect();
    let mut new_cop = Vec::new();
    for (g, t) in cop.iter().enumerate() {
        let mut r = TensorPoly::zero(2);
        for (ws, c) in t.terms() {
            let e = al.word_delta(&ws[0]) * al.word_delta(&ws[1])
                - twist_exponent(al, &ws[0])
                - twist_exponent(al, &ws[1]);
            r.add_term(ws.clone(), c * &Scalar::u_pow(e));
        }
        let _ = g;
        new_cop.push(r);
    }
    let mut new_ant = Vec::new();
    for (g, s) in ant.iter().enumerate() {
        let d = al.delta(g as u8);
        new_ant.push(to_twisted(al, s).scale(&Scalar::u_pow(d * d)));
    }
    let name = format!("{}-twisted", source.name);
    let p = Presentation::from_parts(&name, al.clone(), relations, source.has_star, source.params.clone())?;
    let p = p.with_hopf(new_cop, counit, new_ant)?;
    Ok(Presentation { braided: true, ..p })
}

/// Apply a scalar substitution to every table of a presentation.
pub fn map_scalars(
    source: &Presentation,
    f: impl Fn(&Scalar) -> Scalar,
) -> Result<Presentation, HopfError> {
    let relations: Vec<NCPoly> = source.relations.iter().map(|r| r.map_coeffs(&f)).collect();
    let p = Presentation::from_parts(
        &source.name,
        source.alphabet.clone(),
        relations,
        source.has_star,
        source.params.clone(),
    )?;
    match (&source.coproduct, &source.counit, &source.antipode) {
        (Some(c), Some(e), Some(s)) => {
            let cop = c
                .iter()
                .map(|t| {
                    let mut r = TensorPoly::zero(2);
                    for (ws, v) in t.terms() {
                        r.add_term(ws.clone(), f(v));
                    }
                    r
                })
                .collect();
            let eps = e.iter().map(&f).collect();
            let ant = s.iter().map(|x| x.map_coeffs(&f)).collect();
            Ok(Presentation { braided: source.braided, ..p.with_hopf(cop, eps, ant)? })
        }
        _ => Ok(Presentation { braided: source.braided, ..p }),
    }
}

/// Same relations ideal and structure tables, compared via normal forms.
pub fn same_structure(a: &Presentation, b: &Presentation) -> Result<bool, HopfError> {
    if a.alphabet != b.alphabet {
        return Ok(false);
    }
    for r in &a.relations {
        if !b.nf(r)?.is_zero() {
            return Ok(false);
        }
    }
    for r in &b.relations {
        if !a.nf(r)?.is_zero() {
            return Ok(false);
        }
    }
    if let (Some(ca), Some(cb)) = (&a.coproduct, &b.coproduct) {
        for (x, y) in ca.iter().zip(cb.iter()) {
            if x.normalize(&b.rules)? != y.normalize(&b.rules)? {
                return Ok(false);
            }
        }
    }
    if let (Some(sa), Some(sb)) = (&a.antipode, &b.antipode) {
        for (x, y) in sa.iter().zip(sb.iter()) {
            if b.nf(x)? != b.nf(y)? {
                return Ok(false);
            }
        }
    }
    Ok(a.counit == b.counit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{su_qphi2, uq_hat_u2};
    use crate::presentations::sc;
    use crate::scalars::Var;

    #[test]
    fn coproduct_examples() {
        let p = su_qphi2();
        let d = coproduct(&p, &p.gen("alpha")).unwrap();
        let expect = TensorPoly::from_slots(&[p.gen("alpha"), p.gen("alpha")])
            .sub(&TensorPoly::from_slots(&[p.gen("gamma_star"), p.gen("gamma")]).scale(&sc(1, 2, -4)));
        assert_eq!(d, expect);
        let h = uq_hat_u2();
        let kk = h.mono(Scalar::one(), &["k", "kstar"]);
        let d = coproduct(&h, &kk).unwrap();
        assert_eq!(d, TensorPoly::from_slots(&[kk.clone(), kk]));
        assert_eq!(coproduct(&h, &NCPoly::one()).unwrap(), TensorPoly::one(2));
    }

    #[test]
    fn antipode_examples() {
        let p = su_qphi2();
        let gg = p.mono(Scalar::one(), &["gamma", "gamma"]);
        assert_eq!(antipode(&p, &gg).unwrap(), p.mono(sc(1, 4, 16), &["gamma", "gamma"]));
        let h = uq_hat_u2();
        assert!(counit(&h, &h.mono(Scalar::one(), &["f", "e"])).unwrap().is_zero());
        let kk = h.mono(Scalar::one(), &["k", "k_inv"]);
        assert!(antipode(&h, &kk).unwrap().is_one_poly());
    }

    #[test]
    fn braiding_examples() {
        let h = uq_hat_u2();
        let t = braid_psi(&h, &h.gen("e"), &h.gen("f"));
        assert_eq!(t, TensorPoly::from_slots(&[h.gen("f"), h.gen("e")]).scale(&Scalar::u_pow(-8)));
        let p = su_qphi2();
        let t = braid_psi(&p, &p.gen("gamma"), &p.gen("gamma"));
        assert_eq!(t, TensorPoly::from_slots(&[p.gen("gamma"), p.gen("gamma")]).scale(&Scalar::u_pow(8)));
        let t = braid_psi(&h, &h.gen("k"), &h.gen("e"));
        assert_eq!(t, TensorPoly::from_slots(&[h.gen("e"), h.gen("k")]));
    }

    #[test]
    fn twist_reproduces_braided_presentations() {
        let one = |s: &Scalar| s.subs(&[(Var::U, Scalar::one())]).unwrap();
        for p in [su_qphi2(), uq_hat_u2()] {
            let classical = map_scalars(&p, one).unwrap();
            let tw = twist(&classical).unwrap();
            assert!(same_structure(&tw, &p).unwrap(), "{}", p.name);
        }
        // at φ = 0 the twist changes nothing
        let p = su_qphi2();
        let classical = map_scalars(&p, one).unwrap();
        let back = map_scalars(&twist(&classical).unwrap(), one).unwrap();
        assert!(same_structure(&back, &classical).unwrap());
    }

    #[test]
    fn suites_degree_three() {
        use crate::presentations::{uq_su2_classical, uq_u2};
        for p in [su_qphi2(), uq_hat_u2(), uq_u2(), uq_su2_classical()] {
            let rep = check_braided_hopf(&p, 3);
            if let Some(f) = rep.failures().next() {
                panic!("{}: {} {} {}", p.name, f.axiom, f.element, f.residual);
            }
            assert!(rep.entries.len() > 500);
        }
    }

    #[test]
    fn unbraided_suite_fails_with_phases() {
        use crate::presentations::uq_su2_classical;
        let p = Presentation { braided: true, ..uq_su2_classical() };
        let rep = check_braided_hopf(&p, 2);
        assert!(rep.failures().any(|f| f.axiom == "coproduct-homomorphism"));
    }
}

