//! Built-in presentations of the algebras and their structure tables.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::ncpoly::{Alphabet, GeneratorInfo, Gen, NCPoly, NcError, RewriteSystem, Word};
use crate::scalars::{Scalar, Var};
use crate::tensor::TensorPoly;

/// Parameter slot of the sphere constant λ.
pub const P_LAMBDA: u8 = 0;
/// Parameter slot of the sphere constant ρ.
pub const P_RHO: u8 = 1;
/// Parameter slot of λ' (unprimed-basis sphere constant).
pub const P_LAMBDA_PRIME: u8 = 2;
/// Parameter slot of ρ' (unprimed-basis sphere constant).
pub const P_RHO_PRIME: u8 = 3;
/// Parameter slot of the constant c of the alternate sphere presentation.
pub const P_C: u8 = 4;
/// Parameter slot of the rescaling constant of the alternate presentation.
pub const P_SCALE: u8 = 5;
/// Parameter slot of the constant ρ of the alternate presentation (ζ = u⁴/ρ).
pub const P_ALT_RHO: u8 = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("a star structure is not admissible for this sphere family")]
    StarNotAdmissible,
    #[error(transparent)]
    Rewrite(#[from] NcError),
}

/// A presented (braided) algebra with optional Hopf structure tables.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub alphabet: Alphabet,
    /// Stated relations followed by the generated conjugate and inverse ones.
    pub relations: Vec<NCPoly>,
    pub rules: RewriteSystem,
    pub coproduct: Option<Vec<TensorPoly>>,
    pub counit: Option<Vec<Scalar>>,
    pub antipode: Option<Vec<NCPoly>>,
    /// Whether the star table is part of the structure.
    pub has_star: bool,
    /// Whether products in tensor powers carry the phase u^{2δδ}.
    pub braided: bool,
    pub params: Vec<String>,
}

impl Presentation {
    pub fn gen(&self, id: &str) -> NCPoly {
        self.alphabet.gen_poly(id)
    }

    pub fn index(&self, id: &str) -> Gen {
        self.alphabet.index(id).unwrap_or_else(|| panic!("unknown generator {id}"))
    }

    /// Monomial `c · w` from generator ids.
    pub fn mono(&self, c: Scalar, ids: &[&str]) -> NCPoly {
        NCPoly::term(self.alphabet.word_of(ids).expect("known generators"), c)
    }

    pub fn word(&self, ids: &[&str]) -> Word {
        self.alphabet.word_of(ids).expect("known generators")
    }

    pub fn nf(&self, p: &NCPoly) -> Result<NCPoly, NcError> {
        self.rules.normal_form(p)
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly, NcError> {
        self.rules.multiply(a, b)
    }

    pub fn star(&self, p: &NCPoly) -> NCPoly {
        p.star(&self.alphabet)
    }

    /// Counit of a word (product of generator values).
    pub fn counit_word(&self, w: &Word) -> Option<Scalar> {
        let table = self.counit.as_ref()?;
        let mut c = Scalar::one();
        for &g in w.gens() {
            c = &c * &table[g as usize];
            if c.is_zero() {
                break;
            }
        }
        Some(c)
    }

    pub fn counit_poly(&self, p: &NCPoly) -> Option<Scalar> {
        let mut acc = Scalar::zero();
        for (w, c) in p.terms() {
            acc = &acc + &(c * &self.counit_word(w)?);
        }
        Some(acc)
    }

    /// Normal-form words of length ≤ n.
    pub fn basis(&self, n: usize) -> Vec<Word> {
        self.rules.normal_words(&self.alphabet, n)
    }

    /// Check grading, star closure, inverse pairing and counit homomorphism.
    pub fn validate(&self) -> Result<(), PresentationError> {
        let al = &self.alphabet;
        for (i, g) in al.gens.iter().enumerate() {
            let st = al.gens.get(g.star as usize).ok_or_else(|| {
                PresentationError::Validation(format!("star partner of {} out of range", g.id))
            })?;
            if st.star as usize != i {
                return Err(PresentationError::Validation(format!("star of star of {} is not itself", g.id)));
            }
            if self.has_star && (st.mu != -g.mu || st.nu != -g.nu) {
                return Err(PresentationError::Validation(format!("star of {} does not negate degrees", g.id)));
            }
            if let Some(inv) = g.inverse {
                let ig = al.gens.get(inv as usize).ok_or_else(|| {
                    PresentationError::Validation(format!("inverse of {} out of range", g.id))
                })?;
                if ig.mu != -g.mu || ig.nu != -g.nu || ig.inverse != Some(i as Gen) {
                    return Err(PresentationError::Validation(format!("inverse of {} inconsistent", g.id)));
                }
            }
        }
        for r in &self.relations {
            if r.delta_degree(al).is_err() {
                return Err(PresentationError::Validation(format!(
                    "relation {} is not delta-homogeneous",
                    r.display(al)
                )));
            }
        }
        self.rules.validate(al)?;
        if self.has_star {
            for r in &self.relations {
                if !self.nf(&self.star(r))?.is_zero() {
                    return Err(PresentationError::Validation(format!(
                        "star image of {} is not in the ideal",
                        r.display(al)
                    )));
                }
            }
        }
        if self.counit.is_some() {
            for r in &self.relations {
                let e = self.counit_poly(r).unwrap_or_else(Scalar::zero);
                if !e.is_zero() {
                    return Err(PresentationError::Validation(format!(
                        "counit does not vanish on {}",
                        r.display(al)
                    )));
                }
            }
        }
        if let Some(cop) = &self.coproduct {
            for (g, t) in cop.iter().enumerate() {
                let d = al.delta(g as Gen);
                for (ws, _) in t.terms() {
                    let dd: i32 = ws.iter().map(|w| al.word_delta(w)).sum();
                    if dd != d {
                        return Err(PresentationError::Validation(format!(
                            "coproduct of {} is not delta-homogeneous",
                            al.gen(g as Gen).id
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Assemble from parts: closes the relations under star and inverses
    /// and builds the rewrite system.
    pub fn from_parts(
        name: &str,
        alphabet: Alphabet,
        stated: Vec<NCPoly>,
        has_star: bool,
        params: Vec<String>,
    ) -> Result<Presentation, PresentationError> {
        let relations = close_relations(&alphabet, &stated, has_star);
        let rules = RewriteSystem::from_relations(&alphabet, &relations)?;
        Ok(Presentation {
            name: name.to_string(),
            alphabet,
            relations,
            rules,
            coproduct: None,
            counit: None,
            antipode: None,
            has_star,
            braided: true,
            params,
        })
    }

    /// Attach Hopf tables (normalized slot-wise).
    pub fn with_hopf(
        mut self,
        coproduct: Vec<TensorPoly>,
        counit: Vec<Scalar>,
        antipode: Vec<NCPoly>,
    ) -> Result<Presentation, PresentationError> {
        let mut cop = Vec::with_capacity(coproduct.len());
        for t in &coproduct {
            cop.push(t.normalize(&self.rules)?);
        }
        let mut ant = Vec::with_capacity(antipode.len());
        for p in &antipode {
            ant.push(self.nf(p)?);
        }
        self.coproduct = Some(cop);
        self.counit = Some(counit);
        self.antipode = Some(ant);
        Ok(self)
    }
}

/// c · s^a · u^b.
pub(crate) fn sc(c: i64, s: i32, u: i32) -> Scalar {
    Scalar::monomial(c, &[(Var::S, s), (Var::U, u)])
}

struct GenSpec<'a> {
    id: &'a str,
    mu: i32,
    nu: i32,
    star: &'a str,
    inverse: Option<&'a str>,
    weight: u32,
}

fn alphabet(specs: &[GenSpec<'_>]) -> Alphabet {
    let pos = |id: &str| specs.iter().position(|g| g.id == id).expect("declared generator") as Gen;
    Alphabet::new(
        specs
            .iter()
            .map(|g| GeneratorInfo {
                id: g.id.to_string(),
                mu: g.mu,
                nu: g.nu,
                star: pos(g.star),
                inverse: g.inverse.map(pos),
                weight: g.weight,
            })
            .collect(),
    )
}

fn gs<'a>(id: &'a str, mu: i32, nu: i32, star: &'a str, inverse: Option<&'a str>, weight: u32) -> GenSpec<'a> {
    GenSpec { id, mu, nu, star, inverse, weight }
}

/// Build a polynomial from (coefficient, word) pairs.
fn poly(al: &Alphabet, terms: &[(Scalar, &[&str])]) -> NCPoly {
    let mut p = NCPoly::zero();
    for (c, ids) in terms {
        p.add_term(al.word_of(ids).expect("known generators"), c.clone());
    }
    p
}

/// Build a rank-2 tensor from (coefficient, left word, right word) triples.
fn tensor2(al: &Alphabet, terms: &[(Scalar, &[&str], &[&str])]) -> TensorPoly {
    let mut t = TensorPoly::zero(2);
    for (c, a, b) in terms {
        let wa = al.word_of(a).expect("known generators");
        let wb = al.word_of(b).expect("known generators");
        t.add_term(alloc::vec![wa, wb], c.clone());
    }
    t
}

fn key(p: &NCPoly) -> Option<NCPoly> {
    let (_, lc) = p.lead()?;
    Some(p.scale(&lc.inv().ok()?))
}

/// Close stated relations under the star involution and under conjugation by
/// inverses of invertible generators in two-term commutation relations.
pub fn close_relations(al: &Alphabet, stated: &[NCPoly], with_star: bool) -> Vec<NCPoly> {
    let mut out: Vec<NCPoly> = Vec::new();
    let mut seen: BTreeSet<Vec<(Vec<Gen>, String)>> = BTreeSet::new();
    let fingerprint = |p: &NCPoly| -> Vec<(Vec<Gen>, String)> {
        key(p)
            .map(|k| k.terms().map(|(w, c)| (w.gens().to_vec(), format!("{}", c))).collect())
            .unwrap_or_default()
    };
    let mut push = |p: NCPoly, out: &mut Vec<NCPoly>| {
        if p.is_zero() {
            return false;
        }
        if seen.insert(fingerprint(&p)) {
            out.push(p);
            true
        } else {
            false
        }
    };
    for r in stated {
        push(r.clone(), &mut out);
    }
    for (i, g) in al.gens.iter().enumerate() {
        if let Some(inv) = g.inverse {
            let w = al.word(&[i as Gen, inv]);
            push(NCPoly::from_word(w).sub(&NCPoly::one()), &mut out);
        }
    }
    loop {
        let mut added = false;
        let snapshot = out.clone();
        for r in &snapshot {
            if with_star {
                added |= push(r.star(al), &mut out);
            }
            if let Some(c) = conjugate_by_inverse(al, r) {
                for p in c {
                    added |= push(p, &mut out);
                }
            }
        }
        if !added {
            break;
        }
    }
    out
}

/// For a relation a·gx + b·xg with g invertible, produce a·xg⁻¹ + b·g⁻¹x.
fn conjugate_by_inverse(al: &Alphabet, r: &NCPoly) -> Option<Vec<NCPoly>> {
    if r.len() != 2 {
        return None;
    }
    let ts: Vec<(&Word, &Scalar)> = r.terms().collect();
    let (w1, c1) = ts[0];
    let (w2, c2) = ts[1];
    if w1.len() != 2 || w2.len() != 2 {
        return None;
    }
    let (a0, a1) = (w1.gens()[0], w1.gens()[1]);
    if w2.gens() != [a1, a0] {
        return None;
    }
    let mut res = Vec::new();
    for (g, gx_coeff, xg_coeff, x) in [(a0, c1, c2, a1), (a1, c2, c1, a0)] {
        if let Some(ginv) = al.gen(g).inverse {
            let mut p = NCPoly::zero();
            p.add_term(al.word(&[x, ginv]), gx_coeff.clone());
            p.add_term(al.word(&[ginv, x]), xg_coeff.clone());
            res.push(p);
        }
    }
    Some(res)
}

/// The braided quantum group SU_{q,φ}(2).
pub fn su_qphi2() -> Presentation {
    let al = alphabet(&[
        gs("alpha", 1, 1, "alpha_star", None, 2),
        gs("alpha_star", -1, -1, "alpha", None, 2),
        gs("gamma", -1, 1, "gamma_star", None, 1),
        gs("gamma_star", 1, -1, "gamma", None, 1),
    ]);
    let one = Scalar::one;
    let rels = alloc::vec![
        poly(&al, &[(one(), &["alpha", "gamma"]), (-sc(1, 2, 4), &["gamma", "alpha"])]),
        poly(&al, &[(one(), &["alpha", "gamma_star"]), (-sc(1, 2, -4), &["gamma_star", "alpha"])]),
        poly(&al, &[(one(), &["gamma", "alpha_star"]), (-sc(1, 2, 4), &["alpha_star", "gamma"])]),
        poly(&al, &[(one(), &["gamma_star", "alpha_star"]), (-sc(1, 2, -4), &["alpha_star", "gamma_star"])]),
        poly(&al, &[(one(), &["alpha", "alpha_star"]), (sc(1, 4, 0), &["gamma_star", "gamma"]), (-one(), &[])]),
        poly(&al, &[(one(), &["alpha_star", "alpha"]), (one(), &["gamma", "gamma_star"]), (-one(), &[])]),
        poly(&al, &[(one(), &["gamma", "gamma_star"]), (-one(), &["gamma_star", "gamma"])]),
    ];
    let cop = alloc::vec![
        tensor2(&al, &[(one(), &["alpha"], &["alpha"]), (-sc(1, 2, -4), &["gamma_star"], &["gamma"])]),
        tensor2(&al, &[(one(), &["alpha_star"], &["alpha_star"]), (-sc(1, 2, -4), &["gamma"], &["gamma_star"])]),
        tensor2(&al, &[(one(), &["gamma"], &["alpha"]), (one(), &["alpha_star"], &["gamma"])]),
        tensor2(&al, &[(one(), &["gamma_star"], &["alpha_star"]), (one(), &["alpha"], &["gamma_star"])]),
    ];
    let counit = alloc::vec![one(), one(), Scalar::zero(), Scalar::zero()];
    let ant = alloc::vec![
        poly(&al, &[(one(), &["alpha_star"])]),
        poly(&al, &[(one(), &["alpha"])]),
        poly(&al, &[(-sc(1, 2, 4), &["gamma"])]),
        poly(&al, &[(-sc(1, -2, 4), &["gamma_star"])]),
    ];
    Presentation::from_parts("su-qphi2", al, rels, true, Vec::new())
        .and_then(|p| p.with_hopf(cop, counit, ant))
        .expect("built-in presentation is well formed")
}

/// The braided Hopf algebra U_{q,φ}(û(2)).
pub fn uq_hat_u2() -> Presentation {
    let al = alphabet(&[
        gs("f", 1, -1, "e", None, 1),
        gs("k", 1, 1, "kstar", Some("k_inv"), 1),
        gs("k_inv", -1, -1, "kstar_inv", Some("k"), 1),
        gs("kstar", -1, -1, "k", Some("kstar_inv"), 1),
        gs("kstar_inv", 1, 1, "k_inv", Some("kstar"), 1),
        gs("e", -1, 1, "f", None, 1),
    ]);
    let one = Scalar::one;
    let c = (&Scalar::q_pow(-1) - &Scalar::q()).inv().expect("nonzero");
    let rels = alloc::vec![
        poly(&al, &[(one(), &["e", "k"]), (-sc(1, 2, -4), &["k", "e"])]),
        poly(&al, &[(one(), &["k", "f"]), (-sc(1, 2, -4), &["f", "k"])]),
        poly(
            &al,
            &[
                (one(), &["e", "f"]),
                (-one(), &["f", "e"]),
                (-c.clone(), &["k", "kstar"]),
                (c.clone(), &["k_inv", "kstar_inv"]),
            ],
        ),
        poly(&al, &[(one(), &["k", "kstar"]), (-one(), &["kstar", "k"])]),
    ];
    let cop = alloc::vec![
        tensor2(&al, &[(one(), &["f"], &["kstar"]), (one(), &["kstar_inv"], &["f"])]),
        tensor2(&al, &[(one(), &["k"], &["k"])]),
        tensor2(&al, &[(one(), &["k_inv"], &["k_inv"])]),
        tensor2(&al, &[(one(), &["kstar"], &["kstar"])]),
        tensor2(&al, &[(one(), &["kstar_inv"], &["kstar_inv"])]),
        tensor2(&al, &[(one(), &["e"], &["k"]), (one(), &["k_inv"], &["e"])]),
    ];
    let counit = alloc::vec![Scalar::zero(), one(), one(), one(), one(), Scalar::zero()];
    let ant = alloc::vec![
        poly(&al, &[(-sc(1, 2, 4), &["f"])]),
        poly(&al, &[(one(), &["k_inv"])]),
        poly(&al, &[(one(), &["k"])]),
        poly(&al, &[(one(), &["kstar_inv"])]),
        poly(&al, &[(one(), &["kstar"])]),
        poly(&al, &[(-sc(1, -2, 4), &["e"])]),
    ];
    Presentation::from_parts("uq-hat-u2", al, rels, true, Vec::new())
        .and_then(|p| p.with_hopf(cop, counit, ant))
        .expect("built-in presentation is well formed")
}

/// The braided Hopf algebra U_{q,φ}(u(2)) with generators e, f, |k|, U.
pub fn uq_u2() -> Presentation {
    let al = alphabet(&[
        gs("f", 1, -1, "e", None, 1),
        gs("absk", 0, 0, "absk", Some("absk_inv"), 1),
        gs("absk_inv", 0, 0, "absk_inv", Some("absk"), 1),
        gs("U", 1, 1, "U_inv", Some("U_inv"), 1),
        gs("U_inv", -1, -1, "U", Some("U"), 1),
        gs("e", -1, 1, "f", None, 1),
    ]);
    let one = Scalar::one;
    let c = (&Scalar::q_pow(-1) - &Scalar::q()).inv().expect("nonzero");
    let rels = alloc::vec![
        poly(&al, &[(one(), &["e", "absk"]), (-sc(1, 2, 0), &["absk", "e"])]),
        poly(&al, &[(one(), &["absk", "f"]), (-sc(1, 2, 0), &["f", "absk"])]),
        poly(&al, &[(one(), &["e", "U"]), (-sc(1, 0, -4), &["U", "e"])]),
        poly(&al, &[(one(), &["U", "f"]), (-sc(1, 0, -4), &["f", "U"])]),
        poly(
            &al,
            &[
                (one(), &["e", "f"]),
                (-one(), &["f", "e"]),
                (-c.clone(), &["absk", "absk"]),
                (c.clone(), &["absk_inv", "absk_inv"]),
            ],
        ),
        poly(&al, &[(one(), &["absk", "U"]), (-one(), &["U", "absk"])]),
    ];
    let cop = alloc::vec![
        tensor2(&al, &[(one(), &["f"], &["absk", "U_inv"]), (one(), &["absk_inv", "U"], &["f"])]),
        tensor2(&al, &[(one(), &["absk"], &["absk"])]),
        tensor2(&al, &[(one(), &["absk_inv"], &["absk_inv"])]),
        tensor2(&al, &[(one(), &["U"], &["U"])]),
        tensor2(&al, &[(one(), &["U_inv"], &["U_inv"])]),
        tensor2(&al, &[(one(), &["e"], &["absk", "U"]), (one(), &["absk_inv", "U_inv"], &["e"])]),
    ];
    let counit = alloc::vec![Scalar::zero(), one(), one(), one(), one(), Scalar::zero()];
    let ant = alloc::vec![
        poly(&al, &[(-sc(1, 2, 4), &["f"])]),
        poly(&al, &[(one(), &["absk_inv"])]),
        poly(&al, &[(one(), &["absk"])]),
        poly(&al, &[(one(), &["U_inv"])]),
        poly(&al, &[(one(), &["U"])]),
        poly(&al, &[(-sc(1, -2, 4), &["e"])]),
    ];
    Presentation::from_parts("uq-u2", al, rels, true, Vec::new())
        .and_then(|p| p.with_hopf(cop, counit, ant))
        .expect("built-in presentation is well formed")
}

/// The unbraided U_q(su(2)) with k* = k.
pub fn uq_su2_classical() -> Presentation {
    let al = alphabet(&[
        gs("f", 1, -1, "e", None, 1),
        gs("k", 0, 0, "k", Some("k_inv"), 1),
        gs("k_inv", 0, 0, "k_inv", Some("k"), 1),
        gs("e", -1, 1, "f", None, 1),
    ]);
    let one = Scalar::one;
    let qq = &Scalar::q() - &Scalar::q_pow(-1);
    let rels = alloc::vec![
        poly(&al, &[(one(), &["e", "k"]), (-sc(1, 2, 0), &["k", "e"])]),
        poly(&al, &[(one(), &["k", "f"]), (-sc(1, 2, 0), &["f", "k"])]),
        poly(
            &al,
            &[
                (one(), &["k", "k"]),
                (-one(), &["k_inv", "k_inv"]),
                (-qq.clone(), &["f", "e"]),
                (qq.clone(), &["e", "f"]),
            ],
        ),
    ];
    let cop = alloc::vec![
        tensor2(&al, &[(one(), &["f"], &["k"]), (one(), &["k_inv"], &["f"])]),
        tensor2(&al, &[(one(), &["k"], &["k"])]),
        tensor2(&al, &[(one(), &["k_inv"], &["k_inv"])]),
        tensor2(&al, &[(one(), &["e"], &["k"]), (one(), &["k_inv"], &["e"])]),
    ];
    let counit = alloc::vec![Scalar::zero(), one(), one(), Scalar::zero()];
    let ant = alloc::vec![
        poly(&al, &[(-sc(1, 2, 0), &["f"])]),
        poly(&al, &[(one(), &["k_inv"])]),
        poly(&al, &[(one(), &["k"])]),
        poly(&al, &[(-sc(1, -2, 0), &["e"])]),
    ];
    Presentation::from_parts("uq-su2", al, rels, true, Vec::new())
        .and_then(|p| p.with_hopf(cop, counit, ant))
        .map(|p| Presentation { braided: false, ..p })
        .expect("built-in presentation is well formed")
}

/// Constants of a quantum sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereParams {
    /// λ in the primed basis.
    pub lambda: Scalar,
    /// ρ in the primed basis.
    pub rho: Scalar,
    /// Generic ψ (w ≠ 1): homogeneous relations only.
    pub psi_nonzero: bool,
    /// Request a star table.
    pub star: bool,
}

impl SphereParams {
    /// Formal central λ, ρ with star table.
    pub fn formal() -> SphereParams {
        SphereParams { lambda: Scalar::param(P_LAMBDA), rho: Scalar::param(P_RHO), psi_nonzero: false, star: true }
    }

    /// From the unprimed constants: λ = (1+q²)λ', ρ = (1+q²)ρ'.
    pub fn from_primed(lambda_prime: &Scalar, rho_prime: &Scalar) -> SphereParams {
        let t2 = &Scalar::one() + &Scalar::q_pow(2);
        SphereParams { lambda: &t2 * lambda_prime, rho: &t2 * rho_prime, psi_nonzero: false, star: true }
    }

    /// The constants realized inside SU_{q,φ}(2): λ = 1 − q⁴, ρ = 1 + q².
    pub fn embedded() -> SphereParams {
        SphereParams {
            lambda: &Scalar::one() - &Scalar::q_pow(4),
            rho: &Scalar::one() + &Scalar::q_pow(2),
            psi_nonzero: false,
            star: true,
        }
    }

    /// Generic-ψ family (λ = ρ = 0, no star).
    pub fn psi_nonzero() -> SphereParams {
        SphereParams { lambda: Scalar::zero(), rho: Scalar::zero(), psi_nonzero: true, star: false }
    }
}

/// Quantum sphere in the primed basis (e'_1, e_0, e'_{-1}).
pub fn podles_sphere(params: &SphereParams) -> Result<Presentation, PresentationError> {
    if params.psi_nonzero {
        if params.star {
            return Err(PresentationError::StarNotAdmissible);
        }
        let al = alphabet(&[
            gs("e0", 0, 0, "e0", None, 1),
            gs("e1p", 1, -1, "em1p", None, 2),
            gs("em1p", -1, 1, "e1p", None, 2),
        ]);
        let w = |n: i32| Scalar::monomial(1, &[(Var::S, 0), (Var::W, n)]);
        let one = Scalar::one;
        let rels = alloc::vec![
            poly(&al, &[(one(), &["e1p", "e0"]), (-(&Scalar::q_pow(-2) * &w(-2)), &["e0", "e1p"])]),
            poly(&al, &[(one(), &["em1p", "e0"]), (-(&Scalar::q_pow(2) * &w(2)), &["e0", "em1p"])]),
            poly(&al, &[(one(), &["e1p", "em1p"]), (&Scalar::q_pow(-2) * &w(-2), &["e0", "e0"])]),
            poly(&al, &[(one(), &["em1p", "e1p"]), (&Scalar::q_pow(2) * &w(2), &["e0", "e0"])]),
        ];
        return Presentation::from_parts("podles-psi", al, rels, false, Vec::new());
    }
    podles_sphere_graded(params, 2)
}

/// Alphabet (e'_1, e'_{-1}, e_0) with δ(e'_{±1}) = ±l.
pub fn sphere_alphabet(l: i32) -> Alphabet {
    let (m, n) = (l - l / 2, l / 2);
    alphabet(&[
        gs("e1p", m, -n, "em1p", None, 2),
        gs("em1p", -m, n, "e1p", None, 2),
        gs("e0", 0, 0, "e0", None, 1),
    ])
}

/// The ψ = 0 sphere with δ(e'_{±1}) = ±l.
pub fn podles_sphere_graded(params: &SphereParams, l: i32) -> Result<Presentation, PresentationError> {
    let al = sphere_alphabet(l);
    let one = Scalar::one;
    let q2 = Scalar::q_pow(2);
    let t2 = &one() + &q2;
    let lam = params.lambda.clone();
    let rho = params.rho.clone();
    let rels = alloc::vec![
        poly(&al, &[(t2.clone(), &["e0", "e1p"]), (-(&q2 * &t2), &["e1p", "e0"]), (-lam.clone(), &["e1p"])]),
        poly(
            &al,
            &[
                (q2.clone(), &["e1p", "em1p"]),
                (-q2.clone(), &["em1p", "e1p"]),
                (&one() - &Scalar::q_pow(4), &["e0", "e0"]),
                (-lam.clone(), &["e0"]),
            ],
        ),
        poly(&al, &[(t2.clone(), &["em1p", "e0"]), (-(&q2 * &t2), &["e0", "em1p"]), (-lam, &["em1p"])]),
        poly(
            &al,
            &[
                (one(), &["em1p", "e1p"]),
                (t2.clone(), &["e0", "e0"]),
                (q2.clone(), &["e1p", "em1p"]),
                (-rho, &[]),
            ],
        ),
    ];
    let params_names = alloc::vec![String::from("lam"), String::from("rho")];
    Presentation::from_parts("podles", al, rels, params.star, params_names)
}

/// The sphere relations before the rescaling of e_{±1}, with constants
/// λ', ρ' (ψ = 0) or the phase w = e^{iψ} (generic ψ, homogeneous).
pub fn sphere_unprimed(psi_nonzero: bool) -> Result<Presentation, PresentationError> {
    let al = alphabet(&[
        gs("e1", 1, -1, "em1", None, 2),
        gs("em1", -1, 1, "e1", None, 2),
        gs("e0", 0, 0, "e0", None, 1),
    ]);
    let one = Scalar::one;
    let q = Scalar::q;
    let q2 = Scalar::q_pow(2);
    let u4 = Scalar::u_pow(-4);
    let (w, lam, rho) = if psi_nonzero {
        (Scalar::w(), Scalar::zero(), Scalar::zero())
    } else {
        (Scalar::one(), Scalar::param(P_LAMBDA_PRIME), Scalar::param(P_RHO_PRIME))
    };
    let wp = |n: i32| w.pow(n).expect("w is a unit");
    let rels = alloc::vec![
        poly(&al, &[(one(), &["e0", "e1"]), (-(&q2 * &wp(2)), &["e1", "e0"]), (-lam.clone(), &["e1"])]),
        poly(
            &al,
            &[
                (&(&q() * &u4) * &wp(-1), &["em1", "e1"]),
                (&(&one() - &q2) * &wp(1), &["e0", "e0"]),
                (-(&(&q() * &u4) * &wp(3)), &["e1", "em1"]),
                (-lam.clone(), &["e0"]),
            ],
        ),
        poly(&al, &[(one(), &["em1", "e0"]), (-(&q2 * &wp(2)), &["e0", "em1"]), (-lam, &["em1"])]),
        poly(
            &al,
            &[
                (-(&(&Scalar::q_pow(-1) * &u4) * &wp(-2)), &["em1", "e1"]),
                (one(), &["e0", "e0"]),
                (-(&(&q() * &u4) * &wp(2)), &["e1", "em1"]),
                (-rho, &[]),
            ],
        ),
    ];
    let names = ["lam", "rho", "lamp", "rhop"].iter().map(|s| s.to_string()).collect();
    let name = if psi_nonzero { "sphere-unprimed-psi" } else { "sphere-unprimed" };
    Presentation::from_parts(name, al, rels, false, names)
}

/// The free algebra on an alphabet.
pub fn free_algebra(name: &str, al: Alphabet) -> Presentation {
    Presentation::from_parts(name, al, Vec::new(), false, Vec::new()).expect("no relations")
}

/// The alternate sphere presentation with generators A, B, b.
pub fn alternate_sphere() -> Presentation {
    let al = alphabet(&[
        gs("B", 1, -1, "b", None, 2),
        gs("b", -1, 1, "B", None, 2),
        gs("A", 0, 0, "A", None, 1),
    ]);
    let one = Scalar::one;
    let q2 = Scalar::q_pow(2);
    let c = Scalar::param(P_C);
    let rels = alloc::vec![
        poly(&al, &[(q2.clone(), &["A", "b"]), (-one(), &["b", "A"])]),
        poly(&al, &[(one(), &["A", "B"]), (-q2.clone(), &["B", "A"])]),
        poly(
            &al,
            &[(one(), &["b", "B"]), (Scalar::q_pow(4), &["A", "A"]), (q2, &["A"]), (c.clone(), &[])],
        ),
        poly(&al, &[(one(), &["B", "b"]), (one(), &["A", "A"]), (one(), &["A"]), (c, &[])]),
    ];
    let names = ["lam", "rho", "lamp", "rhop", "c", "a", "r"].iter().map(|s| s.to_string()).collect();
    Presentation::from_parts("podles-alt", al, rels, false, names).expect("built-in presentation is well formed")
}

/// The Lie algebra reached as q → 1, φ → 0: generators e, f, H, H* with
/// [e,H] = [e,H*] = e, [H,f] = [H*,f] = f, [H,H*] = 0 and
/// [f,e] = c H + c̄ H*, where c = h / Re h for the limiting direction h.
pub fn u2_limit(c: &Scalar) -> Presentation {
    let al = alphabet(&[
        gs("H", 0, 0, "Hs", None, 1),
        gs("Hs", 0, 0, "H", None, 1),
        gs("f", 1, -1, "e", None, 1),
        gs("e", -1, 1, "f", None, 1),
    ]);
    let one = Scalar::one;
    let rels = alloc::vec![
        poly(&al, &[(one(), &["e", "H"]), (-one(), &["H", "e"]), (-one(), &["e"])]),
        poly(&al, &[(one(), &["e", "Hs"]), (-one(), &["Hs", "e"]), (-one(), &["e"])]),
        poly(&al, &[(one(), &["H", "f"]), (-one(), &["f", "H"]), (-one(), &["f"])]),
        poly(&al, &[(one(), &["Hs", "f"]), (-one(), &["f", "Hs"]), (-one(), &["f"])]),
        poly(&al, &[(one(), &["H", "Hs"]), (-one(), &["Hs", "H"])]),
        poly(&al, &[(one(), &["f", "e"]), (-one(), &["e", "f"]), (-c.clone(), &["H"]), (-c.conj(), &["Hs"])]),
    ];
    Presentation::from_parts("u2-limit", al, rels, false, Vec::new()).expect("Lie algebra relations are confluent")
}

/// All built-in Hopf presentations by name.
pub fn builtin(name: &str) -> Option<Presentation> {
    match name {
        "su-qphi2" | "su" => Some(su_qphi2()),
        "uq-hat-u2" | "hat-u2" => Some(uq_hat_u2()),
        "uq-u2" | "u2" => Some(uq_u2()),
        "uq-su2" | "su2" => Some(uq_su2_classical()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lie_limit_is_confluent() {
        let c = &Scalar::one() + &Scalar::i();
        let p = u2_limit(&c);
        assert!(p.rules.local_confluence_check(4).is_confluent());
        let fe = p.mono(Scalar::one(), &["f", "e"]);
        let ef = p.mono(Scalar::one(), &["e", "f"]);
        let want = p.mono(c.clone(), &["H"]).add(&p.mono(c.conj(), &["Hs"]));
        assert_eq!(p.nf(&fe.sub(&ef)).unwrap(), want);
    }

    #[test]
    fn su_structure_tables() {
        let p = su_qphi2();
        let g = p.index("gamma") as usize;
        assert_eq!(p.antipode.as_ref().unwrap()[g], p.mono(-sc(1, 2, 4), &["gamma"]));
        let a = p.index("alpha") as usize;
        let ast = p.index("alpha_star") as usize;
        assert!(p.counit.as_ref().unwrap()[a].is_one());
        assert!(p.counit.as_ref().unwrap()[ast].is_one());
        p.validate().unwrap();
    }

    #[test]
    fn su_rewrites() {
        let p = su_qphi2();
        let ga = p.mul(&p.gen("gamma"), &p.gen("alpha")).unwrap();
        assert_eq!(ga, p.mono(sc(1, -2, -4), &["alpha", "gamma"]));
        let aa = p.mul(&p.gen("alpha_star"), &p.gen("alpha")).unwrap();
        assert_eq!(aa, NCPoly::one().sub(&p.mono(Scalar::one(), &["gamma", "gamma_star"])));
        let r = p.mono(Scalar::one(), &["alpha_star", "alpha"])
            .add(&p.mono(Scalar::one(), &["gamma", "gamma_star"]))
            .sub(&NCPoly::one());
        assert!(p.nf(&r).unwrap().is_zero());
    }

    #[test]
    fn hat_u2_relations() {
        let p = uq_hat_u2();
        p.validate().unwrap();
        let r = p.mono(Scalar::one(), &["e", "k"]).sub(&p.mono(sc(1, 2, -4), &["k", "e"]));
        assert!(p.nf(&r).unwrap().is_zero());
        assert!(p.nf(&p.mono(Scalar::one(), &["k", "k_inv"])).unwrap().is_one_poly());
        let c = (&Scalar::q_pow(-1) - &Scalar::q()).inv().unwrap();
        let r = p.mono(Scalar::one(), &["e", "f"])
            .sub(&p.mono(Scalar::one(), &["f", "e"]))
            .sub(&p.mono(c.clone(), &["k", "kstar"]))
            .add(&p.mono(c, &["k_inv", "kstar_inv"]));
        assert!(p.nf(&r).unwrap().is_zero());
    }

    #[test]
    fn other_presentations_validate() {
        uq_u2().validate().unwrap();
        uq_su2_classical().validate().unwrap();
        podles_sphere(&SphereParams::formal()).unwrap().validate().unwrap();
        podles_sphere(&SphereParams::psi_nonzero()).unwrap().validate().unwrap();
        alternate_sphere().validate().unwrap();
        let mut bad = SphereParams::psi_nonzero();
        bad.star = true;
        assert_eq!(podles_sphere(&bad).unwrap_err(), PresentationError::StarNotAdmissible);
    }

    #[test]
    fn sphere_rule_shapes() {
        let p = podles_sphere(&SphereParams::formal()).unwrap();
        let t2 = &Scalar::one() + &Scalar::q_pow(2);
        let lhs = p.mul(&p.gen("e0"), &p.gen("e1p")).unwrap();
        let expect = p.mono(Scalar::q_pow(2), &["e1p", "e0"])
            .add(&p.mono(Scalar::param(P_LAMBDA).div(&t2).unwrap(), &["e1p"]));
        assert_eq!(lhs, expect);
        let lam = Scalar::param(P_LAMBDA);
        let rho = Scalar::param(P_RHO);
        let den = (&Scalar::q_pow(2) * &t2).inv().unwrap();
        let lhs = p.mul(&p.gen("e1p"), &p.gen("em1p")).unwrap();
        let expect = p.mono(&lam * &den, &["e0"])
            .add(&NCPoly::constant(&(&Scalar::q_pow(2) * &rho) * &den))
            .sub(&p.mono(&t2 * &den, &["e0", "e0"]));
        assert_eq!(lhs, expect);
        let psi = podles_sphere(&SphereParams::psi_nonzero()).unwrap();
        let lhs = psi.mul(&psi.gen("em1p"), &psi.gen("e0")).unwrap();
        let w2 = Scalar::monomial(1, &[(Var::S, 4), (Var::W, 2)]);
        assert_eq!(lhs, psi.mono(w2, &["e0", "em1p"]));
    }
}

