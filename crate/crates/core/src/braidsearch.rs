//! Search for scalar braidings Ψ(g⊗h) = u^{ε(g,h)} h⊗g compatible with a
//! Hopf presentation. The exponents ε are the unknowns; "valid for arbitrary
//! φ" means every identity must hold with u transcendental, so phases can
//! only cancel between terms whose total u-exponents agree.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::duality::CrossBraiding;
use crate::hopf::{braid_psi, AxiomReport, HopfError};
use crate::ncpoly::{Gen, NcError, Word};
use crate::presentations::Presentation;
use crate::scalars::{Mono, Scalar, Var};
use crate::tensor::TensorPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("cannot analyse {0}")]
    Unsupported(String),
}

impl From<NcError> for SearchError {
    fn from(e: NcError) -> Self {
        SearchError::Hopf(HopfError::Rewrite(e))
    }
}

/// Exponents ε(g, h), stored row-major over the generators of a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseExponentAssignment {
    pub names: Vec<String>,
    pub values: Vec<BigRational>,
}

impl PhaseExponentAssignment {
    /// ε(g,h) = 2δ(g)δ(h).
    pub fn twist(p: &Presentation) -> PhaseExponentAssignment {
        let n = p.alphabet.len();
        let mut values = Vec::with_capacity(n * n);
        for g in 0..n {
            for h in 0..n {
                let e = 2 * p.alphabet.delta(g as Gen) * p.alphabet.delta(h as Gen);
                values.push(BigRational::from_integer(e.into()));
            }
        }
        PhaseExponentAssignment { names: pair_names(p), values }
    }

    pub fn get(&self, p: &Presentation, g: &str, h: &str) -> BigRational {
        let n = p.alphabet.len();
        self.values[p.index(g) as usize * n + p.index(h) as usize].clone()
    }
}

fn pair_names(p: &Presentation) -> Vec<String> {
    let al = &p.alphabet;
    let mut v = Vec::new();
    for g in &al.gens {
        for h in &al.gens {
            v.push(format!("eps({},{})", g.id, h.id));
        }
    }
    v
}

/// Σ coeffs·ε = rhs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub coeffs: Vec<(usize, i64)>,
    pub rhs: i64,
    pub origin: String,
}

impl Equation {
    fn from_dense(v: &[i64], rhs: i64, origin: String) -> Equation {
        let coeffs = v.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| (i, *c)).collect();
        Equation { coeffs, rhs, origin }
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs.is_empty() && self.rhs == 0
    }

    pub fn holds(&self, x: &[BigRational]) -> bool {
        let lhs: BigRational = self.coeffs.iter().map(|(i, c)| &x[*i] * BigRational::from_integer((*c).into())).sum();
        lhs == BigRational::from_integer(self.rhs.into())
    }
}

/// One of several equation sets must hold: each way the terms of an
/// identity can cancel in blocks of equal phase.
#[derive(Clone, Debug)]
pub struct Disjunction {
    pub origin: String,
    pub alternatives: Vec<Vec<Equation>>,
}

#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    pub unknowns: Vec<String>,
    /// Equations every solution satisfies.
    pub equations: Vec<Equation>,
    /// Identities with more than one way to cancel.
    pub disjunctions: Vec<Disjunction>,
}

impl ConstraintSystem {
    pub fn new(unknowns: Vec<String>) -> ConstraintSystem {
        ConstraintSystem { unknowns, equations: Vec::new(), disjunctions: Vec::new() }
    }

    fn push(&mut self, d: Disjunction) {
        match d.alternatives.len() {
            1 => {
                let alt = d.alternatives.into_iter().next().unwrap_or_default();
                self.equations.extend(alt.into_iter().filter(|e| !e.is_trivial()));
            }
            _ => self.disjunctions.push(d),
        }
    }
}

type Exp = Vec<i64>;

fn word_exp(n: usize, a: &Word, b: &Word) -> Exp {
    // exponent of Ψ(a⊗b) as a vector over the unknowns
    let mut v = vec![0; n * n];
    for &x in a.gens() {
        for &y in b.gens() {
            v[x as usize * n + y as usize] += 1;
        }
    }
    v
}

fn add_exp(a: &Exp, b: &Exp) -> Exp {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Split a scalar into u-homogeneous parts c = Σ f_k u^k.
fn u_parts(c: &Scalar) -> Option<Vec<(i64, Scalar)>> {
    let ui = Var::U.index();
    let den: Vec<_> = c.den().terms().collect();
    let b = den.first()?.0 .0[ui];
    if den.iter().any(|(m, _)| m.0[ui] != b) {
        return None;
    }
    let strip = |m: &Mono| {
        let mut m = *m;
        m.0[ui] = 0;
        m
    };
    let den: Vec<_> = den.iter().map(|(m, k)| (strip(m), (*k).clone())).collect();
    let mut by: BTreeMap<i32, Vec<(Mono, crate::scalars::GaussRat)>> = BTreeMap::new();
    for (m, k) in c.num().terms() {
        by.entry(m.0[ui]).or_default().push((strip(m), k.clone()));
    }
    let mut out = Vec::new();
    for (a, terms) in by {
        out.push(((a - b) as i64, Scalar::from_terms(&terms, &den).ok()?));
    }
    Some(out)
}

#[derive(Clone, Debug)]
struct Atom {
    exp: Exp,
    shift: i64,
    coeff: Scalar,
}

const MAX_ATOMS: usize = 10;

/// Partitions of `atoms` into zero-sum blocks that cannot be refined.
fn minimal_partitions(atoms: &[Atom]) -> Vec<Vec<Vec<usize>>> {
    fn zero_sum(atoms: &[Atom], block: &[usize]) -> bool {
        // atoms with equal ε-part but different explicit u-power never cancel
        for (i, &a) in block.iter().enumerate() {
            for &b in &block[i + 1..] {
                if atoms[a].exp == atoms[b].exp && atoms[a].shift != atoms[b].shift {
                    return false;
                }
            }
        }
        let mut s = Scalar::zero();
        for &a in block {
            s = &s + &atoms[a].coeff;
        }
        s.is_zero()
    }
    fn minimal(atoms: &[Atom], block: &[usize]) -> bool {
        let k = block.len();
        (1..(1u32 << k) - 1).all(|mask| {
            let sub: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| block[i]).collect();
            !zero_sum(atoms, &sub)
        })
    }
    fn go(atoms: &[Atom], rest: &[usize], acc: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some((&first, others)) = rest.split_first() else {
            out.push(acc.clone());
            return;
        };
        let k = others.len();
        for mask in 0..(1u32 << k) {
            let mut block = vec![first];
            block.extend((0..k).filter(|i| mask & (1 << i) != 0).map(|i| others[i]));
            if !zero_sum(atoms, &block) || !minimal(atoms, &block) {
                continue;
            }
            let remaining: Vec<usize> = (0..k).filter(|i| mask & (1 << i) == 0).map(|i| others[i]).collect();
            acc.push(block);
            go(atoms, &remaining, acc, out);
            acc.pop();
        }
    }
    let idx: Vec<usize> = (0..atoms.len()).collect();
    let mut out = Vec::new();
    go(atoms, &idx, &mut Vec::new(), &mut out);
    out
}

/// Constraints making Σ_L u^{L·ε} t_L vanish for transcendental u.
fn vanishing(p: &Presentation, groups: BTreeMap<Exp, TensorPoly>, origin: &str) -> Result<Disjunction, SearchError> {
    let mut atoms_at: BTreeMap<Vec<Word>, Vec<Atom>> = BTreeMap::new();
    for (exp, t) in groups {
        let t = t.normalize(&p.rules)?;
        for (ws, c) in t.terms() {
            let parts = u_parts(c).ok_or_else(|| SearchError::Unsupported(format!("{origin}: mixed u-denominator")))?;
            for (shift, coeff) in parts {
                atoms_at.entry(ws.clone()).or_default().push(Atom { exp: exp.clone(), shift, coeff });
            }
        }
    }
    let mut alternatives: Vec<Vec<Equation>> = vec![Vec::new()];
    for (ws, atoms) in atoms_at {
        let label = format!("{origin} at {}", ws.iter().map(|w| p.alphabet.format_word(w)).collect::<Vec<_>>().join("⊗"));
        if atoms.len() > MAX_ATOMS {
            return Err(SearchError::Unsupported(format!("{label}: too many terms")));
        }
        let parts = minimal_partitions(&atoms);
        let local: Vec<Vec<Equation>> = parts
            .iter()
            .map(|blocks| {
                let mut eqs = Vec::new();
                for b in blocks {
                    for w in b.windows(2) {
                        let (x, y) = (&atoms[w[0]], &atoms[w[1]]);
                        let v: Exp = x.exp.iter().zip(&y.exp).map(|(a, b)| a - b).collect();
                        let e = Equation::from_dense(&v, y.shift - x.shift, label.clone());
                        if !e.is_trivial() {
                            eqs.push(e);
                        }
                    }
                }
                eqs
            })
            .collect();
        // cross product with what we have
        let mut next = Vec::new();
        for a in &alternatives {
            for l in &local {
                let mut c = a.clone();
                c.extend(l.iter().cloned());
                next.push(c);
            }
        }
        alternatives = next;
        alternatives.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
        alternatives.dedup();
    }
    Ok(Disjunction { origin: String::from(origin), alternatives })
}

const ALGEBRA_MAP: &str = "Δ(relation ";

/// Constraint system for scalar braidings on `p`: naturality of Ψ with
/// respect to Δ, Ψ respecting the relations, and Δ being an algebra map
/// for the braided product.
pub fn generate_constraints(p: &Presentation) -> Result<ConstraintSystem, SearchError> {
    let al = &p.alphabet;
    let n = al.len();
    let mut cs = ConstraintSystem::new(pair_names(p));
    let Some(cop) = p.coproduct.as_ref() else {
        return Ok(cs);
    };
    let unit = Word::unit();
    let gw = |g: usize| al.word(&[g as Gen]);

    // naturality: ε(g,h) = ε(g₁,h) + ε(g₂,h) on every term of Δg, both slots
    for g in 0..n {
        let dg = cop[g].normalize(&p.rules)?;
        for (ws, _) in dg.terms() {
            for h in 0..n {
                let l = add_exp(&word_exp(n, &ws[0], &gw(h)), &word_exp(n, &ws[1], &gw(h)));
                let r = word_exp(n, &gw(g), &gw(h));
                let v: Exp = l.iter().zip(&r).map(|(a, b)| a - b).collect();
                let e = Equation::from_dense(&v, 0, format!("coproduct naturality Δ{} ⊗ {}", al.gen(g as Gen).id, al.gen(h as Gen).id));
                if !e.is_trivial() {
                    cs.equations.push(e);
                }
                let l = add_exp(&word_exp(n, &gw(h), &ws[0]), &word_exp(n, &gw(h), &ws[1]));
                let r = word_exp(n, &gw(h), &gw(g));
                let v: Exp = l.iter().zip(&r).map(|(a, b)| a - b).collect();
                let e = Equation::from_dense(&v, 0, format!("coproduct naturality {} ⊗ Δ{}", al.gen(h as Gen).id, al.gen(g as Gen).id));
                if !e.is_trivial() {
                    cs.equations.push(e);
                }
            }
        }
    }

    for (ri, r) in p.relations.iter().enumerate() {
        // Ψ(r⊗h) and Ψ(h⊗r) vanish
        for h in 0..n {
            let mut left: BTreeMap<Exp, TensorPoly> = BTreeMap::new();
            let mut right: BTreeMap<Exp, TensorPoly> = BTreeMap::new();
            for (w, c) in r.terms() {
                let t = TensorPoly::simple(vec![gw(h), w.clone()], c.clone());
                let e = word_exp(n, w, &gw(h));
                left.entry(e).or_insert_with(|| TensorPoly::zero(2)).add_term(t.terms().next().map(|x| x.0.clone()).unwrap_or_default(), c.clone());
                let e = word_exp(n, &gw(h), w);
                right.entry(e).or_insert_with(|| TensorPoly::zero(2)).add_term(vec![w.clone(), gw(h)], c.clone());
            }
            let hid = &al.gen(h as Gen).id;
            cs.push(vanishing(p, left, &format!("Ψ(relation {ri} ⊗ {hid})"))?);
            cs.push(vanishing(p, right, &format!("Ψ({hid} ⊗ relation {ri})"))?);
        }

        // Δ(r) = 0 with (a⊗b)(c⊗d) = u^{ε(b,c)} ac⊗bd
        let mut groups: BTreeMap<Exp, TensorPoly> = BTreeMap::new();
        for (w, c) in r.terms() {
            let mut acc: Vec<(Exp, Scalar, Word, Word)> = vec![(vec![0; n * n], c.clone(), unit.clone(), unit.clone())];
            for &g in w.gens() {
                let mut next = Vec::new();
                for (e, k, a, b) in &acc {
                    for (ws, c2) in cop[g as usize].terms() {
                        let e2 = add_exp(e, &word_exp(n, b, &ws[0]));
                        next.push((e2, k * c2, a.concat(&ws[0]), b.concat(&ws[1])));
                    }
                }
                acc = next;
            }
            for (e, k, a, b) in acc {
                groups.entry(e).or_insert_with(|| TensorPoly::zero(2)).add_term(vec![a, b], k);
            }
        }
        cs.push(vanishing(p, groups, &format!("{ALGEBRA_MAP}{ri})"))?);
    }
    Ok(cs)
}

/// Affine solution set x = particular + span(basis).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSpace {
    pub particular: Vec<BigRational>,
    pub basis: Vec<Vec<BigRational>>,
    pub equations: Vec<Equation>,
}

impl SolutionSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        self.equations.iter().all(|e| e.holds(x))
    }

    /// Only ε = 0 solves the system.
    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty() && self.particular.iter().all(Zero::is_zero)
    }
}

/// A combination Σ λ_i (equation i) reading 0 = c with c ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub multipliers: Vec<(usize, BigRational)>,
    pub constant: BigRational,
}

impl Certificate {
    pub fn verify(&self, n: usize, eqs: &[Equation]) -> bool {
        let mut lhs = vec![BigRational::zero(); n];
        let mut rhs = BigRational::zero();
        for (i, l) in &self.multipliers {
            for (j, c) in &eqs[*i].coeffs {
                lhs[*j] += l * BigRational::from_integer((*c).into());
            }
            rhs += l * BigRational::from_integer(eqs[*i].rhs.into());
        }
        lhs.iter().all(Zero::is_zero) && rhs == self.constant && !rhs.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Space(SolutionSpace),
    Infeasible(Certificate),
}

/// Exact Gaussian elimination over the rationals, tracking row combinations
/// so an inconsistency comes with a certificate.
pub fn solve_linear(n: usize, eqs: &[Equation]) -> LinearSolution {
    let m = eqs.len();
    let int = |x: i64| BigRational::from_integer(BigInt::from(x));
    // rows: coefficients | rhs | multipliers
    let mut rows: Vec<(Vec<BigRational>, BigRational, Vec<BigRational>)> = eqs
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mut a = vec![BigRational::zero(); n];
            for (j, c) in &e.coeffs {
                a[*j] += int(*c);
            }
            let mut lam = vec![BigRational::zero(); m];
            lam[i] = BigRational::one();
            (a, int(e.rhs), lam)
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(pr) = (r..m).find(|&i| !rows[i].0[col].is_zero()) else { continue };
        rows.swap(r, pr);
        let inv = rows[r].0[col].recip();
        let (a, b, l) = &mut rows[r];
        a.iter_mut().for_each(|x| *x = &*x * &inv);
        *b = &*b * &inv;
        l.iter_mut().for_each(|x| *x = &*x * &inv);
        let piv = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row.0[col].is_zero() {
                continue;
            }
            let f = row.0[col].clone();
            for j in 0..n {
                row.0[j] -= &f * &piv.0[j];
            }
            row.1 -= &f * &piv.1;
            for j in 0..m {
                row.2[j] -= &f * &piv.2[j];
            }
        }
        pivots.push(col);
        r += 1;
    }
    for row in &rows[r..] {
        if !row.1.is_zero() {
            let multipliers = row.2.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect();
            return LinearSolution::Infeasible(Certificate { multipliers, constant: row.1.clone() });
        }
    }
    let mut particular = vec![BigRational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = rows[i].1.clone();
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); n];
        v[free] = BigRational::one();
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = -rows[i].0[free].clone();
        }
        basis.push(v);
    }
    LinearSolution::Space(SolutionSpace { particular, basis, equations: eqs.to_vec() })
}

/// All solution branches of a constraint system.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub unknowns: Vec<String>,
    /// Solutions of the unconditional equations alone.
    pub forced: LinearSolution,
    pub branches: Vec<SolutionSpace>,
}

impl SearchResult {
    pub fn feasible(&self) -> bool {
        !self.branches.is_empty()
    }

    /// No nonzero exponent survives in any branch.
    pub fn only_trivial(&self) -> bool {
        self.branches.iter().all(SolutionSpace::is_trivial)
    }

    pub fn contains(&self, x: &PhaseExponentAssignment) -> bool {
        self.branches.iter().any(|b| b.contains(&x.values))
    }
}

const MAX_BRANCHES: usize = 4096;

pub fn solve(cs: &ConstraintSystem) -> SearchResult {
    let n = cs.unknowns.len();
    let forced = solve_linear(n, &cs.equations);
    let mut branches: Vec<SolutionSpace> = Vec::new();
    if let LinearSolution::Space(_) = forced {
        // depth-first over the alternatives, pruning inconsistent prefixes
        let mut order: Vec<&Disjunction> = cs.disjunctions.iter().collect();
        order.sort_by_key(|d| d.alternatives.len());
        let mut stack: Vec<(usize, Vec<Equation>)> = vec![(0, cs.equations.clone())];
        while let Some((depth, eqs)) = stack.pop() {
            if depth == order.len() {
                if let LinearSolution::Space(s) = solve_linear(n, &eqs) {
                    if !branches.iter().any(|b| same_space(b, &s)) {
                        branches.push(s);
                    }
                }
                continue;
            }
            for alt in &order[depth].alternatives {
                let mut e = eqs.clone();
                e.extend(alt.iter().cloned());
                if let LinearSolution::Space(_) = solve_linear(n, &e) {
                    stack.push((depth + 1, e));
                }
            }
            if stack.len() > MAX_BRANCHES {
                break;
            }
        }
    }
    SearchResult { unknowns: cs.unknowns.clone(), forced, branches }
}

fn same_space(a: &SolutionSpace, b: &SolutionSpace) -> bool {
    a.contains(&b.particular)
        && b.contains(&a.particular)
        && a.basis.len() == b.basis.len()
        && b.basis.iter().all(|v| {
            let x: Vec<BigRational> = a.particular.iter().zip(v).map(|(p, d)| p + d).collect();
            a.contains(&x)
        })
}

/// Solution summary of a search on a presentation.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub algebra: String,
    pub equations: usize,
    pub disjunctions: usize,
    pub result: SearchResult,
    /// Whether ε = 2δδ lies in some branch.
    pub twist_solution: bool,
    /// Solutions when Δ is not required to be an algebra map.
    pub without_algebra_map: LinearSolution,
}

impl SearchReport {
    pub fn conclusion(&self) -> String {
        if !self.result.feasible() {
            String::from("infeasible")
        } else if self.result.only_trivial() {
            String::from("no scalar braiding for generic phi: only the trivial exponents")
        } else if self.twist_solution {
            String::from("solution family contains eps = 2 delta delta")
        } else {
            String::from("nontrivial solutions not of twist form")
        }
    }
}

pub fn search(p: &Presentation) -> Result<SearchReport, SearchError> {
    let cs = generate_constraints(p)?;
    let result = solve(&cs);
    let twist_solution = result.contains(&PhaseExponentAssignment::twist(p));
    let partial: Vec<Equation> = cs.equations.iter().filter(|e| !e.origin.starts_with(ALGEBRA_MAP)).cloned().collect();
    let without_algebra_map = solve_linear(cs.unknowns.len(), &partial);
    Ok(SearchReport {
        without_algebra_map,
        algebra: p.name.clone(),
        equations: cs.equations.len(),
        disjunctions: cs.disjunctions.len(),
        result,
        twist_solution,
    })
}

fn u_exponent(c: &Scalar) -> Option<i32> {
    let (k, m) = c.as_laurent_monomial()?;
    let mut rest = m;
    let e = rest.0[Var::U.index()];
    rest.0[Var::U.index()] = 0;
    (k == Scalar::one().as_laurent_monomial()?.0 && rest.is_one()).then_some(e)
}

/// ε = 2δδ satisfies every generated constraint, and the braiding used by
/// the Hopf checks has exactly these phases.
pub fn verify_twist_consistency(p: &Presentation) -> Result<AxiomReport, SearchError> {
    let cs = generate_constraints(p)?;
    let x = PhaseExponentAssignment::twist(p).values;
    let mut rep = AxiomReport::default();
    for e in &cs.equations {
        rep.record("forced-equation", e.origin.clone(), if e.holds(&x) { None } else { Some(String::from("violated")) });
    }
    for d in &cs.disjunctions {
        let ok = d.alternatives.iter().any(|a| a.iter().all(|e| e.holds(&x)));
        rep.record("alternatives", d.origin.clone(), if ok { None } else { Some(String::from("no alternative holds")) });
    }
    let al = &p.alphabet;
    for g in &al.gens {
        for h in &al.gens {
            let t = braid_psi(p, &p.gen(&g.id), &p.gen(&h.id));
            let c = t.coeff(&[al.word_of(&[&h.id]).expect("generator"), al.word_of(&[&g.id]).expect("generator")]);
            let want = if p.braided { 2 * g.delta() * h.delta() } else { 0 };
            let got = u_exponent(&c);
            rep.record(
                "psi-phase",
                format!("Ψ({}⊗{})", g.id, h.id),
                if got == Some(want) { None } else { Some(format!("{got:?} != {want}")) },
            );
        }
    }
    Ok(rep)
}

/// u-exponent of Ξ(h⊗x) for generators of the acting and target algebras.
pub fn cross_exponent(u: &Presentation, a: &Presentation, h: &str, x: &str) -> Option<i32> {
    let xi = CrossBraiding { h: u, a: &a.alphabet };
    u_exponent(&xi.xi(&u.word(&[h]), &a.word(&[x])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{free_algebra, su_qphi2, uq_hat_u2, uq_su2_classical};

    #[test]
    fn contradictory_system_has_certificate() {
        let eqs = [
            Equation { coeffs: vec![(0, 1)], rhs: 1, origin: String::from("a") },
            Equation { coeffs: vec![(0, 1)], rhs: 2, origin: String::from("b") },
        ];
        match solve_linear(1, &eqs) {
            LinearSolution::Infeasible(c) => assert!(c.verify(1, &eqs)),
            s => panic!("{s:?}"),
        }
    }

    #[test]
    fn underdetermined_system() {
        let eqs = [Equation { coeffs: vec![(0, 1), (1, -1)], rhs: 3, origin: String::new() }];
        let LinearSolution::Space(s) = solve_linear(3, &eqs) else { panic!() };
        assert_eq!(s.dimension(), 2);
        assert!(s.contains(&s.particular));
    }

    #[test]
    fn free_algebra_has_no_constraints() {
        let p = free_algebra("free", su_qphi2().alphabet.clone());
        let cs = generate_constraints(&p).unwrap();
        assert!(cs.equations.is_empty() && cs.disjunctions.is_empty());
    }

    #[test]
    fn su2_admits_only_trivial_braiding() {
        let p = uq_su2_classical();
        let r = search(&p).unwrap();
        assert!(r.result.feasible());
        assert!(r.result.only_trivial(), "{:?}", r.result.branches);
        // without the algebra-map condition one family survives:
        // ε(e,e) = −ε(e,f) = −ε(f,e) = ε(f,f)
        let LinearSolution::Space(s) = &r.without_algebra_map else { panic!() };
        assert_eq!(s.dimension(), 1);
        let v = &s.basis[0];
        let at = |g: &str, h: &str| v[p.index(g) as usize * p.alphabet.len() + p.index(h) as usize].clone();
        assert!(!at("e", "e").is_zero());
        assert_eq!(at("e", "e"), -at("e", "f"));
        assert_eq!(at("e", "e"), -at("f", "e"));
        assert_eq!(at("e", "e"), at("f", "f"));
        let cs = generate_constraints(&p).unwrap();
        let k = p.index("k") as usize;
        let n = p.alphabet.len();
        for h in 0..n {
            let e = Equation { coeffs: vec![(k * n + h, 1)], rhs: 1, origin: String::new() };
            let mut eqs = cs.equations.clone();
            eqs.push(e);
            assert!(matches!(solve_linear(n * n, &eqs), LinearSolution::Infeasible(_)));
        }
    }

    #[test]
    fn hat_u2_solution_contains_twist() {
        let p = uq_hat_u2();
        let r = search(&p).unwrap();
        assert!(r.twist_solution, "{}", r.conclusion());
        let t = PhaseExponentAssignment::twist(&p);
        assert_eq!(t.get(&p, "e", "f"), BigRational::from_integer((-8).into()));
        assert_eq!(t.get(&p, "e", "e"), BigRational::from_integer(8.into()));
    }

    #[test]
    fn twist_consistency() {
        for p in [uq_hat_u2(), su_qphi2()] {
            let rep = verify_twist_consistency(&p).unwrap();
            assert!(rep.pass(), "{:?}", rep.failures().next());
        }
        let t = PhaseExponentAssignment::twist(&su_qphi2());
        assert_eq!(t.get(&su_qphi2(), "gamma", "gamma"), BigRational::from_integer(8.into()));
        assert_eq!(cross_exponent(&uq_hat_u2(), &su_qphi2(), "e", "gamma"), Some(8));
    }
}
