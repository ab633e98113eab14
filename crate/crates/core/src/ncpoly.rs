//! Noncommutative polynomials over [`Scalar`] and rewrite systems on them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::scalars::Scalar;

/// Index of a generator inside its [`Alphabet`].
pub type Gen = u8;

/// Default reduction budget.
pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NcError {
    #[error("reduction exceeded the step budget of {0}")]
    NonTermination(usize),
    #[error("polynomial is not homogeneous in the delta degree")]
    Inhomogeneous,
    #[error("rule {0} does not decrease the monomial order")]
    NotDecreasing(String),
    #[error("rule {0} does not preserve the delta degree")]
    GradingViolated(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("relation reduces to a nonzero constant")]
    Inconsistent,
}

/// Grading and involution data for one generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorInfo {
    pub id: String,
    pub mu: i32,
    pub nu: i32,
    pub star: Gen,
    pub inverse: Option<Gen>,
    /// Weight in the monomial order.
    pub weight: u32,
}

impl GeneratorInfo {
    pub fn delta(&self) -> i32 {
        self.mu - self.nu
    }
}

/// Ordered generator set of a presentation; the index order is the
/// tie-breaking order of the monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    pub gens: Vec<GeneratorInfo>,
}

impl Alphabet {
    pub fn new(gens: Vec<GeneratorInfo>) -> Alphabet {
        Alphabet { gens }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn index(&self, id: &str) -> Option<Gen> {
        self.gens.iter().position(|g| g.id == id).map(|i| i as Gen)
    }

    pub fn gen(&self, g: Gen) -> &GeneratorInfo {
        &self.gens[g as usize]
    }

    pub fn delta(&self, g: Gen) -> i32 {
        self.gens[g as usize].delta()
    }

    pub fn word(&self, gens: &[Gen]) -> Word {
        Word::new(gens.iter().map(|&g| self.gens[g as usize].weight).sum(), gens.to_vec())
    }

    /// Word from generator ids.
    pub fn word_of(&self, ids: &[&str]) -> Result<Word, NcError> {
        let mut v = Vec::with_capacity(ids.len());
        for id in ids {
            v.push(self.index(id).ok_or_else(|| NcError::UnknownGenerator(String::from(*id)))?);
        }
        Ok(self.word(&v))
    }

    pub fn gen_poly(&self, id: &str) -> NCPoly {
        let g = self.index(id).unwrap_or_else(|| panic!("unknown generator {id}"));
        NCPoly::from_word(self.word(&[g]))
    }

    pub fn word_delta(&self, w: &Word) -> i32 {
        w.gens.iter().map(|&g| self.delta(g)).sum()
    }

    pub fn word_mu_nu(&self, w: &Word) -> (i32, i32) {
        w.gens.iter().fold((0, 0), |(m, n), &g| (m + self.gen(g).mu, n + self.gen(g).nu))
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return String::from("1");
        }
        let parts: Vec<&str> = w.gens.iter().map(|&g| self.gens[g as usize].id.as_str()).collect();
        parts.join("*")
    }

    /// All words of the given length.
    pub fn words_of_length(&self, n: usize) -> Vec<Word> {
        let mut out = alloc::vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &out {
                for g in 0..self.gens.len() {
                    let mut v: Vec<Gen> = w.clone();
                    v.push(g as Gen);
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(|v| self.word(&v)).collect()
    }
}

/// A monomial. Ordered by weight, then length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    weight: u32,
    gens: Vec<Gen>,
}

impl Word {
    pub fn new(weight: u32, gens: Vec<Gen>) -> Word {
        Word { weight, gens }
    }

    pub fn unit() -> Word {
        Word { weight: 0, gens: Vec::new() }
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&o.gens);
        Word { weight: self.weight + o.weight, gens }
    }

    fn splice(&self, pos: usize, len: usize, mid: &Word, alph_weight: u32) -> Word {
        let mut gens = Vec::with_capacity(self.gens.len() - len + mid.gens.len());
        gens.extend_from_slice(&self.gens[..pos]);
        gens.extend_from_slice(&mid.gens);
        gens.extend_from_slice(&self.gens[pos + len..]);
        Word { weight: self.weight - alph_weight + mid.weight, gens }
    }

    fn find(&self, pat: &[Gen]) -> Option<usize> {
        if pat.len() > self.gens.len() {
            return None;
        }
        (0..=self.gens.len() - pat.len()).find(|&i| &self.gens[i..i + pat.len()] == pat)
    }

    /// Subword `self[a..b]`, weights recomputed from `alph`.
    pub fn slice(&self, a: usize, b: usize, alph: &Alphabet) -> Word {
        alph.word(&self.gens[a..b])
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.weight
            .cmp(&o.weight)
            .then(self.gens.len().cmp(&o.gens.len()))
            .then_with(|| self.gens.cmp(&o.gens))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Finite linear combination of words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> NCPoly {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> NCPoly {
        NCPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> NCPoly {
        NCPoly::term(Word::unit(), c)
    }

    pub fn from_word(w: Word) -> NCPoly {
        NCPoly::term(w, Scalar::one())
    }

    pub fn term(w: Word, c: Scalar) -> NCPoly {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Leading (largest) word and its coefficient.
    pub fn lead(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, o: &NCPoly) -> NCPoly {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &NCPoly) -> NCPoly {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), -c);
        }
        r
    }

    pub fn neg(&self) -> NCPoly {
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect() }
    }

    /// Concatenation product without reduction.
    pub fn mul_raw(&self, o: &NCPoly) -> NCPoly {
        let mut r = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                r.add_term(w1.concat(w2), c1 * c2);
            }
        }
        r
    }

    /// Apply a scalar map to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> NCPoly {
        let mut r = NCPoly::zero();
        for (w, c) in &self.terms {
            r.add_term(w.clone(), f(c));
        }
        r
    }

    /// The star involution: reverse words, star generators, conjugate coefficients.
    pub fn star(&self, alph: &Alphabet) -> NCPoly {
        let mut r = NCPoly::zero();
        for (w, c) in &self.terms {
            let gens: Vec<Gen> = w.gens.iter().rev().map(|&g| alph.gen(g).star).collect();
            r.add_term(alph.word(&gens), c.conj());
        }
        r
    }

    /// Common delta degree of all words (0 for the zero polynomial).
    pub fn delta_degree(&self, alph: &Alphabet) -> Result<i32, NcError> {
        let mut it = self.terms.keys().map(|w| alph.word_delta(w));
        let d = match it.next() {
            Some(d) => d,
            None => return Ok(0),
        };
        if it.all(|e| e == d) {
            Ok(d)
        } else {
            Err(NcError::Inhomogeneous)
        }
    }

    /// Split into delta-homogeneous components.
    pub fn homogeneous_parts(&self, alph: &Alphabet) -> BTreeMap<i32, NCPoly> {
        let mut out: BTreeMap<i32, NCPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(alph.word_delta(w)).or_default().add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn display<'a>(&'a self, alph: &'a Alphabet) -> PolyDisplay<'a> {
        PolyDisplay { p: self, alph }
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(w, c)| (&w.gens, c))).finish()
    }
}

pub struct PolyDisplay<'a> {
    p: &'a NCPoly,
    alph: &'a Alphabet,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (w, c) in self.p.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            if !w.is_empty() {
                write!(f, "*{}", self.alph.format_word(w))?;
            }
        }
        Ok(())
    }
}

/// A rewrite rule `lhs -> rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

/// Ordered list of rules with a step budget.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    rules: Vec<Rule>,
    pairs: BTreeMap<(Gen, Gen), usize>,
    weights: Vec<u32>,
    pub budget: usize,
}

impl RewriteSystem {
    pub fn new(alph: &Alphabet) -> RewriteSystem {
        RewriteSystem {
            rules: Vec::new(),
            pairs: BTreeMap::new(),
            weights: alph.gens.iter().map(|g| g.weight).collect(),
            budget: DEFAULT_STEP_BUDGET,
        }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn push(&mut self, rule: Rule) {
        if rule.lhs.len() == 2 {
            self.pairs.entry((rule.lhs.gens[0], rule.lhs.gens[1])).or_insert(self.rules.len());
        }
        self.rules.push(rule);
    }

    /// Turn a relation `p = 0` into a rule for its leading word.
    pub fn orient(p: &NCPoly) -> Option<Rule> {
        let (lw, lc) = p.lead()?;
        let inv = lc.inv().ok()?;
        let mut rhs = p.clone();
        rhs.terms.remove(lw);
        Some(Rule { lhs: lw.clone(), rhs: rhs.scale(&(-&inv)) })
    }

    /// Add relations one at a time, each reduced by the rules already present.
    pub fn from_relations(alph: &Alphabet, relations: &[NCPoly]) -> Result<RewriteSystem, NcError> {
        let mut rs = RewriteSystem::new(alph);
        for r in relations {
            rs.add_relation(r)?;
        }
        Ok(rs)
    }

    /// Reduce a relation and, if it survives, add the oriented rule.
    pub fn add_relation(&mut self, r: &NCPoly) -> Result<bool, NcError> {
        let nf = self.normal_form(r)?;
        match RewriteSystem::orient(&nf) {
            Some(rule) if rule.lhs.is_empty() => Err(NcError::Inconsistent),
            Some(rule) => {
                self.push(rule);
                Ok(true)
            }
            None => Ok(false),
        }
    }

    fn find_redex(&self, w: &Word) -> Option<(usize, &Rule)> {
        let g = &w.gens;
        for i in 0..g.len().saturating_sub(1) {
            if let Some(&ri) = self.pairs.get(&(g[i], g[i + 1])) {
                return Some((i, &self.rules[ri]));
            }
        }
        for r in &self.rules {
            if r.lhs.len() != 2 {
                if let Some(i) = w.find(&r.lhs.gens) {
                    return Some((i, r));
                }
            }
        }
        None
    }

    pub fn is_reducible(&self, w: &Word) -> bool {
        self.find_redex(w).is_some()
    }

    /// Reduce to the unique irreducible representative.
    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly, NcError> {
        let mut work = p.terms.clone();
        let mut result = NCPoly::zero();
        let mut steps = 0usize;
        while let Some((w, c)) = work.pop_last() {
            match self.find_redex(&w) {
                Some((pos, rule)) => {
                    steps += 1;
                    if steps > self.budget {
                        return Err(NcError::NonTermination(self.budget));
                    }
                    for (rw, rc) in &rule.rhs.terms {
                        let nw = w.splice(pos, rule.lhs.len(), rw, rule.lhs.weight);
                        let nc = &c * rc;
                        add_into(&mut work, nw, nc);
                    }
                }
                None => {
                    result.terms.insert(w, c);
                }
            }
        }
        Ok(result)
    }

    /// Product of two polynomials reduced to normal form.
    pub fn multiply(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly, NcError> {
        self.normal_form(&a.mul_raw(b))
    }

    /// Apply exactly one rule at a given position.
    fn rewrite_at(&self, w: &Word, pos: usize, rule: &Rule) -> NCPoly {
        let mut r = NCPoly::zero();
        for (rw, rc) in &rule.rhs.terms {
            r.add_term(w.splice(pos, rule.lhs.len(), rw, rule.lhs.weight), rc.clone());
        }
        r
    }

    /// Check that every rule decreases the order and preserves delta.
    pub fn validate(&self, alph: &Alphabet) -> Result<(), NcError> {
        for r in &self.rules {
            let name = alph.format_word(&r.lhs);
            let d = alph.word_delta(&r.lhs);
            for (w, _) in r.rhs.terms() {
                if w >= &r.lhs {
                    return Err(NcError::NotDecreasing(name));
                }
                if alph.word_delta(w) != d {
                    return Err(NcError::GradingViolated(name));
                }
            }
        }
        Ok(())
    }

    /// All words of length ≤ `n` that are irreducible.
    pub fn normal_words(&self, alph: &Alphabet, n: usize) -> Vec<Word> {
        let mut out = alloc::vec![Word::unit()];
        let mut layer = alloc::vec![Word::unit()];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &layer {
                for g in 0..alph.len() {
                    let nw = w.concat(&alph.word(&[g as Gen]));
                    if !self.is_reducible(&nw) {
                        next.push(nw);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Diamond-lemma check over every overlap and inclusion of rule sides.
    pub fn local_confluence_check(&self, max_len: usize) -> ConfluenceReport {
        let mut report = ConfluenceReport::default();
        let mut seen = BTreeSet::new();
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let a = &r1.lhs.gens;
                let b = &r2.lhs.gens;
                // overlaps: suffix of a equals prefix of b
                for k in 1..a.len().min(b.len()) {
                    if a[a.len() - k..] != b[..k] {
                        continue;
                    }
                    let mut gens = a.clone();
                    gens.extend_from_slice(&b[k..]);
                    if gens.len() > max_len {
                        continue;
                    }
                    self.check_pair(&mut report, &mut seen, &gens, (i, 0), (j, a.len() - k));
                }
                // inclusion of b inside a
                if i != j && b.len() <= a.len() && a.len() <= max_len {
                    for pos in 0..=a.len() - b.len() {
                        if a[pos..pos + b.len()] == b[..] {
                            self.check_pair(&mut report, &mut seen, a, (i, 0), (j, pos));
                        }
                    }
                }
            }
        }
        report
    }

    fn check_pair(
        &self,
        report: &mut ConfluenceReport,
        seen: &mut BTreeSet<(Vec<Gen>, usize, usize, usize, usize)>,
        gens: &[Gen],
        (i, pi): (usize, usize),
        (j, pj): (usize, usize),
    ) {
        if !seen.insert((gens.to_vec(), i, pi, j, pj)) {
            return;
        }
        report.overlaps_checked += 1;
        let weight = self.word_weight(gens);
        let w = Word::new(weight, gens.to_vec());
        let left = self.normal_form(&self.rewrite_at(&w, pi, &self.rules[i]));
        let right = self.normal_form(&self.rewrite_at(&w, pj, &self.rules[j]));
        match (left, right) {
            (Ok(l), Ok(r)) if l == r => {}
            (l, r) => report.failures.push(CriticalPair {
                word: w,
                left: l.unwrap_or_default(),
                right: r.unwrap_or_default(),
            }),
        }
    }

    fn word_weight(&self, gens: &[Gen]) -> u32 {
        gens.iter().map(|&g| self.weights.get(g as usize).copied().unwrap_or(1)).sum()
    }
}

fn add_into(map: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&w) {
        Some(v) => {
            *v = &*v + &c;
            if v.is_zero() {
                map.remove(&w);
            }
        }
        None => {
            map.insert(w, c);
        }
    }
}

/// A divergent overlap.
#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub word: Word,
    pub left: NCPoly,
    pub right: NCPoly,
}

#[derive(Clone, Debug, Default)]
pub struct ConfluenceReport {
    pub overlaps_checked: usize,
    pub failures: Vec<CriticalPair>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.failures.is_empty()
    }
}

impl NCPoly {
    /// True if the polynomial is the constant 1.
    pub fn is_one_poly(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&Word::unit()).is_one()
    }
}
