//! Exact coefficient field: rational functions over the Gaussian rationals.
//!
//! Variables are `s` (with q = s²), the unimodular phases `u` = e^{iφ} and
//! `w` = e^{iψ}, and up to [`NPARAMS`] formal central parameters. Values are
//! kept as `num/den` with polynomial (non-negative exponent) numerator and
//! denominator, coprime, and a denominator whose lexicographically leading
//! coefficient is 1. Equality is representation equality.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Number of formal parameter slots.
pub const NPARAMS: usize = 8;
/// Total number of variables (s, u, w and the parameters).
pub const NVARS: usize = 3 + NPARAMS;

/// Gaussian rational a + bi.
pub type GaussRat = Complex<BigRational>;

/// Default display names of the parameter slots.
pub const PARAM_NAMES: [&str; NPARAMS] = ["lam", "rho", "lamp", "rhop", "c", "a", "r", "p7"];

/// A variable of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    S,
    U,
    W,
    Param(u8),
}

impl Var {
    pub fn index(self) -> usize {
        match self {
            Var::S => 0,
            Var::U => 1,
            Var::W => 2,
            Var::Param(p) => 3 + p as usize,
        }
    }

    pub fn from_index(i: usize) -> Var {
        match i {
            0 => Var::S,
            1 => Var::U,
            2 => Var::W,
            _ => Var::Param((i - 3) as u8),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::S => "s",
            Var::U => "u",
            Var::W => "w",
            Var::Param(p) => PARAM_NAMES[p as usize],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtContext,
}

/// Exponent vector over all variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(pub [i32; NVARS]);

impl Mono {
    pub fn one() -> Mono {
        Mono([0; NVARS])
    }

    pub fn var(v: Var, e: i32) -> Mono {
        let mut m = Mono::one();
        m.0[v.index()] = e;
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for i in 0..NVARS {
            r.0[i] += o.0[i];
        }
        r
    }

    pub fn div(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for i in 0..NVARS {
            r.0[i] -= o.0[i];
        }
        r
    }

    pub fn divides(&self, o: &Mono) -> bool {
        (0..NVARS).all(|i| self.0[i] <= o.0[i])
    }

    pub fn meet(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for i in 0..NVARS {
            r.0[i] = r.0[i].min(o.0[i]);
        }
        r
    }

    pub fn join(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for i in 0..NVARS {
            r.0[i] = r.0[i].max(o.0[i]);
        }
        r
    }

    pub fn total_degree(&self) -> i32 {
        self.0.iter().sum()
    }
}

fn gr_int(n: i64) -> GaussRat {
    Complex::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
}

fn gr_is_zero(c: &GaussRat) -> bool {
    c.re.is_zero() && c.im.is_zero()
}

fn gr_conj(c: &GaussRat) -> GaussRat {
    Complex::new(c.re.clone(), -c.im.clone())
}

fn rat_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

fn gr_to_c64(c: &GaussRat) -> Complex64 {
    Complex64::new(rat_to_f64(&c.re), rat_to_f64(&c.im))
}

/// Polynomial over the Gaussian rationals with non-negative exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, GaussRat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(c: GaussRat) -> Poly {
        Poly::term(Mono::one(), c)
    }

    pub fn one() -> Poly {
        Poly::constant(gr_int(1))
    }

    pub fn term(m: Mono, c: GaussRat) -> Poly {
        let mut terms = BTreeMap::new();
        if !gr_is_zero(&c) {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &GaussRat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Mono, c: GaussRat) {
        if gr_is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + &c;
                if gr_is_zero(v) {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        r
    }

    fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }

    fn sub(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, -c.clone());
        }
        r
    }

    fn mul(&self, o: &Poly) -> Poly {
        let mut r = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }

    fn scale(&self, c: &GaussRat) -> Poly {
        if gr_is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    fn shift(&self, m: &Mono) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect() }
    }

    fn unshift(&self, m: &Mono) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, v)| (k.div(m), v.clone())).collect() }
    }

    fn lead(&self) -> Option<(&Mono, &GaussRat)> {
        self.terms.iter().next_back()
    }

    fn single_term(&self) -> Option<(&Mono, &GaussRat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn min_mono(&self) -> Mono {
        let mut it = self.terms.keys();
        let mut m = match it.next() {
            Some(m) => *m,
            None => return Mono::one(),
        };
        for k in it {
            m = m.meet(k);
        }
        m
    }

    fn max_mono(&self) -> Mono {
        let mut m = Mono::one();
        for k in self.terms.keys() {
            m = m.join(k);
        }
        m
    }

    fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    fn degree_in(&self, v: usize) -> i32 {
        self.terms.keys().map(|m| m.0[v]).max().unwrap_or(0)
    }

    fn monic(&self) -> Poly {
        match self.lead() {
            Some((_, c)) => {
                let inv = c.inv();
                self.scale(&inv)
            }
            None => Poly::zero(),
        }
    }

    /// Coefficients of `self` viewed as a polynomial in variable `v`.
    fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let d = self.degree_in(v).max(0) as usize;
        let mut out = alloc::vec![Poly::zero(); d + 1];
        for (m, c) in &self.terms {
            let e = m.0[v] as usize;
            let mut mm = *m;
            mm.0[v] = 0;
            out[e].add_term(mm, c.clone());
        }
        out
    }

    fn from_coeffs_in(v: usize, cs: &[Poly]) -> Poly {
        let mut r = Poly::zero();
        for (e, c) in cs.iter().enumerate() {
            let m = Mono::var(Var::from_index(v), e as i32);
            for (k, val) in &c.terms {
                r.add_term(k.mul(&m), val.clone());
            }
        }
        r
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.lead()?;
        let (dm, dcinv) = (*dm, dc.inv());
        let mut rem = self.clone();
        let mut q = Poly::zero();
        while let Some((rm, rc)) = rem.lead() {
            if !dm.divides(rm) {
                return None;
            }
            let tm = rm.div(&dm);
            let tc = rc * &dcinv;
            rem = rem.sub(&d.shift(&tm).scale(&tc));
            q.add_term(tm, tc);
        }
        Some(q)
    }

    fn content_in(&self, v: usize) -> Poly {
        let mut g = Poly::zero();
        for c in self.coeffs_in(v) {
            if c.is_zero() {
                continue;
            }
            g = if g.is_zero() { c.monic() } else { poly_gcd(&g, &c) };
            if g.is_constant() {
                return Poly::one();
            }
        }
        g
    }

    /// Pseudo-remainder in `v`: `lc(b)^(deg a - deg b + 1) * self mod b`.
    fn prem_in(&self, b: &Poly, v: usize) -> Poly {
        let bc = b.coeffs_in(v);
        let db = bc.len() - 1;
        let lcb = &bc[db];
        let mut r = self.coeffs_in(v);
        let mut left = (r.len() as i32) - (db as i32);
        loop {
            while r.len() > 1 && r.last().map(|c| c.is_zero()).unwrap_or(false) {
                r.pop();
            }
            if r.len() - 1 < db || (r.len() == 1 && r[0].is_zero()) {
                break;
            }
            let dr = r.len() - 1;
            let lcr = r[dr].clone();
            for c in r.iter_mut() {
                *c = c.mul(lcb);
            }
            for (i, bci) in bc.iter().enumerate() {
                let t = lcr.mul(bci);
                r[dr - db + i] = r[dr - db + i].sub(&t);
            }
            left -= 1;
            if db == 0 {
                r = alloc::vec![Poly::zero()];
                break;
            }
        }
        let r = Poly::from_coeffs_in(v, &r);
        if left > 0 && !r.is_zero() {
            r.mul(&lcb.pow(left as u32))
        } else {
            r
        }
    }

    fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    fn lead_coeff_in(&self, v: usize) -> Poly {
        self.coeffs_in(v).pop().unwrap_or_else(Poly::zero)
    }

    pub fn eval(&self, vals: &[Complex64; NVARS]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = gr_to_c64(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    t *= vals[i].powi(e);
                }
            }
            acc += t;
        }
        acc
    }
}

/// Greatest common divisor, monic under the lexicographic order.
fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let ma = a.min_mono();
    let mb = b.min_mono();
    let m = ma.meet(&mb);
    let g = gcd_rec(&a.unshift(&ma), &b.unshift(&mb));
    g.shift(&m).monic()
}

fn gcd_rec(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if let Some((m, _)) = a.single_term() {
        if m.is_one() {
            return Poly::one();
        }
    }
    // eliminate the variable of least degree first
    let v = match (0..NVARS)
        .filter(|&i| a.degree_in(i) > 0 || b.degree_in(i) > 0)
        .min_by_key(|&i| a.degree_in(i).max(b.degree_in(i)))
    {
        Some(v) => v,
        None => return Poly::one(),
    };
    if a.degree_in(v) == 0 {
        return poly_gcd(a, &b.content_in(v));
    }
    if b.degree_in(v) == 0 {
        return poly_gcd(&a.content_in(v), b);
    }
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = poly_gcd(&ca, &cb);
    let mut pa = a.div_exact(&ca).expect("content divides");
    let mut pb = b.div_exact(&cb).expect("content divides");
    if pa.degree_in(v) < pb.degree_in(v) {
        core::mem::swap(&mut pa, &mut pb);
    }
    if coprime_image(&pa, &pb, v) {
        return c;
    }
    // subresultant remainder sequence keeps the coefficients small
    let (mut g, mut h) = (Poly::one(), Poly::one());
    let g = loop {
        let d = (pa.degree_in(v) - pb.degree_in(v)) as u32;
        let r = pa.prem_in(&pb, v);
        if r.is_zero() {
            break pb;
        }
        if r.degree_in(v) == 0 {
            break Poly::one();
        }
        let scale = g.mul(&h.pow(d));
        pa = pb;
        pb = r.div_exact(&scale).expect("subresultant divides");
        g = pa.lead_coeff_in(v);
        h = if d == 0 {
            h
        } else {
            g.pow(d).div_exact(&h.pow(d - 1)).expect("subresultant divides")
        };
    };
    let g = if g.degree_in(v) > 0 {
        let cg = g.content_in(v);
        g.div_exact(&cg).expect("content divides")
    } else {
        g
    };
    g.mul(&c).monic()
}

/// Image of `p` in one variable `v`, the others set to small primes.
fn univariate_image(p: &Poly, v: usize) -> Vec<GaussRat> {
    const PTS: [i64; NVARS] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    let mut out = alloc::vec![gr_int(0); p.degree_in(v).max(0) as usize + 1];
    for (m, c) in &p.terms {
        let mut x = BigRational::one();
        for (i, &e) in m.0.iter().enumerate() {
            if i != v && e != 0 {
                x *= num_traits::pow(BigRational::from_integer(BigInt::from(PTS[i])), e as usize);
            }
        }
        let t = Complex::new(&c.re * &x, &c.im * &x);
        let slot = &mut out[m.0[v] as usize];
        *slot = &*slot + t;
    }
    out
}

/// True when the one-variable images are coprime with undiminished degrees,
/// which forces the gcd of `a` and `b` to be free of `v`.
fn coprime_image(a: &Poly, b: &Poly, v: usize) -> bool {
    let mut x = univariate_image(a, v);
    let mut y = univariate_image(b, v);
    if x.last().map_or(true, gr_is_zero) || y.last().map_or(true, gr_is_zero) {
        return false;
    }
    if x.len() < y.len() {
        core::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        let lc = y.last().expect("nonempty").inv();
        while x.len() >= y.len() {
            let f = x.last().expect("nonempty") * &lc;
            let off = x.len() - y.len();
            for (i, yc) in y.iter().enumerate() {
                x[off + i] = &x[off + i] - &(&f * yc);
            }
            x.pop();
        }
        while x.len() > 1 && x.last().map_or(false, gr_is_zero) {
            x.pop();
        }
        if x.len() == 1 && gr_is_zero(&x[0]) {
            return false;
        }
        core::mem::swap(&mut x, &mut y);
    }
    true
}

/// Conjugate a polynomial as a Laurent polynomial, returned as `p / m`.
fn poly_conj(p: &Poly) -> (Poly, Mono) {
    let mx = p.max_mono();
    let mut shift = Mono::one();
    shift.0[Var::U.index()] = mx.0[Var::U.index()];
    shift.0[Var::W.index()] = mx.0[Var::W.index()];
    let mut r = Poly::zero();
    for (m, c) in &p.terms {
        let mut k = *m;
        for v in [Var::U.index(), Var::W.index()] {
            k.0[v] = shift.0[v] - m.0[v];
        }
        r.add_term(k, gr_conj(c));
    }
    (r, shift)
}

/// Exact element of the coefficient field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

/// Point at which scalars are evaluated numerically.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericContext {
    pub q: f64,
    pub phi: f64,
    pub psi: f64,
    pub params: [Complex64; NPARAMS],
}

impl NumericContext {
    pub fn new(q: f64, phi: f64, psi: f64) -> NumericContext {
        NumericContext { q, phi, psi, params: [Complex64::new(1.0, 0.0); NPARAMS] }
    }

    pub fn with_param(mut self, slot: u8, v: Complex64) -> NumericContext {
        self.params[slot as usize] = v;
        self
    }

    fn values(&self) -> [Complex64; NVARS] {
        let mut v = [Complex64::new(0.0, 0.0); NVARS];
        v[0] = Complex64::new(libm::sqrt(self.q), 0.0);
        v[1] = Complex64::new(libm::cos(self.phi), libm::sin(self.phi));
        v[2] = Complex64::new(libm::cos(self.psi), libm::sin(self.psi));
        v[3..].copy_from_slice(&self.params);
        v
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar { num: Poly::constant(gr_int(n)), den: Poly::one() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Scalar {
        Scalar::from_int(n).div(&Scalar::from_int(d)).expect("nonzero denominator")
    }

    pub fn from_gauss(c: GaussRat) -> Scalar {
        Scalar { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Scalar {
        Scalar::normalize(p, Poly::one())
    }

    pub fn i() -> Scalar {
        Scalar::from_gauss(Complex::new(BigRational::zero(), BigRational::one()))
    }

    /// Laurent monomial c · Π v^e.
    pub fn monomial(c: i64, exps: &[(Var, i32)]) -> Scalar {
        let mut m = Mono::one();
        for &(v, e) in exps {
            m.0[v.index()] += e;
        }
        Scalar::from_laurent_term(m, gr_int(c))
    }

    /// Laurent term with arbitrary (possibly negative) exponents.
    pub fn from_laurent_term(m: Mono, c: GaussRat) -> Scalar {
        let mut pos = Mono::one();
        let mut neg = Mono::one();
        for i in 0..NVARS {
            if m.0[i] >= 0 {
                pos.0[i] = m.0[i];
            } else {
                neg.0[i] = -m.0[i];
            }
        }
        Scalar::normalize(Poly::term(pos, c), Poly::term(neg, gr_int(1)))
    }

    /// Build from numerator and denominator Laurent term lists.
    pub fn from_terms(num: &[(Mono, GaussRat)], den: &[(Mono, GaussRat)]) -> Result<Scalar, ScalarError> {
        let mut n = Scalar::zero();
        for (m, c) in num {
            n = &n + &Scalar::from_laurent_term(*m, c.clone());
        }
        let mut d = Scalar::zero();
        for (m, c) in den {
            d = &d + &Scalar::from_laurent_term(*m, c.clone());
        }
        n.div(&d)
    }

    pub fn var(v: Var) -> Scalar {
        Scalar::monomial(1, &[(v, 1)])
    }

    pub fn s() -> Scalar {
        Scalar::var(Var::S)
    }

    pub fn q() -> Scalar {
        Scalar::monomial(1, &[(Var::S, 2)])
    }

    /// q^n for integer n.
    pub fn q_pow(n: i32) -> Scalar {
        Scalar::monomial(1, &[(Var::S, 2 * n)])
    }

    pub fn u() -> Scalar {
        Scalar::var(Var::U)
    }

    /// u^n for integer n.
    pub fn u_pow(n: i32) -> Scalar {
        Scalar::monomial(1, &[(Var::U, n)])
    }

    pub fn w() -> Scalar {
        Scalar::var(Var::W)
    }

    pub fn param(slot: u8) -> Scalar {
        Scalar::var(Var::Param(slot))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.terms.len() == 1
            && self.num == self.den
    }

    fn normalize(num: Poly, den: Poly) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        let (num, den) = if let Some((dm, _)) = den.single_term() {
            let common = num.min_mono().meet(dm);
            (num.unshift(&common), den.unshift(&common))
        } else {
            let g = poly_gcd(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        Scalar::rescaled(num, den)
    }

    /// Make the denominator monic; `num / den` must already be reduced.
    fn rescaled(num: Poly, den: Poly) -> Scalar {
        let lc = den.lead().map(|(_, c)| c.inv()).expect("nonzero denominator");
        Scalar { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::rescaled(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &o.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, n: i32) -> Result<Scalar, ScalarError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut r = Scalar::one();
        for _ in 0..n.unsigned_abs() {
            r = &r * &base;
        }
        Ok(r)
    }

    /// Complex conjugation: i ↦ −i, u ↦ u⁻¹, w ↦ w⁻¹.
    pub fn conj(&self) -> Scalar {
        let (n, mn) = poly_conj(&self.num);
        let (d, md) = poly_conj(&self.den);
        Scalar::normalize(n.shift(&md), d.shift(&mn))
    }

    /// Substitute scalars for some variables.
    pub fn subs(&self, assign: &[(Var, Scalar)]) -> Result<Scalar, ScalarError> {
        let n = subs_poly(&self.num, assign)?;
        let d = subs_poly(&self.den, assign)?;
        n.div(&d)
    }

    pub fn eval(&self, ctx: &NumericContext) -> Result<Complex64, ScalarError> {
        let vals = ctx.values();
        let d = self.den.eval(&vals);
        if d.norm() < 1e-14 {
            return Err(ScalarError::PoleAtContext);
        }
        Ok(self.num.eval(&vals) / d)
    }

    /// True if the scalar is a constant (no variables).
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Whether variable `v` occurs.
    pub fn mentions(&self, v: Var) -> bool {
        let i = v.index();
        self.num.degree_in(i) > 0 || self.den.degree_in(i) > 0
    }

    /// If the scalar is c·(Laurent monomial), return it.
    pub fn as_laurent_monomial(&self) -> Option<(GaussRat, Mono)> {
        let (nm, nc) = self.num.single_term()?;
        let (dm, _) = self.den.single_term()?;
        Some((nc.clone(), nm.div(dm)))
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, names: &[&str; NVARS]) -> fmt::Result {
        if let Some((dm, _)) = self.den.single_term() {
            let dm = *dm;
            let mut first = true;
            for (m, c) in self.num.terms.iter().rev() {
                write_term(f, c, &m.div(&dm), names, first)?;
                first = false;
            }
            Ok(())
        } else {
            f.write_str("(")?;
            let mut first = true;
            for (m, c) in self.num.terms.iter().rev() {
                write_term(f, c, m, names, first)?;
                first = false;
            }
            f.write_str(")/(")?;
            let mut first = true;
            for (m, c) in self.den.terms.iter().rev() {
                write_term(f, c, m, names, first)?;
                first = false;
            }
            f.write_str(")")
        }
    }
}

fn subs_poly(p: &Poly, assign: &[(Var, Scalar)]) -> Result<Scalar, ScalarError> {
    let mut acc = Scalar::zero();
    for (m, c) in &p.terms {
        let mut rest = *m;
        let mut t = Scalar::from_gauss(c.clone());
        for (v, val) in assign {
            let e = m.0[v.index()];
            if e != 0 {
                rest.0[v.index()] = 0;
                t = &t * &val.pow(e)?;
            }
        }
        t = &t * &Scalar::from_laurent_term(rest, gr_int(1));
        acc = &acc + &t;
    }
    Ok(acc)
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &GaussRat) -> fmt::Result {
    if c.im.is_zero() {
        write!(f, "{}", c.re)
    } else if c.re.is_zero() {
        write!(f, "{}i", c.im)
    } else {
        write!(f, "({}{}{}i)", c.re, if c.im.is_negative() { "" } else { "+" }, c.im)
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &GaussRat,
    m: &Mono,
    names: &[&str; NVARS],
    first: bool,
) -> fmt::Result {
    let neg = c.im.is_zero() && c.re.is_negative();
    let c = if neg { -c.clone() } else { c.clone() };
    if neg {
        f.write_str(if first { "-" } else { " - " })?;
    } else if !first {
        f.write_str(" + ")?;
    }
    let unit = c.im.is_zero() && c.re.is_one();
    let mut wrote = false;
    if !unit || m.is_one() {
        write_coeff(f, &c)?;
        wrote = true;
    }
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if wrote {
            f.write_str("*")?;
        }
        if e == 1 {
            write!(f, "{}", names[i])?;
        } else {
            write!(f, "{}^{}", names[i], e)?;
        }
        wrote = true;
    }
    Ok(())
}

fn default_names() -> [&'static str; NVARS] {
    let mut n = [""; NVARS];
    for (i, slot) in n.iter_mut().enumerate() {
        *slot = Var::from_index(i).name();
    }
    n
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, &default_names())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Scalar {
    /// Render with custom parameter names.
    pub fn to_string_with(&self, params: &[String]) -> String {
        let mut names = default_names();
        for (i, p) in params.iter().enumerate().take(NPARAMS) {
            names[3 + i] = p.as_str();
        }
        struct W<'a>(&'a Scalar, [&'a str; NVARS]);
        impl fmt::Display for W<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, &self.1)
            }
        }
        alloc::format!("{}", W(self, names))
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Scalar::normalize(self.num.add(&o.num), self.den.clone());
        }
        if let (Some((d1, _)), Some((d2, _))) = (self.den.single_term(), o.den.single_term()) {
            let l = d1.join(d2);
            let n = self.num.shift(&l.div(d1)).add(&o.num.shift(&l.div(d2)));
            return Scalar::normalize(n, Poly::term(l, gr_int(1)));
        }
        // only the common part of the denominators can cancel
        let g = poly_gcd(&self.den, &o.den);
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = o.den.div_exact(&g).expect("gcd divides");
        let n = self.num.mul(&d2).add(&o.num.mul(&d1));
        if n.is_zero() {
            return Scalar::zero();
        }
        let h = poly_gcd(&n, &g);
        Scalar::rescaled(n.div_exact(&h).expect("gcd divides"), d1.mul(&o.den).div_exact(&h).expect("gcd divides"))
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return o.clone();
        }
        let g1 = poly_gcd(&self.num, &o.den);
        let g2 = poly_gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        Scalar::rescaled(n1.mul(&n2), d1.mul(&d2))
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        &self + &o
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

/// The q-number [m]_q = q^{m-1} + q^{m-3} + … + q^{1-m}.
pub fn q_number(m: i64) -> Scalar {
    if m < 0 {
        return -q_number(-m);
    }
    let mut r = Scalar::zero();
    for j in 0..m {
        r = &r + &Scalar::q_pow((m - 1 - 2 * j) as i32);
    }
    r
}

/// The q-factorial [m]_q! = [1]_q … [m]_q.
pub fn q_factorial(m: u32) -> Scalar {
    let mut r = Scalar::one();
    for j in 1..=m as i64 {
        r = &r * &q_number(j);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::q()
    }

    fn lam() -> Scalar {
        Scalar::param(0)
    }

    #[test]
    fn dense_multivariate_quotients_stay_fast() {
        // used to stall in the remainder sequence
        let m = |c, s, u, w, l| Scalar::monomial(c, &[(Var::S, s), (Var::U, u), (Var::W, w), (Var::Param(0), l)]);
        let n = &(&m(-1, -1, 2, 1, 0) + &m(-3, -2, 1, 1, 1)) + &m(2, -2, -2, 0, 0);
        let d = &(&m(1, 0, 3, -1, 1) + &m(-3, -2, 1, -1, 0)) + &m(3, -3, 1, -1, 1);
        let x = n.div(&d).unwrap();
        let y = n.div(&(&d + &Scalar::one())).unwrap();
        let ctx = NumericContext::new(0.63, 0.41, 1.3).with_param(0, Complex64::new(0.8, 0.0));
        let (nv, dv) = (n.eval(&ctx).unwrap(), d.eval(&ctx).unwrap());
        let z = (&x * &y).eval(&ctx).unwrap();
        assert!((z - nv * nv / (dv * (dv + 1.0))).norm() < 1e-9 * z.norm());
    }

    #[test]
    fn common_factors_cancel() {
        let a = &(&Scalar::s() + &lam()) + &Scalar::u();
        let b = &Scalar::q() - &(&lam() * &Scalar::w());
        let c = &Scalar::u_pow(2) + &(&Scalar::s() * &lam());
        let lhs = (&a * &b).div(&(&a * &c)).unwrap();
        assert_eq!(lhs, b.div(&c).unwrap());
        assert!((&(&b.div(&c).unwrap() * &c) - &b).is_zero());
    }

    #[test]
    fn additive_identity_and_cancellation() {
        assert_eq!(&Scalar::s() + &Scalar::zero(), Scalar::s());
        let a = &Scalar::u() + &Scalar::u_pow(-1);
        assert!((&a - &a).is_zero());
        let d1 = (&Scalar::s() - &Scalar::monomial(1, &[(Var::S, -1)])).inv().unwrap();
        let d2 = (&Scalar::monomial(1, &[(Var::S, -1)]) - &Scalar::s()).inv().unwrap();
        assert!((&d1 + &d2).is_zero());
    }

    #[test]
    fn conj_and_inverse_pairs() {
        assert_eq!(Scalar::u_pow(4).conj(), Scalar::u_pow(-4));
        assert!((&Scalar::q() * &Scalar::q_pow(-1)).is_one());
        let x = &Scalar::q() - &Scalar::q_pow(-1);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(Scalar::i().conj(), -Scalar::i());
    }

    #[test]
    fn q_numbers() {
        assert!(q_number(0).is_zero());
        assert!(q_number(1).is_one());
        assert_eq!(q_number(2), &q() + &Scalar::q_pow(-1));
        assert_eq!(q_number(-3), -q_number(3));
        assert!(q_factorial(0).is_one());
        assert!(q_factorial(1).is_one());
        assert_eq!(q_factorial(2), q_number(2));
        // [m] = (q^m - q^-m)/(q - q^-1)
        for m in 0..6 {
            let lhs = (&Scalar::q_pow(m) - &Scalar::q_pow(-m))
                .div(&(&q() - &Scalar::q_pow(-1)))
                .unwrap();
            assert_eq!(lhs, q_number(m as i64));
        }
    }

    #[test]
    fn evaluation() {
        let ctx = NumericContext::new(2.0, 0.0, 0.0);
        assert!((q_number(2).eval(&ctx).unwrap().re - 2.5).abs() < 1e-12);
        let ctx = NumericContext::new(1.0, core::f64::consts::FRAC_PI_2, 0.0);
        let v = Scalar::u_pow(2).eval(&ctx).unwrap();
        assert!((v - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        let ctx = NumericContext::new(4.0, 0.0, 0.0);
        assert!((Scalar::s().eval(&ctx).unwrap().re - 2.0).abs() < 1e-12);
        let pole = (&Scalar::q() - &Scalar::one()).inv().unwrap();
        assert_eq!(pole.eval(&NumericContext::new(1.0, 0.0, 0.0)), Err(ScalarError::PoleAtContext));
    }

    #[test]
    fn gcd_cancels_common_factors() {
        // (q^2 - 1)/(q - 1) = q + 1
        let a = &Scalar::q_pow(2) - &Scalar::one();
        let b = &q() - &Scalar::one();
        assert_eq!(a.div(&b).unwrap(), &q() + &Scalar::one());
        // multivariate: (u^2 s^2 - 1)/(u s - 1) = u s + 1
        let us = &Scalar::u() * &Scalar::s();
        let num = &(&us * &us) - &Scalar::one();
        let den = &us - &Scalar::one();
        assert_eq!(num.div(&den).unwrap(), &us + &Scalar::one());
        // (x - y)(x + 2y) / ((x - y)(x + lam)) with x = s, y = u
        let x = Scalar::s();
        let y = Scalar::u();
        let lam = Scalar::param(0);
        let f = &x - &y;
        let n = &f * &(&x + &(&Scalar::from_int(2) * &y));
        let d = &f * &(&x + &lam);
        let r = n.div(&d).unwrap();
        let expect = (&x + &(&Scalar::from_int(2) * &y)).div(&(&x + &lam)).unwrap();
        assert_eq!(r, expect);
    }

    #[test]
    fn subs_specializes() {
        let x = &(&Scalar::u_pow(4) * &Scalar::q()) + &Scalar::u_pow(-2);
        let r = x.subs(&[(Var::U, Scalar::one())]).unwrap();
        assert_eq!(r, &Scalar::q() + &Scalar::one());
    }

    #[test]
    fn display_is_readable() {
        let x = &Scalar::monomial(-1, &[(Var::S, -2), (Var::U, 4)]) + &Scalar::one();
        let txt = alloc::format!("{}", x);
        assert!(txt.contains("s^-2"));
        assert!(txt.contains("u^4"));
    }
}
