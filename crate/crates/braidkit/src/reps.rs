//! Numeric finite-dimensional representations T_{l,ψ} of U_{q,φ}(û(2)),
//! irreducibility via the commutant, the sphere action in matrix form and
//! the unbounded-spectrum witness.

use nalgebra::DMatrix;
use num_complex::Complex64;

use braidkit_core::ncpoly::{Alphabet, Gen, NCPoly};
use braidkit_core::presentations::{podles_sphere, uq_hat_u2, SphereParams};
use braidkit_core::scalars::{NumericContext, Scalar, ScalarError};
use braidkit_core::spheres::sphere_action_table;

pub type CMatrix = DMatrix<Complex64>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RepError {
    #[error("singular values cluster at the threshold {0:e}")]
    IllConditioned(f64),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Parameters of T_{l,ψ}; `two_l` is 2l.
#[derive(Clone, Debug)]
pub struct RepParams {
    pub two_l: u32,
    pub psi: f64,
    /// Common sign of T(e) and T(f).
    pub sign: f64,
    pub ctx: NumericContext,
}

impl RepParams {
    pub fn new(two_l: u32, q: f64, phi: f64, psi: f64) -> RepParams {
        RepParams { two_l, psi, sign: 1.0, ctx: NumericContext::new(q, phi, psi) }
    }

    pub fn dim(&self) -> usize {
        self.two_l as usize + 1
    }
}

/// Matrices of e, f, k, k* in the basis e_{-l}, …, e_l.
#[derive(Clone, Debug, PartialEq)]
pub struct RepSet {
    pub e: CMatrix,
    pub f: CMatrix,
    pub k: CMatrix,
    pub kstar: CMatrix,
}

/// [n]_q as a real number, regular at q = 1.
pub fn q_number(n: i64, q: f64) -> f64 {
    if n < 0 {
        return -q_number(-n, q);
    }
    (0..n).map(|j| q.powf((n - 1 - 2 * j) as f64)).sum()
}

pub fn build_rep(p: &RepParams) -> RepSet {
    let d = p.dim();
    let q = p.ctx.q;
    let two_l = p.two_l as i64;
    let mut r = RepSet {
        e: CMatrix::zeros(d, d),
        f: CMatrix::zeros(d, d),
        k: CMatrix::zeros(d, d),
        kstar: CMatrix::zeros(d, d),
    };
    for i in 0..d {
        // 2m = 2i − 2l
        let two_m = 2 * i as i64 - two_l;
        let m = two_m as f64 / 2.0;
        let phase = Complex64::from_polar(1.0, -4.0 * m * p.ctx.phi - p.psi);
        r.k[(i, i)] = phase * q.powf(m);
        r.kstar[(i, i)] = phase.conj() * q.powf(m);
        if i + 1 < d {
            // f e_m = ±√([l−m][l+m+1]) e_{m+1}
            let v = q_number((two_l - two_m) / 2, q) * q_number((two_l + two_m) / 2 + 1, q);
            r.f[(i + 1, i)] = Complex64::new(p.sign * v.sqrt(), 0.0);
        }
        if i > 0 {
            let v = q_number((two_l + two_m) / 2, q) * q_number((two_l - two_m) / 2 + 1, q);
            r.e[(i - 1, i)] = Complex64::new(p.sign * v.sqrt(), 0.0);
        }
    }
    r
}

impl RepSet {
    pub fn dim(&self) -> usize {
        self.e.nrows()
    }

    pub fn direct_sum(&self, o: &RepSet) -> RepSet {
        let sum = |a: &CMatrix, b: &CMatrix| {
            let (n, m) = (a.nrows(), b.nrows());
            let mut c = CMatrix::zeros(n + m, n + m);
            c.view_mut((0, 0), (n, n)).copy_from(a);
            c.view_mut((n, n), (m, m)).copy_from(b);
            c
        };
        RepSet {
            e: sum(&self.e, &o.e),
            f: sum(&self.f, &o.f),
            k: sum(&self.k, &o.k),
            kstar: sum(&self.kstar, &o.kstar),
        }
    }

    /// Matrices indexed by the generators of U_{q,φ}(û(2)).
    fn generator_matrices(&self, al: &Alphabet) -> Result<Vec<CMatrix>, RepError> {
        let inv = |m: &CMatrix| m.clone().try_inverse().ok_or_else(|| RepError::Precondition("singular k".into()));
        al.gens
            .iter()
            .map(|g| match g.id.as_str() {
                "e" => Ok(self.e.clone()),
                "f" => Ok(self.f.clone()),
                "k" => Ok(self.k.clone()),
                "kstar" => Ok(self.kstar.clone()),
                "k_inv" => inv(&self.k),
                "kstar_inv" => inv(&self.kstar),
                other => Err(RepError::Precondition(format!("no matrix for {other}"))),
            })
            .collect()
    }

    /// K eigenvalues in basis order.
    pub fn k_spectrum(&self) -> Vec<Complex64> {
        (0..self.dim()).map(|i| self.k[(i, i)]).collect()
    }
}

/// Evaluate a polynomial on generator matrices.
pub fn eval_poly(p: &NCPoly, mats: &[CMatrix], ctx: &NumericContext) -> Result<CMatrix, RepError> {
    let d = mats.first().map_or(1, |m| m.nrows());
    let mut acc = CMatrix::zeros(d, d);
    for (w, c) in p.terms() {
        let mut m = CMatrix::identity(d, d);
        for &g in w.gens() {
            m *= &mats[g as usize];
        }
        acc += m * c.eval(ctx)?;
    }
    Ok(acc)
}

/// Multiply a relation through by any coefficient denominator that vanishes
/// at `ctx` (at q = 1 the ef relation has a pole).
fn regularize(rel: &NCPoly, ctx: &NumericContext) -> Result<NCPoly, RepError> {
    let mut rel = rel.clone();
    for _ in 0..4 {
        let pole = rel.terms().find(|(_, c)| c.eval(ctx).is_err()).map(|(_, c)| c.den().clone());
        match pole {
            Some(d) => rel = rel.scale(&Scalar::from_poly(d)),
            None => break,
        }
    }
    Ok(rel)
}

pub fn operator_norm(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone().svd(false, false).singular_values.max()
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    /// (relation index, operator-norm residual)
    pub residuals: Vec<(usize, f64)>,
    pub max_residual: f64,
    pub pass: bool,
}

/// Operator-norm residuals of every relation of U_{q,φ}(û(2)), the
/// conjugate and inverse relations included.
pub fn check_relations(r: &RepSet, ctx: &NumericContext, tol: f64) -> Result<RelationReport, RepError> {
    let u = uq_hat_u2();
    let mats = r.generator_matrices(&u.alphabet)?;
    let mut residuals = Vec::new();
    let mut rels: Vec<NCPoly> = u.relations.clone();
    rels.extend(u.relations.iter().map(|r| u.star(r)));
    for (i, g) in u.alphabet.gens.iter().enumerate() {
        if let Some(j) = g.inverse {
            let w = u.alphabet.word(&[i as Gen, j]);
            rels.push(NCPoly::from_word(w).sub(&NCPoly::one()));
        }
    }
    for (i, rel) in rels.iter().enumerate() {
        let rel = regularize(rel, ctx)?;
        residuals.push((i, operator_norm(&eval_poly(&rel, &mats, ctx)?)));
    }
    let max_residual = residuals.iter().map(|x| x.1).fold(0.0, f64::max);
    Ok(RelationReport { residuals, max_residual, pass: max_residual <= tol })
}

/// dim{M : [M, X] = 0 for X = E, F, K, K*}, from the singular values of the
/// stacked commutator map.
pub fn commutant_dimension(r: &RepSet, tol: f64) -> Result<usize, RepError> {
    let n = r.dim();
    let id = CMatrix::identity(n, n);
    let mut stacked = CMatrix::zeros(4 * n * n, n * n);
    for (b, x) in [&r.e, &r.f, &r.k, &r.kstar].into_iter().enumerate() {
        // vec(XM − MX) = (I⊗X − Xᵀ⊗I) vec(M)
        let op = id.kronecker(x) - x.transpose().kronecker(&id);
        stacked.view_mut((b * n * n, 0), (n * n, n * n)).copy_from(&op);
    }
    let sv = stacked.svd(false, false).singular_values;
    let top = sv.max().max(1.0);
    let thr = tol * top;
    if sv.iter().any(|&s| s > thr / 10.0 && s < thr * 10.0 && s != 0.0) {
        return Err(RepError::IllConditioned(thr));
    }
    // singular values beyond the row count are implicit zeros
    let small = sv.iter().filter(|&&s| s <= thr).count();
    Ok(small + (n * n).saturating_sub(sv.len()))
}

/// Matrices of e, f, k, k* on (e'_1, e_0, e'_{-1}); column j is the image
/// of basis vector j.
#[derive(Clone, Debug)]
pub struct SphereMatrices {
    pub e: CMatrix,
    pub f: CMatrix,
    pub k: CMatrix,
    pub kstar: CMatrix,
}

pub fn sphere_fundamental_action(ctx: &NumericContext) -> Result<SphereMatrices, RepError> {
    let u = uq_hat_u2();
    let sphere = podles_sphere(&SphereParams::formal()).map_err(|e| RepError::Precondition(e.to_string()))?;
    let table = sphere_action_table(&u, &sphere, &Scalar::one());
    let order = ["e1p", "e0", "em1p"];
    let mat = |h: &str| -> Result<CMatrix, RepError> {
        let mut m = CMatrix::zeros(3, 3);
        for (j, x) in order.iter().enumerate() {
            let Some(img) = table.get(&(u.index(h), sphere.index(x))) else { continue };
            for (w, c) in img.terms() {
                let g = w.gens()[0];
                let i = order.iter().position(|y| sphere.alphabet.gen(g).id == *y).expect("sphere generator");
                m[(i, j)] += c.eval(ctx)?;
            }
        }
        Ok(m)
    };
    Ok(SphereMatrices { e: mat("e")?, f: mat("f")?, k: mat("k")?, kstar: mat("kstar")? })
}

/// Whether D⁻¹ A D = B for some invertible diagonal D, for all pairs.
pub fn diagonally_similar(a: &[&CMatrix], b: &[&CMatrix], tol: f64) -> bool {
    let n = a[0].nrows();
    // fix D through the first matrix's subdiagonal entries
    let mut d = vec![Complex64::new(1.0, 0.0); n];
    for i in 1..n {
        let (x, y) = (a[0][(i, i - 1)], b[0][(i, i - 1)]);
        if x.norm() < tol || y.norm() < tol {
            return false;
        }
        // B_{i,i-1} = d_i⁻¹ A_{i,i-1} d_{i-1}
        d[i] = x * d[i - 1] / y;
    }
    a.iter().zip(b).all(|(x, y)| {
        (0..n).all(|i| (0..n).all(|j| (x[(i, j)] * d[j] / d[i] - y[(i, j)]).norm() <= tol))
    })
}

/// The sphere matrices in the order (e'_{-1}, e_0, e'_1) agree with T_{1,0}
/// up to a diagonal change of basis.
pub fn sphere_matches_spin_one(ctx: &NumericContext, tol: f64) -> Result<bool, RepError> {
    let s = sphere_fundamental_action(ctx)?;
    let rev = |m: &CMatrix| CMatrix::from_fn(3, 3, |i, j| m[(2 - i, 2 - j)]);
    let t = build_rep(&RepParams { two_l: 2, psi: 0.0, sign: 1.0, ctx: ctx.clone() });
    let (sf, se, sk, sks) = (rev(&s.f), rev(&s.e), rev(&s.k), rev(&s.kstar));
    Ok(diagonally_similar(&[&t.f, &t.e, &t.k, &t.kstar], &[&sf, &se, &sk, &sks], tol))
}

/// Eigenvalues q^{±2k} e^{±2ikψ} λ₀ forced on any representation with a
/// nonzero e_0-eigenvalue.
#[derive(Clone, Debug)]
pub struct EigenvalueWitness {
    pub growing: Vec<Complex64>,
    pub decaying: Vec<Complex64>,
}

impl EigenvalueWitness {
    pub fn strictly_increasing(&self) -> bool {
        self.growing.windows(2).all(|w| w[1].norm() > w[0].norm())
    }

    /// First k with |q^{-2k} λ₀| > bound.
    pub fn first_exceeding(&self, bound: f64) -> Option<usize> {
        self.growing.iter().position(|z| z.norm() > bound)
    }
}

pub fn unbounded_eigenvalue_witness(q: f64, psi: f64, lambda0: Complex64, k_max: usize) -> Result<EigenvalueWitness, RepError> {
    if !(q > 0.0 && q < 1.0) {
        return Err(RepError::Precondition("q must lie in (0, 1)".into()));
    }
    if lambda0.norm() == 0.0 {
        return Err(RepError::Precondition("the eigenvalue must be nonzero".into()));
    }
    let at = |k: i32| lambda0 * q.powi(2 * k) * Complex64::from_polar(1.0, 2.0 * k as f64 * psi);
    Ok(EigenvalueWitness {
        growing: (0..=k_max as i32).map(|k| at(-k)).collect(),
        decaying: (0..=k_max as i32).map(at).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(q: f64, phi: f64, psi: f64) -> NumericContext {
        NumericContext::new(q, phi, psi)
    }

    #[test]
    fn spin_half_matrices() {
        let r = build_rep(&RepParams::new(1, 1.0, 0.0, 0.0));
        assert_eq!(r.f[(1, 0)], Complex64::new(1.0, 0.0));
        assert_eq!(r.f[(0, 1)], Complex64::new(0.0, 0.0));
        let (q, phi, psi) = (0.6_f64, 0.2, 0.4);
        let r = build_rep(&RepParams::new(1, q, phi, psi));
        let want = q.powf(-0.5) * Complex64::from_polar(1.0, 2.0 * phi - psi);
        assert!((r.k[(0, 0)] - want).norm() < 1e-14);
        let r = build_rep(&RepParams::new(2, q, phi, psi));
        assert!((r.f[(2, 1)].re - (q + 1.0 / q).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn relations_hold() {
        let c = ctx(0.7, 0.3, 1.1);
        let r = build_rep(&RepParams::new(2, 0.7, 0.3, 1.1));
        assert!(check_relations(&r, &c, 1e-10).unwrap().pass);
        let c1 = ctx(1.0, 0.0, 0.0);
        let r = build_rep(&RepParams::new(1, 1.0, 0.0, 0.0));
        assert!(check_relations(&r, &c1, 1e-12).unwrap().max_residual < 1e-12);
    }

    #[test]
    fn perturbation_is_detected() {
        let p = RepParams::new(2, 0.7, 0.3, 1.1);
        let mut r = build_rep(&p);
        r.k[(0, 0)] += Complex64::new(1e-3, 0.0);
        assert!(check_relations(&r, &p.ctx, 1e-10).unwrap().max_residual > 1e-4);
    }

    #[test]
    fn commutants() {
        let p = RepParams::new(1, 0.7, 0.3, 1.1);
        let r = build_rep(&p);
        assert_eq!(commutant_dimension(&r, 1e-8).unwrap(), 1);
        assert!(commutant_dimension(&r.direct_sum(&r), 1e-8).unwrap() >= 2);
        let triv = build_rep(&RepParams::new(0, 0.7, 0.3, 0.0));
        assert_eq!(commutant_dimension(&triv, 1e-8).unwrap(), 1);
    }

    #[test]
    fn sphere_matrices() {
        let c = ctx(0.8, 0.35, 0.0);
        let s = sphere_fundamental_action(&c).unwrap();
        let u = Complex64::from_polar(1.0, 0.35);
        assert!((s.k[(0, 0)] - 0.8 * u.powi(-4)).norm() < 1e-13);
        assert!(s.e.column(2).norm() < 1e-15);
        let want = u.powi(-2) * 0.8_f64.powf(-0.5) * (1.0 + 0.64);
        assert!((s.f[(1, 2)] - want).norm() < 1e-13);
        assert!(sphere_matches_spin_one(&c, 1e-12).unwrap());
    }

    #[test]
    fn witness() {
        let w = unbounded_eigenvalue_witness(0.5, 0.0, Complex64::new(1.0, 0.0), 3).unwrap();
        assert!((w.growing[3].norm() - 64.0).abs() < 1e-12);
        let w = unbounded_eigenvalue_witness(0.9, 0.2, Complex64::new(1.0, 0.0), 4).unwrap();
        let ratio = w.growing[2].norm() / w.growing[1].norm();
        assert!((ratio - 0.9_f64.powi(-2)).abs() < 1e-12);
        assert!(w.strictly_increasing());
        assert!(unbounded_eigenvalue_witness(0.5, 0.0, Complex64::new(0.0, 0.0), 3).is_err());
    }
}
