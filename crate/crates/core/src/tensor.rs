//! Elements of tensor powers of a single algebra.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::ncpoly::{Alphabet, NCPoly, NcError, RewriteSystem, Word};
use crate::scalars::Scalar;

/// Linear combination of simple tensors `w_1 ⊗ … ⊗ w_n`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorPoly {
    rank: usize,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl TensorPoly {
    pub fn zero(rank: usize) -> TensorPoly {
        TensorPoly { rank, terms: BTreeMap::new() }
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn one(rank: usize) -> TensorPoly {
        TensorPoly::simple(alloc::vec![Word::unit(); rank], Scalar::one())
    }

    pub fn simple(words: Vec<Word>, c: Scalar) -> TensorPoly {
        let mut t = TensorPoly::zero(words.len());
        t.add_term(words, c);
        t
    }

    /// Tensor product of polynomials, one per slot.
    pub fn from_slots(slots: &[NCPoly]) -> TensorPoly {
        let mut acc = TensorPoly::one(0);
        for p in slots {
            let mut next = TensorPoly::zero(acc.rank + 1);
            for (ws, c) in &acc.terms {
                for (w, d) in p.terms() {
                    let mut v = ws.clone();
                    v.push(w.clone());
                    next.add_term(v, c * d);
                }
            }
            acc = next;
        }
        acc
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, ws: &[Word]) -> Scalar {
        self.terms.get(ws).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, ws: Vec<Word>, c: Scalar) {
        debug_assert_eq!(ws.len(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&ws) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&ws);
                }
            }
            None => {
                self.terms.insert(ws, c);
            }
        }
    }

    pub fn add(&self, o: &TensorPoly) -> TensorPoly {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &TensorPoly) -> TensorPoly {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), -c);
        }
        r
    }

    pub fn scale(&self, c: &Scalar) -> TensorPoly {
        let mut r = TensorPoly::zero(self.rank);
        for (w, v) in &self.terms {
            r.add_term(w.clone(), v * c);
        }
        r
    }

    /// Reduce every slot to normal form.
    pub fn normalize(&self, rs: &RewriteSystem) -> Result<TensorPoly, NcError> {
        let mut r = TensorPoly::zero(self.rank);
        for (ws, c) in &self.terms {
            let mut slots = Vec::with_capacity(ws.len());
            for w in ws {
                slots.push(rs.normal_form(&NCPoly::from_word(w.clone()))?);
            }
            r = r.add(&TensorPoly::from_slots(&slots).scale(c));
        }
        Ok(r)
    }

    /// Replace slot `i` by the tensor returned from `f`, widening the rank.
    pub fn expand_slot(
        &self,
        i: usize,
        new_width: usize,
        mut f: impl FnMut(&Word) -> Result<TensorPoly, NcError>,
    ) -> Result<TensorPoly, NcError> {
        let mut r = TensorPoly::zero(self.rank - 1 + new_width);
        for (ws, c) in &self.terms {
            let img = f(&ws[i])?;
            for (iw, ic) in &img.terms {
                let mut v = Vec::with_capacity(r.rank);
                v.extend_from_slice(&ws[..i]);
                v.extend_from_slice(iw);
                v.extend_from_slice(&ws[i + 1..]);
                r.add_term(v, c * ic);
            }
        }
        Ok(r)
    }

    /// Apply a linear map slot-wise on a single slot, keeping the rank.
    pub fn map_slot(
        &self,
        i: usize,
        mut f: impl FnMut(&Word) -> Result<NCPoly, NcError>,
    ) -> Result<TensorPoly, NcError> {
        self.expand_slot(i, 1, |w| {
            let p = f(w)?;
            Ok(TensorPoly::from_slots(&[p]))
        })
    }

    /// Multiply slots `i` and `i+1` together (no phase), reducing with `rs`.
    pub fn contract(&self, i: usize, rs: &RewriteSystem) -> Result<TensorPoly, NcError> {
        let mut r = TensorPoly::zero(self.rank - 1);
        for (ws, c) in &self.terms {
            let prod = rs.normal_form(&NCPoly::from_word(ws[i].concat(&ws[i + 1])))?;
            for (w, d) in prod.terms() {
                let mut v = Vec::with_capacity(self.rank - 1);
                v.extend_from_slice(&ws[..i]);
                v.push(w.clone());
                v.extend_from_slice(&ws[i + 2..]);
                r.add_term(v, c * d);
            }
        }
        Ok(r)
    }

    /// Collapse a rank-1 tensor to a polynomial.
    pub fn to_poly(&self) -> NCPoly {
        assert_eq!(self.rank, 1, "to_poly needs rank 1");
        let mut p = NCPoly::zero();
        for (ws, c) in &self.terms {
            p.add_term(ws[0].clone(), c.clone());
        }
        p
    }

    /// Multiply every slot together in order (no phases).
    pub fn multiply_out(&self, rs: &RewriteSystem) -> Result<NCPoly, NcError> {
        let mut p = NCPoly::zero();
        for (ws, c) in &self.terms {
            let mut w = Word::unit();
            for x in ws {
                w = w.concat(x);
            }
            p.add_term(w, c.clone());
        }
        rs.normal_form(&p)
    }

    pub fn display<'a>(&'a self, alph: &'a Alphabet) -> TensorDisplay<'a> {
        TensorDisplay { t: self, alph }
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(ws, c)| (ws.iter().map(|w| w.gens().to_vec()).collect::<Vec<_>>(), c)))
            .finish()
    }
}

pub struct TensorDisplay<'a> {
    t: &'a TensorPoly,
    alph: &'a Alphabet,
}

impl fmt::Display for TensorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (ws, c) in &self.t.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (i, w) in ws.iter().enumerate() {
                f.write_str(if i == 0 { " " } else { " ⊗ " })?;
                f.write_str(&self.alph.format_word(w))?;
            }
        }
        Ok(())
    }
}
