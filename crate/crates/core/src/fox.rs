//! Fox free differential calculus on free-group words and the evaluation map
//! sending a group-ring element through `rho (x) alpha` into a matrix of
//! Laurent polynomials, where `alpha` sends every generator to `t`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{FFMatrix, LaurentMatrix, LaurentPoly};
use crate::presentation::{FreeWord, GroupHom};
use crate::{Error, Result};

/// Element of the integral group ring of a free group: a finite formal sum
/// of freely reduced words with integer coefficients. Coefficients are kept
/// exact; reduction mod p happens only at evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupRingElem {
    terms: BTreeMap<FreeWord, BigInt>,
}

impl GroupRingElem {
    pub fn zero() -> Self {
        GroupRingElem::default()
    }

    pub fn from_word(w: FreeWord) -> Self {
        let mut out = Self::zero();
        out.add_word(w, BigInt::from(1));
        out
    }

    pub fn one() -> Self {
        Self::from_word(FreeWord::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_word(&mut self, w: FreeWord, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(entry) => {
                *entry += c;
                if entry.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &GroupRingElem) -> GroupRingElem {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_word(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> GroupRingElem {
        GroupRingElem { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &GroupRingElem) -> GroupRingElem {
        self.add(&other.neg())
    }

    /// Left-multiply every term by a word.
    pub fn mul_word_left(&self, w: &FreeWord) -> GroupRingElem {
        let mut out = Self::zero();
        for (term, c) in &self.terms {
            out.add_word(w.mul(term), c.clone());
        }
        out
    }

    /// Ring product.
    pub fn mul(&self, other: &GroupRingElem) -> GroupRingElem {
        let mut out = Self::zero();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                out.add_word(u.mul(v), cu * cv);
            }
        }
        out
    }

    /// Apply a homomorphism to every word, keeping coefficients.
    pub fn map_words(&self, h: &GroupHom) -> GroupRingElem {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_word(h.apply(w), c.clone());
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FreeWord, &BigInt)> {
        self.terms.iter()
    }
}

/// The Fox derivative `dw/dx_j`, computed by a single left-to-right scan.
///
/// Defining rules: `dx_j/dx_j = 1`, `dx_i/dx_j = 0` for `i != j`,
/// `d(x_j^-1)/dx_j = -x_j^-1`, and the product rule
/// `d(uv) = du + u * dv`. An exponent block `x^k` contributes the closed
/// form `1 + x + ... + x^{k-1}` (respectively `-(x^-1 + ... + x^k)` for
/// negative `k`), which avoids quadratic blow-up on long relators.
pub fn fox_derivative(w: &FreeWord, j: usize) -> GroupRingElem {
    let mut out = GroupRingElem::zero();
    let mut prefix = FreeWord::empty();
    for &(g, e) in w.letters() {
        if g == j {
            if e > 0 {
                // prefix * (1 + x + ... + x^{e-1})
                let mut power = FreeWord::empty();
                for _ in 0..e {
                    out.add_word(prefix.mul(&power), BigInt::from(1));
                    power = power.mul(&FreeWord::letter(g, 1));
                }
            } else {
                // prefix * -(x^-1 + x^-2 + ... + x^e)
                let mut power = FreeWord::empty();
                for _ in 0..(-e) {
                    power = power.mul(&FreeWord::letter(g, -1));
                    out.add_word(prefix.mul(&power), BigInt::from(-1));
                }
            }
        }
        prefix = prefix.mul(&FreeWord::letter(g, e));
    }
    out
}

/// Evaluate a word through `rho (x) alpha`: `t^{exponent sum} * rho(w)`,
/// where `rho(w)` multiplies out the generator images.
pub fn rho_word(w: &FreeWord, images: &[FFMatrix]) -> Result<FFMatrix> {
    let (field, n) = match images.first() {
        Some(m) => (m.field(), m.dim()),
        None => {
            return Err(Error::MissingImage("no generator images supplied".into()));
        }
    };
    let mut acc = FFMatrix::identity(field, n);
    for &(g, e) in w.letters() {
        let img = images
            .get(g)
            .ok_or_else(|| Error::MissingImage(format!("generator index {g}")))?;
        acc = acc.mul(&img.pow(e as i64)?)?;
    }
    Ok(acc)
}

/// Embed an `F_p` matrix scaled by `c * t^e` into a Laurent matrix.
fn scaled_block(m: &FFMatrix, c: u32, e: i64) -> LaurentMatrix {
    let field = m.field();
    let n = m.dim();
    let mut out = LaurentMatrix::zero(field, n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, LaurentPoly::term(field, field.mul(c, m.get(i, j)) as i64, e));
        }
    }
    out
}

/// The evaluation `Phi` of a group-ring element: each word `w` maps to
/// `t^{exponent sum of w} * rho(w)`, extended linearly with coefficients
/// reduced mod p.
pub fn phi_evaluate(e: &GroupRingElem, images: &[FFMatrix]) -> Result<LaurentMatrix> {
    let (field, n) = match images.first() {
        Some(m) => (m.field(), m.dim()),
        None => return Err(Error::MissingImage("no generator images supplied".into())),
    };
    let mut acc = LaurentMatrix::zero(field, n);
    for (w, c) in e.iter() {
        let c = field.reduce_bigint(c);
        if c == 0 {
            continue;
        }
        let m = rho_word(w, images)?;
        acc = acc.add(&scaled_block(&m, c, w.exponent_sum()))?;
    }
    Ok(acc)
}

/// `Phi` of a single word.
pub fn phi_word(w: &FreeWord, images: &[FFMatrix]) -> Result<LaurentMatrix> {
    let m = rho_word(w, images)?;
    Ok(scaled_block(&m, 1, w.exponent_sum()))
}
