use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::fp::Fp;
use crate::{Error, Result};

/// Laurent polynomial over `F_p`: a map from integer exponents to nonzero
/// coefficients. Invariants of the ambient theory are only up to units
/// `c * t^k`, so [`LaurentPoly::canonicalize`] provides the unit-normal form
/// used for storage and comparison: minimum exponent 0 and leading
/// coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    field: Fp,
    coeffs: BTreeMap<i64, u32>,
}

impl LaurentPoly {
    pub fn zero(field: Fp) -> Self {
        LaurentPoly { field, coeffs: BTreeMap::new() }
    }

    pub fn one(field: Fp) -> Self {
        Self::term(field, 1, 0)
    }

    /// The monomial `c * t^e`.
    pub fn term(field: Fp, c: i64, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        let c = field.reduce_i64(c);
        if c != 0 {
            coeffs.insert(e, c);
        }
        LaurentPoly { field, coeffs }
    }

    pub fn from_coeffs(field: Fp, terms: &[(i64, i64)]) -> Self {
        let mut out = Self::zero(field);
        for &(e, c) in terms {
            out.add_term(e, field.reduce_i64(c));
        }
        out
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> u32 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub(crate) fn add_term(&mut self, e: i64, c: u32) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert(0);
        *entry = self.field.add(*entry, c);
        if *entry == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.field, other.field);
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.field);
        for (e, c) in self.iter() {
            out.coeffs.insert(e, self.field.neg(c));
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.field, other.field);
        let mut out = LaurentPoly::zero(self.field);
        for (e1, c1) in self.iter() {
            for (e2, c2) in other.iter() {
                out.add_term(e1 + e2, self.field.mul(c1, c2));
            }
        }
        out
    }

    /// Multiply by the unit `c * t^k`.
    pub fn mul_unit(&self, c: u32, k: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.field);
        for (e, coeff) in self.iter() {
            out.add_term(e + k, self.field.mul(coeff, c));
        }
        out
    }

    /// Substitute `t -> t^-1`.
    pub fn substitute_inverse(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.field);
        for (e, c) in self.iter() {
            out.coeffs.insert(-e, c);
        }
        out
    }

    /// Unit-normal form: zero maps to zero; otherwise the minimum exponent is
    /// shifted to 0 and the polynomial is scaled so the leading (top-degree)
    /// coefficient is 1. Idempotent.
    pub fn canonicalize(&self) -> LaurentPoly {
        self.canonicalize_with_unit().0
    }

    /// Canonical form together with the unit `(c, k)` such that
    /// `self = c * t^k * canonical`.
    pub fn canonicalize_with_unit(&self) -> (LaurentPoly, (u32, i64)) {
        if self.is_zero() {
            return (self.clone(), (1, 0));
        }
        let shift = self.min_exp().unwrap();
        let lead = *self.coeffs.values().next_back().unwrap();
        let lead_inv = self.field.inv(lead).expect("nonzero leading coefficient");
        let mut out = LaurentPoly::zero(self.field);
        for (e, c) in self.iter() {
            out.coeffs.insert(e - shift, self.field.mul(c, lead_inv));
        }
        (out, (lead, shift))
    }

    pub fn is_canonical(&self) -> bool {
        self.is_zero() || (self.min_exp() == Some(0) && self.coeff(self.max_exp().unwrap()) == 1)
    }

    /// Test divisibility up to units; on success return the exact quotient
    /// `q` with `self * q = f`.
    pub fn divides(&self, f: &LaurentPoly) -> Result<Option<LaurentPoly>> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if f.is_zero() {
            return Ok(Some(LaurentPoly::zero(self.field)));
        }
        let (d, (dc, dk)) = self.canonicalize_with_unit();
        let (n, (nc, nk)) = f.canonicalize_with_unit();
        // long division of n by d in F_p[t]
        let mut rem = n.clone();
        let mut quot = LaurentPoly::zero(self.field);
        let d_deg = d.max_exp().unwrap();
        let d_lead = d.coeff(d_deg);
        let d_lead_inv = self.field.inv(d_lead).expect("nonzero");
        while !rem.is_zero() && rem.max_exp().unwrap() >= d_deg {
            let r_deg = rem.max_exp().unwrap();
            let factor = self.field.mul(rem.coeff(r_deg), d_lead_inv);
            let shift = r_deg - d_deg;
            quot.add_term(shift, factor);
            rem = rem.sub(&d.mul_unit(factor, shift));
        }
        if !rem.is_zero() {
            return Ok(None);
        }
        // undo the canonicalizing units: f = nc t^nk n = (self / (dc t^dk)) * quot * nc t^nk
        let unit_c = self.field.mul(nc, self.field.inv(dc).expect("unit"));
        let q = quot.mul_unit(unit_c, nk - dk);
        debug_assert_eq!(self.mul(&q), *f);
        Ok(Some(q))
    }

    /// Ascending coefficient list from exponent 0 of the canonical form.
    pub fn canonical_coeff_vec(&self) -> Vec<u32> {
        let c = self.canonicalize();
        match c.max_exp() {
            None => vec![],
            Some(top) => (0..=top).map(|e| c.coeff(e)).collect(),
        }
    }
}

/// Serializes as the ascending canonical coefficient list, e.g.
/// `t^2 + 3t + 1` over `F_5` becomes `[1, 3, 1]`.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let v = self.canonical_coeff_vec();
        let mut seq = serializer.serialize_seq(Some(v.len()))?;
        for c in v {
            seq.serialize_element(&c)?;
        }
        seq.end()
    }
}

impl std::fmt::Display for LaurentPoly {
    /// Ascending powers: `1 + 2t + t^2`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, c) => write!(f, "{c}t^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Fp {
        Fp::new(5).unwrap()
    }

    #[test]
    fn canonical_form() {
        let f = f5();
        assert!(LaurentPoly::zero(f).canonicalize().is_zero());

        // t^2 + 3t + 1 is already canonical
        let p = LaurentPoly::from_coeffs(f, &[(2, 1), (1, 3), (0, 1)]);
        assert_eq!(p.canonicalize(), p);

        // 2t^3 + 2t -> t^2 + 1 (divide by the unit 2t)
        let q = LaurentPoly::from_coeffs(f, &[(3, 2), (1, 2)]);
        let expect = LaurentPoly::from_coeffs(f, &[(2, 1), (0, 1)]);
        assert_eq!(q.canonicalize(), expect);
        let (canon, (c, k)) = q.canonicalize_with_unit();
        assert_eq!(canon.mul_unit(c, k), q);

        // negative exponents shift up
        let r = LaurentPoly::from_coeffs(f, &[(-2, 3), (0, 3)]);
        assert_eq!(r.canonicalize(), LaurentPoly::from_coeffs(f, &[(0, 1), (2, 1)]));
    }

    #[test]
    fn canonicalize_idempotent() {
        let f = f5();
        let p = LaurentPoly::from_coeffs(f, &[(-3, 4), (0, 2), (5, 3)]);
        let once = p.canonicalize();
        assert_eq!(once.canonicalize(), once);
    }

    #[test]
    fn division() {
        let f = f5();
        // (t^2+2t+1)(t^2+1) = t^4+2t^3+2t^2+2t+1
        let d = LaurentPoly::from_coeffs(f, &[(2, 1), (1, 2), (0, 1)]);
        let big = LaurentPoly::from_coeffs(f, &[(4, 1), (3, 2), (2, 2), (1, 2), (0, 1)]);
        let q = d.divides(&big).unwrap().expect("divides");
        assert_eq!(q, LaurentPoly::from_coeffs(f, &[(2, 1), (0, 1)]));
        assert_eq!(d.mul(&q), big);

        // self-division gives the unit quotient
        let q = big.divides(&big).unwrap().expect("divides");
        assert_eq!(big.mul(&q), big);

        // t+1 does not divide t+2: evaluate at the root u = 4 of t+1
        let d = LaurentPoly::from_coeffs(f, &[(1, 1), (0, 1)]);
        let n = LaurentPoly::from_coeffs(f, &[(1, 1), (0, 2)]);
        assert!(d.divides(&n).unwrap().is_none());

        // division by zero is an error
        assert!(LaurentPoly::zero(f).divides(&n).is_err());
    }

    #[test]
    fn division_is_unit_invariant() {
        let f = f5();
        let d = LaurentPoly::from_coeffs(f, &[(2, 1), (1, 2), (0, 1)]);
        let n = LaurentPoly::from_coeffs(f, &[(4, 1), (3, 2), (2, 2), (1, 2), (0, 1)]);
        let d_shift = d.mul_unit(3, -2);
        let n_shift = n.mul_unit(2, 7);
        let q = d_shift.divides(&n_shift).unwrap().expect("divides");
        assert_eq!(d_shift.mul(&q), n_shift);
    }

    #[test]
    fn substitute_inverse_round_trip() {
        let f = f5();
        let p = LaurentPoly::from_coeffs(f, &[(3, 2), (0, 1), (-1, 4)]);
        assert_eq!(p.substitute_inverse().substitute_inverse(), p);
    }

    #[test]
    fn json_form() {
        let f = f5();
        // Δ^N with coefficients 1,1,0,4,4,4,0,1,1 ascending
        let p = LaurentPoly::from_coeffs(
            f,
            &[(8, 1), (7, 1), (5, 4), (4, 4), (3, 4), (1, 1), (0, 1)],
        );
        assert_eq!(p.canonical_coeff_vec(), vec![1, 1, 0, 4, 4, 4, 0, 1, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,1,0,4,4,4,0,1,1]");
    }

    #[test]
    fn display_ascending() {
        let f = f5();
        let p = LaurentPoly::from_coeffs(f, &[(0, 1), (1, 2), (2, 1)]);
        assert_eq!(p.to_string(), "1 + 2t + t^2");
        assert_eq!(LaurentPoly::zero(f).to_string(), "0");
    }
}
