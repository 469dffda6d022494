use super::fp::Fp;
use super::laurent::LaurentPoly;
use crate::{Error, Result};

/// Square matrix with Laurent polynomial entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    field: Fp,
    size: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zero(field: Fp, size: usize) -> Self {
        LaurentMatrix { field, size, entries: vec![LaurentPoly::zero(field); size * size] }
    }

    pub fn identity(field: Fp, size: usize) -> Self {
        let mut m = Self::zero(field, size);
        for i in 0..size {
            m.set(i, i, LaurentPoly::one(field));
        }
        m
    }

    pub fn from_entries(field: Fp, size: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::DimensionMismatch(entries.len(), size * size));
        }
        Ok(LaurentMatrix { field, size, entries })
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.size + j] = v;
    }

    pub fn add(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        if self.size != other.size {
            return Err(Error::DimensionMismatch(self.size, other.size));
        }
        let entries =
            self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        Ok(LaurentMatrix { field: self.field, size: self.size, entries })
    }

    pub fn scale(&self, c: i64, e: i64) -> LaurentMatrix {
        let unit = LaurentPoly::term(self.field, c, e);
        let entries = self.entries.iter().map(|p| p.mul(&unit)).collect();
        LaurentMatrix { field: self.field, size: self.size, entries }
    }

    pub fn mul(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        if self.size != other.size {
            return Err(Error::DimensionMismatch(self.size, other.size));
        }
        let n = self.size;
        let mut out = Self::zero(self.field, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = LaurentPoly::zero(self.field);
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Exact determinant in `F_p[t, t^-1]`.
    ///
    /// Shifts all entries into `F_p[t]`, runs fraction-free (Bareiss)
    /// elimination there, and shifts back. Cofactor expansion would be
    /// exponential in the size; the twisted Alexander matrices of raw
    /// Wirtinger presentations reach size 46.
    pub fn det(&self) -> LaurentPoly {
        let n = self.size;
        if n == 0 {
            return LaurentPoly::one(self.field);
        }
        let shift = self
            .entries
            .iter()
            .filter_map(|p| p.min_exp())
            .min()
            .unwrap_or(0)
            .min(0);
        let mut m: Vec<Vec<Dense>> = (0..n)
            .map(|i| (0..n).map(|j| Dense::from_laurent(self.get(i, j), -shift)).collect())
            .collect();

        let field = self.field;
        let mut sign = false;
        let mut prev = Dense::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return LaurentPoly::zero(field);
                };
                m.swap(k, r);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let a = m[k][k].mul(&m[i][j], field);
                    let b = m[i][k].mul(&m[k][j], field);
                    let num = a.sub(&b, field);
                    m[i][j] = num.div_exact(&prev, field);
                }
                m[i][k] = Dense::zero();
            }
            prev = m[k][k].clone();
        }
        let mut det = m[n - 1][n - 1].to_laurent(field);
        if sign {
            det = det.neg();
        }
        // undo the global shift: every entry was multiplied by t^-shift
        det.mul_unit(1, shift * n as i64)
    }
}

/// Dense polynomial in `F_p[t]` used only inside the elimination.
#[derive(Debug, Clone)]
struct Dense(Vec<u32>);

impl Dense {
    fn zero() -> Self {
        Dense(vec![])
    }

    fn one() -> Self {
        Dense(vec![1])
    }

    fn from_laurent(p: &LaurentPoly, up: i64) -> Self {
        match p.max_exp() {
            None => Dense::zero(),
            Some(top) => {
                let mut v = vec![0u32; (top + up) as usize + 1];
                for (e, c) in p.iter() {
                    v[(e + up) as usize] = c;
                }
                Dense(v)
            }
        }
    }

    fn to_laurent(&self, field: Fp) -> LaurentPoly {
        let terms: Vec<(i64, i64)> =
            self.0.iter().enumerate().map(|(e, &c)| (e as i64, c as i64)).collect();
        LaurentPoly::from_coeffs(field, &terms)
    }

    fn trim(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Dense, f: Fp) -> Dense {
        if self.is_zero() || other.is_zero() {
            return Dense::zero();
        }
        let mut out = vec![0u32; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Dense(out).trim()
    }

    fn sub(&self, other: &Dense, f: Fp) -> Dense {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![0u32; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = other.0.get(i).copied().unwrap_or(0);
            *slot = f.sub(a, b);
        }
        Dense(out).trim()
    }

    /// Division known to be exact (Sylvester identity); panics on a nonzero
    /// remainder, which would indicate corrupted arithmetic.
    fn div_exact(&self, d: &Dense, f: Fp) -> Dense {
        assert!(!d.is_zero(), "exact division by zero polynomial");
        if self.is_zero() {
            return Dense::zero();
        }
        let mut rem = self.0.clone();
        let dd = d.0.len() - 1;
        let nd = rem.len() - 1;
        assert!(nd >= dd, "exact division with deficient degree");
        let lead_inv = f.inv(d.0[dd]).expect("nonzero leading coefficient");
        let mut quot = vec![0u32; nd - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], lead_inv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (i, &dc) in d.0.iter().enumerate() {
                rem[k + i] = f.sub(rem[k + i], f.mul(c, dc));
            }
        }
        assert!(rem.iter().all(|&c| c == 0), "non-exact division in elimination");
        Dense(quot).trim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Fp {
        Fp::new(5).unwrap()
    }

    /// Cofactor expansion, the independent oracle for `det`.
    fn det_cofactor(m: &LaurentMatrix) -> LaurentPoly {
        let n = m.size();
        let f = m.field();
        if n == 0 {
            return LaurentPoly::one(f);
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = LaurentPoly::zero(f);
        for j in 0..n {
            if m.get(0, j).is_zero() {
                continue;
            }
            let mut minor = LaurentMatrix::zero(f, n - 1);
            for i in 1..n {
                let mut jj = 0;
                for k in 0..n {
                    if k == j {
                        continue;
                    }
                    minor.set(i - 1, jj, m.get(i, k).clone());
                    jj += 1;
                }
            }
            let term = m.get(0, j).mul(&det_cofactor(&minor));
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    #[test]
    fn identity_and_diagonal() {
        let f = f5();
        for n in [1usize, 2, 3, 5] {
            assert_eq!(LaurentMatrix::identity(f, n).det(), LaurentPoly::one(f));
        }
        let mut d = LaurentMatrix::zero(f, 2);
        d.set(0, 0, LaurentPoly::term(f, 1, 1));
        d.set(1, 1, LaurentPoly::term(f, 1, 1));
        assert_eq!(d.det(), LaurentPoly::term(f, 1, 2));
    }

    #[test]
    fn zero_row_gives_zero_det() {
        let f = f5();
        let mut m = LaurentMatrix::identity(f, 3);
        m.set(1, 1, LaurentPoly::zero(f));
        assert!(m.det().is_zero());
    }

    fn seeded_matrix(f: Fp, n: usize, seed: u64) -> LaurentMatrix {
        // deterministic xorshift so the oracle comparison is reproducible
        let mut state = seed | 1;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut m = LaurentMatrix::zero(f, n);
        for i in 0..n {
            for j in 0..n {
                let terms: Vec<(i64, i64)> =
                    (0..=2).map(|e| (e, (next() % f.p() as u64) as i64)).collect();
                m.set(i, j, LaurentPoly::from_coeffs(f, &terms));
            }
        }
        m
    }

    #[test]
    fn bareiss_matches_cofactor_oracle() {
        let f = f5();
        for seed in 1..=20u64 {
            let m = seeded_matrix(f, 3, seed);
            assert_eq!(m.det(), det_cofactor(&m), "seed {seed}");
        }
        for seed in 1..=5u64 {
            let m = seeded_matrix(f, 4, seed * 31);
            assert_eq!(m.det(), det_cofactor(&m), "4x4 seed {seed}");
        }
    }

    #[test]
    fn det_with_negative_exponents() {
        let f = f5();
        let mut m = LaurentMatrix::zero(f, 2);
        m.set(0, 0, LaurentPoly::term(f, 2, -3));
        m.set(0, 1, LaurentPoly::from_coeffs(f, &[(-1, 1), (0, 1)]));
        m.set(1, 0, LaurentPoly::term(f, 1, 2));
        m.set(1, 1, LaurentPoly::from_coeffs(f, &[(0, 3), (1, 4)]));
        assert_eq!(m.det(), det_cofactor(&m));
    }

    #[test]
    fn det_is_multiplicative() {
        let f = f5();
        for seed in 1..=10u64 {
            let a = seeded_matrix(f, 3, seed);
            let b = seeded_matrix(f, 3, seed + 100);
            let ab = a.mul(&b).unwrap();
            assert_eq!(ab.det(), a.det().mul(&b.det()), "seed {seed}");
        }
    }
}
