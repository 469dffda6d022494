use serde::Serialize;

use super::fp::{FieldElem, Fp};
use crate::{Error, Result};

/// Dense `n x n` matrix over `F_p`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FFMatrix {
    field: Fp,
    n: usize,
    entries: Vec<u32>,
}

impl FFMatrix {
    pub fn new(field: Fp, n: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch(entries.len(), n * n));
        }
        let entries = entries.into_iter().map(|e| e % field.p()).collect();
        Ok(FFMatrix { field, n, entries })
    }

    /// Build from signed integer entries, reducing mod p.
    pub fn from_i64(field: Fp, n: usize, entries: &[i64]) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch(entries.len(), n * n));
        }
        let entries = entries.iter().map(|&e| field.reduce_i64(e)).collect();
        Ok(FFMatrix { field, n, entries })
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        FFMatrix { field, n, entries }
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        *self == FFMatrix::identity(self.field, self.n)
    }

    pub fn mul(&self, other: &FFMatrix) -> Result<FFMatrix> {
        self.field.same(&other.field)?;
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let n = self.n;
        let f = self.field;
        let mut out = vec![0u32; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let cur = out[i * n + j];
                    out[i * n + j] = f.add(cur, f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(FFMatrix { field: f, n, entries: out })
    }

    pub fn trace(&self) -> FieldElem {
        let mut t = 0;
        for i in 0..self.n {
            t = self.field.add(t, self.get(i, i));
        }
        FieldElem { value: t, modulus: self.field.p() }
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> FieldElem {
        let f = self.field;
        let n = self.n;
        let mut m = self.entries.clone();
        let mut det = 1u32;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r * n + col] != 0);
            let Some(pr) = pivot else {
                return FieldElem { value: 0, modulus: f.p() };
            };
            if pr != col {
                for j in 0..n {
                    m.swap(pr * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pv = m[col * n + col];
            det = f.mul(det, pv);
            let pv_inv = f.inv(pv).expect("pivot nonzero");
            for r in col + 1..n {
                let factor = f.mul(m[r * n + col], pv_inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let sub = f.mul(factor, m[col * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], sub);
                }
            }
        }
        FieldElem { value: det, modulus: f.p() }
    }

    /// Inverse by Gauss-Jordan elimination; errors on singular input.
    pub fn inv(&self) -> Result<FFMatrix> {
        let f = self.field;
        let n = self.n;
        let mut m = self.entries.clone();
        let mut inv = FFMatrix::identity(f, n).entries;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r * n + col] != 0).ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    m.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let pv_inv = f.inv(m[col * n + col])?;
            for j in 0..n {
                m[col * n + j] = f.mul(m[col * n + j], pv_inv);
                inv[col * n + j] = f.mul(inv[col * n + j], pv_inv);
            }
            for r in 0..n {
                if r == col || m[r * n + col] == 0 {
                    continue;
                }
                let factor = m[r * n + col];
                for j in 0..n {
                    let s = f.mul(factor, m[col * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], s);
                    let s = f.mul(factor, inv[col * n + j]);
                    inv[r * n + j] = f.sub(inv[r * n + j], s);
                }
            }
        }
        Ok(FFMatrix { field: f, n, entries: inv })
    }

    /// Integer power, using the inverse for negative exponents.
    pub fn pow(&self, e: i64) -> Result<FFMatrix> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = FFMatrix::identity(self.field, self.n);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }
}

impl std::fmt::Display for FFMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}
