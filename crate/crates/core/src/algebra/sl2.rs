use serde::Serialize;

use super::fp::Fp;
use super::matrix::FFMatrix;
use crate::{Error, Result};

/// Compact 2x2 matrix over `F_p` for the representation-search hot loop.
/// Entries are row-major `[a, b, c, d]`, one byte each (p <= 251).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Mat2(pub [u8; 4]);

pub const MAT2_MAX_P: u32 = 251;

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([1, 0, 0, 1]);

    #[inline]
    pub fn mul(self, other: Mat2, p: u32) -> Mat2 {
        let [a, b, c, d] = self.0.map(|x| x as u32);
        let [e, f, g, h] = other.0.map(|x| x as u32);
        Mat2([
            ((a * e + b * g) % p) as u8,
            ((a * f + b * h) % p) as u8,
            ((c * e + d * g) % p) as u8,
            ((c * f + d * h) % p) as u8,
        ])
    }

    #[inline]
    pub fn det(self, p: u32) -> u32 {
        let [a, b, c, d] = self.0.map(|x| x as u32);
        (a * d + p * p - b * c) % p
    }

    #[inline]
    pub fn trace(self, p: u32) -> u32 {
        (self.0[0] as u32 + self.0[3] as u32) % p
    }

    /// Inverse of a determinant-one matrix (the adjugate).
    #[inline]
    pub fn inv_sl(self, p: u32) -> Mat2 {
        debug_assert_eq!(self.det(p), 1);
        let [a, b, c, d] = self.0.map(|x| x as u32);
        Mat2([d as u8, ((p - b) % p) as u8, ((p - c) % p) as u8, a as u8])
    }

    /// `g * self * g^-1` for `g` of determinant one.
    #[inline]
    pub fn conjugate_by(self, g: Mat2, p: u32) -> Mat2 {
        g.mul(self, p).mul(g.inv_sl(p), p)
    }

    pub fn pow(self, e: i64, p: u32) -> Mat2 {
        let base = if e < 0 { self.inv_sl(p) } else { self };
        let mut acc = Mat2::IDENTITY;
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(base, p);
        }
        acc
    }

    /// Position in the lexicographic order of all 2x2 matrices over `F_p`.
    #[inline]
    pub fn encode(self, p: u32) -> usize {
        let [a, b, c, d] = self.0.map(|x| x as usize);
        ((a * p as usize + b) * p as usize + c) * p as usize + d
    }

    pub fn to_ffmatrix(self, field: Fp) -> FFMatrix {
        FFMatrix::new(field, 2, self.0.iter().map(|&x| x as u32).collect()).expect("2x2")
    }

    pub fn from_ffmatrix(m: &FFMatrix) -> Result<Mat2> {
        if m.dim() != 2 {
            return Err(Error::DimensionMismatch(m.dim(), 2));
        }
        let e = m.entries();
        Ok(Mat2([e[0] as u8, e[1] as u8, e[2] as u8, e[3] as u8]))
    }
}

fn check_small_prime(p: u32) -> Result<Fp> {
    let field = Fp::new(p)?;
    if p > MAT2_MAX_P {
        return Err(Error::Unsupported(format!(
            "p = {p} exceeds the byte-entry bound {MAT2_MAX_P} of the SL(2) enumerator"
        )));
    }
    Ok(field)
}

/// All of `SL(2, F_p)` in lexicographic order on the entry tuple `(a,b,c,d)`.
///
/// Walks only the solutions of `ad - bc = 1` instead of filtering all `p^4`
/// tuples: for `a != 0` the entry `d` is determined by `(a,b,c)`, and for
/// `a = 0` one needs `bc = -1`, which determines `c` from `b`.
pub fn sl2_elements(p: u32) -> Result<Vec<Mat2>> {
    let field = check_small_prime(p)?;
    let expected = (p * (p * p - 1)) as usize;
    let mut out = Vec::with_capacity(expected);
    for b in 0..p {
        if b == 0 {
            continue;
        }
        let c = field.neg(field.inv(b)?);
        for d in 0..p {
            out.push(Mat2([0, b as u8, c as u8, d as u8]));
        }
    }
    out.sort();
    let zero_block = out;
    let mut all = zero_block;
    for a in 1..p {
        let a_inv = field.inv(a)?;
        for b in 0..p {
            for c in 0..p {
                let d = field.mul(field.add(1, field.mul(b, c)), a_inv);
                all.push(Mat2([a as u8, b as u8, c as u8, d as u8]));
            }
        }
    }
    debug_assert_eq!(all.len(), expected);
    debug_assert!(all.windows(2).all(|w| w[0] < w[1]));
    Ok(all)
}

/// One conjugacy class of `SL(2, F_p)`.
#[derive(Debug, Clone, Serialize)]
pub struct ConjClass {
    /// Lexicographically least element of the class.
    pub representative: Mat2,
    pub size: usize,
    pub trace: u32,
    /// Multiplicative order of the class elements.
    pub order: u32,
}

/// The partition of `SL(2, F_p)` into conjugation orbits, with constant-time
/// class lookup and a conjugating witness for every element.
#[derive(Debug, Clone)]
pub struct ConjClassTable {
    p: u32,
    classes: Vec<ConjClass>,
    members: Vec<Vec<Mat2>>,
    class_of: Vec<u16>,
    witness: Vec<Mat2>,
}

/// Partition `sl2_elements(p)` into conjugation orbits. Classes are numbered
/// by the first (lexicographically least) element discovered, so the order is
/// deterministic.
pub fn conjugacy_partition(p: u32) -> Result<ConjClassTable> {
    let elements = sl2_elements(p)?;
    let group_order = elements.len();
    let size = (p as usize).pow(4);
    let mut class_of = vec![u16::MAX; size];
    let mut witness = vec![Mat2::IDENTITY; size];
    let mut classes = Vec::new();
    let mut members: Vec<Vec<Mat2>> = Vec::new();

    for &m in &elements {
        if class_of[m.encode(p)] != u16::MAX {
            continue;
        }
        let idx = classes.len() as u16;
        let mut class_members = Vec::new();
        for &g in &elements {
            let c = g.mul(m, p).mul(g.inv_sl(p), p);
            let code = c.encode(p);
            if class_of[code] == u16::MAX {
                class_of[code] = idx;
                // witness sends the representative to the element: w m w^-1 = c
                witness[code] = g;
                class_members.push(c);
            }
        }
        class_members.sort();
        let order = {
            let mut k = 1u32;
            let mut acc = m;
            while acc != Mat2::IDENTITY {
                acc = acc.mul(m, p);
                k += 1;
            }
            k
        };
        classes.push(ConjClass {
            representative: m,
            size: class_members.len(),
            trace: m.trace(p),
            order,
        });
        members.push(class_members);
    }

    debug_assert_eq!(members.iter().map(|c| c.len()).sum::<usize>(), group_order);
    Ok(ConjClassTable { p, classes, members, class_of, witness })
}

impl ConjClassTable {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, m: Mat2) -> usize {
        self.class_of[m.encode(self.p)] as usize
    }

    /// Members of a class in lexicographic order.
    pub fn members(&self, class: usize) -> &[Mat2] {
        &self.members[class]
    }

    /// A matrix `w` with `w * rep * w^-1 = m`, where `rep` is the
    /// representative of `m`'s class.
    pub fn witness_for(&self, m: Mat2) -> Mat2 {
        self.witness[m.encode(self.p)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: filter all p^4 matrices by det = 1.
    fn sl2_by_filter(p: u32) -> Vec<Mat2> {
        let mut out = Vec::new();
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        let m = Mat2([a as u8, b as u8, c as u8, d as u8]);
                        if m.det(p) == 1 {
                            out.push(m);
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn group_orders_match_exhaustive_filter() {
        for p in [2u32, 3, 5, 7] {
            let fast = sl2_elements(p).unwrap();
            let slow = sl2_by_filter(p);
            assert_eq!(fast, slow, "p = {p}");
            assert_eq!(fast.len(), (p * (p * p - 1)) as usize);
        }
        assert_eq!(sl2_elements(2).unwrap().len(), 6);
        assert_eq!(sl2_elements(5).unwrap().len(), 120);
        assert_eq!(sl2_elements(7).unwrap().len(), 336);
        assert!(sl2_elements(4).is_err());
    }

    #[test]
    fn partition_covers_group_with_valid_witnesses() {
        for p in [2u32, 3, 5, 7] {
            let table = conjugacy_partition(p).unwrap();
            let total: usize = table.classes().iter().map(|c| c.size).sum();
            assert_eq!(total, (p * (p * p - 1)) as usize);
            for &m in sl2_elements(p).unwrap().iter() {
                let class = table.class_of(m);
                let rep = table.classes()[class].representative;
                let w = table.witness_for(m);
                assert_eq!(w.mul(rep, p).mul(w.inv_sl(p), p), m);
                assert_eq!(m.trace(p), table.classes()[class].trace);
            }
        }
    }

    #[test]
    fn central_elements_are_singletons() {
        let table = conjugacy_partition(5).unwrap();
        let id_class = table.class_of(Mat2::IDENTITY);
        assert_eq!(table.classes()[id_class].size, 1);
        let minus_id = Mat2([4, 0, 0, 4]);
        let mi_class = table.class_of(minus_id);
        assert_eq!(table.classes()[mi_class].size, 1);
        assert_eq!(table.classes()[mi_class].order, 2);
    }

    #[test]
    fn class_count_p3() {
        // brute-force orbit partition of the 24 elements of SL(2,3) gives 7 classes
        let table = conjugacy_partition(3).unwrap();
        assert_eq!(table.class_count(), 7);
    }

    #[test]
    fn mat2_round_trip_and_pow() {
        let p = 5;
        let f = Fp::new(p).unwrap();
        let m = Mat2([0, 4, 1, 3]);
        let ff = m.to_ffmatrix(f);
        assert_eq!(Mat2::from_ffmatrix(&ff).unwrap(), m);
        assert_eq!(m.pow(0, p), Mat2::IDENTITY);
        assert_eq!(m.pow(-1, p).mul(m, p), Mat2::IDENTITY);
        assert_eq!(m.pow(3, p), m.mul(m, p).mul(m, p));
    }
}
