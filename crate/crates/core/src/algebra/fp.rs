use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::{Error, Result};

/// Trial-division primality test; the moduli in play are tiny.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field `F_p`. Primality is checked at construction, so holding an
/// `Fp` is a proof that `p` is prime. Element values are plain `u32`s in
/// `[0, p)`; the context supplies the arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Fp { p })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a % self.p == 0 {
            return Err(Error::SingularMatrix);
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }

    /// Reduce an arbitrary-precision integer into `[0, p)`.
    pub fn reduce_bigint(&self, x: &BigInt) -> u32 {
        let p = BigInt::from(self.p);
        let mut r = x % &p;
        if r.is_negative() {
            r += &p;
        }
        r.to_u32().expect("residue fits in u32")
    }

    pub fn reduce_i64(&self, x: i64) -> u32 {
        let p = self.p as i64;
        (((x % p) + p) % p) as u32
    }

    pub fn same(&self, other: &Fp) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        Ok(())
    }
}

/// A single element of `F_p` carrying its modulus, for API boundaries where a
/// bare `u32` would lose the field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FieldElem {
    pub value: u32,
    pub modulus: u32,
}

impl FieldElem {
    pub fn new(value: i64, field: Fp) -> Self {
        FieldElem {
            value: field.reduce_i64(value),
            modulus: field.p(),
        }
    }
}

impl std::fmt::Display for FieldElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}
