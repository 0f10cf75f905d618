use serde::{Deserialize, Serialize};

use crate::error::LinalgError;

/// The prime field F_p. Elements are represented by their canonical
/// residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeField {
    p: u32,
}

pub(crate) const MAX_PRIME: u32 = (1u32 << 31) - 1;

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let n = n as u64;
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, LinalgError> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn is_binary(self) -> bool {
        self.p == 2
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// `(-1)^e` as a field element.
    #[inline]
    pub fn sign(self, e: i64) -> u32 {
        if e.rem_euclid(2) == 0 {
            1
        } else {
            self.p - 1
        }
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, (self.p - 2) as u64)
    }
}

impl TryFrom<u32> for PrimeField {
    type Error = LinalgError;

    fn try_from(p: u32) -> Result<Self, Self::Error> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u32 {
    fn from(f: PrimeField) -> u32 {
        f.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_bounds() {
        assert!(PrimeField::new(0).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(MAX_PRIME).is_ok());
        assert!(PrimeField::new(65_537).is_ok());
    }

    #[test]
    fn inverses() {
        for p in [2u32, 3, 5, 7, 101, 65_537, MAX_PRIME] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p.min(200) {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }

    #[test]
    fn signs_in_characteristic_two() {
        let f = PrimeField::new(2).unwrap();
        assert_eq!(f.sign(1), 1);
        let g = PrimeField::new(3).unwrap();
        assert_eq!(g.sign(1), 2);
        assert_eq!(g.sign(-2), 1);
    }
}
