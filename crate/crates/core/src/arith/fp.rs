//! Scalars of the prime field F_p and the integer-to-F_p helpers (inverses,
//! factorials, Lucas binomials) that the comultiplication coefficients need.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Trial-division primality test; moduli here are tiny.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of F_p stored as its least nonnegative representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    /// Reduces `value` modulo the prime `modulus`.
    pub fn new(value: i64, modulus: u32) -> Result<Self> {
        if !is_prime(modulus) {
            return Err(Error::NotPrime(modulus));
        }
        Ok(Self::reduce(value, modulus))
    }

    /// Same as [`Fp::new`] without the primality check.
    pub(crate) fn reduce(value: i64, modulus: u32) -> Self {
        let m = modulus as i64;
        Self {
            value: value.rem_euclid(m) as u32,
            modulus,
        }
    }

    pub fn zero(modulus: u32) -> Self {
        Self { value: 0, modulus }
    }

    pub fn one(modulus: u32) -> Self {
        Self {
            value: 1 % modulus,
            modulus,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible {
                value: 0,
                p: self.modulus,
            });
        }
        Ok(self.pow(self.modulus as u64 - 2))
    }
}

impl Add for Fp {
    type Output = Fp;

    fn add(self, other: Fp) -> Fp {
        debug_assert_eq!(self.modulus, other.modulus);
        Fp {
            value: ((self.value as u64 + other.value as u64) % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;

    fn neg(self) -> Fp {
        Fp {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;

    fn mul(self, other: Fp) -> Fp {
        debug_assert_eq!(self.modulus, other.modulus);
        Fp {
            value: ((self.value as u64 * other.value as u64) % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `m^{-1}` in F_p.
pub fn inverse_mod_p(m: i64, p: u32) -> Result<Fp> {
    let x = Fp::new(m, p)?;
    x.inv().map_err(|_| Error::NotInvertible { value: m, p })
}

/// `m!` reduced mod p.
pub fn factorial_mod_p(m: u64, p: u32) -> Fp {
    (1..=m).fold(Fp::one(p), |acc, k| acc * Fp::reduce(k as i64, p))
}

/// `C(i, k)` mod p, evaluated digitwise (Lucas).
pub fn binomial_mod_p(i: i64, k: i64, p: u32) -> Result<Fp> {
    if k < 0 || k > i {
        return Err(Error::BinomialOutOfRange { i, k });
    }
    let p64 = p as i64;
    let (mut i, mut k) = (i, k);
    let mut acc = Fp::one(p);
    while k > 0 || i > 0 {
        let (id, kd) = (i % p64, k % p64);
        if kd > id {
            return Ok(Fp::zero(p));
        }
        acc = acc * small_binomial(id as u64, kd as u64, p);
        i /= p64;
        k /= p64;
    }
    Ok(acc)
}

// C(n, k) for n < p: n! / (k! (n-k)!) is a unit quotient.
fn small_binomial(n: u64, k: u64, p: u32) -> Fp {
    let num = factorial_mod_p(n, p);
    let den = factorial_mod_p(k, p) * factorial_mod_p(n - k, p);
    num * den.inv().expect("factorials below p are units")
}
