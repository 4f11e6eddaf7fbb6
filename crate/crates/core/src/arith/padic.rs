use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Base-p digits of an integer in `[0, p^n)`, least significant first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PadicDigits {
    digits: Vec<u32>,
    base: u32,
}

impl PadicDigits {
    /// Builds a digit vector, checking each entry lies in `[0, base)`.
    pub fn from_digits(digits: Vec<u32>, base: u32) -> Result<Self> {
        if let Some(&bad) = digits.iter().find(|&&d| d >= base) {
            return Err(Error::IndexOutOfRange {
                index: bad as i64,
                bound: base as i64,
            });
        }
        Ok(Self { digits, base })
    }

    /// The one-hot vector `e_s` of length `n`.
    pub fn unit(slot: usize, n: usize, base: u32) -> Self {
        let mut digits = vec![0; n];
        digits[slot] = 1;
        Self { digits, base }
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn digit(&self, s: usize) -> u32 {
        self.digits[s]
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// `Σ digits[s] p^s`.
    pub fn value(&self) -> usize {
        self.digits
            .iter()
            .rev()
            .fold(0usize, |acc, &d| acc * self.base as usize + d as usize)
    }

    /// True when `self.digit(s) + other.digit(s) <= p - 1` for every slot.
    pub fn adds_without_carry(&self, other: &Self) -> bool {
        self.digits
            .iter()
            .zip(&other.digits)
            .all(|(a, b)| a + b < self.base)
    }

    /// True when `other.digit(s) <= self.digit(s)` for every slot.
    pub fn dominates(&self, other: &Self) -> bool {
        self.digits.iter().zip(&other.digits).all(|(a, b)| b <= a)
    }
}

/// `p^e` as usize.
pub fn pow_usize(p: u32, e: u32) -> usize {
    (p as usize).pow(e)
}

/// Digits of `i` in base `p`, padded to length `n`.
pub fn padic_digits(i: i64, n: u32, p: u32) -> Result<PadicDigits> {
    let bound = pow_usize(p, n) as i64;
    if i < 0 || i >= bound {
        return Err(Error::IndexOutOfRange { index: i, bound });
    }
    let mut rest = i as u64;
    let digits = (0..n)
        .map(|_| {
            let d = (rest % p as u64) as u32;
            rest /= p as u64;
            d
        })
        .collect();
    Ok(PadicDigits { digits, base: p })
}

/// Least nonnegative residue of `v` modulo `modulus`.
pub fn res_mod(v: i64, modulus: i64) -> i64 {
    assert!(modulus >= 1, "modulus must be positive");
    v.rem_euclid(modulus)
}
