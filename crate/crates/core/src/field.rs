//! The purely inseparable extension `L = K[x]/(x^{p^n} - β)` of `K = F_p((T))`
//! with its valuation `v_L` and the fractional ideals `P_L^h`.

use std::fmt;

use serde::Serialize;

use crate::arith::{is_prime, pow_usize, Fp, LaurentPoly, Valuation};
use crate::error::{Error, Result};
use crate::text;

/// Defining data of `L/K`: `x^{p^n} = β` with `v_K(β) = -b`, `p ∤ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionParams {
    p: u32,
    n: u32,
    b: i64,
    beta: LaurentPoly,
}

impl ExtensionParams {
    pub fn new(p: u32, n: u32, b: i64, beta: LaurentPoly) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n < 2 {
            return Err(Error::InvalidParameters(format!(
                "n must be at least 2, got {n}"
            )));
        }
        if b <= 0 || b % p as i64 == 0 {
            return Err(Error::InvalidParameters(format!(
                "b must be positive and coprime to p = {p}, got {b}"
            )));
        }
        if beta.modulus() != p {
            return Err(Error::ModulusMismatch {
                left: p,
                right: beta.modulus(),
            });
        }
        if beta.valuation() != Valuation::Finite(-b) {
            return Err(Error::ValuationMismatch {
                expected: (-b).to_string(),
                found: beta.valuation().to_string(),
            });
        }
        Ok(Self { p, n, b, beta })
    }

    /// The standard choice `β = T^{-b}`.
    pub fn monomial(p: u32, n: u32, b: i64) -> Result<Self> {
        Self::new(p, n, b, LaurentPoly::monomial(1, -b, p))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn beta(&self) -> &LaurentPoly {
        &self.beta
    }

    /// The degree `p^n = [L : K]`.
    pub fn degree(&self) -> usize {
        pow_usize(self.p, self.n)
    }
}

/// An element `Σ coeffs[i] x^i` of `L`, `0 <= i < p^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LElement {
    coeffs: Vec<LaurentPoly>,
}

impl LElement {
    pub fn zero(ext: &ExtensionParams) -> Self {
        Self {
            coeffs: vec![LaurentPoly::zero(ext.p); ext.degree()],
        }
    }

    pub fn one(ext: &ExtensionParams) -> Self {
        Self::from_k(LaurentPoly::one(ext.p), ext)
    }

    /// Embeds an element of `K`.
    pub fn from_k(c: LaurentPoly, ext: &ExtensionParams) -> Self {
        let mut out = Self::zero(ext);
        out.coeffs[0] = c;
        out
    }

    /// `c * x^i` for any `i >= 0`, reducing with `x^{p^n} = β`.
    pub fn monomial(c: LaurentPoly, i: usize, ext: &ExtensionParams) -> Self {
        let pn = ext.degree();
        let c = if i >= pn {
            &c * &ext.beta.pow((i / pn) as u64)
        } else {
            c
        };
        let mut out = Self::zero(ext);
        out.coeffs[i % pn] = c;
        out
    }

    /// `x^i`.
    pub fn x_pow(i: usize, ext: &ExtensionParams) -> Self {
        Self::monomial(LaurentPoly::one(ext.p), i, ext)
    }

    /// Wraps a coefficient vector, checking its length is `p^n`.
    pub fn from_coeffs(coeffs: Vec<LaurentPoly>, ext: &ExtensionParams) -> Result<Self> {
        if coeffs.len() != ext.degree() {
            return Err(Error::InvalidParameters(format!(
                "expected {} coefficients, got {}",
                ext.degree(),
                coeffs.len()
            )));
        }
        if let Some(c) = coeffs.iter().find(|c| c.modulus() != ext.p) {
            return Err(Error::ModulusMismatch {
                left: ext.p,
                right: c.modulus(),
            });
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &LaurentPoly {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Self { coeffs }
    }

    /// In-place `self += c * other` for `c ∈ K`.
    pub fn add_scaled(&mut self, c: &LaurentPoly, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (dst, src) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !src.is_zero() {
                dst.add_product(c, src);
            }
        }
    }

    /// Multiplication by an element of `K`.
    pub fn scale_k(&self, c: &LaurentPoly) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale(&self, c: Fp) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Parses `Σ (<LaurentPoly>)*x^i`; shorthand `x^i`, `x`, and bare
    /// coefficients are accepted.
    pub fn parse(s: &str, ext: &ExtensionParams) -> Result<Self> {
        let mut out = Self::zero(ext);
        for term in text::split_top_level(s)? {
            let (i, c) = text::parse_basis_term(&term, "x", ext.p)?;
            out = out.add(&Self::monomial(c, i, ext));
        }
        Ok(out)
    }
}

impl fmt::Display for LElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = text::render_terms(&self.coeffs, |i| match i {
            0 => None,
            1 => Some("x".to_string()),
            i => Some(format!("x^{i}")),
        });
        f.write_str(&s)
    }
}

impl Serialize for LElement {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Product in `L`: schoolbook multiplication, then `x^{p^n + k} ↦ β x^k`.
pub fn l_mul(a: &LElement, b: &LElement, ext: &ExtensionParams) -> LElement {
    let pn = ext.degree();
    let p = ext.p;
    let mut wide = vec![LaurentPoly::zero(p); 2 * pn - 1];
    for (i, ai) in a.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, bj) in b.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            wide[i + j].add_product(ai, bj);
        }
    }
    let high = wide.split_off(pn);
    for (k, c) in high.into_iter().enumerate() {
        if !c.is_zero() {
            wide[k].add_product(&c, &ext.beta);
        }
    }
    LElement { coeffs: wide }
}

/// `v_L(y) = min_i (p^n v_K(coeffs[i]) - b i)`. The candidates are pairwise
/// incongruent mod `p^n`, so the minimum is attained exactly once.
pub fn l_valuation(y: &LElement, ext: &ExtensionParams) -> Valuation {
    let pn = ext.degree() as i64;
    y.coeffs
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.valuation().finite().map(|v| pn * v - ext.b * i as i64))
        .min()
        .map_or(Valuation::Infinity, Valuation::Finite)
}

/// Membership in `P_L^h = { y : v_L(y) >= h }`.
pub fn ideal_membership(y: &LElement, h: i64, ext: &ExtensionParams) -> bool {
    l_valuation(y, ext).at_least(h)
}
