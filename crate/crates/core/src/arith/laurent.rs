//! Laurent polynomials over F_p: finitely supported maps from exponents of
//! `T` to nonzero scalars. These model elements of `K = F_p((T))` exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::fp::Fp;
use super::valuation::Valuation;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    p: u32,
    // exponent -> coefficient in [1, p)
    terms: BTreeMap<i64, u32>,
}

impl LaurentPoly {
    pub fn zero(p: u32) -> Self {
        Self {
            p,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(p: u32) -> Self {
        Self::monomial(1, 0, p)
    }

    /// The uniformizer `T`.
    pub fn t(p: u32) -> Self {
        Self::monomial(1, 1, p)
    }

    /// `c * T^e`, with `c` reduced mod p.
    pub fn monomial(c: i64, e: i64, p: u32) -> Self {
        let c = Fp::reduce(c, p);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c.value());
        }
        Self { p, terms }
    }

    pub fn constant(c: Fp) -> Self {
        Self::monomial(c.value() as i64, 0, c.modulus())
    }

    /// Sums `(exponent, coefficient)` pairs, combining repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I, p: u32) -> Self {
        let mut out = Self::zero(p);
        for (e, c) in terms {
            out.add_term(e, Fp::reduce(c, p));
        }
        out
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> Fp {
        Fp::reduce(self.terms.get(&e).copied().unwrap_or(0) as i64, self.p)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, Fp)> + '_ {
        let p = self.p;
        self.terms
            .iter()
            .map(move |(&e, &c)| (e, Fp::reduce(c as i64, p)))
    }

    /// T-adic valuation: the least exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Valuation {
        match self.terms.keys().next() {
            Some(&e) => Valuation::Finite(e),
            None => Valuation::Infinity,
        }
    }

    /// Largest exponent present, if any.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the lowest-order term.
    pub fn leading_coeff(&self) -> Option<Fp> {
        self.terms
            .iter()
            .next()
            .map(|(_, &c)| Fp::reduce(c as i64, self.p))
    }

    fn add_term(&mut self, e: i64, c: Fp) {
        if c.is_zero() {
            return;
        }
        let p = self.p as u64;
        let entry = self.terms.entry(e).or_insert(0);
        let sum = ((*entry as u64 + c.value() as u64) % p) as u32;
        if sum == 0 {
            self.terms.remove(&e);
        } else {
            *entry = sum;
        }
    }

    fn check_modulus(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch {
                left: self.p,
                right: other.p,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// In-place `self += other`. Panics on modulus mismatch.
    pub fn add_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.p, other.p, "modulus mismatch");
        for (&e, &c) in &other.terms {
            self.add_term(e, Fp::reduce(c as i64, self.p));
        }
    }

    /// In-place `self += a * b`. Panics on modulus mismatch.
    pub fn add_product(&mut self, a: &Self, b: &Self) {
        assert!(self.p == a.p && a.p == b.p, "modulus mismatch");
        let p = self.p as u64;
        for (&ea, &ca) in &a.terms {
            for (&eb, &cb) in &b.terms {
                let c = (ca as u64 * cb as u64 % p) as i64;
                self.add_term(ea + eb, Fp::reduce(c, self.p));
            }
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.p);
        out.add_product(self, other);
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: Fp) -> Self {
        assert_eq!(self.p, c.modulus(), "modulus mismatch");
        if c.is_zero() {
            return Self::zero(self.p);
        }
        let terms = self
            .terms
            .iter()
            .map(|(&e, &v)| (e, (Fp::reduce(v as i64, self.p) * c).value()))
            .collect();
        Self { p: self.p, terms }
    }

    /// Multiplication by `T^k`.
    pub fn shift(&self, k: i64) -> Self {
        let terms = self.terms.iter().map(|(&e, &c)| (e + k, c)).collect();
        Self { p: self.p, terms }
    }

    pub fn pow(&self, e: u64) -> Self {
        if e == 0 {
            return Self::one(self.p);
        }
        if self.terms.len() == 1 {
            let (&ex, &c) = self.terms.iter().next().expect("single term");
            let c = Fp::reduce(c as i64, self.p).pow(e);
            return Self::monomial(c.value() as i64, ex * e as i64, self.p);
        }
        let mut base = self.clone();
        let mut acc = Self::one(self.p);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient in `F_p[T, T^{-1}]`, or `None` when `divisor` does not
    /// divide `self` (or is zero).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.p, divisor.p, "modulus mismatch");
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.p));
        }
        // Normalise both to polynomials with nonzero constant term; units of
        // the Laurent ring are monomials, so divisibility reduces to that of
        // the normalised polynomials.
        let va = self.valuation().finite()?;
        let vd = divisor.valuation().finite()?;
        let mut rem: BTreeMap<i64, u32> = self.terms.iter().map(|(&e, &c)| (e - va, c)).collect();
        let d: Vec<(i64, Fp)> = divisor.terms().map(|(e, c)| (e - vd, c)).collect();
        let (d_top, d_lead) = *d.last().expect("nonzero divisor");
        let lead_inv = d_lead.inv().expect("nonzero coefficient");
        let mut quotient = Self::zero(self.p);
        while let Some((&top, &c)) = rem.iter().next_back() {
            if top < d_top {
                return None;
            }
            let q = Fp::reduce(c as i64, self.p) * lead_inv;
            let qe = top - d_top;
            quotient.add_term(qe, q);
            for &(e, dc) in &d {
                let sub = -(q * dc);
                let key = e + qe;
                let cur = Fp::reduce(rem.get(&key).copied().unwrap_or(0) as i64, self.p);
                let next = cur + sub;
                if next.is_zero() {
                    rem.remove(&key);
                } else {
                    rem.insert(key, next.value());
                }
            }
        }
        Some(quotient.shift(va - vd))
    }

    /// Evaluates at a nonzero point of F_p.
    pub fn evaluate(&self, at: Fp) -> Result<Fp> {
        if at.modulus() != self.p {
            return Err(Error::ModulusMismatch {
                left: self.p,
                right: at.modulus(),
            });
        }
        if at.is_zero() {
            return Err(Error::NotInvertible {
                value: 0,
                p: self.p,
            });
        }
        let inv = at.inv()?;
        let mut acc = Fp::zero(self.p);
        for (e, c) in self.terms() {
            let base = if e >= 0 { at } else { inv };
            acc = acc + c * base.pow(e.unsigned_abs());
        }
        Ok(acc)
    }

    /// Parses text such as `T^-1 + 2*T^3`; coefficients are reduced mod p.
    pub fn parse(text: &str, p: u32) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty Laurent polynomial".into()));
        }
        let mut out = Self::zero(p);
        for term in compact.split('+') {
            let (e, c) = parse_term(term, p)?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

fn parse_int(s: &str, what: &str) -> Result<i64> {
    s.parse::<i64>()
        .map_err(|_| Error::Parse(format!("bad {what} `{s}`")))
}

fn parse_term(term: &str, p: u32) -> Result<(i64, Fp)> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let Some(t_pos) = term.find('T') else {
        return Ok((0, Fp::reduce(parse_int(term, "coefficient")?, p)));
    };
    let (head, tail) = term.split_at(t_pos);
    let coeff = match head {
        "" => 1,
        "-" => -1,
        h => {
            let h = h
                .strip_suffix('*')
                .ok_or_else(|| Error::Parse(format!("expected `*` before T in `{term}`")))?;
            parse_int(h, "coefficient")?
        }
    };
    let exp = match &tail[1..] {
        "" => 1,
        rest => {
            let rest = rest
                .strip_prefix('^')
                .ok_or_else(|| Error::Parse(format!("expected `^` after T in `{term}`")))?;
            parse_int(rest, "exponent")?
        }
    };
    Ok((exp, Fp::reduce(coeff, p)))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "T")?,
                (1, c) => write!(f, "{c}*T")?,
                (e, 1) => write!(f, "T^{e}")?,
                (e, c) => write!(f, "{c}*T^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: Self) -> LaurentPoly {
        self.checked_add(rhs).expect("modulus mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: Self) -> LaurentPoly {
        self.checked_sub(rhs).expect("modulus mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: Self) -> LaurentPoly {
        self.checked_mul(rhs).expect("modulus mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(Fp::reduce(-1, self.p))
    }
}
