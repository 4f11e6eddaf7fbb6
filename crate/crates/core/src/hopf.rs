//! The monogenic Hopf algebra `H_{n,r,f} = K[t]/(t^{p^n})` with
//!
//! ```text
//! Δ(t) = t⊗1 + 1⊗t + f Σ_{ℓ=1}^{p-1} 1/(ℓ!(p-ℓ)!) t^{p^r ℓ} ⊗ t^{p^r (p-ℓ)},
//! ε(t) = 0,   S(t) = -t.
//! ```
//!
//! `Δ(t^i)` is obtained by powering `Δ(t)` inside `H ⊗ H`; results are cached
//! per exponent because the dual multiplication reads them repeatedly.

use std::fmt;
use std::sync::OnceLock;

use crate::arith::{factorial_mod_p, is_prime, pow_usize, LaurentPoly};
use crate::error::{Error, Result};
use crate::text;

/// `(p, n, r, f)` with `0 < r < n <= 2r` and `f ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfParams {
    p: u32,
    n: u32,
    r: u32,
    f: LaurentPoly,
}

impl HopfParams {
    pub fn new(p: u32, n: u32, r: u32, f: LaurentPoly) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !(0 < r && r < n && n <= 2 * r) {
            return Err(Error::InvalidParameters(format!(
                "need 0 < r < n <= 2r, got n = {n}, r = {r}"
            )));
        }
        if f.modulus() != p {
            return Err(Error::ModulusMismatch {
                left: p,
                right: f.modulus(),
            });
        }
        if f.is_zero() {
            return Err(Error::InvalidParameters("f must be nonzero".into()));
        }
        Ok(Self { p, n, r, f })
    }

    /// `f = T^{f_val}`.
    pub fn monomial(p: u32, n: u32, r: u32, f_val: i64) -> Result<Self> {
        Self::new(p, n, r, LaurentPoly::monomial(1, f_val, p))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn f(&self) -> &LaurentPoly {
        &self.f
    }

    /// `v_K(f)`; finite since `f ≠ 0`.
    pub fn f_valuation(&self) -> i64 {
        self.f.valuation().finite().expect("f is nonzero")
    }

    /// `dim_K H = p^n`.
    pub fn dim(&self) -> usize {
        pow_usize(self.p, self.n)
    }

    /// The comultiplication coefficients `(ℓ, f/(ℓ!(p-ℓ)!))` for `1 <= ℓ <= p-1`.
    pub fn cross_terms(&self) -> Vec<(u32, LaurentPoly)> {
        (1..self.p)
            .map(|l| {
                let denom = factorial_mod_p(l as u64, self.p)
                    * factorial_mod_p((self.p - l) as u64, self.p);
                let c = denom.inv().expect("factorials below p are units");
                (l, self.f.scale(c))
            })
            .collect()
    }
}

/// `Σ coeffs[i] t^i` in `H_{n,r,f}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HElement {
    coeffs: Vec<LaurentPoly>,
}

impl HElement {
    pub fn zero(params: &HopfParams) -> Self {
        Self {
            coeffs: vec![LaurentPoly::zero(params.p); params.dim()],
        }
    }

    /// `t^i`; zero once `i >= p^n`.
    pub fn t_pow(i: usize, params: &HopfParams) -> Self {
        let mut out = Self::zero(params);
        if i < params.dim() {
            out.coeffs[i] = LaurentPoly::one(params.p);
        }
        out
    }

    pub fn from_coeffs(coeffs: Vec<LaurentPoly>, params: &HopfParams) -> Result<Self> {
        if coeffs.len() != params.dim() {
            return Err(Error::InvalidParameters(format!(
                "expected {} coefficients, got {}",
                params.dim(),
                coeffs.len()
            )));
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

    /// Product in `K[t]/(t^{p^n})`.
    pub fn mul(&self, other: &Self) -> Self {
        let dim = self.coeffs.len();
        let p = self.coeffs[0].modulus();
        let mut out = vec![LaurentPoly::zero(p); dim];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, b) in other.coeffs[..dim - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j].add_product(a, b);
                }
            }
        }
        Self { coeffs: out }
    }

    pub fn parse(s: &str, params: &HopfParams) -> Result<Self> {
        let mut out = Self::zero(params);
        for term in text::split_top_level(s)? {
            let (i, c) = text::parse_basis_term(&term, "t", params.p)?;
            if i < params.dim() {
                out.coeffs[i].add_assign_ref(&c);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = text::render_terms(&self.coeffs, |i| match i {
            0 => None,
            1 => Some("t".to_string()),
            i => Some(format!("t^{i}")),
        });
        f.write_str(&s)
    }
}

/// Dense `p^n × p^n` coefficient matrix of an element `Σ m[a][b] t^a ⊗ t^b`
/// of `H ⊗ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorHH {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl TensorHH {
    pub fn zero(dim: usize, p: u32) -> Self {
        Self {
            dim,
            entries: vec![LaurentPoly::zero(p); dim * dim],
        }
    }

    /// `1 ⊗ 1`.
    pub fn identity(dim: usize, p: u32) -> Self {
        let mut out = Self::zero(dim, p);
        out.entries[0] = LaurentPoly::one(p);
        out
    }

    /// `t^a ⊗ t^b` (zero if either exponent reaches `dim`).
    pub fn basis(a: usize, b: usize, dim: usize, p: u32) -> Self {
        let mut out = Self::zero(dim, p);
        if a < dim && b < dim {
            out.entries[a * dim + b] = LaurentPoly::one(p);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, a: usize, b: usize) -> &LaurentPoly {
        &self.entries[a * self.dim + b]
    }

    pub fn add_at(&mut self, a: usize, b: usize, c: &LaurentPoly) {
        self.entries[a * self.dim + b].add_assign_ref(c);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    /// Nonzero entries as `(a, b, coefficient)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> {
        let dim = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (k / dim, k % dim, c))
    }
}

/// Product in `H ⊗ H`; `t` is nilpotent in each leg, so terms whose exponent
/// reaches `p^n` are dropped.
pub fn tensor_mul(a: &TensorHH, b: &TensorHH) -> TensorHH {
    assert_eq!(a.dim, b.dim, "dimension mismatch");
    let dim = a.dim;
    let p = a.entries[0].modulus();
    let rhs: Vec<_> = b.nonzero().collect();
    let mut out = TensorHH::zero(dim, p);
    for (c1, d1, x) in a.nonzero() {
        for &(c2, d2, y) in &rhs {
            let (c, d) = (c1 + c2, d1 + d2);
            if c < dim && d < dim {
                out.entries[c * dim + d].add_product(x, y);
            }
        }
    }
    out
}

/// `Δ(t)`.
pub fn delta_t(params: &HopfParams) -> TensorHH {
    let dim = params.dim();
    let p = params.p;
    let mut out = TensorHH::zero(dim, p);
    out.add_at(1, 0, &LaurentPoly::one(p));
    out.add_at(0, 1, &LaurentPoly::one(p));
    let step = pow_usize(p, params.r);
    for (l, c) in params.cross_terms() {
        let l = l as usize;
        out.add_at(step * l, step * (p as usize - l), &c);
    }
    out
}

/// `ε(h)`: the constant coefficient.
pub fn counit(h: &HElement) -> LaurentPoly {
    h.coeffs[0].clone()
}

/// `S(h)`: substitution `t ↦ -t`.
pub fn antipode(h: &HElement) -> HElement {
    let coeffs = h
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect();
    HElement { coeffs }
}

/// `H_{n,r,f}` together with a lazily filled table of `Δ(t^i)`.
///
/// The table is filled in increasing `i`; concurrent readers see either an
/// empty slot or the final value.
#[derive(Debug)]
pub struct HopfAlgebra {
    params: HopfParams,
    delta_t: TensorHH,
    powers: Vec<OnceLock<TensorHH>>,
}

impl HopfAlgebra {
    pub fn new(params: HopfParams) -> Self {
        let dim = params.dim();
        let delta_t = delta_t(&params);
        Self {
            params,
            delta_t,
            powers: (0..dim).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn params(&self) -> &HopfParams {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.params.dim()
    }

    pub fn delta_t(&self) -> &TensorHH {
        &self.delta_t
    }

    /// `Δ(t^i) = Δ(t)^i` for `0 <= i < p^n`.
    pub fn delta_power(&self, i: usize) -> Result<&TensorHH> {
        let dim = self.dim();
        if i >= dim {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                bound: dim as i64,
            });
        }
        let p = self.params.p;
        let mut last = self.powers[0].get_or_init(|| TensorHH::identity(dim, p));
        for k in 1..=i {
            last = self.powers[k].get_or_init(|| tensor_mul(last, &self.delta_t));
        }
        Ok(last)
    }

    /// Fills the whole `Δ(t^i)` table.
    pub fn precompute(&self) {
        let _ = self.delta_power(self.dim() - 1);
    }

    /// `(Δ ⊗ id) Δ(t^i)` as a flattened `p^n × p^n × p^n` cube.
    pub fn coassoc_left(&self, i: usize) -> Result<Vec<LaurentPoly>> {
        let dim = self.dim();
        let mut cube = vec![LaurentPoly::zero(self.params.p); dim * dim * dim];
        for (k, c, coef) in self.delta_power(i)?.nonzero() {
            for (a, b, inner) in self.delta_power(k)?.nonzero() {
                cube[(a * dim + b) * dim + c].add_product(coef, inner);
            }
        }
        Ok(cube)
    }

    /// `(id ⊗ Δ) Δ(t^i)` as a flattened cube.
    pub fn coassoc_right(&self, i: usize) -> Result<Vec<LaurentPoly>> {
        let dim = self.dim();
        let mut cube = vec![LaurentPoly::zero(self.params.p); dim * dim * dim];
        for (a, k, coef) in self.delta_power(i)?.nonzero() {
            for (b, c, inner) in self.delta_power(k)?.nonzero() {
                cube[(a * dim + b) * dim + c].add_product(coef, inner);
            }
        }
        Ok(cube)
    }

    /// `(ε ⊗ id) Δ(t^i)`, which should equal `t^i`.
    pub fn counit_left(&self, i: usize) -> Result<HElement> {
        let delta = self.delta_power(i)?;
        let coeffs = (0..self.dim()).map(|b| delta.get(0, b).clone()).collect();
        Ok(HElement { coeffs })
    }

    /// `(id ⊗ ε) Δ(t^i)`.
    pub fn counit_right(&self, i: usize) -> Result<HElement> {
        let delta = self.delta_power(i)?;
        let coeffs = (0..self.dim()).map(|a| delta.get(a, 0).clone()).collect();
        Ok(HElement { coeffs })
    }

    /// `mult (S ⊗ id) Δ(t^i)`, which the antipode axiom equates with `ε(t^i) 1`.
    pub fn antipode_left(&self, i: usize) -> Result<HElement> {
        self.antipode_convolution(i, true)
    }

    /// `mult (id ⊗ S) Δ(t^i)`.
    pub fn antipode_right(&self, i: usize) -> Result<HElement> {
        self.antipode_convolution(i, false)
    }

    fn antipode_convolution(&self, i: usize, left: bool) -> Result<HElement> {
        let dim = self.dim();
        let mut out = HElement::zero(&self.params);
        for (a, b, c) in self.delta_power(i)?.nonzero() {
            if a + b >= dim {
                continue;
            }
            let flipped = if left { a } else { b };
            let term = if flipped % 2 == 1 { -c } else { c.clone() };
            out.coeffs[a + b].add_assign_ref(&term);
        }
        Ok(out)
    }

    /// `ε(t^i) · 1`, the expected value of the antipode convolutions.
    pub fn counit_times_one(&self, i: usize) -> HElement {
        let mut out = HElement::zero(&self.params);
        out.coeffs[0] = counit(&HElement::t_pow(i, &self.params));
        out
    }
}
