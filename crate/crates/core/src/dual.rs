//! The dual algebra `H = H_{n,r,f}^*` in the basis `z_j(t^i) = δ_{ij}`.
//!
//! Multiplication is dual to the comultiplication of `H_{n,r,f}`:
//! `(z_a z_b)(t^i) = mult(z_a ⊗ z_b) Δ(t^i)`, so the coefficient of `z_i`
//! in `z_a z_b` is the `(a, b)` entry of `Δ(t^i)`.

use std::fmt;
use std::sync::OnceLock;

use crate::arith::{pow_usize, LaurentPoly, PadicDigits};
use crate::error::{Error, Result};
use crate::hopf::{HElement, HopfAlgebra, HopfParams};
use crate::linalg::rank_over_fraction_field;
use crate::text;

/// `Σ coeffs[j] z_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualElement {
    coeffs: Vec<LaurentPoly>,
}

impl DualElement {
    pub fn zero(params: &HopfParams) -> Self {
        Self {
            coeffs: vec![LaurentPoly::zero(params.p()); params.dim()],
        }
    }

    /// `z_j`.
    pub fn basis(j: usize, params: &HopfParams) -> Result<Self> {
        if j >= params.dim() {
            return Err(Error::IndexOutOfRange {
                index: j as i64,
                bound: params.dim() as i64,
            });
        }
        let mut out = Self::zero(params);
        out.coeffs[j] = LaurentPoly::one(params.p());
        Ok(out)
    }

    /// `z_0 = ε`, the identity of `H`.
    pub fn one(params: &HopfParams) -> Self {
        Self::basis(0, params).expect("z_0 exists")
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

    pub fn coeff(&self, j: usize) -> &LaurentPoly {
        &self.coeffs[j]
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

    pub fn scale_k(&self, c: &LaurentPoly) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn parse(s: &str, params: &HopfParams) -> Result<Self> {
        let mut out = Self::zero(params);
        for term in text::split_top_level(s)? {
            let (j, c) = text::parse_basis_term(&term, "z_", params.p())?;
            if j >= params.dim() {
                return Err(Error::Parse(format!(
                    "z_{j} outside the basis z_0 .. z_{}",
                    params.dim() - 1
                )));
            }
            out.coeffs[j].add_assign_ref(&c);
        }
        Ok(out)
    }
}

impl fmt::Display for DualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render_terms(&self.coeffs, |j| {
            Some(format!("z_{j}"))
        }))
    }
}

/// Pairing `z(h) = Σ_j z[j] h[j]`.
pub fn dual_eval(z: &DualElement, h: &HElement) -> LaurentPoly {
    let p = z.coeffs[0].modulus();
    let mut acc = LaurentPoly::zero(p);
    for (a, b) in z.coeffs.iter().zip(h.coeffs()) {
        if !a.is_zero() && !b.is_zero() {
            acc.add_product(a, b);
        }
    }
    acc
}

/// The algebra `H_{n,r,f}^*` with cached `z`-monomials.
#[derive(Debug)]
pub struct DualAlgebra {
    hopf: HopfAlgebra,
    monomials: Vec<OnceLock<DualElement>>,
}

impl DualAlgebra {
    pub fn new(params: HopfParams) -> Self {
        let dim = params.dim();
        Self {
            hopf: HopfAlgebra::new(params),
            monomials: (0..dim).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn params(&self) -> &HopfParams {
        self.hopf.params()
    }

    pub fn primal(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    /// `a · b`: the coefficient on `z_i` is `Σ a[j1] b[j2] Δ(t^i)[j1, j2]`.
    pub fn mul(&self, a: &DualElement, b: &DualElement) -> DualElement {
        let p = self.params().p();
        let coeffs = (0..self.dim())
            .map(|i| {
                let mut acc = LaurentPoly::zero(p);
                let delta = self.hopf.delta_power(i).expect("index below p^n");
                for (j1, j2, c) in delta.nonzero() {
                    let (x, y) = (&a.coeffs[j1], &b.coeffs[j2]);
                    if !x.is_zero() && !y.is_zero() {
                        acc.add_product(&(x * y), c);
                    }
                }
                acc
            })
            .collect();
        DualElement { coeffs }
    }

    pub fn pow(&self, z: &DualElement, e: u64) -> DualElement {
        (0..e).fold(DualElement::one(self.params()), |acc, _| self.mul(&acc, z))
    }

    /// `z_{p^s}`, the scaffold generator `Ψ_s`.
    pub fn generator(&self, s: u32) -> Result<DualElement> {
        if s >= self.params().n() {
            return Err(Error::IndexOutOfRange {
                index: s as i64,
                bound: self.params().n() as i64,
            });
        }
        DualElement::basis(pow_usize(self.params().p(), s), self.params())
    }

    /// `z_1^{j_0} z_p^{j_1} ⋯ z_{p^{n-1}}^{j_{n-1}}`, multiplied left to right.
    pub fn z_monomial(&self, digits: &PadicDigits) -> Result<&DualElement> {
        let params = self.params();
        if digits.len() != params.n() as usize || digits.base() != params.p() {
            return Err(Error::InvalidParameters(format!(
                "expected {} base-{} digits",
                params.n(),
                params.p()
            )));
        }
        let j = digits.value();
        Ok(self.monomials[j].get_or_init(|| {
            let mut acc = DualElement::one(params);
            for (s, &e) in digits.digits().iter().enumerate() {
                let gen = self.generator(s as u32).expect("slot below n");
                for _ in 0..e {
                    acc = self.mul(&acc, &gen);
                }
            }
            acc
        }))
    }

    /// The monomial indexed by `0 <= j < p^n` via its base-p digits.
    pub fn z_monomial_at(&self, j: usize) -> Result<&DualElement> {
        let digits = crate::arith::padic_digits(j as i64, self.params().n(), self.params().p())?;
        self.z_monomial(&digits)
    }

    /// Rank over `K` of `M[j][i] = z_monomial(j)(t^i)`.
    pub fn basis_rank(&self) -> usize {
        let rows: Vec<Vec<LaurentPoly>> = (0..self.dim())
            .map(|j| self.z_monomial_at(j).expect("j below p^n").coeffs.clone())
            .collect();
        rank_over_fraction_field(&rows)
    }
}

/// Free-function form of [`DualAlgebra::mul`].
pub fn dual_mult(a: &DualElement, b: &DualElement, alg: &DualAlgebra) -> DualElement {
    alg.mul(a, b)
}

/// Free-function form of [`DualAlgebra::basis_rank`].
pub fn dual_basis_rank(alg: &DualAlgebra) -> usize {
    alg.basis_rank()
}
