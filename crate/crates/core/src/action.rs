//! The coaction `α: L → L ⊗ H_{n,r,f}` determined by
//!
//! ```text
//! α(x) = x⊗1 + 1⊗t + f Σ_{ℓ=1}^{p-1} 1/(ℓ!(p-ℓ)!) x^{p^r ℓ} ⊗ t^{p^r (p-ℓ)}
//! ```
//!
//! and the dual action `z(y) = mult(1 ⊗ z) α(y)` of `H = H_{n,r,f}^*` on `L`.

use std::sync::OnceLock;

use crate::arith::{binomial_mod_p, pow_usize, Fp, LaurentPoly};
use crate::dual::{DualAlgebra, DualElement};
use crate::error::{Error, Result};
use crate::field::{l_mul, ExtensionParams, LElement};
use crate::hopf::HopfParams;

/// `α(y) = Σ_k components[k] ⊗ t^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoactionImage {
    components: Vec<LElement>,
}

impl CoactionImage {
    pub fn components(&self) -> &[LElement] {
        &self.components
    }

    pub fn component(&self, k: usize) -> &LElement {
        &self.components[k]
    }

    fn zero(ext: &ExtensionParams) -> Self {
        Self {
            components: vec![LElement::zero(ext); ext.degree()],
        }
    }

    /// Product in `L ⊗ H_{n,r,f}` with `t^{p^n} = 0`.
    pub fn mul(&self, other: &Self, ext: &ExtensionParams) -> Self {
        let dim = self.components.len();
        let mut out = Self::zero(ext);
        for (k1, a) in self.components.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k2, b) in other.components[..dim - k1].iter().enumerate() {
                if !b.is_zero() {
                    let prod = l_mul(a, b, ext);
                    out.components[k1 + k2] = out.components[k1 + k2].add(&prod);
                }
            }
        }
        out
    }
}

/// The action of `H_{n,r,f}^*` on `L` induced by `α`, with `α(x)^i` memoised.
#[derive(Debug)]
pub struct GaloisAction {
    ext: ExtensionParams,
    dual: DualAlgebra,
    x_powers: OnceLock<Vec<CoactionImage>>,
}

impl GaloisAction {
    pub fn new(ext: ExtensionParams, hopf: HopfParams) -> Result<Self> {
        if ext.p() != hopf.p() || ext.n() != hopf.n() {
            return Err(Error::InvalidParameters(format!(
                "extension (p={}, n={}) and Hopf algebra (p={}, n={}) disagree",
                ext.p(),
                ext.n(),
                hopf.p(),
                hopf.n()
            )));
        }
        Ok(Self {
            ext,
            dual: DualAlgebra::new(hopf),
            x_powers: OnceLock::new(),
        })
    }

    pub fn ext(&self) -> &ExtensionParams {
        &self.ext
    }

    pub fn hopf(&self) -> &HopfParams {
        self.dual.params()
    }

    pub fn dual(&self) -> &DualAlgebra {
        &self.dual
    }

    /// `α(x)`.
    pub fn alpha_x(&self) -> CoactionImage {
        let ext = &self.ext;
        let hp = self.hopf();
        let p = ext.p() as usize;
        let step = pow_usize(ext.p(), hp.r());
        let mut out = CoactionImage::zero(ext);
        out.components[0] = LElement::x_pow(1, ext);
        out.components[1] = LElement::one(ext);
        for (l, c) in hp.cross_terms() {
            let l = l as usize;
            let term = LElement::monomial(c, step * l, ext);
            let k = step * (p - l);
            out.components[k] = out.components[k].add(&term);
        }
        out
    }

    /// `α(x^i)` for every `0 <= i < p^n`.
    pub fn x_power_images(&self) -> &[CoactionImage] {
        self.x_powers.get_or_init(|| {
            let ext = &self.ext;
            let ax = self.alpha_x();
            let mut one = CoactionImage::zero(ext);
            one.components[0] = LElement::one(ext);
            let mut out = Vec::with_capacity(ext.degree());
            out.push(one);
            for i in 1..ext.degree() {
                let next = out[i - 1].mul(&ax, ext);
                out.push(next);
            }
            out
        })
    }

    /// `α(y) = Σ_i y_i α(x)^i`.
    pub fn coaction(&self, y: &LElement) -> CoactionImage {
        let ext = &self.ext;
        let powers = self.x_power_images();
        let mut out = CoactionImage::zero(ext);
        for (i, yi) in y.coeffs().iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            for (dst, src) in out.components.iter_mut().zip(&powers[i].components) {
                dst.add_scaled(yi, src);
            }
        }
        out
    }

    /// `z(y) = Σ_k z[k] α(y)_k`.
    pub fn act(&self, z: &DualElement, y: &LElement) -> LElement {
        let powers = self.x_power_images();
        let mut out = LElement::zero(&self.ext);
        for (k, zk) in z.coeffs().iter().enumerate() {
            if zk.is_zero() {
                continue;
            }
            for (i, yi) in y.coeffs().iter().enumerate() {
                if yi.is_zero() {
                    continue;
                }
                let component = &powers[i].components[k];
                if !component.is_zero() {
                    out.add_scaled(&(zk * yi), component);
                }
            }
        }
        out
    }

    /// `Ψ_s(y) = z_{p^s}(y)`.
    pub fn apply_generator(&self, s: u32, y: &LElement) -> Result<LElement> {
        Ok(self.act(&self.dual.generator(s)?, y))
    }

    /// Closed form of `z_{p^s}(x^i)` for `s <= r`:
    /// `i_s x^{i-p^s}` below `r`, and `i_r x^{i-p^r} - i f x^{p^r(p-1)+i-1}` at `r`.
    pub fn act_fast(&self, s: u32, i: usize) -> Result<LElement> {
        let ext = &self.ext;
        let hp = self.hopf();
        let p = ext.p();
        if s > hp.r() {
            return Err(Error::NotApplicable(format!(
                "no closed form for z_{{p^{s}}} with s > r = {}",
                hp.r()
            )));
        }
        if i >= ext.degree() {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                bound: ext.degree() as i64,
            });
        }
        let ps = pow_usize(p, s);
        let mut out = LElement::zero(ext);
        if i >= ps {
            let digit = binomial_mod_p(i as i64, ps as i64, p)?;
            out = LElement::monomial(LaurentPoly::constant(digit), i - ps, ext);
        }
        if s == hp.r() && i >= 1 {
            let coeff = hp.f().scale(Fp::reduce(-(i as i64), p));
            let tail = LElement::monomial(coeff, ps * (p as usize - 1) + i - 1, ext);
            out = out.add(&tail);
        }
        Ok(out)
    }
}
