//! Scaffold elements `λ_j`, the tolerance `𝔗`, and verification of the
//! scaffold congruences
//!
//! ```text
//! Ψ_s(λ_j) ≡ res(aj)_s λ_{j + p^s b}   mod λ_{j + p^s b} P_L^𝔗
//! ```
//!
//! with `Ψ_s = z_{p^s}` and `ab ≡ -1 (mod p^n)`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::action::GaloisAction;
use crate::arith::{padic_digits, pow_usize, Fp, LaurentPoly, PadicDigits, Valuation};
use crate::error::{Error, Result};
use crate::field::{l_valuation, ExtensionParams, LElement};
use crate::hopf::HopfParams;

/// Least nonnegative `a` with `a b ≡ -1 (mod pn)`.
pub fn solve_a(b: i64, pn: i64) -> Result<i64> {
    let (g, inv, _) = ext_gcd(b.rem_euclid(pn), pn);
    if g != 1 {
        return Err(Error::NotInvertible {
            value: b,
            p: pn as u32,
        });
    }
    Ok((-inv).rem_euclid(pn))
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// `𝔗 = p^n v_K(f) - b(p^{r+1} - 1)`, defined when `v_K(f) >= b p^{r+1-n}`.
pub fn tolerance(ext: &ExtensionParams, hp: &HopfParams) -> Result<i64> {
    let (p, n, r, b) = (ext.p() as i64, ext.n(), hp.r(), ext.b());
    let v = hp.f_valuation();
    // v >= b p^{r+1-n}  <=>  v p^{n-r-1} >= b, as n >= r + 1
    if v * p.pow(n - r - 1) < b {
        return Err(Error::HypothesisUnmet(format!(
            "v_K(f) = {v} is below b p^(r+1-n) = {b}/{}",
            p.pow(n - r - 1)
        )));
    }
    Ok(p.pow(n) * v - b * (p.pow(r + 1) - 1))
}

/// Least `v` with `p^n v - b(p^{r+1} - 1) >= target`.
pub fn min_f_valuation_for(target: i64, ext: &ExtensionParams, r: u32) -> i64 {
    let p = ext.p() as i64;
    let pn = p.pow(ext.n());
    let need = target + ext.b() * (p.pow(r + 1) - 1);
    need.div_euclid(pn) + i64::from(need.rem_euclid(pn) != 0)
}

/// `λ_j = T^{(j + b res(aj))/p^n} x^{res(aj)}`.
pub fn lambda_with(j: i64, a: i64, ext: &ExtensionParams) -> LElement {
    let pn = ext.degree() as i64;
    let res = (a * j).rem_euclid(pn);
    let num = j + ext.b() * res;
    assert_eq!(num.rem_euclid(pn), 0, "T-exponent of λ_{j} is not integral");
    LElement::monomial(
        LaurentPoly::monomial(1, num / pn, ext.p()),
        res as usize,
        ext,
    )
}

/// Parameters fixed for a scaffold: `a`, the tolerance and the action.
#[derive(Debug, Clone, Copy)]
pub struct ScaffoldContext<'a> {
    a: i64,
    tolerance: i64,
    action: &'a GaloisAction,
}

impl<'a> ScaffoldContext<'a> {
    /// Fails when the valuation hypothesis is unmet or the tolerance is not
    /// greater than 1.
    pub fn new(action: &'a GaloisAction) -> Result<Self> {
        let ext = action.ext();
        let tolerance = tolerance(ext, action.hopf())?;
        if tolerance <= 1 {
            return Err(Error::HypothesisUnmet(format!(
                "tolerance {tolerance} is not greater than 1"
            )));
        }
        let a = solve_a(ext.b(), ext.degree() as i64)?;
        Ok(Self {
            a,
            tolerance,
            action,
        })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn tolerance(&self) -> i64 {
        self.tolerance
    }

    pub fn action(&self) -> &'a GaloisAction {
        self.action
    }

    /// `res(aj)`.
    pub fn res_aj(&self, j: i64) -> i64 {
        (self.a * j).rem_euclid(self.action.ext().degree() as i64)
    }

    /// Base-p digit `res(aj)_s`.
    pub fn digit(&self, j: i64, s: u32) -> u32 {
        let ext = self.action.ext();
        padic_digits(self.res_aj(j), ext.n(), ext.p())
            .expect("residue below p^n")
            .digit(s as usize)
    }

    pub fn lambda(&self, j: i64) -> LElement {
        lambda_with(j, self.a, self.action.ext())
    }
}

/// Free-function form of [`ScaffoldContext::lambda`].
pub fn lambda(j: i64, ctx: &ScaffoldContext<'_>) -> LElement {
    ctx.lambda(j)
}

/// Outcome of one `(s, j)` congruence.
#[derive(Clone, Debug, Serialize)]
pub struct ScaffoldCheck {
    pub s: u32,
    pub j: i64,
    /// `res(aj)_s`.
    pub digit: u32,
    /// `u_{s,j}`; absent on the zero branch.
    #[serde(serialize_with = "serialize_unit")]
    pub unit: Option<LaurentPoly>,
    /// `v_L(residual) - v_L(λ_{j + p^s b})`.
    pub depth: Valuation,
    pub passed: bool,
}

fn serialize_unit<S: serde::Serializer>(
    unit: &Option<LaurentPoly>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    match unit {
        Some(u) => serializer.serialize_str(&u.to_string()),
        None => serializer.serialize_none(),
    }
}

/// Parameters echoed into reports.
#[derive(Clone, Debug, Serialize)]
pub struct ParamsSummary {
    pub p: u32,
    pub n: u32,
    pub r: u32,
    pub b: i64,
    pub f: String,
    pub beta: String,
}

impl ParamsSummary {
    pub fn of(action: &GaloisAction) -> Self {
        let (ext, hp) = (action.ext(), action.hopf());
        Self {
            p: ext.p(),
            n: ext.n(),
            r: hp.r(),
            b: ext.b(),
            f: hp.f().to_string(),
            beta: ext.beta().to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScaffoldReport {
    pub params: ParamsSummary,
    pub tolerance: i64,
    pub checks: Vec<ScaffoldCheck>,
    pub all_passed: bool,
}

/// Checks every `(s, j)` with `0 <= s < n` and `0 <= j < p^n`.
///
/// The unit is taken to be the digit `res(aj)_s`, and the congruence is
/// decided on exact valuations: `v_L(Ψ_s(λ_j) - u λ_{j+p^s b}) >= (j + p^s b) + 𝔗`.
pub fn verify_scaffold(ctx: &ScaffoldContext<'_>) -> ScaffoldReport {
    let action = ctx.action;
    let ext = action.ext();
    let pn = ext.degree() as i64;
    let pairs: Vec<(u32, i64)> = (0..ext.n())
        .flat_map(|s| (0..pn).map(move |j| (s, j)))
        .collect();
    let mut checks: Vec<ScaffoldCheck> = pairs
        .par_iter()
        .map(|&(s, j)| check_one(ctx, s, j))
        .collect();
    checks.sort_by_key(|c| (c.s, c.j));
    let all_passed = checks.iter().all(|c| c.passed);
    ScaffoldReport {
        params: ParamsSummary::of(action),
        tolerance: ctx.tolerance,
        checks,
        all_passed,
    }
}

fn check_one(ctx: &ScaffoldContext<'_>, s: u32, j: i64) -> ScaffoldCheck {
    let action = ctx.action;
    let ext = action.ext();
    let shift = pow_usize(ext.p(), s) as i64 * ext.b();
    let image = action
        .apply_generator(s, &ctx.lambda(j))
        .expect("s below n");
    let digit = ctx.digit(j, s);
    let (unit, residual) = if digit > 0 {
        let u = LaurentPoly::constant(Fp::reduce(digit as i64, ext.p()));
        let target = ctx.lambda(j + shift).scale_k(&u);
        (Some(u), image.sub(&target))
    } else {
        (None, image)
    };
    let depth = l_valuation(&residual, ext).shift(-(j + shift));
    ScaffoldCheck {
        s,
        j,
        digit,
        unit,
        depth,
        passed: depth.at_least(ctx.tolerance),
    }
}

/// One `z`-monomial image of `ρ`.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateEntry {
    pub digits: Vec<u32>,
    pub j: usize,
    pub valuation: Valuation,
    pub expected: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    pub entries: Vec<CertificateEntry>,
    /// Every valuation equals `b(1 + j)`.
    pub valuations_match: bool,
    /// The valuations form a complete residue system mod `p^n`.
    pub complete_residues: bool,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.valuations_match && self.complete_residues
    }
}

/// Computes `v_L(z_1^{j_0} ⋯ z_{p^{n-1}}^{j_{n-1}}(ρ))` for all digit tuples.
pub fn integer_certificate_check(
    rho: &LElement,
    ctx: &ScaffoldContext<'_>,
) -> Result<CertificateReport> {
    let action = ctx.action;
    let ext = action.ext();
    let b = ext.b();
    let v = l_valuation(rho, ext);
    if v != Valuation::Finite(b) {
        return Err(Error::ValuationMismatch {
            expected: b.to_string(),
            found: v.to_string(),
        });
    }
    let pn = ext.degree();
    let entries: Vec<CertificateEntry> = (0..pn)
        .map(|j| {
            let digits: PadicDigits = padic_digits(j as i64, ext.n(), ext.p())?;
            let z = action.dual().z_monomial(&digits)?;
            let image = action.act(z, rho);
            Ok(CertificateEntry {
                digits: digits.digits().to_vec(),
                j,
                valuation: l_valuation(&image, ext),
                expected: b * (1 + j as i64),
            })
        })
        .collect::<Result<_>>()?;
    let valuations_match = entries
        .iter()
        .all(|e| e.valuation == Valuation::Finite(e.expected));
    let residues: BTreeSet<i64> = entries
        .iter()
        .filter_map(|e| e.valuation.finite())
        .map(|v| v.rem_euclid(pn as i64))
        .collect();
    Ok(CertificateReport {
        entries,
        valuations_match,
        complete_residues: residues.len() == pn,
    })
}
