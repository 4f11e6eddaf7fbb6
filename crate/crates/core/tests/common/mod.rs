//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use hopf_scaffold::arith::{Fp, LaurentPoly};
use hopf_scaffold::field::{ExtensionParams, LElement};
use hopf_scaffold::hopf::HopfParams;
use rand::Rng;

/// Pascal's triangle mod p up to row `n`.
pub fn pascal(n: usize, p: u32) -> Vec<Vec<u32>> {
    let mut rows: Vec<Vec<u32>> = vec![vec![1]];
    for k in 1..=n {
        let prev = &rows[k - 1];
        let mut row = vec![1; k + 1];
        for j in 1..k {
            row[j] = (prev[j - 1] + prev[j]) % p;
        }
        rows.push(row);
    }
    rows
}

fn multinomial(parts: &[usize], table: &[Vec<u32>], p: u32) -> u32 {
    let mut total = 0;
    let mut acc = 1u64;
    for &k in parts {
        total += k;
        acc = acc * table[total][k] as u64 % p as u64;
    }
    acc as u32
}

fn inverse_by_search(a: u64, p: u32) -> u64 {
    (1..p as u64)
        .find(|x| a * x % p as u64 == 1)
        .expect("unit mod p")
}

/// `1/(j!(p-j)!)` mod p.
pub fn cross_coefficient(j: u32, p: u32) -> u32 {
    let fact = |m: u32| (1..=m as u64).fold(1u64, |acc, k| acc * k % p as u64);
    inverse_by_search(fact(j) * fact(p - j) % p as u64, p) as u32
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Expansion of `(u + v + f Σ_ℓ c_ℓ u^{p^r ℓ} v^{p^r (p-ℓ)})^i` as
/// `(u exponent, v exponent, f exponent) -> coefficient mod p`, with no
/// truncation applied.
pub fn power_expansion(p: u32, r: u32, i: usize) -> BTreeMap<(usize, usize, usize), u32> {
    let table = pascal(i.max(1), p);
    let pr = (p as usize).pow(r);
    let cross: Vec<u32> = (1..p).map(|j| cross_coefficient(j, p)).collect();
    let mut out = BTreeMap::new();
    for i3 in 0..=i {
        for i1 in 0..=(i - i3) {
            let i2 = i - i3 - i1;
            let outer = multinomial(&[i1, i2, i3], &table, p);
            if outer == 0 {
                continue;
            }
            for split in compositions(i3, p as usize - 1) {
                let mut coeff = outer as u64 * multinomial(&split, &table, p) as u64 % p as u64;
                let mut l1 = 0;
                let mut l2 = 0;
                for (idx, &k) in split.iter().enumerate() {
                    let j = idx + 1;
                    l1 += j * k;
                    l2 += (p as usize - j) * k;
                    for _ in 0..k {
                        coeff = coeff * cross[idx] as u64 % p as u64;
                    }
                }
                if coeff == 0 {
                    continue;
                }
                let key = (i1 + pr * l1, i2 + pr * l2, i3);
                let slot = out.entry(key).or_insert(0u32);
                *slot = ((*slot as u64 + coeff) % p as u64) as u32;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `Δ(t^i)` as a dense `p^n × p^n` table, truncated at `t^{p^n} = 0`.
pub fn delta_oracle(hp: &HopfParams, i: usize) -> Vec<Vec<LaurentPoly>> {
    let (p, dim) = (hp.p(), hp.dim());
    let mut out = vec![vec![LaurentPoly::zero(p); dim]; dim];
    for ((a, b, k), c) in power_expansion(p, hp.r(), i) {
        if a < dim && b < dim {
            let term = hp.f().pow(k as u64).scale(Fp::new(c as i64, p).unwrap());
            out[a][b] = &out[a][b] + &term;
        }
    }
    out
}

/// Components of `α(x^i)`: `u = x` reduced with `x^{p^n} = β`, `v = t` truncated.
pub fn coaction_oracle(ext: &ExtensionParams, hp: &HopfParams, i: usize) -> Vec<LElement> {
    let (p, dim) = (hp.p(), hp.dim());
    let mut out = vec![LElement::zero(ext); dim];
    for ((a, b, k), c) in power_expansion(p, hp.r(), i) {
        if b < dim {
            let coeff = hp.f().pow(k as u64).scale(Fp::new(c as i64, p).unwrap());
            out[b] = out[b].add(&LElement::monomial(coeff, a, ext));
        }
    }
    out
}

/// Rank of an `F_p` matrix by Gaussian elimination.
pub fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !m[r][c].is_multiple_of(p)) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = inverse_by_search(m[rank][c] % p, p as u32);
        for r in 0..rows {
            if r != rank && !m[r][c].is_multiple_of(p) {
                let factor = m[r][c] * inv % p;
                let pivot_row = m[rank].clone();
                for (dst, src) in m[r].iter_mut().zip(&pivot_row) {
                    *dst = (*dst + p - factor * src % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Largest rank over the specialisations `T = c`, `c ∈ F_p^×`; a lower
/// bound for the rank over `F_p(T)`.
pub fn specialised_rank(rows: &[Vec<LaurentPoly>], p: u32) -> usize {
    (1..p)
        .map(|c| {
            let at = Fp::new(c as i64, p).unwrap();
            let m = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| e.evaluate(at).unwrap().value() as u64)
                        .collect()
                })
                .collect();
            rank_mod_p(m, p as u64)
        })
        .max()
        .unwrap_or(0)
}

pub fn random_laurent<R: Rng>(rng: &mut R, p: u32, lo: i64, hi: i64, terms: usize) -> LaurentPoly {
    let pairs: Vec<(i64, i64)> = (0..terms)
        .map(|_| (rng.gen_range(lo..=hi), rng.gen_range(0..p as i64)))
        .collect();
    LaurentPoly::from_terms(pairs, p)
}

/// Random element of `L` with coefficient exponents in `[lo, hi]`.
pub fn random_l<R: Rng>(rng: &mut R, ext: &ExtensionParams, lo: i64, hi: i64) -> LElement {
    let coeffs = (0..ext.degree())
        .map(|_| {
            if rng.gen_bool(0.5) {
                random_laurent(rng, ext.p(), lo, hi, 2)
            } else {
                LaurentPoly::zero(ext.p())
            }
        })
        .collect();
    LElement::from_coeffs(coeffs, ext).unwrap()
}

/// Random element of `P_L^h`: a sum of monomials `c T^e x^i` each of
/// valuation at least `h`.
pub fn random_in_ideal<R: Rng>(
    rng: &mut R,
    ext: &ExtensionParams,
    h: i64,
    terms: usize,
) -> LElement {
    let pn = ext.degree() as i64;
    let mut y = LElement::zero(ext);
    for _ in 0..terms {
        let i = rng.gen_range(0..pn);
        // least e with pn e - b i >= h, plus a small random excess
        let need = h + ext.b() * i;
        let e = need.div_euclid(pn) + i64::from(need.rem_euclid(pn) != 0) + rng.gen_range(0..3);
        let c = rng.gen_range(1..ext.p() as i64);
        y = y.add(&LElement::monomial(
            LaurentPoly::monomial(c, e, ext.p()),
            i as usize,
            ext,
        ));
    }
    y
}
