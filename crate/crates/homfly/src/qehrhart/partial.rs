//! From rational generating functions `Σ_N W_N z^N` to `E(a, b, q)`.
//!
//! For `F = ∏_e (1 − q^e z)^{-m_e}` write `F = Σ_{e,i} C_{i,e}(q) (1 − q^e z)^{-i}`;
//! then `[z^N] F = Σ C_{i,e} binom(N+i−1, i−1) q^{eN}`. A numerator term `z^h`
//! shifts `N` by `h`, which in the binomial basis becomes
//! `binom(b−h+i−1, i−1) = Σ_t (−1)^t binom(h, t) binom(b+i−t−1, i−t−1)`.

use std::collections::{BTreeMap, HashMap};

use num_traits::One;

use super::ehrhart::EhrhartPoly;
use crate::algebra::{binomial, int, one_minus_q, LaurentX, Rat, RatFuncX};

/// One summand `Σ_h numerator[h](q) z^h / ∏_{e ∈ poles} (1 − q^e z)`.
#[derive(Clone, Debug)]
pub struct GfPart {
    pub numerator: Vec<(u32, LaurentX)>,
    pub poles: Vec<i64>,
}

/// Partial-fraction coefficients `C_{i,e}` for `i = 1..=m_e`, per distinct pole.
fn pole_coefficients(poles: &BTreeMap<i64, u32>) -> Vec<(i64, Vec<RatFuncX>)> {
    let mut out = Vec::with_capacity(poles.len());
    for (&e, &m) in poles {
        if m == 1 {
            let mut den = LaurentX::one();
            for (&f, &mf) in poles {
                if f != e {
                    den = &den * &one_minus_q(f - e).pow(mf);
                }
            }
            out.push((e, vec![RatFuncX::new(LaurentX::one(), den).unwrap()]));
            continue;
        }
        // Taylor coefficients h_0..h_{m-1} of H(t) = ∏_{f≠e} ((1−c) + c t)^{-m_f}, c = q^{f−e}
        let mut h: Vec<RatFuncX> = vec![RatFuncX::zero(); m as usize];
        h[0] = RatFuncX::one();
        for (&f, &mf) in poles {
            if f == e {
                continue;
            }
            let omc = one_minus_q(f - e);
            let factor: Vec<RatFuncX> = (0..m)
                .map(|k| {
                    let c = binomial((mf + k) as i64 - 1, k) * int(if k % 2 == 0 { 1 } else { -1 });
                    let num = LaurentX::monomial(2 * (f - e) * k as i64, c);
                    RatFuncX::new(num, omc.pow(mf + k)).unwrap()
                })
                .collect();
            let mut next = vec![RatFuncX::zero(); m as usize];
            for (i, a) in h.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in factor.iter().enumerate().take(m as usize - i) {
                    next[i + j] = &next[i + j] + &(a * b);
                }
            }
            h = next;
        }
        // C_{i,e} = h_{m-i}
        let cs = (1..=m).map(|i| h[(m - i) as usize].clone()).collect();
        out.push((e, cs));
    }
    out
}

/// Sums the Ehrhart data of all parts.
pub fn from_generating_function(parts: &[GfPart]) -> EhrhartPoly {
    let mut acc: BTreeMap<(i64, u32), HashMap<LaurentX, LaurentX>> = BTreeMap::new();
    let mut pole_cache: HashMap<Vec<i64>, Vec<(i64, Vec<RatFuncX>)>> = HashMap::new();
    for part in parts {
        let mut key = part.poles.clone();
        key.sort_unstable();
        let coeffs = pole_cache.entry(key.clone()).or_insert_with(|| {
            let mut poles = BTreeMap::new();
            for e in key {
                *poles.entry(e).or_insert(0u32) += 1;
            }
            pole_coefficients(&poles)
        });
        for (h, num) in &part.numerator {
            if num.is_zero() {
                continue;
            }
            for (e, cs) in coeffs.iter() {
                let shifted = num.shift(-2 * e * *h as i64);
                for (idx, c) in cs.iter().enumerate() {
                    let i = idx as u32 + 1;
                    for t in 0..i.min(h + 1) {
                        let sign = if t % 2 == 0 { Rat::one() } else { -Rat::one() };
                        let w = binomial(*h as i64, t) * sign;
                        let slot = acc.entry((*e, i - t)).or_default().entry(c.den().clone()).or_default();
                        *slot += &(&shifted * c.num()).scale(&w);
                    }
                }
            }
        }
    }
    let mut map = BTreeMap::new();
    for (k, parts) in acc {
        let mut total = RatFuncX::zero();
        for (den, num) in parts {
            if !num.is_zero() {
                total = &total + &RatFuncX::new(num, den).unwrap();
            }
        }
        map.insert(k, total);
    }
    EhrhartPoly::from_map(map)
}
