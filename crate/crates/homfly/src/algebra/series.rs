//! Expansions at `q → ∞` and q-Pochhammer products.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::half::HalfInt;
use super::laurent::LaurentX;
use super::linkpoly::{LinkPoly, Monomial};
use super::rat::Rat;
use super::ratfunc::RatFuncX;
use super::AlgebraError;

/// Truncated expansion `Σ_j c_j(a) q^(d − j)` at `q → ∞`.
///
/// Internally the slices advance in steps of `q^(-1/2)`; `coeff(j)` returns the
/// `q`-step slice `j` and `half_step_coeff(j)` the slice half a step below it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    order: usize,
    lead_x: Option<i64>,
    slices: Vec<LinkPoly>,
}

/// Coefficients of `x^(top - k)` for `k = 0..n` in the expansion of `f`.
fn expand_at_infinity(f: &RatFuncX, n: usize) -> Vec<Rat> {
    let num = f.num();
    let den = f.den();
    let (nh, dh) = match (num.high_exp(), den.high_exp()) {
        (Some(a), Some(b)) => (a, b),
        _ => return vec![Rat::zero(); n],
    };
    let d0 = den.coeff(dh);
    let mut out: Vec<Rat> = Vec::with_capacity(n);
    for k in 0..n {
        let mut s = num.coeff(nh - k as i64);
        let dspan = (dh - den.low_exp().unwrap()) as usize;
        for j in 1..=k.min(dspan) {
            let dj = den.coeff(dh - j as i64);
            if !dj.is_zero() {
                s -= dj * &out[k - j];
            }
        }
        out.push(s / &d0);
    }
    out
}

fn slices_from_maps(maps: Vec<BTreeMap<i64, Rat>>) -> Vec<LinkPoly> {
    maps.into_iter()
        .map(|m| LinkPoly::from_slices(m.into_iter().map(|(e, c)| (e, RatFuncX::constant(c)))))
        .collect()
}

/// Expands every coefficient of `p` as a Laurent series in `q^(-1/2)` and keeps
/// `order` steps of `q^(-1)` starting at the leading degree.
pub fn series_at_q_infinity(p: &LinkPoly, order: usize) -> QSeries {
    assert!(order >= 1, "series order must be at least 1");
    let lead_x = p.terms().filter_map(|(_, f)| f.top_degree()).max();
    let Some(lead) = lead_x else {
        return QSeries { order, lead_x: None, slices: Vec::new() };
    };
    let width = 2 * order - 1;
    let lowest = lead - (width as i64 - 1);
    let mut maps: Vec<BTreeMap<i64, Rat>> = vec![BTreeMap::new(); width];
    for (e, f) in p.terms() {
        let top = f.top_degree().unwrap();
        if top < lowest {
            continue;
        }
        let n = (top - lowest + 1) as usize;
        for (k, c) in expand_at_infinity(f, n).into_iter().enumerate() {
            if !c.is_zero() {
                let slot = (lead - (top - k as i64)) as usize;
                maps[slot].insert(e, c);
            }
        }
    }
    QSeries { order, lead_x, slices: slices_from_maps(maps) }
}

impl QSeries {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.lead_x.is_none()
    }

    /// The `q`-degree `d` of the leading slice.
    pub fn leading_q_degree(&self) -> Option<HalfInt> {
        self.lead_x.map(HalfInt::from_twice)
    }

    /// Coefficient of `q^(d − j)`.
    pub fn coeff(&self, j: usize) -> LinkPoly {
        self.slices.get(2 * j).cloned().unwrap_or_default()
    }

    /// Coefficient of `q^(d − j − 1/2)`.
    pub fn half_step_coeff(&self, j: usize) -> LinkPoly {
        self.slices.get(2 * j + 1).cloned().unwrap_or_default()
    }

    /// The `order` slices at whole `q`-steps from the leading degree.
    pub fn coeffs(&self) -> Vec<LinkPoly> {
        if self.is_zero() {
            return Vec::new();
        }
        (0..self.order).map(|j| self.coeff(j)).collect()
    }

    /// Whether any retained term sits half a `q`-step off the leading grid.
    pub fn has_half_steps(&self) -> bool {
        self.slices.iter().skip(1).step_by(2).any(|s| !s.is_zero())
    }

    pub fn truncate(&self, order: usize) -> QSeries {
        let order = order.min(self.order).max(1);
        let mut slices = self.slices.clone();
        slices.truncate(2 * order - 1);
        QSeries { order, lead_x: self.lead_x, slices }
    }

    /// Multiplies by `c · α^alpha` (a `q`-free monomial) leaving degrees in `q` unchanged.
    pub fn scale_alpha(&self, alpha: i64, c: &Rat) -> QSeries {
        if c.is_zero() {
            return QSeries { order: self.order, lead_x: None, slices: Vec::new() };
        }
        QSeries {
            order: self.order,
            lead_x: self.lead_x,
            slices: self.slices.iter().map(|s| s.mul_monomial(alpha, 0, c)).collect(),
        }
    }

    /// The sum of retained terms as a polynomial.
    pub fn to_linkpoly(&self) -> LinkPoly {
        let Some(lead) = self.lead_x else { return LinkPoly::zero() };
        let mut acc = LinkPoly::zero();
        for (k, s) in self.slices.iter().enumerate() {
            acc = &acc + &s.mul_monomial(0, lead - k as i64, &Rat::one());
        }
        acc
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let order = self.order.min(other.order);
        let (Some(l1), Some(l2)) = (self.lead_x, other.lead_x) else {
            return QSeries { order, lead_x: None, slices: Vec::new() };
        };
        let width = 2 * order - 1;
        let mut slices = vec![LinkPoly::zero(); width];
        for (i, a) in self.slices.iter().enumerate().take(width) {
            for (j, b) in other.slices.iter().enumerate().take(width - i) {
                slices[i + j] = &slices[i + j] + &(a * b);
            }
        }
        Self::renormalize(order, l1 + l2, slices)
    }

    /// Division by a series whose leading slice is a single `α`-monomial with a
    /// constant coefficient.
    pub fn div(&self, other: &QSeries) -> Result<QSeries, AlgebraError> {
        let order = self.order.min(other.order);
        let Some(l2) = other.lead_x else { return Err(AlgebraError::ZeroDivisor) };
        let lead_slice = &other.slices[0];
        let unit = lead_slice.num_slices() == 1
            && lead_slice.terms().next().unwrap().1.as_constant().is_some();
        if !unit {
            return Err(AlgebraError::NotDivisible);
        }
        let Some(l1) = self.lead_x else {
            return Ok(QSeries { order, lead_x: None, slices: Vec::new() });
        };
        let width = 2 * order - 1;
        let mut out: Vec<LinkPoly> = Vec::with_capacity(width);
        for k in 0..width {
            let mut s = self.slices.get(k).cloned().unwrap_or_default();
            for j in 1..=k {
                if let Some(b) = other.slices.get(j) {
                    s = &s - &(b * &out[k - j]);
                }
            }
            out.push(s.checked_div(lead_slice)?);
        }
        Ok(Self::renormalize(order, l1 - l2, out))
    }

    fn renormalize(order: usize, lead: i64, mut slices: Vec<LinkPoly>) -> QSeries {
        let skip = slices.iter().take_while(|s| s.is_zero()).count();
        if skip == slices.len() {
            return QSeries { order, lead_x: None, slices: Vec::new() };
        }
        // cancellation at the top loses precision at the bottom
        slices.drain(..skip);
        let keep = slices.len();
        let order = order.min(keep.div_ceil(2)).max(1);
        slices.truncate(2 * order - 1);
        QSeries { order, lead_x: Some(lead - skip as i64), slices }
    }
}

/// `∏_{i=0}^{k-1} (1 − base · x^(i·step_x))`.
pub fn pochhammer_finite(base: &Monomial, step_x: i64, k: u32) -> LinkPoly {
    let mut acc = LinkPoly::one();
    for i in 0..k as i64 {
        let factor = &LinkPoly::one()
            - &LinkPoly::monomial(base.alpha, base.x + i * step_x, base.coeff.clone());
        acc = &acc * &factor;
    }
    acc
}

/// `(base; q^(step_x/2))_∞` truncated to `order` slices in `q^(-1)`.
pub fn pochhammer_series(base: &Monomial, step_x: i64, order: usize) -> Result<QSeries, AlgebraError> {
    if step_x >= 0 {
        return Err(AlgebraError::DivergentProduct);
    }
    let floor = -(2 * order as i64 - 1);
    let mut k = 0u32;
    while base.x + k as i64 * step_x >= floor {
        k += 1;
    }
    Ok(series_at_q_infinity(&pochhammer_finite(base, step_x, k), order))
}

pub enum PochLength {
    Finite(u32),
    Infinite { order: usize },
}

pub enum PochValue {
    Poly(LinkPoly),
    Series(QSeries),
}

pub fn pochhammer(base: &Monomial, step_x: i64, k: PochLength) -> Result<PochValue, AlgebraError> {
    match k {
        PochLength::Finite(n) => Ok(PochValue::Poly(pochhammer_finite(base, step_x, n))),
        PochLength::Infinite { order } => pochhammer_series(base, step_x, order).map(PochValue::Series),
    }
}

/// `(1 − q^k)` as a Laurent polynomial.
pub fn one_minus_q(k: i64) -> LaurentX {
    &LaurentX::one() - &LaurentX::q_pow(k)
}
