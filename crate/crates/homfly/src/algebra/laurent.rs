//! Laurent polynomials in `x = q^(1/2)` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{int, Rat};
use super::zpoly::{self, ZPoly};

/// A finite sum `Σ c_n x^n`, stored densely from the lowest nonzero exponent.
///
/// The first and last stored coefficients are nonzero; the zero polynomial has
/// no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentX {
    low: i64,
    coeffs: Vec<Rat>,
}

impl LaurentX {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, c: Rat) -> Self {
        Self::from_dense(exp, vec![c])
    }

    /// `x^exp`.
    pub fn x_pow(exp: i64) -> Self {
        Self::monomial(exp, Rat::one())
    }

    /// `q^exp`, i.e. `x^(2 exp)`.
    pub fn q_pow(exp: i64) -> Self {
        Self::x_pow(2 * exp)
    }

    /// Builds `Σ coeffs[i] x^(low + i)`.
    pub fn from_dense(low: i64, coeffs: Vec<Rat>) -> Self {
        let mut p = LaurentX { low, coeffs };
        p.normalize();
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(terms: I) -> Self {
        let terms: Vec<(i64, Rat)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Rat::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    /// Integer coefficients, lowest exponent first.
    pub fn from_ints(low: i64, coeffs: &[i64]) -> Self {
        Self::from_dense(low, coeffs.iter().map(|&c| int(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    pub fn low_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        let i = exp - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            Rat::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn trailing_coeff(&self) -> Option<&Rat> {
        self.coeffs.first()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rat)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentX { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentX { low: self.low, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Substitutes `x -> x^-1`.
    pub fn invert_x(&self) -> Self {
        match self.high_exp() {
            None => Self::zero(),
            Some(h) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentX { low: -h, coeffs }
            }
        }
    }

    /// Substitutes `x -> x^k` for `k != 0`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitute_power needs a nonzero exponent");
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Writes `self = c · x^low · P(x)` with `P` a primitive integer polynomial
    /// with positive leading coefficient. Returns `(c, low, P)`.
    pub(crate) fn split_content(&self) -> (Rat, i64, ZPoly) {
        if self.is_zero() {
            return (Rat::zero(), 0, Vec::new());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: ZPoly = self.coeffs.iter().map(|c| (c * &den).to_integer()).collect();
        let mut g = zpoly::content(&ints);
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Rat::new(g, den), self.low, prim)
    }

    pub(crate) fn from_zpoly(low: i64, p: &[BigInt], scale: &Rat) -> Self {
        Self::from_dense(low, p.iter().map(|c| Rat::from_integer(c.clone()) * scale).collect())
    }

    fn add_scaled(&mut self, other: &LaurentX, sign: bool) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = if sign { other.clone() } else { -other };
            return;
        }
        let lo = self.low.min(other.low);
        let hi = self.high_exp().unwrap().max(other.high_exp().unwrap());
        if lo < self.low {
            let pad = (self.low - lo) as usize;
            let mut v = vec![Rat::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = lo;
        }
        let len = (hi - lo + 1) as usize;
        self.coeffs.resize(len, Rat::zero());
        let off = (other.low - lo) as usize;
        for (i, c) in other.coeffs.iter().enumerate() {
            if sign {
                self.coeffs[off + i] += c;
            } else {
                self.coeffs[off + i] -= c;
            }
        }
        self.normalize();
    }
}

impl fmt::Debug for LaurentX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::laurent_to_string(self, "q"))
    }
}

impl Neg for LaurentX {
    type Output = LaurentX;
    fn neg(mut self) -> LaurentX {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentX {
    type Output = LaurentX;
    fn neg(self) -> LaurentX {
        -self.clone()
    }
}

impl AddAssign<&LaurentX> for LaurentX {
    fn add_assign(&mut self, rhs: &LaurentX) {
        self.add_scaled(rhs, true);
    }
}

impl SubAssign<&LaurentX> for LaurentX {
    fn sub_assign(&mut self, rhs: &LaurentX) {
        self.add_scaled(rhs, false);
    }
}

impl Add<&LaurentX> for &LaurentX {
    type Output = LaurentX;
    fn add(self, rhs: &LaurentX) -> LaurentX {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentX> for &LaurentX {
    type Output = LaurentX;
    fn sub(self, rhs: &LaurentX) -> LaurentX {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for LaurentX {
    type Output = LaurentX;
    fn add(mut self, rhs: LaurentX) -> LaurentX {
        self += &rhs;
        self
    }
}

impl Sub for LaurentX {
    type Output = LaurentX;
    fn sub(mut self, rhs: LaurentX) -> LaurentX {
        self -= &rhs;
        self
    }
}

impl Mul<&LaurentX> for &LaurentX {
    type Output = LaurentX;
    fn mul(self, rhs: &LaurentX) -> LaurentX {
        if self.is_zero() || rhs.is_zero() {
            return LaurentX::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentX::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentX {
    type Output = LaurentX;
    fn mul(self, rhs: LaurentX) -> LaurentX {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let a = LaurentX::from_ints(-1, &[-1, 0, 1]);
        let b = LaurentX::from_ints(-1, &[1, 0, 1]);
        assert_eq!(&a * &b, LaurentX::from_ints(-2, &[-1, 0, 0, 0, 1]));
    }

    #[test]
    fn cancellation_resets() {
        let a = LaurentX::from_ints(3, &[1, 2]);
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).low_exp(), None);
    }

    #[test]
    fn invert_and_power() {
        let a = LaurentX::from_ints(1, &[1, 0, 3]);
        assert_eq!(a.invert_x(), LaurentX::from_ints(-3, &[3, 0, 1]));
        assert_eq!(a.substitute_power(-2), LaurentX::from_terms([(-2, int(1)), (-6, int(3))]));
    }

    #[test]
    fn content_split() {
        let a = LaurentX::from_dense(-2, vec![super::super::rat::frac(-1, 2), int(0), int(-3)]);
        let (c, low, p) = a.split_content();
        assert_eq!(LaurentX::from_zpoly(low, &p, &c), a);
        assert!(p.last().unwrap().is_positive());
    }
}
