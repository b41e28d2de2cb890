//! Laurent polynomials in `α = a^(1/2)` with rational-function coefficients in `x`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::half::HalfInt;
use super::laurent::LaurentX;
use super::rat::Rat;
use super::ratfunc::RatFuncX;
use super::AlgebraError;

/// `coeff · α^alpha · x^x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: Rat,
    pub alpha: i64,
    pub x: i64,
}

impl Monomial {
    pub fn new(coeff: Rat, alpha: i64, x: i64) -> Self {
        Monomial { coeff, alpha, x }
    }

    /// `α^alpha · x^x`.
    pub fn unit(alpha: i64, x: i64) -> Self {
        Monomial { coeff: Rat::one(), alpha, x }
    }

    pub fn to_poly(&self) -> LinkPoly {
        LinkPoly::monomial(self.alpha, self.x, self.coeff.clone())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LinkPoly {
    terms: BTreeMap<i64, RatFuncX>,
}

impl LinkPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ratfunc(RatFuncX::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_ratfunc(RatFuncX::constant(c))
    }

    pub fn from_ratfunc(f: RatFuncX) -> Self {
        Self::from_slices([(0, f)])
    }

    pub fn from_laurent(p: LaurentX) -> Self {
        Self::from_ratfunc(RatFuncX::from_laurent(p))
    }

    /// `c · α^alpha · x^x`.
    pub fn monomial(alpha: i64, x: i64, c: Rat) -> Self {
        Self::from_slices([(alpha, RatFuncX::from_laurent(LaurentX::monomial(x, c)))])
    }

    /// Sums the given `(α-exponent, coefficient)` pairs.
    pub fn from_slices<I: IntoIterator<Item = (i64, RatFuncX)>>(slices: I) -> Self {
        let mut p = LinkPoly::zero();
        for (e, f) in slices {
            p.add_slice(e, &f);
        }
        p
    }

    fn add_slice(&mut self, e: i64, f: &RatFuncX) {
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            None => {
                self.terms.insert(e, f.clone());
            }
            Some(g) => {
                let s = &*g + f;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *g = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|f| f.is_one())
    }

    /// Coefficient slices in ascending `α`-exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &RatFuncX)> + '_ {
        self.terms.iter().map(|(e, f)| (*e, f))
    }

    pub fn coeff(&self, alpha: i64) -> RatFuncX {
        self.terms.get(&alpha).cloned().unwrap_or_default()
    }

    pub fn num_slices(&self) -> usize {
        self.terms.len()
    }

    /// The `α^0` coefficient if nothing else is present.
    pub fn as_ratfunc(&self) -> Option<RatFuncX> {
        match self.terms.len() {
            0 => Some(RatFuncX::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.mul_monomial(0, 0, c)
    }

    /// Multiplies by `c · α^alpha · x^x`.
    pub fn mul_monomial(&self, alpha: i64, x: i64, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinkPoly {
            terms: self.terms.iter().map(|(e, f)| (e + alpha, f.mul_monomial(x, c))).collect(),
        }
    }

    pub fn mul_ratfunc(&self, g: &RatFuncX) -> Self {
        if g.is_zero() {
            return Self::zero();
        }
        LinkPoly { terms: self.terms.iter().map(|(e, f)| (*e, f * g)).collect() }
    }

    pub fn div_ratfunc(&self, g: &RatFuncX) -> Result<Self, AlgebraError> {
        let inv = g.inv()?;
        Ok(self.mul_ratfunc(&inv))
    }

    /// Exact division by a divisor with a single `α`-slice.
    pub fn checked_div(&self, rhs: &LinkPoly) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::ZeroDivisor);
        }
        if rhs.terms.len() != 1 {
            return Err(AlgebraError::NotDivisible);
        }
        let (&e, g) = rhs.terms.iter().next().unwrap();
        Ok(self.div_ratfunc(g)?.mul_monomial(-e, 0, &Rat::one()))
    }

    /// Substitutes `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        LinkPoly { terms: self.terms.iter().map(|(e, f)| (*e, f.invert_x())).collect() }
    }

    /// Substitutes `a -> a^-1`.
    pub fn invert_a(&self) -> Self {
        LinkPoly { terms: self.terms.iter().map(|(e, f)| (-e, f.clone())).collect() }
    }

    /// Substitutes `α -> α^p · x^s`.
    pub fn substitute_alpha(&self, p: i64, s: i64) -> Self {
        let one = Rat::one();
        let mut acc = LinkSum::new();
        for (e, f) in self.terms() {
            acc.add_ratfunc(e * p, &f.mul_monomial(e * s, &one));
        }
        acc.finish()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Maximal degree in `a` (half-integer), `None` for zero.
    pub fn maxdeg_a(&self) -> Option<HalfInt> {
        self.terms.keys().next_back().map(|&e| HalfInt::from_twice(e))
    }

    /// Maximal degree in `q` of the expansion at `q → ∞`, `None` for zero.
    pub fn maxdeg_q(&self) -> Option<HalfInt> {
        self.terms.values().filter_map(|f| f.top_degree()).max().map(HalfInt::from_twice)
    }
}

impl fmt::Debug for LinkPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LinkPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::linkpoly_to_string(self))
    }
}

impl Add<&LinkPoly> for &LinkPoly {
    type Output = LinkPoly;
    fn add(self, rhs: &LinkPoly) -> LinkPoly {
        let mut out = self.clone();
        for (e, f) in rhs.terms() {
            out.add_slice(e, f);
        }
        out
    }
}

impl Sub<&LinkPoly> for &LinkPoly {
    type Output = LinkPoly;
    fn sub(self, rhs: &LinkPoly) -> LinkPoly {
        self + &(-rhs)
    }
}

impl Neg for &LinkPoly {
    type Output = LinkPoly;
    fn neg(self) -> LinkPoly {
        LinkPoly { terms: self.terms.iter().map(|(e, f)| (*e, -f)).collect() }
    }
}

impl Neg for LinkPoly {
    type Output = LinkPoly;
    fn neg(self) -> LinkPoly {
        -&self
    }
}

impl Mul<&LinkPoly> for &LinkPoly {
    type Output = LinkPoly;
    fn mul(self, rhs: &LinkPoly) -> LinkPoly {
        let mut acc = LinkSum::new();
        for (e1, f1) in self.terms() {
            for (e2, f2) in rhs.terms() {
                acc.add_ratfunc(e1 + e2, &(f1 * f2));
            }
        }
        acc.finish()
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for LinkPoly {
            type Output = LinkPoly;
            fn $m(self, rhs: LinkPoly) -> LinkPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl From<RatFuncX> for LinkPoly {
    fn from(f: RatFuncX) -> Self {
        LinkPoly::from_ratfunc(f)
    }
}

impl From<LaurentX> for LinkPoly {
    fn from(p: LaurentX) -> Self {
        LinkPoly::from_laurent(p)
    }
}

/// Accumulates many terms, adding numerators over identical denominators
/// before any gcd work is done.
#[derive(Default)]
pub struct LinkSum {
    parts: BTreeMap<i64, HashMap<LaurentX, LaurentX>>,
}

impl LinkSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_ratfunc(&mut self, alpha: i64, f: &RatFuncX) {
        if f.is_zero() {
            return;
        }
        let slot = self.parts.entry(alpha).or_default().entry(f.den().clone()).or_default();
        *slot += f.num();
    }

    pub fn add(&mut self, p: &LinkPoly) {
        for (e, f) in p.terms() {
            self.add_ratfunc(e, f);
        }
    }

    /// Adds `c · α^alpha · x^x · p`.
    pub fn add_scaled(&mut self, p: &LinkPoly, alpha: i64, x: i64, c: &Rat) {
        if c.is_zero() {
            return;
        }
        for (e, f) in p.terms() {
            let slot = self.parts.entry(e + alpha).or_default().entry(f.den().clone()).or_default();
            *slot += &f.num().shift(x).scale(c);
        }
    }

    pub fn merge(&mut self, other: LinkSum) {
        for (e, m) in other.parts {
            let mine = self.parts.entry(e).or_default();
            for (den, num) in m {
                *mine.entry(den).or_default() += &num;
            }
        }
    }

    pub fn finish(self) -> LinkPoly {
        let mut out = LinkPoly::zero();
        for (e, m) in self.parts {
            let mut fs: Vec<RatFuncX> = m
                .into_iter()
                .filter(|(_, n)| !n.is_zero())
                .map(|(d, n)| RatFuncX::new(n, d).expect("nonzero denominator"))
                .collect();
            // pairwise reduction keeps intermediate denominators balanced
            while fs.len() > 1 {
                let mut next = Vec::with_capacity(fs.len().div_ceil(2));
                let mut it = fs.into_iter();
                while let Some(a) = it.next() {
                    match it.next() {
                        Some(b) => next.push(&a + &b),
                        None => next.push(a),
                    }
                }
                fs = next;
            }
            if let Some(f) = fs.pop() {
                if !f.is_zero() {
                    out.terms.insert(e, f);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;

    fn unknot() -> LinkPoly {
        // (α − α^-1)/(x − x^-1)
        let num = &LinkPoly::monomial(1, 0, int(1)) - &LinkPoly::monomial(-1, 0, int(1));
        num.div_ratfunc(&RatFuncX::from_laurent(LaurentX::from_ints(-1, &[-1, 0, 1]))).unwrap()
    }

    #[test]
    fn degrees_of_unknot() {
        let u = unknot();
        assert_eq!(u.maxdeg_a(), Some(HalfInt::from_twice(1)));
        assert_eq!(u.maxdeg_q(), Some(HalfInt::from_twice(-1)));
        assert_eq!(LinkPoly::zero().maxdeg_q(), None);
    }

    #[test]
    fn substitution_roundtrip() {
        let u = unknot();
        assert_eq!(u.invert_a().invert_a(), u);
        assert_eq!(u.invert_q().invert_q(), u);
        assert_eq!(u.invert_q(), -&u);
    }

    #[test]
    fn linksum_matches_direct_sum() {
        let u = unknot();
        let v = &u * &u;
        let mut s = LinkSum::new();
        s.add(&u);
        s.add(&v);
        s.add_scaled(&u, 2, -1, &int(3));
        let direct = &(&u + &v) + &u.mul_monomial(2, -1, &int(3));
        assert_eq!(s.finish(), direct);
    }
}
