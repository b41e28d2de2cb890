//! Rational functions in `x` in canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::LaurentX;
use super::rat::Rat;
use super::zpoly;
use super::AlgebraError;

/// `num / den` with `den` a primitive integer polynomial (lowest exponent 0,
/// positive leading coefficient) coprime to `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFuncX {
    num: LaurentX,
    den: LaurentX,
}

impl RatFuncX {
    pub fn zero() -> Self {
        RatFuncX { num: LaurentX::zero(), den: LaurentX::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentX::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_laurent(LaurentX::constant(c))
    }

    pub fn from_laurent(p: LaurentX) -> Self {
        RatFuncX { num: p, den: LaurentX::one() }
    }

    pub fn new(num: LaurentX, den: LaurentX) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (cn, ln, pn) = num.split_content();
        let (cd, ld, pd) = den.split_content();
        let scale = cn / cd;
        let g = zpoly::gcd(&pn, &pd);
        let (pn, pd) = if g.len() > 1 {
            (zpoly::div_exact(&pn, &g), zpoly::div_exact(&pd, &g))
        } else {
            (pn, pd)
        };
        Ok(RatFuncX {
            num: LaurentX::from_zpoly(ln - ld, &pn, &scale),
            den: LaurentX::from_zpoly(0, &pd, &Rat::one()),
        })
    }

    pub fn num(&self) -> &LaurentX {
        &self.num
    }

    pub fn den(&self) -> &LaurentX {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this equals, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentX> {
        self.den.is_one().then_some(&self.num)
    }

    /// Constant value, if this is a constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// `deg_x num − deg_x den`, i.e. the exponent of the leading term at `x → ∞`.
    pub fn top_degree(&self) -> Option<i64> {
        Some(self.num.high_exp()? - self.den.high_exp().unwrap())
    }

    /// Leading coefficient of the expansion at `x → ∞`.
    pub fn top_coeff(&self) -> Option<Rat> {
        Some(self.num.leading_coeff()? / self.den.leading_coeff().unwrap())
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Substitutes `x -> x^-1`.
    pub fn invert_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.invert_x(), self.den.invert_x()).expect("nonzero denominator")
    }

    /// Substitutes `x -> x^k`, `k != 0`.
    pub fn substitute_power(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.substitute_power(k), self.den.substitute_power(k))
            .expect("nonzero denominator")
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFuncX { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Multiplies by `c · x^k`.
    pub fn mul_monomial(&self, k: i64, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFuncX { num: self.num.shift(k).scale(c), den: self.den.clone() }
    }

    pub fn mul_laurent(&self, p: &LaurentX) -> Self {
        if p.is_monomial() {
            let (k, c) = p.terms().next().unwrap();
            return self.mul_monomial(k, c);
        }
        Self::new(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn checked_div(&self, rhs: &RatFuncX) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::ZeroDivisor);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Default for RatFuncX {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentX> for RatFuncX {
    fn from(p: LaurentX) -> Self {
        Self::from_laurent(p)
    }
}

impl fmt::Debug for RatFuncX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RatFuncX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::ratfunc_to_string(self))
    }
}

fn add_impl(a: &RatFuncX, b: &RatFuncX, negate: bool) -> RatFuncX {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate { -b } else { b.clone() };
    }
    let rhs_num = if negate { -&b.num } else { b.num.clone() };
    if a.den == b.den {
        return RatFuncX::new(&a.num + &rhs_num, a.den.clone()).unwrap();
    }
    let (_, _, da) = a.den.split_content();
    let (_, _, db) = b.den.split_content();
    let g = zpoly::gcd(&da, &db);
    let one = Rat::one();
    let (fa, fb) = if g.len() > 1 {
        (
            LaurentX::from_zpoly(0, &zpoly::div_exact(&db, &g), &one),
            LaurentX::from_zpoly(0, &zpoly::div_exact(&da, &g), &one),
        )
    } else {
        (b.den.clone(), a.den.clone())
    };
    let num = &(&a.num * &fa) + &(&rhs_num * &fb);
    RatFuncX::new(num, &a.den * &fa).unwrap()
}

impl Add<&RatFuncX> for &RatFuncX {
    type Output = RatFuncX;
    fn add(self, rhs: &RatFuncX) -> RatFuncX {
        add_impl(self, rhs, false)
    }
}

impl Sub<&RatFuncX> for &RatFuncX {
    type Output = RatFuncX;
    fn sub(self, rhs: &RatFuncX) -> RatFuncX {
        add_impl(self, rhs, true)
    }
}

impl Mul<&RatFuncX> for &RatFuncX {
    type Output = RatFuncX;
    fn mul(self, rhs: &RatFuncX) -> RatFuncX {
        if self.is_zero() || rhs.is_zero() {
            return RatFuncX::zero();
        }
        if rhs.den.is_one() && rhs.num.is_monomial() {
            let (k, c) = rhs.num.terms().next().unwrap();
            return self.mul_monomial(k, c);
        }
        if self.den.is_one() && self.num.is_monomial() {
            let (k, c) = self.num.terms().next().unwrap();
            return rhs.mul_monomial(k, c);
        }
        RatFuncX::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

/// Panics on division by zero; use [`RatFuncX::checked_div`] to get an error instead.
impl Div<&RatFuncX> for &RatFuncX {
    type Output = RatFuncX;
    fn div(self, rhs: &RatFuncX) -> RatFuncX {
        self.checked_div(rhs).expect("zero divisor")
    }
}

impl Neg for &RatFuncX {
    type Output = RatFuncX;
    fn neg(self) -> RatFuncX {
        RatFuncX { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFuncX {
    type Output = RatFuncX;
    fn neg(self) -> RatFuncX {
        RatFuncX { num: -self.num, den: self.den }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFuncX {
            type Output = RatFuncX;
            fn $m(self, rhs: RatFuncX) -> RatFuncX {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Zero for RatFuncX {
    fn zero() -> Self {
        RatFuncX::zero()
    }
    fn is_zero(&self) -> bool {
        RatFuncX::is_zero(self)
    }
}

impl One for RatFuncX {
    fn one() -> Self {
        RatFuncX::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;

    #[test]
    fn cancels_common_factor() {
        let qm1 = LaurentX::from_ints(0, &[-1, 0, 1]);
        assert!(RatFuncX::new(qm1.clone(), qm1).unwrap().is_one());
    }

    #[test]
    fn canonical_denominator() {
        // x / (2 - 2x^-2) = x^3 / (2x^2 - 2)
        let f = RatFuncX::new(LaurentX::x_pow(1), LaurentX::from_ints(-2, &[-2, 0, 2])).unwrap();
        assert_eq!(f.den(), &LaurentX::from_ints(0, &[-1, 0, 1]));
        assert_eq!(f.num(), &LaurentX::monomial(3, crate::algebra::rat::frac(1, 2)));
    }

    #[test]
    fn zero_divisor() {
        assert_eq!(
            RatFuncX::new(LaurentX::one(), LaurentX::zero()),
            Err(AlgebraError::ZeroDivisor)
        );
        assert!(RatFuncX::one().checked_div(&RatFuncX::zero()).is_err());
    }

    #[test]
    fn sum_over_distinct_denominators() {
        let a = RatFuncX::new(LaurentX::one(), LaurentX::from_ints(0, &[1, -1])).unwrap();
        let b = RatFuncX::new(LaurentX::one(), LaurentX::from_ints(0, &[1, 1])).unwrap();
        let s = &a + &b;
        let expect =
            RatFuncX::new(LaurentX::constant(int(2)), LaurentX::from_ints(0, &[1, 0, -1])).unwrap();
        assert_eq!(s, expect);
        assert_eq!(&s - &b, a);
    }
}
