//! Dense integer polynomials (ascending coefficients), used for exact gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(p: &[BigInt]) -> ZPoly {
    let mut g = content(p);
    if g.is_zero() {
        return Vec::new();
    }
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    p.iter().map(|c| c / &g).collect()
}

fn deg(p: &[BigInt]) -> usize {
    p.len() - 1
}

/// Pseudo-remainder of `a` by `b` (b nonzero).
fn prem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut r: ZPoly = a.to_vec();
    trim(&mut r);
    let db = deg(b);
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Gcd of two integer polynomials, primitive with positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut u = primitive(a);
    let mut v = primitive(b);
    if u.is_empty() {
        return v;
    }
    if v.is_empty() {
        return u;
    }
    if u.len() < v.len() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_empty() {
        if v.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = prem(&u, &v);
        u = v;
        v = primitive(&r);
    }
    u
}

/// Exact quotient `a / b`; panics if the division is not exact over the integers.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut r: ZPoly = a.to_vec();
    trim(&mut r);
    if r.is_empty() {
        return r;
    }
    let db = deg(b);
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); r.len() - db];
    while !r.is_empty() && r.len() > db {
        let shift = r.len() - 1 - db;
        let (c, rem) = r.last().unwrap().div_rem(lb);
        assert!(rem.is_zero(), "inexact polynomial division");
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        q[shift] = c;
        trim(&mut r);
    }
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x - 1)(x + 2) and (x - 1)(3x + 1)
        let a = z(&[-2, 1, 1]);
        let b = z(&[-1, -2, 3]);
        assert_eq!(gcd(&a, &b), z(&[-1, 1]));
        assert_eq!(div_exact(&a, &z(&[-1, 1])), z(&[2, 1]));
    }

    #[test]
    fn coprime_gives_one() {
        assert_eq!(gcd(&z(&[1, 1]), &z(&[-1, 1])), z(&[1]));
    }
}
