//! Exact rationals backed by `num-rational`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use num_rational::BigRational as Rat;

use super::AlgebraError;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat, AlgebraError> {
    let t = s.trim();
    let bad = || AlgebraError::Parse(format!("not a rational number: {s:?}"));
    match t.split_once('/') {
        None => t.parse::<BigInt>().map(Rat::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(AlgebraError::ZeroDivisor);
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Generalized binomial coefficient `n choose k` for any integer `n`.
pub fn binomial(n: i64, k: u32) -> Rat {
    let mut acc = Rat::one();
    for j in 0..k as i64 {
        acc = acc * int(n - j) / int(j + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_negative_upper() {
        assert_eq!(binomial(-1, 0), int(1));
        assert_eq!(binomial(-1, 3), int(-1));
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(2, 5), int(0));
    }

    #[test]
    fn parse_roundtrip() {
        let r = frac(-6, 4);
        assert_eq!(parse_rat(&r.to_string()).unwrap(), r);
        assert_eq!(parse_rat("7").unwrap(), int(7));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
