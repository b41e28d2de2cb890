//! Plain-text rendering with explicit half-powers.

use num_traits::One;

use super::laurent::LaurentX;
use super::linkpoly::LinkPoly;
use super::rat::Rat;
use super::ratfunc::RatFuncX;

/// `var^(t/2)` written as `var`, `var^2`, `var^(-1)`, `var^(3/2)`, or empty for `t = 0`.
pub fn power(var: &str, twice: i64) -> String {
    match twice {
        0 => String::new(),
        2 => var.to_string(),
        t if t % 2 == 0 && t > 0 => format!("{var}^{}", t / 2),
        t if t % 2 == 0 => format!("{var}^({})", t / 2),
        t => format!("{var}^({t}/2)"),
    }
}

fn term(c: &Rat, mono: &str) -> String {
    if mono.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        mono.to_string()
    } else if (-c).is_one() {
        format!("-{mono}")
    } else {
        format!("{c}*{mono}")
    }
}

fn join(terms: Vec<String>) -> String {
    let mut out = String::new();
    for (i, t) in terms.into_iter().enumerate() {
        if i == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Terms by descending degree; exponents of `x` are shown as half-powers of `var`.
pub fn laurent_to_string(p: &LaurentX, var: &str) -> String {
    join(p.terms().rev().map(|(e, c)| term(c, &power(var, e))).collect())
}

pub fn ratfunc_to_string(f: &RatFuncX) -> String {
    if f.den().is_one() {
        return laurent_to_string(f.num(), "q");
    }
    let num = laurent_to_string(f.num(), "q");
    let num = if f.num().num_terms() > 1 || num.starts_with('-') { format!("({num})") } else { num };
    format!("{num}/({})", laurent_to_string(f.den(), "q"))
}

/// Slices by descending `a`-degree, each `a^(k/2)*coefficient`.
pub fn linkpoly_to_string(p: &LinkPoly) -> String {
    let mut parts = Vec::new();
    for (e, f) in p.terms().rev() {
        let a = power("a", e);
        let s = if f.den().is_one() && f.num().num_terms() == 1 {
            let (x, c) = f.num().terms().next().unwrap();
            let q = power("q", x);
            let mono = match (a.is_empty(), q.is_empty()) {
                (true, _) => q,
                (_, true) => a,
                _ => format!("{a}*{q}"),
            };
            term(c, &mono)
        } else {
            let body = if f.den().is_one() {
                format!("({})", laurent_to_string(f.num(), "q"))
            } else {
                ratfunc_to_string(f)
            };
            if a.is_empty() { body } else { format!("{a}*{body}") }
        };
        parts.push(s);
    }
    join(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;

    #[test]
    fn half_powers() {
        assert_eq!(power("a", 3), "a^(3/2)");
        assert_eq!(power("q", -2), "q^(-1)");
        assert_eq!(power("q", 4), "q^2");
        let p = LaurentX::from_ints(-1, &[-1, 0, 2]);
        assert_eq!(laurent_to_string(&p, "q"), "2*q^(1/2) - q^(-1/2)");
    }

    #[test]
    fn linkpoly_order() {
        let p = &LinkPoly::monomial(3, 0, int(1)) - &LinkPoly::monomial(-1, 2, int(2));
        assert_eq!(linkpoly_to_string(&p), "a^(3/2) - 2*a^(-1/2)*q");
    }
}
