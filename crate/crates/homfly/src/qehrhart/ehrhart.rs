//! The polynomial `E_{λ,Q}(a, b, q)` in the basis `a^e · binom(b+i−1, i−1)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::brute::parallelepiped;
use super::partial::{from_generating_function, GfPart};
use super::polytope::{LatticeSimplex, LinearForm, Polytope, Poset};
use super::EhrhartError;
use crate::algebra::render::{laurent_to_string, power};
use crate::algebra::{binomial, LaurentX, LinkPoly, LinkSum, Monomial, Rat, RatFuncX};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartTerm {
    /// Exponent of `a`.
    pub a_exp: i64,
    /// `(i, C_i(q))` with `i ≥ 1` ascending; the term is `Σ_i C_i · binom(b+i−1, i−1) · a^{a_exp}`.
    pub b_part: Vec<(u32, RatFuncX)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EhrhartPoly {
    terms: Vec<EhrhartTerm>,
}

impl EhrhartPoly {
    pub fn from_map(map: BTreeMap<(i64, u32), RatFuncX>) -> Self {
        let mut terms: Vec<EhrhartTerm> = Vec::new();
        for ((e, i), c) in map {
            if c.is_zero() {
                continue;
            }
            match terms.last_mut() {
                Some(t) if t.a_exp == e => t.b_part.push((i, c)),
                _ => terms.push(EhrhartTerm { a_exp: e, b_part: vec![(i, c)] }),
            }
        }
        EhrhartPoly { terms }
    }

    pub fn terms(&self) -> &[EhrhartTerm] {
        &self.terms
    }

    pub fn coeff(&self, a_exp: i64, i: u32) -> RatFuncX {
        self.terms
            .iter()
            .find(|t| t.a_exp == a_exp)
            .and_then(|t| t.b_part.iter().find(|(j, _)| *j == i))
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// Largest binomial index `i`; `E` has degree `i − 1` in `b`.
    pub fn max_b_index(&self) -> u32 {
        self.terms.iter().flat_map(|t| t.b_part.iter().map(|p| p.0)).max().unwrap_or(0)
    }

    /// No term with `i ≥ 2`.
    pub fn is_b_independent(&self) -> bool {
        self.max_b_index() <= 1
    }

    pub fn add(&self, other: &EhrhartPoly) -> EhrhartPoly {
        let mut map: BTreeMap<(i64, u32), RatFuncX> = BTreeMap::new();
        for t in self.terms.iter().chain(&other.terms) {
            for (i, c) in &t.b_part {
                let slot = map.entry((t.a_exp, *i)).or_default();
                *slot = &*slot + c;
            }
        }
        EhrhartPoly::from_map(map)
    }

    /// Substitutes `a -> a_subst`, `b -> b`, and `q -> q` or `q^-1` in the
    /// coefficients. `a_subst` is expressed in the output variables.
    pub fn evaluate(&self, a_subst: &Monomial, b: i64, q_inverse: bool) -> LinkPoly {
        let mut acc = LinkSum::new();
        for t in &self.terms {
            let scale = pow_rat(&a_subst.coeff, t.a_exp);
            for (i, c) in &t.b_part {
                let w = binomial(b + *i as i64 - 1, i - 1);
                if w.is_zero() {
                    continue;
                }
                let c = if q_inverse { c.invert_x() } else { c.clone() };
                let f = c.mul_monomial(a_subst.x * t.a_exp, &(&w * &scale));
                acc.add_ratfunc(a_subst.alpha * t.a_exp, &f);
            }
        }
        acc.finish()
    }

    /// `E(q^N, N, q)`.
    pub fn eval_at(&self, n: i64) -> RatFuncX {
        self.evaluate(&Monomial::unit(0, 2 * n), n, false).as_ratfunc().expect("no a-dependence")
    }
}

fn pow_rat(c: &Rat, e: i64) -> Rat {
    if c.is_one() {
        return Rat::one();
    }
    let p = num_traits::pow(c.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

impl fmt::Display for EhrhartPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for t in self.terms.iter().rev() {
            for (i, c) in &t.b_part {
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                let mut factors = Vec::new();
                let a = power("a", 2 * t.a_exp);
                if !a.is_empty() {
                    factors.push(a);
                }
                match i {
                    1 => {}
                    2 => factors.push("(b + 1)".to_string()),
                    _ => factors.push(format!("binom(b + {}, {})", i - 1, i - 1)),
                }
                let c = if c.den().is_one() {
                    format!("({})", laurent_to_string(c.num(), "q"))
                } else {
                    format!("({})", c)
                };
                factors.push(c);
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Integer point transform over the fundamental parallelepiped of the cone over `s`.
pub fn ehrhart_simplex(s: &LatticeSimplex, lambda: &LinearForm) -> Result<EhrhartPoly, EhrhartError> {
    Polytope::Simplex(s.clone()).check_form(lambda)?;
    let mut by_height: BTreeMap<u32, Vec<(i64, Rat)>> = BTreeMap::new();
    for (h, l) in parallelepiped(s, lambda) {
        by_height.entry(h).or_default().push((2 * l, Rat::one()));
    }
    let numerator = by_height.into_iter().map(|(h, t)| (h, LaurentX::from_terms(t))).collect();
    let poles = s.vertices().iter().map(|w| lambda.eval(w)).collect();
    Ok(from_generating_function(&[GfPart { numerator, poles }]))
}

/// Half-open decomposition of the order polytope along linear extensions.
///
/// With a natural labeling `ω`, every order-preserving `v` sorts uniquely by
/// `(v, ω)`; along that extension the inequalities are weak except at descents
/// of `ω`, where they are strict.
pub fn ehrhart_order_polytope(p: &Poset, lambda: &LinearForm) -> Result<EhrhartPoly, EhrhartError> {
    Polytope::Order(p.clone()).check_form(lambda)?;
    let n = p.len();
    let topo = p.topological_order().ok_or(EhrhartError::Cyclic)?;
    let mut omega = vec![0usize; n];
    for (pos, &el) in topo.iter().enumerate() {
        omega[el] = pos;
    }
    let mut parts = Vec::new();
    for pi in p.linear_extensions() {
        let mut s = vec![0i64; n + 1];
        for j in (0..n).rev() {
            s[j] = s[j + 1] + lambda.coeffs[pi[j]];
        }
        let mut des = 0u32;
        let mut shift = 0i64;
        for k in 1..n {
            if omega[pi[k - 1]] > omega[pi[k]] {
                des += 1;
                shift += s[k];
            }
        }
        parts.push(GfPart { numerator: vec![(des, LaurentX::q_pow(shift))], poles: s });
    }
    Ok(from_generating_function(&parts))
}

/// The chain `0 ≤ v_1 ≤ … ≤ v_m ≤ 1` with `λ_j = rots[j]`.
pub fn chain_ehrhart(rots: &[i64]) -> EhrhartPoly {
    let m = rots.len();
    let mut s = vec![0i64; m + 1];
    for j in (0..m).rev() {
        s[j] = s[j + 1] + rots[j];
    }
    from_generating_function(&[GfPart { numerator: vec![(0, LaurentX::one())], poles: s }])
}

pub fn ehrhart(q: &Polytope, lambda: &LinearForm) -> Result<EhrhartPoly, EhrhartError> {
    match q {
        Polytope::Simplex(s) => ehrhart_simplex(s, lambda),
        Polytope::Order(p) => ehrhart_order_polytope(p, lambda),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::qehrhart::weighted_count;

    fn one_minus_q_sq() -> LaurentX {
        LaurentX::from_ints(0, &[1, 0, -2, 0, 1])
    }

    #[test]
    fn chain_of_two_closed_form() {
        // (a^-1 − 2q − bq + q² + bq²)/(1−q)²
        let e = ehrhart_order_polytope(&Poset::chain(2), &LinearForm::new(vec![1, -1])).unwrap();
        let d = one_minus_q_sq();
        assert_eq!(e.coeff(-1, 1), RatFuncX::new(LaurentX::one(), d.clone()).unwrap());
        // −bq + bq² = (b+1)(q² − q) − (q² − q)
        assert_eq!(e.coeff(0, 2), RatFuncX::new(LaurentX::from_ints(2, &[-1, 0, 1]), d.clone()).unwrap());
        assert_eq!(e.coeff(0, 1), RatFuncX::new(LaurentX::from_ints(2, &[-1]), d).unwrap());
        assert_eq!(e.terms().len(), 2);
    }

    #[test]
    fn point_and_segment() {
        let e = ehrhart_simplex(&LatticeSimplex::point(2), &LinearForm::new(vec![3, 1])).unwrap();
        assert_eq!(e.evaluate(&Monomial::unit(0, 0), 5, false), LinkPoly::one());
        let seg = ehrhart_simplex(&LatticeSimplex::unit_segment(), &LinearForm::new(vec![0])).unwrap();
        for b in -2..4 {
            assert_eq!(seg.evaluate(&Monomial::unit(0, 0), b, false), LinkPoly::constant(int(b + 1)));
        }
    }

    #[test]
    fn order_polytope_matches_brute_force() {
        let p = Poset::new(vec!["a".into(), "b".into(), "c".into()], vec![(0, 2), (1, 2)]).unwrap();
        let l = LinearForm::new(vec![2, -1, 1]);
        let e = ehrhart_order_polytope(&p, &l).unwrap();
        for n in 0..5 {
            let w = weighted_count(&Polytope::Order(p.clone()), &l, n, false).unwrap();
            assert_eq!(e.eval_at(n as i64), RatFuncX::from_laurent(w), "N = {n}");
        }
    }

    #[test]
    fn simplex_with_nontrivial_parallelepiped() {
        let s = LatticeSimplex::new(vec![vec![0, 0], vec![1, 0], vec![1, 2]]).unwrap();
        let l = LinearForm::new(vec![1, -1]);
        let e = ehrhart_simplex(&s, &l).unwrap();
        for n in 0..5 {
            let w = weighted_count(&Polytope::Simplex(s.clone()), &l, n, false).unwrap();
            assert_eq!(e.eval_at(n as i64), RatFuncX::from_laurent(w), "N = {n}");
        }
    }
}
