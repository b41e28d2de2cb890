//! Direct enumeration of weighted lattice points.

use num_traits::Signed;

use super::linalg::Barycentric;
use super::polytope::{LatticeSimplex, LinearForm, Polytope, Poset};
use super::EhrhartError;
use crate::algebra::{int, LaurentX, Rat};

/// `W_λ(NQ, q)`, or its interior version, by enumerating every lattice point.
pub fn weighted_count(q: &Polytope, lambda: &LinearForm, n: u32, interior: bool) -> Result<LaurentX, EhrhartError> {
    q.check_form(lambda)?;
    let mut exps: Vec<(i64, Rat)> = Vec::new();
    match q {
        Polytope::Simplex(s) => simplex_points(s, n as i64, interior, |x| exps.push((2 * lambda.eval(x), int(1)))),
        Polytope::Order(p) => order_points(p, n as i64, interior, |x| exps.push((2 * lambda.eval(x), int(1)))),
    }
    Ok(LaurentX::from_terms(exps))
}

fn simplex_points(s: &LatticeSimplex, n: i64, interior: bool, mut f: impl FnMut(&[i64])) {
    let bary = Barycentric::new(s.vertices()).expect("simplex is nondegenerate");
    let m = s.ambient_dim();
    let lo: Vec<i64> = (0..m).map(|i| n * s.vertices().iter().map(|v| v[i]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..m).map(|i| n * s.vertices().iter().map(|v| v[i]).max().unwrap()).collect();
    for_box(&lo, &hi, |x| {
        if let Some(c) = bary.solve(x, n) {
            let ok = if interior {
                c.iter().all(|ci| ci.is_positive())
            } else {
                c.iter().all(|ci| !ci.is_negative())
            };
            if ok {
                f(x);
            }
        }
    });
}

fn order_points(p: &Poset, n: i64, interior: bool, mut f: impl FnMut(&[i64])) {
    let k = p.len();
    let (lo, hi) = if interior { (1, n - 1) } else { (0, n) };
    if lo > hi && k > 0 {
        return;
    }
    for_box(&vec![lo; k], &vec![hi; k], |x| {
        if p.respects(x, interior) {
            f(x);
        }
    });
}

/// Calls `f` on every integer point of the box `[lo, hi]`.
pub(crate) fn for_box(lo: &[i64], hi: &[i64], mut f: impl FnMut(&[i64])) {
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return;
    }
    let mut x = lo.to_vec();
    loop {
        f(&x);
        let mut i = 0;
        loop {
            if i == x.len() {
                return;
            }
            if x[i] < hi[i] {
                x[i] += 1;
                break;
            }
            x[i] = lo[i];
            i += 1;
        }
    }
}

/// Integer points of the fundamental parallelepiped of the cone over `s`,
/// returned as `(height, λ-value)` pairs.
pub(crate) fn parallelepiped(s: &LatticeSimplex, lambda: &LinearForm) -> Vec<(u32, i64)> {
    let bary = Barycentric::new(s.vertices()).expect("simplex is nondegenerate");
    let m = s.ambient_dim();
    let lo: Vec<i64> = (0..m).map(|i| s.vertices().iter().map(|v| v[i].min(0)).sum()).collect();
    let hi: Vec<i64> = (0..m).map(|i| s.vertices().iter().map(|v| v[i].max(0)).sum()).collect();
    let mut out = Vec::new();
    for h in 0..=s.dim() as i64 {
        for_box(&lo, &hi, |x| {
            if let Some(c) = bary.solve(x, h) {
                if c.iter().all(|ci| !ci.is_negative() && ci < &int(1)) {
                    out.push((h as u32, lambda.eval(x)));
                }
            }
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_of_two_counts() {
        let q = Polytope::Order(Poset::chain(2));
        let l = LinearForm::new(vec![1, -1]);
        let w = weighted_count(&q, &l, 3, false).unwrap();
        assert_eq!(w, LaurentX::from_ints(-6, &[1, 0, 2, 0, 3, 0, 4]));
        assert_eq!(weighted_count(&q, &l, 3, true).unwrap(), LaurentX::q_pow(-1));
    }

    #[test]
    fn segment_geometric_sum() {
        let q = Polytope::Simplex(LatticeSimplex::unit_segment());
        let w = weighted_count(&q, &LinearForm::new(vec![2]), 3, false).unwrap();
        assert_eq!(w, LaurentX::from_ints(0, &[1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]));
    }

    #[test]
    fn unimodular_parallelepiped_is_origin() {
        let s = LatticeSimplex::new(vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(parallelepiped(&s, &LinearForm::new(vec![1, 1])), vec![(0, 0)]);
        let t = LatticeSimplex::new(vec![vec![0, 0], vec![1, 0], vec![1, 2]]).unwrap();
        assert_eq!(parallelepiped(&t, &LinearForm::new(vec![0, 1])).len(), 2);
    }
}
