//! Exact barycentric coordinates with respect to a lattice simplex.

use num_traits::{One, Zero};

use crate::algebra::{int, Rat};

/// Solves `Σ c_w (w, 1) = (point, height)` for the vertices of an affinely
/// independent simplex.
pub(crate) struct Barycentric {
    rows: Vec<usize>,
    inverse: Vec<Vec<Rat>>,
    vertices: Vec<Vec<i64>>,
}

impl Barycentric {
    pub(crate) fn new(vertices: &[Vec<i64>]) -> Option<Self> {
        let k = vertices.len();
        let m = vertices.first().map_or(0, |v| v.len());
        // rows of A: m coordinate rows followed by the all-ones row
        let row = |r: usize| -> Vec<Rat> {
            (0..k).map(|j| if r < m { int(vertices[j][r]) } else { Rat::one() }).collect()
        };
        let mut chosen: Vec<usize> = Vec::new();
        let mut basis: Vec<Vec<Rat>> = Vec::new();
        for r in (0..=m).rev() {
            let mut v = row(r);
            for (b, &piv) in basis.iter().zip(pivots(&basis).iter()) {
                if !v[piv].is_zero() {
                    let f = &v[piv] / &b[piv];
                    for j in 0..k {
                        v[j] -= &f * &b[j];
                    }
                }
            }
            if v.iter().any(|c| !c.is_zero()) {
                basis.push(v);
                chosen.push(r);
                if chosen.len() == k {
                    break;
                }
            }
        }
        if chosen.len() < k {
            return None;
        }
        let square: Vec<Vec<Rat>> = chosen.iter().map(|&r| row(r)).collect();
        let inverse = invert(square)?;
        Some(Barycentric { rows: chosen, inverse, vertices: vertices.to_vec() })
    }

    /// Coordinates `c` if `(point, height)` lies in the affine span.
    pub(crate) fn solve(&self, point: &[i64], height: i64) -> Option<Vec<Rat>> {
        let m = point.len();
        let rhs: Vec<Rat> = self.rows.iter().map(|&r| int(if r < m { point[r] } else { height })).collect();
        let c: Vec<Rat> = self
            .inverse
            .iter()
            .map(|row| row.iter().zip(&rhs).fold(Rat::zero(), |acc, (a, b)| acc + a * b))
            .collect();
        for r in 0..=m {
            let target = if r < m { point[r] } else { height };
            let got = c.iter().enumerate().fold(Rat::zero(), |acc, (j, cj)| {
                acc + cj * int(if r < m { self.vertices[j][r] } else { 1 })
            });
            if got != int(target) {
                return None;
            }
        }
        Some(c)
    }
}

fn pivots(basis: &[Vec<Rat>]) -> Vec<usize> {
    basis.iter().map(|b| b.iter().position(|c| !c.is_zero()).unwrap()).collect()
}

fn invert(mut a: Vec<Vec<Rat>>) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut inv: Vec<Vec<Rat>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect()).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        inv.swap(col, p);
        let d = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &d;
            inv[col][j] = &inv[col][j] / &d;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_coordinates() {
        let b = Barycentric::new(&[vec![0, 0], vec![2, 0], vec![0, 2]]).unwrap();
        let c = b.solve(&[1, 1], 1).unwrap();
        assert_eq!(c, vec![Rat::zero(), crate::algebra::frac(1, 2), crate::algebra::frac(1, 2)]);
        assert!(Barycentric::new(&[vec![0, 0], vec![1, 1], vec![2, 2]]).is_none());
    }

    #[test]
    fn off_span_rejected() {
        let b = Barycentric::new(&[vec![0, 0], vec![1, 1]]).unwrap();
        assert!(b.solve(&[1, 0], 1).is_none());
        assert!(b.solve(&[1, 1], 1).is_some());
    }
}
