//! Lattice simplices, posets and their order polytopes, and linear forms.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::EhrhartError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSimplex {
    vertices: Vec<Vec<i64>>,
}

impl LatticeSimplex {
    pub fn new(vertices: Vec<Vec<i64>>) -> Result<Self, EhrhartError> {
        if vertices.is_empty() {
            return Err(EhrhartError::Degenerate);
        }
        let m = vertices[0].len();
        if vertices.iter().any(|v| v.len() != m) {
            return Err(EhrhartError::DimensionMismatch);
        }
        if super::linalg::Barycentric::new(&vertices).is_none() {
            return Err(EhrhartError::Degenerate);
        }
        Ok(LatticeSimplex { vertices })
    }

    /// The unit segment `[0, 1] ⊂ ℝ`.
    pub fn unit_segment() -> Self {
        LatticeSimplex { vertices: vec![vec![0], vec![1]] }
    }

    /// The single point at the origin of `ℝ^m`.
    pub fn point(m: usize) -> Self {
        LatticeSimplex { vertices: vec![vec![0; m]] }
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].len()
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// A finite poset given by its cover relations `(lower, upper)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    pub fn new(elements: Vec<String>, covers: Vec<(usize, usize)>) -> Result<Self, EhrhartError> {
        let mut seen = HashSet::new();
        for &(a, b) in &covers {
            if a >= elements.len() || b >= elements.len() {
                return Err(EhrhartError::UnknownElement(format!("#{}", a.max(b))));
            }
            if !seen.insert((a, b)) {
                return Err(EhrhartError::DuplicateCover(elements[a].clone(), elements[b].clone()));
            }
        }
        let p = Poset { elements, covers };
        if p.topological_order().is_none() {
            return Err(EhrhartError::Cyclic);
        }
        Ok(p)
    }

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("v{i}")).collect()
    }

    /// `v1 < v2 < … < vn`.
    pub fn chain(n: usize) -> Self {
        Poset { elements: Self::labels(n), covers: (1..n).map(|i| (i - 1, i)).collect() }
    }

    pub fn antichain(n: usize) -> Self {
        Poset { elements: Self::labels(n), covers: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// A linear extension, or `None` if the covers contain a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut indeg = vec![0usize; n];
        for &(_, b) in &self.covers {
            indeg[b] += 1;
        }
        let mut out = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).rev().collect();
        while let Some(i) = ready.pop() {
            out.push(i);
            let mut next: Vec<usize> = self.covers.iter().filter(|c| c.0 == i).map(|c| c.1).collect();
            next.sort_unstable();
            for j in next.into_iter().rev() {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.push(j);
                }
            }
            ready.sort_unstable_by(|a, b| b.cmp(a));
        }
        (out.len() == n).then_some(out)
    }

    /// `below[i][j]` iff `i ≤ j` in the poset.
    pub fn order_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in &self.covers {
            le[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if le[i][k] {
                    for j in 0..n {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        le
    }

    /// All linear extensions, each as the sequence of elements in increasing order.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut preds = vec![0u64; n];
        for &(a, b) in &self.covers {
            preds[b] |= 1 << a;
        }
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(n: usize, preds: &[u64], used: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for i in 0..n {
                if used & (1 << i) == 0 && preds[i] & !used == 0 {
                    cur.push(i);
                    rec(n, preds, used | (1 << i), cur, out);
                    cur.pop();
                }
            }
        }
        rec(n, &preds, 0, &mut cur, &mut out);
        out
    }

    /// Whether an order-preserving assignment satisfies all cover inequalities.
    pub(crate) fn respects(&self, v: &[i64], strict: bool) -> bool {
        self.covers.iter().all(|&(a, b)| if strict { v[a] < v[b] } else { v[a] <= v[b] })
    }
}

/// A linear form `λ(x) = Σ coeffs[i] x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub coeffs: Vec<i64>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<i64>) -> Self {
        LinearForm { coeffs }
    }

    pub fn eval(&self, x: &[i64]) -> i64 {
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c > 0)
    }
}

/// Either kind of polytope the Ehrhart machinery accepts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Polytope {
    Simplex(LatticeSimplex),
    Order(Poset),
}

impl Polytope {
    pub fn ambient_dim(&self) -> usize {
        match self {
            Polytope::Simplex(s) => s.ambient_dim(),
            Polytope::Order(p) => p.len(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Polytope::Simplex(s) => s.dim(),
            Polytope::Order(p) => p.len(),
        }
    }

    pub(crate) fn check_form(&self, lambda: &LinearForm) -> Result<(), EhrhartError> {
        let expected = self.ambient_dim();
        if lambda.coeffs.len() != expected {
            return Err(EhrhartError::FormLength { got: lambda.coeffs.len(), expected });
        }
        Ok(())
    }

    /// Vertices of the polytope; for an order polytope these are the indicator
    /// vectors of its up-sets.
    pub fn vertices(&self) -> Vec<Vec<i64>> {
        match self {
            Polytope::Simplex(s) => s.vertices().to_vec(),
            Polytope::Order(p) => {
                let n = p.len();
                (0..1u64 << n)
                    .map(|mask| (0..n).map(|i| ((mask >> i) & 1) as i64).collect::<Vec<_>>())
                    .filter(|v| p.respects(v, false))
                    .collect()
            }
        }
    }

    /// `max_{x ∈ Q} λ(x)`, attained at a vertex.
    pub fn max_form(&self, lambda: &LinearForm) -> i64 {
        self.vertices().iter().map(|v| lambda.eval(v)).max().expect("nonempty polytope")
    }
}

/// On-disk poset description: `{elements, covers, form}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    pub form: BTreeMap<String, i64>,
}

impl PosetFile {
    pub fn parse(text: &str) -> Result<(Poset, LinearForm), EhrhartError> {
        let f: PosetFile = serde_json::from_str(text).map_err(|e| EhrhartError::Parse(e.to_string()))?;
        f.resolve()
    }

    pub fn resolve(&self) -> Result<(Poset, LinearForm), EhrhartError> {
        let index = |s: &String| {
            self.elements.iter().position(|e| e == s).ok_or_else(|| EhrhartError::UnknownElement(s.clone()))
        };
        let mut covers = Vec::with_capacity(self.covers.len());
        for (a, b) in &self.covers {
            covers.push((index(a)?, index(b)?));
        }
        for k in self.form.keys() {
            index(k)?;
        }
        let coeffs = self.elements.iter().map(|e| self.form.get(e).copied().unwrap_or(0)).collect();
        Ok((Poset::new(self.elements.clone(), covers)?, LinearForm::new(coeffs)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extensions_of_small_posets() {
        assert_eq!(Poset::chain(3).linear_extensions(), vec![vec![0, 1, 2]]);
        assert_eq!(Poset::antichain(3).linear_extensions().len(), 6);
        let v = Poset::new(vec!["a".into(), "b".into(), "c".into()], vec![(0, 1), (0, 2)]).unwrap();
        assert_eq!(v.linear_extensions().len(), 2);
    }

    #[test]
    fn rejects_cycles_and_duplicates() {
        let e = || vec!["a".to_string(), "b".to_string()];
        assert_eq!(Poset::new(e(), vec![(0, 1), (1, 0)]), Err(EhrhartError::Cyclic));
        assert!(matches!(Poset::new(e(), vec![(0, 1), (0, 1)]), Err(EhrhartError::DuplicateCover(..))));
    }

    #[test]
    fn order_polytope_vertices_are_upsets() {
        let p = Polytope::Order(Poset::chain(2));
        let mut v = p.vertices();
        v.sort();
        assert_eq!(v, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(p.max_form(&LinearForm::new(vec![1, -1])), 0);
    }

    #[test]
    fn poset_file() {
        let text = r#"{"elements":["x","y"],"covers":[["x","y"]],"form":{"x":1,"y":-1}}"#;
        let (p, l) = PosetFile::parse(text).unwrap();
        assert_eq!(p, Poset::new(vec!["x".into(), "y".into()], vec![(0, 1)]).unwrap());
        assert_eq!(l.coeffs, vec![1, -1]);
        assert!(PosetFile::parse(r#"{"elements":["x"],"covers":[["x","z"]],"form":{}}"#).is_err());
    }
}
