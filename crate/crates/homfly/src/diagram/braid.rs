//! Braid words and diagram statistics of their closures.

use std::fmt;

use serde::Serialize;

use super::DiagramError;

/// A word in the braid group on `strands` strands; `±k` is `σ_k^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self, DiagramError> {
        let strands = strands.max(1);
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(DiagramError::Generator { index: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Smallest strand count that fits the letters.
    pub fn from_letters(letters: Vec<i64>) -> Result<Self, DiagramError> {
        let n = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1);
        Self::new(n, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    /// All crossings flipped.
    pub fn mirror(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| -l).collect() }
    }

    /// Cyclic rotation by `k` letters (a conjugate word).
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// The same word on one more strand followed by `σ_n^{±1}`.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands as i64;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize - 1;
            perm.swap(k, k + 1);
        }
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if !seen[s] {
                count += 1;
                let mut t = s;
                while !seen[t] {
                    seen[t] = true;
                    t = perm[t];
                }
            }
        }
        count
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}: {}", self.strands, w.join(" "))
    }
}

/// Parses `"1 -2 1 -2"`, `"3: 1 1"` (explicit strand count), or the alphabetic
/// form `"aBaB"` with `a = σ1`, `A = σ1^-1`, `b = σ2`, ….
pub fn parse_braid(text: &str) -> Result<BraidWord, DiagramError> {
    let (strands, body) = match text.split_once(':') {
        Some((n, rest)) => {
            let n = n.trim();
            let count = n.parse::<usize>().ok().filter(|&k| k >= 1).ok_or_else(|| DiagramError::Parse {
                position: 0,
                token: n.to_string(),
                message: "strand count must be a positive integer".into(),
            })?;
            (Some(count), rest)
        }
        None => (None, text),
    };
    let mut letters = Vec::new();
    let tokens: Vec<&str> = body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
    let alphabetic = |t: &str| t.chars().all(|c| c.is_ascii_alphabetic());
    if let Some(first) = tokens.first() {
        let mode = alphabetic(first);
        if let Some(pos) = tokens.iter().position(|t| alphabetic(t) != mode) {
            return Err(DiagramError::Parse {
                position: pos,
                token: tokens[pos].to_string(),
                message: "alphabetic and numeric generators cannot be mixed".into(),
            });
        }
    }
    for (pos, tok) in tokens.into_iter().enumerate() {
        if alphabetic(tok) {
            for c in tok.chars() {
                let k = (c.to_ascii_lowercase() as u8 - b'a') as i64 + 1;
                letters.push(if c.is_ascii_uppercase() { -k } else { k });
            }
            continue;
        }
        let v: i64 = tok.parse().map_err(|_| DiagramError::Parse {
            position: pos,
            token: tok.to_string(),
            message: "expected a signed generator index".into(),
        })?;
        if v == 0 {
            return Err(DiagramError::Parse {
                position: pos,
                token: tok.to_string(),
                message: "generator index 0 is invalid".into(),
            });
        }
        if let Some(n) = strands {
            if v.unsigned_abs() as usize >= n {
                return Err(DiagramError::Parse {
                    position: pos,
                    token: tok.to_string(),
                    message: format!("generator index must be below the strand count {n}"),
                });
            }
        }
        letters.push(v);
    }
    match strands {
        Some(n) => BraidWord::new(n, letters),
        None => BraidWord::from_letters(letters),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramStats {
    pub c_plus: usize,
    pub c_minus: usize,
    pub s_plus: usize,
    pub s_minus: usize,
    pub writhe: i64,
}

/// Crossing and Seifert-circle counts. The closure arcs run counter-clockwise,
/// so the `n` strand circles all have rotation `+1`.
pub fn stats(b: &BraidWord) -> DiagramStats {
    let c_plus = b.letters().iter().filter(|&&l| l > 0).count();
    let c_minus = b.len() - c_plus;
    DiagramStats { c_plus, c_minus, s_plus: b.strands(), s_minus: 0, writhe: c_plus as i64 - c_minus as i64 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeric_and_alphabetic() {
        let a = parse_braid("1 -2 1 -2").unwrap();
        assert_eq!(a.strands(), 3);
        assert_eq!(parse_braid("aBaB").unwrap(), a);
        assert_eq!(parse_braid("4: 1 1").unwrap().strands(), 4);
        assert_eq!(parse_braid("").unwrap(), BraidWord::new(1, vec![]).unwrap());
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_braid("1 0") {
            Err(DiagramError::Parse { position, .. }) => assert_eq!(position, 1),
            other => panic!("{other:?}"),
        }
        assert!(parse_braid("1 x2").is_err());
        assert!(parse_braid("2: 1 2").is_err());
    }

    #[test]
    fn stats_and_components() {
        let s = stats(&parse_braid("-1 -1 -1").unwrap());
        assert_eq!((s.c_plus, s.c_minus, s.s_plus, s.s_minus), (0, 3, 2, 0));
        assert_eq!(parse_braid("1 1").unwrap().components(), 2);
        assert_eq!(parse_braid("1 1 1").unwrap().components(), 1);
        assert_eq!(parse_braid("1 -2 1 -2").unwrap().components(), 1);
    }
}
