//! Runs every applicable oracle pair on one braid and color.

use serde::Serialize;

use super::{homfly_skein, t2_formula};
use crate::algebra::{render::linkpoly_to_string, LinkPoly, LinkSum};
use crate::diagram::{resolve, stats, BraidWord};
use crate::statesum::{
    antisym_homfly, antisymmetric_parts, colored_homfly_with, moy_bruteforce, resolution_terms, ChainCache, EvalOptions,
};

#[derive(Clone, Debug, Serialize)]
pub struct PairResult {
    pub pair: String,
    pub equal: bool,
    /// The difference of the two sides when they disagree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub difference: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub braid: String,
    pub r: u32,
    pub pairs: Vec<PairResult>,
}

impl CrosscheckReport {
    pub fn all_equal(&self) -> bool {
        self.pairs.iter().all(|p| p.equal)
    }

    fn push(&mut self, pair: String, lhs: Result<LinkPoly, String>, rhs: Result<LinkPoly, String>) {
        let (equal, difference) = match (lhs, rhs) {
            (Ok(a), Ok(b)) if a == b => (true, None),
            (Ok(a), Ok(b)) => (false, Some(linkpoly_to_string(&(&a - &b)))),
            (Err(e), _) | (_, Err(e)) => (false, Some(e)),
        };
        self.pairs.push(PairResult { pair, equal, difference });
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// The MOY state sum at `a = q^N`: the `⟨D_i⟩_N` sum with the anti-symmetric
/// prefactor and crossing coefficients.
fn moy_sum_at(b: &BraidWord, r: u32, n: u32) -> Result<LinkPoly, String> {
    let w = stats(b).writhe;
    let ri = r as i64;
    let mut acc = LinkSum::new();
    for t in resolution_terms(b, r, false) {
        let g = resolve(b, &t.index).map_err(err)?;
        let v = LinkPoly::from_laurent(&moy_bruteforce(&g, n).map_err(err)? * &t.coefficient);
        acc.add(&v);
    }
    let sign = if (ri * w) % 2 != 0 { -1 } else { 1 };
    // (a^{-r/2})^w at a = q^N is x^{-N r w}
    let x = -(n as i64) * ri * w + ri * (ri - 1) * w;
    Ok(acc.finish().mul_monomial(0, x, &crate::algebra::int(sign)))
}

pub fn crosscheck(b: &BraidWord, r: u32, ns: &[u32], opts: &EvalOptions) -> CrosscheckReport {
    let mut rep = CrosscheckReport { braid: b.to_string(), r, pairs: Vec::new() };
    let sym = colored_homfly_with(b, r, opts).map_err(err);
    if b.strands() == 2 {
        let c = stats(b).writhe;
        rep.push(format!("symmetric vs t2(c={c})"), sym.clone(), t2_formula(c, r).map_err(err));
    }
    if r == 1 {
        rep.push("symmetric vs skein".into(), sym.clone(), homfly_skein(b).map_err(err));
    }
    let anti = antisym_homfly(b, r, opts).map_err(err);
    rep.push("antisymmetric vs symmetric(q -> 1/q)".into(), anti.clone(), sym.map(|p| p.invert_q()));
    let cache = ChainCache::new();
    for &n in ns {
        let mut graphs_ok = Ok(());
        for t in resolution_terms(b, r, false) {
            let check = || -> Result<bool, String> {
                let g = resolve(b, &t.index).map_err(err)?;
                let lhs = antisymmetric_parts(&g, &cache).map_err(err)?.at(n as i64).substitute_alpha(0, n as i64);
                Ok(lhs == LinkPoly::from_laurent(moy_bruteforce(&g, n).map_err(err)?))
            };
            match check() {
                Ok(true) => {}
                Ok(false) => {
                    graphs_ok = Err(format!("graph {:?} differs", t.index.i));
                    break;
                }
                Err(e) => {
                    graphs_ok = Err(e);
                    break;
                }
            }
        }
        rep.pairs.push(PairResult {
            pair: format!("antisymmetric graphs vs brute force N={n}"),
            equal: graphs_ok.is_ok(),
            difference: graphs_ok.err(),
        });
        rep.push(
            format!("antisymmetric vs MOY state sum N={n}"),
            anti.clone().map(|p| p.substitute_alpha(0, n as i64)),
            moy_sum_at(b, r, n),
        );
    }
    rep
}
