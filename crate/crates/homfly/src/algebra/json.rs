//! JSON form of [`LinkPoly`]: `[{a_half_exp, num: [[x_half_exp, "p/q"]...], den: [...]}]`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::LaurentX;
use super::linkpoly::LinkPoly;
use super::rat::parse_rat;
use super::ratfunc::RatFuncX;

#[derive(Serialize, Deserialize)]
struct SliceJson {
    a_half_exp: i64,
    num: Vec<(i64, String)>,
    den: Vec<(i64, String)>,
}

fn terms_json(p: &LaurentX) -> Vec<(i64, String)> {
    p.terms().map(|(e, c)| (e, c.to_string())).collect()
}

fn terms_from_json(t: &[(i64, String)]) -> Result<LaurentX, String> {
    let mut out = Vec::with_capacity(t.len());
    for (e, c) in t {
        out.push((*e, parse_rat(c).map_err(|e| e.to_string())?));
    }
    Ok(LaurentX::from_terms(out))
}

impl Serialize for LinkPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let slices: Vec<SliceJson> = self
            .terms()
            .map(|(e, f)| SliceJson { a_half_exp: e, num: terms_json(f.num()), den: terms_json(f.den()) })
            .collect();
        slices.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinkPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let slices = Vec::<SliceJson>::deserialize(d)?;
        let mut parts = Vec::with_capacity(slices.len());
        for s in slices {
            let num = terms_from_json(&s.num).map_err(D::Error::custom)?;
            let den = terms_from_json(&s.den).map_err(D::Error::custom)?;
            let f = RatFuncX::new(num, den).map_err(D::Error::custom)?;
            parts.push((s.a_half_exp, f));
        }
        Ok(LinkPoly::from_slices(parts))
    }
}

pub fn to_json_string(p: &LinkPoly) -> String {
    serde_json::to_string(p).expect("LinkPoly serializes")
}

pub fn from_json_str(s: &str) -> Result<LinkPoly, serde_json::Error> {
    serde_json::from_str(s)
}
