//! The acceptance matrix behind `homfly selftest`.
//!
//! Every check compares two independent routes (state sum against closed
//! formula, skein, brute force, or a hand-derived value). Random inputs come
//! from a fixed seed, so runs are reproducible.

use std::time::Instant;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use homfly::algebra::render::linkpoly_to_string;
use homfly::algebra::{int, HalfInt, LaurentX, LinkPoly, RatFuncX};
use homfly::analysis::{bounds_for, head, negative_twobraid_check, slopes, SlopeSource};
use homfly::diagram::{parse_braid, resolve, stats, BraidWord, ResolutionIndex};
use homfly::oracles::{crosscheck, homfly_skein, t2_formula};
use homfly::qehrhart::{
    ehrhart, reciprocity_check, reciprocity_sides, weighted_count, LinearForm, Polytope, Poset,
};
use homfly::statesum::{colored_homfly_with, symmetric_eval, ChainCache, EvalOptions, FlowFilter};

const SEED: u64 = 0x5eed_0001;

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    /// Wall time; not part of the rendered output.
    pub millis: u128,
}

struct Scale {
    deep: bool,
    posets: usize,
    n_max: u32,
}

type Outcome = Result<String, String>;

fn word(w: &str) -> BraidWord {
    parse_braid(w).expect("selftest words parse")
}

fn power_word(c: i64) -> BraidWord {
    let l = if c >= 0 { 1 } else { -1 };
    BraidWord::new(2, vec![l; c.unsigned_abs() as usize]).expect("2-braid")
}

fn sym(b: &BraidWord, r: u32) -> Result<LinkPoly, String> {
    colored_homfly_with(b, r, &EvalOptions::default()).map_err(|e| format!("{b}: {e}"))
}

fn random_poset(rng: &mut ChaCha8Rng, positive: bool) -> (Poset, LinearForm) {
    let n = rng.gen_range(1..=5usize);
    let mut covers = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.35) {
                covers.push((i, j));
            }
        }
    }
    let coeffs = (0..n).map(|_| if positive { rng.gen_range(1..=3) } else { rng.gen_range(-3..=3) }).collect();
    let names = (0..n).map(|i| format!("p{i}")).collect();
    (Poset::new(names, covers).expect("forward covers are acyclic"), LinearForm::new(coeffs))
}

fn q_pow(e: i64) -> LaurentX {
    LaurentX::q_pow(e)
}

fn rf(num: LaurentX, den: LaurentX) -> RatFuncX {
    RatFuncX::new(num, den).expect("nonzero denominator")
}

fn c1_ehrhart(s: &Scale) -> Outcome {
    let chain = Polytope::Order(Poset::chain(2));
    let form = LinearForm::new(vec![1, -1]);
    let e = ehrhart(&chain, &form).map_err(|e| e.to_string())?;
    // (a^-1 − 2q − bq + q² + bq²)/(1−q)² in the basis a^e binom(b+i−1, i−1)
    let d = LaurentX::from_ints(0, &[1, 0, -2, 0, 1]);
    let expected = [
        ((-1, 1), rf(LaurentX::one(), d.clone())),
        ((0, 1), rf(-q_pow(1), d.clone())),
        ((0, 2), rf(&q_pow(2) - &q_pow(1), d)),
    ];
    for ((a, i), v) in &expected {
        if e.coeff(*a, *i) != *v {
            return Err(format!("chain of 2: coefficient (a^{a}, i = {i}) is {}", e.coeff(*a, *i)));
        }
    }
    if e.terms().iter().map(|t| t.b_part.len()).sum::<usize>() != 3 {
        return Err(format!("chain of 2: unexpected extra terms in {e}"));
    }
    let w3 = LaurentX::from_ints(-6, &[1, 0, 2, 0, 3, 0, 4]);
    if e.eval_at(3) != RatFuncX::from_laurent(w3) {
        return Err(format!("E(q^3, 3, q) = {}", e.eval_at(3)));
    }
    let (lhs, rhs) = reciprocity_sides(&chain, &form, 3).map_err(|e| e.to_string())?;
    let qinv = RatFuncX::from_laurent(q_pow(-1));
    if lhs != qinv || rhs != qinv {
        return Err(format!("reciprocity at N = 3: {lhs} vs {rhs}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for k in 0..s.posets {
        let (p, l) = random_poset(&mut rng, false);
        let q = Polytope::Order(p);
        let e = ehrhart(&q, &l).map_err(|e| e.to_string())?;
        for n in 0..=s.n_max {
            let w = weighted_count(&q, &l, n, false).map_err(|e| e.to_string())?;
            if e.eval_at(n as i64) != RatFuncX::from_laurent(w) {
                return Err(format!("random poset #{k} ({q:?}, {l:?}): E != W at N = {n}"));
            }
            // the interior of the 0-th dilate is empty while E(1, 0, q) = 1
            if n > 0 && !reciprocity_check(&q, &l, n).map_err(|e| e.to_string())? {
                return Err(format!("random poset #{k} ({q:?}, {l:?}): reciprocity fails at N = {n}"));
            }
        }
    }
    Ok(format!("chain example exact; {} random posets, N = 0..{} (reciprocity from N = 1)", s.posets, s.n_max))
}

fn c2_b_independence(s: &Scale) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    for k in 0..s.posets {
        let (p, l) = random_poset(&mut rng, true);
        let q = Polytope::Order(p);
        let e = ehrhart(&q, &l).map_err(|e| e.to_string())?;
        if !e.is_b_independent() {
            return Err(format!("random poset #{k} ({q:?}, {l:?}) has b-dependence: {e}"));
        }
    }
    Ok(format!("{} random posets with positive forms", s.posets))
}

fn alpha_diff() -> LinkPoly {
    LinkPoly::monomial(1, 0, int(1)) - LinkPoly::monomial(-1, 0, int(1))
}

/// `(q^{1/2} − q^{-1/2})²`
fn x_diff_sq() -> RatFuncX {
    RatFuncX::from_laurent(LaurentX::from_ints(-2, &[1, 0, -2, 0, 1]))
}

fn c3_hopf(_: &Scale) -> Outcome {
    let b = word("1 1");
    let ax = LinkPoly::monomial(1, 1, int(1)) - LinkPoly::monomial(-1, -1, int(1));
    let d11 = (&alpha_diff() * &alpha_diff()).div_ratfunc(&x_diff_sq()).map_err(|e| e.to_string())?;
    let d01 = (&alpha_diff() * &ax).div_ratfunc(&x_diff_sq()).map_err(|e| e.to_string())?;
    let d00 = d01.mul_ratfunc(&RatFuncX::from_laurent(LaurentX::from_ints(-1, &[1, 0, 1])));
    let cache = ChainCache::new();
    for (i, want) in [([1, 1], &d11), ([0, 1], &d01), ([1, 0], &d01), ([0, 0], &d00)] {
        let g = resolve(&b, &ResolutionIndex::new(i.to_vec(), 1)).map_err(|e| e.to_string())?;
        let got = symmetric_eval(&g, FlowFilter::All, &cache).map_err(|e| e.to_string())?;
        if &got != want {
            return Err(format!("resolution {}{} = {}", i[0], i[1], linkpoly_to_string(&got)));
        }
    }
    let inner = LinkPoly::monomial(-3, 0, int(1))
        - LinkPoly::from_slices([(-1, RatFuncX::from_laurent(LaurentX::from_ints(-2, &[1, 0, -1, 0, 1])))]);
    let closed = -(&alpha_diff() * &inner).div_ratfunc(&x_diff_sq()).map_err(|e| e.to_string())?;
    let p = sym(&b, 1)?;
    if p != closed {
        return Err(format!("P_1(Hopf) = {}", linkpoly_to_string(&p)));
    }
    let t2 = t2_formula(2, 1).map_err(|e| e.to_string())?;
    if p != t2 {
        return Err(format!("t2(2, 1) = {}", linkpoly_to_string(&t2)));
    }
    Ok("resolutions 11, 01 = 10, 00, closed form and t2(2,1) agree".into())
}

fn t2_cases(s: &Scale) -> Vec<(i64, u32)> {
    let mut v: Vec<(i64, u32)> = (-3..=3).flat_map(|c| [(c, 1), (c, 2)]).collect();
    v.extend([(2, 3), (-2, 3)]);
    if s.deep {
        v.extend([(-4, 1), (4, 1), (-4, 2), (4, 2), (1, 3), (-1, 3), (3, 3), (-3, 3), (2, 4)]);
    }
    v
}

fn c4_t2_family(s: &Scale) -> Outcome {
    let cases = t2_cases(s);
    for &(c, r) in &cases {
        let p = sym(&power_word(c), r)?;
        let t = t2_formula(c, r).map_err(|e| e.to_string())?;
        if p != t {
            return Err(format!("c = {c}, r = {r}: state sum and closed formula differ"));
        }
    }
    Ok(format!("{} (c, r) pairs", cases.len()))
}

fn skein_words(s: &Scale) -> Vec<BraidWord> {
    let mut v = vec![BraidWord::new(1, vec![]).expect("unknot")];
    for w in ["1 1", "-1 -1", "1 1 1", "-1 -1 -1", "1 -2 1 -2", "1 1 1 1 1"] {
        v.push(word(w));
    }
    if s.deep {
        for w in ["1 1 2 -1 2", "1 2 1 2 1 2", "1 -2 3 -2 1"] {
            v.push(word(w));
        }
    }
    v
}

fn c5_skein(s: &Scale) -> Outcome {
    let words = skein_words(s);
    for b in &words {
        let p = sym(b, 1)?;
        let k = homfly_skein(b).map_err(|e| e.to_string())?;
        if p != k {
            return Err(format!("{b}: state sum and skein differ"));
        }
    }
    Ok(format!("{} words", words.len()))
}

fn c6_moy(s: &Scale) -> Outcome {
    let mut cases = vec![("1 1", 1), ("1 1", 2), ("1 1 1", 1), ("1 1 1", 2)];
    if s.deep {
        cases.extend([("-1 -1", 2), ("1 -2 1 -2", 1)]);
    }
    let ns: Vec<u32> = if s.deep { vec![1, 2, 3, 4] } else { vec![2, 3] };
    for (w, r) in &cases {
        let rep = crosscheck(&word(w), *r, &ns, &EvalOptions::default());
        if let Some(bad) = rep.pairs.iter().find(|p| !p.equal) {
            return Err(format!("{w}, r = {r}: {} ({})", bad.pair, bad.difference.clone().unwrap_or_default()));
        }
    }
    Ok(format!("{} (word, r) pairs, N in {ns:?}", cases.len()))
}

fn c7_bounds(s: &Scale) -> Outcome {
    let mut cases: Vec<(BraidWord, u32)> = vec![(word("1 1"), 1)];
    cases.extend(t2_cases(s).into_iter().map(|(c, r)| (power_word(c), r)));
    cases.extend(skein_words(s).into_iter().map(|b| (b, 1)));
    for (b, r) in &cases {
        let rep = bounds_for(stats(b), *r, &sym(b, *r)?).map_err(|e| e.to_string())?;
        if !rep.all_satisfied() {
            return Err(format!("{b}, r = {r}: {rep:?}"));
        }
        if b.is_positive() && !b.is_empty() && (!rep.a_attained || rep.q_lower_satisfied != Some(true)) {
            return Err(format!("{b}, r = {r}: positive word misses attainment or the lower bound"));
        }
        if b.strands() == 2 && b.is_positive() && !b.is_empty() {
            let c = b.len() as i64;
            let want = HalfInt::from_twice(*r as i64 * (c - 2));
            if rep.q_actual != want {
                return Err(format!("{b}, r = {r}: maxdeg_q = {} instead of {want}", rep.q_actual));
            }
        }
    }
    Ok(format!("{} polynomials", cases.len()))
}

fn c8_head(s: &Scale) -> Outcome {
    let mut cases: Vec<(&str, u32)> = Vec::new();
    for w in ["1", "1 1", "1 1 1", "1 1 1 1 1"] {
        cases.extend([(w, 1), (w, 2), (w, 3)]);
    }
    cases.extend([("1 2 1 2 1 2", 1), ("1 2 1 2 1 2", 2)]);
    if s.deep {
        cases.extend([("1 1", 4), ("1 1 1", 4), ("1 2 1 2", 3)]);
    }
    let opts = EvalOptions::default();
    for (w, r) in &cases {
        let b = word(w);
        let on = head(&b, *r, true, &opts).map_err(|e| format!("{w}, r = {r}: {e}"))?;
        let off = head(&b, *r, false, &opts).map_err(|e| format!("{w}, r = {r}: {e}"))?;
        if on.slices != off.slices || on.prune_agrees == Some(false) {
            return Err(format!("{w}, r = {r}: prune on/off differ"));
        }
        if !on.matches_unknot_series {
            return Err(format!("{w}, r = {r}: head {:?} is not the unknot series", on.head_coeffs));
        }
        if b.strands() == 2 && on.matches_twobraid_form != Some(true) {
            return Err(format!("{w}, r = {r}: head differs from the finite 2-braid form"));
        }
    }
    Ok(format!("{} (word, r) pairs", cases.len()))
}

fn c9_negative_head(s: &Scale) -> Outcome {
    let mut cases = vec![(-2, 1), (-2, 2), (-3, 1), (-3, 2)];
    if s.deep {
        cases.extend([(-4, 2), (-3, 3)]);
    }
    let mut bad = Vec::new();
    for &(c, r) in &cases {
        let rep = negative_twobraid_check(c, r, r as usize).map_err(|e| e.to_string())?;
        if !rep.agrees {
            bad.push(format!("c = {c}, r = {r}: {} of {} slices match", rep.matching_slices.min(r as usize), r));
        }
    }
    if bad.is_empty() {
        Ok(format!("{} (c, r) pairs", cases.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn c10_invariance(s: &Scale) -> Outcome {
    let colors: &[u32] = if s.deep { &[1, 2, 3] } else { &[1, 2] };
    let mirror_words = ["1", "1 1", "1 1 1", "1 -2 1 -2", "1 1 2 -1 2", "1 1 1 1 1"];
    let mut checked = 0;
    for w in mirror_words {
        let b = word(w);
        for &r in colors {
            if r == 3 && b.strands() > 2 {
                continue;
            }
            let p = sym(&b, r)?;
            if sym(&b.mirror(), r)? != p.invert_a().invert_q() {
                return Err(format!("{w}, r = {r}: mirror image is not P(a^-1, q^-1)"));
            }
            checked += 1;
        }
    }
    let unknot = BraidWord::new(1, vec![]).expect("unknot");
    let pairs = [
        (word("1"), unknot.clone()),
        (word("1 -2"), unknot),
        (word("3: 1 1"), word("3: 2 2")),
        (word("1 1 1 2"), word("1 1 1")),
        (word("1 1 2 -1 2"), word("1 1 2 -1 2").rotate(2)),
        (word("1 2 1"), word("2 1 2")),
    ];
    for (a, b) in &pairs {
        for &r in &colors[..2] {
            if sym(a, r)? != sym(b, r)? {
                return Err(format!("{a} and {b} differ at r = {r}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} comparisons"))
}

fn dist(v: Ratio<i64>, t: Ratio<i64>) -> Ratio<i64> {
    if v > t {
        v - t
    } else {
        t - v
    }
}

fn c11_slopes(s: &Scale) -> Outcome {
    let opts = EvalOptions::default();
    let max_r = if s.deep { 6 } else { 3 };
    let neg = slopes(&word("-1 -1"), max_r, SlopeSource::TwoBraid, &opts).map_err(|e| e.to_string())?;
    let target = Ratio::from_integer(1);
    let values: Vec<String> = neg.entries.iter().map(|e| e.slope.clone()).collect();
    // maxdeg_q = (r-1)^2 from the closed formula
    for e in &neg.entries {
        let r = e.r as i64;
        if e.value != Ratio::new((r - 1) * (r - 1), r * r) {
            return Err(format!("sigma1^-2 at r = {r}: slope {}", e.slope));
        }
    }
    if neg.entries.windows(2).any(|p| dist(p[1].value, target) >= dist(p[0].value, target)) {
        return Err(format!("sigma1^-2 slopes {values:?} do not approach 1"));
    }
    if neg.top_term_degree_matches != Some(true) {
        return Err("sigma1^-2: -c r^2/2 - 2r + 1 does not match".into());
    }
    let mut positive = vec![("1 1 1", 3), ("1 1 1 1 1", 3)];
    if s.deep {
        positive.extend([("1 1 1", 4), ("1 2 1 2", 3)]);
    }
    for (w, pos_r) in positive {
        let rep = slopes(&word(w), pos_r, SlopeSource::StateSum, &opts).map_err(|e| e.to_string())?;
        let zero = Ratio::from_integer(0);
        if rep.entries.windows(2).any(|p| dist(p[1].value, zero) >= dist(p[0].value, zero)) {
            let v: Vec<&String> = rep.entries.iter().map(|e| &e.slope).collect();
            return Err(format!("{w}: slopes {v:?} do not approach 0"));
        }
    }
    Ok(format!(
        "sigma1^-2 slopes {values:?}; -c r^2/2 - 2r + 1 matches, c_- r^2/2 + 1 matches: {}",
        neg.quadratic_degree_matches.unwrap_or(false)
    ))
}

type Check = fn(&Scale) -> Outcome;

const CHECKS: [(u8, &str, Check); 11] = [
    (1, "q-Ehrhart correctness", c1_ehrhart),
    (2, "b-independence for positive forms", c2_b_independence),
    (3, "Hopf anchor", c3_hopf),
    (4, "2-braid closed formula family", c4_t2_family),
    (5, "r = 1 skein equivalence", c5_skein),
    (6, "MOY brute-force specialization", c6_moy),
    (7, "degree bounds", c7_bounds),
    (8, "head of positive braids", c8_head),
    (9, "negative 2-braid head", c9_negative_head),
    (10, "mirror and Markov invariance", c10_invariance),
    (11, "slope data", c11_slopes),
];

pub fn run_one(id: u8, deep: bool) -> Option<CheckResult> {
    let scale = Scale { deep, posets: if deep { 40 } else { 10 }, n_max: if deep { 6 } else { 4 } };
    let (id, name, f) = CHECKS.iter().find(|c| c.0 == id)?;
    let t = Instant::now();
    let out = f(&scale);
    let millis = t.elapsed().as_millis();
    let (passed, detail) = match out {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(CheckResult { id: *id, name, passed, detail, millis })
}

pub fn run_all(deep: bool) -> Vec<CheckResult> {
    CHECKS.iter().filter_map(|c| run_one(c.0, deep)).collect()
}

/// One line per criterion. Timings are left out unless asked for, so the
/// default output is reproducible.
pub fn render(results: &[CheckResult], timings: bool) -> String {
    let mut lines: Vec<String> = results
        .iter()
        .map(|r| {
            let tag = if r.passed { "PASS" } else { "FAIL" };
            let t = if timings { format!(" [{} ms]", r.millis) } else { String::new() };
            format!("[{tag}] {:>2} {}{t}: {}", r.id, r.name, r.detail)
        })
        .collect();
    let passed = results.iter().filter(|r| r.passed).count();
    lines.push(format!("{passed}/{} criteria passed", results.len()));
    lines.join("\n")
}
