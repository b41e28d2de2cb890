//! Argument handling and dispatch for the `homfly` binary.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use homfly::algebra::json::to_json_string;
use homfly::algebra::render::{laurent_to_string, linkpoly_to_string, ratfunc_to_string};
use homfly::algebra::LinkPoly;
use homfly::analysis::{bounds, head, slopes, BoundsReport, HeadReport, SlopeReport, SlopeSource};
use homfly::diagram::{parse_braid, BraidWord};
use homfly::oracles::t2_formula;
use homfly::qehrhart::{ehrhart, reciprocity_sides, weighted_count, Polytope, PosetFile};
use homfly::statesum::{antisym_homfly, colored_homfly_with, EvalOptions};

pub mod selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SELFTEST: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "homfly", version, about = "Exact colored HOMFLY polynomials of braid closures")]
pub struct Cli {
    /// Evaluate resolutions on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Colored HOMFLY polynomial of a braid closure.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        color: u32,
        /// Use the anti-symmetric state sum.
        #[arg(long)]
        antisymmetric: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// q-Ehrhart polynomial of an order polytope with a linear form.
    Ehrhart {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long, value_name = "N")]
        check_reciprocity: Option<u32>,
        #[arg(long)]
        check_b_independence: bool,
    },
    /// Degree bounds against the computed polynomial.
    Bounds {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        color: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Normalized head of a positive braid closure.
    Head {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        color: u32,
        #[arg(long)]
        no_prune: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// `maxdeg_q P_r / r^2` for r = 1..R.
    Slopes {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_color: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Independent reference values.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Run the acceptance checks.
    Selftest {
        /// Larger parameter ranges.
        #[arg(long)]
        deep: bool,
        /// Append wall time per criterion.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// Closed formula for the closure of σ1^c.
    T2 {
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        color: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Why a command failed; maps onto the exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Computation(String),
    Selftest(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Computation(_) => EXIT_COMPUTATION,
            Failure::Selftest(_) => EXIT_SELFTEST,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Computation(m) | Failure::Selftest(m) => m,
        }
    }
}

fn computation<E: std::fmt::Display>(what: &str) -> impl FnOnce(E) -> Failure + '_ {
    move |e| Failure::Computation(format!("{what}: {e}"))
}

fn braid_arg(text: &str) -> Result<BraidWord, Failure> {
    parse_braid(text).map_err(|e| Failure::Usage(format!("invalid braid {text:?}: {e}")))
}

fn poly_out(p: &LinkPoly, format: Format) -> String {
    match format {
        Format::Text => linkpoly_to_string(p),
        Format::Json => to_json_string(p),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn bounds_text(b: &BraidWord, rep: &BoundsReport) -> String {
    let mut s = String::new();
    let yes = |v: bool| if v { "yes" } else { "no" };
    let _ = writeln!(s, "braid {b}, r = {}", rep.r);
    let st = &rep.stats;
    let _ = writeln!(s, "crossings c+ = {}, c- = {}; Seifert circles s+ = {}, s- = {}", st.c_plus, st.c_minus, st.s_plus, st.s_minus);
    let _ = writeln!(
        s,
        "maxdeg_a = {} (bound {}, satisfied {}, attained {})",
        rep.a_actual,
        rep.a_bound,
        yes(rep.a_satisfied),
        yes(rep.a_attained)
    );
    let _ = writeln!(s, "maxdeg_q = {} (upper bound {}, satisfied {})", rep.q_actual, rep.q_upper, yes(rep.q_upper_satisfied));
    if let (Some(l), Some(ok), Some(eq)) = (rep.q_lower_positive, rep.q_lower_satisfied, rep.q_lower_equality) {
        let _ = writeln!(s, "positive lower bound {} (satisfied {}, equality {})", l, yes(ok), yes(eq));
    }
    let _ = write!(s, "top coefficient {}", rep.top_coefficient);
    s
}

fn head_text(b: &BraidWord, rep: &HeadReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "braid {b}, r = {}", rep.r);
    let _ = writeln!(s, "d_r = {}, f_r = {}, sign = {}", rep.d_r, rep.f_r, rep.sign);
    for (j, c) in rep.head_coeffs.iter().enumerate() {
        let _ = writeln!(s, "c{j} = {c}");
    }
    let _ = writeln!(s, "pruned: {}", rep.pruned);
    if let Some(ok) = rep.prune_agrees {
        let _ = writeln!(s, "prune agrees: {ok}");
    }
    if let Some(ok) = rep.matches_twobraid_form {
        let _ = writeln!(s, "matches 2-braid form: {ok}");
    }
    let _ = write!(s, "matches unknot series: {}", rep.matches_unknot_series);
    s
}

fn slopes_text(rep: &SlopeReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "braid {}", rep.braid);
    for e in &rep.entries {
        let _ = write!(s, "r = {}: maxdeg_q = {}, slope = {}", e.r, e.maxdeg_q, e.slope);
        if let Some(d) = &e.delta {
            let _ = write!(s, ", delta = {d}");
        }
        let _ = writeln!(s);
    }
    if let Some(m) = rep.top_term_degree_matches {
        let _ = writeln!(s, "-c r^2/2 - 2r + 1 matches: {m}");
    }
    if let Some(m) = rep.quadratic_degree_matches {
        let _ = writeln!(s, "c_- r^2/2 + 1 matches: {m}");
    }
    s.trim_end().to_string()
}

fn ehrhart_cmd(path: &PathBuf, recip: Option<u32>, b_indep: bool) -> Result<String, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let (poset, form) = PosetFile::parse(&text).map_err(|e| Failure::Usage(format!("invalid poset file {}: {e}", path.display())))?;
    let q = Polytope::Order(poset);
    let e = ehrhart(&q, &form).map_err(computation("ehrhart"))?;
    let mut out = String::new();
    let _ = writeln!(out, "E = {e}");
    let mut failed = Vec::new();
    if let Some(n) = recip {
        let w = weighted_count(&q, &form, n, false).map_err(computation("lattice count"))?;
        let wi = weighted_count(&q, &form, n, true).map_err(computation("lattice count"))?;
        let _ = writeln!(out, "W({n}) = {}", laurent_to_string(&w, "q"));
        let _ = writeln!(out, "interior W({n}) = {}", laurent_to_string(&wi, "q"));
        let (lhs, rhs) = reciprocity_sides(&q, &form, n).map_err(computation("reciprocity"))?;
        if lhs == rhs {
            let _ = writeln!(out, "reciprocity: ok");
        } else {
            let _ = writeln!(out, "reciprocity: FAILED ({} vs {})", ratfunc_to_string(&lhs), ratfunc_to_string(&rhs));
            failed.push("reciprocity");
        }
    }
    if b_indep {
        let indep = e.is_b_independent();
        let positive = form.is_strictly_positive();
        let _ = writeln!(out, "b-independent: {}", if indep { "yes" } else { "no" });
        if positive && !indep {
            failed.push("b-independence for a strictly positive form");
        } else if !positive {
            let _ = writeln!(out, "(form is not strictly positive; b-dependence is allowed)");
        }
    }
    let out = out.trim_end().to_string();
    if failed.is_empty() {
        Ok(out)
    } else {
        Err(Failure::Computation(format!("{out}\ncheck failed: {}", failed.join(", "))))
    }
}

/// Runs one parsed command and returns its standard output.
pub fn dispatch(cli: &Cli) -> Result<String, Failure> {
    let mut opts = EvalOptions::from_env();
    if cli.sequential {
        opts = opts.sequential();
    }
    match &cli.command {
        Command::Eval { braid, color, antisymmetric, format } => {
            let b = braid_arg(braid)?;
            let p = if *antisymmetric {
                antisym_homfly(&b, *color, &opts)
            } else {
                colored_homfly_with(&b, *color, &opts)
            }
            .map_err(computation(braid))?;
            Ok(poly_out(&p, *format))
        }
        Command::Ehrhart { poset, check_reciprocity, check_b_independence } => {
            ehrhart_cmd(poset, *check_reciprocity, *check_b_independence)
        }
        Command::Bounds { braid, color, format } => {
            let b = braid_arg(braid)?;
            let rep = bounds(&b, *color, &opts).map_err(computation(braid))?;
            Ok(match format {
                Format::Text => bounds_text(&b, &rep),
                Format::Json => json(&rep),
            })
        }
        Command::Head { braid, color, no_prune, format } => {
            let b = braid_arg(braid)?;
            if !b.is_positive() {
                return Err(Failure::Usage(format!("head needs a positive braid word, got {braid:?}")));
            }
            let rep = head(&b, *color, !no_prune, &opts).map_err(computation(braid))?;
            Ok(match format {
                Format::Text => head_text(&b, &rep),
                Format::Json => json(&rep),
            })
        }
        Command::Slopes { braid, max_color, format } => {
            let b = braid_arg(braid)?;
            let source = if b.strands() == 2 { SlopeSource::TwoBraid } else { SlopeSource::StateSum };
            let rep = slopes(&b, *max_color, source, &opts).map_err(computation(braid))?;
            Ok(match format {
                Format::Text => slopes_text(&rep),
                Format::Json => json(&rep),
            })
        }
        Command::Oracle { which: OracleCommand::T2 { c, color, format } } => {
            let p = t2_formula(*c, *color).map_err(|e| Failure::Computation(format!("t2 at c = {c}: {e}")))?;
            Ok(poly_out(&p, *format))
        }
        Command::Selftest { deep, timings } => {
            let results = selftest::run_all(*deep);
            let text = selftest::render(&results, *timings);
            if results.iter().all(|r| r.passed) {
                Ok(text)
            } else {
                Err(Failure::Selftest(text))
            }
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// to `out`/`err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            EXIT_OK
        }
        Err(Failure::Selftest(text)) => {
            let _ = writeln!(out, "{text}");
            let _ = writeln!(err, "selftest failed");
            EXIT_SELFTEST
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}
