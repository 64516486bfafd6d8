//! The `miop` command line: `construct`, `recurrence` and `verify`.
//!
//! Every command prints one document `{config, results, checks, version}`.
//! Exit codes: 0 all checks pass, 1 a check or genericity condition fails,
//! 2 the configuration is invalid.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::diffop::{aibj_check, verify_intertwining};
use crate::error::Error;
use crate::exact::rational::{format_rational, parse_rational, rat};
use crate::exact::{Poly, Rational};
use crate::families::{verify_family_identities, Family, ParamPoint};
use crate::golden;
use crate::mindexed::{
    check_genericity, index_battery, leading_p, leading_xi, permutation_sign_check, IndexSet, MultiIndexed,
};
use crate::recurrence::{
    build_x, coeffs_classical, coeffs_direct, degenerate_parameter_suite, closure_checks_multi,
    theta_integrality, Intertwiners, RecurrenceTable,
};
use crate::report::{summarize, Check};
use crate::shiftalg::{
    bispectral_coeffs, bnk_nonzero, commutator_check, faithfulness_check, flat_order_observation,
    power_formulas_check, star_identities_check,
};

#[derive(Parser, Debug)]
#[command(name = "miop", version, about = "Multi-indexed orthogonal polynomials and their recurrences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build Ξ_D and P_{D,n} for n <= nmax.
    Construct(PointArgs),
    /// r_{n,k} by the direct, classical and bispectral routes.
    Recurrence(RecurrenceArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Wronskian,
    Families,
    Mindexed,
    Diffop,
    Recurrence,
    Shiftalg,
    Bnk,
}

#[derive(Args, Debug, Clone)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Also write a LaTeX fragment to this file.
    #[arg(long)]
    latex: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct PointArgs {
    /// L, J or H.
    #[arg(long)]
    family: String,
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
    /// Comma-separated seeds such as `1I,2II`; empty for the classical case.
    #[arg(long, default_value = "")]
    indices: String,
    #[arg(long, default_value_t = 8)]
    nmax: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug, Clone)]
struct RecurrenceArgs {
    #[command(flatten)]
    point: PointArgs,
    /// Coefficients of Y, ascending, comma-separated; X = ∫Ξ_D Y.
    #[arg(long = "Y", alias = "y", default_value = "1", allow_hyphen_values = true)]
    y: String,
    /// Use these ascending coefficients as X directly, admissible or not.
    #[arg(long = "raw-X", alias = "raw-x", allow_hyphen_values = true)]
    raw_x: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    /// Parameter samples per family.
    #[arg(long, default_value_t = 5)]
    samples: usize,
    #[arg(long, default_value_t = 8)]
    nmax: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[command(flatten)]
    out: Output,
}

/// The resolved configuration echoed in every document.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub indices: Option<Vec<Value>>,
    #[serde(rename = "Y", skip_serializing_if = "Option::is_none")]
    pub y: Option<Poly>,
    #[serde(rename = "raw_X", skip_serializing_if = "Option::is_none")]
    pub raw_x: Option<Poly>,
    pub nmax: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<Suite>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub format: Format,
}

#[derive(Debug, Serialize)]
pub struct Document {
    pub config: RunConfig,
    pub results: Value,
    pub checks: Vec<Check>,
    pub version: &'static str,
}

impl Document {
    fn new(config: RunConfig, results: Value, checks: Vec<Check>) -> Self {
        Document { config, results, checks, version: env!("CARGO_PKG_VERSION") }
    }

    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().all(Check::passed) {
            0
        } else {
            1
        }
    }
}

fn is_config_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_) | Error::InvalidArgument(_) | Error::InvalidIndexSet(_) | Error::UnsupportedFamily(_)
    )
}

/// Parse `args` (including the program name), run, print, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (out, res) = match &cli.command {
        Command::Construct(a) => (a.out.clone(), cmd_construct(a)),
        Command::Recurrence(a) => (a.point.out.clone(), cmd_recurrence(a)),
        Command::Verify(a) => (a.out.clone(), Ok(cmd_verify(a))),
    };
    match res {
        Ok((doc, tex)) => {
            if let Some(path) = &out.latex {
                if let Err(e) = std::fs::write(path, &tex) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            }
            match out.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&doc).expect("serializable")),
                Format::Latex => print!("{tex}"),
                Format::Text => print!("{}", render_text(&doc)),
            }
            doc.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            if is_config_error(&e) {
                2
            } else {
                1
            }
        }
    }
}

fn parse_coeffs(s: &str) -> Result<Poly, Error> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Parse(format!("bad coefficient list {s:?}")));
    }
    Poly::from_strings(&parts)
}

fn parse_point(a: &PointArgs) -> Result<ParamPoint, Error> {
    let need = |v: &Option<String>, name: &str| -> Result<Rational, Error> {
        match v {
            Some(s) => parse_rational(s),
            None => Err(Error::InvalidArgument(format!("--{name} is required for --family {}", a.family))),
        }
    };
    Ok(match a.family.parse::<Family>()? {
        Family::Hermite => ParamPoint::Hermite,
        Family::Laguerre => ParamPoint::laguerre(need(&a.g, "g")?),
        Family::Jacobi => ParamPoint::jacobi(need(&a.g, "g")?, need(&a.h, "h")?),
    })
}

fn point_config(command: &str, a: &PointArgs, d: &IndexSet) -> RunConfig {
    let indices = d.entries().iter().map(|(v, t)| json!({"v": v, "type": t.to_string()})).collect();
    RunConfig {
        command: command.into(),
        family: Some(a.family.clone()),
        g: a.g.as_deref().and_then(|s| parse_rational(s).ok()).map(|x| format_rational(&x)),
        h: a.h.as_deref().and_then(|s| parse_rational(s).ok()).map(|x| format_rational(&x)),
        indices: Some(indices),
        y: None,
        raw_x: None,
        nmax: a.nmax,
        samples: None,
        suite: None,
        seed: None,
        format: a.out.format,
    }
}

fn cmd_construct(a: &PointArgs) -> Result<(Document, String), Error> {
    let p = parse_point(a)?;
    let d: IndexSet = a.indices.parse()?;
    let config = point_config("construct", a, &d);
    let mut checks = Vec::new();
    let mi = match MultiIndexed::new(&p, &d) {
        Ok(mi) => mi,
        Err(e) if is_config_error(&e) => return Err(e),
        Err(e) => {
            checks.push(Check::fail("construct Ξ_D", e.to_string()));
            let results = json!({"point": p.to_string(), "D": d.to_string()});
            return Ok((Document::new(config, results, checks), String::new()));
        }
    };
    let genericity = check_genericity(&p, &d, a.nmax);
    checks.push(Check::from_result("genericity", genericity.clone(), "c^Ξ and c^P nonzero"));
    let xi_lead = leading_xi(&p, &d)?;
    checks.push(Check::from_bool(
        "leading coefficient of Ξ_D",
        mi.xi.lead() == xi_lead,
        format!("c^Ξ = {}", format_rational(&xi_lead)),
    ));
    let ell = mi.ell();
    let mut ps = Vec::new();
    let mut tex = format!("\\[\\Xi_{{\\mathcal{{D}}}}(\\eta) = {}\\]\n", mi.xi.latex_in("\\eta"));
    for n in 0..=a.nmax as i64 {
        let raw = mi.p_raw(n)?;
        let lead = leading_p(&p, &d, n)?;
        let expected_degree = ell + n;
        let degree = raw.degree().finite().map(|k| k as i64);
        let degenerate = degree != Some(expected_degree);
        if !degenerate {
            checks.push(Check::from_bool(
                format!("leading coefficient of P_(D,{n})"),
                raw.lead() == lead,
                format!("c^P = {}", format_rational(&lead)),
            ));
        }
        tex.push_str(&format!("\\[P_{{\\mathcal{{D}},{n}}}(\\eta) = {}\\]\n", raw.latex_in("\\eta")));
        ps.push(json!({
            "n": n,
            "degree": degree,
            "expected_degree": expected_degree,
            "leading": format_rational(&lead),
            "degenerate": degenerate,
            "coeffs": raw,
        }));
    }
    let results = json!({
        "point": p.to_string(),
        "D": d.to_string(),
        "M": d.len(),
        "ell": ell,
        "xi": mi.xi,
        "xi_leading": format_rational(&xi_lead),
        "xi_square_free": crate::recurrence::is_square_free(&mi.xi),
        "genericity": match &genericity { Ok(()) => "ok".to_string(), Err(e) => e.to_string() },
        "P": ps,
    });
    Ok((Document::new(config, results, checks), tex))
}

fn table_latex(t: &RecurrenceTable) -> String {
    let l = t.l as i64;
    let mut s = format!("\\begin{{tabular}}{{r|{}}}\n$n$", "r".repeat(2 * t.l + 1));
    for k in -l..=l {
        s.push_str(&format!(" & $k={k}$"));
    }
    s.push_str(" \\\\ \\hline\n");
    for n in 0..=t.n_max as i64 {
        s.push_str(&n.to_string());
        for k in -l..=l {
            s.push_str(&format!(" & ${}$", latex_rational(&t.r(n, k))));
        }
        s.push_str(" \\\\\n");
    }
    s.push_str("\\end{tabular}\n");
    s
}

fn latex_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        let sign = if x < &Rational::from_integer(0.into()) { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", x.numer().magnitude(), x.denom())
    }
}

fn cmd_recurrence(a: &RecurrenceArgs) -> Result<(Document, String), Error> {
    let pa = &a.point;
    let p = parse_point(pa)?;
    let d: IndexSet = pa.indices.parse()?;
    let y = parse_coeffs(&a.y)?;
    let raw_x = a.raw_x.as_deref().map(parse_coeffs).transpose()?;
    let mut config = point_config("recurrence", pa, &d);
    config.y = Some(y.clone());
    config.raw_x = raw_x.clone();
    let mut checks = Vec::new();
    let mi = match MultiIndexed::new(&p, &d) {
        Ok(mi) => mi,
        Err(e) if is_config_error(&e) => return Err(e),
        Err(e) => {
            checks.push(Check::fail("construct Ξ_D", e.to_string()));
            return Ok((Document::new(config, json!({}), checks), String::new()));
        }
    };
    let x = match &raw_x {
        Some(x) => x.clone(),
        None => build_x(&mi, &y)?,
    };
    if x.degree().finite().unwrap_or(0) == 0 {
        return Err(Error::InvalidArgument(format!("X = {x} must be nonconstant")));
    }
    let admissible = x.derivative().div_rem(&mi.xi)?.1.is_zero();
    let ops = Intertwiners::new(&mi)?;
    let theta = ops.theta(&x);
    let mut results = BTreeMap::new();
    results.insert("point", json!(p.to_string()));
    results.insert("D", json!(d.to_string()));
    results.insert("X", json!(x));
    results.insert("L", json!(x.degree().finite()));
    results.insert("admissible", json!(admissible));

    if !admissible {
        // An inadmissible X is a negative control: Θ must keep a denominator
        // (when Ξ_D has simple zeros) and the direct expansion must not close.
        let theta_rejected = matches!(theta, Err(Error::NotPolynomial(_)));
        let direct = coeffs_direct(&mi, &x, pa.nmax.max(mi.ell() as usize));
        let closure_fails = matches!(direct, Err(Error::NonzeroRemainder(_)));
        let square_free = crate::recurrence::is_square_free(&mi.xi);
        results.insert("theta", json!(match &theta { Ok(_) => "polynomial".into(), Err(e) => e.to_string() }));
        results.insert("direct", json!(match &direct { Ok(_) => "closed".into(), Err(e) => e.to_string() }));
        results.insert("expected_negative", json!(true));
        checks.push(Check::from_bool(
            "negative control",
            !square_free || (theta_rejected && closure_fails),
            format!("Θ rejected: {theta_rejected}, remainder found: {closure_fails}, Ξ square-free: {square_free}"),
        ));
        return Ok((Document::new(config, json!(results), checks), String::new()));
    }

    let theta = match theta {
        Ok(t) => t,
        Err(e) => {
            checks.push(Check::fail("Θ polynomial", e.to_string()));
            return Ok((Document::new(config, json!(results), checks), String::new()));
        }
    };
    checks.push(Check::pass("Θ polynomial", format!("order {:?}", theta.order())));
    let theta_coeffs: Vec<Poly> = theta.poly_coeffs()?;
    results.insert("theta", json!(theta_coeffs));

    let direct = coeffs_direct(&mi, &x, pa.nmax);
    let classical = coeffs_classical(&mi, &x, &theta, pa.nmax);
    let bispectral = bispectral_coeffs(&mi, &x, &theta, pa.nmax);
    let mut tables: Vec<RecurrenceTable> = Vec::new();
    let mut routes = BTreeMap::new();
    for (name, r) in [
        ("direct", direct),
        ("classical", classical),
        ("bispectral", bispectral.map(|(t, outside)| {
            results.insert("bispectral_outside_band", json!(outside));
            t
        })),
    ] {
        match r {
            Ok(t) => {
                checks.push(Check::pass(format!("{name} route"), format!("n <= {}", t.n_max)));
                routes.insert(name, json!(t));
                tables.push(t);
            }
            Err(e) => {
                checks.push(Check::fail(format!("{name} route"), e.to_string()));
                routes.insert(name, json!(e.to_string()));
            }
        }
    }
    if let Some(outside) = results.get("bispectral_outside_band").and_then(Value::as_u64) {
        checks.push(Check::from_bool(
            "bispectral entries outside the band",
            outside == 0,
            format!("{outside} nonzero"),
        ));
    }
    let agree = tables.len() == 3 && tables.windows(2).all(|w| w[0].agrees_with(&w[1]));
    checks.push(Check::from_bool("routes agree", agree, "direct, classical, bispectral"));
    results.insert("routes", json!(routes));
    results.insert("routes_agree", json!(agree));

    let golden_status = match (raw_x.is_none(), golden::detect(&p, &d, &y)) {
        (true, Some(case)) => {
            let cs: Vec<Check> = tables.iter().map(|t| golden::compare_closed_form(case, &p, t)).collect();
            let theta_ok = golden::closed_theta(case, &p).map(|c| c == theta_coeffs).unwrap_or(false);
            let ok = tables.len() == 3 && cs.iter().all(Check::passed) && theta_ok;
            checks.extend(cs);
            checks.push(Check::from_bool("Θ closed form", theta_ok, format!("{case:?} example")));
            if ok { "pass" } else { "fail" }
        }
        _ => "n/a",
    };
    results.insert("golden", json!(golden_status));

    let mut tex = format!("\\[X(\\eta) = {}\\]\n", x.latex_in("\\eta"));
    if let Some(t) = tables.first() {
        tex.push_str(&table_latex(t));
    }
    Ok((Document::new(config, json!(results), checks), tex))
}

/// Sample points from `seed`: `g` with denominator 3 or 7, `h` with 4 or 5,
/// so that `g ± h` and `g` avoid the integers and half-integers where
/// genericity can fail.
pub fn sample_points(seed: u64, samples: usize) -> (Vec<ParamPoint>, Vec<ParamPoint>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pick = |dens: [i64; 2]| {
        let q = dens[rng.gen_range(0..2)];
        loop {
            let k = rng.gen_range(q + 1..=8 * q);
            if k % q != 0 {
                return rat(k, q);
            }
        }
    };
    let l = (0..samples).map(|_| ParamPoint::laguerre(pick([3, 7]))).collect();
    let j = (0..samples).map(|_| ParamPoint::jacobi(pick([3, 7]), pick([4, 5]))).collect();
    (l, j)
}

fn flatten(name: &str, r: Result<Vec<Check>, Error>) -> Vec<Check> {
    r.unwrap_or_else(|e| vec![Check::fail(name, e.to_string())])
}

/// The checks of one suite. Index sets are those of `index_battery(2, 2)`.
pub fn run_suite(suite: Suite, seed: u64, samples: usize, n_max: usize) -> Vec<Check> {
    let (lp, jp) = sample_points(seed, samples);
    let deformable: Vec<ParamPoint> = lp.iter().chain(&jp).cloned().collect();
    let mut all: Vec<ParamPoint> = vec![ParamPoint::Hermite];
    all.extend(deformable.iter().cloned());
    let battery = index_battery(2, 2);
    let mut out = Vec::new();
    match suite {
        Suite::All => {
            for s in [
                Suite::Wronskian,
                Suite::Families,
                Suite::Mindexed,
                Suite::Diffop,
                Suite::Recurrence,
                Suite::Shiftalg,
                Suite::Bnk,
            ] {
                out.extend(run_suite(s, seed, samples, n_max));
            }
        }
        Suite::Wronskian => out.extend(crate::gauged::wronskian_identities_check(seed, 50)),
        Suite::Families => {
            for p in &all {
                out.extend(flatten(&format!("{p} family identities"), verify_family_identities(p, n_max)));
            }
        }
        Suite::Mindexed => {
            for p in &deformable {
                out.push(golden::quartic_check(p));
                for d in &battery {
                    out.push(Check::from_result(
                        format!("{p} {d} genericity"),
                        check_genericity(p, d, n_max),
                        "c^Ξ and c^P nonzero",
                    ));
                    out.extend(flatten(&format!("{p} {d} permutations"), permutation_sign_check(p, d, n_max.min(4))));
                }
            }
        }
        Suite::Diffop => {
            out.extend(aibj_check(4));
            for p in &deformable {
                for d in &battery {
                    let cs = flatten(&format!("{p} {d} intertwining"), verify_intertwining(p, d, n_max));
                    out.push(summarize(&format!("{p} {d} intertwining"), &cs));
                }
            }
        }
        Suite::Recurrence => {
            let ys = [Poly::one(), Poly::x(), Poly::from_ints(&[1, 0, 1])];
            for p in &deformable {
                for d in &battery {
                    out.extend(closure_checks_multi(p, d, &ys, n_max));
                }
                out.extend(golden_routes(p, n_max));
            }
            out.extend(degenerate_parameter_suite(n_max));
            let d: IndexSet = "1I,2II".parse().expect("valid index set");
            let lp_int: Vec<ParamPoint> = (1..=4).map(|g| ParamPoint::laguerre(rat(g, 1))).collect();
            out.extend(theta_integrality(&lp_int, &d, 8));
            let jp_int = [(2, 3), (4, 2), (5, 3), (2, 5)].map(|(g, h)| ParamPoint::jacobi(rat(g, 1), rat(h, 1)));
            out.extend(theta_integrality(&jp_int, &d, 16));
        }
        Suite::Shiftalg => {
            out.extend(star_identities_check(seed, 20));
            for p in &all {
                out.extend(flatten(&format!("{p} faithfulness"), faithfulness_check(p, n_max)));
                out.extend(flatten(&format!("{p} commutator"), commutator_check(p, n_max, n_max + 4)));
                out.extend(flatten(&format!("{p} power formulas"), power_formulas_check(p, n_max + 1)));
                if *p != ParamPoint::Hermite {
                    out.push(
                        flat_order_observation(p)
                            .map(|(_, c)| c)
                            .unwrap_or_else(|e| Check::fail(format!("{p} ♭(∂η)"), e.to_string())),
                    );
                }
            }
        }
        Suite::Bnk => {
            for p in &all {
                let name = format!("{p} b_(n,k) = 0 for 1 <= k <= n <= {n_max}");
                out.push(match bnk_nonzero(p, n_max) {
                    Ok(bad) if bad.is_empty() => Check::pass(name, "all zero"),
                    Ok(bad) => Check::fail(name, format!("nonzero at {:?}", &bad[..bad.len().min(5)])),
                    Err(e) => Check::fail(name, e.to_string()),
                });
            }
        }
    }
    out
}

/// `D = {1^I}`, `Y = 1` at `p`: all three routes against the closed forms.
fn golden_routes(p: &ParamPoint, n_max: usize) -> Vec<Check> {
    let d: IndexSet = "1I".parse().expect("valid index set");
    let Some(case) = golden::detect(p, &d, &Poly::one()) else {
        return vec![];
    };
    let run = || -> Result<Vec<Check>, Error> {
        let mi = MultiIndexed::new(p, &d)?;
        let x = build_x(&mi, &Poly::one())?;
        let theta = Intertwiners::new(&mi)?.theta(&x)?;
        let mut cs = vec![Check::from_bool(
            format!("{p} {d}: Θ closed form"),
            golden::closed_theta(case, p)? == theta.poly_coeffs()?,
            "c_0, c_1, c_2",
        )];
        let (bisp, outside) = bispectral_coeffs(&mi, &x, &theta, n_max)?;
        cs.push(Check::from_bool(format!("{p} {d}: band of ♭Θ"), outside == 0, format!("{outside} nonzero")));
        for t in [coeffs_direct(&mi, &x, n_max)?, coeffs_classical(&mi, &x, &theta, n_max)?, bisp] {
            cs.push(golden::compare_closed_form(case, p, &t));
        }
        Ok(cs)
    };
    flatten(&format!("{p} {d}: closed forms"), run())
}

fn cmd_verify(a: &VerifyArgs) -> (Document, String) {
    let config = RunConfig {
        command: "verify".into(),
        family: None,
        g: None,
        h: None,
        indices: None,
        y: None,
        raw_x: None,
        nmax: a.nmax,
        samples: Some(a.samples),
        suite: Some(a.suite),
        seed: Some(a.seed),
        format: a.out.format,
    };
    let suites: Vec<Suite> = match a.suite {
        Suite::All => vec![
            Suite::Wronskian,
            Suite::Families,
            Suite::Mindexed,
            Suite::Diffop,
            Suite::Recurrence,
            Suite::Shiftalg,
            Suite::Bnk,
        ],
        s => vec![s],
    };
    let (lp, jp) = sample_points(a.seed, a.samples);
    let mut results = BTreeMap::new();
    let mut checks = Vec::new();
    let mut tex = String::from("\\begin{tabular}{lrr}\nsuite & passed & failed \\\\ \\hline\n");
    for s in suites {
        let cs = run_suite(s, a.seed, a.samples, a.nmax);
        let passed = cs.iter().filter(|c| c.passed()).count();
        let name = serde_json::to_value(s).expect("serializable").as_str().unwrap_or("").to_string();
        tex.push_str(&format!("{name} & {passed} & {} \\\\\n", cs.len() - passed));
        results.insert(name, json!({"passed": passed, "failed": cs.len() - passed, "total": cs.len()}));
        checks.extend(cs);
    }
    tex.push_str("\\end{tabular}\n");
    let points: Vec<String> = lp.iter().chain(&jp).map(ToString::to_string).collect();
    let doc = Document::new(config, json!({"suites": results, "sample_points": points}), checks);
    (doc, tex)
}

fn render_text(doc: &Document) -> String {
    let mut s = String::new();
    for c in &doc.checks {
        let tag = if c.passed() { "PASS" } else { "FAIL" };
        s.push_str(&format!("{tag} {}: {}\n", c.name, c.detail));
    }
    let failed = doc.checks.iter().filter(|c| !c.passed()).count();
    s.push_str(&format!("{} checks, {failed} failed\n", doc.checks.len()));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(args: &[&str]) -> Value {
        let cli = Cli::try_parse_from(args).unwrap();
        let (d, _) = match &cli.command {
            Command::Construct(a) => cmd_construct(a).unwrap(),
            Command::Recurrence(a) => cmd_recurrence(a).unwrap(),
            Command::Verify(a) => cmd_verify(a),
        };
        serde_json::to_value(&d).unwrap()
    }

    #[test]
    fn construct_one_seed() {
        let v = doc(&["miop", "construct", "--family", "L", "--g", "7/3", "--indices", "1I"]);
        assert_eq!(v["results"]["xi"], json!(["17/6", "1"]));
        assert_eq!(v["results"]["ell"], json!(1));
        assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
    }

    #[test]
    fn construct_degenerate_quartic() {
        let v = doc(&["miop", "construct", "--family", "L", "--g", "-1/2", "--indices", "1I,2II", "--nmax", "4"]);
        let xi = Poly::from_strings(
            &v["results"]["xi"].as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect::<Vec<_>>(),
        )
        .unwrap();
        // η²(η-2)(η-6) up to the factor -1/2
        assert_eq!(xi.scale(&rat(-2, 1)), Poly::from_ints(&[0, 0, 12, -8, 1]));
    }

    #[test]
    fn construct_classical() {
        let v = doc(&["miop", "construct", "--family", "J", "--g", "7/3", "--h", "9/4", "--nmax", "3"]);
        assert_eq!(v["results"]["xi"], json!(["1"]));
        let p3 = ParamPoint::jacobi(rat(7, 3), rat(9, 4)).classical(3);
        assert_eq!(v["results"]["P"][3]["coeffs"], serde_json::to_value(&p3).unwrap());
    }

    #[test]
    fn recurrence_golden_and_negative() {
        let v = doc(&["miop", "recurrence", "--family", "L", "--g", "2", "--indices", "1I", "--nmax", "10"]);
        assert_eq!(v["results"]["golden"], "pass");
        assert_eq!(v["results"]["routes_agree"], true);
        let v = doc(&["miop", "recurrence", "--family", "L", "--g", "7/3", "--indices", "1I", "--raw-X", "0,1"]);
        assert_eq!(v["results"]["expected_negative"], true);
        assert!(v["results"]["theta"].as_str().unwrap().starts_with("not a polynomial"));
        assert_eq!(v["checks"][0]["status"], "pass");
    }

    #[test]
    fn config_errors_exit_2() {
        assert_eq!(run(["miop", "construct", "--family", "Q", "--g", "1"]), 2);
        assert_eq!(run(["miop", "construct", "--family", "L"]), 2);
        assert_eq!(run(["miop", "construct", "--family", "L", "--g", "1/0"]), 2);
        assert_eq!(run(["miop", "construct", "--family", "L", "--g", "2", "--indices", "1X"]), 2);
        assert_eq!(run(["miop", "frobnicate"]), 2);
    }

    #[test]
    fn samples_are_seeded() {
        assert_eq!(sample_points(3, 4).0, sample_points(3, 4).0);
        assert_ne!(sample_points(3, 4).1, sample_points(4, 4).1);
    }
}
