//! Closed forms of the one-seed examples (`D = {1^I}`, `Y = 1`) and the
//! shipped golden tables.

use serde::Deserialize;

use crate::error::Error;
use crate::exact::rational::{half, int, parse_rational, pochhammer, rat};
use crate::exact::{Poly, Rational};
use crate::families::{Family, ParamPoint};
use crate::mindexed::IndexSet;
use crate::recurrence::RecurrenceTable;
use crate::report::Check;

const EXAMPLES: &str = include_str!("../golden/examples.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoldenCase {
    Laguerre,
    Jacobi,
}

/// The built-in example matching `(family, D, Y)`, if any.
pub fn detect(p: &ParamPoint, d: &IndexSet, y: &Poly) -> Option<GoldenCase> {
    let one_seed: IndexSet = "1I".parse().ok()?;
    if d != &one_seed || y != &Poly::one() {
        return None;
    }
    match p.family() {
        Family::Laguerre => Some(GoldenCase::Laguerre),
        Family::Jacobi => Some(GoldenCase::Jacobi),
        Family::Hermite => None,
    }
}

fn nonzero(x: Rational, what: &str) -> Result<Rational, Error> {
    if x == int(0) {
        Err(Error::GenericityViolation(format!("{what} vanishes")))
    } else {
        Ok(x)
    }
}

/// Laguerre `r_{n,k}`, `|k| <= 2`, valid for `n + k >= 0`.
pub fn laguerre_r(g: &Rational, n: i64, k: i64) -> Rational {
    let n = int(n);
    let two = int(2);
    match k {
        2 => half() * pochhammer(&(&n + int(1)), 2),
        1 => -(&n + int(1)) * (&two * g + &two * &n + int(3)),
        0 => {
            (int(24) * &n * &n
                + int(4) * (int(10) * g + int(11)) * &n
                + (&two * g + int(1)) * (int(6) * g + int(13)))
                / int(8)
        }
        -1 => -half() * (&two * g + &two * &n - int(1)) * (&two * g + &two * &n + int(3)),
        -2 => rat(1, 8) * (&two * g + &two * &n - int(3)) * (&two * g + &two * &n + int(3)),
        _ => int(0),
    }
}

/// Jacobi `r_{n,k}`, `|k| <= 2`, valid for `n + k >= 0`; `a = g+h`, `b = g-h`.
pub fn jacobi_r(g: &Rational, h: &Rational, n: i64, k: i64) -> Result<Rational, Error> {
    let (a, b) = (g + h, g - h);
    let n = int(n);
    let two = int(2);
    let tg = |c: i64| &two * g + &two * &n + int(c);
    let th = |c: i64| &two * h + &two * &n + int(c);
    let a2n = |c: i64| &a + &two * &n + int(c);
    let hp = pochhammer(&(h + &n - rat(3, 2)), 2);
    Ok(match k {
        2 => {
            pochhammer(&(&n + int(1)), 2) * (&b + int(2)) * pochhammer(&(&a + &n), 2) * th(-3)
                / nonzero(pochhammer(&a2n(0), 4) * th(1), "r_(n,2) denominator")?
        }
        1 => {
            (&n + int(1)) * (&a - int(1)) * (&a + &n) * tg(3) * th(-3)
                / nonzero(pochhammer(&a2n(-1), 3) * a2n(3), "r_(n,1) denominator")?
        }
        0 => {
            let s = &two * &n * (&a + &n);
            let inner = -(&b * (&b + int(4))) * (&s - (&a - int(2)) * (&a - int(1)))
                + a2n(-1) * a2n(1) * (&s - (&a - int(2)) * (&two * &a - int(1)));
            (&b + int(2)) * inner
                / nonzero(
                    int(4) * pochhammer(&a2n(-2), 2) * pochhammer(&a2n(1), 2),
                    "r_(n,0) denominator",
                )?
        }
        -1 => {
            (&a - int(1)) * tg(-1) * tg(3) * &hp
                / nonzero(a2n(-3) * pochhammer(&a2n(-1), 3), "r_(n,-1) denominator")?
        }
        -2 => {
            (&b + int(2)) * tg(-3) * tg(3) * &hp
                / nonzero(int(4) * pochhammer(&a2n(-3), 4), "r_(n,-2) denominator")?
        }
        _ => int(0),
    })
}

/// Closed-form `r_{n,k}` for the example, with `r = 0` when `n + k < 0`.
pub fn closed_form(case: GoldenCase, p: &ParamPoint, n: i64, k: i64) -> Result<Rational, Error> {
    if n + k < 0 {
        return Ok(int(0));
    }
    match (case, p) {
        (GoldenCase::Laguerre, ParamPoint::Laguerre { g }) => Ok(laguerre_r(g, n, k)),
        (GoldenCase::Jacobi, ParamPoint::Jacobi { g, h }) => jacobi_r(g, h, n, k),
        _ => Err(Error::UnsupportedFamily(format!("no closed form for {p}"))),
    }
}

/// `Θ` coefficients `[c_0, c_1, c_2]` of the Laguerre example.
pub fn laguerre_theta(g: &Rational) -> Vec<Poly> {
    let gp = g + half();
    vec![
        Poly::new(vec![int(0), int(4) * (g + rat(3, 2)).pow(2), int(2) * (g + rat(7, 2))]),
        Poly::new(vec![int(0), int(-4) * pochhammer(&gp, 2), int(2) * (g - rat(3, 2)), int(2)]),
        Poly::new(vec![int(0), int(0), int(-4) * &gp, int(-2)]),
    ]
}

/// `Θ` coefficients `[c_0, c_1, c_2]` of the Jacobi example.
pub fn jacobi_theta(g: &Rational, h: &Rational) -> Vec<Poly> {
    let (a, b) = (g + h, g - h);
    let b2 = &b + int(2);
    let a1 = &a - int(1);
    let c2 = Poly::new(vec![int(0), int(-2) * &a1, -b2.clone(), int(2) * &a1, b2.clone()]);
    let c1 = Poly::new(vec![
        int(-2) * &a + int(2),
        int(2) * ((&a - int(2)) * &b - int(2)),
        int(2) * &a * &a + &b * &b + int(4) * g - int(4),
        (&a + int(3)) * &b2,
    ]);
    let q = int(2) * h - int(3);
    let c0 = Poly::new(vec![
        int(-4) * &a - int(4),
        int(2) * (&a * (&a + &b) + g + int(7) * h - int(5)),
        &b2 * (int(2) * g + int(7)),
    ])
    .scale(&(q / int(4)));
    vec![c0, c1, c2]
}

pub fn closed_theta(case: GoldenCase, p: &ParamPoint) -> Result<Vec<Poly>, Error> {
    match (case, p) {
        (GoldenCase::Laguerre, ParamPoint::Laguerre { g }) => Ok(laguerre_theta(g)),
        (GoldenCase::Jacobi, ParamPoint::Jacobi { g, h }) => Ok(jacobi_theta(g, h)),
        _ => Err(Error::UnsupportedFamily(format!("no closed form for {p}"))),
    }
}

/// Compare every entry of `t` (`|k| <= 2`) with the closed form.
pub fn compare_closed_form(case: GoldenCase, p: &ParamPoint, t: &RecurrenceTable) -> Check {
    let name = format!("{p} {}: {:?} route vs closed form", t.d, t.route);
    let mut bad = Vec::new();
    for n in 0..=t.n_max as i64 {
        for k in -(t.l as i64)..=t.l as i64 {
            match closed_form(case, p, n, k) {
                Ok(v) if v == t.r(n, k) => {}
                Ok(_) => bad.push((n, k)),
                Err(e) => return Check::fail(name, e.to_string()),
            }
        }
    }
    Check::from_bool(
        name,
        bad.is_empty(),
        if bad.is_empty() {
            format!("n <= {}", t.n_max)
        } else {
            format!("mismatch at {:?}", &bad[..bad.len().min(5)])
        },
    )
}

/// `-2Ξ` for Laguerre `D = {1^I, 2^II}`.
pub fn laguerre_quartic(g: &Rational) -> Poly {
    let g52 = g - rat(5, 2);
    Poly::new(vec![
        pochhammer(&g52, 4),
        int(2) * pochhammer(&g52, 2) * (int(2) * g + int(1)),
        &g52 * (int(6) * g - int(1)),
        int(2) * (int(2) * g - int(3)),
        int(1),
    ])
}

/// `64Ξ` for Jacobi `D = {1^I, 2^II}`.
pub fn jacobi_quartic(g: &Rational, h: &Rational) -> Poly {
    let (a, b) = (g + h, g - h);
    let bm = |c: i64| &b - int(c);
    let a1 = &a - int(1);
    let aa2 = &a * (&a - int(2));
    Poly::new(vec![
        a.pow(3) * (&a - int(4)) + int(2) * &a * &a * bm(3) - int(4) * &a * bm(5) - bm(3) * bm(1),
        int(4) * &a1 * bm(1) * (&aa2 + bm(3)),
        int(2) * bm(1) * (&aa2 * (int(3) * &b - int(4)) + (&b + int(4)) * bm(3)),
        int(4) * &a1 * bm(3) * bm(1) * &b,
        bm(4) * bm(3) * bm(1) * (&b + int(2)),
    ])
}

/// Computed `Ξ_{1^I,2^II}` against the displayed quartic.
pub fn quartic_check(p: &ParamPoint) -> Check {
    let d: IndexSet = "1I,2II".parse().expect("valid index set");
    let name = format!("{p} quartic Ξ_{d}");
    let (scale, want) = match p {
        ParamPoint::Laguerre { g } => (int(-2), laguerre_quartic(g)),
        ParamPoint::Jacobi { g, h } => (int(64), jacobi_quartic(g, h)),
        ParamPoint::Hermite => return Check::fail(name, "no quartic for Hermite"),
    };
    match crate::mindexed::xi_poly(p, &d) {
        Ok(xi) => Check::from_bool(name, xi.scale(&scale) == want, format!("Ξ = {}", xi.display_in("η"))),
        Err(e) => Check::fail(name, e.to_string()),
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenTable {
    pub g: String,
    #[serde(default)]
    pub h: Option<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenSet {
    pub k_range: [i64; 2],
    pub cases: Vec<GoldenTable>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenQuartic {
    pub g: String,
    pub minus_two_xi: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenExamples {
    pub laguerre_one_seed: GoldenSet,
    pub jacobi_one_seed: GoldenSet,
    pub laguerre_two_seed_degenerate: Vec<GoldenQuartic>,
}

pub fn golden_examples() -> Result<GoldenExamples, Error> {
    serde_json::from_str(EXAMPLES).map_err(|e| Error::Parse(e.to_string()))
}

impl GoldenTable {
    pub fn point(&self) -> Result<ParamPoint, Error> {
        let g = parse_rational(&self.g)?;
        Ok(match &self.h {
            Some(h) => ParamPoint::jacobi(g, parse_rational(h)?),
            None => ParamPoint::laguerre(g),
        })
    }

    /// `t` agrees with every shipped row (`k` from `k_range[0]`).
    pub fn matches(&self, k_lo: i64, t: &RecurrenceTable) -> Result<bool, Error> {
        for (n, row) in self.rows.iter().enumerate().take(t.n_max + 1) {
            for (i, s) in row.iter().enumerate() {
                if parse_rational(s)? != t.r(n as i64, k_lo + i as i64) {
                    return Ok(false);
                }
            }
        }
        Ok(self.rows.len() > t.n_max)
    }
}

impl GoldenQuartic {
    pub fn poly(&self) -> Result<Poly, Error> {
        Poly::from_strings(&self.minus_two_xi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rust_closed_forms_match_shipped_tables() {
        let gx = golden_examples().unwrap();
        for set in [&gx.laguerre_one_seed, &gx.jacobi_one_seed] {
            for case in &set.cases {
                let p = case.point().unwrap();
                let kind = if case.h.is_some() { GoldenCase::Jacobi } else { GoldenCase::Laguerre };
                for (n, row) in case.rows.iter().enumerate() {
                    for (i, s) in row.iter().enumerate() {
                        let k = set.k_range[0] + i as i64;
                        let v = closed_form(kind, &p, n as i64, k).unwrap();
                        assert_eq!(parse_rational(s).unwrap(), v, "{p} n={n} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn quartics() {
        for g in [rat(7, 3), rat(9, 4), rat(-5, 7)] {
            assert!(quartic_check(&ParamPoint::laguerre(g)).passed());
        }
        for (g, h) in [(rat(7, 3), rat(9, 4)), (rat(13, 5), rat(7, 2)), (rat(-2, 7), rat(11, 5))] {
            assert!(quartic_check(&ParamPoint::jacobi(g, h)).passed());
        }
    }

    #[test]
    fn detection() {
        let p = ParamPoint::laguerre(int(2));
        assert_eq!(detect(&p, &"1I".parse().unwrap(), &Poly::one()), Some(GoldenCase::Laguerre));
        assert_eq!(detect(&p, &"2I".parse().unwrap(), &Poly::one()), None);
        assert_eq!(detect(&p, &"1I".parse().unwrap(), &Poly::x()), None);
    }
}
