//! Classical Hermite, Laguerre and Jacobi data: polynomials, three-term
//! recurrences, energies, virtual-state seeds and derivative expansions.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::exact::basis::expand_in_basis;
use crate::exact::rational::{binomial, factorial, half, int, pow_neg_one, pow_rational, rat};
use crate::exact::{pochhammer, Poly, Rational};
use crate::gauged::{Gauge, GaugedFn};
use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    Hermite,
    Laguerre,
    Jacobi,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Hermite => "H",
            Family::Laguerre => "L",
            Family::Jacobi => "J",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "H" | "h" | "hermite" | "Hermite" => Ok(Family::Hermite),
            "L" | "l" | "laguerre" | "Laguerre" => Ok(Family::Laguerre),
            "J" | "j" | "jacobi" | "Jacobi" => Ok(Family::Jacobi),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SeedType {
    I,
    II,
}

impl fmt::Display for SeedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeedType::I => "I",
            SeedType::II => "II",
        })
    }
}

/// `H_n` by its three-term recurrence.
pub fn hermite(n: i64) -> Poly {
    if n < 0 {
        return Poly::zero();
    }
    let two_x = Poly::from_ints(&[0, 2]);
    let (mut prev, mut cur) = (Poly::zero(), Poly::one());
    for k in 0..n {
        let next = &(&two_x * &cur) - &prev.scale(&int(2 * k));
        prev = cur;
        cur = next;
    }
    cur
}

/// `L^{(α)}_n(x) = Σ_k C(n+α, n-k) (-x)^k / k!`.
pub fn laguerre(alpha: &Rational, n: i64) -> Poly {
    if n < 0 {
        return Poly::zero();
    }
    let n = n as usize;
    let top = alpha + int(n as i64);
    let c = (0..=n)
        .map(|k| binomial(&top, n - k) * pow_neg_one(k as i64) / factorial(k))
        .collect();
    Poly::new(c)
}

/// `P^{(α,β)}_n(x) = Σ_s C(n+α, n-s) C(n+β, s) ((x-1)/2)^s ((x+1)/2)^{n-s}`.
pub fn jacobi(alpha: &Rational, beta: &Rational, n: i64) -> Poly {
    if n < 0 {
        return Poly::zero();
    }
    let n = n as usize;
    let minus = Poly::new(vec![rat(-1, 2), half()]);
    let plus = Poly::new(vec![half(), half()]);
    let mut pm = vec![Poly::one()];
    let mut pp = vec![Poly::one()];
    for k in 0..n {
        pm.push(&pm[k] * &minus);
        pp.push(&pp[k] * &plus);
    }
    let ta = alpha + int(n as i64);
    let tb = beta + int(n as i64);
    let mut out = Poly::zero();
    for s in 0..=n {
        let coef = binomial(&ta, n - s) * binomial(&tb, s);
        out += &(&pm[s] * &pp[n - s]).scale(&coef);
    }
    out
}

fn ratio(num: Rational, den: Rational, what: impl FnOnce() -> String) -> Result<Rational, Error> {
    if den.is_zero() {
        Err(Error::GenericityViolation(format!("zero denominator in {}", what())))
    } else {
        Ok(num / den)
    }
}

/// A family together with concrete parameter values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ParamPoint {
    Hermite,
    Laguerre { g: Rational },
    Jacobi { g: Rational, h: Rational },
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamPoint::Hermite => write!(f, "H"),
            ParamPoint::Laguerre { g } => write!(f, "L(g={g})"),
            ParamPoint::Jacobi { g, h } => write!(f, "J(g={g}, h={h})"),
        }
    }
}

impl ParamPoint {
    pub fn laguerre(g: Rational) -> Self {
        ParamPoint::Laguerre { g }
    }

    pub fn jacobi(g: Rational, h: Rational) -> Self {
        ParamPoint::Jacobi { g, h }
    }

    pub fn family(&self) -> Family {
        match self {
            ParamPoint::Hermite => Family::Hermite,
            ParamPoint::Laguerre { .. } => Family::Laguerre,
            ParamPoint::Jacobi { .. } => Family::Jacobi,
        }
    }

    pub fn g(&self) -> Option<&Rational> {
        match self {
            ParamPoint::Hermite => None,
            ParamPoint::Laguerre { g } | ParamPoint::Jacobi { g, .. } => Some(g),
        }
    }

    pub fn h(&self) -> Option<&Rational> {
        match self {
            ParamPoint::Jacobi { h, .. } => Some(h),
            _ => None,
        }
    }

    /// `α = g - 1/2`; zero for Hermite.
    pub fn alpha(&self) -> Rational {
        self.g().map(|g| g - half()).unwrap_or_else(Rational::zero)
    }

    /// `β = h - 1/2`; zero unless Jacobi.
    pub fn beta(&self) -> Rational {
        self.h().map(|h| h - half()).unwrap_or_else(Rational::zero)
    }

    fn unsupported(&self, what: &str) -> Error {
        Error::UnsupportedFamily(format!("{what} is not defined for {}", self.family()))
    }

    pub fn classical(&self, n: i64) -> Poly {
        match self {
            ParamPoint::Hermite => hermite(n),
            ParamPoint::Laguerre { .. } => laguerre(&self.alpha(), n),
            ParamPoint::Jacobi { .. } => jacobi(&self.alpha(), &self.beta(), n),
        }
    }

    /// Leading coefficient `c_n` of `P_n`.
    pub fn leading(&self, n: i64) -> Rational {
        if n < 0 {
            return Rational::zero();
        }
        let nu = n as usize;
        match self {
            ParamPoint::Hermite => pow_rational(&int(2), n),
            ParamPoint::Laguerre { .. } => pow_neg_one(n) / factorial(nu),
            ParamPoint::Jacobi { g, h } => {
                pochhammer(&(g + h + int(n)), nu) / (pow_rational(&int(2), n) * factorial(nu))
            }
        }
    }

    /// `A_n` with the convention `A_{-1} = 0`.
    pub fn rec_a(&self, n: i64) -> Result<Rational, Error> {
        if n < 0 {
            return Ok(Rational::zero());
        }
        let nn = int(n);
        match self {
            ParamPoint::Hermite => Ok(half()),
            ParamPoint::Laguerre { .. } => Ok(-(nn + int(1))),
            ParamPoint::Jacobi { .. } => {
                let (a, b) = (self.alpha(), self.beta());
                let s = &a + &b;
                let num = int(2) * (&nn + int(1)) * (&nn + &s + int(1));
                let den = (int(2) * &nn + &s + int(1)) * (int(2) * &nn + &s + int(2));
                ratio(num, den, || format!("A_{n}"))
            }
        }
    }

    pub fn rec_b(&self, n: i64) -> Result<Rational, Error> {
        if n < 0 {
            return Ok(Rational::zero());
        }
        let nn = int(n);
        match self {
            ParamPoint::Hermite => Ok(Rational::zero()),
            ParamPoint::Laguerre { .. } => Ok(int(2) * nn + self.alpha() + int(1)),
            ParamPoint::Jacobi { .. } => {
                let (a, b) = (self.alpha(), self.beta());
                let s = &a + &b;
                if n == 0 {
                    // The common factor α+β cancels at n = 0.
                    return ratio(&b - &a, &s + int(2), || "B_0".to_string());
                }
                let num = &b * &b - &a * &a;
                let den = (int(2) * &nn + &s) * (int(2) * &nn + &s + int(2));
                ratio(num, den, || format!("B_{n}"))
            }
        }
    }

    pub fn rec_c(&self, n: i64) -> Result<Rational, Error> {
        if n < 0 {
            return Ok(Rational::zero());
        }
        let nn = int(n);
        match self {
            ParamPoint::Hermite => Ok(nn),
            ParamPoint::Laguerre { .. } => Ok(-(nn + self.alpha())),
            ParamPoint::Jacobi { .. } => {
                let (a, b) = (self.alpha(), self.beta());
                let s = &a + &b;
                let num = int(2) * (&nn + &a) * (&nn + &b);
                let den = (int(2) * &nn + &s) * (int(2) * &nn + &s + int(1));
                ratio(num, den, || format!("C_{n}"))
            }
        }
    }

    /// Eigenvalue `E_n`.
    pub fn energy(&self, n: i64) -> Result<Rational, Error> {
        match self {
            ParamPoint::Hermite => Err(self.unsupported("energy")),
            ParamPoint::Laguerre { .. } => Ok(int(4 * n)),
            ParamPoint::Jacobi { g, h } => Ok(int(4 * n) * (int(n) + g + h)),
        }
    }

    /// Virtual energy `Ẽ^t_v`.
    pub fn virtual_energy(&self, v: i64, t: SeedType) -> Result<Rational, Error> {
        let vv = int(v);
        match (self, t) {
            (ParamPoint::Hermite, _) => Err(self.unsupported("virtual energy")),
            (ParamPoint::Laguerre { g }, SeedType::I) => Ok(int(-4) * (g + &vv + half())),
            (ParamPoint::Laguerre { g }, SeedType::II) => Ok(int(-4) * (g - &vv - half())),
            (ParamPoint::Jacobi { g, h }, SeedType::I) => {
                Ok(int(-4) * (g + &vv + half()) * (h - &vv - half()))
            }
            (ParamPoint::Jacobi { g, h }, SeedType::II) => {
                Ok(int(-4) * (g - &vv - half()) * (h + &vv + half()))
            }
        }
    }

    pub fn c_f(&self) -> Result<Rational, Error> {
        match self {
            ParamPoint::Hermite => Err(self.unsupported("c_F")),
            ParamPoint::Laguerre { .. } => Ok(int(2)),
            ParamPoint::Jacobi { .. } => Ok(int(-4)),
        }
    }

    /// The point `λ + δ`.
    pub fn shifted(&self) -> ParamPoint {
        self.lambda_shift(1, 1, 1)
    }

    fn lambda_shift(&self, dg: i64, dh: i64, k: i64) -> ParamPoint {
        match self {
            ParamPoint::Hermite => ParamPoint::Hermite,
            ParamPoint::Laguerre { g } => ParamPoint::Laguerre { g: g + int(dg * k) },
            ParamPoint::Jacobi { g, h } => ParamPoint::Jacobi { g: g + int(dg * k), h: h + int(dh * k) },
        }
    }

    /// `λ^{[s_I, s_II]} = λ + s_I δ̃^I + s_II δ̃^II`.
    pub fn virtual_shift(&self, s1: i64, s2: i64) -> ParamPoint {
        match self {
            ParamPoint::Hermite => ParamPoint::Hermite,
            ParamPoint::Laguerre { g } => ParamPoint::Laguerre { g: g + int(s1 - s2) },
            ParamPoint::Jacobi { g, h } => {
                ParamPoint::Jacobi { g: g + int(s1 - s2), h: h + int(s2 - s1) }
            }
        }
    }

    /// The twisted point `t^I(λ)` or `t^II(λ)`.
    pub fn twisted(&self, t: SeedType) -> Result<ParamPoint, Error> {
        match (self, t) {
            (ParamPoint::Laguerre { g }, SeedType::II) => Ok(ParamPoint::Laguerre { g: int(1) - g }),
            (ParamPoint::Jacobi { g, h }, SeedType::I) => {
                Ok(ParamPoint::Jacobi { g: g.clone(), h: int(1) - h })
            }
            (ParamPoint::Jacobi { g, h }, SeedType::II) => {
                Ok(ParamPoint::Jacobi { g: int(1) - g, h: h.clone() })
            }
            _ => Err(self.unsupported(&format!("twist of type {t}"))),
        }
    }

    /// Leading coefficient `c^t_v` of the seed polynomial part.
    pub fn c_virtual(&self, v: i64, t: SeedType) -> Result<Rational, Error> {
        match (self, t) {
            (ParamPoint::Laguerre { .. }, SeedType::I) => Ok(pow_neg_one(v) * self.leading(v)),
            (ParamPoint::Hermite, _) => Err(self.unsupported("virtual seeds")),
            _ => Ok(self.twisted(t)?.leading(v)),
        }
    }

    /// The seed `μ_v` of type `t`.
    pub fn seed_mu(&self, v: i64, t: SeedType) -> Result<GaugedFn, Error> {
        if v < 1 {
            return Err(Error::InvalidIndexSet(format!("seed degree {v} < 1")));
        }
        let (a, b) = (self.alpha(), self.beta());
        match (self, t) {
            (ParamPoint::Hermite, _) => Err(self.unsupported("virtual seeds")),
            (ParamPoint::Laguerre { .. }, SeedType::I) => {
                let p = laguerre(&a, v).compose(&Poly::from_ints(&[0, -1]));
                Ok(GaugedFn::with_gauge(Gauge::exp(1), p))
            }
            (ParamPoint::Laguerre { .. }, SeedType::II) => {
                let p = laguerre(&-a.clone(), v);
                Ok(GaugedFn::with_gauge(Gauge::eta(-a), p))
            }
            (ParamPoint::Jacobi { .. }, SeedType::I) => {
                let p = jacobi(&a, &-b.clone(), v);
                Ok(GaugedFn::with_gauge(Gauge::one_plus(-b), p))
            }
            (ParamPoint::Jacobi { .. }, SeedType::II) => {
                let p = jacobi(&-a.clone(), &b, v);
                Ok(GaugedFn::with_gauge(Gauge::one_minus(-a), p))
            }
        }
    }

    /// `f_n` of the single-step forward relation.
    pub fn f_n(&self, n: i64) -> Result<Rational, Error> {
        match self {
            ParamPoint::Hermite => Err(self.unsupported("f_n")),
            ParamPoint::Laguerre { .. } => Ok(int(-2)),
            ParamPoint::Jacobi { g, h } => Ok(int(-2) * (int(n) + g + h)),
        }
    }

    /// `b_{n-1}` of the single-step backward relation.
    pub fn b_prev(&self, n: i64) -> Result<Rational, Error> {
        match self {
            ParamPoint::Hermite => Err(self.unsupported("b_n")),
            _ => Ok(int(-2 * n)),
        }
    }

    /// `c_1(η; λ)` of the (confluent) hypergeometric equation.
    pub fn c1(&self) -> Result<Poly, Error> {
        match self {
            ParamPoint::Hermite => Err(self.unsupported("c_1")),
            ParamPoint::Laguerre { g } => Ok(Poly::new(vec![g + half(), int(-1)])),
            ParamPoint::Jacobi { g, h } => Ok(Poly::new(vec![h - g, -(g + h + int(1))])),
        }
    }

    pub fn c2(&self) -> Result<Poly, Error> {
        match self {
            ParamPoint::Hermite => Err(self.unsupported("c_2")),
            ParamPoint::Laguerre { .. } => Ok(Poly::x()),
            ParamPoint::Jacobi { .. } => Ok(Poly::from_ints(&[1, 0, -1])),
        }
    }

    /// `(α_n, β_n, γ_n)` of the Jacobi parameter-raising identity.
    pub fn jacobi_abg(&self, n: i64) -> Result<(Rational, Rational, Rational), Error> {
        if self.family() != Family::Jacobi {
            return Err(self.unsupported("Jacobi raising coefficients"));
        }
        let (a, b) = (self.alpha(), self.beta());
        let s = &a + &b;
        let nn = int(n);
        let two_n = int(2 * n);
        let al = ratio(
            (&two_n + &s + int(1)) * (&two_n + &s + int(2)),
            (&nn + &s + int(1)) * (&nn + &s + int(2)),
            || format!("alpha_{n}"),
        )?;
        let be = ratio(
            (&b - &a) * (&two_n + &s + int(1)),
            (&nn + &s + int(2)) * (&two_n + &s),
            || format!("beta_{n}"),
        )?;
        let ga = ratio(
            (&nn + &a) * (&nn + &b) * (&two_n + &s + int(2)),
            (&nn + &s + int(1)) * (&nn + &s + int(2)) * (&two_n + &s),
            || format!("gamma_{n}"),
        )?;
        Ok((al, be, ga))
    }
}

/// Derivative expansion `∂P_n = Σ_k c_{n,k} P_{n-k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnkTable {
    pub family: Family,
    pub n_max: usize,
    /// `c[n][k]` for `0 <= k <= n`.
    pub c: Vec<Vec<Rational>>,
    /// Jacobi only: `a[n][k] = a^{(α,β)}_{n,k}` for `0 <= k <= n < n_max`.
    pub a: Option<Vec<Vec<Rational>>>,
}

impl CnkTable {
    /// `c_{n,k}`, zero outside `1 <= k <= n <= n_max`.
    pub fn get(&self, n: i64, k: i64) -> Rational {
        if n < 0 || k < 1 || k > n || n as usize > self.n_max {
            return Rational::zero();
        }
        self.c[n as usize][k as usize].clone()
    }
}

/// The Jacobi `a^{(α,β)}_{m,k}` table for `m < n_max`, by the raising recurrence.
fn jacobi_a_table(p: &ParamPoint, n_max: usize) -> Result<Vec<Vec<Rational>>, Error> {
    let abg: Vec<(Rational, Rational, Rational)> =
        (0..n_max as i64).map(|m| p.jacobi_abg_lenient(m)).collect::<Result<_, _>>()?;
    let mut table = Vec::with_capacity(n_max);
    for m in 0..n_max {
        let mut row = vec![abg[m].0.clone()];
        if m > 0 {
            let mut bk = abg[m].1.clone();
            let mut gk = abg[m].2.clone();
            for k in 1..=m {
                row.push(&abg[m - k].0 * &bk);
                if k < m {
                    let nb = &abg[m - k].1 * &bk + &gk;
                    gk = &abg[m - k].2 * &bk;
                    bk = nb;
                }
            }
        }
        table.push(row);
    }
    Ok(table)
}

impl ParamPoint {
    /// Like `jacobi_abg`, but at `m = 0` only `α_0 = 1` is needed, so the
    /// `β_0`, `γ_0` denominators are not evaluated.
    fn jacobi_abg_lenient(&self, m: i64) -> Result<(Rational, Rational, Rational), Error> {
        if m == 0 {
            let (a, b) = (self.alpha(), self.beta());
            let s = a + b;
            let al = ratio(
                (&s + int(1)) * (&s + int(2)),
                (&s + int(1)) * (&s + int(2)),
                || "alpha_0".to_string(),
            )?;
            return Ok((al, Rational::zero(), Rational::zero()));
        }
        self.jacobi_abg(m)
    }
}

pub fn cnk_table(p: &ParamPoint, n_max: usize) -> Result<CnkTable, Error> {
    let mut c: Vec<Vec<Rational>> = (0..=n_max).map(|n| vec![Rational::zero(); n + 1]).collect();
    let mut a_table = None;
    match p {
        ParamPoint::Hermite => {
            for (n, row) in c.iter_mut().enumerate().skip(1) {
                row[1] = int(2 * n as i64);
            }
        }
        ParamPoint::Laguerre { .. } => {
            for row in c.iter_mut() {
                for x in row.iter_mut().skip(1) {
                    *x = int(-1);
                }
            }
        }
        ParamPoint::Jacobi { .. } => {
            let a = jacobi_a_table(p, n_max)?;
            let s = p.alpha() + p.beta();
            for n in 1..=n_max {
                let f = (int(n as i64) + &s + int(1)) * half();
                for k in 1..=n {
                    c[n][k] = &f * &a[n - 1][k - 1];
                }
            }
            a_table = Some(a);
        }
    }
    Ok(CnkTable { family: p.family(), n_max, c, a: a_table })
}

/// Closed forms of `a^{(α,β)}_{n,k}` for `k <= 4`.
pub fn jacobi_a_closed(alpha: &Rational, beta: &Rational, n: i64, k: usize) -> Option<Rational> {
    let (a, b) = (alpha, beta);
    let s = a + b;
    let nn = int(n);
    let two_n = int(2 * n);
    let q = |num: Rational, den: Rational| if den.is_zero() { None } else { Some(num / den) };
    match k {
        0 => q(
            pochhammer(&(&two_n + &s + int(1)), 2),
            pochhammer(&(&nn + &s + int(1)), 2),
        ),
        1 => q(
            (b - a) * (&two_n + &s - int(1)) * (&two_n + &s + int(1)),
            pochhammer(&(&nn + &s), 3),
        ),
        2 => q(
            (&two_n + &s - int(3))
                * (&two_n + &s)
                * ((&nn + a) * (&nn + b) + (a - b) * (a - b) - int(1)),
            pochhammer(&(&nn + &s - int(1)), 4),
        ),
        3 => q(
            (b - a)
                * (&two_n + &s - int(5))
                * (&two_n + &s - int(1))
                * (int(2) * (&nn + &s) * (&nn - int(1)) + a * (a + int(1)) + b * (b + int(1))
                    - int(2)),
            pochhammer(&(&nn + &s - int(2)), 5),
        ),
        4 => {
            let d = a - b;
            let d2 = &d * &d;
            let inner = int(5) * &d2 * &d2
                + int(10)
                    * &d2
                    * (int(4) * &nn * (&nn + &s - int(2)) + (&s + int(1)) * (&s - int(5)) + int(3))
                + (&two_n + &s - int(6))
                    * (&two_n + &s - int(4))
                    * (&two_n + &s)
                    * (&two_n + &s + int(2));
            q(
                (&two_n + &s - int(7)) * (&two_n + &s - int(2)) * inner,
                int(16) * pochhammer(&(&nn + &s - int(3)), 6),
            )
        }
        _ => None,
    }
}

/// Exact checks of the classical identities for `n <= n_max`.
pub fn verify_family_identities(p: &ParamPoint, n_max: usize) -> Result<Vec<Check>, Error> {
    let fam = p.family();
    let mut checks = Vec::new();
    let polys: Vec<Poly> = (0..=n_max as i64 + 1).map(|n| p.classical(n)).collect();
    let table = cnk_table(p, n_max)?;
    let x = Poly::x();

    for n in 0..=n_max {
        let ni = n as i64;
        let pn = &polys[n];
        checks.push(Check::from_bool(
            format!("{fam}.leading[n={n}]"),
            pn.degree() == crate::exact::Degree::Finite(n) && pn.lead() == p.leading(ni),
            format!("degree {} lead {}", pn.degree(), pn.lead()),
        ));

        let resid = &(&x * pn)
            - &(&(&polys[n + 1].scale(&p.rec_a(ni)?) + &pn.scale(&p.rec_b(ni)?))
                + &p.classical(ni - 1).scale(&p.rec_c(ni)?));
        checks.push(Check::from_bool(
            format!("{fam}.three_term[n={n}]"),
            resid.is_zero(),
            format!("residual {resid}"),
        ));

        let mut sum = Poly::zero();
        for k in 1..=ni {
            sum += &polys[(ni - k) as usize].scale(&table.get(ni, k));
        }
        let (oracle, rem) = expand_in_basis(&pn.derivative(), &polys, 0)?;
        let mut ok = rem.is_zero() && sum == pn.derivative();
        for (m, c) in oracle.iter().enumerate() {
            let k = ni - m as i64;
            if k >= 1 && *c != table.get(ni, k) {
                ok = false;
            }
        }
        checks.push(Check::from_bool(
            format!("{fam}.cnk[n={n}]"),
            ok,
            "derivative expansion",
        ));

        if n < n_max {
            let v = p.rec_a(ni)? * table.get(ni + 1, 1);
            checks.push(Check::from_bool(
                format!("{fam}.A_n*c_(n+1,1)[n={n}]"),
                v == int(ni + 1),
                format!("value {v}"),
            ));
        }

        if fam != Family::Hermite {
            let v = p.f_n(ni)? * p.b_prev(ni)?;
            checks.push(Check::from_bool(
                format!("{fam}.f_n*b_(n-1)[n={n}]"),
                v == p.energy(ni)?,
                format!("value {v}"),
            ));
        }
    }

    let (a, b) = (p.alpha(), p.beta());
    let one = int(1);
    match fam {
        Family::Hermite => {
            for n in 0..=n_max as i64 {
                let ok = hermite(n).derivative() == hermite(n - 1).scale(&int(2 * n));
                checks.push(Check::from_bool(format!("H.dH[n={n}]"), ok, "∂H_n = 2n H_(n-1)"));
            }
        }
        Family::Laguerre => {
            for n in 0..=n_max as i64 {
                let d_ok = laguerre(&a, n).derivative() == -laguerre(&(&a + &one), n - 1);
                checks.push(Check::from_bool(format!("L.dL[n={n}]"), d_ok, "derivative"));
                let id_ok = &laguerre(&a, n - 1) + &laguerre(&(&a - &one), n) == laguerre(&a, n);
                checks.push(Check::from_bool(format!("L.idL[n={n}]"), id_ok, "parameter shift"));
            }
        }
        Family::Jacobi => {
            let s = &a + &b;
            let a1 = &a + &one;
            let b1 = &b + &one;
            for n in 0..=n_max as i64 {
                let nn = int(n);
                let d_ok = jacobi(&a, &b, n).derivative()
                    == jacobi(&a1, &b1, n - 1).scale(&((&nn + &s + &one) * half()));
                checks.push(Check::from_bool(format!("J.dJ[n={n}]"), d_ok, "derivative"));
                let lhs1 = jacobi(&(&a - &one), &b, n).scale(&(int(2 * n) + &s));
                let rhs1 = &jacobi(&a, &b, n).scale(&(&nn + &s))
                    - &jacobi(&a, &b, n - 1).scale(&(&nn + &b));
                checks.push(Check::from_bool(format!("J.idJ1[n={n}]"), lhs1 == rhs1, "α-lowering"));
                let lhs2 = jacobi(&a, &(&b - &one), n).scale(&(int(2 * n) + &s));
                let rhs2 = &jacobi(&a, &b, n).scale(&(&nn + &s))
                    + &jacobi(&a, &b, n - 1).scale(&(&nn + &a));
                checks.push(Check::from_bool(format!("J.idJ2[n={n}]"), lhs2 == rhs2, "β-lowering"));
                let (al, be, ga) = p.jacobi_abg_lenient(n)?;
                let rhs3 = &(&jacobi(&a, &b, n).scale(&al) + &jacobi(&a1, &b1, n - 1).scale(&be))
                    + &jacobi(&a1, &b1, n - 2).scale(&ga);
                checks.push(Check::from_bool(
                    format!("J.idJ3[n={n}]"),
                    jacobi(&a1, &b1, n) == rhs3,
                    "raising",
                ));
            }
            let at = table.a.as_ref().expect("Jacobi table has a");
            for (m, row) in at.iter().enumerate() {
                for (k, v) in row.iter().enumerate().take(5) {
                    if let Some(cf) = jacobi_a_closed(&a, &b, m as i64, k) {
                        checks.push(Check::from_bool(
                            format!("J.ank_closed[n={m},k={k}]"),
                            &cf == v,
                            format!("table {v}, closed form {cf}"),
                        ));
                    }
                }
            }
        }
    }
    Ok(checks)
}

/// `π_D(n) = Π_j (E_n - Ẽ_{d_j})` for seeds `(v, t)`.
pub fn pi_d(p: &ParamPoint, seeds: &[(i64, SeedType)], n: i64) -> Result<Rational, Error> {
    let e = p.energy(n)?;
    let mut acc = Rational::one();
    for &(v, t) in seeds {
        acc *= &e - p.virtual_energy(v, t)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_pass;

    fn jp() -> ParamPoint {
        ParamPoint::jacobi(rat(7, 3), rat(9, 4))
    }

    #[test]
    fn low_degree_polynomials() {
        assert_eq!(hermite(2), Poly::from_ints(&[-2, 0, 4]));
        let a = rat(11, 6);
        assert_eq!(laguerre(&a, 1), Poly::new(vec![&a + int(1), int(-1)]));
        let (a, b) = (rat(11, 6), rat(7, 4));
        let want = Poly::new(vec![(&a - &b) * half(), (&a + &b + int(2)) * half()]);
        assert_eq!(jacobi(&a, &b, 1), want);
    }

    #[test]
    fn seeds_of_degree_one() {
        let g = rat(7, 3);
        let l = ParamPoint::laguerre(g.clone());
        let mu = l.seed_mu(1, SeedType::I).unwrap();
        assert_eq!(mu.gauge, Gauge::exp(1));
        assert_eq!(mu.r.num(), &Poly::new(vec![&g + half(), int(1)]));
        let mu2 = l.seed_mu(1, SeedType::II).unwrap();
        assert_eq!(mu2.gauge, Gauge::eta(half() - &g));
        assert_eq!(mu2.r.num(), &Poly::new(vec![rat(3, 2) - &g, int(-1)]));
        assert!(ParamPoint::Hermite.seed_mu(1, SeedType::I).is_err());
        let j = jp();
        let mu = j.seed_mu(1, SeedType::I).unwrap();
        assert_eq!(mu.gauge, Gauge::one_plus(half() - rat(9, 4)));
        assert_eq!(mu.r.num(), &jacobi(&(rat(7, 3) - half()), &(half() - rat(9, 4)), 1));
    }

    #[test]
    fn energies_and_pi() {
        let l = ParamPoint::laguerre(int(2));
        assert_eq!(pi_d(&l, &[(1, SeedType::I)], 0).unwrap(), int(14));
        assert_eq!(pi_d(&l, &[], 3).unwrap(), int(1));
        let j = jp();
        let (g, h) = (rat(7, 3), rat(9, 4));
        for n in 0..5 {
            let want = (int(2 * n) + &g * int(2) + int(3)) * (int(2 * n) + &h * int(2) - int(3));
            assert_eq!(pi_d(&j, &[(1, SeedType::I)], n).unwrap(), want);
        }
    }

    #[test]
    fn cnk_values() {
        let h = cnk_table(&ParamPoint::Hermite, 5).unwrap();
        assert_eq!(h.get(3, 1), int(6));
        assert_eq!(h.get(3, 2), int(0));
        let j0 = ParamPoint::jacobi(half(), half());
        let t = cnk_table(&j0, 4).unwrap();
        let a = t.a.unwrap();
        assert_eq!(a[1][0], int(2));
        for (m, row) in a.iter().enumerate() {
            assert_eq!(row[0], rat(2 * (2 * m as i64 + 1), m as i64 + 2));
            if m >= 1 {
                assert_eq!(row[1], int(0));
            }
        }
    }

    #[test]
    fn identities_hold() {
        assert!(all_pass(&verify_family_identities(&ParamPoint::laguerre(rat(7, 3)), 10).unwrap()));
        assert!(all_pass(&verify_family_identities(&jp(), 8).unwrap()));
        assert!(all_pass(&verify_family_identities(&ParamPoint::Hermite, 8).unwrap()));
    }

    #[test]
    fn recurrence_edge_conventions() {
        for p in [ParamPoint::Hermite, ParamPoint::laguerre(rat(7, 3)), jp()] {
            assert_eq!(p.rec_a(-1).unwrap(), int(0));
        }
        let j = jp();
        assert_eq!(j.rec_b(0).unwrap(), (j.beta() - j.alpha()) / (j.alpha() + j.beta() + int(2)));
        let l = ParamPoint::laguerre(int(2));
        assert_eq!(l.f_n(3).unwrap() * l.b_prev(3).unwrap(), int(12));
        assert_eq!(jp().f_n(1).unwrap(), int(-2) * (int(1) + rat(7, 3) + rat(9, 4)));
    }
}
