//! Functions of the form `e^{aη} η^b ((1-η)/2)^c ((1+η)/2)^d · r(η)` and
//! Wronskians over them.

use std::ops::Mul;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::exact::rational::{int, is_integer, rat, to_i64};
use crate::exact::{Poly, RatFunc, Rational};
use crate::report::Check;

/// The transcendental prefactor `e^{aη} η^b ((1-η)/2)^c ((1+η)/2)^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Gauge {
    pub a: i64,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Gauge {
    pub fn one() -> Self {
        Gauge::default()
    }

    pub fn exp(a: i64) -> Self {
        Gauge { a, ..Gauge::default() }
    }

    pub fn eta(b: Rational) -> Self {
        Gauge { b, ..Gauge::default() }
    }

    pub fn one_minus(c: Rational) -> Self {
        Gauge { c, ..Gauge::default() }
    }

    pub fn one_plus(d: Rational) -> Self {
        Gauge { d, ..Gauge::default() }
    }

    pub fn is_trivial(&self) -> bool {
        self.a == 0 && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn inverse(&self) -> Self {
        Gauge { a: -self.a, b: -self.b.clone(), c: -self.c.clone(), d: -self.d.clone() }
    }

    pub fn pow(&self, k: i64) -> Self {
        let q = int(k);
        Gauge { a: self.a * k, b: &self.b * &q, c: &self.c * &q, d: &self.d * &q }
    }

    pub fn describe(&self) -> String {
        format!("e^({}η) η^({}) ((1-η)/2)^({}) ((1+η)/2)^({})", self.a, self.b, self.c, self.d)
    }
}

impl Mul<&Gauge> for &Gauge {
    type Output = Gauge;
    fn mul(self, o: &Gauge) -> Gauge {
        Gauge {
            a: self.a + o.a,
            b: &self.b + &o.b,
            c: &self.c + &o.c,
            d: &self.d + &o.d,
        }
    }
}

pub fn one_minus_half() -> Poly {
    Poly::new(vec![Rational::new(1.into(), 2.into()), Rational::new((-1).into(), 2.into())])
}

pub fn one_plus_half() -> Poly {
    Poly::new(vec![Rational::new(1.into(), 2.into()), Rational::new(1.into(), 2.into())])
}

/// Multiply `r` by `base^k` for an integer `k` of either sign.
fn fold_power(r: RatFunc, base: &Poly, k: i64) -> RatFunc {
    let p = base.pow(k.unsigned_abs() as usize);
    if k >= 0 {
        r.mul_poly(&p)
    } else {
        r.div_poly(&p).expect("base is nonzero")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugedFn {
    pub gauge: Gauge,
    pub r: RatFunc,
}

impl GaugedFn {
    pub fn new(gauge: Gauge, r: RatFunc) -> Self {
        GaugedFn { gauge, r }
    }

    pub fn one() -> Self {
        GaugedFn::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        GaugedFn { gauge: Gauge::one(), r: RatFunc::from_poly(p) }
    }

    pub fn with_gauge(gauge: Gauge, p: Poly) -> Self {
        GaugedFn { gauge, r: RatFunc::from_poly(p) }
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        GaugedFn { gauge: self.gauge.clone(), r: self.r.scale(s) }
    }

    /// Rational part of the derivative; the gauge is unchanged.
    pub fn derivative_rational_part(&self) -> RatFunc {
        let g = &self.gauge;
        let r = &self.r;
        let mut out = r.derivative();
        if g.a != 0 {
            out = &out + &r.scale(&int(g.a));
        }
        if !g.b.is_zero() {
            out = &out + &r.scale(&g.b).div_poly(&Poly::x()).expect("nonzero");
        }
        if !g.c.is_zero() {
            let t = r.scale(&g.c).div_poly(&Poly::from_ints(&[1, -1])).expect("nonzero");
            out = &out - &t;
        }
        if !g.d.is_zero() {
            let t = r.scale(&g.d).div_poly(&Poly::from_ints(&[1, 1])).expect("nonzero");
            out = &out + &t;
        }
        out
    }

    pub fn derivative(&self) -> Self {
        GaugedFn { gauge: self.gauge.clone(), r: self.derivative_rational_part() }
    }

    /// Rational parts of the derivatives of orders `0..=k`.
    pub fn derivative_parts(&self, k: usize) -> Vec<RatFunc> {
        let mut out = Vec::with_capacity(k + 1);
        let mut cur = self.clone();
        out.push(cur.r.clone());
        for _ in 0..k {
            cur = cur.derivative();
            out.push(cur.r.clone());
        }
        out
    }

    pub fn mul_gauge(&self, g: &Gauge) -> Self {
        GaugedFn { gauge: &self.gauge * g, r: self.r.clone() }
    }

    /// Fold integer exponents of `η`, `(1-η)/2`, `(1+η)/2` into the rational
    /// part. Fails with `GaugeMismatch` if any transcendental factor remains.
    pub fn into_ratfunc(&self) -> Result<RatFunc, Error> {
        let g = &self.gauge;
        if self.r.is_zero() {
            return Ok(RatFunc::zero());
        }
        let non_integer = [&g.b, &g.c, &g.d].iter().any(|e| !is_integer(e));
        if g.a != 0 || non_integer {
            return Err(Error::GaugeMismatch(format!("residual gauge {}", g.describe())));
        }
        let too_big = || Error::GaugeMismatch(format!("exponent out of range in {}", g.describe()));
        let mut r = self.r.clone();
        r = fold_power(r, &Poly::x(), to_i64(&g.b).ok_or_else(too_big)?);
        r = fold_power(r, &one_minus_half(), to_i64(&g.c).ok_or_else(too_big)?);
        r = fold_power(r, &one_plus_half(), to_i64(&g.d).ok_or_else(too_big)?);
        Ok(r)
    }
}

impl Mul<&GaugedFn> for &GaugedFn {
    type Output = GaugedFn;
    fn mul(self, o: &GaugedFn) -> GaugedFn {
        GaugedFn { gauge: &self.gauge * &o.gauge, r: &self.r * &o.r }
    }
}

/// Multiply `w` by the compensating gauge and return the polynomial it equals.
pub fn extract_polynomial(w: &GaugedFn, expected: &Gauge) -> Result<Poly, Error> {
    w.mul_gauge(expected).into_ratfunc()?.to_poly()
}

/// Determinant of a square polynomial matrix by fraction-free elimination.
pub fn bareiss_det(mut a: Vec<Vec<Poly>>) -> Poly {
    let n = a.len();
    if n == 0 {
        return Poly::one();
    }
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of a square matrix of rational functions.
pub fn ratfunc_det(cols: &[Vec<RatFunc>]) -> RatFunc {
    let n = cols.len();
    if n == 0 {
        return RatFunc::one();
    }
    // Clear each column by the lcm of its denominators.
    let mut den = Poly::one();
    let mut m = vec![vec![Poly::zero(); n]; n];
    for (j, col) in cols.iter().enumerate() {
        let l = col.iter().fold(Poly::one(), |acc, e| acc.lcm(e.den()));
        for (i, e) in col.iter().enumerate() {
            let f = l.div_exact(e.den()).expect("lcm is a multiple");
            m[i][j] = e.num() * &f;
        }
        den = &den * &l;
    }
    RatFunc::new(bareiss_det(m), den).expect("denominator nonzero")
}

/// Determinant of the matrix whose `(k, j)` entry is the `rows[k]`-th
/// derivative of `fs[j]`; `rows` must have the same length as `fs`.
pub fn gauged_det_rows(fs: &[GaugedFn], rows: &[usize]) -> GaugedFn {
    assert_eq!(fs.len(), rows.len(), "square matrix required");
    let top = rows.iter().copied().max().unwrap_or(0);
    let mut gauge = Gauge::one();
    let cols: Vec<Vec<RatFunc>> = fs
        .iter()
        .map(|f| {
            gauge = &gauge * &f.gauge;
            let parts = f.derivative_parts(top);
            rows.iter().map(|&i| parts[i].clone()).collect()
        })
        .collect();
    GaugedFn { gauge, r: ratfunc_det(&cols) }
}

pub fn wronskian_gauged(fs: &[GaugedFn]) -> GaugedFn {
    let rows: Vec<usize> = (0..fs.len()).collect();
    gauged_det_rows(fs, &rows)
}

/// Wronskian of plain polynomials.
pub fn wronskian_poly(fs: &[Poly]) -> Poly {
    let gs: Vec<GaugedFn> = fs.iter().cloned().map(GaugedFn::from_poly).collect();
    wronskian_gauged(&gs).r.to_poly().expect("Wronskian of polynomials is polynomial")
}

pub fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    let mut c: Vec<Rational> = (0..=deg).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect();
    c[deg] = rat(rng.gen_range(1..=9), rng.gen_range(1..=4));
    Poly::new(c)
}

pub fn random_polys(rng: &mut ChaCha8Rng, n: usize, max_deg: usize) -> Vec<Poly> {
    (0..n).map(|_| random_poly(rng, max_deg)).collect()
}

/// `W[gf_1..gf_n] = g^n W[f]`, `W[W[f,g], W[f,h]] = W[f] W[f,g,h]`, the
/// cofactor identity `W[F_1..F_n] = (-1)^{n(n-1)/2} W[f]^{n-1}`, and the
/// change of variable `η = x²`, each on `instances` seeded random inputs
/// (`n <= 4`, degrees `<= 5`).
pub fn wronskian_identities_check(seed: u64, instances: usize) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fails: [Vec<usize>; 4] = Default::default();
    for t in 0..instances {
        let n = rng.gen_range(1..=4);
        let fs = random_polys(&mut rng, n, 5);
        let g = random_poly(&mut rng, 3);
        let gfs: Vec<Poly> = fs.iter().map(|f| &g * f).collect();
        if wronskian_poly(&gfs) != &g.pow(n) * &wronskian_poly(&fs) {
            fails[0].push(t);
        }

        let m = rng.gen_range(1..=3);
        let fs2 = random_polys(&mut rng, m, 5);
        let (g, h) = (random_poly(&mut rng, 5), random_poly(&mut rng, 5));
        let with = |extra: &[&Poly]| {
            let mut v = fs2.clone();
            v.extend(extra.iter().map(|p| (*p).clone()));
            wronskian_poly(&v)
        };
        let lhs = wronskian_poly(&[with(&[&g]), with(&[&h])]);
        if lhs != &wronskian_poly(&fs2) * &with(&[&g, &h]) {
            fails[1].push(t);
        }

        let cof: Vec<Poly> = (0..n)
            .map(|j| {
                let rest: Vec<Poly> = fs.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, f)| f.clone()).collect();
                wronskian_poly(&rest)
            })
            .collect();
        let sign = if (n * (n - 1) / 2) % 2 == 0 { int(1) } else { int(-1) };
        if wronskian_poly(&cof) != wronskian_poly(&fs).pow(n - 1).scale(&sign) {
            fails[2].push(t);
        }

        let x2 = Poly::monomial(int(1), 2);
        let composed: Vec<Poly> = fs.iter().map(|f| f.compose(&x2)).collect();
        let rhs = &Poly::monomial(int(2), 1).pow(n * (n - 1) / 2) * &wronskian_poly(&fs).compose(&x2);
        if wronskian_poly(&composed) != rhs {
            fails[3].push(t);
        }
    }
    ["scaling", "nested", "cofactor", "change of variable η = x²"]
        .iter()
        .zip(fails.iter())
        .map(|(name, bad)| {
            Check::from_bool(
                format!("Wronskian {name}"),
                bad.is_empty(),
                if bad.is_empty() {
                    format!("{instances} instances, seed {seed}")
                } else {
                    format!("failed instances {bad:?}")
                },
            )
        })
        .collect()
}

impl Default for GaugedFn {
    fn default() -> Self {
        GaugedFn::one()
    }
}
