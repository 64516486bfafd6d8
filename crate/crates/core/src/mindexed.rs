//! Multi-indexed polynomials `Ξ_D` and `P_{D,n}` built from Wronskians of
//! virtual-state seeds.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::exact::rational::{half, int, pow_neg_one, pow_rational, rat};
use crate::exact::{Degree, Poly, RatFunc, Rational};
use crate::families::{pi_d, Family, ParamPoint, SeedType};
use crate::gauged::{extract_polynomial, ratfunc_det, Gauge, GaugedFn};
use crate::report::Check;

/// An ordered list of seeds `(v, type)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet {
    entries: Vec<(i64, SeedType)>,
}

impl IndexSet {
    pub fn new(entries: Vec<(i64, SeedType)>) -> Result<Self, Error> {
        for (i, &(v, t)) in entries.iter().enumerate() {
            if v < 1 {
                return Err(Error::InvalidIndexSet(format!("degree {v} must be at least 1")));
            }
            if entries[..i].contains(&(v, t)) {
                return Err(Error::InvalidIndexSet(format!("repeated seed {v}^{t}")));
            }
        }
        Ok(IndexSet { entries })
    }

    pub fn empty() -> Self {
        IndexSet { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[(i64, SeedType)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(s_I, s_II)`.
    pub fn counts(&self) -> (i64, i64) {
        let s1 = self.entries.iter().filter(|e| e.1 == SeedType::I).count() as i64;
        (s1, self.len() as i64 - s1)
    }

    pub fn degrees_of(&self, t: SeedType) -> Vec<i64> {
        self.entries.iter().filter(|e| e.1 == t).map(|e| e.0).collect()
    }

    /// `ℓ_D = Σ d_j - M(M-1)/2 + 2 s_I s_II`.
    pub fn ell(&self) -> i64 {
        let m = self.len() as i64;
        let (s1, s2) = self.counts();
        self.entries.iter().map(|e| e.0).sum::<i64>() - m * (m - 1) / 2 + 2 * s1 * s2
    }

    /// Standard order (type I ascending, then type II ascending) and the
    /// sign of the permutation taking `self` to it.
    pub fn standard_order(&self) -> (IndexSet, i64) {
        let key = |e: &(i64, SeedType)| (e.1, e.0);
        let mut inversions = 0;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if key(&self.entries[i]) > key(&self.entries[j]) {
                    inversions += 1;
                }
            }
        }
        let mut sorted = self.entries.clone();
        sorted.sort_by_key(key);
        (IndexSet { entries: sorted }, if inversions % 2 == 0 { 1 } else { -1 })
    }

    /// The set with entry `j` removed.
    pub fn without(&self, j: usize) -> IndexSet {
        let mut e = self.entries.clone();
        e.remove(j);
        IndexSet { entries: e }
    }

    pub fn permuted(&self, perm: &[usize]) -> IndexSet {
        IndexSet { entries: perm.iter().map(|&i| self.entries[i]).collect() }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(v, t)| format!("{v}{t}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for IndexSet {
    type Err = Error;
    /// Parses `"1I,2II"`; `"1^I"` is also accepted. Empty input is `∅`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut entries = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let tok = tok.replace('^', "");
            let split = tok.find(|c: char| !c.is_ascii_digit()).unwrap_or(tok.len());
            let (v, t) = tok.split_at(split);
            let v: i64 = v
                .parse()
                .map_err(|_| Error::Parse(format!("bad seed degree in {tok:?}")))?;
            let t = match t {
                "I" | "i" => SeedType::I,
                "II" | "ii" => SeedType::II,
                _ => return Err(Error::Parse(format!("bad seed type in {tok:?}"))),
            };
            entries.push((v, t));
        }
        IndexSet::new(entries)
    }
}

fn family_check(p: &ParamPoint, d: &IndexSet) -> Result<(), Error> {
    if p.family() == Family::Hermite && !d.is_empty() {
        return Err(Error::UnsupportedFamily("Hermite has no virtual seeds".into()));
    }
    Ok(())
}

/// Compensating gauge for `Ξ_D` (`shift = -1/2`) or `P_{D,n}` (`shift = +1/2`).
fn extraction_gauge(p: &ParamPoint, d: &IndexSet, shift: &Rational) -> Gauge {
    let (s1, s2) = d.counts();
    let (s1r, s2r) = (int(s1), int(s2));
    match p {
        ParamPoint::Hermite => Gauge::one(),
        ParamPoint::Laguerre { g } => Gauge {
            a: -s1,
            b: (&s1r + g + shift) * &s2r,
            ..Gauge::default()
        },
        ParamPoint::Jacobi { g, h } => Gauge {
            c: (&s1r + g + shift) * &s2r,
            d: (&s2r + h + shift) * &s1r,
            ..Gauge::default()
        },
    }
}

pub fn xi_gauge(p: &ParamPoint, d: &IndexSet) -> Gauge {
    extraction_gauge(p, d, &-half())
}

/// The gauge of `Ξ_D`'s partner `P_{D,n}`; it also equals `ρ_F`.
pub fn p_gauge(p: &ParamPoint, d: &IndexSet) -> Gauge {
    extraction_gauge(p, d, &half())
}

pub fn seeds(p: &ParamPoint, d: &IndexSet) -> Result<Vec<GaugedFn>, Error> {
    family_check(p, d)?;
    d.entries().iter().map(|&(v, t)| p.seed_mu(v, t)).collect()
}

/// `c^Ξ_D` for `D` in standard order.
pub fn leading_xi_standard(p: &ParamPoint, d: &IndexSet) -> Result<Rational, Error> {
    family_check(p, d)?;
    let d1 = d.degrees_of(SeedType::I);
    let d2 = d.degrees_of(SeedType::II);
    let mut c = Rational::one();
    for &v in &d1 {
        c *= p.c_virtual(v, SeedType::I)?;
    }
    for &v in &d2 {
        c *= p.c_virtual(v, SeedType::II)?;
    }
    for ds in [&d1, &d2] {
        for j in 0..ds.len() {
            for k in j + 1..ds.len() {
                c *= int(ds[k] - ds[j]);
            }
        }
    }
    match p {
        ParamPoint::Hermite => {}
        ParamPoint::Laguerre { .. } => c *= pow_neg_one(d1.len() as i64 * d2.len() as i64),
        ParamPoint::Jacobi { g, h } => {
            for &a in &d1 {
                for &b in &d2 {
                    c *= (g - h + int(a - b)) * rat(1, 4);
                }
            }
        }
    }
    Ok(c)
}

/// `c^P_{D,n}` for `D` in standard order.
pub fn leading_p_standard(p: &ParamPoint, d: &IndexSet, n: i64) -> Result<Rational, Error> {
    let mut c = leading_xi_standard(p, d)? * p.leading(n);
    let nn = int(n);
    match p {
        ParamPoint::Hermite => {}
        ParamPoint::Laguerre { g } => {
            c *= pow_neg_one(d.counts().0);
            for v in d.degrees_of(SeedType::II) {
                c *= g + &nn - int(v) - half();
            }
        }
        ParamPoint::Jacobi { g, h } => {
            for v in d.degrees_of(SeedType::I) {
                c *= (h + &nn - int(v) - half()) * half();
            }
            for v in d.degrees_of(SeedType::II) {
                c *= (g + &nn - int(v) - half()) * rat(-1, 2);
            }
        }
    }
    Ok(c)
}

/// `c^Ξ_D` for `D` in its given order.
pub fn leading_xi(p: &ParamPoint, d: &IndexSet) -> Result<Rational, Error> {
    let (std, sign) = d.standard_order();
    Ok(leading_xi_standard(p, &std)? * int(sign))
}

/// `c^P_{D,n}` for `D` in its given order.
pub fn leading_p(p: &ParamPoint, d: &IndexSet, n: i64) -> Result<Rational, Error> {
    let (std, sign) = d.standard_order();
    Ok(leading_p_standard(p, &std, n)? * int(sign))
}

/// The constant `A` with `P_{D,0}(λ) = A·Ξ_D(λ+δ)`.
pub fn plusdelta_constant(p: &ParamPoint, d: &IndexSet) -> Result<Rational, Error> {
    family_check(p, d)?;
    let (s1, s2) = d.counts();
    let mut a = Rational::one();
    match p {
        ParamPoint::Hermite => {}
        ParamPoint::Laguerre { g } => {
            a *= pow_neg_one(s1);
            for v in d.degrees_of(SeedType::II) {
                a *= g - int(v) - half();
            }
        }
        ParamPoint::Jacobi { g, h } => {
            a *= pow_rational(&int(2), -s1) * pow_rational(&int(-2), -s2);
            for v in d.degrees_of(SeedType::I) {
                a *= h - int(v) - half();
            }
            for v in d.degrees_of(SeedType::II) {
                a *= g - int(v) - half();
            }
        }
    }
    Ok(a)
}

/// Refuse parameter points where `c^Ξ_D`, `c^P_{D,n}` or `π_D(n)` vanish
/// for some `0 <= n <= n_max`.
pub fn check_genericity(p: &ParamPoint, d: &IndexSet, n_max: usize) -> Result<(), Error> {
    if leading_xi(p, d)?.is_zero() {
        return Err(Error::GenericityViolation(format!("c^Xi vanishes for {d} at {p}")));
    }
    for n in 0..=n_max as i64 {
        if leading_p(p, d, n)?.is_zero() {
            return Err(Error::GenericityViolation(format!(
                "c^P vanishes for {d}, n={n} at {p}"
            )));
        }
        if p.family() != Family::Hermite && pi_d(p, d.entries(), n)?.is_zero() {
            return Err(Error::GenericityViolation(format!(
                "pi_D({n}) vanishes for {d} at {p}"
            )));
        }
    }
    Ok(())
}

/// `Ξ_D` and the seed data needed to build `P_{D,n}`.
#[derive(Clone, Debug)]
pub struct MultiIndexed {
    pub point: ParamPoint,
    pub d: IndexSet,
    pub seeds: Vec<GaugedFn>,
    /// Rational parts of the seed derivatives of orders `0..=M`.
    seed_cols: Vec<Vec<RatFunc>>,
    seed_gauge: Gauge,
    pub xi: Poly,
}

impl MultiIndexed {
    /// Builds `Ξ_D` and checks its degree; fails with `DegenerateLeading` if
    /// `c^Ξ_D = 0` at this point.
    pub fn new(p: &ParamPoint, d: &IndexSet) -> Result<Self, Error> {
        let seeds = seeds(p, d)?;
        let m = seeds.len();
        let mut seed_gauge = Gauge::one();
        let seed_cols: Vec<Vec<RatFunc>> = seeds
            .iter()
            .map(|f| {
                seed_gauge = &seed_gauge * &f.gauge;
                f.derivative_parts(m)
            })
            .collect();
        let cols: Vec<Vec<RatFunc>> = seed_cols.iter().map(|c| c[..m].to_vec()).collect();
        let w = GaugedFn::new(seed_gauge.clone(), ratfunc_det(&cols));
        let xi = extract_polynomial(&w, &xi_gauge(p, d))?;
        let c = leading_xi(p, d)?;
        if c.is_zero() {
            return Err(Error::DegenerateLeading(format!("c^Xi = 0 for {d} at {p}")));
        }
        let ell = d.ell();
        if xi.degree() != Degree::Finite(ell as usize) || xi.lead() != c {
            return Err(Error::DegenerateLeading(format!(
                "Xi for {d} has degree {} and leading {}, expected {ell} and {c}",
                xi.degree(),
                xi.lead()
            )));
        }
        Ok(MultiIndexed { point: p.clone(), d: d.clone(), seeds, seed_cols, seed_gauge, xi })
    }

    pub fn m(&self) -> usize {
        self.seeds.len()
    }

    pub fn ell(&self) -> i64 {
        self.d.ell()
    }

    /// `W[μ_{d_1}, ..., μ_{d_M}, q]` for a gauged `q`.
    pub fn wronskian_with(&self, q: &GaugedFn) -> GaugedFn {
        let m = self.m();
        let mut cols = self.seed_cols.clone();
        cols.push(q.derivative_parts(m));
        GaugedFn::new(&self.seed_gauge * &q.gauge, ratfunc_det(&cols))
    }

    /// `P_{D,n}` straight from the Wronskian, without the leading-coefficient
    /// check (used at degenerate parameter points).
    pub fn p_raw(&self, n: i64) -> Result<Poly, Error> {
        if n < 0 {
            return Ok(Poly::zero());
        }
        let w = self.wronskian_with(&GaugedFn::from_poly(self.point.classical(n)));
        extract_polynomial(&w, &p_gauge(&self.point, &self.d))
    }

    /// `P_{D,n}`; fails with `DegenerateLeading` if the degree or leading
    /// coefficient disagree with the closed form, or `c^P_{D,n} = 0`.
    pub fn p_n(&self, n: i64) -> Result<Poly, Error> {
        let p = self.p_raw(n)?;
        if n < 0 {
            return Ok(p);
        }
        let c = leading_p(&self.point, &self.d, n)?;
        let deg = (self.ell() + n) as usize;
        if c.is_zero() || p.degree() != Degree::Finite(deg) || p.lead() != c {
            return Err(Error::DegenerateLeading(format!(
                "P_(D,{n}) for {} has degree {} and leading {}, expected {deg} and {c}",
                self.d,
                p.degree(),
                p.lead()
            )));
        }
        Ok(p)
    }

    pub fn p_range(&self, n_max: usize) -> Result<Vec<Poly>, Error> {
        (0..=n_max as i64).map(|n| self.p_n(n)).collect()
    }
}

pub fn xi_poly(p: &ParamPoint, d: &IndexSet) -> Result<Poly, Error> {
    Ok(MultiIndexed::new(p, d)?.xi)
}

pub fn mi_poly(p: &ParamPoint, d: &IndexSet, n: i64) -> Result<Poly, Error> {
    MultiIndexed::new(p, d)?.p_n(n)
}

/// Every index set with at most `max_m` entries drawn from degrees
/// `1..=max_deg` of both types, distinct within each type, listed by size
/// and then lexicographically. Includes the empty set.
pub fn index_battery(max_deg: i64, max_m: usize) -> Vec<IndexSet> {
    let pool: Vec<(i64, SeedType)> = [SeedType::I, SeedType::II]
        .iter()
        .flat_map(|&t| (1..=max_deg).map(move |v| (v, t)))
        .collect();
    let mut out = Vec::new();
    for m in 0..=max_m.min(pool.len()) {
        let mut idx: Vec<usize> = (0..m).collect();
        loop {
            let entries = idx.iter().map(|&i| pool[i]).collect();
            out.push(IndexSet::new(entries).expect("distinct per type"));
            // next m-combination of pool indices
            let mut i = m;
            while i > 0 && idx[i - 1] == pool.len() - m + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..m {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    out
}

/// All permutations of `0..m` in lexicographic order, with their signs.
pub fn permutations(m: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            prefix.push(x);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..m).collect(), &mut out);
    out.into_iter()
        .map(|p| {
            let inv = (0..m)
                .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let s = if inv % 2 == 0 { 1 } else { -1 };
            (p, s)
        })
        .collect()
}

/// `Ξ_{σ(D)} = sgn(σ) Ξ_D` and `P_{σ(D),n} = sgn(σ) P_{D,n}` for every
/// permutation σ and `n <= n_max`.
pub fn permutation_sign_check(
    p: &ParamPoint,
    d: &IndexSet,
    n_max: usize,
) -> Result<Vec<Check>, Error> {
    let base = MultiIndexed::new(p, d)?;
    let base_p = base.p_range(n_max)?;
    let mut checks = Vec::new();
    for (perm, sign) in permutations(d.len()) {
        let pd = d.permuted(&perm);
        let mi = MultiIndexed::new(p, &pd)?;
        let s = int(sign);
        let mut ok = mi.xi == base.xi.scale(&s);
        for (n, bp) in base_p.iter().enumerate() {
            ok &= mi.p_n(n as i64)? == bp.scale(&s);
        }
        checks.push(Check::from_bool(
            format!("perm_sign[{d}->{pd}]"),
            ok,
            format!("sign {sign}"),
        ));
    }
    Ok(checks)
}

/// `P_{D,0}(λ) = A·Ξ_D(λ+δ)` with the closed-form `A`.
pub fn plusdelta_check(p: &ParamPoint, d: &IndexSet) -> Result<(Rational, Check), Error> {
    let a = plusdelta_constant(p, d)?;
    let p0 = MultiIndexed::new(p, d)?.p_n(0)?;
    let xi_shift = MultiIndexed::new(&p.shifted(), d)?.xi;
    let ok = p0 == xi_shift.scale(&a);
    let check = Check::from_bool(format!("plusdelta[{d}]"), ok, format!("A = {a}"));
    Ok((a, check))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> IndexSet {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_ell() {
        assert_eq!(set("1I").ell(), 1);
        assert_eq!(set("1I,2II").ell(), 4);
        assert_eq!(set("").ell(), 0);
        assert_eq!(set("1^I, 2^II").counts(), (1, 1));
        assert!("1I,1I".parse::<IndexSet>().is_err());
        assert!("0I".parse::<IndexSet>().is_err());
        assert!("1III".parse::<IndexSet>().is_err());
        assert_eq!(set("2II,1I").standard_order(), (set("1I,2II"), -1));
    }

    #[test]
    fn laguerre_xi_examples() {
        let g = rat(7, 3);
        let p = ParamPoint::laguerre(g.clone());
        assert_eq!(xi_poly(&p, &set("1I")).unwrap(), Poly::new(vec![&g + half(), int(1)]));
        let xi = xi_poly(&p, &set("1I,2II")).unwrap();
        assert_eq!(xi, crate::golden::laguerre_quartic(&g).scale(&rat(-1, 2)));
        assert_eq!(leading_xi(&p, &set("1I,2II")).unwrap(), rat(-1, 2));
    }

    #[test]
    fn empty_set_is_classical() {
        let p = ParamPoint::laguerre(rat(7, 3));
        let mi = MultiIndexed::new(&p, &IndexSet::empty()).unwrap();
        assert_eq!(mi.xi, Poly::one());
        for n in 0..5 {
            assert_eq!(mi.p_n(n).unwrap(), p.classical(n));
        }
        assert_eq!(mi.p_n(-1).unwrap(), Poly::zero());
    }

    #[test]
    fn degrees_and_leading() {
        let p = ParamPoint::laguerre(rat(7, 3));
        let mi = MultiIndexed::new(&p, &set("1I,2II")).unwrap();
        assert_eq!(mi.p_n(3).unwrap().degree(), Degree::Finite(7));
        let j = ParamPoint::jacobi(rat(7, 3), rat(9, 4));
        let mj = MultiIndexed::new(&j, &set("2II,1I,3I")).unwrap();
        for n in 0..4 {
            mj.p_n(n).unwrap();
        }
    }

    #[test]
    fn plusdelta_constants() {
        let g = rat(7, 3);
        let l = ParamPoint::laguerre(g.clone());
        assert_eq!(plusdelta_constant(&l, &set("1I")).unwrap(), int(-1));
        assert_eq!(plusdelta_constant(&l, &set("2II")).unwrap(), &g - rat(5, 2));
        let h = rat(9, 4);
        let j = ParamPoint::jacobi(g, h.clone());
        assert_eq!(plusdelta_constant(&j, &set("1I")).unwrap(), (h - rat(3, 2)) * half());
        for d in ["1I", "2II", "1I,2II", "1II,3II"] {
            assert!(plusdelta_check(&l, &set(d)).unwrap().1.passed());
            assert!(plusdelta_check(&j, &set(d)).unwrap().1.passed());
        }
    }

    #[test]
    fn permutation_signs() {
        let p = ParamPoint::laguerre(rat(7, 3));
        let checks = permutation_sign_check(&p, &set("1I,2I,3I"), 2).unwrap();
        assert_eq!(checks.len(), 6);
        assert!(checks.iter().all(Check::passed));
        let perms = permutations(3);
        assert_eq!(perms[3], (vec![1, 2, 0], 1));
    }

    #[test]
    fn genericity_is_enforced() {
        // c^P_{D,1} vanishes at g = 3/2 for {1^I, 2^II}.
        let p = ParamPoint::laguerre(rat(3, 2));
        let d = set("1I,2II");
        assert!(matches!(check_genericity(&p, &d, 3), Err(Error::GenericityViolation(_))));
        let mi = MultiIndexed::new(&p, &d).unwrap();
        assert!(matches!(mi.p_n(1), Err(Error::DegenerateLeading(_))));
    }

    #[test]
    fn battery_size() {
        let b = index_battery(3, 3);
        assert_eq!(b.len(), 1 + 6 + 15 + 20);
        assert!(b[0].is_empty());
    }
}
