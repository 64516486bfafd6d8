//! Differential operators in η with rational-function coefficients, and the
//! intertwining operators of the multi-indexed systems.

use std::fmt;

use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::exact::rational::{binomial, factorial, int, pow_neg_one, pow_rational};
use crate::exact::{Poly, RatFunc, Rational};
use crate::families::{pi_d, ParamPoint, SeedType};
use crate::gauged::{ratfunc_det, Gauge, GaugedFn};
use crate::mindexed::{p_gauge, IndexSet, MultiIndexed};
use crate::report::Check;

/// `Σ_k c_k(η) ∂^k`.
#[derive(Clone, PartialEq, Eq)]
pub struct DiffOp {
    coeffs: Vec<RatFunc>,
}

impl DiffOp {
    pub fn new(mut coeffs: Vec<RatFunc>) -> Self {
        while coeffs.last().is_some_and(RatFunc::is_zero) {
            coeffs.pop();
        }
        DiffOp { coeffs }
    }

    pub fn from_polys(cs: Vec<Poly>) -> Self {
        DiffOp::new(cs.into_iter().map(RatFunc::from_poly).collect())
    }

    pub fn zero() -> Self {
        DiffOp { coeffs: Vec::new() }
    }

    pub fn identity() -> Self {
        DiffOp::multiplication(RatFunc::one())
    }

    pub fn multiplication(f: RatFunc) -> Self {
        DiffOp::new(vec![f])
    }

    /// `∂^k`.
    pub fn d(k: usize) -> Self {
        let mut c = vec![RatFunc::zero(); k + 1];
        c[k] = RatFunc::one();
        DiffOp::new(c)
    }

    /// `η^i ∂^j`.
    pub fn monomial(i: usize, j: usize) -> Self {
        let mut c = vec![RatFunc::zero(); j + 1];
        c[j] = RatFunc::from_poly(Poly::monomial(Rational::one(), i));
        DiffOp::new(c)
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatFunc {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Highest order present; `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_polynomial)
    }

    /// Polynomial coefficients, or `NotPolynomial` naming the offending order.
    pub fn poly_coeffs(&self) -> Result<Vec<Poly>, Error> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                c.to_poly().map_err(|_| {
                    Error::NotPolynomial(format!("coefficient of ∂^{k} has denominator {}", c.den()))
                })
            })
            .collect()
    }

    pub fn scale(&self, a: &Rational) -> Self {
        DiffOp::new(self.coeffs.iter().map(|c| c.scale(a)).collect())
    }

    /// `f ∘ self`, i.e. multiply every coefficient on the left by `f`.
    pub fn left_mul(&self, f: &RatFunc) -> Self {
        DiffOp::new(self.coeffs.iter().map(|c| c * f).collect())
    }

    pub fn add(&self, o: &DiffOp) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        DiffOp::new((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &DiffOp) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn apply(&self, p: &Poly) -> RatFunc {
        let mut out = RatFunc::zero();
        let mut dp = p.clone();
        for c in &self.coeffs {
            if dp.is_zero() {
                break;
            }
            if !c.is_zero() {
                out = &out + &c.mul_poly(&dp);
            }
            dp = dp.derivative();
        }
        out
    }

    pub fn apply_ratfunc(&self, f: &RatFunc) -> RatFunc {
        let mut out = RatFunc::zero();
        let mut df = f.clone();
        for c in &self.coeffs {
            if df.is_zero() {
                break;
            }
            if !c.is_zero() {
                out = &out + &(c * &df);
            }
            df = df.derivative();
        }
        out
    }

    /// `(num, den)` with `self = den^{-1} Σ_j num_j ∂^j`.
    pub fn over_common_denominator(&self) -> (Vec<Poly>, Poly) {
        let den = self.coeffs.iter().fold(Poly::one(), |acc, c| acc.lcm(c.den()));
        let num = self
            .coeffs
            .iter()
            .map(|c| c.num() * &den.div_exact(c.den()).expect("den divides lcm"))
            .collect();
        (num, den)
    }

    /// Rebuild a polynomial-coefficient operator of order `<= order` from its
    /// images of `1, η, ..., η^order`, using
    /// `L η^k = Σ_j c_j k!/(k-j)! η^{k-j}`.
    pub fn from_monomial_images(images: &[Poly]) -> DiffOp {
        let mut cs: Vec<Poly> = Vec::with_capacity(images.len());
        for (k, img) in images.iter().enumerate() {
            let mut rest = img.clone();
            for (j, c) in cs.iter().enumerate() {
                let f = falling(k, j);
                rest = &rest - &c.shift_up(k - j).scale(&f);
            }
            let kf = falling(k, k);
            cs.push(rest.scale(&(Rational::one() / kf)));
        }
        DiffOp::from_polys(cs)
    }

    /// `self ∘ o`, by `∂^i ∘ g = Σ_r C(i,r) g^{(r)} ∂^{i-r}`.
    pub fn compose(&self, o: &DiffOp) -> DiffOp {
        if self.is_zero() || o.is_zero() {
            return DiffOp::zero();
        }
        let top = self.coeffs.len() - 1;
        // derivs[j][r] = r-th derivative of o's coefficient of ∂^j.
        let derivs: Vec<Vec<RatFunc>> = o
            .coeffs
            .iter()
            .map(|g| {
                let mut v = Vec::with_capacity(top + 1);
                let mut cur = g.clone();
                v.push(cur.clone());
                for _ in 0..top {
                    cur = cur.derivative();
                    v.push(cur.clone());
                }
                v
            })
            .collect();
        let mut acc = vec![RatFunc::zero(); top + o.coeffs.len()];
        for (i, f) in self.coeffs.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (j, dg) in derivs.iter().enumerate() {
                for r in 0..=i {
                    if dg[r].is_zero() {
                        continue;
                    }
                    let b = binomial(&int(i as i64), r);
                    let t = (f * &dg[r]).scale(&b);
                    let k = i - r + j;
                    acc[k] = &acc[k] + &t;
                }
            }
        }
        DiffOp::new(acc)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({})", c.display_in(var)),
                1 => format!("({})∂", c.display_in(var)),
                _ => format!("({})∂^{k}", c.display_in(var)),
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOp[{}]", self.display_in("η"))
    }
}

/// `a^{ij}_r = r! C(i,r) C(j,r)`.
pub fn aij(i: usize, j: usize, r: usize) -> Rational {
    factorial(r) * binomial(&int(i as i64), r) * binomial(&int(j as i64), r)
}

/// `∂^j ∘ η^i` against `Σ_r a^{ij}_r η^{i-r} ∂^{j-r}` for `i, j <= max`.
pub fn aibj_check(max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for i in 0..=max {
        for j in 0..=max {
            let lhs = DiffOp::d(j).compose(&DiffOp::monomial(i, 0));
            let mut rhs = DiffOp::zero();
            for r in 0..=i.min(j) {
                rhs = rhs.add(&DiffOp::monomial(i - r, j - r).scale(&aij(i, j, r)));
            }
            out.push(Check::from_bool(format!("AiBj[i={i},j={j}]"), lhs == rhs, "Leibniz"));
        }
    }
    out
}

fn gauge_to_ratfunc(g: &Gauge, r: RatFunc, what: &str) -> Result<RatFunc, Error> {
    GaugedFn::new(g.clone(), r).into_ratfunc().map_err(|e| match e {
        Error::GaugeMismatch(m) => Error::GaugeMismatch(format!("{what}: {m}")),
        other => other,
    })
}

/// Expand an `(M+1)×(M+1)` operator determinant along its ∂-column:
/// `Σ_i (-1)^{M+i} minor_i ∂^i`, with `minor_i` the determinant of the
/// function columns with row `i` deleted.
fn determinant_operator(cols: &[Vec<RatFunc>]) -> Vec<RatFunc> {
    let m = cols.len();
    (0..=m)
        .map(|i| {
            let minor: Vec<Vec<RatFunc>> = cols
                .iter()
                .map(|c| (0..=m).filter(|&k| k != i).map(|k| c[k].clone()).collect())
                .collect();
            ratfunc_det(&minor).scale(&pow_neg_one((m + i) as i64))
        })
        .collect()
}

fn column_parts(fs: &[GaugedFn]) -> (Gauge, Vec<Vec<RatFunc>>) {
    let m = fs.len();
    let mut gauge = Gauge::one();
    let cols = fs
        .iter()
        .map(|f| {
            gauge = &gauge * &f.gauge;
            f.derivative_parts(m)
        })
        .collect();
    (gauge, cols)
}

fn falling(k: usize, j: usize) -> Rational {
    (0..j).fold(Rational::one(), |acc, i| acc * int((k - i) as i64))
}

/// A rational-coefficient operator prepared for exact application to
/// polynomials.
pub struct PreparedOp {
    num: Vec<Poly>,
    den: Poly,
}

impl PreparedOp {
    pub fn new(op: &DiffOp) -> Self {
        let (num, den) = op.over_common_denominator();
        PreparedOp { num, den }
    }

    /// `op·q`, which must be a polynomial.
    pub fn apply_poly(&self, q: &Poly) -> Result<Poly, Error> {
        let mut acc = Poly::zero();
        let mut dq = q.clone();
        for c in &self.num {
            if dq.is_zero() {
                break;
            }
            acc = &acc + &(c * &dq);
            dq = dq.derivative();
        }
        let (quo, rem) = acc.div_rem(&self.den)?;
        if rem.is_zero() {
            Ok(quo)
        } else {
            Err(Error::NotPolynomial(format!("image has denominator {}", self.den)))
        }
    }
}

/// The multi-step forward operator `F̂` with `F̂ P_n = P_{D,n}`.
pub fn forward_op(mi: &MultiIndexed) -> Result<DiffOp, Error> {
    let (g, cols) = column_parts(&mi.seeds);
    let coeffs = determinant_operator(&cols);
    let rho = &g * &p_gauge(&mi.point, &mi.d);
    let cs = coeffs
        .into_iter()
        .map(|c| gauge_to_ratfunc(&rho, c, "forward operator"))
        .collect::<Result<Vec<_>, _>>()?;
    let op = DiffOp::new(cs);
    op.poly_coeffs()?;
    Ok(op)
}

/// Gauge of `m_j` for the seed `d_j` of type `t`.
fn m_gauge(p: &ParamPoint, d: &IndexSet, t: SeedType) -> Gauge {
    let (s1, s2) = d.counts();
    let half = Rational::new(1.into(), 2.into());
    match (p, t) {
        (ParamPoint::Laguerre { g }, SeedType::I) => Gauge::eta(-(int(s1 - s2) + g - half)),
        (ParamPoint::Laguerre { .. }, SeedType::II) => Gauge::exp(1),
        (ParamPoint::Jacobi { g, .. }, SeedType::I) => Gauge::one_minus(-(int(s1 - s2) + g - half)),
        (ParamPoint::Jacobi { h, .. }, SeedType::II) => Gauge::one_plus(-(int(s2 - s1) + h - half)),
        (ParamPoint::Hermite, _) => Gauge::one(),
    }
}

/// The functions `m_j = Ξ_{D∖d_j} × gauge`.
pub fn m_functions(mi: &MultiIndexed) -> Result<Vec<GaugedFn>, Error> {
    let d = &mi.d;
    d.entries()
        .iter()
        .enumerate()
        .map(|(j, &(_, t))| {
            let sub = MultiIndexed::new(&mi.point, &d.without(j))?;
            Ok(GaugedFn::with_gauge(m_gauge(&mi.point, d, t), sub.xi))
        })
        .collect()
}

/// `ρ_B` as a gauge times a rational function.
pub fn rho_b(mi: &MultiIndexed) -> Result<GaugedFn, Error> {
    let p = &mi.point;
    let m = mi.m() as i64;
    let (s1, s2) = mi.d.counts();
    let half = Rational::new(1.into(), 2.into());
    let cf = p.c_f()?;
    let k = pow_rational(&cf, 2 * m) * pow_neg_one(m * (m + 1) / 2);
    let r = RatFunc::new(Poly::constant(k), mi.xi.pow(m as usize))?;
    let gauge = match p {
        ParamPoint::Laguerre { g } => Gauge {
            a: -s2,
            b: int(s1) * (int(s1) + g + &half),
            ..Gauge::default()
        },
        ParamPoint::Jacobi { g, h } => Gauge {
            c: int(s1) * (int(s1) + g + &half),
            d: int(s2) * (int(s2) + h + &half),
            ..Gauge::default()
        },
        ParamPoint::Hermite => Gauge::one(),
    };
    Ok(GaugedFn::new(gauge, r))
}

/// Denominators of `B̂` must divide `Ξ^M` up to powers of `η`, `1 ∓ η`.
fn check_denominator(den: &Poly, xi: &Poly, m: usize) -> Result<(), Error> {
    let mut rest = den.clone();
    let g = rest.gcd(&xi.pow(m));
    rest = rest.div_exact(&g)?;
    for f in [Poly::x(), Poly::from_ints(&[1, -1]), Poly::from_ints(&[1, 1])] {
        loop {
            let (q, r) = rest.div_rem(&f)?;
            if !r.is_zero() || rest.is_constant() {
                break;
            }
            rest = q;
        }
    }
    if rest.is_constant() {
        Ok(())
    } else {
        Err(Error::DenominatorEscape(format!("factor {rest} outside Ξ^{m}")))
    }
}

/// The multi-step backward operator `B̂` with `B̂ P_{D,n} = π_D(n) P_n`.
pub fn backward_op(mi: &MultiIndexed) -> Result<DiffOp, Error> {
    if mi.m() == 0 {
        return Ok(DiffOp::identity());
    }
    let ms = m_functions(mi)?;
    let (g, cols) = column_parts(&ms);
    let coeffs = determinant_operator(&cols);
    let rho = rho_b(mi)?;
    let gauge = &g * &rho.gauge;
    let cs = coeffs
        .into_iter()
        .map(|c| gauge_to_ratfunc(&gauge, &c * &rho.r, "backward operator"))
        .collect::<Result<Vec<_>, _>>()?;
    for c in &cs {
        check_denominator(c.den(), &mi.xi, mi.m())?;
    }
    Ok(DiffOp::new(cs))
}

/// `ρ_B · W[m_1, ..., m_M, q]` computed directly.
pub fn backward_via_wronskian(mi: &MultiIndexed, q: &Poly) -> Result<RatFunc, Error> {
    if mi.m() == 0 {
        return Ok(RatFunc::from_poly(q.clone()));
    }
    let mut fs = m_functions(mi)?;
    fs.push(GaugedFn::from_poly(q.clone()));
    let w = crate::gauged::wronskian_gauged(&fs);
    let rho = rho_b(mi)?;
    (&w * &rho).into_ratfunc()
}

/// `c_{11} = c_1(η; λ^{[s_I,s_II]})` and `c_{10} = c_1(η; λ^{[s_I,s_II]} - δ)`.
pub fn c11_c10(mi: &MultiIndexed) -> Result<(Poly, Poly), Error> {
    let (s1, s2) = mi.d.counts();
    let lam = mi.point.virtual_shift(s1, s2);
    let c11 = lam.c1()?;
    let down = match &lam {
        ParamPoint::Laguerre { g } => ParamPoint::laguerre(g - int(1)),
        ParamPoint::Jacobi { g, h } => ParamPoint::jacobi(g - int(1), h - int(1)),
        ParamPoint::Hermite => ParamPoint::Hermite,
    };
    Ok((c11, down.c1()?))
}

/// `H̃_D = -4(c_2∂² + (c_{11} - 2c_2Ξ'/Ξ)∂ + c_2Ξ''/Ξ - c_{10}Ξ'/Ξ)`.
pub fn htilde_op(mi: &MultiIndexed) -> Result<DiffOp, Error> {
    let c2 = RatFunc::from_poly(mi.point.c2()?);
    let (c11, c10) = c11_c10(mi)?;
    let xi = &mi.xi;
    let d1 = RatFunc::new(xi.derivative(), xi.clone())?;
    let d2 = RatFunc::new(xi.nth_derivative(2), xi.clone())?;
    let two = Rational::from_integer(2.into());
    let c0 = &(&c2 * &d2) - &d1.mul_poly(&c10);
    let c1 = &RatFunc::from_poly(c11) - &(&c2 * &d1).scale(&two);
    Ok(DiffOp::new(vec![c0, c1, c2]).scale(&int(-4)))
}

/// Single-step operators `F_D(λ)` and `B_D(λ)`.
pub fn single_step_ops(mi: &MultiIndexed, mi_up: &MultiIndexed) -> Result<(DiffOp, DiffOp), Error> {
    let p = &mi.point;
    let cf = p.c_f()?;
    let (xi, xu) = (&mi.xi, &mi_up.xi);
    let ratio_up = RatFunc::new(xu.clone(), xi.clone())?;
    let log_up = RatFunc::new(xu.derivative(), xu.clone())?;
    let f = DiffOp::new(vec![-log_up, RatFunc::one()]).left_mul(&ratio_up.scale(&cf));

    let c2 = p.c2()?;
    let (c11, _) = c11_c10(mi)?;
    let log_xi = RatFunc::new(xi.derivative(), xi.clone())?;
    let c1_over_c2 = RatFunc::new(c11, c2.clone())?;
    let pref = RatFunc::new(&c2 * xi, xu.clone())?.scale(&(int(-4) / &cf));
    let b = DiffOp::new(vec![&c1_over_c2 - &log_xi, RatFunc::one()]).left_mul(&pref);
    Ok((f, b))
}

/// All intertwining and eigen-identities for one `(D, λ)` and `n <= n_max`.
pub fn verify_intertwining(
    p: &ParamPoint,
    d: &IndexSet,
    n_max: usize,
) -> Result<Vec<Check>, Error> {
    let mi = MultiIndexed::new(p, d)?;
    let fam = p.family();
    let tag = |s: &str| format!("{fam}{d}.{s}");
    let fwd = forward_op(&mi)?;
    let bwd = backward_op(&mi)?;
    let ht = htilde_op(&mi)?;
    let mi_up = MultiIndexed::new(&p.shifted(), d)?;
    let (fs, bs) = single_step_ops(&mi, &mi_up)?;
    let pds = mi.p_range(n_max)?;
    let pds_up = mi_up.p_range(n_max)?;
    let mut out = Vec::new();

    // The composites B̂F̂ and F̂B̂ are applied step by step; composing the
    // rational operators first costs far more than the check itself.
    let bwd_p = PreparedOp::new(&bwd);
    let hs = bs.compose(&fs);
    out.push(Check::from_bool(tag("B_D∘F_D=H̃"), hs == ht, "operator identity"));

    for n in 0..=n_max as i64 {
        let pn = p.classical(n);
        let pdn = &pds[n as usize];
        let pi = pi_d(p, d.entries(), n)?;
        let e = p.energy(n)?;
        let rp = |q: &Poly| RatFunc::from_poly(q.clone());
        let mut ok = true;
        let mut failed = Vec::new();
        let mut req = |name: &str, cond: bool| {
            if !cond {
                ok = false;
                failed.push(name.to_string());
            }
        };
        let fpn = fwd.apply(&pn);
        let bpdn = bwd_p.apply_poly(pdn);
        req("F̂P_n=P_Dn", fpn == rp(pdn));
        req("B̂P_Dn=πP_n", bpdn.as_ref() == Ok(&pn.scale(&pi)));
        let bf = fpn.to_poly().and_then(|q| bwd_p.apply_poly(&q));
        req("B̂F̂P_n=πP_n", bf == Ok(pn.scale(&pi)));
        let fb = bpdn.as_ref().map(|q| fwd.apply(q));
        req("F̂B̂P_Dn=πP_Dn", fb == Ok(rp(&pdn.scale(&pi))));
        req("H̃P_Dn=E_nP_Dn", ht.apply(pdn) == rp(&pdn.scale(&e)));
        req("ρ_B·W=B̂", bpdn.map(RatFunc::from_poly) == backward_via_wronskian(&mi, pdn));
        let down = if n == 0 { Poly::zero() } else { pds_up[n as usize - 1].clone() };
        req("F_D P_Dn=f_n P_D,n-1", fs.apply(pdn) == rp(&down.scale(&p.f_n(n)?)));
        if n >= 1 {
            req("B_D P_D,n-1=b_(n-1)P_Dn", bs.apply(&down) == rp(&pdn.scale(&p.b_prev(n)?)));
        }
        req("B_D F_D P_Dn=H̃P_Dn", hs.apply(pdn) == ht.apply(pdn));
        out.push(Check::from_bool(
            tag(&format!("intertwining[n={n}]")),
            ok,
            if failed.is_empty() { "all identities".to_string() } else { failed.join(", ") },
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(d.len() as u64);
    let off_basis = crate::gauged::random_polys(&mut rng, 3, 6)
        .iter()
        .all(|q| backward_via_wronskian(&mi, q).as_ref() == Ok(&bwd.apply(q)));
    out.push(Check::from_bool(tag("ρ_B·W=B̂ off basis"), off_basis, "3 random polynomials"));
    if !d.is_empty() {
        let (a, c) = crate::mindexed::plusdelta_check(p, d)?;
        out.push(Check { name: tag("plusdelta"), detail: format!("A = {a}"), ..c });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;
    use crate::report::all_pass;

    fn set(s: &str) -> IndexSet {
        s.parse().unwrap()
    }

    #[test]
    fn leibniz_examples() {
        let lhs = DiffOp::d(1).compose(&DiffOp::monomial(1, 0));
        assert_eq!(lhs, DiffOp::monomial(1, 1).add(&DiffOp::identity()));
        let lhs = DiffOp::d(2).compose(&DiffOp::monomial(2, 0));
        let rhs = DiffOp::monomial(2, 2)
            .add(&DiffOp::monomial(1, 1).scale(&int(4)))
            .add(&DiffOp::identity().scale(&int(2)));
        assert_eq!(lhs, rhs);
        assert_eq!(DiffOp::d(1).apply(&Poly::monomial(int(1), 3)), RatFunc::from_poly(Poly::monomial(int(3), 2)));
        assert!(all_pass(&aibj_check(4)));
    }

    #[test]
    fn forward_for_one_seed() {
        let g = rat(7, 3);
        let p = ParamPoint::laguerre(g.clone());
        let mi = MultiIndexed::new(&p, &set("1I")).unwrap();
        let f = forward_op(&mi).unwrap();
        let xi = Poly::new(vec![&g + rat(1, 2), int(1)]);
        let want = DiffOp::from_polys(vec![Poly::new(vec![-(&g + rat(3, 2)), int(-1)]), xi]);
        assert_eq!(f, want);
        assert_eq!(forward_op(&MultiIndexed::new(&p, &IndexSet::empty()).unwrap()).unwrap(), DiffOp::identity());
    }

    #[test]
    fn backward_for_one_seed() {
        let g = rat(7, 3);
        let p = ParamPoint::laguerre(g.clone());
        let mi = MultiIndexed::new(&p, &set("1I")).unwrap();
        let rho = rho_b(&mi).unwrap();
        assert_eq!(rho.gauge, Gauge::eta(&g + rat(3, 2)));
        assert_eq!(rho.r, RatFunc::new(Poly::constant(int(-4)), mi.xi.clone()).unwrap());
        let b = backward_op(&mi).unwrap();
        let p3 = mi.p_n(3).unwrap();
        let want = p.classical(3).scale(&(int(4) * (int(3) + &g + rat(3, 2))));
        assert_eq!(b.apply(&p3), RatFunc::from_poly(want));
        assert_eq!(backward_via_wronskian(&mi, &p3).unwrap(), b.apply(&p3));
    }

    #[test]
    fn jacobi_rho_b() {
        let (g, h) = (rat(7, 3), rat(9, 4));
        let p = ParamPoint::jacobi(g.clone(), h);
        let mi = MultiIndexed::new(&p, &set("1I")).unwrap();
        let rho = rho_b(&mi).unwrap();
        assert_eq!(rho.gauge, Gauge::one_minus(&g + rat(3, 2)));
        assert_eq!(rho.r, RatFunc::new(Poly::constant(int(-16)), mi.xi.clone()).unwrap());
    }

    #[test]
    fn classical_htilde() {
        let g = rat(7, 3);
        let p = ParamPoint::laguerre(g.clone());
        let mi = MultiIndexed::new(&p, &IndexSet::empty()).unwrap();
        let ht = htilde_op(&mi).unwrap();
        let want = DiffOp::from_polys(vec![
            Poly::zero(),
            Poly::new(vec![-(&g + rat(1, 2)) * int(4), int(4)]),
            Poly::from_ints(&[0, -4]),
        ]);
        assert_eq!(ht, want);
    }

    #[test]
    fn intertwining_small_sets() {
        let l = ParamPoint::laguerre(rat(7, 3));
        let j = ParamPoint::jacobi(rat(7, 3), rat(9, 4));
        for d in ["1I", "2II", "1I,2II"] {
            assert!(all_pass(&verify_intertwining(&l, &set(d), 4).unwrap()), "L {d}");
            assert!(all_pass(&verify_intertwining(&j, &set(d), 4).unwrap()), "J {d}");
        }
    }
}
