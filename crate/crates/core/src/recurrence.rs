//! Admissible multipliers `X(η)`, the operator `Θ_{X,D} = B̂∘X∘F̂`, and the
//! recurrence coefficients `r_{n,k}` by direct and classical expansion.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::diffop::{backward_op, c11_c10, forward_op, DiffOp, PreparedOp};
use crate::error::Error;
use crate::exact::basis::{expand_in_basis, in_span};
use crate::exact::rational::{format_rational, int, rat};
use crate::exact::{Degree, Poly, Rational};
use crate::families::{pi_d, ParamPoint};
use crate::mindexed::{IndexSet, MultiIndexed};
use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Direct,
    Classical,
    Bispectral,
}

/// `r_{n,k}` for `0 <= n <= n_max` and `-L <= k <= L`; `rows[n][k + L]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceTable {
    pub d: IndexSet,
    pub x: Poly,
    pub l: usize,
    pub n_max: usize,
    pub rows: Vec<Vec<Rational>>,
    pub route: Route,
}

impl RecurrenceTable {
    pub fn r(&self, n: i64, k: i64) -> Rational {
        let l = self.l as i64;
        if n < 0 || n as usize > self.n_max || k.abs() > l {
            return Rational::zero();
        }
        self.rows[n as usize][(k + l) as usize].clone()
    }

    /// Entries agree with `other` on the common range of `n`.
    pub fn agrees_with(&self, other: &RecurrenceTable) -> bool {
        let n = self.n_max.min(other.n_max) as i64;
        let l = self.l.max(other.l) as i64;
        (0..=n).all(|n| (-l..=l).all(|k| self.r(n, k) == other.r(n, k)))
    }

    /// First differing `(n, k)` on the common range.
    pub fn first_difference(&self, other: &RecurrenceTable) -> Option<(i64, i64)> {
        let n = self.n_max.min(other.n_max) as i64;
        let l = self.l.max(other.l) as i64;
        (0..=n)
            .flat_map(|n| (-l..=l).map(move |k| (n, k)))
            .find(|&(n, k)| self.r(n, k) != other.r(n, k))
    }
}

impl Serialize for RecurrenceTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect();
        let mut st = s.serialize_struct("RecurrenceTable", 6)?;
        st.serialize_field("D", &self.d.to_string())?;
        st.serialize_field("X", &self.x)?;
        st.serialize_field("L", &self.l)?;
        st.serialize_field("nmax", &self.n_max)?;
        st.serialize_field("k_range", &[-(self.l as i64), self.l as i64])?;
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}

/// `X(η) = ∫_0^η Ξ_D(y)Y(y)dy`.
pub fn build_x(mi: &MultiIndexed, y: &Poly) -> Result<Poly, Error> {
    if y.is_zero() {
        return Err(Error::InvalidArgument("Y must be nonzero".into()));
    }
    Ok((&mi.xi * y).integrate_from_zero())
}

fn degree_of(x: &Poly) -> Result<usize, Error> {
    match x.degree() {
        Degree::Finite(l) if l > 0 => Ok(l),
        _ => Err(Error::InvalidArgument(format!("X = {x} must be nonconstant"))),
    }
}

/// `Θ_{X,D} = B̂∘X∘F̂`; `NotPolynomial` when some coefficient keeps a
/// denominator, which is what happens for inadmissible `X`.
pub fn theta_op(mi: &MultiIndexed, x: &Poly) -> Result<DiffOp, Error> {
    let fwd = forward_op(mi)?;
    let bwd = backward_op(mi)?;
    theta_from(&bwd, x, &fwd)
}

/// `B̂∘X∘F̂` reconstructed from its action on `1, η, ..., η^{2M}`; any
/// non-polynomial image means a coefficient of `Θ` is not polynomial.
pub fn theta_from(bwd: &DiffOp, x: &Poly, fwd: &DiffOp) -> Result<DiffOp, Error> {
    Intertwiners::from_ops(fwd.clone(), bwd)?.theta(x)
}

/// `F̂` and `B̂` of one `D`, prepared for repeated use.
pub struct Intertwiners {
    fwd: DiffOp,
    bwd: PreparedOp,
    order: usize,
}

impl Intertwiners {
    pub fn new(mi: &MultiIndexed) -> Result<Self, Error> {
        Self::from_ops(forward_op(mi)?, &backward_op(mi)?)
    }

    pub fn from_ops(fwd: DiffOp, bwd: &DiffOp) -> Result<Self, Error> {
        fwd.poly_coeffs()?;
        let order = bwd.order().unwrap_or(0) + fwd.order().unwrap_or(0);
        Ok(Intertwiners { fwd, bwd: PreparedOp::new(bwd), order })
    }

    pub fn theta(&self, x: &Poly) -> Result<DiffOp, Error> {
        let images = (0..=self.order)
            .map(|k| {
                let fm = self.fwd.apply(&Poly::monomial(Rational::one(), k)).to_poly()?;
                self.bwd.apply_poly(&(x * &fm))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DiffOp::from_monomial_images(&images))
    }
}

/// `B̂∘X∘F̂` by operator composition; slow, kept as a cross-check.
pub fn theta_by_composition(bwd: &DiffOp, x: &Poly, fwd: &DiffOp) -> Result<DiffOp, Error> {
    let xf = DiffOp::from_polys(vec![x.clone()]).compose(fwd);
    let theta = bwd.compose(&xf);
    theta.poly_coeffs()?;
    Ok(theta)
}

/// `P_{D,0}, ..., P_{D,n_max}`, the basis used by the direct route.
pub fn direct_basis(mi: &MultiIndexed, n_max: usize) -> Result<Vec<Poly>, Error> {
    mi.p_range(n_max)
}

/// `r_{n,k}` by expanding `X·P_{D,n}` in `{P_{D,m}}`. The remainder below
/// degree `ℓ_D` must vanish and the band must fit in `|k| <= L`.
pub fn coeffs_direct(mi: &MultiIndexed, x: &Poly, n_max: usize) -> Result<RecurrenceTable, Error> {
    let l = degree_of(x)?;
    let basis = direct_basis(mi, n_max + l)?;
    coeffs_direct_with(mi, x, n_max, &basis)
}

pub fn coeffs_direct_with(
    mi: &MultiIndexed,
    x: &Poly,
    n_max: usize,
    basis: &[Poly],
) -> Result<RecurrenceTable, Error> {
    let l = degree_of(x)?;
    let ell = mi.ell() as usize;
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let (coef, rem) = expand_in_basis(&(x * &basis[n]), &basis[..=n + l], ell)?;
        if !rem.is_zero() {
            return Err(Error::NonzeroRemainder(format!(
                "X·P_(D,{n}) leaves {rem} below degree {ell}"
            )));
        }
        rows.push(band(&coef, n, l)?);
    }
    Ok(RecurrenceTable { d: mi.d.clone(), x: x.clone(), l, n_max, rows, route: Route::Direct })
}

/// Cut the coefficient vector indexed by `m` down to `k = m - n ∈ [-L, L]`.
fn band(coef: &[Rational], n: usize, l: usize) -> Result<Vec<Rational>, Error> {
    let mut row = vec![Rational::zero(); 2 * l + 1];
    for (m, c) in coef.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let k = m as i64 - n as i64;
        if k.unsigned_abs() as usize > l {
            return Err(Error::NonzeroRemainder(format!(
                "row {n} has r_(n,{k}) = {} outside the band |k| <= {l}",
                format_rational(c)
            )));
        }
        row[(k + l as i64) as usize] = c.clone();
    }
    Ok(row)
}

/// `r_{n,k} = r^{(0)}_{n,k}/π_D(n+k)` with `Θ P_n = Σ_k r^{(0)}_{n,k} P_{n+k}`.
pub fn coeffs_classical(
    mi: &MultiIndexed,
    x: &Poly,
    theta: &DiffOp,
    n_max: usize,
) -> Result<RecurrenceTable, Error> {
    let l = degree_of(x)?;
    let p = &mi.point;
    let classical: Vec<Poly> = (0..=(n_max + l) as i64).map(|m| p.classical(m)).collect();
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let tp = theta.apply(&classical[n]).to_poly()?;
        let (mut coef, rem) = expand_in_basis(&tp, &classical[..=n + l], 0)?;
        debug_assert!(rem.is_zero());
        for (m, c) in coef.iter_mut().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pi = pi_d(p, mi.d.entries(), m as i64)?;
            if pi.is_zero() {
                return Err(Error::GenericityViolation(format!("π_D({m}) = 0 at {p}")));
            }
            *c /= pi;
        }
        rows.push(band(&coef, n, l)?);
    }
    Ok(RecurrenceTable { d: mi.d.clone(), x: x.clone(), l, n_max, rows, route: Route::Classical })
}

/// `Ξ_D | Ξ'(2c_2p' + c_{10}p) - Ξ''c_2p`, the membership condition for the
/// span of the `P_{D,n}` (a characterization when `Ξ_D` has simple zeros).
pub fn membership_test(mi: &MultiIndexed, p: &Poly) -> Result<bool, Error> {
    let xi = &mi.xi;
    if xi.is_constant() {
        return Ok(true);
    }
    let c2 = mi.point.c2()?;
    let (_, c10) = c11_c10(mi)?;
    let lhs = &xi.derivative() * &(&(&c2 * &p.derivative()).scale(&int(2)) + &(&c10 * p));
    let q = &lhs - &(&xi.nth_derivative(2) * &(&c2 * p));
    Ok(q.div_rem(xi)?.1.is_zero())
}

pub fn is_square_free(p: &Poly) -> bool {
    p.gcd(&p.derivative()).is_constant()
}

/// All recurrence checks for one `(D, Y)`: `Θ` polynomial, closure with
/// zero remainder, agreement of the two routes, membership of `X·P_{D,n}`,
/// and negative controls for an inadmissible `X`.
pub fn closure_checks(p: &ParamPoint, d: &IndexSet, y: &Poly, n_max: usize) -> Vec<Check> {
    closure_checks_multi(p, d, std::slice::from_ref(y), n_max)
}

/// As `closure_checks` for several `Y`, sharing `F̂`, `B̂` and the basis.
pub fn closure_checks_multi(p: &ParamPoint, d: &IndexSet, ys: &[Poly], n_max: usize) -> Vec<Check> {
    let mi = match MultiIndexed::new(p, d) {
        Ok(mi) => mi,
        Err(e) => return vec![Check::fail(format!("{p} {d}: construct"), e.to_string())],
    };
    let setup = || -> Result<(Intertwiners, Vec<Poly>), Error> {
        let top = ys.iter().filter_map(|y| y.degree().finite()).max().unwrap_or(0);
        let l_max = mi.ell() as usize + top + 1;
        Ok((Intertwiners::new(&mi)?, direct_basis(&mi, n_max + l_max)?))
    };
    let (ops, basis) = match setup() {
        Ok(v) => v,
        Err(e) => return vec![Check::fail(format!("{p} {d}: intertwiners"), e.to_string())],
    };
    let mut out = Vec::new();
    for y in ys {
        let tag = format!("{} {d} Y={}", p, y.display_in("η"));
        let run = || -> Result<Vec<Check>, Error> {
            let mut cs = Vec::new();
            let x = build_x(&mi, y)?;
            let l = degree_of(&x)?;
            cs.push(Check::from_bool(
                format!("{tag}: deg X"),
                l as i64 == mi.ell() + y.degree().finite().unwrap_or(0) as i64 + 1,
                format!("L = {l}"),
            ));
            let theta = ops.theta(&x)?;
            cs.push(Check::pass(format!("{tag}: Θ polynomial"), format!("order {:?}", theta.order())));
            let direct = coeffs_direct_with(&mi, &x, n_max, &basis)?;
            cs.push(Check::pass(format!("{tag}: closure"), format!("{} terms, n <= {n_max}", 2 * l + 1)));
            let classical = coeffs_classical(&mi, &x, &theta, n_max)?;
            cs.push(Check::from_bool(
                format!("{tag}: direct = classical"),
                direct.agrees_with(&classical),
                match direct.first_difference(&classical) {
                    Some((n, k)) => format!("differ at (n,k) = ({n},{k})"),
                    None => "tables equal".into(),
                },
            ));
            let mut member = true;
            for b in basis.iter().take(n_max.min(4) + 1) {
                member &= membership_test(&mi, b)? && membership_test(&mi, &(&x * b))?;
            }
            cs.push(Check::from_bool(format!("{tag}: membership"), member, "P_(D,n) and X·P_(D,n)"));
            cs.extend(negative_controls_with(&mi, &ops, &x, &basis));
            Ok(cs)
        };
        match run() {
            Ok(cs) => out.extend(cs),
            Err(e) => out.push(Check::fail(format!("{tag}: run"), e.to_string())),
        }
    }
    out
}

/// With `X' = 1` and with `X' = Ξ_DY + 1`, `Θ` must fail to be polynomial and
/// the direct expansion must leave a remainder for some `n <= ℓ_D`. Only
/// meaningful when `Ξ_D` is square-free; otherwise a skip is recorded.
pub fn negative_controls(mi: &MultiIndexed, x: &Poly, basis: &[Poly]) -> Vec<Check> {
    match Intertwiners::new(mi) {
        Ok(ops) => negative_controls_with(mi, &ops, x, basis),
        Err(e) => vec![Check::fail(format!("{} {}: negative control", mi.point, mi.d), e.to_string())],
    }
}

fn negative_controls_with(mi: &MultiIndexed, ops: &Intertwiners, x: &Poly, basis: &[Poly]) -> Vec<Check> {
    let tag = format!("{} {}", mi.point, mi.d);
    if mi.ell() == 0 {
        return vec![];
    }
    if !is_square_free(&mi.xi) {
        return vec![Check::pass(format!("{tag}: negative control"), "skipped, Ξ not square-free")];
    }
    let ell = mi.ell() as usize;
    [Poly::x(), x + &Poly::x()]
        .iter()
        .map(|bad| {
            let name = format!("{tag}: negative X = {}", bad.display_in("η"));
            let theta_fails = matches!(ops.theta(bad), Err(Error::NotPolynomial(_)));
            let l = bad.degree().finite().unwrap_or(0);
            let closure_fails = (0..=ell).filter(|n| n + l < basis.len()).any(|n| {
                expand_in_basis(&(bad * &basis[n]), &basis[..=n + l], ell)
                    .map(|(_, rem)| !rem.is_zero())
                    .unwrap_or(false)
            });
            Check::from_bool(
                name,
                theta_fails && closure_fails,
                format!("Θ rejected: {theta_fails}, remainder found: {closure_fails}"),
            )
        })
        .collect()
}

/// `-2Ξ` for Laguerre `D = {1^I, 2^II}` at the special values of `g`.
pub fn laguerre_degenerate_factorizations() -> Vec<(Rational, Poly)> {
    let e = Poly::x;
    let lin = |a: i64| &e() + &Poly::constant(int(a));
    vec![
        (rat(-1, 2), &(&e().pow(2) * &lin(-2)) * &lin(-6)),
        (rat(3, 2), &e().pow(2) * &(&e().pow(2) + &Poly::constant(int(-8)))),
        (rat(5, 2), &e().pow(3) * &lin(4)),
        (rat(-13, 2), &lin(-6).pow(3) * &lin(-14)),
    ]
}

/// The Laguerre `{1^I, 2^II}` quartic at its multiple-root parameters:
/// factorization, polynomiality of `Θ`, and closure of `X·P_{D,n}` inside the
/// span of `P_{D,m}` for `m <= n + L` (some `P_{D,m}` drop degree there, so
/// closure is tested as span membership).
pub fn degenerate_parameter_suite(n_max: usize) -> Vec<Check> {
    let d: IndexSet = "1I,2II".parse().expect("valid index set");
    let mut out = Vec::new();
    for (g, want) in laguerre_degenerate_factorizations() {
        let tag = format!("L g={} {d}", format_rational(&g));
        let p = ParamPoint::laguerre(g);
        let mi = match MultiIndexed::new(&p, &d) {
            Ok(mi) => mi,
            Err(e) => {
                out.push(Check::fail(format!("{tag}: construct"), e.to_string()));
                continue;
            }
        };
        out.push(Check::from_bool(
            format!("{tag}: factorization"),
            mi.xi.scale(&int(-2)) == want,
            format!("-2Ξ = {}", mi.xi.scale(&int(-2)).display_in("η")),
        ));
        let res = (|| -> Result<Check, Error> {
            let x = build_x(&mi, &Poly::one())?;
            let l = degree_of(&x)?;
            theta_op(&mi, &x)?;
            let basis = (0..=(n_max + l) as i64).map(|m| mi.p_raw(m)).collect::<Result<Vec<_>, _>>()?;
            let poles: Vec<usize> = (0..=n_max + l)
                .filter(|&m| pi_d(&p, d.entries(), m as i64).map_or(true, |v| v.is_zero()))
                .collect();
            let bad: Vec<usize> =
                (0..=n_max).filter(|&n| !in_span(&(&x * &basis[n]), &basis[..=n + l])).collect();
            // r_{n,k} = r0/π_D(n+k) may have a pole where π_D vanishes; only
            // rows whose band avoids those m are required to close
            let unexplained: Vec<usize> = bad
                .iter()
                .copied()
                .filter(|&n| !poles.iter().any(|&m| m + l >= n && m <= n + l))
                .collect();
            Ok(Check::from_bool(
                format!("{tag}: closure"),
                unexplained.is_empty(),
                format!("n <= {n_max}; π_D zeros at m = {poles:?}; open rows {bad:?}; unexplained {unexplained:?}"),
            ))
        })();
        match res {
            Ok(c) => {
                out.push(Check::pass(format!("{tag}: Θ polynomial"), "B̂∘X∘F̂ has polynomial coefficients"));
                out.push(c);
            }
            Err(e) => out.push(Check::fail(format!("{tag}: Θ / closure"), e.to_string())),
        }
    }
    out
}

/// Lowest common denominator of the coefficients of `p`.
fn denominator_lcm(p: &Poly) -> Rational {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    Rational::from_integer(l)
}

/// `scale·Θ` has integer coefficients at each sample point (a sampled
/// consequence of `scale·Θ ∈ Z[∂, η, params]`). `X` comes from `Y = 1` and is
/// rescaled to an integer polynomial, since `Θ` is linear in `X` and the
/// integration leaves denominators.
pub fn theta_integrality(points: &[ParamPoint], d: &IndexSet, scale: i64) -> Vec<Check> {
    points
        .iter()
        .map(|p| {
            let name = format!("{p} {d}: {scale}Θ integral");
            let r = (|| -> Result<bool, Error> {
                let mi = MultiIndexed::new(p, d)?;
                let x = build_x(&mi, &Poly::one())?;
                let x = x.scale(&denominator_lcm(&x));
                let theta = theta_op(&mi, &x)?;
                Ok(theta
                    .poly_coeffs()?
                    .iter()
                    .all(|c| denominator_lcm(&c.scale(&int(scale))).is_one()))
            })();
            match r {
                Ok(ok) => Check::from_bool(name, ok, "coefficients checked"),
                Err(e) => Check::fail(name, e.to_string()),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{half, pochhammer};
    use crate::report::all_pass;

    fn lag(g: Rational) -> (MultiIndexed, Poly) {
        let mi = MultiIndexed::new(&ParamPoint::laguerre(g), &"1I".parse().unwrap()).unwrap();
        let x = build_x(&mi, &Poly::one()).unwrap();
        (mi, x)
    }

    #[test]
    fn laguerre_x_min() {
        let g = rat(7, 3);
        let (_, x) = lag(g.clone());
        let want = Poly::new(vec![int(0), &g + half(), half()]);
        assert_eq!(x, want);
    }

    #[test]
    fn jacobi_x_min() {
        let (g, h) = (rat(7, 3), rat(9, 4));
        let mi = MultiIndexed::new(&ParamPoint::jacobi(g.clone(), h.clone()), &"1I".parse().unwrap()).unwrap();
        let x = build_x(&mi, &Poly::one()).unwrap();
        let (a, b) = (&g + &h, &g - &h);
        let want = Poly::new(vec![int(0), (a - int(1)) * half(), (b + int(2)) * rat(1, 4)]);
        assert_eq!(x, want);
    }

    #[test]
    fn zero_y_rejected() {
        let (mi, _) = lag(rat(7, 3));
        assert!(matches!(build_x(&mi, &Poly::zero()), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn laguerre_theta_display() {
        let g = rat(7, 3);
        let (mi, x) = lag(g.clone());
        let theta = theta_op(&mi, &x).unwrap();
        let gp = &g + half();
        let c2 = Poly::new(vec![int(0), int(0), int(-4) * &gp, int(-2)]);
        let c1 = Poly::new(vec![int(0), int(-4) * pochhammer(&gp, 2), int(2) * (&g - rat(3, 2)), int(2)]);
        let c0 = Poly::new(vec![int(0), int(4) * (&g + rat(3, 2)).pow(2), int(2) * (&g + rat(7, 2))]);
        assert_eq!(theta.poly_coeffs().unwrap(), vec![c0, c1, c2]);
    }

    #[test]
    fn laguerre_rows() {
        let g = rat(9, 4);
        let (mi, x) = lag(g.clone());
        let t = coeffs_direct(&mi, &x, 12).unwrap();
        assert_eq!(t.r(1, 2), int(3));
        for n in 0..=12i64 {
            let nn = int(n);
            let want = (int(24) * &nn * &nn
                + int(4) * (int(10) * &g + int(11)) * &nn
                + (int(2) * &g + int(1)) * (int(6) * &g + int(13)))
                / int(8);
            assert_eq!(t.r(n, 0), want);
        }
        let theta = theta_op(&mi, &x).unwrap();
        assert_eq!(coeffs_classical(&mi, &x, &theta, 12).unwrap().first_difference(&t), None);
    }

    #[test]
    fn classical_degree_zero_reduces_to_three_term() {
        let p = ParamPoint::jacobi(rat(7, 3), rat(9, 4));
        let mi = MultiIndexed::new(&p, &IndexSet::empty()).unwrap();
        let t = coeffs_direct(&mi, &Poly::x(), 6).unwrap();
        for n in 0..=6 {
            assert_eq!(t.r(n, 1), p.rec_a(n).unwrap());
            assert_eq!(t.r(n, 0), p.rec_b(n).unwrap());
            assert_eq!(t.r(n, -1), if n == 0 { int(0) } else { p.rec_c(n).unwrap() });
        }
    }

    #[test]
    fn inadmissible_x_is_rejected() {
        let (mi, _) = lag(rat(7, 3));
        assert!(matches!(theta_op(&mi, &Poly::x()), Err(Error::NotPolynomial(_))));
        assert!(matches!(coeffs_direct(&mi, &Poly::x(), 2), Err(Error::NonzeroRemainder(_))));
    }

    #[test]
    fn membership() {
        let (mi, x) = lag(rat(7, 3));
        assert!(!membership_test(&mi, &Poly::one()).unwrap());
        for n in 0..=8 {
            let p = mi.p_n(n).unwrap();
            assert!(membership_test(&mi, &p).unwrap());
            assert!(membership_test(&mi, &(&x * &p)).unwrap());
        }
    }

    #[test]
    fn closure_mixed_types() {
        let p = ParamPoint::jacobi(rat(7, 3), rat(9, 4));
        let d: IndexSet = "1I,2II".parse().unwrap();
        let cs = closure_checks(&p, &d, &Poly::from_ints(&[1, 0, 1]), 4);
        assert!(all_pass(&cs), "{cs:#?}");
    }

    #[test]
    fn degenerate_points() {
        let cs = degenerate_parameter_suite(6);
        assert!(all_pass(&cs), "{cs:#?}");
    }

    #[test]
    fn theta_integrality_at_integer_samples() {
        let d: IndexSet = "1I,2II".parse().unwrap();
        let lp: Vec<ParamPoint> = (1..=4).map(|g| ParamPoint::laguerre(int(g))).collect();
        let cs = theta_integrality(&lp, &d, 8);
        assert!(all_pass(&cs), "{cs:#?}");
        let jp: Vec<ParamPoint> =
            [(2, 3), (4, 2), (5, 3), (2, 5)].iter().map(|&(g, h)| ParamPoint::jacobi(int(g), int(h))).collect();
        let cs = theta_integrality(&jp, &d, 16);
        assert!(all_pass(&cs), "{cs:#?}");
    }

    #[test]
    fn theta_reconstruction_matches_composition() {
        let p = ParamPoint::jacobi(rat(7, 3), rat(9, 4));
        let mi = MultiIndexed::new(&p, &"1I,2II".parse().unwrap()).unwrap();
        let x = build_x(&mi, &Poly::x()).unwrap();
        let (f, b) = (forward_op(&mi).unwrap(), backward_op(&mi).unwrap());
        assert_eq!(theta_from(&b, &x, &f).unwrap(), theta_by_composition(&b, &x, &f).unwrap());
        assert!(matches!(theta_from(&b, &Poly::x(), &f), Err(Error::NotPolynomial(_))));
        assert!(matches!(theta_by_composition(&b, &Poly::x(), &f), Err(Error::NotPolynomial(_))));
    }
}
