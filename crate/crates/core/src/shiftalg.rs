//! The bispectral side: `Δ`, `Γ` and `O_j` as shift operators in `n`, their
//! matrices on `{P_n}`, normal-ordered exponentials, and the map `♭`.
//!
//! Matrices act on columns: `S P_n = Σ_m M[m][n] P_m`. Shift operators act on
//! functions of `n`, so the matrix of a product `ST` is `ρ(T)·ρ(S)`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diffop::DiffOp;
use crate::error::Error;
use crate::exact::basis::expand_in_basis;
use crate::exact::rational::{format_rational, int, rat};
use crate::exact::{Poly, Rational};
use crate::families::{cnk_table, pi_d, CnkTable, ParamPoint};
use crate::mindexed::MultiIndexed;
use crate::recurrence::{RecurrenceTable, Route};
use crate::report::Check;

/// An `(N+1)×(N+1)` truncation of an operator on `span{P_0..P_N}`. Columns
/// `n <= window` are exact; `raise` bounds how far a column reaches upward.
#[derive(Clone, Debug, PartialEq)]
pub struct OpMatrix {
    pub m: Vec<Vec<Rational>>,
    pub window: i64,
    pub raise: usize,
}

impl OpMatrix {
    pub fn size(&self) -> usize {
        self.m.len()
    }

    pub fn zero(size: usize, window: i64, raise: usize) -> Self {
        OpMatrix { m: vec![vec![Rational::zero(); size]; size], window, raise }
    }

    pub fn identity(size: usize) -> Self {
        let mut a = OpMatrix::zero(size, size as i64 - 1, 0);
        for i in 0..size {
            a.m[i][i] = Rational::one();
        }
        a
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.m[row][col]
    }

    /// Ordinary product `self·rhs`: apply `rhs` first.
    pub fn mul(&self, rhs: &OpMatrix) -> OpMatrix {
        let s = self.size();
        let window = rhs.window.min(self.window - rhs.raise as i64);
        let mut out = OpMatrix::zero(s, window, self.raise + rhs.raise);
        for j in 0..s {
            for k in 0..s {
                let b = &rhs.m[k][j];
                if b.is_zero() {
                    continue;
                }
                for i in 0..s {
                    let a = &self.m[i][k];
                    if !a.is_zero() {
                        out.m[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> OpMatrix {
        (0..k).fold(OpMatrix::identity(self.size()), |acc, _| acc.mul(self))
    }

    pub fn add(&self, rhs: &OpMatrix) -> OpMatrix {
        let mut out = self.clone();
        out.window = self.window.min(rhs.window);
        out.raise = self.raise.max(rhs.raise);
        for (r, rr) in out.m.iter_mut().zip(&rhs.m) {
            for (a, b) in r.iter_mut().zip(rr) {
                *a += b;
            }
        }
        out
    }

    pub fn sub(&self, rhs: &OpMatrix) -> OpMatrix {
        self.add(&rhs.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> OpMatrix {
        let mut out = self.clone();
        for r in out.m.iter_mut() {
            for a in r.iter_mut() {
                *a *= c;
            }
        }
        out
    }

    /// Column `n` of both matrices agree for every `n <= window`.
    pub fn agrees_on_window(&self, other: &OpMatrix, window: i64) -> bool {
        (0..=window.max(-1)).all(|n| {
            let n = n as usize;
            (0..self.size()).all(|r| self.m[r][n] == other.m[r][n])
        })
    }

    /// Nonzero entries as `(row, col, "p/q")`.
    pub fn sparse(&self) -> Vec<(usize, usize, String)> {
        let mut out = Vec::new();
        for (i, r) in self.m.iter().enumerate() {
            for (j, a) in r.iter().enumerate() {
                if !a.is_zero() {
                    out.push((i, j, format_rational(a)));
                }
            }
        }
        out
    }
}

impl Serialize for OpMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("OpMatrix", 4)?;
        st.serialize_field("size", &self.size())?;
        st.serialize_field("window", &self.window)?;
        st.serialize_field("raise", &self.raise)?;
        st.serialize_field("entries", &self.sparse())?;
        st.end()
    }
}

/// `ρ(Δ)`: `ρ[n+1][n] = A_n`, `ρ[n][n] = B_n`, `ρ[n-1][n] = C_n`.
pub fn delta_matrix(p: &ParamPoint, n: usize) -> Result<OpMatrix, Error> {
    let mut a = OpMatrix::zero(n + 1, n as i64 - 1, 1);
    for j in 0..=n {
        let jj = j as i64;
        if j < n {
            a.m[j + 1][j] = p.rec_a(jj)?;
        }
        a.m[j][j] = p.rec_b(jj)?;
        if j > 0 {
            a.m[j - 1][j] = p.rec_c(jj)?;
        }
    }
    Ok(a)
}

/// `ρ(Γ)`: `ρ[n-k][n] = c_{n,k}`.
pub fn gamma_matrix(p: &ParamPoint, n: usize) -> Result<OpMatrix, Error> {
    let t = cnk_table(p, n)?;
    Ok(gamma_from_table(&t))
}

fn gamma_from_table(t: &CnkTable) -> OpMatrix {
    let n = t.n_max;
    let mut a = OpMatrix::zero(n + 1, n as i64, 0);
    for j in 1..=n {
        for k in 1..=j {
            a.m[j - k][j] = t.get(j as i64, k as i64);
        }
    }
    a
}

fn classical_basis(p: &ParamPoint, n: usize) -> Vec<Poly> {
    (0..=n as i64).map(|m| p.classical(m)).collect()
}

/// Matrix of a polynomial-coefficient operator, computed by expanding
/// `op·P_n` in `{P_m}`; columns whose image leaves the span are cut.
pub fn direct_matrix(op: &DiffOp, p: &ParamPoint, n: usize) -> Result<OpMatrix, Error> {
    let basis = classical_basis(p, n);
    let mut a = OpMatrix::zero(n + 1, -1, 0);
    for (j, b) in basis.iter().enumerate() {
        let img = op.apply(b).to_poly()?;
        match expand_in_basis(&img, &basis, 0) {
            Ok((coef, _)) => {
                for (i, c) in coef.into_iter().enumerate() {
                    a.m[i][j] = c;
                }
                a.window = j as i64;
            }
            Err(Error::SafeWindowExhausted(_)) => break,
            Err(e) => return Err(e),
        }
    }
    Ok(a)
}

/// `ρ(Δ)` against `η·P_n` and `ρ(Γ)` against `∂P_n`.
pub fn faithfulness_check(p: &ParamPoint, n: usize) -> Result<Vec<Check>, Error> {
    let d = delta_matrix(p, n)?;
    let g = gamma_matrix(p, n)?;
    let de = direct_matrix(&DiffOp::monomial(1, 0), p, n)?;
    let ge = direct_matrix(&DiffOp::monomial(0, 1), p, n)?;
    Ok(vec![
        Check::from_bool(format!("{p}: ρ(Δ) = η"), d.agrees_on_window(&de, d.window), format!("n <= {}", d.window)),
        Check::from_bool(format!("{p}: ρ(Γ) = ∂"), g.agrees_on_window(&ge, g.window), format!("n <= {}", g.window)),
    ])
}

/// `[Δ,Γ] = 1` on the span of `{P_n}`, i.e. `ρ(Γ)ρ(Δ) - ρ(Δ)ρ(Γ) = I` on the
/// safe window, plus `b_{n,k} = 0` for `1 <= k <= n <= n_b`.
pub fn commutator_check(p: &ParamPoint, n: usize, n_b: usize) -> Result<Vec<Check>, Error> {
    let d = delta_matrix(p, n)?;
    let g = gamma_matrix(p, n)?;
    let comm = g.mul(&d).sub(&d.mul(&g));
    let w = comm.window;
    let ok = comm.agrees_on_window(&OpMatrix::identity(n + 1), w);
    let mut out = vec![Check::from_bool(format!("{p}: [Δ,Γ] = 1 on span"), ok, format!("n <= {w}"))];
    let bad = bnk_nonzero(p, n_b)?;
    out.push(Check::from_bool(
        format!("{p}: b_(n,k) = 0"),
        bad.is_empty(),
        if bad.is_empty() {
            format!("1 <= k <= n <= {n_b}")
        } else {
            format!("nonzero at {:?}", &bad[..bad.len().min(5)])
        },
    ));
    Ok(out)
}

/// `b_{n,k}` straight from its defining combination of `A, B, C` and `c`.
pub fn bnk(p: &ParamPoint, t: &CnkTable, n: i64, k: i64) -> Result<Rational, Error> {
    let c = |n, k| t.get(n, k);
    Ok(p.rec_a(n)? * c(n + 1, k + 1) - p.rec_a(n - k - 1)? * c(n, k + 1)
        + (p.rec_b(n)? - p.rec_b(n - k)?) * c(n, k)
        + p.rec_c(n)? * c(n - 1, k - 1)
        - p.rec_c(n - k + 1)? * c(n, k - 1))
}

/// All `(n, k)` with `1 <= k <= n <= n_max` and `b_{n,k} != 0`.
pub fn bnk_nonzero(p: &ParamPoint, n_max: usize) -> Result<Vec<(i64, i64)>, Error> {
    let t = cnk_table(p, n_max + 1)?;
    let mut bad = Vec::new();
    for n in 1..=n_max as i64 {
        for k in 1..=n {
            if !bnk(p, &t, n, k)?.is_zero() {
                bad.push((n, k));
            }
        }
    }
    Ok(bad)
}

/// `:e^{g(n)∂_n}:` for a polynomial displacement `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalOrderedShift {
    pub g: Poly,
}

impl NormalOrderedShift {
    pub fn new(g: Poly) -> Self {
        NormalOrderedShift { g }
    }

    pub fn constant(a: Rational) -> Self {
        NormalOrderedShift { g: Poly::constant(a) }
    }

    /// `O_j = :e^{-(n+j)∂_n}:`.
    pub fn o(j: i64) -> Self {
        NormalOrderedShift { g: Poly::new(vec![int(-j), int(-1)]) }
    }

    /// `f(n) ↦ f(n + g(n))`.
    pub fn apply(&self, f: &Poly) -> Poly {
        f.compose(&(&Poly::x() + &self.g))
    }

    /// `g_1 ⋆ g_2 = g_1(n) + g_2(n + g_1(n))`.
    pub fn star(&self, rhs: &NormalOrderedShift) -> NormalOrderedShift {
        NormalOrderedShift { g: &self.g + &rhs.g.compose(&(&Poly::x() + &self.g)) }
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-20..=20), rng.gen_range(1..=9))
}

fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> Poly {
    Poly::new((0..=deg).map(|_| random_rational(rng)).collect())
}

/// The constant-shift identities, `⋆`-associativity and `O_jO_k = O_k`, on
/// random rational data drawn from `seed`.
pub fn star_identities_check(seed: u64, trials: usize) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fails: Vec<String> = Vec::new();
    let nos = NormalOrderedShift::new;
    let c = NormalOrderedShift::constant;
    for t in 0..trials {
        let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
        let minus = |x: &Rational| nos(Poly::new(vec![-x.clone(), int(-1)]));
        let cases = [
            ("e^a e^b", c(a.clone()).star(&c(b.clone())), c(&a + &b)),
            ("e^a O_b", c(a.clone()).star(&minus(&b)), minus(&b)),
            ("O_b e^a", minus(&b).star(&c(a.clone())), minus(&(&b - &a))),
            ("O_a O_b", minus(&a).star(&minus(&b)), minus(&b)),
        ];
        for (name, lhs, rhs) in cases {
            if lhs != rhs {
                fails.push(format!("trial {t}: {name}"));
            }
        }
        let (g1, g2, g3) = (random_poly(&mut rng, 2), random_poly(&mut rng, 2), random_poly(&mut rng, 2));
        let (s1, s2, s3) = (nos(g1), nos(g2), nos(g3));
        let f = random_poly(&mut rng, 3);
        let left = s1.star(&s2).star(&s3);
        let right = s1.star(&s2.star(&s3));
        if left != right || left.apply(&f) != s1.apply(&s2.apply(&s3.apply(&f))) {
            fails.push(format!("trial {t}: associativity"));
        }
        let (j, k) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let ojok = NormalOrderedShift::o(j).apply(&NormalOrderedShift::o(k).apply(&f));
        if ojok != Poly::constant(f.eval(&int(-k))) || NormalOrderedShift::o(j).star(&NormalOrderedShift::o(k)) != NormalOrderedShift::o(k) {
            fails.push(format!("trial {t}: O_{j}O_{k}"));
        }
    }
    vec![Check::from_bool(
        "normal-ordered shift identities",
        fails.is_empty(),
        if fails.is_empty() { format!("{trials} seeded trials") } else { fails.join(", ") },
    )]
}

/// `Δ^i` entries `D^{i,k}_n` by the three-way recurrence, `n + k >= 0` only
/// (terms reaching `P_{-1}` carry `A_{-1} = 0`).
pub fn delta_power_entries(p: &ParamPoint, i: usize, n: i64) -> Result<Vec<(i64, Rational)>, Error> {
    let ii = i as i64;
    // prev[k + i] holds D^{i', k}_n
    let mut prev = vec![Rational::zero(); 2 * i + 1];
    prev[i] = Rational::one();
    for step in 1..=ii {
        let mut cur = vec![Rational::zero(); 2 * i + 1];
        for k in -step..=step {
            if n + k < 0 {
                continue;
            }
            let at = |k: i64| -> Rational {
                if k.abs() > step - 1 || n + k < 0 {
                    Rational::zero()
                } else {
                    prev[(k + ii) as usize].clone()
                }
            };
            cur[(k + ii) as usize] = at(k - 1) * p.rec_a(n + k - 1)?
                + at(k) * p.rec_b(n + k)?
                + at(k + 1) * p.rec_c(n + k + 1)?;
        }
        prev = cur;
    }
    Ok((-ii..=ii).filter(|k| n + k >= 0).map(|k| (k, prev[(k + ii) as usize].clone())).collect())
}

/// Entry `(n - k, n)` of `Γ^j` as the sum over compositions of `k` into `j`
/// positive parts.
pub fn gamma_power_entry(t: &CnkTable, j: usize, n: i64, k: i64) -> Rational {
    if j == 0 {
        return if k == 0 { Rational::one() } else { Rational::zero() };
    }
    if j == 1 {
        return t.get(n, k);
    }
    let mut acc = Rational::zero();
    for first in 1..=(k - (j as i64 - 1)) {
        let c = t.get(n, first);
        if !c.is_zero() {
            acc += c * gamma_power_entry(t, j - 1, n - first, k - first);
        }
    }
    acc
}

/// `Δ^i` (`i <= 3`) and `Γ^j` (`j <= 3`) from the closed formulas against
/// matrix powers on the safe window.
pub fn power_formulas_check(p: &ParamPoint, n: usize) -> Result<Vec<Check>, Error> {
    let d = delta_matrix(p, n)?;
    let t = cnk_table(p, n)?;
    let g = gamma_from_table(&t);
    let mut out = Vec::new();
    for i in 1..=3 {
        let dp = d.pow(i);
        let mut ok = true;
        for col in 0..=dp.window {
            for (k, v) in delta_power_entries(p, i, col)? {
                ok &= dp.m[(col + k) as usize][col as usize] == v;
            }
            let band = (col - i as i64).max(0)..=(col + i as i64);
            ok &= (0..n as i64 + 1).filter(|r| !band.contains(r)).all(|r| dp.m[r as usize][col as usize].is_zero());
        }
        out.push(Check::from_bool(format!("{p}: Δ^{i} recurrence"), ok, format!("n <= {}", dp.window)));
    }
    for j in 1..=3 {
        let gp = g.pow(j);
        let mut ok = true;
        for col in 0..=gp.window {
            for row in 0..=n as i64 {
                let want = if row <= col { gamma_power_entry(&t, j, col, col - row) } else { Rational::zero() };
                ok &= gp.m[row as usize][col as usize] == want;
            }
        }
        out.push(Check::from_bool(format!("{p}: Γ^{j} compositions"), ok, format!("n <= {}", gp.window)));
    }
    Ok(out)
}

/// `♭(Θ) = Σ F_{ij} Γ^j Δ^i`, i.e. the matrix `Σ F_{ij} ρ(Δ)^i ρ(Γ)^j`.
pub fn flat_map(theta: &DiffOp, p: &ParamPoint, n: usize) -> Result<OpMatrix, Error> {
    let cs = theta.poly_coeffs()?;
    let i_max = cs.iter().filter_map(|c| c.degree().finite()).max().unwrap_or(0);
    if i_max >= n {
        return Err(Error::SafeWindowExhausted(format!("size {n} too small for η^{i_max}")));
    }
    let d = delta_matrix(p, n)?;
    let g = gamma_matrix(p, n)?;
    let dp: Vec<OpMatrix> = (0..=i_max).map(|i| d.pow(i)).collect();
    let mut gp = OpMatrix::identity(n + 1);
    let mut acc = OpMatrix::zero(n + 1, n as i64, 0);
    for c in &cs {
        for (i, f) in c.coeffs().iter().enumerate() {
            if !f.is_zero() {
                acc = acc.add(&dp[i].mul(&gp).scale(f));
            }
        }
        gp = gp.mul(&g);
    }
    Ok(acc)
}

/// `♭(Θ)P_n` against `Θ P_n` on the safe window.
pub fn flat_faithful(theta: &DiffOp, p: &ParamPoint, n: usize) -> Result<bool, Error> {
    let f = flat_map(theta, p, n)?;
    let direct = direct_matrix(theta, p, n)?;
    Ok(f.agrees_on_window(&direct, f.window.min(direct.window)))
}

/// Size needed to trust columns `n <= n_safe` of `♭(Θ)` for `Θ` with `η`
/// degrees up to `i_max` and band `L`.
pub fn bispectral_size(n_safe: usize, i_max: usize, l: usize) -> usize {
    n_safe + i_max + l + 2
}

/// `r_{n,k} = ♭(Θ)[n+k][n] / π_D(n+k)`, plus the number of nonzero entries
/// outside `|k| <= L` seen on the safe window.
pub fn bispectral_coeffs(
    mi: &MultiIndexed,
    x: &Poly,
    theta: &DiffOp,
    n_max: usize,
) -> Result<(RecurrenceTable, usize), Error> {
    let l = x.degree().finite().unwrap_or(0);
    let p = &mi.point;
    let i_max = theta.poly_coeffs()?.iter().filter_map(|c| c.degree().finite()).max().unwrap_or(0);
    let size = bispectral_size(n_max, i_max, l);
    let f = flat_map(theta, p, size)?;
    if f.window < n_max as i64 {
        return Err(Error::SafeWindowExhausted(format!("window {} < {n_max}", f.window)));
    }
    let mut outside = 0;
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=f.window as usize {
        let mut row = vec![Rational::zero(); 2 * l + 1];
        for m in 0..f.size() {
            let v = &f.m[m][n];
            if v.is_zero() {
                continue;
            }
            let k = m as i64 - n as i64;
            if k.unsigned_abs() as usize > l {
                outside += 1;
                continue;
            }
            if n <= n_max {
                let pi = pi_d(p, mi.d.entries(), m as i64)?;
                if pi.is_zero() {
                    return Err(Error::GenericityViolation(format!("π_D({m}) = 0 at {p}")));
                }
                row[(k + l as i64) as usize] = v / pi;
            }
        }
        if n <= n_max {
            rows.push(row);
        }
    }
    let t = RecurrenceTable { d: mi.d.clone(), x: x.clone(), l, n_max, rows, route: Route::Bispectral };
    Ok((t, outside))
}

/// A finitely supported sequence `f: Z -> Q`.
pub type Seq = std::collections::BTreeMap<i64, Rational>;

fn at(f: &Seq, n: i64) -> Rational {
    f.get(&n).cloned().unwrap_or_else(Rational::zero)
}

/// `(Δf)(n) = A_n f(n+1) + B_n f(n) + C_n f(n-1)` on `lo..=hi`.
pub fn delta_seq(p: &ParamPoint, f: &Seq, lo: i64, hi: i64) -> Result<Seq, Error> {
    let mut out = Seq::new();
    for n in lo..=hi {
        let v = p.rec_a(n)? * at(f, n + 1) + p.rec_b(n)? * at(f, n) + p.rec_c(n)? * at(f, n - 1);
        out.insert(n, v);
    }
    Ok(out)
}

/// `(Γf)(n) = Σ_{k=1}^n c_{n,k} f(n-k)` on `lo..=hi`.
pub fn gamma_seq(t: &CnkTable, f: &Seq, lo: i64, hi: i64) -> Seq {
    (lo..=hi)
        .map(|n| (n, (1..=n).map(|k| t.get(n, k) * at(f, n - k)).sum()))
        .collect()
}

/// `♭(∂η) = ΓΔ + 1` against `ΔΓ` acting on `f = δ_{-1}` at `n = 1`. The gap is
/// `-C_0 c_{1,1}` (the `O_1` term), nonzero exactly when `C_0 != 0`; on the
/// basis both act alike.
pub fn flat_order_observation(p: &ParamPoint) -> Result<(Rational, Check), Error> {
    let t = cnk_table(p, 4)?;
    let f: Seq = [(-1, Rational::one())].into_iter().collect();
    let gd = gamma_seq(&t, &delta_seq(p, &f, -2, 3)?, 1, 1);
    let dg = delta_seq(p, &gamma_seq(&t, &f, -1, 3), 1, 1)?;
    let gap = at(&dg, 1) - at(&gd, 1) - at(&f, 1);
    let predicted = -(p.rec_c(0)? * t.get(1, 1));
    let n = 6;
    let d = delta_matrix(p, n)?;
    let g = gamma_matrix(p, n)?;
    let lhs = d.mul(&g).add(&OpMatrix::identity(n + 1));
    let rhs = g.mul(&d);
    let on_basis = lhs.agrees_on_window(&rhs, lhs.window.min(rhs.window));
    let ok = gap == predicted && !gap.is_zero() && on_basis;
    Ok((
        gap.clone(),
        Check::from_bool(
            format!("{p}: ♭(∂η) = ΓΔ+1 ≠ ΔΓ"),
            ok,
            format!("sequence gap {} (expected {}), equal on basis: {on_basis}", format_rational(&gap), format_rational(&predicted)),
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::half;
    use crate::recurrence::{build_x, coeffs_direct, theta_op};
    use crate::report::all_pass;

    fn samples() -> Vec<ParamPoint> {
        vec![ParamPoint::Hermite, ParamPoint::laguerre(rat(7, 3)), ParamPoint::jacobi(rat(7, 3), rat(9, 4))]
    }

    #[test]
    fn hermite_delta_column() {
        let d = delta_matrix(&ParamPoint::Hermite, 4).unwrap();
        assert_eq!((d.m[0][1].clone(), d.m[1][1].clone(), d.m[2][1].clone()), (int(1), int(0), half()));
    }

    #[test]
    fn laguerre_gamma_entries() {
        let g = gamma_matrix(&ParamPoint::laguerre(rat(7, 3)), 5).unwrap();
        for n in 0..=5 {
            for m in 0..n {
                assert_eq!(g.m[m][n], int(-1));
            }
        }
        let g2 = g.pow(2);
        for n in 0..=5usize {
            for k in 1..=n {
                assert_eq!(g2.m[n - k][n], int(k as i64 - 1));
            }
        }
    }

    #[test]
    fn hermite_gamma_cube() {
        let g3 = gamma_matrix(&ParamPoint::Hermite, 7).unwrap().pow(3);
        for n in 0..=7i64 {
            for m in 0..=7i64 {
                let want = if m == n - 3 { int(8 * n * (n - 1) * (n - 2)) } else { int(0) };
                assert_eq!(g3.m[m as usize][n as usize], want);
            }
        }
    }

    #[test]
    fn generators_faithful_and_commutator() {
        for p in samples() {
            assert!(all_pass(&faithfulness_check(&p, 8).unwrap()));
            let cs = commutator_check(&p, 8, 12).unwrap();
            assert!(all_pass(&cs), "{cs:?}");
            let cs = power_formulas_check(&p, 9).unwrap();
            assert!(all_pass(&cs), "{cs:?}");
        }
    }

    #[test]
    fn shifts() {
        let f = Poly::from_ints(&[1, 2, 3]);
        let s = NormalOrderedShift::constant(int(2));
        assert_eq!(s.apply(&f), f.compose(&Poly::from_ints(&[2, 1])));
        assert_eq!(NormalOrderedShift::o(1).apply(&f), Poly::constant(f.eval(&int(-1))));
        let pm = NormalOrderedShift::new(Poly::new(vec![int(-3), int(-1)]));
        let e = NormalOrderedShift::constant(int(2));
        assert_eq!(pm.star(&e), NormalOrderedShift::new(Poly::new(vec![int(-1), int(-1)])));
        assert!(all_pass(&star_identities_check(7, 20)));
    }

    #[test]
    fn flat_of_generators() {
        let p = ParamPoint::jacobi(rat(7, 3), rat(9, 4));
        assert_eq!(flat_map(&DiffOp::monomial(1, 0), &p, 6).unwrap().m, delta_matrix(&p, 6).unwrap().m);
        assert_eq!(flat_map(&DiffOp::monomial(0, 1), &p, 6).unwrap().m, gamma_matrix(&p, 6).unwrap().m);
        let op = DiffOp::monomial(0, 1).compose(&DiffOp::monomial(2, 0));
        assert!(flat_faithful(&op, &p, 8).unwrap());
    }

    #[test]
    fn order_observation() {
        for p in samples() {
            let (gap, c) = flat_order_observation(&p).unwrap();
            match p {
                ParamPoint::Hermite => assert!(gap.is_zero()),
                _ => assert!(c.passed(), "{c:?}"),
            }
        }
    }

    #[test]
    fn bispectral_route_matches_direct() {
        for p in [ParamPoint::laguerre(rat(9, 4)), ParamPoint::jacobi(rat(3, 1), rat(5, 2))] {
            let mi = MultiIndexed::new(&p, &"1I".parse().unwrap()).unwrap();
            let x = build_x(&mi, &Poly::one()).unwrap();
            let theta = theta_op(&mi, &x).unwrap();
            let (t, outside) = bispectral_coeffs(&mi, &x, &theta, 8).unwrap();
            assert_eq!(outside, 0);
            assert_eq!(t.first_difference(&coeffs_direct(&mi, &x, 8).unwrap()), None);
        }
    }

    #[test]
    fn zero_seeds_three_term() {
        let p = ParamPoint::laguerre(rat(7, 3));
        let mi = MultiIndexed::new(&p, &crate::mindexed::IndexSet::empty()).unwrap();
        let theta = DiffOp::monomial(1, 0);
        let (t, _) = bispectral_coeffs(&mi, &Poly::x(), &theta, 6).unwrap();
        for n in 0..=6 {
            assert_eq!(t.r(n, 1), p.rec_a(n).unwrap());
            assert_eq!(t.r(n, 0), p.rec_b(n).unwrap());
            assert_eq!(t.r(n, -1), p.rec_c(n).unwrap() * if n == 0 { int(0) } else { int(1) });
        }
    }
}
