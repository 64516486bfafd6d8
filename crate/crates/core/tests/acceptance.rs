//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use miop::diffop::{aibj_check, verify_intertwining};
use miop::exact::rational::{int, parse_rational, pochhammer, rat};
use miop::exact::{Poly, Rational};
use miop::families::ParamPoint;
use miop::gauged::wronskian_identities_check;
use miop::golden::{closed_form, golden_examples, GoldenCase, GoldenSet};
use miop::mindexed::{index_battery, xi_poly, IndexSet, MultiIndexed};
use miop::recurrence::{build_x, coeffs_classical, coeffs_direct, closure_checks_multi, Intertwiners};
use miop::report::Check;
use miop::shiftalg::{bispectral_coeffs, bnk_nonzero, flat_order_observation, power_formulas_check, star_identities_check};

fn two_seed() -> IndexSet {
    "1I,2II".parse().unwrap()
}

/// `-2Ξ` as displayed.
fn laguerre_minus_two_xi(g: &Rational) -> Poly {
    let g52 = g - rat(5, 2);
    Poly::new(vec![
        pochhammer(&g52, 4),
        int(2) * pochhammer(&g52, 2) * (int(2) * g + int(1)),
        &g52 * (int(6) * g - int(1)),
        int(2) * (int(2) * g - int(3)),
        int(1),
    ])
}

/// `64Ξ` as displayed, `a = g+h`, `b = g-h`.
fn jacobi_64_xi(g: &Rational, h: &Rational) -> Poly {
    let (a, b) = (g + h, g - h);
    let b_ = |c: i64| &b - int(c);
    let aa = &a * (&a - int(2));
    Poly::new(vec![
        a.pow(3) * (&a - int(4)) + int(2) * &a * &a * b_(3) - int(4) * &a * b_(5) - b_(3) * b_(1),
        int(4) * (&a - int(1)) * b_(1) * (&aa + b_(3)),
        int(2) * b_(1) * (&aa * (int(3) * &b - int(4)) + (&b + int(4)) * b_(3)),
        int(4) * (&a - int(1)) * b_(3) * b_(1) * &b,
        b_(4) * b_(3) * b_(1) * (&b + int(2)),
    ])
}

fn lin(c: i64) -> Poly {
    Poly::from_ints(&[c, 1])
}

fn criterion_1() -> Result<String, String> {
    let d = two_seed();
    for g in [rat(7, 3), rat(9, 4), rat(-5, 7), rat(11, 3), rat(2, 5)] {
        let xi = xi_poly(&ParamPoint::laguerre(g.clone()), &d).map_err(|e| e.to_string())?;
        if xi.scale(&int(-2)) != laguerre_minus_two_xi(&g) {
            return Err(format!("quartic differs at g = {g}"));
        }
    }
    let eta = Poly::x();
    let factored = [
        (rat(-1, 2), &(&eta.pow(2) * &lin(-2)) * &lin(-6)),
        (rat(3, 2), &eta.pow(2) * &Poly::from_ints(&[-8, 0, 1])),
        (rat(5, 2), &eta.pow(3) * &lin(4)),
        (rat(-13, 2), &lin(-6).pow(3) * &lin(-14)),
    ];
    for (g, want) in factored {
        let xi = xi_poly(&ParamPoint::laguerre(g.clone()), &d).map_err(|e| e.to_string())?;
        if xi.scale(&int(-2)) != want {
            return Err(format!("factorization differs at g = {g}"));
        }
    }
    Ok("5 generic g, 4 factorizations".into())
}

fn criterion_2() -> Result<String, String> {
    let pts = [(rat(7, 3), rat(9, 4)), (rat(13, 5), rat(7, 2)), (rat(-2, 7), rat(11, 5)), (rat(5, 3), rat(1, 4)), (rat(17, 7), rat(-3, 5))];
    for (g, h) in pts {
        let xi = xi_poly(&ParamPoint::jacobi(g.clone(), h.clone()), &two_seed()).map_err(|e| e.to_string())?;
        if xi.scale(&int(64)) != jacobi_64_xi(&g, &h) {
            return Err(format!("quartic differs at (g,h) = ({g},{h})"));
        }
    }
    Ok("5 generic (g,h)".into())
}

/// All three routes for `D = {1^I}`, `Y = 1` against the closed forms and
/// the shipped tables; returns the number of nonzero out-of-band ♭ entries.
fn one_seed_routes(set: &GoldenSet, case: GoldenCase, n_max: usize) -> Result<String, String> {
    let d: IndexSet = "1I".parse().unwrap();
    let mut outside_total = 0;
    for gt in &set.cases {
        let p = gt.point().map_err(|e| e.to_string())?;
        let run = || -> miop::Result<_> {
            let mi = MultiIndexed::new(&p, &d)?;
            let x = build_x(&mi, &Poly::one())?;
            let theta = Intertwiners::new(&mi)?.theta(&x)?;
            let (bisp, outside) = bispectral_coeffs(&mi, &x, &theta, n_max)?;
            Ok((vec![coeffs_direct(&mi, &x, n_max)?, coeffs_classical(&mi, &x, &theta, n_max)?, bisp], outside))
        };
        let (tables, outside) = run().map_err(|e| format!("{p}: {e}"))?;
        outside_total += outside;
        if gt.rows.len() <= n_max {
            return Err(format!("{p}: shipped table too short"));
        }
        for t in &tables {
            for n in 0..=n_max as i64 {
                for k in -2..=2i64 {
                    let cf = closed_form(case, &p, n, k).map_err(|e| e.to_string())?;
                    let shipped = parse_rational(&gt.rows[n as usize][(k - set.k_range[0]) as usize]).map_err(|e| e.to_string())?;
                    if t.r(n, k) != cf || t.r(n, k) != shipped {
                        return Err(format!("{p} {:?} route differs at (n,k) = ({n},{k})", t.route));
                    }
                }
            }
        }
    }
    if outside_total != 0 {
        return Err(format!("{outside_total} nonzero ♭ entries outside |k| <= 2"));
    }
    Ok(format!("{} points x 3 routes, n <= {n_max}, no ♭ entries outside the band", set.cases.len()))
}

fn criterion_3() -> Result<String, String> {
    let gx = golden_examples().map_err(|e| e.to_string())?;
    one_seed_routes(&gx.laguerre_one_seed, GoldenCase::Laguerre, 12)
}

fn criterion_4() -> Result<String, String> {
    let gx = golden_examples().map_err(|e| e.to_string())?;
    one_seed_routes(&gx.jacobi_one_seed, GoldenCase::Jacobi, 10)
}

fn criterion_5() -> Result<String, String> {
    let mut pts = vec![ParamPoint::Hermite];
    pts.extend([rat(7, 3), rat(9, 4), rat(-2, 7)].map(ParamPoint::laguerre));
    pts.extend([(rat(7, 3), rat(9, 4)), (rat(13, 5), rat(7, 2)), (rat(5, 3), rat(1, 4))].map(|(g, h)| ParamPoint::jacobi(g, h)));
    for p in &pts {
        let bad = bnk_nonzero(p, 20).map_err(|e| e.to_string())?;
        if !bad.is_empty() {
            return Err(format!("{p}: nonzero at {:?}", &bad[..bad.len().min(5)]));
        }
    }
    Ok(format!("{} points, 1 <= k <= n <= 20", pts.len()))
}

fn battery_points() -> [ParamPoint; 2] {
    [ParamPoint::laguerre(rat(7, 3)), ParamPoint::jacobi(rat(7, 3), rat(9, 4))]
}

fn first_failure(cs: &[Check]) -> Option<String> {
    cs.iter().find(|c| !c.passed()).map(|c| format!("{}: {}", c.name, c.detail))
}

fn criterion_6() -> Result<String, String> {
    let ys = [Poly::one(), Poly::x(), Poly::from_ints(&[1, 0, 1])];
    let battery = index_battery(3, 3);
    let mut n = 0;
    for p in battery_points() {
        for d in &battery {
            let cs = closure_checks_multi(&p, d, &ys, 8);
            if let Some(f) = first_failure(&cs) {
                return Err(f);
            }
            n += cs.len();
        }
    }
    Ok(format!("{} index sets x 3 Y x 2 families, {n} checks", battery.len()))
}

fn criterion_7() -> Result<String, String> {
    let mut n = 0;
    for p in battery_points() {
        for d in index_battery(3, 3) {
            let cs = verify_intertwining(&p, &d, 8).map_err(|e| format!("{p} {d}: {e}"))?;
            if let Some(f) = first_failure(&cs) {
                return Err(f);
            }
            n += cs.len();
        }
    }
    Ok(format!("{n} checks, n <= 8"))
}

fn criterion_8() -> Result<String, String> {
    let cs = wronskian_identities_check(42, 60);
    first_failure(&cs).map_or(Ok(format!("{} identities x 60 seeded instances", cs.len())), Err)
}

fn criterion_9() -> Result<String, String> {
    let mut cs = star_identities_check(42, 30);
    cs.extend(aibj_check(4));
    for p in [ParamPoint::laguerre(rat(7, 3)), ParamPoint::jacobi(rat(7, 3), rat(9, 4))] {
        cs.extend(power_formulas_check(&p, 10).map_err(|e| e.to_string())?);
        let (gap, c) = flat_order_observation(&p).map_err(|e| e.to_string())?;
        if gap.numer() == &0.into() {
            return Err(format!("{p}: ♭(∂η) and ΔΓ agree"));
        }
        cs.push(c);
    }
    first_failure(&cs).map_or(Ok(format!("{} checks", cs.len())), Err)
}

fn criterion_10() -> Result<String, String> {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_miop"))
            .args(["verify", "--suite", "all", "--seed", "42"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() || !b.status.success() {
        return Err(format!("exit codes {:?}, {:?}", a.status.code(), b.status.code()));
    }
    if a.stdout != b.stdout {
        return Err("outputs differ".into());
    }
    Ok(format!("{} identical bytes, exit 0", a.stdout.len()))
}

type Criterion = (&'static str, fn() -> Result<String, String>, Option<Duration>);

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria: [Criterion; 10] = [
        ("Laguerre quartic and factorizations", criterion_1, secs(1)),
        ("Jacobi quartic", criterion_2, secs(1)),
        ("Laguerre one-seed recurrence, three routes", criterion_3, secs(5)),
        ("Jacobi one-seed recurrence, three routes", criterion_4, secs(30)),
        ("b_(n,k) = 0 for n <= 20", criterion_5, secs(10)),
        ("closure battery", criterion_6, secs(120)),
        ("intertwining and eigen-identities", criterion_7, None),
        ("Wronskian identities", criterion_8, None),
        ("shift-algebra calculus", criterion_9, None),
        ("deterministic verify output", criterion_10, None),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let dt = t.elapsed();
        let r = match (r, limit) {
            (Ok(_), Some(l)) if dt > *l => Err(format!("took {dt:.2?}, limit {l:?}")),
            (r, _) => r,
        };
        let (tag, detail) = match &r {
            Ok(s) => ("PASS", s.clone()),
            Err(s) => ("FAIL", s.clone()),
        };
        if r.is_err() {
            failed += 1;
        }
        println!("[{tag}] criterion {:>2}: {name}: {detail} ({dt:.2?})", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
