use miop::diffop::DiffOp;
use miop::exact::rational::{format_rational, parse_rational, rat};
use miop::exact::{Poly, Rational};
use miop::families::ParamPoint;
use miop::gauged::wronskian_poly;
use miop::mindexed::{IndexSet, MultiIndexed};
use miop::recurrence::{build_x, coeffs_direct};
use miop::shiftalg::NormalOrderedShift;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=7).prop_map(|(p, q)| rat(p, q))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..=max_deg + 1).prop_map(Poly::new)
}

fn diffop() -> impl Strategy<Value = DiffOp> {
    prop::collection::vec(poly(3), 1..=3).prop_map(DiffOp::from_polys)
}

proptest! {
    #[test]
    fn rational_round_trip(x in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn poly_ring_axioms(a in poly(5), b in poly(5), c in poly(5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!((&a * &b).derivative(), &(&a.derivative() * &b) + &(&a * &b.derivative()));
    }

    #[test]
    fn division_with_remainder(a in poly(7), b in poly(4)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        let g = a.gcd(&b);
        prop_assert!(a.div_rem(&g).unwrap().1.is_zero() && b.div_rem(&g).unwrap().1.is_zero());
    }

    #[test]
    fn wronskian_scaling_and_antisymmetry(fs in prop::collection::vec(poly(4), 2..=3), g in poly(2)) {
        let w = wronskian_poly(&fs);
        let scaled: Vec<Poly> = fs.iter().map(|f| f * &g).collect();
        prop_assert_eq!(wronskian_poly(&scaled), &g.pow(fs.len()) * &w);
        let mut swapped = fs.clone();
        swapped.swap(0, 1);
        prop_assert_eq!(wronskian_poly(&swapped), -&w);
    }

    #[test]
    fn compose_is_associative(a in diffop(), b in diffop(), c in diffop(), q in poly(10)) {
        let left = a.compose(&b).compose(&c);
        let right = a.compose(&b.compose(&c));
        prop_assert_eq!(left.apply(&q), right.apply(&q));
        prop_assert_eq!(left.apply(&q), a.apply_ratfunc(&b.apply_ratfunc(&c.apply(&q))));
    }

    #[test]
    fn star_is_associative(g1 in poly(2), g2 in poly(2), g3 in poly(2), f in poly(4)) {
        let (a, b, c) = (NormalOrderedShift::new(g1), NormalOrderedShift::new(g2), NormalOrderedShift::new(g3));
        prop_assert_eq!(a.star(&b).star(&c), a.star(&b.star(&c)));
        prop_assert_eq!(a.star(&b).apply(&f), a.apply(&b.apply(&f)));
    }
}

const SETS: [&str; 4] = ["1I", "2II", "1I,2II", "2I,1II"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn tables_are_linear_in_x(i in 0usize..SETS.len(), y1 in poly(1), y2 in poly(1)) {
        prop_assume!(!y1.is_zero() && !y2.is_zero() && !(&y1 + &y2).is_zero());
        let p = ParamPoint::laguerre(rat(7, 3));
        let mi = MultiIndexed::new(&p, &SETS[i].parse().unwrap()).unwrap();
        let (x1, x2) = (build_x(&mi, &y1).unwrap(), build_x(&mi, &y2).unwrap());
        let (t1, t2) = (coeffs_direct(&mi, &x1, 5).unwrap(), coeffs_direct(&mi, &x2, 5).unwrap());
        let t = coeffs_direct(&mi, &(&x1 + &x2), 5).unwrap();
        for n in 0..=5i64 {
            for k in -(t.l as i64)..=t.l as i64 {
                prop_assert_eq!(t.r(n, k), t1.r(n, k) + t2.r(n, k));
            }
        }
    }

    #[test]
    fn tables_do_not_depend_on_seed_order(swap in any::<bool>(), y in poly(1)) {
        prop_assume!(!y.is_zero());
        let p = ParamPoint::jacobi(rat(7, 3), rat(9, 4));
        let d: IndexSet = "1I,2I,1II".parse().unwrap();
        let perm = if swap { [2, 0, 1] } else { [1, 0, 2] };
        let (a, b) = (MultiIndexed::new(&p, &d).unwrap(), MultiIndexed::new(&p, &d.permuted(&perm)).unwrap());
        // Every P_{D,n} picks up the same sign, so a fixed X gives the same table.
        let x = build_x(&a, &y).unwrap();
        let ta = coeffs_direct(&a, &x, 4).unwrap();
        let tb = coeffs_direct(&b, &x, 4).unwrap();
        prop_assert!(ta.agrees_with(&tb));
    }
}
