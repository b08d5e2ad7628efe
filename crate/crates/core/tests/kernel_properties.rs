use proptest::prelude::*;
use qseries_core::{MultiIndex, MultiSeries, PolyQ, RatFunQ, Rational, VarTable};

fn small_poly(max_deg: usize) -> impl Strategy<Value = PolyQ> {
    prop::collection::vec(-3i64..=3, 0..=max_deg + 1).prop_map(|c| PolyQ::from_ints(&c))
}

fn ratfun() -> impl Strategy<Value = RatFunQ> {
    (small_poly(3), small_poly(3))
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RatFunQ::new(n, d).unwrap())
}

fn vars() -> VarTable {
    VarTable::new(&["x", "y"]).unwrap()
}

fn series(order: u32) -> impl Strategy<Value = MultiSeries> {
    let term = (0..=order, 0..=order, small_poly(2));
    prop::collection::vec(term, 0..8).prop_map(move |ts| {
        let terms = ts
            .into_iter()
            .filter(|(i, j, _)| i + j <= order)
            .map(|(i, j, c)| (MultiIndex::new(vec![i, j]), RatFunQ::from_poly(c)));
        MultiSeries::from_terms(&vars(), order, terms).unwrap()
    })
}

fn unit_series(order: u32) -> impl Strategy<Value = MultiSeries> {
    (
        series(order),
        ratfun().prop_filter("unit", |c| !c.is_zero()),
    )
        .prop_map(move |(s, c)| {
            let k = &c - &s.constant_term();
            s.add(&MultiSeries::constant(&vars(), order, k)).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(f in ratfun(), g in ratfun(), h in ratfun()) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f - &g) + &g, f.clone());
        if !f.is_zero() {
            let flipped = RatFunQ::new(f.den().clone(), f.num().clone()).unwrap();
            prop_assert!((&f * &flipped).is_one());
        }
    }

    #[test]
    fn normalization_is_idempotent(f in ratfun()) {
        prop_assert_eq!(RatFunQ::new(f.num().clone(), f.den().clone()).unwrap(), f.clone());
        prop_assert_eq!(f.den().leading(), Some(&Rational::from_integer(1.into())));
    }

    #[test]
    fn evaluation_is_multiplicative(f in ratfun(), g in ratfun()) {
        let q0 = Rational::new(1.into(), 3.into());
        if let (Ok(a), Ok(b)) = (f.eval_at(&q0), g.eval_at(&q0)) {
            prop_assert_eq!((&f * &g).eval_at(&q0).unwrap(), a * b);
        }
    }

    #[test]
    fn ring_axioms(f in series(4), g in series(4), h in series(4)) {
        let fg = f.mul(&g).unwrap();
        prop_assert_eq!(fg.mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        prop_assert_eq!(&fg, &g.mul(&f).unwrap());
        prop_assert_eq!(
            f.mul(&g.add(&h).unwrap()).unwrap(),
            fg.add(&f.mul(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(f.sub(&f).unwrap(), MultiSeries::zero(&vars(), 4));
    }

    #[test]
    fn inverse_is_exact(f in unit_series(8)) {
        let g = f.inverse().unwrap();
        prop_assert_eq!(f.mul(&g).unwrap(), MultiSeries::one(&vars(), 8));
    }

    #[test]
    fn qscale_is_a_homomorphism(f in series(4), g in series(4), j in -3i64..=3) {
        let lhs = f.mul(&g).unwrap().subst_qscale("x", j).unwrap();
        let rhs = f.subst_qscale("x", j).unwrap().mul(&g.subst_qscale("x", j).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn truncation_is_coherent(f in unit_series(6), g in series(6), m in 0u32..6) {
        let high = f.mul(&g).unwrap().add(&f.inverse().unwrap()).unwrap().truncate(m);
        let (fm, gm) = (f.truncate(m), g.truncate(m));
        let low = fm.mul(&gm).unwrap().add(&fm.inverse().unwrap()).unwrap();
        prop_assert_eq!(high, low);
    }
}
