use btableaux::exactalg::{q_integer, Monomial, MultiPoly, Series, Var};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-5i64..=5, 0u32..4, 0u32..3, 0u32..4), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, a, b, e)| MultiPoly::mono(c, a, b, e))
            .sum()
    })
}

fn series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(poly(), order + 1).prop_map(move |c| Series::new(c, order))
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, MultiPoly::zero());
        prop_assert_eq!(&a * &MultiPoly::one(), a.clone());
    }

    #[test]
    fn text_round_trip(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<MultiPoly>().unwrap(), a.clone());
        prop_assert_eq!(a.to_compact_string().parse::<MultiPoly>().unwrap(), a.clone());
        prop_assert_eq!(MultiPoly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn exact_division(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), v in -3i64..=3) {
        for var in [Var::Y, Var::T, Var::Q] {
            let s = |p: &MultiPoly| p.subst(&[(var, v)]);
            prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
            prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
        }
    }

    #[test]
    fn q_leibniz(a in poly(), b in poly()) {
        // D(fg) = D(f) g(qt) + f D(g), with g(qt) the substitution t -> qt
        let qt = |p: &MultiPoly| -> MultiPoly {
            p.iter()
                .map(|(m, c)| MultiPoly::term(c.clone(), *m).mul_monomial(Monomial::new(0, 0, m.exp(Var::T))))
                .sum()
        };
        let lhs = (&a * &b).q_derivative_t();
        let rhs = &(&a.q_derivative_t() * &qt(&b)) + &(&a * &b.q_derivative_t());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn q_derivative_of_powers(k in 0u32..8) {
        let tk = MultiPoly::mono(1, 0, k, 0);
        let want = if k == 0 { MultiPoly::zero() } else { &q_integer(k) * &MultiPoly::mono(1, 0, k - 1, 0) };
        prop_assert_eq!(tk.q_derivative_t(), want);
    }

    #[test]
    fn series_inverse(s in series(6), sign in prop::bool::ANY) {
        let mut c = s.coeffs().to_vec();
        c[0] = MultiPoly::constant(if sign { 1 } else { -1 });
        let s = Series::new(c, 6);
        let prod = &s * &s.inverse().unwrap();
        prop_assert_eq!(prod.coeffs().to_vec(), Series::one(6).coeffs().to_vec());
    }

    #[test]
    fn series_reversion(s in series(6)) {
        let mut c = s.coeffs().to_vec();
        c[0] = MultiPoly::zero();
        c[1] = MultiPoly::one();
        let f = Series::new(c, 6);
        let r = f.reversion().unwrap();
        let z = Series::z(6).coeffs().to_vec();
        prop_assert_eq!(f.compose(&r).unwrap().coeffs().to_vec(), z.clone());
        prop_assert_eq!(r.compose(&f).unwrap().coeffs().to_vec(), z);
    }
}
