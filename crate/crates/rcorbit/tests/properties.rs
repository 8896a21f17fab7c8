use proptest::prelude::*;
use rcorbit::numberfield::{norm, recover_multiplier, ring_mul, FieldSpec, RingElement};
use rcorbit::{int, rat, MultiPoly, ProjPoint, Rational};

const VARS: [&str; 3] = ["x", "y", "z"];

fn small_rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=3, 3), small_rat()), 0..6)
        .prop_map(|terms| MultiPoly::from_terms(&VARS, terms).unwrap())
}

fn point3() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rat(), 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn eval_is_a_homomorphism(a in poly(), b in poly(), x in point3()) {
        let (ea, eb) = (a.eval(&x).unwrap(), b.eval(&x).unwrap());
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval(&x).unwrap(), ea + eb);
    }

    #[test]
    fn display_parses_back(a in poly()) {
        let s = a.to_string();
        prop_assert_eq!(MultiPoly::parse(&s, &VARS).unwrap(), a, "{}", s);
    }

    #[test]
    fn monic_division_reassembles(a in poly(), tail in poly(), k in 1u32..=3) {
        let lead = MultiPoly::from_terms(&VARS, [(vec![k, 0, 0], int(1))]).unwrap();
        // keep the tail strictly below x^k so the divisor stays monic in x
        let low = MultiPoly::from_terms(
            &VARS,
            tail.terms().filter(|(m, _)| m.exponents()[0] < k).map(|(m, c)| (m.exponents().to_vec(), c.clone())),
        ).unwrap();
        let b = &lead + &low;
        let (q, r) = a.div_rem_monic(&b, "x").unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree_in(0) < k);
    }

    #[test]
    fn compose_matches_eval(a in poly(), imgs in prop::collection::vec(poly(), 3), x in point3()) {
        let at: Vec<Rational> = imgs.iter().map(|p| p.eval(&x).unwrap()).collect();
        prop_assert_eq!(a.compose(&imgs).unwrap().eval(&x).unwrap(), a.eval(&at).unwrap());
    }

    #[test]
    fn points_are_projective(v in prop::collection::vec(-500i64..=500, 4), n in -9i64..=9, d in 1i64..=9) {
        prop_assume!(n != 0 && v.iter().any(|&c| c != 0));
        let p = ProjPoint::from_ints(&v).unwrap();
        let scaled: Vec<Rational> = v.iter().map(|&c| int(c) * rat(n, d)).collect();
        prop_assert_eq!(&ProjPoint::normalize(&scaled).unwrap(), &p);
        prop_assert_eq!(ProjPoint::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn norm_is_multiplicative(
        modulus in prop::collection::vec(-6i64..=6, 2..=5),
        a in prop::collection::vec(small_rat(), 5),
        b in prop::collection::vec(small_rat(), 5),
    ) {
        let n = modulus.len();
        let f = FieldSpec::algebra(modulus.into_iter().map(int).collect()).unwrap();
        let a = RingElement::new(a[..n].to_vec());
        let b = RingElement::new(b[..n].to_vec());
        let ab = ring_mul(&a, &b, &f).unwrap();
        prop_assert_eq!(norm(&ab, &f).unwrap(), norm(&a, &f).unwrap() * norm(&b, &f).unwrap());
        if norm(&a, &f).unwrap() != int(0) {
            prop_assert_eq!(recover_multiplier(&a, &ab, &f).unwrap(), b);
        }
    }
}
