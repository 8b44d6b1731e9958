use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use staircase_core::algebra::{parse_ratfun, ratfun_eval_limit, ratfun_normalize, LaurentPoly, RatFun};

fn poly_strategy(vars: &'static [&'static str]) -> impl Strategy<Value = LaurentPoly> {
    let term = (-4i64..=4, prop::collection::vec(-2i32..=3, vars.len()));
    prop::collection::vec(term, 0..4).prop_map(move |terms| {
        terms.into_iter().fold(LaurentPoly::zero(), |acc, (c, e)| {
            let powers: Vec<(&str, i32)> = vars.iter().copied().zip(e).collect();
            acc + LaurentPoly::monomial(BigRational::from_integer(c.into()), &powers)
        })
    })
}

fn nonzero_poly(vars: &'static [&'static str]) -> impl Strategy<Value = LaurentPoly> {
    poly_strategy(vars).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun_strategy() -> impl Strategy<Value = RatFun> {
    (poly_strategy(&["q", "t"]), nonzero_poly(&["q", "t"])).prop_map(|(a, b)| ratfun_normalize(a, b).unwrap())
}

fn at(f: &RatFun, q: i64, t: i64) -> Option<BigRational> {
    ratfun_eval_limit(f, &[("q", BigRational::from_integer(q.into())), ("t", BigRational::from_integer(t.into()))]).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in poly_strategy(&["q", "t"]), b in poly_strategy(&["q", "p"]), c in poly_strategy(&["t", "p"])) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn normalize_is_idempotent(f in ratfun_strategy()) {
        let again = ratfun_normalize(f.num().clone(), f.den().clone()).unwrap();
        prop_assert_eq!(&again, &f);
        let reparsed = parse_ratfun(&f.render()).unwrap();
        prop_assert_eq!(reparsed, f);
    }

    #[test]
    fn sums_two_ways(a in poly_strategy(&["q", "t"]), b in nonzero_poly(&["q", "t"]),
                     c in poly_strategy(&["q", "t"]), d in nonzero_poly(&["q", "t"])) {
        let direct = &ratfun_normalize(a.clone(), b.clone()).unwrap() + &ratfun_normalize(c.clone(), d.clone()).unwrap();
        let cross = ratfun_normalize(&(&a * &d) + &(&c * &b), &b * &d).unwrap();
        prop_assert_eq!(direct, cross);
    }

    #[test]
    fn field_operations_match_evaluation(f in ratfun_strategy(), g in ratfun_strategy(), q in 2i64..7, t in -5i64..-1) {
        if let (Some(x), Some(y)) = (at(&f, q, t), at(&g, q, t)) {
            prop_assert_eq!(at(&(&f + &g), q, t), Some(&x + &y));
            prop_assert_eq!(at(&(&f * &g), q, t), Some(&x * &y));
            if !g.is_zero() && y != BigRational::from_integer(BigInt::from(0)) {
                if let Some(v) = at(&(&f / &g), q, t) {
                    prop_assert_eq!(v, x / y);
                }
            }
        }
    }

    #[test]
    fn common_factor_cancels(f in ratfun_strategy(), c in nonzero_poly(&["q", "t"])) {
        let scaled = ratfun_normalize(f.num() * &c, f.den() * &c).unwrap();
        prop_assert_eq!(scaled, f);
    }

    #[test]
    fn q_to_p_doubles_and_negates(a in poly_strategy(&["q"])) {
        let img = LaurentPoly::monomial(BigRational::one(), &[("p", -2)]);
        let in_p = a.substitute(&[("q", &img)]).unwrap();
        let expected = a.terms().iter().fold(LaurentPoly::zero(), |acc, (e, c)| {
            let k = e.first().copied().unwrap_or(0);
            acc + LaurentPoly::monomial(c.clone(), &[("p", -2 * k)])
        });
        prop_assert_eq!(&in_p, &expected);
        // p^2 -> q^-1 inverts on even exponents
        let restored = in_p.terms().iter().fold(LaurentPoly::zero(), |acc, (e, c)| {
            let k = e.first().copied().unwrap_or(0);
            acc + LaurentPoly::monomial(c.clone(), &[("q", -k / 2)])
        });
        prop_assert_eq!(restored, a);
    }
}

#[test]
fn normalize_examples() {
    let r = |s: &str| parse_ratfun(s).unwrap();
    assert_eq!(r("(p^2 - 1)/(p - 1)"), r("p + 1"));
    assert!(r("0/(1 - q*t)").is_zero());
    assert_eq!(r("((1 - p^2)*(1 + p))/(1 - p)"), r("(1 + p)^2"));
    assert_eq!(r("-(p^2 + 1)/p").render(), "(-p^2 - 1)/(p)");
}

#[test]
fn limits() {
    let one = [("p", BigRational::one())];
    let r = |s: &str| parse_ratfun(s).unwrap();
    assert_eq!(ratfun_eval_limit(&r("(1 - p^2)/(1 - p)"), &one).unwrap(), BigRational::from_integer(2.into()));
    assert!(ratfun_eval_limit(&r("1/(1 - p)"), &one).is_err());
    assert_eq!(ratfun_eval_limit(&r("-(p^2 + 1)/p"), &one).unwrap(), BigRational::from_integer((-2).into()));
    assert!(ratfun_eval_limit(&r("q + p"), &one).is_err());
}
