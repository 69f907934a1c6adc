mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use rbforest::algebra::{bplus, diamond};
use rbforest::coeff::Rational;
use rbforest::element::Element;
use rbforest::error::Error;
use rbforest::forest::{enumerate_forests, Letter};
use rbforest::models::{
    evaluate_hom, Assignment, LaurentModel, LaurentSeries, RbModel, ScalarModel, SpecializedElement,
};

use common::{ab, element, rng};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn weights() -> Vec<Rational> {
    vec![q(0, 1), q(1, 1), q(-1, 1), q(3, 2)]
}

fn letter(s: &str) -> Letter {
    Letter::new(s).unwrap()
}

/// Exact Laurent polynomials, so every evaluation is exact.
fn exact_series<R: Rng>(rng: &mut R) -> LaurentSeries {
    let mut terms = Vec::new();
    for e in -2..=2 {
        if rng.random_bool(0.5) {
            terms.push((e, q(rng.random_range(-3..=3), 1)));
        }
    }
    LaurentSeries::new(terms, None)
}

fn check_hom<M: RbModel>(model: &M, assignment: &Assignment<M::Value>, a: &Element, b: &Element) {
    let w = model.weight();
    let eval = |e: &Element| evaluate_hom(&SpecializedElement::new(e, w.clone()), assignment, model).unwrap();
    let (ea, eb) = (eval(a), eval(b));
    assert!(model.agree(&eval(&diamond(a, b)), &model.mul(&ea, &eb)), "{a} ⋄ {b}");
    assert!(model.agree(&eval(&bplus(a)), &model.operator(&ea)), "B+({a})");
}

#[test]
fn scalar_homomorphism_on_corpus_pairs() {
    let corpus: Vec<Element> = enumerate_forests(4, &ab()).into_iter().map(Element::basis).collect();
    for w in weights() {
        let model = ScalarModel::new(w);
        let assignment = Assignment::from([(letter("a"), q(2, 3)), (letter("b"), q(-5, 1))]);
        for a in &corpus {
            for b in &corpus {
                if a.max_degree().unwrap() + b.max_degree().unwrap() <= 6 {
                    check_hom(&model, &assignment, a, b);
                }
            }
        }
    }
}

#[test]
fn laurent_homomorphism_on_corpus_pairs() {
    let mut r = rng(11);
    let corpus: Vec<Element> = enumerate_forests(4, &ab()).into_iter().map(Element::basis).collect();
    let model = LaurentModel;
    for _ in 0..3 {
        let assignment = Assignment::from([(letter("a"), exact_series(&mut r)), (letter("b"), exact_series(&mut r))]);
        for a in &corpus {
            for b in &corpus {
                if a.max_degree().unwrap() + b.max_degree().unwrap() <= 6 {
                    check_hom(&model, &assignment, a, b);
                }
            }
        }
    }
}

#[test]
fn laurent_rb_identity_on_random_truncated_series() {
    let mut r = rng(5);
    let model = LaurentModel;
    for _ in 0..100 {
        let a = LaurentSeries::random(&mut r, -3, 3);
        let b = LaurentSeries::random(&mut r, -3, 3);
        assert!(model.check_rb_identity(&a, &b), "{a}; {b}");
    }
}

#[test]
fn small_evaluations() {
    let assignment = Assignment::from([(letter("x"), LaurentSeries::monomial(q(1, 1), -1))]);
    let eval = |s: &str| evaluate_hom(&SpecializedElement::new(&element(s), q(-1, 1)), &assignment, &LaurentModel).unwrap();
    assert_eq!(eval("o"), LaurentSeries::one());
    assert!(eval("[o]").is_zero());
    assert_eq!(eval("[o x o]"), LaurentSeries::monomial(q(1, 1), -1));

    let mu = q(3, 2);
    let none = Assignment::new();
    let s = SpecializedElement::new(&element("[o]"), mu.clone());
    assert_eq!(evaluate_hom(&s, &none, &ScalarModel::new(mu.clone())).unwrap(), -mu);
}

#[test]
fn evaluation_errors() {
    let s = SpecializedElement::new(&element("o y o"), q(1, 1));
    let model = ScalarModel::new(q(1, 1));
    assert!(matches!(evaluate_hom(&s, &Assignment::new(), &model), Err(Error::UnassignedLetter(_))));
    let other = ScalarModel::new(q(2, 1));
    assert!(matches!(evaluate_hom(&s, &Assignment::new(), &other), Err(Error::WeightMismatch { .. })));
}

proptest! {
    #[test]
    fn scalar_rb_identity(a in rational(), b in rational()) {
        for w in weights() {
            prop_assert!(ScalarModel::new(w).check_rb_identity(&a, &b));
        }
    }

    #[test]
    fn pole_projection_is_idempotent(seed in any::<u64>(), lo in -5i64..=0, hi in -3i64..=4) {
        let s = LaurentSeries::random(&mut rng(seed), lo, hi.max(lo));
        let p = s.pole_projection();
        prop_assert!(p.pole_projection().agrees_with(&p));
        prop_assert!(p.terms().all(|(e, _)| e < 0));
    }

    #[test]
    fn laurent_product_is_commutative_and_tracks_order(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = LaurentSeries::random(&mut r, -2, 3);
        let b = LaurentSeries::random(&mut r, -2, 3);
        let ab = a.mul(&b);
        prop_assert!(ab.agrees_with(&b.mul(&a)));
        if let (Some(va), Some(vb)) = (a.min_exp(), b.min_exp()) {
            prop_assert_eq!(ab.order(), Some((3 + vb).min(3 + va)));
        }
    }
}
