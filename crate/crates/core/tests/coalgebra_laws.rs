mod common;

use proptest::prelude::*;
use rbforest::algebra::{diamond, Product};
use rbforest::coalgebra::{
    closure, coproduct, coproduct_factorwise, coproduct_forest, counit, enumerate_subforests, filtration_degree,
    quotient, reduced_coproduct, MultiTensor,
};
use rbforest::coeff::WeightPoly;
use rbforest::element::Element;
use rbforest::forest::{enumerate_forests, random_forest, Forest};

use common::{ab, forest, subforest_count};

fn any_forest(max_degree: usize) -> impl Strategy<Value = Forest> {
    any::<u64>().prop_map(move |seed| random_forest(seed, max_degree, &ab()))
}

fn corpus() -> Vec<Forest> {
    enumerate_forests(5, &ab())
}

#[test]
fn subforest_counts_match_closed_form() {
    for f in corpus() {
        assert_eq!(enumerate_subforests(&f).len() as u64, subforest_count(&f), "{f}");
    }
    for (s, n) in [("[o x o]", 3), ("[[o x1 o] x2 o]", 7), ("[o x1 o] x2 o", 6)] {
        assert_eq!(subforest_count(&forest(s)), n);
    }
}

#[test]
fn factorwise_equals_global_on_corpus() {
    for f in corpus() {
        assert_eq!(coproduct_factorwise(&f), coproduct_forest(&f), "{f}");
    }
}

#[test]
fn coassociativity_on_corpus() {
    for f in corpus() {
        let d = MultiTensor::from_tensor(&coproduct_forest(&f));
        assert_eq!(d.split_leg(0, coproduct_forest), d.split_leg(1, coproduct_forest), "{f}");
    }
}

#[test]
fn filtration_degree_of_basis_forests() {
    for f in corpus() {
        let reduced = reduced_coproduct(&f);
        match f.degree() {
            1 => assert!(reduced.is_err()),
            _ => assert_eq!(filtration_degree(&Element::basis(f.clone())), Ok(f.degree() - 1)),
        }
    }
}

#[test]
fn degree_balance_per_marking() {
    for f in corpus() {
        for m in enumerate_subforests(&f) {
            let cl = closure(&f, &m).unwrap().evaluate(Product::RotaBaxter);
            let q = quotient(&f, &m).unwrap().evaluate(Product::RotaBaxter);
            for l in cl.support() {
                for r in q.support() {
                    assert!(l.degree() + r.degree() <= f.degree() + 1, "{f} / {m}");
                }
            }
            // without a ⊔ to evaluate the degrees balance exactly
            if let (Some(l), Some(r)) = (
                closure(&f, &m).unwrap().to_forest(),
                quotient(&f, &m).unwrap().to_forest(),
            ) {
                assert_eq!(l.degree() + r.degree(), f.degree() + 1, "{f} / {m}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counit_laws(f in any_forest(7)) {
        let d = coproduct_forest(&f);
        prop_assert_eq!(d.counit_left(), Element::basis(f.clone()));
        prop_assert_eq!(d.counit_right(), Element::basis(f));
    }

    #[test]
    fn cocycle(f in any_forest(6)) {
        let g = f.graft();
        let mut rhs = coproduct_forest(&f).graft_right();
        rhs.add_term(g.clone(), Forest::leaf(), WeightPoly::one());
        prop_assert_eq!(coproduct_forest(&g), rhs);
    }

    #[test]
    fn multiplicativity(a in any_forest(4), b in any_forest(4)) {
        let lhs = coproduct(&diamond(&Element::basis(a.clone()), &Element::basis(b.clone())));
        let rhs = coproduct_forest(&a).product(&coproduct_forest(&b), Product::RotaBaxter);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn filtration(f in any_forest(7)) {
        for (l, r, _) in coproduct_forest(&f).terms() {
            prop_assert!(l.degree() - 1 + r.degree() - 1 < f.degree());
        }
    }

    #[test]
    fn coproduct_is_linear(a in any_forest(5), b in any_forest(5), c in -5i64..=5) {
        let e = &Element::basis(a.clone()) + &Element::term(WeightPoly::constant(c), b.clone());
        let mut want = coproduct_forest(&a);
        want.add_scaled(&WeightPoly::constant(c), &coproduct_forest(&b));
        prop_assert_eq!(coproduct(&e), want);
        prop_assert_eq!(counit(&e), counit(&Element::basis(a)) + WeightPoly::constant(c) * counit(&Element::basis(b)));
    }

    #[test]
    fn reduced_coproduct_drops_primitive_terms(f in any_forest(6)) {
        prop_assume!(!f.is_unit());
        let r = reduced_coproduct(&f).unwrap();
        let mut full = r.clone();
        full.add_term(Forest::leaf(), f.clone(), WeightPoly::one());
        full.add_term(f.clone(), Forest::leaf(), WeightPoly::one());
        prop_assert_eq!(full, coproduct_forest(&f));
        prop_assert!(r.coeff(&Forest::leaf(), &f).is_zero());
    }
}

#[test]
fn mutated_coproduct_breaks_counit() {
    use rbforest::coalgebra::Coproduct;
    let broken = corpus()
        .into_iter()
        .filter(|f| {
            let d = Coproduct::WithoutEmptySubforest.forest(f, Product::RotaBaxter);
            d.counit_left() != Element::basis(f.clone())
        })
        .count();
    assert_eq!(broken, corpus().len());
}
