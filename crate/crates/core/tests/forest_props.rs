mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rbforest::forest::{enumerate_forests, random_forest, Forest};
use rbforest::syntax::parse_forest;

use common::{ab, alphabet, forest_count};

fn any_forest() -> impl Strategy<Value = Forest> {
    (any::<u64>(), 1usize..=8).prop_map(|(seed, d)| random_forest(seed, d, &ab()))
}

fn check_shape(f: &Forest) -> Result<(), TestCaseError> {
    prop_assert_eq!(f.trees().len(), f.letters().len() + 1);
    prop_assert_eq!(f.decoration_count(), f.leaf_count() - 1);
    for t in f.trees() {
        if let Some(body) = t.body() {
            check_shape(body)?;
        }
    }
    Ok(())
}

proptest! {
    #[test]
    fn alternation_and_decoration_count(f in any_forest()) {
        check_shape(&f)?;
    }

    #[test]
    fn render_then_parse_is_identity(f in any_forest()) {
        prop_assert_eq!(parse_forest(&f.to_string(), Some(&ab())).unwrap(), f);
    }

    #[test]
    fn grafting_adds_one_to_depth_and_degree(f in any_forest()) {
        let g = f.graft();
        prop_assert_eq!(g.depth(), f.depth() + 1);
        prop_assert_eq!(g.degree(), f.degree() + 1);
        prop_assert_eq!(g.length(), 1);
        check_shape(&g)?;
    }

    #[test]
    fn concatenation_adds_degrees(f in any_forest(), g in any_forest()) {
        let a = ab();
        let h = f.concat_with_letter(&a.letters()[1], &g);
        prop_assert_eq!(h.degree(), f.degree() + g.degree());
        prop_assert_eq!(h.length(), f.length() + g.length());
        check_shape(&h)?;
    }
}

#[test]
fn enumeration_matches_independent_count() {
    for (k, names) in [(1, vec!["a"]), (2, vec!["a", "b"]), (3, vec!["a", "b", "c"])] {
        let all = enumerate_forests(5, &alphabet(&names));
        for n in 1..=5 {
            let got = all.iter().filter(|f| f.degree() == n).count() as u64;
            assert_eq!(got, forest_count(n, k), "degree {n}, {k} letters");
        }
    }
    assert_eq!((1..=6).map(|n| forest_count(n, 2)).collect::<Vec<_>>(), [1, 3, 11, 45, 197, 903]);
}

#[test]
fn enumeration_has_no_duplicates_and_round_trips() {
    let a = ab();
    let all = enumerate_forests(5, &a);
    let distinct: BTreeSet<&Forest> = all.iter().collect();
    assert_eq!(distinct.len(), all.len());
    for f in &all {
        assert_eq!(&parse_forest(&f.to_string(), Some(&a)).unwrap(), f);
    }
    let keys: Vec<_> = all.iter().map(Forest::canonical_key).collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn degree_three_corpus_over_one_letter() {
    let got: BTreeSet<String> = enumerate_forests(3, &alphabet(&["a"])).iter().map(|f| f.to_string()).collect();
    let want: BTreeSet<String> = ["o", "[o]", "o a o", "[[o]]", "[o a o]", "o a [o]", "[o] a o", "o a o a o"]
        .into_iter()
        .map(String::from)
        .collect();
    assert_eq!(got, want);
}
