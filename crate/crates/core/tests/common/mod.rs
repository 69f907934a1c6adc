//! Shared helpers for the integration tests: random elements and
//! independent reference implementations to compare the library against.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rbforest::coeff::WeightPoly;
use rbforest::element::Element;
use rbforest::forest::{random_forest_with, Alphabet, Forest, Tree};
use rbforest::syntax::{parse_element, parse_forest};

pub fn alphabet(names: &[&str]) -> Alphabet {
    Alphabet::new(names.iter().copied()).unwrap()
}

pub fn ab() -> Alphabet {
    alphabet(&["a", "b"])
}

pub fn forest(s: &str) -> Forest {
    parse_forest(s, None).unwrap()
}

pub fn element(s: &str) -> Element {
    parse_element(s, None).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_poly<R: Rng>(rng: &mut R) -> WeightPoly {
    let len = rng.random_range(0..=3u32);
    WeightPoly::from_terms((0..len).map(|e| (e, rng.random_range(-4i64..=4))))
}

/// A nonzero-ish combination of up to `max_terms` random forests.
pub fn random_element<R: Rng>(rng: &mut R, max_degree: usize, alphabet: &Alphabet, max_terms: usize) -> Element {
    let mut e = Element::zero();
    for _ in 0..rng.random_range(1..=max_terms) {
        let f = random_forest_with(rng, max_degree, alphabet);
        let mut c = random_poly(rng);
        if c.is_zero() {
            c = WeightPoly::one();
        }
        e.add_term(f, c);
    }
    e
}

/// Number of forests of degree exactly `n` over `k` letters, by the
/// first-tree decomposition `F = T` or `F = T x F'`.
pub fn forest_count(n: usize, k: u64) -> u64 {
    fn go(n: usize, k: u64, memo: &mut HashMap<usize, u64>) -> u64 {
        if let Some(&c) = memo.get(&n) {
            return c;
        }
        let tree = |m: usize, memo: &mut HashMap<usize, u64>| if m == 1 { 1 } else { go(m - 1, k, memo) };
        let mut c = tree(n, memo);
        for m in 1..n {
            c += tree(m, memo) * k * go(n - m, k, memo);
        }
        memo.insert(n, c);
        c
    }
    go(n, k, &mut HashMap::new())
}

/// Subforests of `F = T₁ x₁ … Tₖ`: each tree contributes `c(T)` choices and
/// each of the `k - 1` letters is kept or extracted.
pub fn subforest_count(f: &Forest) -> u64 {
    let trees: u64 = f.trees().iter().map(tree_subforest_count).product();
    trees << f.letters().len()
}

/// A leaf has only the empty choice; `[F]` is extracted whole or not at all.
fn tree_subforest_count(t: &Tree) -> u64 {
    match t.body() {
        None => 1,
        Some(body) => 1 + subforest_count(body),
    }
}

type Poly = BTreeMap<u32, i64>;
type Lin<K> = BTreeMap<K, Poly>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn add_into<K: Ord + Clone>(acc: &mut Lin<K>, key: K, c: &Poly) {
    let slot = acc.entry(key.clone()).or_default();
    for (e, v) in c {
        *slot.entry(*e).or_default() += v;
    }
    slot.retain(|_, v| *v != 0);
    if slot.is_empty() {
        acc.remove(&key);
    }
}

fn one() -> Poly {
    Poly::from([(0, 1)])
}

/// The diamond product expanded directly from the four-case definition
/// with machine-integer coefficients, sharing no code with the library.
pub struct DiamondOracle {
    trees: HashMap<(Tree, Tree), Lin<Tree>>,
}

impl Default for DiamondOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl DiamondOracle {
    pub fn new() -> Self {
        Self { trees: HashMap::new() }
    }

    fn tree(&mut self, s: &Tree, t: &Tree) -> Lin<Tree> {
        if let Some(v) = self.trees.get(&(s.clone(), t.clone())) {
            return v.clone();
        }
        let out = match (s.body(), t.body()) {
            (None, _) => Lin::from([(t.clone(), one())]),
            (_, None) => Lin::from([(s.clone(), one())]),
            (Some(f), Some(g)) => {
                let mut out = Lin::new();
                let sf = Forest::from_tree(s.clone());
                let tg = Forest::from_tree(t.clone());
                let weight = Poly::from([(1, 1)]);
                for (h, c) in self.forest(&sf, g) {
                    add_into(&mut out, Tree::graft(h), &c);
                }
                for (h, c) in self.forest(f, &tg) {
                    add_into(&mut out, Tree::graft(h), &c);
                }
                for (h, c) in self.forest(f, g) {
                    add_into(&mut out, Tree::graft(h), &poly_mul(&weight, &c));
                }
                out
            }
        };
        self.trees.insert((s.clone(), t.clone()), out.clone());
        out
    }

    pub fn forest(&mut self, a: &Forest, b: &Forest) -> Lin<Forest> {
        let (mut at, al) = a.clone().into_parts();
        let (bt, bl) = b.clone().into_parts();
        let last = at.pop().unwrap();
        let mut out = Lin::new();
        for (t, c) in self.tree(&last, &bt[0]) {
            let mut trees = at.clone();
            trees.push(t);
            trees.extend(bt[1..].iter().cloned());
            let mut letters = al.clone();
            letters.extend(bl.iter().cloned());
            add_into(&mut out, Forest::new(trees, letters).unwrap(), &c);
        }
        out
    }

    pub fn element(&mut self, a: &Forest, b: &Forest) -> Element {
        let mut e = Element::zero();
        for (f, c) in self.forest(a, b) {
            e.add_term(f, WeightPoly::from_terms(c));
        }
        e
    }
}
