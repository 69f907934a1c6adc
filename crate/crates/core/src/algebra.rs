//! The Rota-Baxter algebra structure on forests: the diamond product,
//! the grafting operator `B+` and the auxiliary star product.
//!
//! On trees the product is
//!
//! ```text
//! o ⋄ o = o,   T ⋄ o = T,   o ⋄ T' = T',
//! [F] ⋄ [G] = [[F] ⋄ G] + [F ⋄ [G]] + λ [F ⋄ G]
//! ```
//!
//! and on longer forests only the two touching boundary trees are
//! multiplied: `(.. x T) ⋄ (T' y ..) = .. x (T ⋄ T') y ..`. Each recursive
//! call strictly lowers the sum of the depths of its arguments, so the
//! recursion terminates.

use std::collections::BTreeMap;

use crate::coeff::WeightPoly;
use crate::element::Element;
use crate::forest::{Forest, Tree};

/// Which multiplication rule to use.
///
/// Only [`Product::RotaBaxter`] defines the free Rota-Baxter algebra;
/// [`Product::WithoutWeightTerm`] drops the `λ` summand and exists so the
/// law checker can be shown to detect a broken product.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Product {
    #[default]
    RotaBaxter,
    WithoutWeightTerm,
}

impl Product {
    /// Bilinear product of two elements.
    pub fn apply(self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (fa, ca) in a.terms() {
            for (fb, cb) in b.terms() {
                let coeff = ca * cb;
                out.add_scaled(&coeff, &self.forests(fa, fb));
            }
        }
        out
    }

    /// Product of two basis forests.
    pub fn forests(self, a: &Forest, b: &Forest) -> Element {
        let (a_trees, a_letters) = (a.trees(), a.letters());
        let (b_trees, b_letters) = (b.trees(), b.letters());
        let (last, a_rest) = a_trees.split_last().expect("forests are non-empty");
        let (first, b_rest) = b_trees.split_first().expect("forests are non-empty");

        let mut letters = Vec::with_capacity(a_letters.len() + b_letters.len());
        letters.extend_from_slice(a_letters);
        letters.extend_from_slice(b_letters);

        let mut out = Element::zero();
        for (tree, coeff) in self.trees(last, first) {
            let mut trees = Vec::with_capacity(a_trees.len() + b_trees.len() - 1);
            trees.extend_from_slice(a_rest);
            trees.push(tree);
            trees.extend_from_slice(b_rest);
            out.add_term(Forest::from_parts_unchecked(trees, letters.clone()), coeff);
        }
        out
    }

    /// Product of two trees; the result is a combination of trees.
    pub fn trees(self, s: &Tree, t: &Tree) -> BTreeMap<Tree, WeightPoly> {
        let mut out = BTreeMap::new();
        match (s, t) {
            (Tree::Leaf, _) => {
                out.insert(t.clone(), WeightPoly::one());
            }
            (_, Tree::Leaf) => {
                out.insert(s.clone(), WeightPoly::one());
            }
            (Tree::Graft(f), Tree::Graft(g)) => {
                let s_forest = Forest::from_tree(s.clone());
                let t_forest = Forest::from_tree(t.clone());
                let mut acc = self.forests(&s_forest, g);
                acc += &self.forests(f, &t_forest);
                if self == Product::RotaBaxter {
                    acc.add_scaled(&WeightPoly::weight(), &self.forests(f, g));
                }
                for (forest, coeff) in acc.into_terms() {
                    out.insert(Tree::graft(forest), coeff);
                }
            }
        }
        out
    }

    /// `B+(a) ⋄ b + a ⋄ B+(b) + λ a ⋄ b`, so that `B+(a ⋆ b) = B+(a) ⋄ B+(b)`.
    pub fn star(self, a: &Element, b: &Element) -> Element {
        let mut out = self.apply(&bplus(a), b);
        out += &self.apply(a, &bplus(b));
        if self == Product::RotaBaxter {
            out.add_scaled(&WeightPoly::weight(), &self.apply(a, b));
        }
        out
    }

    /// Both sides of `P(a)P(b) = P(a P(b)) + P(P(a) b) + λ P(ab)` with `P = B+`.
    pub fn rb_sides(self, a: &Element, b: &Element) -> (Element, Element) {
        let pa = bplus(a);
        let pb = bplus(b);
        let lhs = self.apply(&pa, &pb);
        let mut rhs = bplus(&self.apply(a, &pb));
        rhs += &bplus(&self.apply(&pa, b));
        rhs.add_scaled(&WeightPoly::weight(), &bplus(&self.apply(a, b)));
        (lhs, rhs)
    }
}

/// The diamond product of the free Rota-Baxter algebra.
pub fn diamond(a: &Element, b: &Element) -> Element {
    Product::RotaBaxter.apply(a, b)
}

/// The grafting operator, extended linearly.
pub fn bplus(a: &Element) -> Element {
    a.map_forests(Forest::graft)
}

pub fn star(a: &Element, b: &Element) -> Element {
    Product::RotaBaxter.star(a, b)
}

/// Exact check of the weight-λ Rota-Baxter identity for `B+` on `(a, b)`.
pub fn check_rb_identity(a: &Element, b: &Element) -> bool {
    let (lhs, rhs) = Product::RotaBaxter.rb_sides(a, b);
    lhs == rhs
}
