//! The angular coproduct, counit and degree filtration.
//!
//! For a basis forest `F`,
//!
//! ```text
//! Δ(F) = Σ_H cl(H) ⊗ F/H
//! ```
//!
//! summed over all subforests `H` (the empty one included), where the
//! closure and the quotient are evaluated by reading `⊔` as `⋄`.

mod marking;
mod tensor;
mod word;

pub use marking::{
    closure, enumerate_subforests, factorwise_subforests, quotient, FactorwisePair, SubforestMarking,
};
pub use tensor::{MultiTensor, TensorElement};
pub use word::{evaluate_marked_word, Component, MarkedTree, MarkedWord, Separator};

use crate::algebra::Product;
use crate::coeff::WeightPoly;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::forest::Forest;

/// Which coproduct rule to use.
///
/// [`Coproduct::WithoutEmptySubforest`] drops the term of the empty
/// subforest and exists only to show that the counit check notices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Coproduct {
    #[default]
    Full,
    WithoutEmptySubforest,
}

impl Coproduct {
    /// `Δ` on a basis forest, evaluating `⊔` with `product`.
    pub fn forest(self, forest: &Forest, product: Product) -> TensorElement {
        let mut out = TensorElement::zero();
        for marking in enumerate_subforests(forest) {
            if self == Coproduct::WithoutEmptySubforest && marking.is_empty() {
                continue;
            }
            let cl = closure(forest, &marking).expect("enumerated markings are valid");
            let q = quotient(forest, &marking).expect("enumerated markings are valid");
            out.add_tensor(&WeightPoly::one(), &cl.evaluate(product), &q.evaluate(product));
        }
        out
    }

    /// Linear extension of [`Coproduct::forest`].
    pub fn apply(self, a: &Element, product: Product) -> TensorElement {
        let mut out = TensorElement::zero();
        for (f, c) in a.terms() {
            out.add_scaled(c, &self.forest(f, product));
        }
        out
    }
}

pub fn coproduct(a: &Element) -> TensorElement {
    Coproduct::Full.apply(a, Product::RotaBaxter)
}

pub fn coproduct_forest(forest: &Forest) -> TensorElement {
    Coproduct::Full.forest(forest, Product::RotaBaxter)
}

/// `Δ(F)` built from the factorwise recursion instead of global markings.
pub fn coproduct_factorwise(forest: &Forest) -> TensorElement {
    let mut out = TensorElement::zero();
    for (components, q) in factorwise_subforests(forest) {
        let cl = MarkedWord::from_components(&components);
        out.add_tensor(&WeightPoly::one(), &evaluate_marked_word(&cl), &evaluate_marked_word(&q));
    }
    out
}

/// The coefficient of `o`.
pub fn counit(a: &Element) -> WeightPoly {
    a.coeff(&Forest::leaf())
}

/// `Δ(F) - o ⊗ F - F ⊗ o`.
pub fn reduced_coproduct(forest: &Forest) -> Result<TensorElement> {
    reduced_coproduct_with(forest, Coproduct::Full, Product::RotaBaxter)
}

pub(crate) fn reduced_coproduct_with(
    forest: &Forest,
    coproduct: Coproduct,
    product: Product,
) -> Result<TensorElement> {
    if forest.is_unit() {
        return Err(Error::UnitForest);
    }
    let mut out = coproduct.forest(forest, product);
    let one = WeightPoly::one();
    out.add_term(Forest::leaf(), forest.clone(), -&one);
    out.add_term(forest.clone(), Forest::leaf(), -&one);
    Ok(out)
}

/// Largest `deg(F) - 1` over the support.
pub fn filtration_degree(a: &Element) -> Result<usize> {
    a.max_degree().map(|d| d - 1).ok_or(Error::ZeroElement)
}
