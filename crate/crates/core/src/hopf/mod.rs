//! Antipode and convolution.
//!
//! Two independent antipode algorithms are provided:
//!
//! * [`antipode`] sums the finite series
//!   `S(x) = -x + Σ_{n≥1} (-1)^{n+1} mⁿ Δ̄ⁿ(x)`, with `Δ̄ⁿ` splitting the
//!   first leg each time and `mⁿ` multiplying left to right;
//! * [`antipode_oracle`] solves `m(S ⊗ id)Δ = uε` degree by degree:
//!   `S(F) = -F - Σ S(F') ⋄ F''` over the terms of `Δ̄(F)`.

mod suite;

use std::collections::HashMap;

pub use suite::{
    run_axiom_suite, Counterexample, LawReport, Report, Severity, SuiteConfig, ANTIHOMOMORPHISM, ANTIPODE_EQUIVALENCE,
    ASSOCIATIVITY, COASSOCIATIVITY, COCYCLE, CONNECTEDNESS, CONVOLUTION, COUNIT, FILTRATION, MULTIPLICATIVITY,
    RB_IDENTITY, TRUNCATION, UNIT,
};

use crate::algebra::Product;
use crate::coalgebra::{reduced_coproduct_with, Coproduct, MultiTensor, TensorElement};
use crate::coeff::WeightPoly;
use crate::element::Element;
use crate::forest::Forest;

/// A choice of product and coproduct. The default is the genuine Hopf
/// algebra; the other variants exist to test that the checks have teeth.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Structure {
    pub product: Product,
    pub coproduct: Coproduct,
}

impl Structure {
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        self.product.apply(a, b)
    }

    pub fn coproduct(&self, forest: &Forest) -> TensorElement {
        self.coproduct.forest(forest, self.product)
    }

    pub fn coproduct_element(&self, a: &Element) -> TensorElement {
        self.coproduct.apply(a, self.product)
    }

    /// `Δ̄`, taken to vanish on `o` so that it can be iterated.
    pub fn reduced(&self, forest: &Forest) -> TensorElement {
        reduced_coproduct_with(forest, self.coproduct, self.product).unwrap_or_default()
    }

    /// `Δ̄ⁿ(F)` as an element of the `(n+1)`-fold tensor power.
    pub fn iterated_reduced(&self, forest: &Forest, n: usize) -> MultiTensor {
        let mut t = MultiTensor::from_element(&Element::basis(forest.clone()));
        for _ in 0..n {
            if t.is_zero() {
                break;
            }
            t = t.split_leg(0, |f| self.reduced(f));
        }
        t
    }

    /// The antipode series on a basis forest, stopped at the first
    /// vanishing `Δ̄ⁿ`.
    pub fn antipode_forest(&self, forest: &Forest) -> Element {
        if forest.is_unit() {
            return Element::unit();
        }
        let mut out = -Element::basis(forest.clone());
        let mut t = MultiTensor::from_element(&Element::basis(forest.clone()));
        let mut sign = WeightPoly::one();
        loop {
            t = t.split_leg(0, |f| self.reduced(f));
            if t.is_zero() {
                break;
            }
            out.add_scaled(&sign, &t.multiply(self.product));
            sign = -sign;
        }
        out
    }

    pub fn antipode(&self, a: &Element) -> Element {
        let mut out = Element::zero();
        for (f, c) in a.terms() {
            out.add_scaled(c, &self.antipode_forest(f));
        }
        out
    }

    /// Antipode by the triangular recursion, memoized across calls on the
    /// same [`AntipodeOracle`].
    pub fn oracle(&self) -> AntipodeOracle {
        AntipodeOracle {
            structure: *self,
            memo: HashMap::new(),
        }
    }

    /// `(Σ S(F₁)⋄F₂, ε(F)·o, Σ F₁⋄S(F₂))`.
    pub fn convolutions(&self, forest: &Forest) -> (Element, Element, Element) {
        let delta = self.coproduct(forest);
        let left = delta
            .map_legs(|l| self.antipode_forest(l), |r| Element::basis(r.clone()))
            .multiply(self.product);
        let right = delta
            .map_legs(|l| Element::basis(l.clone()), |r| self.antipode_forest(r))
            .multiply(self.product);
        let unit = if forest.is_unit() { Element::unit() } else { Element::zero() };
        (left, unit, right)
    }
}

/// Memoized triangular recursion for the antipode.
#[derive(Debug)]
pub struct AntipodeOracle {
    structure: Structure,
    memo: HashMap<Forest, Element>,
}

impl AntipodeOracle {
    pub fn forest(&mut self, forest: &Forest) -> Element {
        if let Some(s) = self.memo.get(forest) {
            return s.clone();
        }
        let s = if forest.is_unit() {
            Element::unit()
        } else {
            let mut s = -Element::basis(forest.clone());
            for (l, r, c) in self.structure.reduced(forest).terms() {
                let sl = self.forest(l);
                s.add_scaled(&-c, &self.structure.mul(&sl, &Element::basis(r.clone())));
            }
            s
        };
        self.memo.insert(forest.clone(), s.clone());
        s
    }

    pub fn apply(&mut self, a: &Element) -> Element {
        let mut out = Element::zero();
        for (f, c) in a.terms() {
            let s = self.forest(f);
            out.add_scaled(c, &s);
        }
        out
    }
}

/// The antipode, via the series.
pub fn antipode(a: &Element) -> Element {
    Structure::default().antipode(a)
}

/// The antipode, via the triangular recursion.
pub fn antipode_oracle(a: &Element) -> Element {
    Structure::default().oracle().apply(a)
}

/// `Σ S(F₁)⋄F₂ = ε(F)·o = Σ F₁⋄S(F₂)`.
pub fn convolve_check(forest: &Forest) -> bool {
    let (left, unit, right) = Structure::default().convolutions(forest);
    left == unit && right == unit
}
