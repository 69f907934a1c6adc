//! Finite linear combinations of forests with [`WeightPoly`] coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub};

use crate::coeff::WeightPoly;
use crate::forest::Forest;

/// An element of the free module on forests, in canonical form: no stored
/// coefficient is zero, so map equality is element equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    terms: BTreeMap<Forest, WeightPoly>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `o`.
    pub fn unit() -> Self {
        Self::basis(Forest::leaf())
    }

    pub fn basis(forest: Forest) -> Self {
        Self::term(WeightPoly::one(), forest)
    }

    pub fn term(coeff: WeightPoly, forest: Forest) -> Self {
        let mut e = Self::zero();
        e.add_term(forest, coeff);
        e
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Forest, WeightPoly)>,
    {
        let mut e = Self::zero();
        for (f, c) in terms {
            e.add_term(f, c);
        }
        e
    }

    /// `sum c_i * E_i`.
    pub fn linear_combine<'a, I>(parts: I) -> Self
    where
        I: IntoIterator<Item = (&'a WeightPoly, &'a Element)>,
    {
        let mut out = Self::zero();
        for (c, e) in parts {
            out.add_scaled(c, e);
        }
        out
    }

    pub fn add_term(&mut self, forest: Forest, coeff: WeightPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&forest) {
            Some(slot) => {
                *slot += &coeff;
                if slot.is_zero() {
                    self.terms.remove(&forest);
                }
            }
            None => {
                self.terms.insert(forest, coeff);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &WeightPoly, other: &Element) {
        if c.is_zero() {
            return;
        }
        for (f, v) in &other.terms {
            self.add_term(f.clone(), c * v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, forest: &Forest) -> WeightPoly {
        self.terms.get(forest).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Forest, &WeightPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Forest> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Forest, WeightPoly)> {
        self.terms.into_iter()
    }

    pub fn scale(&self, c: &WeightPoly) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(f, v)| (f.clone(), c * v)).collect(),
        }
    }

    /// Applies a forest-valued map linearly.
    pub fn map_forests(&self, mut f: impl FnMut(&Forest) -> Forest) -> Element {
        let mut out = Element::zero();
        for (forest, c) in &self.terms {
            out.add_term(f(forest), c.clone());
        }
        out
    }

    /// Largest degree in the support.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Forest::degree).max()
    }

    /// Terms sorted by degree, then by canonical text.
    pub fn sorted_terms(&self) -> Vec<(&Forest, &WeightPoly)> {
        let mut v: Vec<_> = self.terms.iter().map(|(f, c)| (f.canonical_key(), f, c)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v.into_iter().map(|(_, f, c)| (f, c)).collect()
    }
}

impl From<Forest> for Element {
    fn from(f: Forest) -> Self {
        Element::basis(f)
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for (f, c) in &rhs.terms {
            self.add_term(f.clone(), c.clone());
        }
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        self += &rhs;
        self
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(f, c)| (f.clone(), -c)).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self + &(-rhs)
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}
