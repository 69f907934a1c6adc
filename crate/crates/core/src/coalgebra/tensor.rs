use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, Neg, Sub};

use crate::algebra::Product;
use crate::coeff::WeightPoly;
use crate::element::Element;
use crate::forest::Forest;
use crate::syntax::{render_sum, Format};

/// An element of `kF ⊗ kF`, in canonical form.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TensorElement {
    terms: BTreeMap<(Forest, Forest), WeightPoly>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, left: Forest, right: Forest, coeff: WeightPoly) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += &coeff;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    /// `a ⊗ b`, expanded bilinearly.
    pub fn tensor(a: &Element, b: &Element) -> Self {
        let mut out = Self::zero();
        out.add_tensor(&WeightPoly::one(), a, b);
        out
    }

    /// `self += c * (a ⊗ b)`.
    pub fn add_tensor(&mut self, c: &WeightPoly, a: &Element, b: &Element) {
        for (fa, ca) in a.terms() {
            let cca = c * ca;
            for (fb, cb) in b.terms() {
                self.add_term(fa.clone(), fb.clone(), &cca * cb);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &WeightPoly, other: &TensorElement) {
        for ((l, r), v) in &other.terms {
            self.add_term(l.clone(), r.clone(), c * v);
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

    pub fn coeff(&self, left: &Forest, right: &Forest) -> WeightPoly {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Forest, &Forest, &WeightPoly)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn product(&self, other: &TensorElement, product: Product) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                let left = product.forests(l1, l2);
                let right = product.forests(r1, r2);
                out.add_tensor(&(c1 * c2), &left, &right);
            }
        }
        out
    }

    /// `(id ⊗ B+)`.
    pub fn graft_right(&self) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(l.clone(), r.graft(), c.clone());
        }
        out
    }

    /// `m(self)`: multiply the two legs.
    pub fn multiply(&self, product: Product) -> Element {
        let mut out = Element::zero();
        for ((l, r), c) in &self.terms {
            out.add_scaled(c, &product.forests(l, r));
        }
        out
    }

    /// `(f ⊗ g)` applied termwise with element-valued maps.
    pub fn map_legs(
        &self,
        mut left: impl FnMut(&Forest) -> Element,
        mut right: impl FnMut(&Forest) -> Element,
    ) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((l, r), c) in &self.terms {
            out.add_tensor(c, &left(l), &right(r));
        }
        out
    }

    /// `(ε ⊗ id)`, identifying `k ⊗ kF` with `kF`.
    pub fn counit_left(&self) -> Element {
        let mut out = Element::zero();
        for ((l, r), c) in &self.terms {
            if l.is_unit() {
                out.add_term(r.clone(), c.clone());
            }
        }
        out
    }

    /// `(id ⊗ ε)`, identifying `kF ⊗ k` with `kF`.
    pub fn counit_right(&self) -> Element {
        let mut out = Element::zero();
        for ((l, r), c) in &self.terms {
            if r.is_unit() {
                out.add_term(l.clone(), c.clone());
            }
        }
        out
    }

    /// Terms ordered by left leg, then right leg (degree, then text).
    pub fn sorted_terms(&self) -> Vec<(&Forest, &Forest, &WeightPoly)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|((l, r), c)| ((l.canonical_key(), r.canonical_key()), l, r, c))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v.into_iter().map(|(_, l, r, c)| (l, r, c)).collect()
    }

    pub fn render(&self, format: Format) -> String {
        render_sum(
            self.sorted_terms().into_iter().map(|(l, r, c)| {
                let body = match format {
                    Format::Plain => format!("{l} (x) {r}"),
                    Format::Latex => format!("{} \\otimes {}", l.to_latex(), r.to_latex()),
                };
                (c, body)
            }),
            format,
        )
    }
}

impl AddAssign<&TensorElement> for TensorElement {
    fn add_assign(&mut self, rhs: &TensorElement) {
        for ((l, r), c) in &rhs.terms {
            self.add_term(l.clone(), r.clone(), c.clone());
        }
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        TensorElement {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Sub<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out += &-rhs;
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Format::Plain))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({self})")
    }
}

/// An element of `kF^{⊗n}` for any `n ≥ 1`, used for iterated coproducts.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct MultiTensor {
    terms: BTreeMap<Vec<Forest>, WeightPoly>,
}

impl MultiTensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_element(e: &Element) -> Self {
        let mut out = Self::zero();
        for (f, c) in e.terms() {
            out.add_term(vec![f.clone()], c.clone());
        }
        out
    }

    pub fn from_tensor(t: &TensorElement) -> Self {
        let mut out = Self::zero();
        for (l, r, c) in t.terms() {
            out.add_term(vec![l.clone(), r.clone()], c.clone());
        }
        out
    }

    pub fn add_term(&mut self, legs: Vec<Forest>, coeff: WeightPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&legs) {
            Some(slot) => {
                *slot += &coeff;
                if slot.is_zero() {
                    self.terms.remove(&legs);
                }
            }
            None => {
                self.terms.insert(legs, coeff);
            }
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

    pub fn terms(&self) -> impl Iterator<Item = (&[Forest], &WeightPoly)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    /// Replaces leg `index` of every term by the two legs of `split(leg)`.
    pub fn split_leg(&self, index: usize, mut split: impl FnMut(&Forest) -> TensorElement) -> MultiTensor {
        let mut out = MultiTensor::zero();
        for (legs, c) in &self.terms {
            for (l, r, v) in split(&legs[index]).terms() {
                let mut new_legs = Vec::with_capacity(legs.len() + 1);
                new_legs.extend_from_slice(&legs[..index]);
                new_legs.push(l.clone());
                new_legs.push(r.clone());
                new_legs.extend_from_slice(&legs[index + 1..]);
                out.add_term(new_legs, c * v);
            }
        }
        out
    }

    /// Left-nested multiplication of all legs: `((l1 l2) l3) ...`.
    pub fn multiply(&self, product: Product) -> Element {
        let mut out = Element::zero();
        for (legs, c) in &self.terms {
            let mut acc = Element::basis(legs[0].clone());
            for leg in &legs[1..] {
                acc = product.apply(&acc, &Element::basis(leg.clone()));
            }
            out.add_scaled(c, &acc);
        }
        out
    }
}

impl fmt::Display for MultiTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = render_sum(
            self.terms.iter().map(|(legs, c)| {
                let legs: Vec<String> = legs.iter().map(ToString::to_string).collect();
                (c, legs.join(" (x) "))
            }),
            Format::Plain,
        );
        f.write_str(&text)
    }
}

impl fmt::Debug for MultiTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiTensor({self})")
    }
}
