//! Concrete Rota-Baxter algebras and evaluation of free-algebra elements in
//! them.
//!
//! * [`ScalarModel`]: the rationals with `P(r) = -μ r`, of weight `μ`.
//! * [`LaurentModel`]: truncated Laurent series with rational coefficients
//!   and the pole-part projection, of weight `-1`.
//!
//! A third classical example, integration `P(f)(x) = ∫_0^x f(t) dt` on
//! continuous functions (weight 0), has no exact representation and is not
//! modelled.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::coeff::Rational;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::forest::{Forest, Letter, Tree};

/// A commutative-coefficient algebra with a Rota-Baxter operator.
pub trait RbModel {
    type Value: Clone + fmt::Debug + fmt::Display;

    fn weight(&self) -> Rational;
    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn scale(&self, c: &Rational, a: &Self::Value) -> Self::Value;
    fn operator(&self, a: &Self::Value) -> Self::Value;
    /// Equality on everything both values know exactly.
    fn agree(&self, a: &Self::Value, b: &Self::Value) -> bool;

    /// Both sides of `P(a)P(b) = P(aP(b)) + P(P(a)b) + μ P(ab)`.
    fn rb_sides(&self, a: &Self::Value, b: &Self::Value) -> (Self::Value, Self::Value) {
        let pa = self.operator(a);
        let pb = self.operator(b);
        let lhs = self.mul(&pa, &pb);
        let rhs = self.add(
            &self.add(&self.operator(&self.mul(a, &pb)), &self.operator(&self.mul(&pa, b))),
            &self.scale(&self.weight(), &self.operator(&self.mul(a, b))),
        );
        (lhs, rhs)
    }

    fn check_rb_identity(&self, a: &Self::Value, b: &Self::Value) -> bool {
        let (lhs, rhs) = self.rb_sides(a, b);
        self.agree(&lhs, &rhs)
    }
}

/// The rationals with `P(r) = -μ r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarModel {
    weight: Rational,
}

impl ScalarModel {
    pub fn new(weight: Rational) -> Self {
        Self { weight }
    }
}

impl RbModel for ScalarModel {
    type Value = Rational;

    fn weight(&self) -> Rational {
        self.weight.clone()
    }

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn scale(&self, c: &Rational, a: &Rational) -> Rational {
        c * a
    }

    fn operator(&self, a: &Rational) -> Rational {
        -(&self.weight * a)
    }

    fn agree(&self, a: &Rational, b: &Rational) -> bool {
        a == b
    }
}

/// A Laurent series `Σ a_n t^n` with rational coefficients, known exactly
/// up to and including `t^order`. `order == None` means every coefficient
/// is known.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    coeffs: BTreeMap<i64, Rational>,
    order: Option<i64>,
}

impl LaurentSeries {
    /// Sums repeated exponents, drops zeros and every exponent above `order`.
    pub fn new(coeffs: Vec<(i64, Rational)>, order: Option<i64>) -> Self {
        let mut out = Self {
            coeffs: BTreeMap::new(),
            order,
        };
        for (e, c) in coeffs {
            out.add_coeff(e, c);
        }
        out
    }

    pub fn zero() -> Self {
        Self::new(Vec::new(), None)
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        Self::new(vec![(exp, c)], None)
    }

    fn add_coeff(&mut self, e: i64, c: Rational) {
        if c.is_zero() || self.order.is_some_and(|m| e > m) {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn order(&self) -> Option<i64> {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order.is_none()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Smallest exponent that can be nonzero: the least stored exponent,
    /// or `order + 1` for a truncated zero. `None` for the exact zero.
    pub fn min_exp(&self) -> Option<i64> {
        match (self.coeffs.keys().next(), self.order) {
            (Some(e), _) => Some(*e),
            (None, Some(m)) => Some(m + 1),
            (None, None) => None,
        }
    }

    /// Whether the series is zero as far as it is known.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &LaurentSeries) -> LaurentSeries {
        let order = min_order(self.order, other.order);
        let mut out = LaurentSeries::new(Vec::new(), order);
        for (e, c) in self.coeffs.iter().chain(&other.coeffs) {
            out.add_coeff(*e, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> LaurentSeries {
        LaurentSeries::new(self.coeffs.iter().map(|(e, v)| (*e, c * v)).collect(), self.order)
    }

    /// Cauchy product. If `a` is known up to `M_a` and `b` up to `M_b`, the
    /// product is known up to `min(M_a + v(b), M_b + v(a))`.
    pub fn mul(&self, other: &LaurentSeries) -> LaurentSeries {
        let (va, vb) = match (self.min_exp(), other.min_exp()) {
            (Some(va), Some(vb)) => (va, vb),
            _ => return LaurentSeries::zero(),
        };
        let order = min_order(self.order.map(|m| m + vb), other.order.map(|m| m + va));
        let mut out = LaurentSeries::new(Vec::new(), order);
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                out.add_coeff(ea + eb, ca * cb);
            }
        }
        out
    }

    /// Keeps the strictly negative powers. Exact as long as all of them
    /// are known.
    pub fn pole_projection(&self) -> LaurentSeries {
        let order = match self.order {
            Some(m) if m < -1 => Some(m),
            _ => None,
        };
        LaurentSeries::new(
            self.coeffs.range(..0).map(|(e, c)| (*e, c.clone())).collect(),
            order,
        )
    }

    /// Equality of every coefficient both series know.
    pub fn agrees_with(&self, other: &LaurentSeries) -> bool {
        let bound = min_order(self.order, other.order);
        let known = |e: &i64| bound.is_none_or(|m| *e <= m);
        let a = self.coeffs.iter().filter(|(e, _)| known(e));
        let b = other.coeffs.iter().filter(|(e, _)| known(e));
        a.eq(b)
    }

    /// A random series with exponents in `min_exp..=order`, known up to
    /// `order`, coefficients small integers.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, min_exp: i64, order: i64) -> LaurentSeries {
        let mut coeffs = Vec::new();
        for e in min_exp..=order {
            if rng.random_bool(0.6) {
                coeffs.push((e, Rational::from_integer(rng.random_range(-3i64..=3).into())));
            }
        }
        LaurentSeries::new(coeffs, Some(order))
    }
}

fn min_order(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in &self.coeffs {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let c = c.abs();
            if *e == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*t^{e}")?;
            }
        }
        match self.order {
            Some(m) if first => write!(f, "O(t^{})", m + 1),
            Some(m) => write!(f, " + O(t^{})", m + 1),
            None if first => f.write_str("0"),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentSeries({self})")
    }
}

/// Laurent series with the pole-part projection, a Rota-Baxter algebra of
/// weight `-1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LaurentModel;

impl RbModel for LaurentModel {
    type Value = LaurentSeries;

    fn weight(&self) -> Rational {
        -Rational::one()
    }

    fn zero(&self) -> LaurentSeries {
        LaurentSeries::zero()
    }

    fn one(&self) -> LaurentSeries {
        LaurentSeries::one()
    }

    fn add(&self, a: &LaurentSeries, b: &LaurentSeries) -> LaurentSeries {
        a.add(b)
    }

    fn mul(&self, a: &LaurentSeries, b: &LaurentSeries) -> LaurentSeries {
        a.mul(b)
    }

    fn scale(&self, c: &Rational, a: &LaurentSeries) -> LaurentSeries {
        a.scale(c)
    }

    fn operator(&self, a: &LaurentSeries) -> LaurentSeries {
        a.pole_projection()
    }

    fn agree(&self, a: &LaurentSeries, b: &LaurentSeries) -> bool {
        a.agrees_with(b)
    }
}

/// An element whose `λ`-coefficients have been evaluated at a fixed weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializedElement {
    weight: Rational,
    terms: BTreeMap<Forest, Rational>,
}

impl SpecializedElement {
    pub fn new(element: &Element, weight: Rational) -> Self {
        let terms = element
            .terms()
            .map(|(f, c)| (f.clone(), c.specialize(&weight)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self { weight, terms }
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Forest, &Rational)> {
        self.terms.iter()
    }
}

/// Values assigned to letters.
pub type Assignment<V> = BTreeMap<Letter, V>;

/// The Rota-Baxter homomorphism extending `assignment`: `o ↦ 1`,
/// `[F] ↦ P(eval F)`, `T1 x T2 ↦ eval(T1) f(x) eval(T2)`.
pub fn evaluate_hom<M: RbModel>(
    element: &SpecializedElement,
    assignment: &Assignment<M::Value>,
    model: &M,
) -> Result<M::Value> {
    if element.weight != model.weight() {
        return Err(Error::WeightMismatch {
            element: element.weight.to_string(),
            model: model.weight().to_string(),
        });
    }
    let mut out = model.zero();
    for (f, c) in &element.terms {
        let v = evaluate_forest(f, assignment, model)?;
        out = model.add(&out, &model.scale(c, &v));
    }
    Ok(out)
}

/// Evaluates a single basis forest.
pub fn evaluate_forest<M: RbModel>(forest: &Forest, assignment: &Assignment<M::Value>, model: &M) -> Result<M::Value> {
    let mut acc = evaluate_tree(&forest.trees()[0], assignment, model)?;
    for (x, t) in forest.letters().iter().zip(&forest.trees()[1..]) {
        let fx = assignment
            .get(x)
            .ok_or_else(|| Error::UnassignedLetter(x.to_string()))?;
        acc = model.mul(&model.mul(&acc, fx), &evaluate_tree(t, assignment, model)?);
    }
    Ok(acc)
}

fn evaluate_tree<M: RbModel>(tree: &Tree, assignment: &Assignment<M::Value>, model: &M) -> Result<M::Value> {
    match tree {
        Tree::Leaf => Ok(model.one()),
        Tree::Graft(body) => Ok(model.operator(&evaluate_forest(body, assignment, model)?)),
    }
}
