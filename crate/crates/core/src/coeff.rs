//! Exact coefficients: polynomials in the formal weight `L` (λ) over the
//! integers, and their specialization to rational weights.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational numbers used at the model boundary.
pub type Rational = BigRational;

/// A polynomial in the weight λ with arbitrary-precision integer coefficients.
///
/// Stored sparsely as exponent -> coefficient; zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl WeightPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The weight λ itself.
    pub fn weight() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * λ^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: u32) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Coefficient of `λ^exp` (zero when absent).
    pub fn coeff(&self, exp: u32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// True for a single nonzero term `c * λ^e`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Coefficient of the highest power, if any.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    /// Evaluates the polynomial at `λ = value` with exact rational arithmetic.
    pub fn specialize(&self, value: &Rational) -> Rational {
        // Horner over the dense exponent range.
        let Some(top) = self.degree() else {
            return Rational::zero();
        };
        let mut acc = Rational::zero();
        for e in (0..=top).rev() {
            acc = acc * value + Rational::from_integer(self.coeff(e));
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }
}

impl From<i64> for WeightPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for WeightPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&WeightPoly> for WeightPoly {
    fn add_assign(&mut self, rhs: &WeightPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl Add<&WeightPoly> for &WeightPoly {
    type Output = WeightPoly;
    fn add(self, rhs: &WeightPoly) -> WeightPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for WeightPoly {
    type Output = WeightPoly;
    fn add(mut self, rhs: WeightPoly) -> WeightPoly {
        self += &rhs;
        self
    }
}

impl Neg for &WeightPoly {
    type Output = WeightPoly;
    fn neg(self) -> WeightPoly {
        WeightPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for WeightPoly {
    type Output = WeightPoly;
    fn neg(self) -> WeightPoly {
        -&self
    }
}

impl Sub<&WeightPoly> for &WeightPoly {
    type Output = WeightPoly;
    fn sub(self, rhs: &WeightPoly) -> WeightPoly {
        self + &(-rhs)
    }
}

impl Sub for WeightPoly {
    type Output = WeightPoly;
    fn sub(self, rhs: WeightPoly) -> WeightPoly {
        &self - &rhs
    }
}

impl Mul<&WeightPoly> for &WeightPoly {
    type Output = WeightPoly;
    fn mul(self, rhs: &WeightPoly) -> WeightPoly {
        let mut out = WeightPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for WeightPoly {
    type Output = WeightPoly;
    fn mul(self, rhs: WeightPoly) -> WeightPoly {
        &self * &rhs
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, abs: &BigInt, exp: u32) -> fmt::Result {
    match exp {
        0 => write!(f, "{abs}"),
        _ => {
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "L")?;
            if exp > 1 {
                write!(f, "^{exp}")?;
            }
            Ok(())
        }
    }
}

/// Plain form, highest power first: `2*L^2 - 3*L + 1`.
impl fmt::Display for WeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, c)) in self.coeffs.iter().rev().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            fmt_monomial(f, &abs, *exp)?;
        }
        Ok(())
    }
}

impl WeightPoly {
    /// LaTeX form using `\lambda`.
    pub fn to_latex(&self) -> String {
        self.to_string()
            .replace("L", "\\lambda")
            .replace('*', " ")
    }
}
