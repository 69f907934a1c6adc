//! Text forms of forests, elements, tensors, weight polynomials and
//! Laurent series.
//!
//! ```text
//! element := ['+'|'-'] term (('+'|'-') term)*  |  '0'
//! term    := [coeff '*'] forest
//! tensor  := ['+'|'-'] tterm (('+'|'-') tterm)*  |  '0'
//! tterm   := [coeff '*'] forest '(x)' forest
//! coeff   := int ['*' mono] | mono | '(' poly ')'
//! mono    := 'L' ['^' int]
//! poly    := ['-'] pterm (('+'|'-') pterm)*
//! pterm   := int ['*' mono] | mono
//! forest  := tree (letter tree)*
//! tree    := 'o' | '[' forest ']'
//! letter  := identifier other than 'o', 'L', 't'
//! ```
//!
//! Rendering sorts terms by degree and then by canonical text, writes unit
//! coefficients implicitly, monomial coefficients bare (`2*L*[o]`) and other
//! polynomials in parentheses with the sign of their leading coefficient
//! pulled out (`- (L + 2)*[o]`). Rendered text parses back to an equal value.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::coeff::{Rational, WeightPoly};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::forest::{Alphabet, Forest, Letter, Tree};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Tensor,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Tensor => f.write_str("`(x)`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

fn syntax(pos: Pos, message: impl Into<String>) -> Error {
    Error::Syntax {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column };
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            Tok::Int(digits.parse().expect("ascii digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c == '(' && chars.get(i + 1) == Some(&'x') && chars.get(i + 2) == Some(&')') {
            i += 3;
            Tok::Tensor
        } else {
            i += 1;
            match c {
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '/' => Tok::Slash,
                _ => return Err(syntax(pos, format!("unexpected character `{c}`"))),
            }
        };
        column += i - start;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, Pos)>,
    idx: usize,
    alphabet: Option<&'a Alphabet>,
    open: Vec<Pos>,
}

impl<'a> Parser<'a> {
    fn new(text: &str, alphabet: Option<&'a Alphabet>) -> Result<Self> {
        Ok(Self {
            toks: lex(text)?,
            idx: 0,
            alphabet,
            open: Vec::new(),
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.idx].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.idx + k).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.idx].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.idx].0.clone();
        if self.idx + 1 < self.toks.len() {
            self.idx += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.unexpected(what))
        }
    }

    fn unexpected(&self, what: &str) -> Error {
        syntax(self.pos(), format!("expected {what}, found {}", self.peek()))
    }

    fn finish(&mut self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn is_ident(&self, name: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == name)
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.bump() {
            Tok::Int(n) => Ok(n),
            _ => {
                self.idx -= 1;
                Err(self.unexpected("an integer"))
            }
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        if !self.eat(&Tok::Caret) {
            return Ok(1);
        }
        let pos = self.pos();
        let n = self.int()?;
        u32::try_from(&n).map_err(|_| syntax(pos, format!("exponent {n} out of range")))
    }

    // mono := 'L' ['^' int]
    fn mono(&mut self) -> Result<u32> {
        if !self.is_ident("L") {
            return Err(self.unexpected("`L`"));
        }
        self.bump();
        self.exponent()
    }

    // pterm := int ['*' mono] | mono
    fn poly_term(&mut self) -> Result<WeightPoly> {
        match self.peek() {
            Tok::Int(_) => {
                let c = self.int()?;
                if *self.peek() == Tok::Star && matches!(self.peek_at(1), Tok::Ident(s) if s == "L") {
                    self.bump();
                    let e = self.mono()?;
                    Ok(WeightPoly::monomial(c, e))
                } else {
                    Ok(WeightPoly::constant(c))
                }
            }
            _ => Ok(WeightPoly::monomial(1, self.mono()?)),
        }
    }

    fn poly(&mut self) -> Result<WeightPoly> {
        let negate = self.eat(&Tok::Minus);
        let first = self.poly_term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            if self.eat(&Tok::Plus) {
                acc += &self.poly_term()?;
            } else if self.eat(&Tok::Minus) {
                acc += &-self.poly_term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    /// Optional `coeff '*'` prefix of a term. Returns `None` for the bare
    /// literal `0`.
    fn coeff_prefix(&mut self) -> Result<Option<WeightPoly>> {
        match self.peek().clone() {
            Tok::Int(_) => {
                let c = self.int()?;
                if !self.eat(&Tok::Star) {
                    if c.is_zero() {
                        return Ok(None);
                    }
                    return Err(self.unexpected("`*` after a coefficient"));
                }
                if self.is_ident("L") {
                    let e = self.mono()?;
                    self.expect(Tok::Star, "`*` after a coefficient")?;
                    Ok(Some(WeightPoly::monomial(c, e)))
                } else {
                    Ok(Some(WeightPoly::constant(c)))
                }
            }
            Tok::Ident(s) if s == "L" => {
                let e = self.mono()?;
                self.expect(Tok::Star, "`*` after a coefficient")?;
                Ok(Some(WeightPoly::monomial(1, e)))
            }
            Tok::LParen => {
                self.bump();
                let p = self.poly()?;
                self.expect(Tok::RParen, "`)` closing the coefficient")?;
                self.expect(Tok::Star, "`*` after a coefficient")?;
                Ok(Some(p))
            }
            _ => Ok(Some(WeightPoly::one())),
        }
    }

    fn tree(&mut self) -> Result<Tree> {
        match self.peek() {
            Tok::Ident(s) if s == "o" => {
                self.bump();
                Ok(Tree::Leaf)
            }
            Tok::LBracket => {
                let open = self.pos();
                self.bump();
                self.open.push(open);
                let body = self.forest()?;
                self.open.pop();
                if !self.eat(&Tok::RBracket) {
                    return Err(syntax(
                        self.pos(),
                        format!(
                            "expected `]` closing the `[` at {}:{}, found {}",
                            open.line,
                            open.column,
                            self.peek()
                        ),
                    ));
                }
                Ok(Tree::graft(body))
            }
            Tok::End if !self.open.is_empty() => {
                let open = self.open[self.open.len() - 1];
                Err(syntax(
                    self.pos(),
                    format!(
                        "expected a tree, found end of input; missing `]` for the `[` at {}:{}",
                        open.line, open.column
                    ),
                ))
            }
            _ => Err(self.unexpected("a tree (`o` or `[`)")),
        }
    }

    fn letter(&mut self) -> Result<Option<Letter>> {
        let pos = self.pos();
        let name = match self.peek() {
            Tok::Ident(s) if s != "o" => s.clone(),
            Tok::Ident(_) | Tok::LBracket => {
                return Err(syntax(pos, "adjacent trees must be separated by a letter"));
            }
            _ => return Ok(None),
        };
        self.bump();
        let at = |e: Error| Error::At {
            line: pos.line,
            column: pos.column,
            error: Box::new(e),
        };
        let letter = match self.alphabet {
            Some(a) => a.letter(&name),
            None => Letter::new(&name),
        };
        letter.map(Some).map_err(at)
    }

    fn forest(&mut self) -> Result<Forest> {
        let mut trees = vec![self.tree()?];
        let mut letters = Vec::new();
        while let Some(x) = self.letter()? {
            letters.push(x);
            trees.push(self.tree()?);
        }
        Forest::new(trees, letters)
    }

    /// `['+'|'-'] item (('+'|'-') item)*` where each item is scaled by its sign.
    fn signed_sum<T>(
        &mut self,
        mut item: impl FnMut(&mut Self) -> Result<Option<(WeightPoly, T)>>,
    ) -> Result<Vec<(WeightPoly, T)>> {
        let mut out = Vec::new();
        let mut negative = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        loop {
            if let Some((c, t)) = item(self)? {
                out.push((if negative { -c } else { c }, t));
            }
            if self.eat(&Tok::Plus) {
                negative = false;
            } else if self.eat(&Tok::Minus) {
                negative = true;
            } else {
                return Ok(out);
            }
        }
    }

    fn element(&mut self) -> Result<Element> {
        let terms = self.signed_sum(|p| {
            let Some(c) = p.coeff_prefix()? else {
                return Ok(None);
            };
            Ok(Some((c, p.forest()?)))
        })?;
        Ok(Element::from_terms(terms.into_iter().map(|(c, f)| (f, c))))
    }

    fn tensor(&mut self) -> Result<crate::coalgebra::TensorElement> {
        let terms = self.signed_sum(|p| {
            let Some(c) = p.coeff_prefix()? else {
                return Ok(None);
            };
            let left = p.forest()?;
            p.expect(Tok::Tensor, "`(x)`")?;
            let right = p.forest()?;
            Ok(Some((c, (left, right))))
        })?;
        let mut out = crate::coalgebra::TensorElement::zero();
        for (c, (l, r)) in terms {
            out.add_term(l, r, c);
        }
        Ok(out)
    }

    // rational := ['-'] int ['/' int]
    fn rational(&mut self) -> Result<Rational> {
        let negate = self.eat(&Tok::Minus);
        let num = self.int()?;
        let den = if self.eat(&Tok::Slash) {
            let pos = self.pos();
            let d = self.int()?;
            if d.is_zero() {
                return Err(syntax(pos, "zero denominator"));
            }
            d
        } else {
            BigInt::one()
        };
        let q = Rational::new(num, den);
        Ok(if negate { -q } else { q })
    }

    fn t_power(&mut self) -> Result<i64> {
        if !self.is_ident("t") {
            return Err(self.unexpected("`t`"));
        }
        self.bump();
        if !self.eat(&Tok::Caret) {
            return Ok(1);
        }
        let negate = self.eat(&Tok::Minus);
        let pos = self.pos();
        let n = self.int()?;
        let n = i64::try_from(&n).map_err(|_| syntax(pos, "exponent out of range"))?;
        Ok(if negate { -n } else { n })
    }

    // series := ['-'] lterm (('+'|'-') lterm)* [('+') 'O' '(' t-power ')']
    // lterm  := rational ['*' t-power] | t-power
    fn laurent(&mut self) -> Result<crate::models::LaurentSeries> {
        let mut coeffs: Vec<(i64, Rational)> = Vec::new();
        let mut order = None;
        let mut negative = self.eat(&Tok::Minus);
        loop {
            if self.is_ident("O") {
                if negative {
                    return Err(self.unexpected("a series term"));
                }
                self.bump();
                self.expect(Tok::LParen, "`(` after `O`")?;
                let e = self.t_power()?;
                self.expect(Tok::RParen, "`)`")?;
                order = Some(e - 1);
            } else {
                let (c, e) = match self.peek() {
                    Tok::Int(_) => {
                        let c = self.rational()?;
                        let e = if self.eat(&Tok::Star) { self.t_power()? } else { 0 };
                        (c, e)
                    }
                    _ => (Rational::one(), self.t_power()?),
                };
                coeffs.push((e, if negative { -c } else { c }));
            }
            if order.is_some() {
                break;
            }
            if self.eat(&Tok::Plus) {
                negative = false;
            } else if self.eat(&Tok::Minus) {
                negative = true;
            } else {
                break;
            }
        }
        Ok(crate::models::LaurentSeries::new(coeffs, order))
    }
}

fn run<'a, T>(text: &str, alphabet: Option<&'a Alphabet>, f: impl FnOnce(&mut Parser<'a>) -> Result<T>) -> Result<T> {
    let mut p = Parser::new(text, alphabet)?;
    let out = f(&mut p)?;
    p.finish()?;
    Ok(out)
}

/// Parses an element. Without an alphabet every valid identifier is
/// accepted as a letter.
pub fn parse_element(text: &str, alphabet: Option<&Alphabet>) -> Result<Element> {
    run(text, alphabet, Parser::element)
}

pub fn parse_forest(text: &str, alphabet: Option<&Alphabet>) -> Result<Forest> {
    run(text, alphabet, Parser::forest)
}

pub fn parse_tensor(text: &str, alphabet: Option<&Alphabet>) -> Result<crate::coalgebra::TensorElement> {
    run(text, alphabet, Parser::tensor)
}

pub fn parse_weight_poly(text: &str) -> Result<WeightPoly> {
    run(text, None, Parser::poly)
}

/// `3`, `-1`, `3/2`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    run(text, None, Parser::rational)
}

/// `1*t^-1 + 2 + 1*t^1`, optionally followed by `+ O(t^k)`.
pub fn parse_laurent(text: &str) -> Result<crate::models::LaurentSeries> {
    run(text, None, Parser::laurent)
}

/// Output format for [`render_element`] and friends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Plain,
    Latex,
}

/// Joins `(coefficient, body)` pairs into `a - 2*b + (L + 1)*c`.
pub(crate) fn render_sum<'a, I>(terms: I, format: Format) -> String
where
    I: IntoIterator<Item = (&'a WeightPoly, String)>,
{
    let mut out = String::new();
    for (i, (coeff, body)) in terms.into_iter().enumerate() {
        let negative = coeff.leading_coeff().is_some_and(Signed::is_negative);
        let abs = if negative { -coeff } else { coeff.clone() };
        match (i, negative) {
            (0, true) => out.push_str("- "),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !abs.is_one() {
            match format {
                Format::Plain if abs.is_monomial() => out.push_str(&format!("{abs}*")),
                Format::Plain => out.push_str(&format!("({abs})*")),
                Format::Latex if abs.is_monomial() => out.push_str(&format!("{}\\, ", abs.to_latex())),
                Format::Latex => out.push_str(&format!("\\left({}\\right) ", abs.to_latex())),
            }
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_element(e: &Element, format: Format) -> String {
    render_sum(
        e.sorted_terms().into_iter().map(|(f, c)| {
            let body = match format {
                Format::Plain => f.to_string(),
                Format::Latex => f.to_latex(),
            };
            (c, body)
        }),
        format,
    )
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_element(self, Format::Plain))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> Alphabet {
        Alphabet::new(["a", "b", "x", "y", "x1", "x2"]).unwrap()
    }

    fn el(s: &str) -> Element {
        parse_element(s, Some(&alpha())).unwrap()
    }

    #[test]
    fn parses_basis_tree() {
        let e = el("[o x o]");
        let f = Forest::ladder(&[Letter::new("x").unwrap()]).graft();
        assert_eq!(e, Element::basis(f));
    }

    #[test]
    fn parses_coefficients() {
        let e = el("2*[o] + (L)*o a o");
        assert_eq!(e.len(), 2);
        assert_eq!(e.coeff(&parse_forest("[o]", None).unwrap()), WeightPoly::constant(2));
        assert_eq!(e.coeff(&parse_forest("o a o", None).unwrap()), WeightPoly::weight());
        let e = el("(2*L^2 - 3*L + 1)*o - L*[o] + 3*L^2*o a o");
        assert_eq!(e.coeff(&Forest::leaf()), WeightPoly::from_terms([(2, 2), (1, -3), (0, 1)]));
        assert_eq!(e.coeff(&parse_forest("[o]", None).unwrap()), -WeightPoly::weight());
    }

    #[test]
    fn unbalanced_bracket_is_positioned() {
        let err = parse_element("[o x", Some(&alpha())).unwrap_err();
        match err {
            Error::Syntax { line, column, message } => {
                assert_eq!((line, column), (1, 5));
                assert!(message.contains("`]`"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn letter_errors() {
        let err = parse_element("o z o", Some(&alpha())).unwrap_err();
        assert!(matches!(err, Error::At { column: 3, ref error, .. } if **error == Error::UnknownLetter("z".into())));
        let err = parse_element("o L o", None).unwrap_err();
        assert!(matches!(err, Error::At { ref error, .. } if **error == Error::ReservedIdentifier("L".into())));
        let err = parse_element("o o", None).unwrap_err();
        assert!(matches!(err, Error::Syntax { column: 3, .. }));
        assert!(parse_element("o a o", None).is_ok());
    }

    #[test]
    fn multiline_positions() {
        let err = parse_element("o a o +\n  [o x", None).unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, column: 7, .. }), "{err:?}");
    }

    #[test]
    fn render_examples() {
        assert_eq!(el("o").to_string(), "o");
        assert_eq!(el("o x [o] - [o x o]").to_string(), "- [o x o] + o x [o]");
        assert_eq!(el("L*[o] + 2*[[o]]").to_string(), "L*[o] + 2*[[o]]");
        assert_eq!(el("(-L - 2)*[o]").to_string(), "- (L + 2)*[o]");
        assert_eq!(Element::zero().to_string(), "0");
        assert!(parse_element("0", None).unwrap().is_zero());
        assert_eq!(render_element(&el("o"), Format::Latex), "\\bullet");
    }

    #[test]
    fn rendering_round_trips() {
        for s in ["- [o x o] + o x [o]", "(2*L + 1)*[o] + o a o", "- 3*L^2*[[o] a o] - (L - 1)*o", "0"] {
            let e = el(s);
            assert_eq!(el(&e.to_string()), e, "{s}");
        }
    }

    #[test]
    fn rationals_and_polys() {
        assert_eq!(parse_rational("3/2").unwrap(), Rational::new(3.into(), 2.into()));
        assert_eq!(parse_rational("-1").unwrap(), Rational::from_integer((-1).into()));
        assert!(parse_rational("1/0").is_err());
        assert_eq!(parse_weight_poly("2*L^2 - 3*L + 1").unwrap().to_string(), "2*L^2 - 3*L + 1");
    }
}
