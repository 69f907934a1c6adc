//! Angularly decorated planar rooted trees and forests.
//!
//! A tree is either the one-vertex tree `o` or the graft `[F]` of a forest
//! `F` under a new root. A forest is an alternating word `T1 x1 T2 ... x(k-1) Tk`
//! of trees and letters; the letters decorate the angles between adjacent
//! leaves, so every forest carries exactly `leaf_count - 1` letters.

mod address;
mod enumerate;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use address::{AngleAddr, VertexAddr};
pub use enumerate::{enumerate_forests, random_forest, random_forest_with};

/// Identifiers that may not be used as letters: `o` is the leaf, `L` the
/// weight and `t` the Laurent variable.
pub const RESERVED: [&str; 3] = ["o", "L", "t"];

/// An angular decoration.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(Arc<str>);

impl Letter {
    /// Validates `s` as an identifier (`[A-Za-z_][A-Za-z0-9_]*`, not reserved).
    pub fn new(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let valid = match chars.next() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
            }
            _ => false,
        };
        if !valid {
            return Err(Error::InvalidIdentifier(s.to_string()));
        }
        if RESERVED.contains(&s) {
            return Err(Error::ReservedIdentifier(s.to_string()));
        }
        Ok(Self(Arc::from(s)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A declared, ordered, duplicate-free decoration set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<Letter>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut letters: Vec<Letter> = Vec::new();
        for name in names {
            let letter = Letter::new(name.as_ref())?;
            if !letters.contains(&letter) {
                letters.push(letter);
            }
        }
        Ok(Self { letters })
    }

    /// Parses a comma separated list such as `a,b`.
    pub fn parse_list(list: &str) -> Result<Self> {
        Self::new(list.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn contains(&self, letter: &Letter) -> bool {
        self.letters.contains(letter)
    }

    /// Looks up a letter by name, rejecting reserved or undeclared names.
    pub fn letter(&self, name: &str) -> Result<Letter> {
        let letter = Letter::new(name)?;
        if self.contains(&letter) {
            Ok(letter)
        } else {
            Err(Error::UnknownLetter(name.to_string()))
        }
    }

    /// `F1 x F2`, checking that `x` is declared.
    pub fn concat(&self, left: &Forest, x: &str, right: &Forest) -> Result<Forest> {
        let x = self.letter(x)?;
        Ok(left.concat_with_letter(&x, right))
    }
}

/// A planar rooted tree with angular decorations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tree {
    /// The one-vertex tree `o`.
    Leaf,
    /// `[F]`: a new root grafted onto the forest `F`.
    Graft(Arc<Forest>),
}

/// `T1 x1 T2 ... x(k-1) Tk`, always with at least one tree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Forest {
    trees: Vec<Tree>,
    letters: Vec<Letter>,
}

/// Size statistics of a forest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stats {
    /// Number of vertices.
    pub degree: usize,
    /// Longest root-to-leaf path over the tree factors.
    pub depth: usize,
    /// Number of tree factors.
    pub length: usize,
    pub leaf_count: usize,
    pub decoration_count: usize,
}

impl Tree {
    pub fn graft(body: Forest) -> Self {
        Tree::Graft(Arc::new(body))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn body(&self) -> Option<&Forest> {
        match self {
            Tree::Leaf => None,
            Tree::Graft(body) => Some(body),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Graft(body) => 1 + body.degree(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Graft(body) => 1 + body.depth(),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Graft(body) => body.leaf_count(),
        }
    }
}

impl Forest {
    /// The unit forest `o`.
    pub fn leaf() -> Self {
        Self::from_tree(Tree::Leaf)
    }

    pub fn from_tree(tree: Tree) -> Self {
        Self {
            trees: vec![tree],
            letters: Vec::new(),
        }
    }

    /// Checks the alternation `letters.len() == trees.len() - 1`.
    pub fn new(trees: Vec<Tree>, letters: Vec<Letter>) -> Result<Self> {
        if trees.is_empty() {
            return Err(Error::MalformedForest("a forest needs at least one tree".into()));
        }
        if letters.len() + 1 != trees.len() {
            return Err(Error::MalformedForest(format!(
                "{} trees need {} letters, got {}",
                trees.len(),
                trees.len() - 1,
                letters.len()
            )));
        }
        Ok(Self { trees, letters })
    }

    /// `o x1 o x2 ... o`, the depth-zero forests.
    pub fn ladder(letters: &[Letter]) -> Self {
        Self {
            trees: vec![Tree::Leaf; letters.len() + 1],
            letters: letters.to_vec(),
        }
    }

    pub(crate) fn from_parts_unchecked(trees: Vec<Tree>, letters: Vec<Letter>) -> Self {
        debug_assert_eq!(letters.len() + 1, trees.len());
        Self { trees, letters }
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_parts(self) -> (Vec<Tree>, Vec<Letter>) {
        (self.trees, self.letters)
    }

    /// True for the unit forest `o`.
    pub fn is_unit(&self) -> bool {
        self.trees.len() == 1 && self.trees[0].is_leaf()
    }

    /// The single tree of a length-one forest.
    pub fn as_tree(&self) -> Option<&Tree> {
        match self.trees.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    /// `B+(self)` as a one-tree forest.
    pub fn graft(&self) -> Forest {
        Forest::from_tree(Tree::graft(self.clone()))
    }

    pub fn concat_with_letter(&self, x: &Letter, other: &Forest) -> Forest {
        let mut trees = Vec::with_capacity(self.trees.len() + other.trees.len());
        trees.extend_from_slice(&self.trees);
        trees.extend_from_slice(&other.trees);
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len() + 1);
        letters.extend_from_slice(&self.letters);
        letters.push(x.clone());
        letters.extend_from_slice(&other.letters);
        Forest { trees, letters }
    }

    pub fn degree(&self) -> usize {
        self.trees.iter().map(Tree::degree).sum()
    }

    pub fn depth(&self) -> usize {
        self.trees.iter().map(Tree::depth).max().unwrap_or(0)
    }

    pub fn length(&self) -> usize {
        self.trees.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.trees.iter().map(Tree::leaf_count).sum()
    }

    pub fn decoration_count(&self) -> usize {
        self.letters.len()
            + self
                .trees
                .iter()
                .filter_map(Tree::body)
                .map(Forest::decoration_count)
                .sum::<usize>()
    }

    pub fn stats(&self) -> Stats {
        Stats {
            degree: self.degree(),
            depth: self.depth(),
            length: self.length(),
            leaf_count: self.leaf_count(),
            decoration_count: self.decoration_count(),
        }
    }

    /// Every letter occurring anywhere in the forest.
    pub fn all_letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut Vec<Letter>) {
        for (i, tree) in self.trees.iter().enumerate() {
            if let Some(body) = tree.body() {
                body.collect_letters(out);
            }
            if let Some(x) = self.letters.get(i) {
                out.push(x.clone());
            }
        }
    }

    /// Sort key used for rendering and enumeration: degree, then text.
    pub fn canonical_key(&self) -> (usize, String) {
        (self.degree(), self.to_string())
    }

    /// LaTeX rendering with `\bullet` leaves and `B^{+}` grafts.
    pub fn to_latex(&self) -> String {
        let mut parts = Vec::new();
        for (i, tree) in self.trees.iter().enumerate() {
            parts.push(tree.to_latex());
            if let Some(x) = self.letters.get(i) {
                parts.push(x.to_string());
            }
        }
        parts.join("\\, ")
    }
}

impl Tree {
    pub fn to_latex(&self) -> String {
        match self {
            Tree::Leaf => "\\bullet".to_string(),
            Tree::Graft(body) => format!("B^{{+}}\\left({}\\right)", body.to_latex()),
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => f.write_str("o"),
            Tree::Graft(body) => write!(f, "[{body}]"),
        }
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, tree) in self.trees.iter().enumerate() {
            write!(f, "{tree}")?;
            if let Some(x) = self.letters.get(i) {
                write!(f, " {x} ")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Letter {
        Letter::new(s).unwrap()
    }

    fn leaf() -> Tree {
        Tree::Leaf
    }

    #[test]
    fn letters_reject_reserved_and_bad_identifiers() {
        assert_eq!(Letter::new("o"), Err(Error::ReservedIdentifier("o".into())));
        assert_eq!(Letter::new("L"), Err(Error::ReservedIdentifier("L".into())));
        assert_eq!(Letter::new("t"), Err(Error::ReservedIdentifier("t".into())));
        assert!(matches!(Letter::new(""), Err(Error::InvalidIdentifier(_))));
        assert!(matches!(Letter::new("1a"), Err(Error::InvalidIdentifier(_))));
        assert!(Letter::new("x1").is_ok());
    }

    #[test]
    fn alternation_is_enforced() {
        assert!(Forest::new(vec![], vec![]).is_err());
        assert!(Forest::new(vec![leaf(), leaf()], vec![]).is_err());
        assert!(Forest::new(vec![leaf(), leaf()], vec![l("a")]).is_ok());
    }

    #[test]
    fn stats_of_depth_zero_forest() {
        let f = Forest::ladder(&[l("a")]);
        assert_eq!(f.to_string(), "o a o");
        let s = f.stats();
        assert_eq!((s.degree, s.depth, s.length), (2, 0, 2));
    }

    #[test]
    fn stats_of_mixed_forest() {
        // [o] a o a [[o]]
        let b2 = Forest::leaf().graft();
        let c3 = b2.graft();
        let f = b2
            .concat_with_letter(&l("a"), &Forest::leaf())
            .concat_with_letter(&l("a"), &c3);
        assert_eq!(f.to_string(), "[o] a o a [[o]]");
        assert_eq!(f.length(), 3);
        assert_eq!(f.depth(), 2);
    }

    #[test]
    fn stats_of_nested_tree() {
        // [[o x1 o] x2 o]
        let inner = Forest::ladder(&[l("x1")]).graft();
        let f = inner.concat_with_letter(&l("x2"), &Forest::leaf()).graft();
        assert_eq!(f.to_string(), "[[o x1 o] x2 o]");
        let s = f.stats();
        assert_eq!(s.degree, 5);
        assert_eq!(s.leaf_count, 3);
        assert_eq!(s.decoration_count, 2);
        assert_eq!(s.decoration_count + 1, s.leaf_count);
    }

    #[test]
    fn concat_examples() {
        let o = Forest::leaf();
        let a = Alphabet::new(["a", "b", "x"]).unwrap();
        assert_eq!(a.concat(&o, "a", &o).unwrap().to_string(), "o a o");
        assert_eq!(a.concat(&o.graft(), "x", &o).unwrap().to_string(), "[o] x o");
        let oao = a.concat(&o, "a", &o).unwrap();
        let f = a.concat(&oao, "b", &o).unwrap();
        assert_eq!(f.to_string(), "o a o b o");
        assert_eq!(f.degree(), oao.degree() + o.degree());
        assert_eq!(f.length(), 3);
        assert_eq!(a.concat(&o, "z", &o), Err(Error::UnknownLetter("z".into())));
    }

    #[test]
    fn graft_increments_depth() {
        let f = Forest::ladder(&[l("a"), l("b")]);
        assert_eq!(f.graft().depth(), f.depth() + 1);
        assert_eq!(f.graft().graft().depth(), f.depth() + 2);
    }
}
