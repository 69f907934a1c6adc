use std::fmt;

use crate::algebra::{bplus, Product};
use crate::element::Element;
use crate::forest::{Forest, Letter, Tree};

/// A separator in a marked word: a letter, or the join symbol `⊔` standing
/// for a product that has not been carried out yet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Separator {
    Letter(Letter),
    Join,
}

/// A tree whose graft bodies may themselves contain `⊔`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum MarkedTree {
    Leaf,
    Graft(MarkedWord),
}

/// Alternating trees and separators, the unevaluated form of closures and
/// quotients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MarkedWord {
    trees: Vec<MarkedTree>,
    separators: Vec<Separator>,
}

/// One extracted piece of a subforest: a whole non-leaf subtree with its
/// decorations, or a single angle letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    Subtree(Tree),
    Letter(Letter),
}

impl MarkedTree {
    pub fn from_tree(tree: &Tree) -> Self {
        match tree {
            Tree::Leaf => MarkedTree::Leaf,
            Tree::Graft(body) => MarkedTree::Graft(MarkedWord::from_forest(body)),
        }
    }

    pub fn evaluate(&self, product: Product) -> Element {
        match self {
            MarkedTree::Leaf => Element::unit(),
            MarkedTree::Graft(body) => bplus(&body.evaluate(product)),
        }
    }
}

impl MarkedWord {
    /// The single tree `o`.
    pub fn leaf() -> Self {
        Self::single(MarkedTree::Leaf)
    }

    pub fn single(tree: MarkedTree) -> Self {
        Self {
            trees: vec![tree],
            separators: Vec::new(),
        }
    }

    /// Panics unless `separators.len() + 1 == trees.len()`.
    pub fn new(trees: Vec<MarkedTree>, separators: Vec<Separator>) -> Self {
        assert_eq!(separators.len() + 1, trees.len(), "marked words alternate");
        Self { trees, separators }
    }

    pub fn from_forest(forest: &Forest) -> Self {
        Self {
            trees: forest.trees().iter().map(MarkedTree::from_tree).collect(),
            separators: forest.letters().iter().cloned().map(Separator::Letter).collect(),
        }
    }

    /// The forest generated by a sequence of extracted components.
    ///
    /// A leaf is put before a leading letter, after a trailing letter and
    /// between two adjacent letters; two adjacent subtrees are joined by `⊔`;
    /// a letter next to a subtree separates it directly. No components give `o`.
    pub fn from_components(components: &[Component]) -> Self {
        let mut trees = Vec::new();
        let mut separators = Vec::new();
        for c in components {
            let needs_tree = trees.len() == separators.len();
            match c {
                Component::Letter(x) => {
                    if needs_tree {
                        trees.push(MarkedTree::Leaf);
                    }
                    separators.push(Separator::Letter(x.clone()));
                }
                Component::Subtree(t) => {
                    if !needs_tree {
                        separators.push(Separator::Join);
                    }
                    trees.push(MarkedTree::from_tree(t));
                }
            }
        }
        if trees.len() == separators.len() {
            trees.push(MarkedTree::Leaf);
        }
        Self { trees, separators }
    }

    pub fn trees(&self) -> &[MarkedTree] {
        &self.trees
    }

    pub fn separators(&self) -> &[Separator] {
        &self.separators
    }

    /// Whether `⊔` occurs anywhere, including inside graft bodies.
    pub fn has_join(&self) -> bool {
        self.separators.contains(&Separator::Join)
            || self.trees.iter().any(|t| match t {
                MarkedTree::Leaf => false,
                MarkedTree::Graft(w) => w.has_join(),
            })
    }

    /// Left fold: a letter concatenates, `⊔` multiplies.
    pub fn evaluate(&self, product: Product) -> Element {
        let mut acc = self.trees[0].evaluate(product);
        for (sep, tree) in self.separators.iter().zip(&self.trees[1..]) {
            let next = tree.evaluate(product);
            acc = match sep {
                Separator::Join => product.apply(&acc, &next),
                Separator::Letter(x) => {
                    let mut out = Element::zero();
                    for (fa, ca) in acc.terms() {
                        for (fb, cb) in next.terms() {
                            out.add_term(fa.concat_with_letter(x, fb), ca * cb);
                        }
                    }
                    out
                }
            };
        }
        acc
    }

    /// The forest spelled by a word without `⊔`.
    pub fn to_forest(&self) -> Option<Forest> {
        let trees = self
            .trees
            .iter()
            .map(|t| match t {
                MarkedTree::Leaf => Some(Tree::Leaf),
                MarkedTree::Graft(w) => w.to_forest().map(Tree::graft),
            })
            .collect::<Option<Vec<_>>>()?;
        let letters = self
            .separators
            .iter()
            .map(|s| match s {
                Separator::Letter(x) => Some(x.clone()),
                Separator::Join => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Forest::new(trees, letters).ok()
    }
}

/// Evaluates a marked word with the Rota-Baxter product.
pub fn evaluate_marked_word(word: &MarkedWord) -> Element {
    word.evaluate(Product::RotaBaxter)
}

impl fmt::Display for MarkedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MarkedTree::Leaf => f.write_str("o"),
            MarkedTree::Graft(w) => write!(f, "[{w}]"),
        }
    }
}

impl fmt::Display for Separator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Separator::Letter(x) => write!(f, "{x}"),
            Separator::Join => f.write_str("⊔"),
        }
    }
}

impl fmt::Display for MarkedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.trees.iter().enumerate() {
            write!(f, "{t}")?;
            if let Some(s) = self.separators.get(i) {
                write!(f, " {s} ")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MarkedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

impl fmt::Debug for MarkedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

impl fmt::Debug for Separator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::WeightPoly;
    use crate::syntax::parse_forest;

    fn forest(s: &str) -> Forest {
        parse_forest(s, None).unwrap()
    }

    fn tree(s: &str) -> MarkedTree {
        MarkedTree::from_tree(forest(s).as_tree().unwrap())
    }

    fn join(a: MarkedTree, b: MarkedWord) -> MarkedWord {
        let mut trees = vec![a];
        let mut seps = vec![Separator::Join];
        trees.extend(b.trees);
        seps.extend(b.separators);
        MarkedWord::new(trees, seps)
    }

    #[test]
    fn leaf_join_leaf_is_leaf() {
        let w = join(MarkedTree::Leaf, MarkedWord::leaf());
        assert_eq!(w.to_string(), "o ⊔ o");
        assert_eq!(evaluate_marked_word(&w), Element::unit());
    }

    #[test]
    fn graft_join_ladder() {
        let w = join(tree("[o]"), MarkedWord::from_forest(&forest("o x o")));
        assert_eq!(evaluate_marked_word(&w), Element::basis(forest("[o] x o")));
    }

    #[test]
    fn graft_join_graft() {
        let w = join(tree("[o]"), MarkedWord::single(tree("[o]")));
        let want = Element::from_terms([
            (forest("[[o]]"), WeightPoly::constant(2)),
            (forest("[o]"), WeightPoly::weight()),
        ]);
        assert_eq!(evaluate_marked_word(&w), want);
    }

    #[test]
    fn closure_rules() {
        let x = |s: &str| Component::Letter(Letter::new(s).unwrap());
        let sub = |s: &str| Component::Subtree(forest(s).as_tree().unwrap().clone());
        assert_eq!(MarkedWord::from_components(&[]).to_string(), "o");
        assert_eq!(MarkedWord::from_components(&[x("a")]).to_string(), "o a o");
        assert_eq!(MarkedWord::from_components(&[x("a"), x("b")]).to_string(), "o a o b o");
        assert_eq!(MarkedWord::from_components(&[sub("[o]"), sub("[o]")]).to_string(), "[o] ⊔ [o]");
        assert_eq!(MarkedWord::from_components(&[sub("[o x1 o]"), x("x2")]).to_string(), "[o x1 o] x2 o");
        assert_eq!(MarkedWord::from_components(&[x("a"), sub("[o]")]).to_string(), "o a [o]");
    }

    #[test]
    fn forest_round_trip_without_join() {
        let f = forest("[[o a o] b o] a o");
        let w = MarkedWord::from_forest(&f);
        assert!(!w.has_join());
        assert_eq!(w.to_forest(), Some(f.clone()));
        assert_eq!(evaluate_marked_word(&w), Element::basis(f));
    }
}
