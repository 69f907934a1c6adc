use std::collections::BTreeSet;
use std::fmt;

use super::word::{Component, MarkedTree, MarkedWord, Separator};
use crate::error::{Error, Result};
use crate::forest::{AngleAddr, Forest, Tree, VertexAddr};

/// A subforest of a forest: roots of extracted non-leaf subtrees plus
/// extracted angle letters lying outside them.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubforestMarking {
    pub vertices: BTreeSet<VertexAddr>,
    pub angles: BTreeSet<AngleAddr>,
}

impl SubforestMarking {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(
        vertices: impl IntoIterator<Item = VertexAddr>,
        angles: impl IntoIterator<Item = AngleAddr>,
    ) -> Self {
        Self {
            vertices: vertices.into_iter().collect(),
            angles: angles.into_iter().collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.angles.is_empty()
    }

    /// Checks that every address resolves, every vertex is a non-leaf,
    /// extracted subtrees are disjoint and no angle lies inside one.
    pub fn validate(&self, forest: &Forest) -> Result<()> {
        for v in &self.vertices {
            match forest.vertex(v) {
                None => return Err(Error::InvalidMarking(format!("no vertex at {v}"))),
                Some(Tree::Leaf) => {
                    return Err(Error::InvalidMarking(format!("vertex {v} is a leaf")));
                }
                Some(Tree::Graft(_)) => {}
            }
            if let Some(u) = self.vertices.iter().find(|u| u.is_ancestor_of(v)) {
                return Err(Error::InvalidMarking(format!("{v} lies inside the extracted subtree at {u}")));
            }
        }
        for a in &self.angles {
            if forest.angle(a).is_none() {
                return Err(Error::InvalidMarking(format!("no angle at {a}")));
            }
            if let Some(u) = self.vertices.iter().find(|u| u.contains_angle(a)) {
                return Err(Error::InvalidMarking(format!("{a} lies inside the extracted subtree at {u}")));
            }
        }
        Ok(())
    }

    /// The extracted components in left-to-right order.
    pub fn components(&self, forest: &Forest) -> Result<Vec<Component>> {
        self.validate(forest)?;
        let mut keyed: Vec<(usize, Component)> = Vec::new();
        for v in &self.vertices {
            let tree = forest.vertex(v).expect("validated").clone();
            keyed.push((forest.vertex_position(v).expect("validated"), Component::Subtree(tree)));
        }
        for a in &self.angles {
            let x = forest.angle(a).expect("validated").clone();
            keyed.push((forest.angle_position(a).expect("validated"), Component::Letter(x)));
        }
        keyed.sort_by_key(|(k, _)| *k);
        Ok(keyed.into_iter().map(|(_, c)| c).collect())
    }

    /// Human readable list of the extracted pieces, e.g. `[o x1 o] x2`.
    pub fn describe(&self, forest: &Forest) -> Result<String> {
        let parts: Vec<String> = self
            .components(forest)?
            .into_iter()
            .map(|c| match c {
                Component::Subtree(t) => t.to_string(),
                Component::Letter(x) => x.to_string(),
            })
            .collect();
        if parts.is_empty() {
            Ok("∅".to_string())
        } else {
            Ok(parts.join(" "))
        }
    }
}

impl fmt::Display for SubforestMarking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.vertices.iter().map(ToString::to_string).collect();
        parts.extend(self.angles.iter().map(ToString::to_string));
        write!(f, "{{{}}}", parts.join(", "))
    }
}

enum Candidate {
    /// A non-leaf vertex; choosing it skips every candidate up to `skip_to`.
    Vertex { addr: VertexAddr, skip_to: usize },
    Angle(AngleAddr),
}

fn collect_candidates(forest: &Forest, path: &mut Vec<usize>, out: &mut Vec<Candidate>) {
    for (i, tree) in forest.trees().iter().enumerate() {
        path.push(i);
        if let Some(body) = tree.body() {
            let at = out.len();
            out.push(Candidate::Vertex {
                addr: VertexAddr(path.clone()),
                skip_to: 0,
            });
            collect_candidates(body, path, out);
            let end = out.len();
            if let Candidate::Vertex { skip_to, .. } = &mut out[at] {
                *skip_to = end;
            }
        }
        path.pop();
        if i < forest.letters().len() {
            out.push(Candidate::Angle(AngleAddr {
                forest: path.clone(),
                slot: i,
            }));
        }
    }
}

/// Every subforest of `forest`, each exactly once, the empty one first.
///
/// Candidates (non-leaf vertices and angles) are visited in planar preorder;
/// selecting a vertex skips everything inside its subtree, so only valid
/// markings are ever produced.
pub fn enumerate_subforests(forest: &Forest) -> Vec<SubforestMarking> {
    let mut candidates = Vec::new();
    collect_candidates(forest, &mut Vec::new(), &mut candidates);
    let mut out = Vec::new();
    let mut current = SubforestMarking::empty();
    backtrack(&candidates, 0, &mut current, &mut out);
    out
}

fn backtrack(
    candidates: &[Candidate],
    idx: usize,
    current: &mut SubforestMarking,
    out: &mut Vec<SubforestMarking>,
) {
    let Some(c) = candidates.get(idx) else {
        out.push(current.clone());
        return;
    };
    backtrack(candidates, idx + 1, current, out);
    match c {
        Candidate::Vertex { addr, skip_to } => {
            current.vertices.insert(addr.clone());
            backtrack(candidates, *skip_to, current, out);
            current.vertices.remove(addr);
        }
        Candidate::Angle(addr) => {
            current.angles.insert(addr.clone());
            backtrack(candidates, idx + 1, current, out);
            current.angles.remove(addr);
        }
    }
}

/// The forest generated by the marking, with `⊔` between adjacent subtrees.
pub fn closure(forest: &Forest, marking: &SubforestMarking) -> Result<MarkedWord> {
    Ok(MarkedWord::from_components(&marking.components(forest)?))
}

/// `F/H`: each extracted subtree is replaced by `o` and each extracted
/// letter by `⊔`.
pub fn quotient(forest: &Forest, marking: &SubforestMarking) -> Result<MarkedWord> {
    marking.validate(forest)?;
    Ok(quotient_word(forest, &mut Vec::new(), marking))
}

fn quotient_word(forest: &Forest, path: &mut Vec<usize>, marking: &SubforestMarking) -> MarkedWord {
    let mut trees = Vec::with_capacity(forest.length());
    for (i, tree) in forest.trees().iter().enumerate() {
        path.push(i);
        let addr = VertexAddr(path.clone());
        let t = match tree.body() {
            Some(_) if marking.vertices.contains(&addr) => MarkedTree::Leaf,
            Some(body) => MarkedTree::Graft(quotient_word(body, path, marking)),
            None => MarkedTree::Leaf,
        };
        path.pop();
        trees.push(t);
    }
    let separators = forest
        .letters()
        .iter()
        .enumerate()
        .map(|(slot, x)| {
            let addr = AngleAddr {
                forest: path.clone(),
                slot,
            };
            if marking.angles.contains(&addr) {
                Separator::Join
            } else {
                Separator::Letter(x.clone())
            }
        })
        .collect();
    MarkedWord::new(trees, separators)
}

/// Closure components and quotient word of one factorwise subforest.
pub type FactorwisePair = (Vec<Component>, MarkedWord);

/// All subforests built factor by factor: for a tree, either the whole
/// tree (quotient `o`) or any subforest of its body (quotient grafted);
/// for a forest, one choice per tree factor and, per letter, keep it or
/// extract it (quotient separator `⊔`).
pub fn factorwise_subforests(forest: &Forest) -> Vec<FactorwisePair> {
    let mut partial: Vec<(Vec<Component>, Vec<MarkedTree>, Vec<Separator>)> = tree_pairs(&forest.trees()[0])
        .into_iter()
        .map(|(c, t)| (c, vec![t], Vec::new()))
        .collect();
    for (x, tree) in forest.letters().iter().zip(&forest.trees()[1..]) {
        let choices = tree_pairs(tree);
        let mut next = Vec::with_capacity(partial.len() * choices.len() * 2);
        for (comps, trees, seps) in &partial {
            for extract in [false, true] {
                for (tc, tq) in &choices {
                    let mut comps = comps.clone();
                    let mut seps = seps.clone();
                    if extract {
                        comps.push(Component::Letter(x.clone()));
                        seps.push(Separator::Join);
                    } else {
                        seps.push(Separator::Letter(x.clone()));
                    }
                    comps.extend(tc.iter().cloned());
                    let mut trees = trees.clone();
                    trees.push(tq.clone());
                    next.push((comps, trees, seps));
                }
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|(c, t, s)| (c, MarkedWord::new(t, s)))
        .collect()
}

fn tree_pairs(tree: &Tree) -> Vec<(Vec<Component>, MarkedTree)> {
    match tree.body() {
        None => vec![(Vec::new(), MarkedTree::Leaf)],
        Some(body) => {
            let mut out = vec![(vec![Component::Subtree(tree.clone())], MarkedTree::Leaf)];
            out.extend(
                factorwise_subforests(body)
                    .into_iter()
                    .map(|(c, q)| (c, MarkedTree::Graft(q))),
            );
            out
        }
    }
}
