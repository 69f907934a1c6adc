use std::fmt;

use super::{Forest, Letter, Tree};

/// Path of tree-slot indices from the top forest down through graft bodies.
///
/// `[i]` is the root of tree factor `i`; `[i, j]` is the root of the `j`-th
/// tree in the body of that root, and so on.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexAddr(pub Vec<usize>);

/// An angle: the letter slot `slot` of the forest reached by `forest`.
///
/// `forest` is empty for the top-level forest, otherwise it is the vertex
/// address of the root whose body holds the angle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AngleAddr {
    pub forest: Vec<usize>,
    pub slot: usize,
}

impl VertexAddr {
    /// Strict ancestry: `self` lies on the path from a root to `other`.
    pub fn is_ancestor_of(&self, other: &VertexAddr) -> bool {
        self.0.len() < other.0.len() && other.0.starts_with(&self.0)
    }

    /// Whether the angle sits inside the subtree rooted here.
    pub fn contains_angle(&self, angle: &AngleAddr) -> bool {
        angle.forest.starts_with(&self.0)
    }
}

impl fmt::Display for VertexAddr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "v{}", parts.join("."))
    }
}

impl fmt::Display for AngleAddr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.forest.iter().map(usize::to_string).collect();
        write!(f, "a{}:{}", parts.join("."), self.slot)
    }
}

impl Forest {
    /// The forest reached by descending into the bodies along `path`.
    pub fn forest_at(&self, path: &[usize]) -> Option<&Forest> {
        let mut cur = self;
        for &i in path {
            cur = cur.trees.get(i)?.body()?;
        }
        Some(cur)
    }

    pub fn vertex(&self, addr: &VertexAddr) -> Option<&Tree> {
        let (last, parent) = addr.0.split_last()?;
        self.forest_at(parent)?.trees.get(*last)
    }

    pub fn angle(&self, addr: &AngleAddr) -> Option<&Letter> {
        self.forest_at(&addr.forest)?.letters.get(addr.slot)
    }

    /// All vertex addresses in preorder.
    pub fn vertex_addrs(&self) -> Vec<VertexAddr> {
        let mut out = Vec::new();
        walk_vertices(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn non_leaf_vertex_addrs(&self) -> Vec<VertexAddr> {
        self.vertex_addrs()
            .into_iter()
            .filter(|a| self.vertex(a).is_some_and(|t| !t.is_leaf()))
            .collect()
    }

    /// All angle addresses in left-to-right order.
    pub fn angle_addrs(&self) -> Vec<AngleAddr> {
        let mut out = Vec::new();
        walk_angles(self, &mut Vec::new(), &mut out);
        out
    }

    fn leaves_before(&self, path: &[usize]) -> Option<usize> {
        let mut cur = self;
        let mut count = 0;
        for (depth, &i) in path.iter().enumerate() {
            count += cur.trees.get(..i)?.iter().map(Tree::leaf_count).sum::<usize>();
            if depth + 1 < path.len() {
                cur = cur.trees.get(i)?.body()?;
            }
        }
        Some(count)
    }

    /// Planar position of a vertex: twice the number of leaves strictly
    /// to its left. Angles get odd keys, so the two interleave.
    pub fn vertex_position(&self, addr: &VertexAddr) -> Option<usize> {
        self.vertex(addr)?;
        Some(2 * self.leaves_before(&addr.0)?)
    }

    pub fn angle_position(&self, addr: &AngleAddr) -> Option<usize> {
        self.angle(addr)?;
        let mut right = addr.forest.clone();
        right.push(addr.slot + 1);
        Some(2 * self.leaves_before(&right)? - 1)
    }
}

fn walk_vertices(forest: &Forest, path: &mut Vec<usize>, out: &mut Vec<VertexAddr>) {
    for (i, tree) in forest.trees.iter().enumerate() {
        path.push(i);
        out.push(VertexAddr(path.clone()));
        if let Some(body) = tree.body() {
            walk_vertices(body, path, out);
        }
        path.pop();
    }
}

fn walk_angles(forest: &Forest, path: &mut Vec<usize>, out: &mut Vec<AngleAddr>) {
    for (i, tree) in forest.trees.iter().enumerate() {
        if let Some(body) = tree.body() {
            path.push(i);
            walk_angles(body, path, out);
            path.pop();
        }
        if i < forest.letters.len() {
            out.push(AngleAddr {
                forest: path.clone(),
                slot: i,
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Letter {
        Letter::new(s).unwrap()
    }

    // [[o x1 o] x2 o] y o
    fn sample() -> Forest {
        let inner = Forest::ladder(&[l("x1")]).graft();
        let t = inner.concat_with_letter(&l("x2"), &Forest::leaf()).graft();
        t.concat_with_letter(&l("y"), &Forest::leaf())
    }

    #[test]
    fn every_address_resolves() {
        let f = sample();
        let vs = f.vertex_addrs();
        assert_eq!(vs.len(), f.degree());
        assert!(vs.iter().all(|v| f.vertex(v).is_some()));
        let angles = f.angle_addrs();
        assert_eq!(angles.len(), f.decoration_count());
        let names: Vec<String> = angles.iter().map(|a| f.angle(a).unwrap().to_string()).collect();
        assert_eq!(names, ["x1", "x2", "y"]);
    }

    #[test]
    fn root_paths_are_single_indices() {
        let f = sample();
        assert_eq!(f.vertex(&VertexAddr(vec![1])), Some(&Tree::Leaf));
        assert_eq!(f.vertex(&VertexAddr(vec![0])).unwrap().to_string(), "[[o x1 o] x2 o]");
        assert_eq!(f.vertex(&VertexAddr(vec![0, 0])).unwrap().to_string(), "[o x1 o]");
        assert!(f.vertex(&VertexAddr(vec![2])).is_none());
        assert!(f.vertex(&VertexAddr(vec![])).is_none());
    }

    #[test]
    fn positions_follow_planar_order() {
        let f = sample();
        let x1 = f.angle_position(&AngleAddr { forest: vec![0, 0], slot: 0 }).unwrap();
        let x2 = f.angle_position(&AngleAddr { forest: vec![0], slot: 0 }).unwrap();
        let y = f.angle_position(&AngleAddr { forest: vec![], slot: 0 }).unwrap();
        let inner = f.vertex_position(&VertexAddr(vec![0, 0])).unwrap();
        let last = f.vertex_position(&VertexAddr(vec![1])).unwrap();
        assert!(inner < x1 && x1 < x2 && x2 < y && y < last);
    }

    #[test]
    fn ancestry_and_containment() {
        let root = VertexAddr(vec![0]);
        let inner = VertexAddr(vec![0, 0]);
        assert!(root.is_ancestor_of(&inner));
        assert!(!inner.is_ancestor_of(&root));
        assert!(!root.is_ancestor_of(&root));
        assert!(inner.contains_angle(&AngleAddr { forest: vec![0, 0], slot: 0 }));
        assert!(!inner.contains_angle(&AngleAddr { forest: vec![0], slot: 0 }));
        assert!(root.contains_angle(&AngleAddr { forest: vec![0], slot: 0 }));
    }
}
