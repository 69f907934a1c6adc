use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Alphabet, Forest, Letter, Tree};

/// Every forest of degree `1..=max_degree` over `alphabet`, each exactly
/// once, sorted by degree and then by canonical text.
///
/// With an empty alphabet only the undecorated chains `o`, `[o]`, `[[o]]`,
/// ... exist.
pub fn enumerate_forests(max_degree: usize, alphabet: &Alphabet) -> Vec<Forest> {
    let mut trees: Vec<Vec<Tree>> = vec![Vec::new()];
    let mut forests: Vec<Vec<Forest>> = vec![Vec::new()];
    for d in 1..=max_degree {
        let ts: Vec<Tree> = if d == 1 {
            vec![Tree::Leaf]
        } else {
            forests[d - 1].iter().cloned().map(Tree::graft).collect()
        };
        let mut fs: Vec<Forest> = ts.iter().cloned().map(Forest::from_tree).collect();
        for k in 1..d {
            for t in &trees[k] {
                let head = Forest::from_tree(t.clone());
                for x in alphabet.letters() {
                    for rest in &forests[d - k] {
                        fs.push(head.concat_with_letter(x, rest));
                    }
                }
            }
        }
        trees.push(ts);
        forests.push(fs);
    }
    let mut keyed: Vec<((usize, String), Forest)> = forests
        .into_iter()
        .flatten()
        .map(|f| (f.canonical_key(), f))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, f)| f).collect()
}

/// A forest of degree at most `max_degree`, determined by `seed`.
///
/// The degree is drawn uniformly, then the forest is built by repeatedly
/// splitting off a first tree of uniformly chosen size. Every forest of
/// admissible degree has positive probability; the distribution is not uniform.
pub fn random_forest(seed: u64, max_degree: usize, alphabet: &Alphabet) -> Forest {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_forest_with(&mut rng, max_degree, alphabet)
}

/// Same as [`random_forest`] but drawing from a caller-supplied generator.
pub fn random_forest_with<R: Rng>(rng: &mut R, max_degree: usize, alphabet: &Alphabet) -> Forest {
    let max_degree = max_degree.max(1);
    let degree = rng.random_range(1..=max_degree);
    random_of_degree(rng, degree, alphabet.letters())
}

fn random_of_degree<R: Rng>(rng: &mut R, degree: usize, letters: &[Letter]) -> Forest {
    let first = if letters.is_empty() {
        degree
    } else {
        rng.random_range(1..=degree)
    };
    let tree = random_tree(rng, first, letters);
    let head = Forest::from_tree(tree);
    if first == degree {
        return head;
    }
    let x = &letters[rng.random_range(0..letters.len())];
    let rest = random_of_degree(rng, degree - first, letters);
    head.concat_with_letter(x, &rest)
}

fn random_tree<R: Rng>(rng: &mut R, degree: usize, letters: &[Letter]) -> Tree {
    if degree == 1 {
        Tree::Leaf
    } else {
        Tree::graft(random_of_degree(rng, degree - 1, letters))
    }
}
