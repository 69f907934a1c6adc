//! Machine check of the Rota-Baxter, bialgebra and Hopf laws on an
//! exhaustive corpus of small forests plus seeded random samples.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::Structure;
use crate::coalgebra::{MultiTensor, TensorElement};
use crate::coeff::WeightPoly;
use crate::element::Element;
use crate::forest::{enumerate_forests, random_forest_with, Alphabet, Forest};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Every forest up to this degree is checked.
    pub max_degree: usize,
    pub alphabet: Alphabet,
    /// Random forests, pairs and triples drawn per law.
    pub samples: usize,
    pub seed: u64,
    /// Corpus pairs and triples are limited to this total degree.
    pub max_pair_degree_sum: usize,
    /// Degree bound for the random samples.
    pub random_max_degree: usize,
    pub structure: Structure,
}

impl SuiteConfig {
    pub fn new(max_degree: usize, alphabet: Alphabet) -> Self {
        Self {
            max_degree,
            alphabet,
            samples: 0,
            seed: 0,
            max_pair_degree_sum: 6,
            random_max_degree: 6,
            structure: Structure::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    /// Reported, but does not make the suite fail.
    Warning,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub severity: Severity,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_counterexample: Option<Counterexample>,
}

impl LawReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub max_degree: usize,
    pub alphabet: Vec<String>,
    pub samples: usize,
    pub seed: u64,
    pub corpus_size: usize,
    pub laws: Vec<LawReport>,
}

impl Report {
    /// No failures among the laws of [`Severity::Error`].
    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.ok() || l.severity == Severity::Warning)
    }

    pub fn law(&self, name: &str) -> Option<&LawReport> {
        self.laws.iter().find(|l| l.law == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "corpus: {} forests of degree <= {} over {{{}}}; samples {} (seed {})",
            self.corpus_size,
            self.max_degree,
            self.alphabet.join(","),
            self.samples,
            self.seed
        )?;
        for law in &self.laws {
            let tag = match (law.ok(), law.severity) {
                (true, _) => "PASS",
                (false, Severity::Error) => "FAIL",
                (false, Severity::Warning) => "WARN",
            };
            writeln!(f, "{tag} {:<28} {:>6} instances, {} failed", law.law, law.instances, law.failed)?;
            if let Some(c) = &law.first_counterexample {
                writeln!(f, "     inputs: {}", c.inputs.join(" ; "))?;
                writeln!(f, "     lhs:    {}", c.lhs)?;
                writeln!(f, "     rhs:    {}", c.rhs)?;
            }
        }
        write!(f, "{}", if self.passed() { "all laws hold" } else { "some laws fail" })
    }
}

pub const RB_IDENTITY: &str = "rota-baxter identity";
pub const ASSOCIATIVITY: &str = "associativity";
pub const UNIT: &str = "unit";
pub const COASSOCIATIVITY: &str = "coassociativity";
pub const COUNIT: &str = "counit";
pub const COCYCLE: &str = "cocycle";
pub const MULTIPLICATIVITY: &str = "multiplicativity";
pub const FILTRATION: &str = "filtration";
pub const CONNECTEDNESS: &str = "connectedness";
pub const ANTIPODE_EQUIVALENCE: &str = "antipode equivalence";
pub const CONVOLUTION: &str = "convolution";
pub const TRUNCATION: &str = "truncation";
pub const ANTIHOMOMORPHISM: &str = "antihomomorphism";

type Pair = (Forest, Forest);
type Triple = (Forest, Forest, Forest);

fn check<I, F>(name: &str, severity: Severity, instances: &[I], f: F) -> LawReport
where
    I: Sync,
    F: Fn(&I) -> Option<Counterexample> + Sync + Send,
{
    let results: Vec<Option<Counterexample>> = instances.par_iter().map(f).collect();
    let failed = results.iter().filter(|r| r.is_some()).count();
    LawReport {
        law: name.to_string(),
        severity,
        instances: instances.len(),
        passed: instances.len() - failed,
        failed,
        first_counterexample: results.into_iter().flatten().next(),
    }
}

fn compare<T: PartialEq + fmt::Display>(inputs: &[&Forest], lhs: T, rhs: T) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample {
        inputs: inputs.iter().map(ToString::to_string).collect(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

fn basis(f: &Forest) -> Element {
    Element::basis(f.clone())
}

/// Runs every law in order and collects the results.
pub fn run_axiom_suite(config: &SuiteConfig) -> Report {
    let s = config.structure;
    let corpus = enumerate_forests(config.max_degree.max(1), &config.alphabet);
    let cap = config.max_pair_degree_sum;

    let mut pairs: Vec<Pair> = Vec::new();
    let mut triples: Vec<Triple> = Vec::new();
    for a in &corpus {
        for b in &corpus {
            if a.degree() + b.degree() > cap {
                continue;
            }
            pairs.push((a.clone(), b.clone()));
            for c in &corpus {
                if a.degree() + b.degree() + c.degree() <= cap {
                    triples.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }

    let mut forests = corpus.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let draw = |rng: &mut ChaCha8Rng| random_forest_with(rng, config.random_max_degree.max(1), &config.alphabet);
    for _ in 0..config.samples {
        forests.push(draw(&mut rng));
    }
    for _ in 0..config.samples {
        pairs.push((draw(&mut rng), draw(&mut rng)));
    }
    for _ in 0..config.samples {
        triples.push((draw(&mut rng), draw(&mut rng), draw(&mut rng)));
    }

    let mut laws = Vec::new();

    laws.push(check(RB_IDENTITY, Severity::Error, &pairs, |(a, b)| {
        let (lhs, rhs) = s.product.rb_sides(&basis(a), &basis(b));
        compare(&[a, b], lhs, rhs)
    }));

    laws.push(check(ASSOCIATIVITY, Severity::Error, &triples, |(fa, fb, fc)| {
        let (a, b, c) = (basis(fa), basis(fb), basis(fc));
        compare(&[fa, fb, fc], s.mul(&s.mul(&a, &b), &c), s.mul(&a, &s.mul(&b, &c)))
    }));

    laws.push(check(UNIT, Severity::Error, &forests, |f| {
        let one = Element::unit();
        compare(&[f], s.mul(&one, &basis(f)), basis(f)).or_else(|| compare(&[f], s.mul(&basis(f), &one), basis(f)))
    }));

    laws.push(check(COASSOCIATIVITY, Severity::Error, &forests, |f| {
        let d = MultiTensor::from_tensor(&s.coproduct(f));
        let lhs = d.split_leg(0, |x| s.coproduct(x));
        let rhs = d.split_leg(1, |x| s.coproduct(x));
        compare(&[f], lhs, rhs)
    }));

    laws.push(check(COUNIT, Severity::Error, &forests, |f| {
        let d = s.coproduct(f);
        compare(&[f], d.counit_left(), basis(f)).or_else(|| compare(&[f], d.counit_right(), basis(f)))
    }));

    laws.push(check(COCYCLE, Severity::Error, &forests, |f| {
        let g = f.graft();
        let lhs = s.coproduct(&g);
        let mut rhs = s.coproduct(f).graft_right();
        rhs.add_term(g, Forest::leaf(), WeightPoly::one());
        compare(&[f], lhs, rhs)
    }));

    laws.push(check(MULTIPLICATIVITY, Severity::Error, &pairs, |(a, b)| {
        let lhs = s.coproduct_element(&s.mul(&basis(a), &basis(b)));
        let rhs = s.coproduct(a).product(&s.coproduct(b), s.product);
        compare(&[a, b], lhs, rhs)
    }));

    laws.push(check(FILTRATION, Severity::Error, &forests, |f| {
        let d = s.coproduct(f);
        let bad = d.terms().find(|(l, r, _)| l.degree() + r.degree() > f.degree() + 1);
        bad.map(|(l, r, _)| {
            let mut t = TensorElement::zero();
            t.add_term(l.clone(), r.clone(), WeightPoly::one());
            Counterexample {
                inputs: vec![f.to_string()],
                lhs: format!("{t} has filtration degree {}", l.degree() + r.degree() - 2),
                rhs: format!("at most {}", f.degree() - 1),
            }
        })
    }));

    laws.push(check(CONNECTEDNESS, Severity::Error, &corpus, |f| {
        if f.is_unit() {
            let mut want = TensorElement::zero();
            want.add_term(Forest::leaf(), Forest::leaf(), WeightPoly::one());
            compare(&[f], s.coproduct(f), want)
        } else {
            (f.degree() < 2).then(|| Counterexample {
                inputs: vec![f.to_string()],
                lhs: "filtration degree 0".into(),
                rhs: "only o has filtration degree 0".into(),
            })
        }
    }));

    let mut oracle = s.oracle();
    let oracle_values: Vec<(Forest, Element)> = forests.iter().map(|f| (f.clone(), oracle.forest(f))).collect();
    laws.push(check(ANTIPODE_EQUIVALENCE, Severity::Error, &oracle_values, |(f, want)| {
        compare(&[f], s.antipode_forest(f), want.clone())
    }));

    laws.push(check(CONVOLUTION, Severity::Error, &forests, |f| {
        let (left, unit, right) = s.convolutions(f);
        compare(&[f], left, unit.clone()).or_else(|| compare(&[f], right, unit))
    }));

    let non_unit: Vec<Forest> = forests.iter().filter(|f| !f.is_unit()).cloned().collect();
    laws.push(check(TRUNCATION, Severity::Error, &non_unit, |f| {
        compare(&[f], s.iterated_reduced(f, f.degree() - 1), MultiTensor::zero())
    }));

    let antihom: Vec<(Pair, Element, Element)> = pairs
        .iter()
        .map(|(a, b)| {
            let lhs = oracle.apply(&s.mul(&basis(a), &basis(b)));
            let rhs = s.mul(&oracle.forest(b), &oracle.forest(a));
            ((a.clone(), b.clone()), lhs, rhs)
        })
        .collect();
    laws.push(check(ANTIHOMOMORPHISM, Severity::Warning, &antihom, |((a, b), lhs, rhs)| {
        compare(&[a, b], lhs.clone(), rhs.clone())
    }));

    Report {
        max_degree: config.max_degree,
        alphabet: config.alphabet.letters().iter().map(ToString::to_string).collect(),
        samples: config.samples,
        seed: config.seed,
        corpus_size: corpus.len(),
        laws,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Product;
    use crate::coalgebra::Coproduct;

    fn config(max_degree: usize) -> SuiteConfig {
        SuiteConfig::new(max_degree, Alphabet::parse_list("a").unwrap())
    }

    #[test]
    fn small_corpus_passes() {
        let report = run_axiom_suite(&config(3));
        assert_eq!(report.corpus_size, 8);
        assert!(report.passed(), "{report}");
        assert!(report.laws.iter().all(LawReport::ok), "{report}");
    }

    #[test]
    fn mutated_product_fails_rb() {
        let mut c = config(2);
        c.structure.product = Product::WithoutWeightTerm;
        let report = run_axiom_suite(&c);
        let rb = report.law(RB_IDENTITY).unwrap();
        assert!(rb.failed > 0);
        assert!(rb.first_counterexample.is_some());
    }

    #[test]
    fn mutated_coproduct_fails_counit() {
        let mut c = config(2);
        c.structure.coproduct = Coproduct::WithoutEmptySubforest;
        let report = run_axiom_suite(&c);
        assert!(report.law(COUNIT).unwrap().failed > 0);
    }

    #[test]
    fn random_mode_is_reproducible() {
        let mut c = config(2);
        c.samples = 5;
        c.seed = 7;
        c.random_max_degree = 4;
        assert_eq!(run_axiom_suite(&c), run_axiom_suite(&c));
    }
}
