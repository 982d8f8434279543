//! Teaching sets: labelled examples that pin a graph down up to
//! Φ-equivalence, a consistent learner for them, and the construction showing
//! that `k`-independent sets of a complete graph need every `k`-subset as an
//! example.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::concepts::{equivalent, BaseConcept, Cardinality, Concept, Hypothesis, Verdict};
use crate::error::{Error, Result};
use crate::graph::{all_labeled_graphs, Graph, VertexSet};

/// Largest `n` for which every labeled graph is checked.
pub const EXHAUSTIVE_VERIFY_LIMIT: usize = 5;
/// Largest `n` for which a sampled check is run.
pub const SAMPLED_VERIFY_LIMIT: usize = 8;
pub const SAMPLED_VERIFY_GRAPHS: usize = 10_000;
const SAMPLED_VERIFY_SEED: u64 = 0x7ea5_e75e;

/// Largest `n` for which `consistent_hypothesis` falls back to trying every graph.
const CONSISTENT_SEARCH_LIMIT: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ExampleSetWire", into = "ExampleSetWire")]
pub struct ExampleSet {
    n: usize,
    positives: BTreeSet<VertexSet>,
    negatives: BTreeSet<VertexSet>,
}

impl ExampleSet {
    pub fn new(
        n: usize,
        positives: impl IntoIterator<Item = VertexSet>,
        negatives: impl IntoIterator<Item = VertexSet>,
    ) -> Result<Self> {
        crate::graph::check_universe_size(n)?;
        let positives: BTreeSet<VertexSet> = positives.into_iter().collect();
        let negatives: BTreeSet<VertexSet> = negatives.into_iter().collect();
        for s in positives.iter().chain(&negatives) {
            if s.universe() != n {
                return Err(Error::UniverseMismatch {
                    expected: n,
                    found: s.universe(),
                });
            }
        }
        if let Some(both) = positives.intersection(&negatives).next() {
            return Err(Error::Contract(format!(
                "{both} is both a positive and a negative example"
            )));
        }
        Ok(ExampleSet {
            n,
            positives,
            negatives,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn positives(&self) -> &BTreeSet<VertexSet> {
        &self.positives
    }

    pub fn negatives(&self) -> &BTreeSet<VertexSet> {
        &self.negatives
    }

    pub fn len(&self) -> usize {
        self.positives.len() + self.negatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("example sets always serialize")
    }
}

#[derive(Serialize, Deserialize)]
struct ExampleSetWire {
    n: usize,
    positives: Vec<Vec<usize>>,
    negatives: Vec<Vec<usize>>,
}

impl TryFrom<ExampleSetWire> for ExampleSet {
    type Error = Error;

    fn try_from(w: ExampleSetWire) -> Result<Self> {
        let decode = |sets: Vec<Vec<usize>>| {
            sets.into_iter()
                .map(|s| VertexSet::from_vertices(w.n, s))
                .collect::<Result<Vec<_>>>()
        };
        ExampleSet::new(w.n, decode(w.positives)?, decode(w.negatives)?)
    }
}

impl From<ExampleSet> for ExampleSetWire {
    fn from(ex: ExampleSet) -> Self {
        let encode = |sets: &BTreeSet<VertexSet>| sets.iter().map(|s| s.to_vec()).collect();
        ExampleSetWire {
            n: ex.n,
            positives: encode(&ex.positives),
            negatives: encode(&ex.negatives),
        }
    }
}

/// One example per vertex pair: `V - {u,v}` is a cover iff `uv` is not an edge.
pub fn teaching_set_vc(g: &Graph) -> Result<ExampleSet> {
    let n = g.n();
    let mut positives = Vec::new();
    let mut negatives = Vec::new();
    for (u, v) in Graph::pairs(n) {
        let example = VertexSet::from_vertices(n, [u, v])?.complement();
        if g.has_edge(u, v) {
            negatives.push(example);
        } else {
            positives.push(example);
        }
    }
    ExampleSet::new(n, positives, negatives)
}

/// One example per vertex pair: `{u,v}` is independent iff `uv` is not an edge.
pub fn teaching_set_is(g: &Graph) -> Result<ExampleSet> {
    let n = g.n();
    let mut positives = Vec::new();
    let mut negatives = Vec::new();
    for (u, v) in Graph::pairs(n) {
        let example = VertexSet::from_vertices(n, [u, v])?;
        if g.has_edge(u, v) {
            negatives.push(example);
        } else {
            positives.push(example);
        }
    }
    ExampleSet::new(n, positives, negatives)
}

/// Whether `h` labels every example the way the example set does.
pub fn is_consistent(concept: &Concept, h: &Graph, ex: &ExampleSet) -> Result<bool> {
    for p in &ex.positives {
        if !concept.holds(h, p)? {
            return Ok(false);
        }
    }
    for q in &ex.negatives {
        if concept.holds(h, q)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn pairs_within(s: &VertexSet) -> Vec<(usize, usize)> {
    let members = s.to_vec();
    let mut out = Vec::new();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            out.push((u, v));
        }
    }
    out
}

/// A graph consistent with the examples.
///
/// For vertex covers and independent sets each example constrains the pairs
/// inside one region (`V - S` for covers, `S` for independent sets): a
/// positive forbids every edge there, a negative needs at least one. The
/// result starts from the edgeless graph and, for each unmet negative, adds
/// every pair in its region not forbidden by a positive. Dominating sets fall
/// back to trying every graph on up to six vertices.
pub fn consistent_hypothesis(concept: &Concept, ex: &ExampleSet) -> Result<Graph> {
    let n = ex.n;
    concept.validate(n)?;
    if concept.base == BaseConcept::DominatingSet {
        return consistent_by_search(concept, ex);
    }

    let size_ok = |s: &VertexSet| match concept.cardinality {
        Cardinality::All => true,
        Cardinality::Exactly(k) => s.len() == k,
    };
    let region = |s: &VertexSet| match concept.base {
        BaseConcept::VertexCover => s.complement(),
        _ => *s,
    };

    let mut forbidden = BTreeSet::new();
    for p in &ex.positives {
        if !size_ok(p) {
            return Err(Error::Inconsistent(format!(
                "positive example {p} has the wrong cardinality for {concept}"
            )));
        }
        forbidden.extend(pairs_within(&region(p)));
    }

    let mut h = Graph::empty(n)?;
    for q in ex.negatives.iter().filter(|q| size_ok(q)) {
        if !concept.holds(&h, q)? {
            continue;
        }
        let allowed: Vec<_> = pairs_within(&region(q))
            .into_iter()
            .filter(|e| !forbidden.contains(e))
            .collect();
        if allowed.is_empty() {
            return Err(Error::Inconsistent(format!(
                "negative example {q} needs an edge that positive examples forbid"
            )));
        }
        for (u, v) in allowed {
            h.add_edge(u, v)?;
        }
    }
    debug_assert!(is_consistent(concept, &h, ex)?);
    Ok(h)
}

fn consistent_by_search(concept: &Concept, ex: &ExampleSet) -> Result<Graph> {
    if ex.n > CONSISTENT_SEARCH_LIMIT {
        return Err(Error::Capacity(format!(
            "consistent {concept} hypotheses are searched only up to n = {CONSISTENT_SEARCH_LIMIT}"
        )));
    }
    for h in all_labeled_graphs(ex.n)? {
        if is_consistent(concept, &h, ex)? {
            return Ok(h);
        }
    }
    Err(Error::Inconsistent(format!(
        "no graph on {} vertices fits the examples",
        ex.n
    )))
}

/// For the complete graph taught as `k`-independent sets (which has none), a
/// graph that rejects every given negative example yet accepts `missing`: its
/// edges are the pairs with at least one endpoint outside `missing`.
pub fn adversarial_consistent_graph(
    n: usize,
    k: usize,
    negatives: &BTreeSet<VertexSet>,
    missing: &VertexSet,
) -> Result<Graph> {
    if k < 2 || k > n {
        return Err(Error::Contract(format!("k = {k} must lie in 2..={n}")));
    }
    if missing.universe() != n || missing.len() != k {
        return Err(Error::Contract(format!(
            "{missing} is not a {k}-subset of 1..={n}"
        )));
    }
    if negatives.contains(missing) {
        return Err(Error::Contract(format!(
            "{missing} is already a negative example"
        )));
    }
    if let Some(bad) = negatives.iter().find(|s| s.universe() != n || s.len() != k) {
        return Err(Error::Contract(format!(
            "negative example {bad} is not a {k}-subset"
        )));
    }
    let mut h = Graph::empty(n)?;
    for (u, v) in Graph::pairs(n) {
        if !missing.contains(u) || !missing.contains(v) {
            h.add_edge(u, v)?;
        }
    }
    Ok(h)
}

fn equivalent_graphs(concept: &Concept, g: &Graph, h: &Graph) -> Result<bool> {
    Ok(matches!(
        equivalent(concept, g, &Hypothesis::Graph(h.clone()))?,
        Verdict::Finished
    ))
}

/// Whether every graph consistent with the examples is Φ-equivalent to `g`.
/// Exhaustive over all labeled graphs up to five vertices; a seeded sample of
/// random graphs for six to eight.
pub fn verify_teaching_set(g: &Graph, concept: &Concept, ex: &ExampleSet) -> Result<bool> {
    let n = g.n();
    if ex.n != n {
        return Err(Error::UniverseMismatch {
            expected: n,
            found: ex.n,
        });
    }
    concept.validate(n)?;
    let check = |h: &Graph| -> Result<bool> {
        Ok(!is_consistent(concept, h, ex)? || equivalent_graphs(concept, g, h)?)
    };
    if n <= EXHAUSTIVE_VERIFY_LIMIT {
        for h in all_labeled_graphs(n)? {
            if !check(&h)? {
                return Ok(false);
            }
        }
        Ok(true)
    } else if n <= SAMPLED_VERIFY_LIMIT {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLED_VERIFY_SEED);
        for _ in 0..SAMPLED_VERIFY_GRAPHS {
            if !check(&Graph::random(n, 0.5, &mut rng)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    } else {
        Err(Error::Capacity(format!(
            "teaching sets are verified only up to n = {SAMPLED_VERIFY_LIMIT}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::KSubsets;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    fn sets(n: usize, list: &[&[usize]]) -> BTreeSet<VertexSet> {
        list.iter().map(|s| set(n, s)).collect()
    }

    fn p3() -> Graph {
        Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn vc_teaching_sets() {
        let ex = teaching_set_vc(&p3()).unwrap();
        assert_eq!(ex.negatives(), &sets(3, &[&[3], &[1]]));
        assert_eq!(ex.positives(), &sets(3, &[&[2]]));

        let ex = teaching_set_vc(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(ex.negatives(), &sets(3, &[&[1], &[2], &[3]]));
        assert!(ex.positives().is_empty());

        let ex = teaching_set_vc(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(ex.positives(), &sets(3, &[&[1], &[2], &[3]]));
        assert!(ex.negatives().is_empty());
    }

    #[test]
    fn is_teaching_sets() {
        let ex = teaching_set_is(&p3()).unwrap();
        assert_eq!(ex.negatives(), &sets(3, &[&[1, 2], &[2, 3]]));
        assert_eq!(ex.positives(), &sets(3, &[&[1, 3]]));
        assert_eq!(
            teaching_set_is(&Graph::complete(3).unwrap())
                .unwrap()
                .negatives()
                .len(),
            3
        );
        assert_eq!(
            teaching_set_is(&Graph::empty(4).unwrap())
                .unwrap()
                .positives()
                .len(),
            6
        );
    }

    #[test]
    fn consistent_learner() {
        let vc = Concept::vertex_cover();
        let is = Concept::independent_set();
        assert_eq!(
            consistent_hypothesis(&vc, &teaching_set_vc(&p3()).unwrap()).unwrap(),
            p3()
        );
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            consistent_hypothesis(&is, &teaching_set_is(&k3).unwrap()).unwrap(),
            k3
        );
        let empty = ExampleSet::new(4, [], []).unwrap();
        assert_eq!(
            consistent_hypothesis(&is, &empty).unwrap(),
            Graph::empty(4).unwrap()
        );

        // {1,2} cannot be both independent (positive {1,2,3}) and dependent
        let clash = ExampleSet::new(3, [set(3, &[1, 2, 3])], [set(3, &[1, 2])]).unwrap();
        assert!(matches!(
            consistent_hypothesis(&is, &clash),
            Err(Error::Inconsistent(_))
        ));

        let ds = Concept::dominating_set();
        let ex = ExampleSet::new(3, [set(3, &[2])], [set(3, &[1])]).unwrap();
        let h = consistent_hypothesis(&ds, &ex).unwrap();
        assert!(is_consistent(&ds, &h, &ex).unwrap());
    }

    #[test]
    fn example_sets_are_disjoint() {
        assert!(ExampleSet::new(3, [set(3, &[1])], [set(3, &[1])]).is_err());
        assert!(ExampleSet::new(3, [set(4, &[1])], []).is_err());
    }

    #[test]
    fn adversarial_examples() {
        let h = adversarial_consistent_graph(3, 2, &sets(3, &[&[1, 2], &[1, 3]]), &set(3, &[2, 3]))
            .unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3)]);
        assert!(h.is_independent_set(&set(3, &[2, 3])).unwrap());

        let negatives: BTreeSet<_> = KSubsets::new(4, 2)
            .filter(|s| *s != set(4, &[3, 4]))
            .collect();
        let h = adversarial_consistent_graph(4, 2, &negatives, &set(4, &[3, 4])).unwrap();
        assert_eq!(
            h.edges().collect::<Vec<_>>(),
            vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]
        );

        let h = adversarial_consistent_graph(4, 3, &BTreeSet::new(), &set(4, &[1, 2, 3])).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(1, 4), (2, 4), (3, 4)]);

        assert!(
            adversarial_consistent_graph(3, 2, &sets(3, &[&[2, 3]]), &set(3, &[2, 3])).is_err()
        );
        assert!(adversarial_consistent_graph(3, 2, &BTreeSet::new(), &set(3, &[1])).is_err());
    }

    #[test]
    fn verification() {
        let vc = Concept::vertex_cover();
        assert!(verify_teaching_set(&p3(), &vc, &teaching_set_vc(&p3()).unwrap()).unwrap());

        let is2 = Concept::independent_set().exactly(2);
        let k3 = Graph::complete(3).unwrap();
        let partial = ExampleSet::new(3, [], sets(3, &[&[1, 2], &[1, 3]])).unwrap();
        assert!(!verify_teaching_set(&k3, &is2, &partial).unwrap());
        let full = ExampleSet::new(3, [], sets(3, &[&[1, 2], &[1, 3], &[2, 3]])).unwrap();
        assert!(verify_teaching_set(&k3, &is2, &full).unwrap());

        let g6 = Graph::from_edges(6, [(1, 2), (4, 6)]).unwrap();
        assert!(verify_teaching_set(&g6, &vc, &teaching_set_vc(&g6).unwrap()).unwrap());
        assert!(verify_teaching_set(
            &Graph::empty(9).unwrap(),
            &vc,
            &ExampleSet::new(9, [], []).unwrap()
        )
        .is_err());
    }

    #[test]
    fn json_encoding() {
        let ex = teaching_set_is(&p3()).unwrap();
        assert_eq!(
            ex.to_json(),
            r#"{"n":3,"positives":[[1,3]],"negatives":[[1,2],[2,3]]}"#
        );
        let back: ExampleSet = serde_json::from_str(&ex.to_json()).unwrap();
        assert_eq!(back, ex);
        assert!(serde_json::from_str::<ExampleSet>(
            r#"{"n":3,"positives":[[1]],"negatives":[[1]]}"#
        )
        .is_err());
    }
}
