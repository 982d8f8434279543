//! Vertex-set concepts, learner hypotheses, and equivalence checking with
//! counterexample extraction.
//!
//! Everything here is ground truth: teachers answer from it and the test
//! suites audit against it.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{binomial, minimal_members, subsets_by_cardinality, Graph, KSubsets, VertexSet};

/// Largest `n` for which an all-sizes concept is compared set by set.
pub const ALL_SIZES_LIMIT: usize = crate::graph::EXHAUSTIVE_LIMIT;

/// Largest `C(n,k)` enumerated for a fixed-cardinality concept.
pub const K_SUBSET_LIMIT: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseConcept {
    VertexCover,
    IndependentSet,
    DominatingSet,
}

impl BaseConcept {
    pub fn short_name(self) -> &'static str {
        match self {
            BaseConcept::VertexCover => "vc",
            BaseConcept::IndependentSet => "is",
            BaseConcept::DominatingSet => "ds",
        }
    }
}

impl FromStr for BaseConcept {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vc" => Ok(BaseConcept::VertexCover),
            "is" => Ok(BaseConcept::IndependentSet),
            "ds" => Ok(BaseConcept::DominatingSet),
            other => Err(Error::Usage(format!(
                "unknown concept {other:?} (expected vc, is or ds)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Cardinality {
    All,
    Exactly(usize),
}

/// A vertex-set predicate, optionally restricted to one cardinality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Concept {
    pub base: BaseConcept,
    pub cardinality: Cardinality,
}

impl Concept {
    pub const fn new(base: BaseConcept) -> Self {
        Concept {
            base,
            cardinality: Cardinality::All,
        }
    }

    pub const fn vertex_cover() -> Self {
        Concept::new(BaseConcept::VertexCover)
    }

    pub const fn independent_set() -> Self {
        Concept::new(BaseConcept::IndependentSet)
    }

    pub const fn dominating_set() -> Self {
        Concept::new(BaseConcept::DominatingSet)
    }

    pub const fn exactly(self, k: usize) -> Self {
        Concept {
            base: self.base,
            cardinality: Cardinality::Exactly(k),
        }
    }

    pub fn k(&self) -> Option<usize> {
        match self.cardinality {
            Cardinality::All => None,
            Cardinality::Exactly(k) => Some(k),
        }
    }

    /// Checks the use-site requirement `0 < k <= n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        if let Cardinality::Exactly(k) = self.cardinality {
            if k == 0 || k > n {
                return Err(Error::Contract(format!(
                    "cardinality {k} must lie in 1..={n}"
                )));
            }
        }
        Ok(())
    }

    fn base_holds(&self, g: &Graph, bits: u64) -> bool {
        match self.base {
            BaseConcept::VertexCover => g.covers_bits(bits),
            BaseConcept::IndependentSet => g.independent_bits(bits),
            BaseConcept::DominatingSet => g.dominates_bits(bits),
        }
    }

    fn size_ok(&self, s: &VertexSet) -> bool {
        match self.cardinality {
            Cardinality::All => true,
            Cardinality::Exactly(k) => s.len() == k,
        }
    }

    /// `Φ(G, S)` including the cardinality restriction.
    pub fn holds(&self, g: &Graph, s: &VertexSet) -> Result<bool> {
        check_universe(g.n(), s.universe())?;
        Ok(self.size_ok(s) && self.base_holds(g, s.bits()))
    }
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cardinality {
            Cardinality::All => f.write_str(self.base.short_name()),
            Cardinality::Exactly(k) => write!(f, "{}[k={k}]", self.base.short_name()),
        }
    }
}

fn check_universe(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::UniverseMismatch { expected, found });
    }
    Ok(())
}

/// Boolean expression over the membership bits of a vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Expr {
    Var { i: usize },
    And { args: Vec<Expr> },
    Or { args: Vec<Expr> },
    Not { arg: Box<Expr> },
    Const { val: bool },
}

impl Expr {
    pub fn eval(&self, s: &VertexSet) -> bool {
        match self {
            Expr::Var { i } => s.contains(*i),
            Expr::And { args } => args.iter().all(|a| a.eval(s)),
            Expr::Or { args } => args.iter().any(|a| a.eval(s)),
            Expr::Not { arg } => !arg.eval(s),
            Expr::Const { val } => *val,
        }
    }

    fn check_vars(&self, n: usize) -> Result<()> {
        match self {
            Expr::Var { i } if *i == 0 || *i > n => Err(Error::VertexOutOfRange { vertex: *i, n }),
            Expr::Var { .. } | Expr::Const { .. } => Ok(()),
            Expr::And { args } | Expr::Or { args } => args.iter().try_for_each(|a| a.check_vars(n)),
            Expr::Not { arg } => arg.check_vars(n),
        }
    }
}

/// Accepts exactly the sets meeting every member of the family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Transversal {
    n: usize,
    family: Vec<VertexSet>,
}

impl Transversal {
    /// The family is stored sorted and deduplicated; members must be nonempty.
    pub fn new(n: usize, family: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        crate::graph::check_universe_size(n)?;
        let family: BTreeSet<VertexSet> = family.into_iter().collect();
        for f in &family {
            check_universe(n, f.universe())?;
            if f.is_empty() {
                return Err(Error::Contract(
                    "transversal family members must be nonempty".into(),
                ));
            }
        }
        Ok(Transversal {
            n,
            family: family.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> &[VertexSet] {
        &self.family
    }

    pub fn eval(&self, s: &VertexSet) -> bool {
        self.family.iter().all(|f| f.intersects(s))
    }

    /// The same predicate as an AND of ORs.
    pub fn to_circuit(&self) -> Circuit {
        let expr = Expr::And {
            args: self
                .family
                .iter()
                .map(|f| Expr::Or {
                    args: f.iter().map(|i| Expr::Var { i }).collect(),
                })
                .collect(),
        };
        Circuit { n: self.n, expr }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    n: usize,
    expr: Expr,
}

impl Circuit {
    pub fn new(n: usize, expr: Expr) -> Result<Self> {
        crate::graph::check_universe_size(n)?;
        expr.check_vars(n)?;
        Ok(Circuit { n, expr })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }

    pub fn eval(&self, s: &VertexSet) -> bool {
        self.expr.eval(s)
    }
}

/// What a learner offers in an (extended) equivalence query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HypothesisWire", into = "HypothesisWire")]
pub enum Hypothesis {
    Graph(Graph),
    Transversal(Transversal),
    Circuit(Circuit),
}

impl Hypothesis {
    pub fn n(&self) -> usize {
        match self {
            Hypothesis::Graph(g) => g.n(),
            Hypothesis::Transversal(t) => t.n(),
            Hypothesis::Circuit(c) => c.n(),
        }
    }

    /// Whether the hypothesis accepts `s` as a solution of `concept`. Graph
    /// hypotheses are read through the concept; circuits are evaluated
    /// directly, and both are subject to the concept's cardinality restriction.
    pub fn evaluate(&self, concept: &Concept, s: &VertexSet) -> Result<bool> {
        check_universe(self.n(), s.universe())?;
        Ok(match self {
            Hypothesis::Graph(g) => concept.holds(g, s)?,
            Hypothesis::Transversal(t) => concept.size_ok(s) && t.eval(s),
            Hypothesis::Circuit(c) => concept.size_ok(s) && c.eval(s),
        })
    }

    pub fn as_graph(&self) -> Option<&Graph> {
        match self {
            Hypothesis::Graph(g) => Some(g),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hypotheses always serialize")
    }
}

impl From<Graph> for Hypothesis {
    fn from(g: Graph) -> Self {
        Hypothesis::Graph(g)
    }
}

impl From<Transversal> for Hypothesis {
    fn from(t: Transversal) -> Self {
        Hypothesis::Transversal(t)
    }
}

impl From<Circuit> for Hypothesis {
    fn from(c: Circuit) -> Self {
        Hypothesis::Circuit(c)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum HypothesisWire {
    Graph { n: usize, edges: Vec<[usize; 2]> },
    Transversal { n: usize, family: Vec<Vec<usize>> },
    Circuit { n: usize, expr: Expr },
}

impl TryFrom<HypothesisWire> for Hypothesis {
    type Error = Error;

    fn try_from(wire: HypothesisWire) -> Result<Self> {
        Ok(match wire {
            HypothesisWire::Graph { n, edges } => Hypothesis::Graph(Graph::from_edges(
                n,
                edges.into_iter().map(|[u, v]| (u, v)),
            )?),
            HypothesisWire::Transversal { n, family } => {
                let family = family
                    .into_iter()
                    .map(|f| VertexSet::from_vertices(n, f))
                    .collect::<Result<Vec<_>>>()?;
                Hypothesis::Transversal(Transversal::new(n, family)?)
            }
            HypothesisWire::Circuit { n, expr } => Hypothesis::Circuit(Circuit::new(n, expr)?),
        })
    }
}

impl From<Hypothesis> for HypothesisWire {
    fn from(h: Hypothesis) -> Self {
        match h {
            Hypothesis::Graph(g) => HypothesisWire::Graph {
                n: g.n(),
                edges: g.edges().map(|(u, v)| [u, v]).collect(),
            },
            Hypothesis::Transversal(t) => HypothesisWire::Transversal {
                n: t.n,
                family: t.family.iter().map(|f| f.to_vec()).collect(),
            },
            Hypothesis::Circuit(c) => HypothesisWire::Circuit {
                n: c.n,
                expr: c.expr,
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    /// In the target's solution set, missing from the hypothesis.
    Positive,
    /// Accepted by the hypothesis, not a solution in the target.
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Counterexample {
    pub polarity: Polarity,
    pub witness: VertexSet,
}

impl Counterexample {
    pub fn positive(witness: VertexSet) -> Self {
        Counterexample {
            polarity: Polarity::Positive,
            witness,
        }
    }

    pub fn negative(witness: VertexSet) -> Self {
        Counterexample {
            polarity: Polarity::Negative,
            witness,
        }
    }
}

/// Reply to an equivalence query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Finished,
    Counterexample(Counterexample),
}

/// Deterministic orders in which candidate sets are searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationOrder {
    /// Ascending cardinality, lexicographic within each cardinality.
    ByCardinality,
    /// A permutation of the candidates fixed by the seed.
    Seeded(u64),
}

/// Every set the concept can say anything about, by cardinality then lexicographically.
pub fn candidate_sets(concept: &Concept, n: usize) -> Result<Box<dyn Iterator<Item = VertexSet>>> {
    concept.validate(n)?;
    match concept.cardinality {
        Cardinality::All => Ok(Box::new(subsets_by_cardinality(n)?)),
        Cardinality::Exactly(k) => {
            let count = binomial(n, k);
            if count > K_SUBSET_LIMIT {
                return Err(Error::Capacity(format!(
                    "C({n},{k}) = {count} exceeds the k-subset limit {K_SUBSET_LIMIT}"
                )));
            }
            Ok(Box::new(KSubsets::new(n, k)))
        }
    }
}

/// `S(G)`, sorted.
pub fn solution_set(concept: &Concept, g: &Graph) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    for s in candidate_sets(concept, g.n())? {
        if concept.holds(g, &s)? {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

/// Polarity of `s` as a counterexample, or `None` when target and hypothesis agree.
pub fn classify(
    concept: &Concept,
    target: &Graph,
    h: &Hypothesis,
    s: &VertexSet,
) -> Result<Option<Polarity>> {
    let in_target = concept.holds(target, s)?;
    let in_hypothesis = h.evaluate(concept, s)?;
    Ok(match (in_target, in_hypothesis) {
        (true, false) => Some(Polarity::Positive),
        (false, true) => Some(Polarity::Negative),
        _ => None,
    })
}

fn check_pair(concept: &Concept, target: &Graph, h: &Hypothesis) -> Result<()> {
    check_universe(target.n(), h.n())?;
    concept.validate(target.n())
}

/// First disagreement between target and hypothesis in the given order.
pub fn find_counterexample(
    concept: &Concept,
    target: &Graph,
    h: &Hypothesis,
    order: EnumerationOrder,
) -> Result<Option<Counterexample>> {
    check_pair(concept, target, h)?;
    let mut candidates = candidate_sets(concept, target.n())?;
    let first = |s: VertexSet| -> Result<Option<Counterexample>> {
        Ok(
            classify(concept, target, h, &s)?.map(|polarity| Counterexample {
                polarity,
                witness: s,
            }),
        )
    };
    match order {
        EnumerationOrder::ByCardinality => {
            for s in candidates {
                if let Some(c) = first(s)? {
                    return Ok(Some(c));
                }
            }
        }
        EnumerationOrder::Seeded(seed) => {
            let mut all: Vec<VertexSet> = candidates.by_ref().collect();
            all.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            for s in all {
                if let Some(c) = first(s)? {
                    return Ok(Some(c));
                }
            }
        }
    }
    Ok(None)
}

/// Every disagreement, by cardinality then lexicographically.
pub fn disagreements(
    concept: &Concept,
    target: &Graph,
    h: &Hypothesis,
) -> Result<Vec<Counterexample>> {
    check_pair(concept, target, h)?;
    let mut out = Vec::new();
    for s in candidate_sets(concept, target.n())? {
        if let Some(polarity) = classify(concept, target, h, &s)? {
            out.push(Counterexample {
                polarity,
                witness: s,
            });
        }
    }
    Ok(out)
}

fn closed_neighborhoods(g: &Graph) -> Vec<VertexSet> {
    (1..=g.n())
        .map(|x| g.closed_neighborhood(x).expect("vertex in range"))
        .collect()
}

/// Counterexamples read off the structure of target and hypothesis instead of
/// a subset search. Returns every such witness (sorted, deduplicated); empty
/// means equivalent.
///
/// Supported: vertex covers and independent sets of all sizes against a graph
/// hypothesis (one witness per pair in the edge symmetric difference), and
/// dominating sets of all sizes against a graph or transversal hypothesis
/// (one witness per constraint of either side that contains no constraint of
/// the other side).
pub fn structural_counterexamples(
    concept: &Concept,
    target: &Graph,
    h: &Hypothesis,
) -> Result<Vec<Counterexample>> {
    check_pair(concept, target, h)?;
    let n = target.n();
    let unsupported = || {
        Err(Error::Unsupported(format!(
            "no structural comparison for concept {concept} with this hypothesis form"
        )))
    };
    if concept.cardinality != Cardinality::All {
        return unsupported();
    }
    let mut out = BTreeSet::new();
    match (concept.base, h) {
        (BaseConcept::VertexCover | BaseConcept::IndependentSet, Hypothesis::Graph(hg)) => {
            for (u, v) in Graph::pairs(n) {
                let in_target = target.has_edge(u, v);
                if in_target == hg.has_edge(u, v) {
                    continue;
                }
                let pair = VertexSet::from_vertices(n, [u, v])?;
                // V-{u,v} covers exactly the graphs lacking uv; {u,v} is
                // independent exactly in them.
                let (witness, polarity) = match (concept.base, in_target) {
                    (BaseConcept::VertexCover, false) => (pair.complement(), Polarity::Positive),
                    (BaseConcept::VertexCover, true) => (pair.complement(), Polarity::Negative),
                    (_, false) => (pair, Polarity::Positive),
                    (_, true) => (pair, Polarity::Negative),
                };
                out.insert((witness, polarity));
            }
        }
        (BaseConcept::DominatingSet, Hypothesis::Graph(_) | Hypothesis::Transversal(_)) => {
            let target_constraints = closed_neighborhoods(target);
            let hypothesis_constraints = match h {
                Hypothesis::Graph(hg) => closed_neighborhoods(hg),
                Hypothesis::Transversal(t) => t.family().to_vec(),
                Hypothesis::Circuit(_) => unreachable!(),
            };
            for nx in &target_constraints {
                // V - N[x] misses N[x] yet meets every hypothesis constraint
                if !hypothesis_constraints.iter().any(|f| f.is_subset(nx)) {
                    out.insert((nx.complement(), Polarity::Negative));
                }
            }
            for f in &hypothesis_constraints {
                if !target_constraints.iter().any(|nx| nx.is_subset(f)) {
                    out.insert((f.complement(), Polarity::Positive));
                }
            }
        }
        _ => return unsupported(),
    }
    Ok(out
        .into_iter()
        .map(|(witness, polarity)| Counterexample { polarity, witness })
        .collect())
}

/// Φ-equivalence of target and hypothesis. Uses the structural comparison when
/// available and a subset search otherwise; fixed-cardinality concepts are
/// compared on their cardinality only.
pub fn equivalent(concept: &Concept, target: &Graph, h: &Hypothesis) -> Result<Verdict> {
    let found = match structural_counterexamples(concept, target, h) {
        Ok(list) => list.into_iter().next(),
        Err(Error::Unsupported(_)) => {
            find_counterexample(concept, target, h, EnumerationOrder::ByCardinality)?
        }
        Err(e) => return Err(e),
    };
    Ok(match found {
        Some(c) => Verdict::Counterexample(c),
        None => Verdict::Finished,
    })
}

/// Brute-force equivalence, ignoring structural shortcuts.
pub fn equivalent_by_enumeration(
    concept: &Concept,
    target: &Graph,
    h: &Hypothesis,
) -> Result<bool> {
    Ok(find_counterexample(concept, target, h, EnumerationOrder::ByCardinality)?.is_none())
}

/// Minimal constraint family a dominating-set hypothesis imposes.
pub fn minimal_constraints(h: &Hypothesis) -> Option<Vec<VertexSet>> {
    match h {
        Hypothesis::Graph(g) => Some(crate::graph::minimal_closed_neighborhoods(g)),
        Hypothesis::Transversal(t) => Some(minimal_members(t.family())),
        Hypothesis::Circuit(_) => None,
    }
}
