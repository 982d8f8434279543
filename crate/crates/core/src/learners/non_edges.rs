//! Learners for vertex covers and independent sets by equivalence queries.
//!
//! Both keep the hypothesis at "complete graph minus every pair proven absent
//! from the secret", so the hypothesis edge set always contains the secret's.
//! A competent teacher can then only answer with positive counterexamples, and
//! each one proves at least one more pair absent.

use std::collections::BTreeSet;

use crate::concepts::{Hypothesis, Polarity, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::teachers::Teacher;

/// Pairs proven to be non-edges of the secret.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonEdgeLedger {
    n: usize,
    non_edges: BTreeSet<Edge>,
}

impl NonEdgeLedger {
    pub fn new(n: usize) -> Self {
        NonEdgeLedger {
            n,
            non_edges: BTreeSet::new(),
        }
    }

    pub fn non_edges(&self) -> &BTreeSet<Edge> {
        &self.non_edges
    }

    /// Records the pairs, returning how many were new.
    pub fn extend(&mut self, pairs: impl IntoIterator<Item = Edge>) -> usize {
        let before = self.non_edges.len();
        self.non_edges.extend(pairs);
        self.non_edges.len() - before
    }

    pub fn hypothesis(&self) -> Result<Graph> {
        let mut g = Graph::complete(self.n)?;
        for &(u, v) in &self.non_edges {
            g.remove_edge(u, v)?;
        }
        Ok(g)
    }
}

fn pairs_within(s: &VertexSet) -> Vec<Edge> {
    let members = s.to_vec();
    let mut out = Vec::new();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            out.push((u, v));
        }
    }
    out
}

/// A positive vertex-cover counterexample `V'` proves every pair inside
/// `V - V'` absent.
pub fn deduce_non_edges_vc(n: usize, cex: &VertexSet) -> Result<Vec<Edge>> {
    if cex.universe() != n {
        return Err(Error::UniverseMismatch {
            expected: n,
            found: cex.universe(),
        });
    }
    let outside = cex.complement();
    if outside.len() < 2 {
        return Err(Error::ProtocolViolation(format!(
            "{cex} covers every graph on {n} vertices and cannot be a positive counterexample"
        )));
    }
    Ok(pairs_within(&outside))
}

/// A positive independent-set counterexample proves every pair inside it absent.
pub fn deduce_non_edges_is(cex: &VertexSet) -> Result<Vec<Edge>> {
    if cex.len() < 2 {
        return Err(Error::ProtocolViolation(format!(
            "{cex} is independent in every graph and cannot be a positive counterexample"
        )));
    }
    Ok(pairs_within(cex))
}

fn learn_by_non_edges<T: Teacher>(
    teacher: &mut T,
    deduce: impl Fn(usize, &VertexSet) -> Result<Vec<Edge>>,
) -> Result<Graph> {
    let n = teacher.universe();
    let mut ledger = NonEdgeLedger::new(n);
    loop {
        let h = ledger.hypothesis()?;
        let c = match teacher.equivalence(&Hypothesis::Graph(h.clone()))? {
            Verdict::Finished => return Ok(h),
            Verdict::Counterexample(c) => c,
        };
        if c.polarity == Polarity::Negative {
            return Err(Error::ProtocolViolation(format!(
                "negative counterexample {} against a hypothesis containing every possible secret edge",
                c.witness
            )));
        }
        if ledger.extend(deduce(n, &c.witness)?) == 0 {
            return Err(Error::ProtocolViolation(format!(
                "positive counterexample {} reveals no new non-edge",
                c.witness
            )));
        }
    }
}

/// Learns the vertex covers of the secret; at most `C(n,2) + 1` equivalence queries.
pub fn learn_vertex_covers<T: Teacher>(teacher: &mut T) -> Result<Graph> {
    learn_by_non_edges(teacher, deduce_non_edges_vc)
}

/// Learns the independent sets of the secret; at most `C(n,2) + 1` equivalence queries.
pub fn learn_independent_sets<T: Teacher>(teacher: &mut T) -> Result<Graph> {
    learn_by_non_edges(teacher, |_, cex| deduce_non_edges_is(cex))
}
