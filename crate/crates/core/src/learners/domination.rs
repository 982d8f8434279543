//! Dominating-set learner using membership and extended equivalence queries.
//!
//! Each negative counterexample is grown into a maximal non-dominating set,
//! whose complement is a closed neighbourhood of the secret. The hypothesis is
//! the transversal of all neighbourhoods found so far.

use crate::concepts::{Hypothesis, Polarity, Transversal, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::teachers::Teacher;

/// Closed neighbourhoods identified so far; grows monotonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintFamily {
    n: usize,
    identified: Vec<VertexSet>,
}

impl ConstraintFamily {
    pub fn new(n: usize) -> Self {
        ConstraintFamily {
            n,
            identified: Vec::new(),
        }
    }

    pub fn identified(&self) -> &[VertexSet] {
        &self.identified
    }

    pub fn len(&self) -> usize {
        self.identified.len()
    }

    pub fn is_empty(&self) -> bool {
        self.identified.is_empty()
    }

    /// Adds a constraint; false if it was already known.
    pub fn add(&mut self, constraint: VertexSet) -> Result<bool> {
        if constraint.is_empty() || constraint.universe() != self.n {
            return Err(Error::Contract(format!("invalid constraint {constraint}")));
        }
        if self.identified.contains(&constraint) {
            return Ok(false);
        }
        self.identified.push(constraint);
        Ok(true)
    }

    pub fn hypothesis(&self) -> Result<Transversal> {
        Transversal::new(self.n, self.identified.iter().copied())
    }
}

/// Grows a non-dominating `start` to a maximal non-dominating superset,
/// trying the vertices outside `start` in ascending order. The complement of
/// the result is the closed neighbourhood of some vertex.
///
/// `start` itself is not queried; it must come from a teacher's negative
/// counterexample. The full vertex set dominates every graph, so it is never
/// asked about and is rejected as a start.
pub fn grow_to_maximal_negative(
    start: &VertexSet,
    mut is_dominating: impl FnMut(&VertexSet) -> Result<bool>,
) -> Result<VertexSet> {
    let outside = start.complement();
    if outside.is_empty() {
        return Err(Error::Contract(format!("{start} dominates every graph")));
    }
    let mut grown = *start;
    for v in outside.iter() {
        let candidate = grown.with(v)?;
        if candidate.complement().is_empty() {
            continue;
        }
        if !is_dominating(&candidate)? {
            grown = candidate;
        }
    }
    Ok(grown)
}

/// Learns the dominating sets of the secret: at most `n + 1` equivalence
/// queries and `n` membership queries per counterexample.
pub fn learn_dominating_sets<T: Teacher>(teacher: &mut T) -> Result<Transversal> {
    let n = teacher.universe();
    let mut family = ConstraintFamily::new(n);
    let mut hypothesis = Hypothesis::Graph(Graph::complete(n)?);
    loop {
        let c = match teacher.equivalence(&hypothesis)? {
            Verdict::Finished => {
                return match hypothesis {
                    Hypothesis::Transversal(t) => Ok(t),
                    // the complete graph's dominating sets are the sets meeting V
                    _ => Transversal::new(n, [VertexSet::full(n)]),
                };
            }
            Verdict::Counterexample(c) => c,
        };
        if c.polarity == Polarity::Positive {
            return Err(Error::ProtocolViolation(format!(
                "positive counterexample {} although every constraint is a genuine neighbourhood",
                c.witness
            )));
        }
        let maximal = grow_to_maximal_negative(&c.witness, |s| teacher.membership(s))?;
        if !family.add(maximal.complement())? {
            return Err(Error::ProtocolViolation(format!(
                "counterexample {} led back to the known constraint {}",
                c.witness,
                maximal.complement()
            )));
        }
        hypothesis = Hypothesis::Transversal(family.hypothesis()?);
    }
}
