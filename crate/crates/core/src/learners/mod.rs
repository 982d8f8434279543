//! Learning algorithms. Each drives a [`Teacher`] through queries until the
//! teacher reports an equivalent hypothesis.

mod domination;
mod k_vertex_cover;
mod non_edges;

pub use domination::{grow_to_maximal_negative, learn_dominating_sets, ConstraintFamily};
pub use k_vertex_cover::{
    hypothesis_from_cover_list, k_vertex_cover_query_bound, learn_k_vertex_covers,
    KVertexCoverOptions, SearchNode,
};
pub use non_edges::{
    deduce_non_edges_is, deduce_non_edges_vc, learn_independent_sets, learn_vertex_covers,
    NonEdgeLedger,
};

use std::fmt;

use crate::concepts::{BaseConcept, Cardinality, Concept, Hypothesis};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::teachers::Teacher;

/// The available learners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Learner {
    VertexCover,
    IndependentSet,
    DominatingSet,
    KVertexCover {
        k: usize,
        options: KVertexCoverOptions,
    },
}

impl Learner {
    /// The natural learner for a concept: the tree learner for fixed-size
    /// vertex covers, the unchanged all-sizes learner otherwise.
    pub fn for_concept(concept: &Concept) -> Result<Self> {
        Ok(match (concept.base, concept.cardinality) {
            (BaseConcept::VertexCover, Cardinality::Exactly(k)) => Learner::KVertexCover {
                k,
                options: KVertexCoverOptions::default(),
            },
            (BaseConcept::VertexCover, Cardinality::All) => Learner::VertexCover,
            (BaseConcept::IndependentSet, _) => Learner::IndependentSet,
            (BaseConcept::DominatingSet, Cardinality::All) => Learner::DominatingSet,
            (BaseConcept::DominatingSet, Cardinality::Exactly(_)) => {
                return Err(Error::Unsupported(
                    "no learner for fixed-cardinality dominating sets".into(),
                ))
            }
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Learner::VertexCover => "vc",
            Learner::IndependentSet => "is",
            Learner::DominatingSet => "ds",
            Learner::KVertexCover { .. } => "kvc",
        }
    }

    /// Whether the learner only ever makes equivalence queries.
    pub fn equivalence_only(&self) -> bool {
        !matches!(self, Learner::DominatingSet)
    }

    pub fn run<T: Teacher>(&self, teacher: &mut T) -> Result<Hypothesis> {
        Ok(match self {
            Learner::VertexCover => learn_vertex_covers(teacher)?.into(),
            Learner::IndependentSet => learn_independent_sets(teacher)?.into(),
            Learner::DominatingSet => learn_dominating_sets(teacher)?.into(),
            Learner::KVertexCover { k, options } => {
                learn_k_vertex_covers(teacher, *k, *options)?.into()
            }
        })
    }
}

impl fmt::Display for Learner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Learner::KVertexCover { k, .. } => write!(f, "kvc[k={k}]"),
            other => f.write_str(other.name()),
        }
    }
}

/// Runs an equivalence-only learner unchanged against a teacher of the
/// fixed-cardinality restriction of its concept. The round bound carries
/// over, and the result agrees with the secret on sets of that cardinality.
pub fn learn_fixed_cardinality<T: Teacher>(base: Learner, teacher: &mut T) -> Result<Graph> {
    if !base.equivalence_only() {
        return Err(Error::Contract(format!(
            "learner {base} uses membership queries and cannot be restricted to one cardinality"
        )));
    }
    match base.run(teacher)? {
        Hypothesis::Graph(g) => Ok(g),
        _ => Err(Error::Internal(
            "equivalence-only learners return graphs".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concepts::{equivalent_by_enumeration, solution_set};
    use crate::graph::binomial;
    use crate::teachers::{TeacherPolicy, TeacherSession};

    fn wrapped(base: Learner, secret: &Graph, k: usize, policy: TeacherPolicy) -> (Graph, usize) {
        let concept = match base {
            Learner::IndependentSet => Concept::independent_set(),
            _ => Concept::vertex_cover(),
        }
        .exactly(k);
        let mut t = TeacherSession::new(secret.clone(), concept, policy).unwrap();
        let h = learn_fixed_cardinality(base, &mut t).unwrap();
        assert!(equivalent_by_enumeration(&concept, secret, &h.clone().into()).unwrap());
        (h, t.equivalence_count())
    }

    #[test]
    fn wrapper_examples() {
        let p3 = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        let (h, q) = wrapped(Learner::VertexCover, &p3, 2, TeacherPolicy::LexMin);
        assert!(q as u128 <= binomial(3, 2) + 1);
        let two_covers = solution_set(&Concept::vertex_cover().exactly(2), &h).unwrap();
        assert_eq!(two_covers.len(), 3);

        let k3 = Graph::complete(3).unwrap();
        let (h, q) = wrapped(Learner::IndependentSet, &k3, 2, TeacherPolicy::LexMin);
        assert_eq!(q, 1);
        assert!(solution_set(&Concept::independent_set().exactly(2), &h)
            .unwrap()
            .is_empty());

        for g in crate::graph::all_labeled_graphs(4).unwrap() {
            assert_eq!(
                wrapped(Learner::VertexCover, &g, 4, TeacherPolicy::LexMax).1,
                1
            );
        }
    }

    #[test]
    fn wrapper_refuses_membership_learners() {
        let mut t = TeacherSession::new(
            Graph::empty(3).unwrap(),
            Concept::dominating_set(),
            TeacherPolicy::LexMin,
        )
        .unwrap();
        assert!(learn_fixed_cardinality(Learner::DominatingSet, &mut t).is_err());
    }

    #[test]
    fn learner_selection() {
        let vc2 = Concept::vertex_cover().exactly(2);
        assert!(matches!(
            Learner::for_concept(&vc2).unwrap(),
            Learner::KVertexCover { k: 2, .. }
        ));
        assert_eq!(
            Learner::for_concept(&Concept::independent_set().exactly(2)).unwrap(),
            Learner::IndependentSet
        );
        assert!(Learner::for_concept(&Concept::dominating_set().exactly(2)).is_err());
    }
}
