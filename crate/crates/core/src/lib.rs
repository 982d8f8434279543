//! Exact learning and teaching of vertex-set concepts in graphs.
//!
//! A teacher privately holds a graph on `{1..n}`; a learner must produce a
//! hypothesis with exactly the same vertex covers, independent sets or
//! dominating sets (optionally restricted to a fixed cardinality), using
//! membership and equivalence queries. The crate provides the concepts and
//! brute-force oracles, competent teachers, the learners, teaching-set
//! constructions, and a session harness that runs learners in-process or
//! over a newline-delimited JSON socket protocol.

pub mod concepts;
pub mod error;
pub mod graph;
pub mod learners;
pub mod session;
pub mod teachers;
pub mod teaching;

pub use concepts::{
    BaseConcept, Cardinality, Circuit, Concept, Counterexample, Expr, Hypothesis, Polarity,
    Transversal, Verdict,
};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use learners::Learner;
pub use teachers::{Teacher, TeacherPolicy, TeacherSession};
