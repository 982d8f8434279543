//! Competent teachers: truthful membership answers and policy-selected
//! counterexamples for equivalence queries.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::concepts::{
    disagreements, structural_counterexamples, Cardinality, Concept, Counterexample, Hypothesis,
    Verdict,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Reason string carried by a rejected wrong-cardinality membership query.
pub const REJECT_CARDINALITY: &str = "cardinality";

/// The learner's view of a teacher.
pub trait Teacher {
    /// Order of the secret graph; the only thing a learner knows up front.
    fn universe(&self) -> usize;

    fn membership(&mut self, set: &VertexSet) -> Result<bool>;

    fn equivalence(&mut self, hypothesis: &Hypothesis) -> Result<Verdict>;
}

impl<T: Teacher + ?Sized> Teacher for &mut T {
    fn universe(&self) -> usize {
        (**self).universe()
    }

    fn membership(&mut self, set: &VertexSet) -> Result<bool> {
        (**self).membership(set)
    }

    fn equivalence(&mut self, hypothesis: &Hypothesis) -> Result<Verdict> {
        (**self).equivalence(hypothesis)
    }
}

/// Which counterexample a teacher returns when several are available.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TeacherPolicy {
    /// Lexicographically smallest member sequence.
    LexMin,
    LexMax,
    /// Fewest vertices, ties broken lexicographically.
    MinCardinality,
    /// Most vertices, ties broken lexicographically.
    MaxCardinality,
    /// Uniform choice from a ChaCha stream seeded once per session.
    Random(u64),
}

impl TeacherPolicy {
    /// The four deterministic policies plus `seeds` random ones.
    pub fn grid(seeds: u64) -> Vec<TeacherPolicy> {
        let mut out = vec![
            TeacherPolicy::LexMin,
            TeacherPolicy::LexMax,
            TeacherPolicy::MinCardinality,
            TeacherPolicy::MaxCardinality,
        ];
        out.extend((0..seeds).map(TeacherPolicy::Random));
        out
    }

    pub fn name(&self) -> &'static str {
        match self {
            TeacherPolicy::LexMin => "lex-min",
            TeacherPolicy::LexMax => "lex-max",
            TeacherPolicy::MinCardinality => "min-card",
            TeacherPolicy::MaxCardinality => "max-card",
            TeacherPolicy::Random(_) => "random",
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            TeacherPolicy::Random(seed) => *seed,
            _ => 0,
        }
    }

    /// Parses a policy name; `seed` is only used by `random`.
    pub fn parse(name: &str, seed: u64) -> Result<Self> {
        Ok(match name {
            "lex-min" => TeacherPolicy::LexMin,
            "lex-max" => TeacherPolicy::LexMax,
            "min-card" => TeacherPolicy::MinCardinality,
            "max-card" => TeacherPolicy::MaxCardinality,
            "random" => TeacherPolicy::Random(seed),
            other => {
                return Err(Error::Usage(format!(
                    "unknown policy {other:?} (expected lex-min, lex-max, min-card, max-card or random)"
                )))
            }
        })
    }

    fn by_cardinality(a: &VertexSet, b: &VertexSet) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| a.cmp(b))
    }

    fn select(
        &self,
        candidates: &[Counterexample],
        rng: &mut ChaCha8Rng,
    ) -> Option<Counterexample> {
        let w = |c: &&Counterexample| c.witness;
        match self {
            TeacherPolicy::LexMin => candidates.iter().min_by_key(w),
            TeacherPolicy::LexMax => candidates.iter().max_by_key(w),
            TeacherPolicy::MinCardinality => candidates
                .iter()
                .min_by(|a, b| Self::by_cardinality(&a.witness, &b.witness)),
            TeacherPolicy::MaxCardinality => candidates.iter().min_by(|a, b| {
                b.witness
                    .len()
                    .cmp(&a.witness.len())
                    .then_with(|| a.witness.cmp(&b.witness))
            }),
            TeacherPolicy::Random(_) => {
                if candidates.is_empty() {
                    None
                } else {
                    Some(&candidates[rng.gen_range(0..candidates.len())])
                }
            }
        }
        .copied()
    }
}

impl fmt::Display for TeacherPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TeacherPolicy::Random(seed) => write!(f, "random({seed})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for TeacherPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TeacherPolicy::parse(s, 0)
    }
}

/// Largest `n` at which an all-sizes teacher compares every subset; larger
/// secrets are answered structurally.
pub const TEACHER_ENUMERATION_LIMIT: usize = 14;

/// A teacher holding a private secret graph.
#[derive(Clone, Debug)]
pub struct TeacherSession {
    secret: Graph,
    concept: Concept,
    policy: TeacherPolicy,
    rng: ChaCha8Rng,
    enumeration_limit: usize,
    membership_count: usize,
    equivalence_count: usize,
}

impl TeacherSession {
    pub fn new(secret: Graph, concept: Concept, policy: TeacherPolicy) -> Result<Self> {
        concept.validate(secret.n())?;
        Ok(TeacherSession {
            rng: ChaCha8Rng::seed_from_u64(policy.seed()),
            secret,
            concept,
            policy,
            enumeration_limit: TEACHER_ENUMERATION_LIMIT,
            membership_count: 0,
            equivalence_count: 0,
        })
    }

    /// Overrides the all-sizes enumeration cap.
    pub fn with_enumeration_limit(mut self, limit: usize) -> Self {
        self.enumeration_limit = limit;
        self
    }

    pub fn secret(&self) -> &Graph {
        &self.secret
    }

    pub fn concept(&self) -> &Concept {
        &self.concept
    }

    pub fn policy(&self) -> TeacherPolicy {
        self.policy
    }

    pub fn membership_count(&self) -> usize {
        self.membership_count
    }

    pub fn equivalence_count(&self) -> usize {
        self.equivalence_count
    }

    pub fn answer_membership(&mut self, set: &VertexSet) -> Result<bool> {
        if set.universe() != self.secret.n() {
            return Err(Error::UniverseMismatch {
                expected: self.secret.n(),
                found: set.universe(),
            });
        }
        if let Cardinality::Exactly(k) = self.concept.cardinality {
            if set.len() != k {
                return Err(Error::QueryRejected(REJECT_CARDINALITY.into()));
            }
        }
        self.membership_count += 1;
        self.concept.holds(&self.secret, set)
    }

    pub fn answer_equivalence(&mut self, h: &Hypothesis) -> Result<Verdict> {
        let candidates = self.candidates(h)?;
        self.equivalence_count += 1;
        Ok(match self.policy.select(&candidates, &mut self.rng) {
            Some(c) => Verdict::Counterexample(c),
            None => Verdict::Finished,
        })
    }

    /// A policy-selected structural counterexample, or `None` when equivalent.
    pub fn structural_counterexample(&mut self, h: &Hypothesis) -> Result<Option<Counterexample>> {
        let candidates = structural_counterexamples(&self.concept, &self.secret, h)?;
        Ok(self.policy.select(&candidates, &mut self.rng))
    }

    fn candidates(&self, h: &Hypothesis) -> Result<Vec<Counterexample>> {
        let enumerable = match self.concept.cardinality {
            Cardinality::All => self.secret.n() <= self.enumeration_limit,
            Cardinality::Exactly(_) => true,
        };
        if enumerable {
            disagreements(&self.concept, &self.secret, h)
        } else {
            structural_counterexamples(&self.concept, &self.secret, h).map_err(|e| match e {
                Error::Unsupported(msg) => Error::Capacity(format!(
                    "n = {} is above the enumeration limit {} and {msg}",
                    self.secret.n(),
                    self.enumeration_limit
                )),
                other => other,
            })
        }
    }
}

impl Teacher for TeacherSession {
    fn universe(&self) -> usize {
        self.secret.n()
    }

    fn membership(&mut self, set: &VertexSet) -> Result<bool> {
        self.answer_membership(set)
    }

    fn equivalence(&mut self, hypothesis: &Hypothesis) -> Result<Verdict> {
        self.answer_equivalence(hypothesis)
    }
}
