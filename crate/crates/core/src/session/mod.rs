//! Learner–teacher sessions: protocol enforcement, transcripts, ground-truth
//! auditing, networked play, and benchmark suites.

pub mod bench;
mod net;
mod wire;

pub use net::{connect_learner, RemoteTeacher, TeacherServer};
pub use wire::{Answer, Query};

use serde::Serialize;

use crate::concepts::{
    classify, equivalent, equivalent_by_enumeration, BaseConcept, Cardinality, Concept, Hypothesis,
    Polarity, Verdict,
};
use crate::error::{Error, Result};
use crate::graph::{binomial, Graph, VertexSet};
use crate::learners::Learner;
use crate::teachers::{Teacher, TeacherPolicy, TeacherSession};

/// One query and its reply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    /// 1-based position in the session.
    pub seq: usize,
    pub query: Query,
    pub answer: Answer,
}

#[derive(Serialize)]
struct RoundWire {
    seq: usize,
    query: wire::QueryWire,
    answer: wire::AnswerWire,
}

impl Round {
    /// `{"seq":N,"query":{..},"answer":{..}}` on one line.
    pub fn encode(&self) -> String {
        serde_json::to_string(&RoundWire {
            seq: self.seq,
            query: self.query.to_wire(),
            answer: self.answer.to_wire(),
        })
        .expect("rounds always serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Finished,
    Failed(String),
    Incomplete,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcript {
    pub rounds: Vec<Round>,
    pub equivalence_count: usize,
    pub membership_count: usize,
    pub outcome: Outcome,
}

impl Default for Transcript {
    fn default() -> Self {
        Transcript {
            rounds: Vec::new(),
            equivalence_count: 0,
            membership_count: 0,
            outcome: Outcome::Incomplete,
        }
    }
}

impl Transcript {
    pub fn total(&self) -> usize {
        self.rounds.len()
    }

    /// One JSON line per round.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.rounds {
            out.push_str(&r.encode());
            out.push('\n');
        }
        out
    }

    /// Every hypothesis offered, in order.
    pub fn hypotheses(&self) -> impl Iterator<Item = &Hypothesis> {
        self.rounds.iter().filter_map(|r| match &r.query {
            Query::Equiv(h) => Some(h),
            _ => None,
        })
    }

    fn push(&mut self, query: Query, answer: Answer) {
        match query {
            Query::Member(_) => self.membership_count += 1,
            Query::Equiv(_) => self.equivalence_count += 1,
            _ => {}
        }
        self.rounds.push(Round {
            seq: self.rounds.len() + 1,
            query,
            answer,
        });
    }
}

/// Wraps a teacher and records every exchange.
pub struct Recorder<T> {
    inner: T,
    transcript: Transcript,
    max_rounds: Option<usize>,
}

impl<T: Teacher> Recorder<T> {
    pub fn new(inner: T, max_rounds: Option<usize>) -> Self {
        Recorder {
            inner,
            transcript: Transcript::default(),
            max_rounds,
        }
    }

    pub fn transcript(&self) -> &Transcript {
        &self.transcript
    }

    pub fn into_parts(self) -> (T, Transcript) {
        (self.inner, self.transcript)
    }

    pub fn inner(&self) -> &T {
        &self.inner
    }

    fn check_limit(&self) -> Result<()> {
        match self.max_rounds {
            Some(limit) if self.transcript.total() >= limit => Err(Error::RoundLimit(limit)),
            _ => Ok(()),
        }
    }

    fn record_rejection<R>(&mut self, query: Query, result: &Result<R>) {
        if let Err(Error::QueryRejected(reason)) = result {
            self.transcript
                .push(query, Answer::Rejected(reason.clone()));
        }
    }
}

impl<T: Teacher> Teacher for Recorder<T> {
    fn universe(&self) -> usize {
        self.inner.universe()
    }

    fn membership(&mut self, set: &VertexSet) -> Result<bool> {
        self.check_limit()?;
        let result = self.inner.membership(set);
        match &result {
            Ok(yes) => {
                let answer = if *yes { Answer::Yes } else { Answer::No };
                self.transcript.push(Query::Member(*set), answer);
            }
            Err(_) => self.record_rejection(Query::Member(*set), &result),
        }
        result
    }

    fn equivalence(&mut self, hypothesis: &Hypothesis) -> Result<Verdict> {
        self.check_limit()?;
        let result = self.inner.equivalence(hypothesis);
        match &result {
            Ok(Verdict::Finished) => self
                .transcript
                .push(Query::Equiv(hypothesis.clone()), Answer::Finished),
            Ok(Verdict::Counterexample(c)) => self
                .transcript
                .push(Query::Equiv(hypothesis.clone()), Answer::Counterexample(*c)),
            Err(_) => self.record_rejection(Query::Equiv(hypothesis.clone()), &result),
        }
        result
    }
}

/// Checks every reply of the wrapped teacher against the secret.
pub struct Audited<T> {
    inner: T,
    secret: Graph,
    concept: Concept,
}

impl<T: Teacher> Audited<T> {
    pub fn new(inner: T, secret: Graph, concept: Concept) -> Self {
        Audited {
            inner,
            secret,
            concept,
        }
    }

    pub fn into_inner(self) -> T {
        self.inner
    }
}

impl<T: Teacher> Teacher for Audited<T> {
    fn universe(&self) -> usize {
        self.inner.universe()
    }

    fn membership(&mut self, set: &VertexSet) -> Result<bool> {
        let answer = self.inner.membership(set)?;
        if answer != self.concept.holds(&self.secret, set)? {
            return Err(Error::ProtocolViolation(format!(
                "teacher answered {answer} for membership of {set}"
            )));
        }
        Ok(answer)
    }

    fn equivalence(&mut self, hypothesis: &Hypothesis) -> Result<Verdict> {
        let verdict = self.inner.equivalence(hypothesis)?;
        if let Verdict::Counterexample(c) = verdict {
            let actual = classify(&self.concept, &self.secret, hypothesis, &c.witness)?;
            if actual != Some(c.polarity) {
                return Err(Error::ProtocolViolation(format!(
                    "teacher sent {:?} counterexample {} whose actual status is {:?}",
                    c.polarity, c.witness, actual
                )));
            }
            if let Cardinality::Exactly(k) = self.concept.cardinality {
                if c.witness.len() != k {
                    return Err(Error::ProtocolViolation(format!(
                        "counterexample {} outside cardinality {k}",
                        c.witness
                    )));
                }
            }
        }
        Ok(verdict)
    }
}

/// Largest `n` for which a finished all-sizes session is re-verified set by set.
pub const FINAL_CHECK_ALL_SIZES_LIMIT: usize = 12;
/// Largest `C(n,k)` re-verified for fixed-cardinality sessions.
pub const FINAL_CHECK_K_SUBSETS: u128 = 100_000;

/// Independent check of a final hypothesis; `None` when the secret is too
/// large to enumerate.
pub fn verify_final(concept: &Concept, secret: &Graph, h: &Hypothesis) -> Result<Option<bool>> {
    let feasible = match concept.cardinality {
        Cardinality::All => secret.n() <= FINAL_CHECK_ALL_SIZES_LIMIT,
        Cardinality::Exactly(k) => binomial(secret.n(), k) <= FINAL_CHECK_K_SUBSETS,
    };
    if feasible {
        return equivalent_by_enumeration(concept, secret, h).map(Some);
    }
    match equivalent(concept, secret, h) {
        Ok(v) => Ok(Some(v == Verdict::Finished)),
        Err(Error::Capacity(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Rejects learner/concept pairs the learner was not built for.
pub fn check_compatible(learner: &Learner, concept: &Concept) -> Result<()> {
    let ok = match (learner, concept.base, concept.cardinality) {
        (Learner::VertexCover, BaseConcept::VertexCover, _) => true,
        (Learner::IndependentSet, BaseConcept::IndependentSet, _) => true,
        (Learner::DominatingSet, BaseConcept::DominatingSet, Cardinality::All) => true,
        (Learner::KVertexCover { k, .. }, BaseConcept::VertexCover, Cardinality::Exactly(j)) => {
            *k == j
        }
        _ => false,
    };
    if !ok {
        return Err(Error::Usage(format!(
            "learner {learner} cannot learn concept {concept}"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct SessionConfig {
    pub learner: Learner,
    pub secret: Graph,
    pub concept: Concept,
    pub policy: TeacherPolicy,
    pub max_rounds: Option<usize>,
}

impl SessionConfig {
    pub fn new(learner: Learner, secret: Graph, concept: Concept, policy: TeacherPolicy) -> Self {
        SessionConfig {
            learner,
            secret,
            concept,
            policy,
            max_rounds: None,
        }
    }
}

#[derive(Debug)]
pub struct SessionReport {
    pub transcript: Transcript,
    pub result: Result<Hypothesis>,
}

impl SessionReport {
    fn finish(mut transcript: Transcript, result: Result<Hypothesis>) -> Self {
        transcript.outcome = match &result {
            Ok(_) => Outcome::Finished,
            Err(e) => Outcome::Failed(e.to_string()),
        };
        SessionReport { transcript, result }
    }

    pub fn is_finished(&self) -> bool {
        self.result.is_ok()
    }
}

/// Runs a learner against an in-process teacher of the secret, auditing every
/// reply and re-verifying the final hypothesis. Errors raised during play are
/// reported in [`SessionReport::result`]; only setup errors are returned
/// directly.
pub fn run_session(config: &SessionConfig) -> Result<SessionReport> {
    check_compatible(&config.learner, &config.concept)?;
    let teacher = TeacherSession::new(config.secret.clone(), config.concept, config.policy)?;
    let audited = Audited::new(teacher, config.secret.clone(), config.concept);
    let mut recorder = Recorder::new(audited, config.max_rounds);

    let result = config.learner.run(&mut recorder).and_then(|h| {
        match verify_final(&config.concept, &config.secret, &h)? {
            Some(false) => Err(Error::Internal(format!(
                "teacher finished on a hypothesis that is not {}-equivalent to the secret",
                config.concept
            ))),
            _ => Ok(h),
        }
    });
    let (_, transcript) = recorder.into_parts();
    Ok(SessionReport::finish(transcript, result))
}

/// Positive/negative tallies of the counterexamples in a transcript.
pub fn polarity_counts(t: &Transcript) -> (usize, usize) {
    t.rounds.iter().fold((0, 0), |(p, n), r| match &r.answer {
        Answer::Counterexample(c) if c.polarity == Polarity::Positive => (p + 1, n),
        Answer::Counterexample(_) => (p, n + 1),
        _ => (p, n),
    })
}
