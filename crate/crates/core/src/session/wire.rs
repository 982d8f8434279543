//! Newline-delimited JSON messages exchanged between learner and teacher.
//!
//! Learner to teacher:
//! `{"q":"member","set":[..]}`, `{"q":"equiv","hyp":{..}}`, `{"q":"bye"}`, and
//! the handshake `{"q":"universe"}`.
//!
//! Teacher to learner:
//! `{"a":"yes"}`, `{"a":"no"}`, `{"a":"finished"}`,
//! `{"a":"counterexample","polarity":"positive","set":[..]}`,
//! `{"a":"rejected","reason":".."}`, and the handshake reply
//! `{"a":"universe","n":N}`.
//!
//! Vertex sets travel as ascending arrays without their universe; decoding
//! takes `n` from the session.

use serde::{Deserialize, Serialize};

use crate::concepts::{Counterexample, Hypothesis, Polarity};
use crate::error::{Error, Result};
use crate::graph::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Query {
    Member(VertexSet),
    Equiv(Hypothesis),
    Bye,
    /// Handshake asking for the order of the secret graph; not a round.
    Universe,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
    Finished,
    Counterexample(Counterexample),
    Rejected(String),
    Universe(usize),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "q", rename_all = "lowercase", deny_unknown_fields)]
pub(crate) enum QueryWire {
    Member { set: Vec<usize> },
    Equiv { hyp: Hypothesis },
    Bye {},
    Universe {},
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "a", rename_all = "lowercase", deny_unknown_fields)]
pub(crate) enum AnswerWire {
    Yes {},
    No {},
    Finished {},
    Counterexample { polarity: Polarity, set: Vec<usize> },
    Rejected { reason: String },
    Universe { n: usize },
}

fn malformed(e: impl std::fmt::Display) -> Error {
    Error::ProtocolViolation(format!("malformed message: {e}"))
}

fn decode_set(n: usize, members: Vec<usize>) -> Result<VertexSet> {
    if members.windows(2).any(|w| w[0] >= w[1]) {
        return Err(malformed("vertex sets must be strictly ascending"));
    }
    VertexSet::from_vertices(n, members).map_err(malformed)
}

impl Query {
    pub(crate) fn to_wire(&self) -> QueryWire {
        match self {
            Query::Member(s) => QueryWire::Member { set: s.to_vec() },
            Query::Equiv(h) => QueryWire::Equiv { hyp: h.clone() },
            Query::Bye => QueryWire::Bye {},
            Query::Universe => QueryWire::Universe {},
        }
    }

    pub(crate) fn from_wire(wire: QueryWire, n: usize) -> Result<Self> {
        Ok(match wire {
            QueryWire::Member { set } => Query::Member(decode_set(n, set)?),
            QueryWire::Equiv { hyp } => Query::Equiv(hyp),
            QueryWire::Bye {} => Query::Bye,
            QueryWire::Universe {} => Query::Universe,
        })
    }

    /// One line of JSON, without the trailing newline.
    pub fn encode(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("queries always serialize")
    }

    pub fn decode(line: &str, n: usize) -> Result<Self> {
        let wire: QueryWire =
            serde_json::from_str(line.trim_end_matches(['\n', '\r'])).map_err(malformed)?;
        Query::from_wire(wire, n)
    }
}

impl Answer {
    pub(crate) fn to_wire(&self) -> AnswerWire {
        match self {
            Answer::Yes => AnswerWire::Yes {},
            Answer::No => AnswerWire::No {},
            Answer::Finished => AnswerWire::Finished {},
            Answer::Counterexample(c) => AnswerWire::Counterexample {
                polarity: c.polarity,
                set: c.witness.to_vec(),
            },
            Answer::Rejected(reason) => AnswerWire::Rejected {
                reason: reason.clone(),
            },
            Answer::Universe(n) => AnswerWire::Universe { n: *n },
        }
    }

    pub(crate) fn from_wire(wire: AnswerWire, n: usize) -> Result<Self> {
        Ok(match wire {
            AnswerWire::Yes {} => Answer::Yes,
            AnswerWire::No {} => Answer::No,
            AnswerWire::Finished {} => Answer::Finished,
            AnswerWire::Counterexample { polarity, set } => {
                Answer::Counterexample(Counterexample {
                    polarity,
                    witness: decode_set(n, set)?,
                })
            }
            AnswerWire::Rejected { reason } => Answer::Rejected(reason),
            AnswerWire::Universe { n } => Answer::Universe(n),
        })
    }

    pub fn encode(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("answers always serialize")
    }

    pub fn decode(line: &str, n: usize) -> Result<Self> {
        let wire: AnswerWire =
            serde_json::from_str(line.trim_end_matches(['\n', '\r'])).map_err(malformed)?;
        Answer::from_wire(wire, n)
    }
}
