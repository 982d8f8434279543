//! Teacher server and learner client over TCP.
//!
//! One session per connection, strictly alternating request and reply. The
//! server closes the connection after `finished`, after `bye`, and after
//! replying `rejected` to a message it could not parse.

use std::io::{self, BufRead, BufReader, Write};
use std::net::{SocketAddr, TcpListener, TcpStream, ToSocketAddrs};
use std::thread;

use crate::concepts::{Concept, Hypothesis, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::learners::Learner;
use crate::teachers::{Teacher, TeacherPolicy, TeacherSession};

use super::wire::{Answer, Query};
use super::{Recorder, SessionReport};

pub struct TeacherServer {
    listener: TcpListener,
    secret: Graph,
    concept: Concept,
    policy: TeacherPolicy,
}

impl TeacherServer {
    pub fn bind(
        addr: impl ToSocketAddrs,
        secret: Graph,
        concept: Concept,
        policy: TeacherPolicy,
    ) -> Result<Self> {
        concept.validate(secret.n())?;
        Ok(TeacherServer {
            listener: TcpListener::bind(addr)?,
            secret,
            concept,
            policy,
        })
    }

    pub fn local_addr(&self) -> Result<SocketAddr> {
        Ok(self.listener.local_addr()?)
    }

    fn session(&self) -> Result<TeacherSession> {
        TeacherSession::new(self.secret.clone(), self.concept, self.policy)
    }

    /// Serves connections forever, each on its own thread.
    pub fn serve(self) -> Result<()> {
        for stream in self.listener.incoming() {
            let stream = stream?;
            let teacher = self.session()?;
            thread::spawn(move || {
                let _ = handle_connection(stream, teacher);
            });
        }
        Ok(())
    }

    /// Serves exactly `count` connections, then waits for them to close.
    pub fn serve_connections(self, count: usize) -> Result<()> {
        let mut handles = Vec::with_capacity(count);
        for stream in self.listener.incoming().take(count) {
            let stream = stream?;
            let teacher = self.session()?;
            handles.push(thread::spawn(move || handle_connection(stream, teacher)));
        }
        for h in handles {
            h.join()
                .map_err(|_| Error::Internal("connection handler panicked".into()))??;
        }
        Ok(())
    }

    /// Serves `count` connections on a background thread.
    pub fn spawn(self, count: usize) -> thread::JoinHandle<Result<()>> {
        thread::spawn(move || self.serve_connections(count))
    }
}

fn send(stream: &mut TcpStream, answer: &Answer) -> io::Result<()> {
    let mut line = answer.encode();
    line.push('\n');
    stream.write_all(line.as_bytes())?;
    stream.flush()
}

/// Runs one teacher session over a connection until it ends.
pub fn handle_connection(stream: TcpStream, mut teacher: TeacherSession) -> Result<()> {
    let n = teacher.secret().n();
    let mut writer = stream.try_clone()?;
    let mut reader = BufReader::new(stream);
    let mut line = String::new();
    loop {
        line.clear();
        if reader.read_line(&mut line)? == 0 {
            return Ok(());
        }
        let query = match Query::decode(&line, n) {
            Ok(q) => q,
            Err(e) => {
                send(&mut writer, &Answer::Rejected(e.to_string()))?;
                return Ok(());
            }
        };
        let (answer, close) = match query {
            Query::Bye => return Ok(()),
            Query::Universe => (Answer::Universe(n), false),
            Query::Member(s) => match teacher.answer_membership(&s) {
                Ok(true) => (Answer::Yes, false),
                Ok(false) => (Answer::No, false),
                Err(Error::QueryRejected(reason)) => (Answer::Rejected(reason), false),
                Err(e) => (Answer::Rejected(e.to_string()), true),
            },
            Query::Equiv(h) => match teacher.answer_equivalence(&h) {
                Ok(Verdict::Finished) => (Answer::Finished, true),
                Ok(Verdict::Counterexample(c)) => (Answer::Counterexample(c), false),
                Err(e) => (Answer::Rejected(e.to_string()), true),
            },
        };
        send(&mut writer, &answer)?;
        if close {
            return Ok(());
        }
    }
}

/// A teacher on the other end of a socket.
pub struct RemoteTeacher {
    reader: BufReader<TcpStream>,
    writer: TcpStream,
    n: usize,
}

impl RemoteTeacher {
    /// Connects and asks for the order of the secret graph.
    pub fn connect(addr: impl ToSocketAddrs) -> Result<Self> {
        let writer = TcpStream::connect(addr)?;
        writer.set_nodelay(true)?;
        let reader = BufReader::new(writer.try_clone()?);
        let mut remote = RemoteTeacher {
            reader,
            writer,
            n: 0,
        };
        match remote.exchange(&Query::Universe)? {
            Answer::Universe(n) => {
                crate::graph::check_universe_size(n)?;
                remote.n = n;
                Ok(remote)
            }
            other => Err(Error::ProtocolViolation(format!(
                "expected the universe handshake, got {}",
                other.encode()
            ))),
        }
    }

    fn exchange(&mut self, query: &Query) -> Result<Answer> {
        let mut line = query.encode();
        line.push('\n');
        self.writer.write_all(line.as_bytes())?;
        self.writer.flush()?;
        line.clear();
        if self.reader.read_line(&mut line)? == 0 {
            return Err(Error::Network(io::Error::new(
                io::ErrorKind::UnexpectedEof,
                "teacher closed the connection",
            )));
        }
        Answer::decode(&line, self.n)
    }

    /// Says goodbye; the teacher may already have hung up.
    pub fn close(mut self) {
        let mut line = Query::Bye.encode();
        line.push('\n');
        let _ = self.writer.write_all(line.as_bytes());
    }
}

fn unexpected(answer: Answer) -> Error {
    match answer {
        Answer::Rejected(reason) => Error::QueryRejected(reason),
        other => Error::ProtocolViolation(format!("unexpected reply {}", other.encode())),
    }
}

impl Teacher for RemoteTeacher {
    fn universe(&self) -> usize {
        self.n
    }

    fn membership(&mut self, set: &VertexSet) -> Result<bool> {
        match self.exchange(&Query::Member(*set))? {
            Answer::Yes => Ok(true),
            Answer::No => Ok(false),
            other => Err(unexpected(other)),
        }
    }

    fn equivalence(&mut self, hypothesis: &Hypothesis) -> Result<Verdict> {
        match self.exchange(&Query::Equiv(hypothesis.clone()))? {
            Answer::Finished => Ok(Verdict::Finished),
            Answer::Counterexample(c) => Ok(Verdict::Counterexample(c)),
            other => Err(unexpected(other)),
        }
    }
}

/// Runs a learner against a served teacher. The secret stays on the server,
/// so replies are not audited and the final hypothesis is not re-verified.
pub fn connect_learner(
    addr: impl ToSocketAddrs,
    learner: &Learner,
    max_rounds: Option<usize>,
) -> Result<SessionReport> {
    let remote = RemoteTeacher::connect(addr)?;
    let mut recorder = Recorder::new(remote, max_rounds);
    let result = learner.run(&mut recorder);
    let (remote, transcript) = recorder.into_parts();
    remote.close();
    Ok(SessionReport::finish(transcript, result))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Read;

    fn p3() -> Graph {
        Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap()
    }

    fn raw_exchange(addr: SocketAddr, lines: &[&str]) -> Vec<String> {
        let mut stream = TcpStream::connect(addr).unwrap();
        for l in lines {
            stream.write_all(format!("{l}\n").as_bytes()).unwrap();
        }
        let mut out = String::new();
        stream.read_to_string(&mut out).unwrap();
        out.lines().map(str::to_owned).collect()
    }

    #[test]
    fn identical_graph_finishes() {
        let server = TeacherServer::bind(
            "127.0.0.1:0",
            p3(),
            Concept::vertex_cover(),
            TeacherPolicy::LexMin,
        )
        .unwrap();
        let addr = server.local_addr().unwrap();
        let handle = server.spawn(1);
        let replies = raw_exchange(
            addr,
            &[r#"{"q":"equiv","hyp":{"kind":"graph","n":3,"edges":[[1,2],[2,3]]}}"#],
        );
        assert_eq!(replies, vec![r#"{"a":"finished"}"#]);
        handle.join().unwrap().unwrap();
    }

    #[test]
    fn wrong_cardinality_is_rejected() {
        let server = TeacherServer::bind(
            "127.0.0.1:0",
            p3(),
            Concept::vertex_cover().exactly(2),
            TeacherPolicy::LexMin,
        )
        .unwrap();
        let addr = server.local_addr().unwrap();
        let handle = server.spawn(1);
        let replies = raw_exchange(
            addr,
            &[
                r#"{"q":"member","set":[2]}"#,
                r#"{"q":"member","set":[1,3]}"#,
                r#"{"q":"bye"}"#,
            ],
        );
        assert_eq!(
            replies,
            vec![
                r#"{"a":"rejected","reason":"cardinality"}"#,
                r#"{"a":"yes"}"#
            ]
        );
        handle.join().unwrap().unwrap();
    }

    #[test]
    fn malformed_line_closes_connection() {
        let server = TeacherServer::bind(
            "127.0.0.1:0",
            p3(),
            Concept::vertex_cover(),
            TeacherPolicy::LexMin,
        )
        .unwrap();
        let addr = server.local_addr().unwrap();
        let handle = server.spawn(1);
        let replies = raw_exchange(addr, &["hello", r#"{"q":"universe"}"#]);
        assert_eq!(replies.len(), 1);
        assert!(replies[0].starts_with(r#"{"a":"rejected","reason":"#));
        handle.join().unwrap().unwrap();
    }

    #[test]
    fn closed_port_is_a_network_error() {
        let addr = {
            let l = TcpListener::bind("127.0.0.1:0").unwrap();
            l.local_addr().unwrap()
        };
        let err = connect_learner(addr, &Learner::VertexCover, None)
            .err()
            .unwrap();
        assert!(matches!(err, Error::Network(_)));
        assert_eq!(err.exit_code(), 5);
    }
}
