//! Benchmark suites that measure query counts against their bounds.
//!
//! Every suite is deterministic: graphs are enumerated or drawn from fixed
//! seeds, and rows come out in input order.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::concepts::{BaseConcept, Concept};
use crate::error::{Error, Result};
use crate::graph::{
    all_labeled_graphs, binomial, enumerate_minimal_vertex_covers, vertex_cover_number, Graph,
};
use crate::learners::{k_vertex_cover_query_bound, KVertexCoverOptions, Learner};
use crate::teachers::TeacherPolicy;
use crate::teaching::{teaching_set_is, teaching_set_vc, verify_teaching_set};

use super::{run_session, SessionConfig, SessionReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    VcRounds,
    IsRounds,
    DsRounds,
    KvcIndependence,
    MinimalCovers,
    Teaching,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::VcRounds,
        Suite::IsRounds,
        Suite::DsRounds,
        Suite::KvcIndependence,
        Suite::MinimalCovers,
        Suite::Teaching,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::VcRounds => "vc-rounds",
            Suite::IsRounds => "is-rounds",
            Suite::DsRounds => "ds-rounds",
            Suite::KvcIndependence => "kvc-independence",
            Suite::MinimalCovers => "minimal-covers",
            Suite::Teaching => "teaching",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "lemma25" {
            return Ok(Suite::MinimalCovers);
        }
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::Usage(format!(
                    "unknown suite {s:?} (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

/// One CSV row. `measured` is checked against `bound`; `margin` is their
/// difference.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub suite: &'static str,
    pub concept: String,
    pub n: usize,
    pub k: Option<usize>,
    pub graph: String,
    pub policy: String,
    pub seed: Option<u64>,
    pub equivalence_queries: usize,
    pub membership_queries: usize,
    pub measured: u128,
    pub bound: u128,
    pub margin: i128,
    pub ok: bool,
}

impl BenchRow {
    fn new(suite: Suite, concept: &Concept, g: &Graph, measured: u128, bound: u128) -> Self {
        BenchRow {
            suite: suite.name(),
            concept: concept.base.short_name().to_owned(),
            n: g.n(),
            k: concept.k(),
            graph: edge_list(g),
            policy: String::new(),
            seed: None,
            equivalence_queries: 0,
            membership_queries: 0,
            measured,
            bound,
            margin: bound as i128 - measured as i128,
            ok: measured <= bound,
        }
    }

    fn with_session(mut self, policy: TeacherPolicy, report: &SessionReport) -> Self {
        self.policy = policy.name().to_owned();
        self.seed = matches!(policy, TeacherPolicy::Random(_)).then(|| policy.seed());
        self.equivalence_queries = report.transcript.equivalence_count;
        self.membership_queries = report.transcript.membership_count;
        self.ok &= report.is_finished();
        self
    }
}

/// Edges as `1-2 2-3`.
pub fn edge_list(g: &Graph) -> String {
    g.edges()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub const DS_RANDOM_N: usize = 12;
pub const DS_RANDOM_GRAPHS: u64 = 200;
pub const KVC_ORDERS: [usize; 4] = [6, 8, 10, 12];
pub const KVC_GRAPHS_PER_ORDER: u64 = 50;
const RANDOM_POLICIES: u64 = 5;

fn session(
    learner: Learner,
    g: &Graph,
    concept: Concept,
    policy: TeacherPolicy,
) -> Result<SessionReport> {
    run_session(&SessionConfig::new(learner, g.clone(), concept, policy))
}

fn equivalence_rounds(suite: Suite, learner: Learner, concept: Concept) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for n in 3..=5 {
        let bound = binomial(n, 2) + 1;
        for g in all_labeled_graphs(n)? {
            for policy in TeacherPolicy::grid(RANDOM_POLICIES) {
                let report = session(learner, &g, concept, policy)?;
                let measured = report.transcript.equivalence_count as u128;
                rows.push(
                    BenchRow::new(suite, &concept, &g, measured, bound)
                        .with_session(policy, &report),
                );
            }
        }
    }
    Ok(rows)
}

fn ds_row(g: &Graph, policy: TeacherPolicy) -> Result<BenchRow> {
    let concept = Concept::dominating_set();
    let n = g.n();
    let report = session(Learner::DominatingSet, g, concept, policy)?;
    let eq = report.transcript.equivalence_count as u128;
    let mut row = BenchRow::new(Suite::DsRounds, &concept, g, eq, n as u128 + 1)
        .with_session(policy, &report);
    row.ok &= report.transcript.membership_count <= n * (n + 1);
    Ok(row)
}

fn ds_rounds() -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for n in 1..=5 {
        for g in all_labeled_graphs(n)? {
            for policy in TeacherPolicy::grid(RANDOM_POLICIES) {
                rows.push(ds_row(&g, policy)?);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DS_RANDOM_N as u64);
    for seed in 0..DS_RANDOM_GRAPHS {
        let g = Graph::random(DS_RANDOM_N, 0.3, &mut rng)?;
        rows.push(ds_row(&g, TeacherPolicy::Random(seed))?);
    }
    Ok(rows)
}

/// The single-edge secret on `n` vertices.
pub fn single_edge(n: usize) -> Result<Graph> {
    Graph::from_edges(n, [(1, 2)])
}

/// Seeded graphs with a vertex cover of at most `k` vertices.
pub fn planted_cover_graphs(n: usize, k: usize, count: u64) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64((n as u64) << 8 | k as u64);
    (0..count)
        .map(|_| Graph::random_with_cover(n, k, 0.5, &mut rng))
        .collect()
}

fn kvc_row(g: &Graph, k: usize, policy: TeacherPolicy) -> Result<BenchRow> {
    let concept = Concept::vertex_cover().exactly(k);
    let learner = Learner::KVertexCover {
        k,
        options: KVertexCoverOptions::default(),
    };
    let report = session(learner, g, concept, policy)?;
    let measured = report.transcript.total() as u128;
    Ok(BenchRow::new(
        Suite::KvcIndependence,
        &concept,
        g,
        measured,
        k_vertex_cover_query_bound(k),
    )
    .with_session(policy, &report))
}

fn kvc_independence() -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for k in 1..=2 {
        for n in KVC_ORDERS {
            let edge = single_edge(n)?;
            for policy in TeacherPolicy::grid(0) {
                rows.push(kvc_row(&edge, k, policy)?);
            }
            for (seed, g) in (0..).zip(planted_cover_graphs(n, k, KVC_GRAPHS_PER_ORDER)?) {
                rows.push(kvc_row(&g, k, TeacherPolicy::Random(seed))?);
            }
        }
    }
    Ok(rows)
}

fn minimal_covers() -> Result<Vec<BenchRow>> {
    let concept = Concept::vertex_cover();
    let mut rows = Vec::new();
    for n in 1..=6 {
        for g in all_labeled_graphs(n)? {
            let count = enumerate_minimal_vertex_covers(&g)?.len() as u128;
            let bound = 1u128 << vertex_cover_number(&g)?;
            rows.push(BenchRow::new(
                Suite::MinimalCovers,
                &concept,
                &g,
                count,
                bound,
            ));
        }
    }
    Ok(rows)
}

fn teaching() -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for base in [BaseConcept::VertexCover, BaseConcept::IndependentSet] {
        let concept = Concept::new(base);
        for n in 2..=5 {
            for g in all_labeled_graphs(n)? {
                let ex = match base {
                    BaseConcept::VertexCover => teaching_set_vc(&g)?,
                    _ => teaching_set_is(&g)?,
                };
                let size = binomial(n, 2);
                let mut row = BenchRow::new(Suite::Teaching, &concept, &g, ex.len() as u128, size);
                row.ok = ex.len() as u128 == size && verify_teaching_set(&g, &concept, &ex)?;
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

pub fn run_suite(suite: Suite) -> Result<Vec<BenchRow>> {
    match suite {
        Suite::VcRounds => equivalence_rounds(suite, Learner::VertexCover, Concept::vertex_cover()),
        Suite::IsRounds => {
            equivalence_rounds(suite, Learner::IndependentSet, Concept::independent_set())
        }
        Suite::DsRounds => ds_rounds(),
        Suite::KvcIndependence => kvc_independence(),
        Suite::MinimalCovers => minimal_covers(),
        Suite::Teaching => teaching(),
    }
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(std::io::Error::from)?;
    }
    w.flush()?;
    Ok(())
}

/// Runs the named suite and writes its CSV report to `path`.
pub fn bench(suite: &str, path: impl AsRef<Path>) -> Result<Vec<BenchRow>> {
    let suite: Suite = suite.parse()?;
    let rows = run_suite(suite)?;
    write_csv(&rows, std::fs::File::create(path)?)?;
    Ok(rows)
}
