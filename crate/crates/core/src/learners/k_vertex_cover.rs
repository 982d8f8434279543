//! Learner for the `k`-element vertex covers whose query count depends on `k`
//! only.
//!
//! The learner searches a tree whose nodes carry a list of sets presumed to
//! be minimal vertex covers of the secret. A node queries the largest graph
//! all of whose edges meet every presumed cover. A positive counterexample
//! `Q` spawns one child per nonempty `C ⊆ Q` (the guess that `C` is a new
//! minimal cover); a negative one makes the node a leaf. A graph with a
//! `k`-cover has at most `2^k` minimal covers, so lists longer than that are
//! pruned.

use std::collections::{BTreeSet, HashSet};

use crate::concepts::{Hypothesis, Polarity, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::teachers::Teacher;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KVertexCoverOptions {
    /// Skip nodes whose presumed-cover list was already queried.
    pub memoize: bool,
    /// Also try the empty guess below the root, which is the one correct
    /// guess when the secret has no edges.
    pub empty_guess: bool,
}

impl Default for KVertexCoverOptions {
    fn default() -> Self {
        KVertexCoverOptions {
            memoize: true,
            empty_guess: true,
        }
    }
}

impl KVertexCoverOptions {
    /// The bare search tree: no memo table and only nonempty guesses.
    pub fn literal() -> Self {
        KVertexCoverOptions {
            memoize: false,
            empty_guess: false,
        }
    }
}

/// A node of the search tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchNode {
    pub presumed_covers: BTreeSet<VertexSet>,
    pub depth: usize,
}

/// The unique maximal graph on `{1..n}` in which every listed set is a
/// vertex cover: `uv` is an edge iff every listed set contains `u` or `v`.
pub fn hypothesis_from_cover_list<'a>(
    n: usize,
    list: impl IntoIterator<Item = &'a VertexSet>,
) -> Result<Graph> {
    let mut g = Graph::complete(n)?;
    for c in list {
        if c.universe() != n {
            return Err(Error::UniverseMismatch {
                expected: n,
                found: c.universe(),
            });
        }
        let outside = c.complement().to_vec();
        for (i, &u) in outside.iter().enumerate() {
            for &v in &outside[i + 1..] {
                g.remove_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Nonempty subsets of `q` in ascending order of their bitmask over `q`'s
/// sorted members.
fn nonempty_subsets(q: &VertexSet) -> impl Iterator<Item = VertexSet> {
    let members = q.to_vec();
    let n = q.universe();
    (1u64..1 << members.len()).map(move |mask| {
        let bits = members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .fold(0u64, |acc, (_, &v)| acc | 1 << (v - 1));
        VertexSet::from_bits(n, bits)
    })
}

/// Upper bound `2^(k·2^k)` on the number of equivalence queries.
pub fn k_vertex_cover_query_bound(k: usize) -> u128 {
    let exponent = k as u32 * (1u32 << k.min(6));
    if exponent >= 128 {
        u128::MAX
    } else {
        1u128 << exponent
    }
}

/// Learns the `k`-element vertex covers of the secret by depth-first search
/// over the presumed-cover tree, using equivalence queries only.
pub fn learn_k_vertex_covers<T: Teacher>(
    teacher: &mut T,
    k: usize,
    options: KVertexCoverOptions,
) -> Result<Graph> {
    let n = teacher.universe();
    if k == 0 || k > n {
        return Err(Error::Contract(format!(
            "cardinality {k} must lie in 1..={n}"
        )));
    }
    let max_list = 1usize.checked_shl(k as u32).unwrap_or(usize::MAX);
    let mut visited: HashSet<BTreeSet<VertexSet>> = HashSet::new();
    let mut stack = vec![SearchNode {
        presumed_covers: BTreeSet::new(),
        depth: 0,
    }];

    while let Some(node) = stack.pop() {
        if options.memoize && !visited.insert(node.presumed_covers.clone()) {
            continue;
        }
        let h = hypothesis_from_cover_list(n, &node.presumed_covers)?;
        let q = match teacher.equivalence(&Hypothesis::Graph(h.clone()))? {
            Verdict::Finished => return Ok(h),
            Verdict::Counterexample(c) if c.polarity == Polarity::Negative => continue,
            Verdict::Counterexample(c) => c.witness,
        };
        if q.len() != k {
            return Err(Error::ProtocolViolation(format!(
                "counterexample {q} does not have cardinality {k}"
            )));
        }
        let mut children = Vec::new();
        for guess in nonempty_subsets(&q) {
            let mut list = node.presumed_covers.clone();
            list.insert(guess);
            if list.len() <= max_list {
                children.push(SearchNode {
                    presumed_covers: list,
                    depth: node.depth + 1,
                });
            }
        }
        if options.empty_guess && node.depth == 0 {
            let mut list = node.presumed_covers.clone();
            list.insert(VertexSet::empty(n));
            children.push(SearchNode {
                presumed_covers: list,
                depth: 1,
            });
        }
        // reversed so the smallest subset mask is explored first
        stack.extend(children.into_iter().rev());
    }
    Err(Error::Internal(format!(
        "search tree for k = {k} exhausted without an equivalent hypothesis"
    )))
}
