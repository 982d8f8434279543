//! Graphs on the vertex universe `{1..n}`, vertex sets, and the exhaustive
//! enumeration oracles used to check every learner.

mod enumerate;
mod vertex_set;

pub use enumerate::{
    all_labeled_graphs, binomial, enumerate_minimal_vertex_covers,
    enumerate_minimal_vertex_covers_with_limit, k_subsets, minimal_closed_neighborhoods,
    minimal_members, subsets, subsets_by_cardinality, vertex_cover_number, KSubsets,
    EXHAUSTIVE_LIMIT,
};
pub use vertex_set::{Members, VertexSet, MAX_VERTICES};

pub(crate) use vertex_set::check_universe_size;

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// Unordered vertex pair, always stored with `.0 < .1`.
pub type Edge = (usize, usize);

/// Simple undirected graph on `{1..n}` stored as adjacency bitmasks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        check_universe_size(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let full = VertexSet::full(n).bits();
        for v in 1..=n {
            g.adj[v - 1] = full & !(1 << (v - 1));
        }
        Ok(g)
    }

    /// Builds a graph from pairs given in either orientation; repeats collapse.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Decodes a graph from a bitmask over [`Graph::pairs`] of `n`.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (i, (u, v)) in Graph::pairs(n).enumerate() {
            if i < 64 && mask & (1 << i) != 0 {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Erdős–Rényi sample: each pair is an edge independently with probability `p`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in Graph::pairs(n) {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Random graph with a vertex cover of at most `c` vertices: a uniform
    /// `c`-subset is drawn, then each pair touching it is an edge with
    /// probability `p`.
    pub fn random_with_cover<R: Rng + ?Sized>(
        n: usize,
        c: usize,
        p: f64,
        rng: &mut R,
    ) -> Result<Self> {
        if c > n {
            return Err(Error::Contract(format!("cover size {c} exceeds n = {n}")));
        }
        let mut g = Graph::empty(n)?;
        let cover = rand::seq::index::sample(rng, n, c);
        let cover = VertexSet::from_vertices(n, cover.iter().map(|i| i + 1))?;
        for (u, v) in Graph::pairs(n) {
            if (cover.contains(u) || cover.contains(v)) && rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// All unordered pairs `u < v`, lexicographically.
    pub fn pairs(n: usize) -> impl Iterator<Item = Edge> {
        (1..=n).flat_map(move |u| (u + 1..=n).map(move |v| (u, v)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Contract(format!("self-loop at vertex {u}")));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.adj[u - 1] &= !(1 << (v - 1));
        self.adj[v - 1] &= !(1 << (u - 1));
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u - 1] & (1 << (v - 1)) != 0
    }

    /// Edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        Graph::pairs(self.n).filter(move |&(u, v)| self.has_edge(u, v))
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn open_neighborhood(&self, x: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        Ok(VertexSet::from_bits(self.n, self.adj[x - 1]))
    }

    /// `N[x]`: `x` together with its neighbours.
    pub fn closed_neighborhood(&self, x: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        Ok(VertexSet::from_bits(self.n, self.adj[x - 1] | 1 << (x - 1)))
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::UniverseMismatch {
                expected: self.n,
                found: s.universe(),
            });
        }
        Ok(())
    }

    pub fn is_vertex_cover(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.covers_bits(s.bits()))
    }

    pub fn is_independent_set(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.independent_bits(s.bits()))
    }

    pub fn is_dominating_set(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.dominates_bits(s.bits()))
    }

    // Unchecked bitmask predicates for the enumeration loops.

    pub(crate) fn covers_bits(&self, s: u64) -> bool {
        // every vertex outside s must have all neighbours inside s
        let mut outside = !s & VertexSet::full(self.n).bits();
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            if self.adj[v] & !s != 0 {
                return false;
            }
        }
        true
    }

    pub(crate) fn independent_bits(&self, s: u64) -> bool {
        let mut inside = s;
        while inside != 0 {
            let v = inside.trailing_zeros() as usize;
            inside &= inside - 1;
            if self.adj[v] & s != 0 {
                return false;
            }
        }
        true
    }

    pub(crate) fn dominates_bits(&self, s: u64) -> bool {
        (0..self.n).all(|x| (self.adj[x] | 1 << x) & s != 0)
    }

    /// Parses the line-oriented text format: `n` on the first line, then one
    /// `u v` pair with `u < v` per non-empty line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.split('\n').enumerate();
        let (_, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            msg: "missing vertex count".into(),
        })?;
        let n: usize = header.trim().parse().map_err(|_| Error::Parse {
            line: 1,
            msg: format!("invalid vertex count {:?}", header),
        })?;
        let mut g = Graph::empty(n).map_err(|e| Error::Parse {
            line: 1,
            msg: e.to_string(),
        })?;
        for (i, line) in lines {
            let line_no = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            let bad = |msg: String| Error::Parse { line: line_no, msg };
            let mut parts = line.split_whitespace();
            let (u, v) = match (parts.next(), parts.next(), parts.next()) {
                (Some(u), Some(v), None) => (
                    u.parse::<usize>()
                        .map_err(|_| bad(format!("invalid vertex {u:?}")))?,
                    v.parse::<usize>()
                        .map_err(|_| bad(format!("invalid vertex {v:?}")))?,
                ),
                _ => return Err(bad(format!("expected `u v`, found {line:?}"))),
            };
            if u == 0 || v > n || u >= v {
                return Err(bad(format!("pair {u} {v} must satisfy 1 <= u < v <= {n}")));
            }
            if g.has_edge(u, v) {
                return Err(bad(format!("duplicate pair {u} {v}")));
            }
            g.add_edge(u, v).map_err(|e| bad(e.to_string()))?;
        }
        Ok(g)
    }

    /// Inverse of [`Graph::parse`]; edges are written in lexicographic order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn neighborhoods() {
        let k3 = Graph::complete(3).unwrap();
        let e4 = Graph::empty(4).unwrap();
        assert_eq!(p3().open_neighborhood(2).unwrap(), set(3, &[1, 3]));
        assert_eq!(e4.open_neighborhood(3).unwrap(), set(4, &[]));
        assert_eq!(k3.open_neighborhood(1).unwrap(), set(3, &[2, 3]));

        assert_eq!(p3().closed_neighborhood(1).unwrap(), set(3, &[1, 2]));
        assert_eq!(k3.closed_neighborhood(2).unwrap(), set(3, &[1, 2, 3]));
        assert_eq!(e4.closed_neighborhood(3).unwrap(), set(4, &[3]));

        assert!(matches!(
            p3().open_neighborhood(4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        ));
        assert!(p3().closed_neighborhood(0).is_err());
    }

    #[test]
    fn predicates() {
        let g = p3();
        let k3 = Graph::complete(3).unwrap();
        let e4 = Graph::empty(4).unwrap();
        assert!(g.is_vertex_cover(&set(3, &[2])).unwrap());
        assert!(!g.is_vertex_cover(&set(3, &[1])).unwrap());
        assert!(e4.is_vertex_cover(&set(4, &[])).unwrap());

        assert!(!k3.is_independent_set(&set(3, &[1, 2])).unwrap());
        assert!(g.is_independent_set(&set(3, &[1, 3])).unwrap());
        for v in 1..=3 {
            assert!(k3.is_independent_set(&set(3, &[v])).unwrap());
        }

        assert!(g.is_dominating_set(&set(3, &[2])).unwrap());
        assert!(!g.is_dominating_set(&set(3, &[1])).unwrap());
        assert!(!e4.is_dominating_set(&set(4, &[1, 2, 3])).unwrap());

        assert!(matches!(
            g.is_vertex_cover(&set(4, &[1])),
            Err(Error::UniverseMismatch {
                expected: 3,
                found: 4
            })
        ));
    }

    #[test]
    fn text_format() {
        let g = Graph::parse("3\n1 2\n2 3\n").unwrap();
        assert_eq!(g, p3());
        assert_eq!(g.to_text(), "3\n1 2\n2 3\n");
        assert_eq!(Graph::parse("4\n").unwrap(), Graph::empty(4).unwrap());

        for bad in [
            "3\n1 2\n1 2\n",
            "3\n2 1\n",
            "3\n1 4\n",
            "3\n1 1\n",
            "x\n",
            "3\n1 2 3\n",
            "0\n",
        ] {
            assert!(
                matches!(Graph::parse(bad), Err(Error::Parse { .. })),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn self_loops_rejected() {
        assert!(Graph::from_edges(3, [(2, 2)]).is_err());
    }

    #[test]
    fn edges_are_canonical() {
        let g = Graph::from_edges(4, [(3, 1), (1, 3), (4, 2)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 3), (2, 4)]);
        assert_eq!(g.edge_count(), 2);
    }
}
