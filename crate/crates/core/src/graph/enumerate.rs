use crate::error::{Error, Result};

use super::vertex_set::{check_universe_size, universe_mask};
use super::{Graph, VertexSet};

/// Default cap on `n` for routines that walk all `2^n` subsets.
pub const EXHAUSTIVE_LIMIT: usize = 16;

/// Labeled-graph enumeration walks `2^C(n,2)` graphs; 7 vertices is 2^21.
const LABELED_GRAPH_LIMIT: usize = 7;

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn check_exhaustive(n: usize, limit: usize) -> Result<()> {
    check_universe_size(n)?;
    if n > limit {
        return Err(Error::Capacity(format!(
            "exhaustive enumeration over 2^{n} subsets exceeds the limit n <= {limit}"
        )));
    }
    Ok(())
}

/// Every subset of `{1..n}` in ascending bitmask order.
pub fn subsets(n: usize) -> Result<impl Iterator<Item = VertexSet>> {
    check_exhaustive(n, EXHAUSTIVE_LIMIT)?;
    Ok((0..=universe_mask(n)).map(move |bits| VertexSet::from_bits(n, bits)))
}

/// Every subset, grouped by cardinality and lexicographic within a group.
pub fn subsets_by_cardinality(n: usize) -> Result<impl Iterator<Item = VertexSet>> {
    check_exhaustive(n, EXHAUSTIVE_LIMIT)?;
    Ok((0..=n).flat_map(move |k| KSubsets::new(n, k)))
}

pub fn k_subsets(n: usize, k: usize) -> Result<KSubsets> {
    check_universe_size(n)?;
    Ok(KSubsets::new(n, k))
}

/// The `k`-element subsets of `{1..n}` in lexicographic order.
#[derive(Clone, Debug)]
pub struct KSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        let current = (k <= n).then(|| (1..=k).collect());
        KSubsets { n, current }
    }
}

impl Iterator for KSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let current = self.current.as_mut()?;
        let bits = current.iter().fold(0u64, |acc, &v| acc | 1 << (v - 1));
        let item = VertexSet::from_bits(self.n, bits);

        // advance: bump the rightmost slot that still has room
        let k = current.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if current[i] < self.n - (k - 1 - i) {
                current[i] += 1;
                for j in i + 1..k {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
        Some(item)
    }
}

/// Inclusion-minimal members of a family, sorted and deduplicated.
pub fn minimal_members(family: &[VertexSet]) -> Vec<VertexSet> {
    let mut sorted: Vec<VertexSet> = family.to_vec();
    sorted.sort_by_key(|s| (s.len(), *s));
    sorted.dedup();
    let mut minimal: Vec<VertexSet> = Vec::new();
    for s in sorted {
        if !minimal.iter().any(|m| m.is_subset(&s)) {
            minimal.push(s);
        }
    }
    minimal.sort();
    minimal
}

pub fn enumerate_minimal_vertex_covers(g: &Graph) -> Result<Vec<VertexSet>> {
    enumerate_minimal_vertex_covers_with_limit(g, EXHAUSTIVE_LIMIT)
}

/// All inclusion-minimal vertex covers, by exhaustive search in order of
/// cardinality: a cover is minimal iff it contains no cover found earlier.
pub fn enumerate_minimal_vertex_covers_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<Vec<VertexSet>> {
    let n = g.n();
    check_exhaustive(n, limit)?;
    let mut minimal: Vec<VertexSet> = Vec::new();
    for k in 0..=n {
        for s in KSubsets::new(n, k) {
            if g.covers_bits(s.bits()) && !minimal.iter().any(|m| m.is_subset(&s)) {
                minimal.push(s);
            }
        }
    }
    minimal.sort();
    Ok(minimal)
}

pub fn vertex_cover_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    check_exhaustive(n, EXHAUSTIVE_LIMIT)?;
    (0..=n)
        .find(|&k| KSubsets::new(n, k).any(|s| g.covers_bits(s.bits())))
        .ok_or_else(|| Error::Internal("the full vertex set failed to cover".into()))
}

/// The inclusion-minimal closed neighbourhoods; a set dominates `g` iff it
/// meets each of them.
pub fn minimal_closed_neighborhoods(g: &Graph) -> Vec<VertexSet> {
    let all: Vec<VertexSet> = (1..=g.n())
        .map(|x| g.closed_neighborhood(x).expect("vertex in range"))
        .collect();
    minimal_members(&all)
}

/// Every labeled graph on `{1..n}`, indexed by its pair bitmask.
pub fn all_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_universe_size(n)?;
    if n > LABELED_GRAPH_LIMIT {
        return Err(Error::Capacity(format!(
            "enumerating all labeled graphs is limited to n <= {LABELED_GRAPH_LIMIT}"
        )));
    }
    let pairs = n * (n - 1) / 2;
    Ok((0..1u64 << pairs).map(move |mask| Graph::from_pair_mask(n, mask).expect("valid n")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    /// Brute-force minimality: a cover where dropping any member breaks it.
    fn minimal_by_definition(g: &Graph) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = subsets(g.n())
            .unwrap()
            .filter(|s| g.is_vertex_cover(s).unwrap())
            .filter(|s| {
                s.iter()
                    .all(|v| !g.is_vertex_cover(&s.difference(&set(g.n(), &[v]))).unwrap())
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn k_subsets_lexicographic() {
        let got: Vec<Vec<usize>> = KSubsets::new(4, 2).map(|s| s.to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        assert_eq!(KSubsets::new(3, 0).count(), 1);
        assert_eq!(KSubsets::new(3, 4).count(), 0);
        assert_eq!(KSubsets::new(10, 4).count() as u128, binomial(10, 4));
    }

    #[test]
    fn by_cardinality_order() {
        let got: Vec<VertexSet> = subsets_by_cardinality(3).unwrap().collect();
        assert_eq!(got.len(), 8);
        assert_eq!(got[0], set(3, &[]));
        assert_eq!(got[1], set(3, &[1]));
        assert_eq!(got[4], set(3, &[1, 2]));
        assert_eq!(got[7], set(3, &[1, 2, 3]));
    }

    #[test]
    fn minimal_covers_examples() {
        let star = Graph::from_edges(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        let covers = enumerate_minimal_vertex_covers(&star).unwrap();
        assert_eq!(covers, minimal_by_definition(&star));
        assert_eq!(covers, vec![set(4, &[1]), set(4, &[2, 3, 4])]);

        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            enumerate_minimal_vertex_covers(&k3).unwrap(),
            vec![set(3, &[1, 2]), set(3, &[1, 3]), set(3, &[2, 3])]
        );

        let e4 = Graph::empty(4).unwrap();
        assert_eq!(
            enumerate_minimal_vertex_covers(&e4).unwrap(),
            vec![set(4, &[])]
        );
    }

    #[test]
    fn capacity_limit() {
        let g = Graph::empty(17).unwrap();
        assert!(matches!(
            enumerate_minimal_vertex_covers(&g),
            Err(Error::Capacity(_))
        ));
        assert!(matches!(vertex_cover_number(&g), Err(Error::Capacity(_))));
        assert!(enumerate_minimal_vertex_covers_with_limit(&Graph::empty(5).unwrap(), 4).is_err());
    }

    #[test]
    fn cover_numbers() {
        let p3 = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(vertex_cover_number(&p3).unwrap(), 1);
        assert_eq!(
            vertex_cover_number(&Graph::complete(3).unwrap()).unwrap(),
            2
        );
        assert_eq!(vertex_cover_number(&Graph::empty(4).unwrap()).unwrap(), 0);
    }

    #[test]
    fn minimal_neighborhoods() {
        let p3 = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        // N[1]={1,2}, N[2]={1,2,3}, N[3]={2,3}; N[2] is not minimal
        assert_eq!(
            minimal_closed_neighborhoods(&p3),
            vec![set(3, &[1, 2]), set(3, &[2, 3])]
        );
        assert_eq!(
            minimal_closed_neighborhoods(&Graph::complete(3).unwrap()),
            vec![set(3, &[1, 2, 3])]
        );
        assert_eq!(
            minimal_closed_neighborhoods(&Graph::empty(4).unwrap()),
            (1..=4).map(|v| set(4, &[v])).collect::<Vec<_>>()
        );
    }

    #[test]
    fn minimal_covers_match_definition_exhaustively() {
        for n in 1..=5 {
            for g in all_labeled_graphs(n).unwrap() {
                assert_eq!(
                    enumerate_minimal_vertex_covers(&g).unwrap(),
                    minimal_by_definition(&g)
                );
            }
        }
    }

    #[test]
    fn labeled_graph_counts() {
        assert_eq!(all_labeled_graphs(4).unwrap().count(), 64);
        assert!(all_labeled_graphs(8).is_err());
    }
}
