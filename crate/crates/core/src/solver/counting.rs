//! Exact counting. Matchings and independent sets are extended in ascending
//! order so each is generated once; dissociation sets reuse the
//! branch-and-bound tree, whose include/exclude split is a partition.

use serde::Serialize;

use super::dissociation::Search;
use super::Limits;
use crate::graph::{above, Graph, VertexSet};

/// Number of induced matchings with exactly `k` edges.
pub fn count_induced_k_matchings(g: &Graph, k: usize) -> u64 {
    if k == 0 {
        return 1;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let rows = g.rows();
    // `blocked`: chosen vertices and their neighbours.
    fn extend(
        edges: &[(usize, usize)],
        rows: &[u64],
        from: usize,
        blocked: u64,
        left: usize,
    ) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for (i, &(u, v)) in edges.iter().enumerate().skip(from) {
            if edges.len() - i < left {
                break;
            }
            if blocked & ((1 << u) | (1 << v)) != 0 {
                continue;
            }
            let closed = rows[u] | rows[v] | (1 << u) | (1 << v);
            total += extend(edges, rows, i + 1, blocked | closed, left - 1);
        }
        total
    }
    extend(&edges, rows, 0, 0, k)
}

/// Number of independent sets with exactly `k` vertices.
pub fn count_independent_k_sets(g: &Graph, k: usize) -> u64 {
    fn extend(rows: &[u64], candidates: u64, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        if (candidates.count_ones() as usize) < left {
            return 0;
        }
        let mut total = 0;
        for v in VertexSet::from_mask(candidates) {
            total += extend(rows, candidates & above(v) & !rows[v], left - 1);
        }
        total
    }
    extend(g.rows(), g.vertices().mask(), k)
}

/// Number of dissociation sets (`Δ(G[S]) ≤ 1`) with exactly `k` vertices.
/// On the induced-degree class these are the mutual-visibility sets of size `k`.
pub fn count_dissociation_sets_of_size(g: &Graph, k: usize, limits: Limits) -> Counted {
    if k > g.n() {
        return Counted {
            count: 0,
            nodes: 0,
            proven: true,
        };
    }
    let (count, nodes, proven) = Search::new(g.rows(), false, limits).count(k as u32);
    Counted {
        count,
        nodes,
        proven,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Counted {
    pub count: u64,
    pub nodes: u64,
    /// False when a limit stopped the count early; `count` is then a lower bound.
    pub proven: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn brute_independent(g: &Graph, k: usize) -> u64 {
        (0u64..1 << g.n())
            .map(VertexSet::from_mask)
            .filter(|s| s.len() == k && g.edges_within(*s) == 0)
            .count() as u64
    }

    #[test]
    fn petersen_counts() {
        let p = build_petersen();
        assert_eq!(count_induced_k_matchings(&p, 2), 15);
        assert_eq!(count_induced_k_matchings(&p, 3), 5);
        assert_eq!(count_induced_k_matchings(&p, 4), 0);
        assert_eq!(count_induced_k_matchings(&p, 1), 15);
        assert_eq!(count_independent_k_sets(&p, 4), 5);
        assert_eq!(count_independent_k_sets(&p, 5), 0);
        assert_eq!(count_independent_k_sets(&p, 0), 1);
        let count = |k| count_dissociation_sets_of_size(&p, k, Limits::none()).count;
        assert_eq!(count(6), 5);
        assert_eq!(count(4), 80);
        assert_eq!(count(0), 1);
        assert_eq!(count(11), 0);
    }

    #[test]
    fn independent_sets_match_brute_force() {
        for g in [
            build_cycle(9).unwrap(),
            build_petersen(),
            build_complete(6).unwrap(),
        ] {
            for k in 0..=g.n() {
                assert_eq!(count_independent_k_sets(&g, k), brute_independent(&g, k));
            }
        }
    }

    #[test]
    fn dissociation_counts_match_brute_force() {
        let g = build_line_graph(&build_complete(5).unwrap()).unwrap();
        for k in 0..=g.n() {
            let brute = (0u64..1 << g.n())
                .map(VertexSet::from_mask)
                .filter(|s| s.len() == k && s.iter().all(|v| g.degree_in(v, *s) <= 1))
                .count() as u64;
            assert_eq!(
                count_dissociation_sets_of_size(&g, k, Limits::none()).count,
                brute,
                "k={k}"
            );
        }
    }
}
