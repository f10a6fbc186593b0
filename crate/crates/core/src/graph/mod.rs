//! Simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns one adjacency word, so vertex subsets are plain `u64`
//! masks and neighbourhood queries are single bit operations.
//!
//! Canonical vertex orders of the named constructions:
//!
//! * Petersen: the ten 2-subsets of `{1,..,5}` in lexicographic order,
//!   `{1,2}=0, {1,3}=1, .., {4,5}=9`; adjacency is disjointness.
//! * Hoffman–Singleton: pentagons `P_0..P_4` occupy `0..25` (vertex `j` of
//!   `P_h` is `5h + j`), pentagrams `Q_0..Q_4` occupy `25..50` (vertex `j`
//!   of `Q_i` is `25 + 5i + j`).
//! * Line graphs: the edges of the source graph in lexicographic `(u, v)`
//!   order with `u < v`.

mod edgelist;
mod profile;
mod selector;
mod vertex_set;

pub use edgelist::{parse_edge_list, read_edge_list, write_edge_list};
pub use profile::{profile, GraphProfile, Srg};
pub use selector::GraphSpec;
pub use vertex_set::{Iter as VertexIter, VertexSet};

use crate::error::{Error, Result};

/// Maximum number of vertices a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Argument(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Argument(format!("self-loop at vertex {u}")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating symmetry and
    /// irreflexivity.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let all = VertexSet::full(n).mask();
        for (v, &row) in rows.iter().enumerate() {
            if row & !all != 0 {
                return Err(Error::Argument(format!("row {v} names a vertex >= {n}")));
            }
            if row & (1 << v) != 0 {
                return Err(Error::Argument(format!("self-loop at vertex {v}")));
            }
            for u in VertexSet::from_mask(row) {
                if rows[u] & (1 << v) == 0 {
                    return Err(Error::Argument(format!(
                        "asymmetric adjacency between {v} and {u}"
                    )));
                }
            }
        }
        Ok(Graph { adj: rows })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_mask(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            let higher = self.adj[u] & above(u);
            VertexSet::from_mask(higher).iter().map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// `N(u) ∩ N(v)` for distinct `u`, `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Argument(format!(
                "common neighbours need two distinct vertices, got {u} twice"
            )));
        }
        Ok(VertexSet::from_mask(self.adj[u] & self.adj[v]))
    }

    /// Degree of `v` inside the subgraph induced by `set`.
    #[inline]
    pub fn degree_in(&self, v: usize, set: VertexSet) -> usize {
        (self.adj[v] & set.mask()).count_ones() as usize
    }

    /// Number of edges with both endpoints in `set`.
    pub fn edges_within(&self, set: VertexSet) -> usize {
        set.iter().map(|v| self.degree_in(v, set)).sum::<usize>() / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::Argument(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.n()
            )))
        }
    }

    pub fn check_set(&self, set: VertexSet) -> Result<()> {
        if set.fits(self.n()) {
            Ok(())
        } else {
            Err(Error::Argument(format!(
                "vertex set {{{set}}} has members outside 0..{}",
                self.n()
            )))
        }
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut seen = 1u64 << source;
        let mut frontier = seen;
        let mut level = 0;
        while frontier != 0 {
            level += 1;
            let mut next = 0u64;
            for v in VertexSet::from_mask(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            for v in VertexSet::from_mask(next) {
                dist[v] = Some(level);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet::from_mask(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen == self.vertices().mask()
    }
}

/// Mask of the vertices with index greater than `v`.
#[inline]
pub fn above(v: usize) -> u64 {
    !((2u64 << v).wrapping_sub(1))
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::Size(format!(
            "graphs must have between 1 and {MAX_VERTICES} vertices, got {n}"
        )))
    }
}

/// The cycle `C_n`, vertices in cyclic order.
pub fn build_cycle(n: usize) -> Result<Graph> {
    if !(3..=MAX_VERTICES).contains(&n) {
        return Err(Error::Size(format!(
            "cycle length must be in 3..=64, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The complete graph `K_n`.
pub fn build_complete(n: usize) -> Result<Graph> {
    check_order(n)?;
    let rows = (0..n)
        .map(|v| VertexSet::full(n).without(v).mask())
        .collect();
    Graph::from_adjacency(rows)
}

pub fn build_complement(g: &Graph) -> Graph {
    let all = g.vertices().mask();
    let adj = g
        .adj
        .iter()
        .enumerate()
        .map(|(v, &row)| !row & all & !(1 << v))
        .collect();
    Graph { adj }
}

/// Line graph; vertex `i` is the `i`-th edge of `g` in lexicographic order.
pub fn build_line_graph(g: &Graph) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() > MAX_VERTICES {
        return Err(Error::Size(format!(
            "line graph needs one vertex per edge; {} edges exceed {MAX_VERTICES}",
            edges.len()
        )));
    }
    if edges.is_empty() {
        return Err(Error::Size(
            "line graph of an edgeless graph has no vertices".into(),
        ));
    }
    let mut adj = vec![0u64; edges.len()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    Ok(Graph { adj })
}

/// Disjoint union; the vertices of `second` are shifted by `first.n()`.
pub fn build_disjoint_union(first: &Graph, second: &Graph) -> Result<Graph> {
    let n = first.n() + second.n();
    if n > MAX_VERTICES {
        return Err(Error::Size(format!(
            "disjoint union would have {n} vertices, above {MAX_VERTICES}"
        )));
    }
    let shift = first.n();
    let adj = first
        .adj
        .iter()
        .copied()
        .chain(second.adj.iter().map(|&row| row << shift))
        .collect();
    Ok(Graph { adj })
}

/// The 2-subsets of `{1,..,5}` in lexicographic order (Petersen vertex labels).
pub fn petersen_labels() -> Vec<(u8, u8)> {
    let mut labels = Vec::with_capacity(10);
    for a in 1..=5u8 {
        for b in a + 1..=5 {
            labels.push((a, b));
        }
    }
    labels
}

/// The Petersen graph: 2-subsets of `{1,..,5}`, adjacent when disjoint.
pub fn build_petersen() -> Graph {
    let labels = petersen_labels();
    let mut edges = Vec::with_capacity(15);
    for (i, &(a, b)) in labels.iter().enumerate() {
        for (j, &(c, d)) in labels.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(10, edges).expect("Petersen construction is within capacity")
}

/// Raw pentagon/pentagram construction of the Hoffman–Singleton graph,
/// without validation.
pub(crate) fn hoffman_singleton_unchecked() -> Graph {
    let pentagon = |h: usize, j: usize| 5 * h + j;
    let pentagram = |i: usize, j: usize| 25 + 5 * i + j;
    let mut edges = Vec::with_capacity(175);
    for h in 0..5 {
        for j in 0..5 {
            edges.push((pentagon(h, j), pentagon(h, (j + 1) % 5)));
            edges.push((pentagram(h, j), pentagram(h, (j + 2) % 5)));
        }
    }
    for h in 0..5 {
        for j in 0..5 {
            for i in 0..5 {
                edges.push((pentagon(h, j), pentagram(i, (h * i + j) % 5)));
            }
        }
    }
    Graph::from_edges(50, edges).expect("Hoffman-Singleton construction is within capacity")
}

/// The Hoffman–Singleton graph, validated to be srg(50,7,0,1).
pub fn build_hoffman_singleton() -> Result<Graph> {
    validate_srg(hoffman_singleton_unchecked(), Srg::new(50, 7, 0, 1))
}

/// Returns `g` if its profile is exactly `expected`, a construction error otherwise.
pub fn validate_srg(g: Graph, expected: Srg) -> Result<Graph> {
    let p = profile(&g);
    match p.srg {
        Some(found) if found == expected && p.girth == Some(5) && p.diameter == Some(2) => Ok(g),
        Some(found) => Err(Error::Construction(format!(
            "expected {expected} with girth 5 and diameter 2, built {found} (girth {:?}, diameter {:?})",
            p.girth, p.diameter
        ))),
        None => Err(Error::Construction(format!(
            "expected {expected}, built a graph that is not strongly regular"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_simple(g: &Graph) {
        for u in 0..g.n() {
            assert!(!g.has_edge(u, u));
            for v in 0..g.n() {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn constructions_are_simple_graphs() {
        let hs = build_hoffman_singleton().unwrap();
        for g in [
            build_cycle(7).unwrap(),
            build_complete(6).unwrap(),
            build_petersen(),
            hs.clone(),
            build_complement(&hs),
            build_line_graph(&build_complete(5).unwrap()).unwrap(),
        ] {
            assert_simple(&g);
        }
    }

    #[test]
    fn size_errors() {
        assert!(matches!(build_cycle(2), Err(Error::Size(_))));
        assert!(matches!(build_cycle(65), Err(Error::Size(_))));
        assert!(matches!(build_complete(0), Err(Error::Size(_))));
        assert!(matches!(build_complete(65), Err(Error::Size(_))));
        // K12 has 66 edges.
        let k12 = build_complete(12).unwrap();
        assert!(matches!(build_line_graph(&k12), Err(Error::Size(_))));
        let big = build_complete(40).unwrap();
        assert!(matches!(
            build_disjoint_union(&big, &big),
            Err(Error::Size(_))
        ));
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(build_complete(5).unwrap().edge_count(), 10);
        assert_eq!(build_complete(1).unwrap().edge_count(), 0);
        assert_eq!(build_complete(2).unwrap().edge_count(), 1);
        assert_eq!(build_complete(64).unwrap().edge_count(), 64 * 63 / 2);
    }

    #[test]
    fn complement_examples() {
        let k5 = build_complete(5).unwrap();
        assert_eq!(build_complement(&k5).edge_count(), 0);
        let c5 = build_cycle(5).unwrap();
        let cc5 = build_complement(&c5);
        // Pentagram i ~ i±2 relabelled by i -> 2i mod 5 is the pentagon.
        let relabel = |v: usize| (2 * v) % 5;
        for (u, v) in c5.edges() {
            assert!(cc5.has_edge(relabel(u), relabel(v)));
        }
        assert_eq!(cc5.edge_count(), 5);
        let p = build_petersen();
        assert_eq!(build_complement(&build_complement(&p)), p);
    }

    #[test]
    fn line_graph_examples() {
        let lk5 = build_line_graph(&build_complete(5).unwrap()).unwrap();
        assert_eq!(lk5.n(), 10);
        assert!((0..10).all(|v| lk5.degree(v) == 6));
        let lc6 = build_line_graph(&build_cycle(6).unwrap()).unwrap();
        assert_eq!(lc6.n(), 6);
        assert!((0..6).all(|v| lc6.degree(v) == 2));
        assert!(lc6.is_connected());
        let lk2 = build_line_graph(&build_complete(2).unwrap()).unwrap();
        assert_eq!((lk2.n(), lk2.edge_count()), (1, 0));
    }

    #[test]
    fn petersen_is_complement_of_line_graph_of_k5() {
        let via_line = build_complement(&build_line_graph(&build_complete(5).unwrap()).unwrap());
        assert_eq!(via_line, build_petersen());
    }

    #[test]
    fn disjoint_unions() {
        let k2 = build_complete(2).unwrap();
        let two_k2 = build_disjoint_union(&k2, &k2).unwrap();
        assert_eq!(
            (two_k2.n(), two_k2.edge_count(), two_k2.max_degree()),
            (4, 2, 1)
        );
        assert!(two_k2.has_edge(2, 3));
        let k1 = build_complete(1).unwrap();
        let mut nk1 = k1.clone();
        for _ in 0..4 {
            nk1 = build_disjoint_union(&nk1, &k1).unwrap();
        }
        assert_eq!((nk1.n(), nk1.edge_count()), (5, 0));
        let c5k1 = build_disjoint_union(&build_cycle(5).unwrap(), &k1).unwrap();
        assert_eq!(c5k1.degree(5), 0);
        assert_eq!(c5k1.edge_count(), 5);
    }

    #[test]
    fn common_neighbour_queries() {
        let p = build_petersen();
        for (u, v) in p.edges() {
            assert!(p.common_neighbors(u, v).unwrap().is_empty());
        }
        for u in 0..10 {
            for v in u + 1..10 {
                if !p.has_edge(u, v) {
                    assert_eq!(p.common_neighbors(u, v).unwrap().len(), 1);
                }
            }
        }
        let k3 = build_complete(3).unwrap();
        assert_eq!(k3.common_neighbors(0, 2).unwrap(), VertexSet::singleton(1));
        assert!(matches!(k3.common_neighbors(1, 1), Err(Error::Argument(_))));
    }

    #[test]
    fn hoffman_singleton_edge_count() {
        assert_eq!(build_hoffman_singleton().unwrap().edge_count(), 175);
    }

    #[test]
    fn corrupted_hoffman_singleton_is_rejected() {
        let g = hoffman_singleton_unchecked();
        let mut rows = g.rows().to_vec();
        // Swap one pentagon edge for a chord: 0-1 becomes 0-2.
        rows[0] ^= 0b110;
        rows[1] ^= 1;
        rows[2] ^= 1;
        let broken = Graph::from_adjacency(rows).unwrap();
        assert!(matches!(
            validate_srg(broken, Srg::new(50, 7, 0, 1)),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn adjacency_validation() {
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b1]).is_err());
        assert!(Graph::from_adjacency(vec![0b100, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
    }
}
