use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Counting statistics of a vertex set `S` and its complement `T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetAnalysis {
    pub s: usize,
    /// Edges inside `S`.
    pub e_s: usize,
    /// Edges between `S` and `T`.
    pub e_s_t: usize,
    /// `k -> #{t ∈ T : |N(t) ∩ S| = k}`.
    pub k_histogram: BTreeMap<usize, usize>,
    pub induced_max_degree: usize,
    /// The `K2` components of `G[S]`, as `(u, v)` with `u < v`.
    pub matching_edges: Vec<(usize, usize)>,
    /// Vertices of `S` with no neighbour in `S`.
    pub isolated_count: usize,
    /// Sizes of the connected components of `G[S]`, descending.
    pub component_sizes: Vec<usize>,
}

impl SetAnalysis {
    /// `C(s,2) - e(S)`: the non-adjacent pairs inside `S`.
    pub fn nonadjacent_pairs(&self) -> usize {
        self.s * self.s.saturating_sub(1) / 2 - self.e_s
    }

    /// `Σ_{t ∈ T} C(k_t, 2)`.
    pub fn outside_pair_count(&self) -> usize {
        self.k_histogram
            .iter()
            .map(|(&k, &count)| count * (k * k.saturating_sub(1) / 2))
            .sum()
    }

    /// `Σ_{t ∈ T} k_t`.
    pub fn k_sum(&self) -> usize {
        self.k_histogram.iter().map(|(&k, &c)| k * c).sum()
    }

    /// The single `k_t` value shared by every outside vertex, if there is one.
    pub fn uniform_k(&self) -> Option<usize> {
        let mut present = self.k_histogram.iter().filter(|(_, &c)| c > 0);
        match (present.next(), present.next()) {
            (Some((&k, _)), None) => Some(k),
            _ => None,
        }
    }

    /// `G[S]` is a disjoint union of edges and isolated vertices.
    pub fn is_matching_plus_isolated(&self) -> bool {
        self.induced_max_degree <= 1
    }
}

pub fn analyze_set(g: &Graph, set: VertexSet) -> Result<SetAnalysis> {
    g.check_set(set)?;
    let outside = g.vertices() - set;

    let mut k_histogram = BTreeMap::new();
    let mut e_s_t = 0;
    for t in outside {
        let k = g.degree_in(t, set);
        *k_histogram.entry(k).or_insert(0) += 1;
        e_s_t += k;
    }

    let induced_max_degree = set.iter().map(|v| g.degree_in(v, set)).max().unwrap_or(0);

    let mut component_sizes = Vec::new();
    let mut matching_edges = Vec::new();
    let mut isolated_count = 0;
    let mut unvisited = set;
    while let Some(root) = unvisited.first() {
        let mut component = VertexSet::singleton(root);
        let mut frontier = component;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= g.neighbors(v);
            }
            frontier = next & (set - component);
            component |= frontier;
        }
        unvisited = unvisited - component;
        match component.len() {
            1 => isolated_count += 1,
            2 => {
                let v = component.to_vec();
                matching_edges.push((v[0], v[1]));
            }
            _ => {}
        }
        component_sizes.push(component.len());
    }
    component_sizes.sort_unstable_by(|a, b| b.cmp(a));

    Ok(SetAnalysis {
        s: set.len(),
        e_s: g.edges_within(set),
        e_s_t,
        k_histogram,
        induced_max_degree,
        matching_edges,
        isolated_count,
        component_sizes,
    })
}
