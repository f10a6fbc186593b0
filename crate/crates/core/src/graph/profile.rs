use std::fmt;

use serde::{Serialize, Serializer};

use super::Graph;

/// Strongly regular parameters `(n, d, λ, μ_srg)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Srg {
    pub n: usize,
    pub degree: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl Srg {
    pub const fn new(n: usize, degree: usize, lambda: usize, mu: usize) -> Self {
        Srg {
            n,
            degree,
            lambda,
            mu,
        }
    }
}

impl fmt::Display for Srg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "srg({},{},{},{})",
            self.n, self.degree, self.lambda, self.mu
        )
    }
}

impl Serialize for Srg {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.n, self.degree, self.lambda, self.mu].serialize(serializer)
    }
}

/// Structural invariants of a graph.
///
/// `diameter` is `None` for disconnected graphs and `girth` is `None` for
/// forests; both serialize as the strings `"infinite"` and `"none"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphProfile {
    pub n: usize,
    pub edges: usize,
    pub is_regular: bool,
    /// The common degree when regular.
    pub degree: Option<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub connected: bool,
    #[serde(serialize_with = "diameter_marker")]
    pub diameter: Option<usize>,
    #[serde(serialize_with = "girth_marker")]
    pub girth: Option<usize>,
    pub triangle_free: bool,
    pub srg: Option<Srg>,
    /// Every non-adjacent pair has exactly one common neighbour.
    pub unique_common_neighbour: bool,
    /// Triangle-free and unique common neighbours: the class on which
    /// mutual-visibility sets are exactly the sets of induced degree ≤ 1.
    pub lemma4_class: bool,
    pub is_moore_diam2: bool,
}

fn diameter_marker<S: Serializer>(d: &Option<usize>, s: S) -> Result<S::Ok, S::Error> {
    match d {
        Some(d) => s.serialize_u64(*d as u64),
        None => s.serialize_str("infinite"),
    }
}

fn girth_marker<S: Serializer>(g: &Option<usize>, s: S) -> Result<S::Ok, S::Error> {
    match g {
        Some(g) => s.serialize_u64(*g as u64),
        None => s.serialize_str("none"),
    }
}

pub fn profile(g: &Graph) -> GraphProfile {
    let n = g.n();
    let max_degree = g.max_degree();
    let min_degree = g.min_degree();
    let is_regular = max_degree == min_degree;

    let mut diameter = Some(0);
    for v in 0..n {
        for d in g.distances_from(v) {
            diameter = match (diameter, d) {
                (Some(a), Some(b)) => Some(a.max(b)),
                _ => None,
            };
        }
    }

    let mut triangle_free = true;
    let mut unique_common_neighbour = true;
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    let mut lambda_constant = true;
    let mut mu_constant = true;
    for u in 0..n {
        for v in u + 1..n {
            let common = (g.neighbors(u) & g.neighbors(v)).len();
            let (slot, constant) = if g.has_edge(u, v) {
                if common > 0 {
                    triangle_free = false;
                }
                (&mut lambda, &mut lambda_constant)
            } else {
                if common != 1 {
                    unique_common_neighbour = false;
                }
                (&mut mu, &mut mu_constant)
            };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => *constant = false,
                Some(_) => {}
            }
        }
    }

    // Strong regularity needs both an adjacent and a non-adjacent pair.
    let srg = match (is_regular, lambda, mu) {
        (true, Some(l), Some(m)) if lambda_constant && mu_constant => {
            Some(Srg::new(n, max_degree, l, m))
        }
        _ => None,
    };

    let lemma4_class = triangle_free && unique_common_neighbour;
    let is_moore_diam2 = is_regular && diameter == Some(2) && n == max_degree * max_degree + 1;

    GraphProfile {
        n,
        edges: g.edge_count(),
        is_regular,
        degree: is_regular.then_some(max_degree),
        max_degree,
        min_degree,
        connected: diameter.is_some(),
        diameter,
        girth: girth(g),
        triangle_free,
        srg,
        unique_common_neighbour,
        lemma4_class,
        is_moore_diam2,
    }
}

/// Shortest cycle length by BFS from every vertex.
fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::with_capacity(n);
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                // Any cycle closed from here on is at least 2·dist[u] long.
                if 2 * dist[u] >= b {
                    break;
                }
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

impl GraphProfile {
    pub fn is_complete(&self) -> bool {
        self.edges == self.n * (self.n - 1) / 2
    }
}
