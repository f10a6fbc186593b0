//! Exact optimisation over mutual-visibility sets.
//!
//! On triangle-free graphs where non-adjacent pairs have a unique common
//! neighbour, mutual-visibility sets are exactly the dissociation sets
//! (induced maximum degree at most one), which is also the feasible region
//! of the zero-one model built by [`build_ip_model`]. The dissociation
//! branch-and-bound therefore solves that model directly. Other connected
//! graphs fall back to a hereditary subset search driven by the generic
//! checkers.

mod counting;
mod dissociation;
mod hereditary;
mod lp;

pub use counting::{
    count_dissociation_sets_of_size, count_independent_k_sets, count_induced_k_matchings, Counted,
};
pub use lp::{build_ip_model, export_lp, parse_lp, Constraint, IpModel};

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{profile, Graph, Srg, VertexSet};
use crate::visibility::{analyze_set, CheckerKind, MvChecker, SetAnalysis};

/// Node and wall-clock budget for a search.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

impl Limits {
    pub fn none() -> Self {
        Limits {
            max_nodes: None,
            deadline: None,
        }
    }

    pub fn new(max_nodes: Option<u64>, time_limit: Option<Duration>) -> Self {
        Limits {
            max_nodes,
            deadline: time_limit.map(|t| Instant::now() + t),
        }
    }

    #[inline]
    pub(crate) fn exceeded(&self, nodes: u64) -> bool {
        if matches!(self.max_nodes, Some(m) if nodes > m) {
            return true;
        }
        // Clock reads are comparatively slow; sample them.
        nodes & 0xfff == 0 && matches!(self.deadline, Some(d) if Instant::now() >= d)
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::none()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    /// Report the lexicographically smallest optimal set instead of the
    /// first one found.
    pub canonical: bool,
    pub limits: Limits,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    BranchAndBound,
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    MutualVisibility,
    Dissociation,
    InducedMatching,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Certificate {
    Vertices(VertexSet),
    Edges(Vec<(usize, usize)>),
}

impl Certificate {
    pub fn vertices(&self) -> VertexSet {
        match self {
            Certificate::Vertices(s) => *s,
            Certificate::Edges(edges) => edges.iter().flat_map(|&(u, v)| [u, v]).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub problem: Problem,
    pub optimum: usize,
    pub certificate: Certificate,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub method: Method,
    /// False when a limit stopped the search; `optimum` is then only the
    /// best value found.
    pub proven: bool,
}

/// Maximum `|S|` with `Δ(G[S]) ≤ 1`.
pub fn max_dissociation(g: &Graph, options: SolveOptions) -> SolveResult {
    let start = Instant::now();
    let (best, nodes, proven) = run_dissociation(g, false, options);
    SolveResult {
        problem: Problem::Dissociation,
        optimum: best.len(),
        certificate: Certificate::Vertices(best),
        nodes_explored: nodes,
        elapsed: start.elapsed(),
        method: Method::BranchAndBound,
        proven,
    }
}

/// Maximum induced matching; the certificate lists its edges.
pub fn max_induced_matching(g: &Graph, options: SolveOptions) -> SolveResult {
    let start = Instant::now();
    let (best, nodes, proven) = run_dissociation(g, true, options);
    let edges = g
        .edges()
        .filter(|&(u, v)| best.contains(u) && best.contains(v))
        .collect::<Vec<_>>();
    SolveResult {
        problem: Problem::InducedMatching,
        optimum: edges.len(),
        certificate: Certificate::Edges(edges),
        nodes_explored: nodes,
        elapsed: start.elapsed(),
        method: Method::BranchAndBound,
        proven,
    }
}

fn run_dissociation(
    g: &Graph,
    require_partner: bool,
    options: SolveOptions,
) -> (VertexSet, u64, bool) {
    let rows = g.rows();
    let first = dissociation::Search::new(rows, require_partner, options.limits).maximize();
    if !options.canonical || !first.proven {
        return (first.best, first.nodes, first.proven);
    }
    let lex = dissociation::Search::new(rows, require_partner, options.limits)
        .first_of_size(first.best.len() as u32);
    if lex.best.len() == first.best.len() && lex.proven {
        (lex.best, first.nodes + lex.nodes, true)
    } else {
        (first.best, first.nodes + lex.nodes, false)
    }
}

/// The mutual-visibility number of a connected graph, with a certificate.
pub fn mu_exact(g: &Graph, options: SolveOptions) -> Result<SolveResult> {
    let p = profile(g);
    if !p.connected {
        return Err(Error::Precondition(
            "the mutual-visibility number is defined for connected graphs".into(),
        ));
    }
    if p.lemma4_class {
        let mut result = max_dissociation(g, options);
        result.problem = Problem::MutualVisibility;
        return Ok(result);
    }
    let start = Instant::now();
    let checker = MvChecker::with_profile(g, &p, CheckerKind::select(&p)?)?;
    let outcome = hereditary::maximize(&checker, options);
    Ok(SolveResult {
        problem: Problem::MutualVisibility,
        optimum: outcome.best.len(),
        certificate: Certificate::Vertices(outcome.best),
        nodes_explored: outcome.nodes,
        elapsed: start.elapsed(),
        method: Method::Exhaustive,
        proven: outcome.proven,
    })
}

/// The parameters under which a size-20 set carries the extra structure
/// (ten disjoint edges, four neighbours in `S` for every outside vertex).
const HOFFMAN_SINGLETON: Srg = Srg::new(50, 7, 0, 1);

/// Checks that `set` has `expected` vertices and is a mutual-visibility set,
/// returning its analysis. For size-20 sets in srg(50,7,0,1) it also checks
/// `e(S) = 10` and `k_t = 4` for every outside vertex.
pub fn verify_certificate(g: &Graph, set: VertexSet, expected: usize) -> Result<SetAnalysis> {
    g.check_set(set)?;
    if set.len() != expected {
        return Err(Error::Verification(format!(
            "certificate has {} vertices, expected {expected}",
            set.len()
        )));
    }
    let p = profile(g);
    let kind = CheckerKind::select(&p)?;
    let analysis = analyze_set(g, set)?;
    if !MvChecker::with_profile(g, &p, kind)?.is_mv(set) {
        return Err(Error::Verification(format!(
            "{{{set}}} is not a mutual-visibility set (induced max degree {})",
            analysis.induced_max_degree
        )));
    }
    if p.srg == Some(HOFFMAN_SINGLETON) && expected == 20 {
        if analysis.e_s != 10 {
            return Err(Error::Verification(format!(
                "size-20 set spans {} edges, expected 10",
                analysis.e_s
            )));
        }
        if analysis.uniform_k() != Some(4) {
            return Err(Error::Verification(format!(
                "outside vertices do not all have 4 neighbours in the set: {:?}",
                analysis.k_histogram
            )));
        }
    }
    Ok(analysis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use crate::visibility::visibility_polynomial;

    #[test]
    fn petersen_mu() {
        let r = mu_exact(&build_petersen(), SolveOptions::default()).unwrap();
        assert_eq!(r.optimum, 6);
        assert!(r.proven);
        let a = verify_certificate(&build_petersen(), r.certificate.vertices(), 6).unwrap();
        assert_eq!(a.matching_edges.len(), 3);
    }

    #[test]
    fn small_mu_values() {
        let mu = |g: &Graph| mu_exact(g, SolveOptions::default()).unwrap().optimum;
        assert_eq!(mu(&build_cycle(5).unwrap()), 3);
        assert_eq!(mu(&build_cycle(4).unwrap()), 3);
        assert_eq!(mu(&build_complete(6).unwrap()), 6);
        assert_eq!(mu(&build_complete(1).unwrap()), 1);
    }

    #[test]
    fn dissociation_examples() {
        for n in 2..=8 {
            let r = max_dissociation(&build_complete(n).unwrap(), SolveOptions::default());
            assert_eq!(r.optimum, 2, "K{n}");
        }
        assert_eq!(
            max_dissociation(&build_complete(1).unwrap(), SolveOptions::default()).optimum,
            1
        );
        assert_eq!(
            max_dissociation(&build_petersen(), SolveOptions::default()).optimum,
            6
        );
    }

    #[test]
    fn induced_matching_examples() {
        let p = max_induced_matching(&build_petersen(), SolveOptions::default());
        assert_eq!(p.optimum, 3);
        let c5 = max_induced_matching(&build_cycle(5).unwrap(), SolveOptions::default());
        assert_eq!(c5.optimum, 1);
        let k1 = max_induced_matching(&build_complete(1).unwrap(), SolveOptions::default());
        assert_eq!(k1.optimum, 0);
    }

    /// Smallest sorted vertex list among the maximum sets, by brute force.
    fn lex_smallest_optimum(g: &Graph) -> Vec<usize> {
        let checker = MvChecker::with_kind(g, CheckerKind::General).unwrap();
        let sets: Vec<VertexSet> = (0u64..1 << g.n())
            .map(VertexSet::from_mask)
            .filter(|s| checker.is_mv(*s))
            .collect();
        let top = sets.iter().map(|s| s.len()).max().unwrap();
        sets.iter()
            .filter(|s| s.len() == top)
            .map(|s| s.to_vec())
            .min()
            .unwrap()
    }

    #[test]
    fn canonical_mode_returns_lexicographically_smallest() {
        let canonical = SolveOptions {
            canonical: true,
            ..Default::default()
        };
        for g in [
            build_petersen(),
            build_cycle(7).unwrap(),
            build_cycle(4).unwrap(),
        ] {
            let r = mu_exact(&g, canonical).unwrap();
            assert_eq!(r.certificate.vertices().to_vec(), lex_smallest_optimum(&g));
        }
    }

    #[test]
    fn node_limit_reports_unproven() {
        let hs = build_hoffman_singleton().unwrap();
        let options = SolveOptions {
            limits: Limits::new(Some(50), None),
            ..Default::default()
        };
        let r = max_dissociation(&hs, options);
        assert!(!r.proven);
        assert!(verify_certificate(&hs, r.certificate.vertices(), r.optimum).is_ok());
    }

    #[test]
    fn verification_failures() {
        let p = build_petersen();
        let centre = 0;
        let nb = p.neighbors(centre).to_vec();
        let path: VertexSet = [centre, nb[0], nb[1]].into_iter().collect();
        assert!(matches!(
            verify_certificate(&p, path, 3),
            Err(Error::Verification(_))
        ));
        let pair: VertexSet = [0, 1].into_iter().collect();
        assert!(matches!(
            verify_certificate(&p, pair, 3),
            Err(Error::Verification(_))
        ));
        assert!(verify_certificate(&p, pair, 2).is_ok());
    }

    #[test]
    fn mu_matches_polynomial_degree_on_cycles() {
        for n in 3..=12 {
            let g = build_cycle(n).unwrap();
            let mu = mu_exact(&g, SolveOptions::default()).unwrap().optimum;
            assert_eq!(
                mu,
                visibility_polynomial(&g, false).unwrap().degree(),
                "C{n}"
            );
        }
    }

    #[test]
    fn disconnected_mu_is_an_error() {
        let k2 = build_complete(2).unwrap();
        let g = build_disjoint_union(&k2, &k2).unwrap();
        assert!(matches!(
            mu_exact(&g, SolveOptions::default()),
            Err(Error::Precondition(_))
        ));
    }
}
