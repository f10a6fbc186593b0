//! Mutual-visibility checking.
//!
//! Three characterisations are implemented:
//!
//! * [`CheckerKind::General`]: for each pair in `S`, a breadth-first search
//!   with `S` minus the pair removed must still reach the partner at the
//!   original distance. Needs a connected graph.
//! * [`CheckerKind::Diameter2`]: every non-adjacent pair in `S` has a common
//!   neighbour outside `S`. Needs diameter at most 2.
//! * [`CheckerKind::Lemma4`]: `G[S]` has maximum degree at most 1. Needs a
//!   triangle-free graph in which non-adjacent pairs have exactly one common
//!   neighbour.
//!
//! Where their preconditions overlap the three agree, so [`MvChecker::new`]
//! simply picks the cheapest applicable one, in the order above reversed.

mod analysis;
mod polynomial;

pub use analysis::{analyze_set, SetAnalysis};
pub use polynomial::{
    count_mv_sets_of_size, visibility_polynomial, VisibilityPolynomial, ENUMERATION_GUARD,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{above, profile, Graph, GraphProfile, VertexSet};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckerKind {
    Lemma4,
    #[serde(rename = "diam2")]
    Diameter2,
    General,
}

impl CheckerKind {
    /// Fastest checker whose precondition holds for a graph with this profile.
    pub fn select(p: &GraphProfile) -> Result<Self> {
        if p.lemma4_class && p.connected {
            Ok(CheckerKind::Lemma4)
        } else if matches!(p.diameter, Some(d) if d <= 2) {
            Ok(CheckerKind::Diameter2)
        } else if p.connected {
            Ok(CheckerKind::General)
        } else {
            Err(Error::Precondition(
                "mutual visibility is defined on connected graphs only".into(),
            ))
        }
    }

    fn check_applicable(self, p: &GraphProfile) -> Result<()> {
        match self {
            CheckerKind::Lemma4 if !p.lemma4_class => Err(Error::Precondition(
                "induced-degree characterisation needs a triangle-free graph with unique common neighbours"
                    .into(),
            )),
            CheckerKind::Diameter2 if !matches!(p.diameter, Some(d) if d <= 2) => {
                Err(Error::Precondition(format!(
                    "common-neighbour characterisation needs diameter at most 2, graph has {}",
                    p.diameter.map_or("infinite".to_string(), |d| d.to_string())
                )))
            }
            CheckerKind::General if !p.connected => Err(Error::Precondition(
                "geodesic check needs a connected graph".into(),
            )),
            _ => Ok(()),
        }
    }
}

/// A mutual-visibility oracle bound to one graph.
#[derive(Clone, Debug)]
pub struct MvChecker<'g> {
    g: &'g Graph,
    kind: CheckerKind,
    /// All-pairs distances, only filled for the general checker.
    dist: Vec<Vec<u8>>,
}

impl<'g> MvChecker<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        let kind = CheckerKind::select(&profile(g))?;
        Ok(Self::build(g, kind))
    }

    pub fn with_kind(g: &'g Graph, kind: CheckerKind) -> Result<Self> {
        kind.check_applicable(&profile(g))?;
        Ok(Self::build(g, kind))
    }

    /// As [`MvChecker::with_kind`] when the caller already holds the profile.
    pub fn with_profile(g: &'g Graph, p: &GraphProfile, kind: CheckerKind) -> Result<Self> {
        kind.check_applicable(p)?;
        Ok(Self::build(g, kind))
    }

    fn build(g: &'g Graph, kind: CheckerKind) -> Self {
        let dist = if kind == CheckerKind::General {
            (0..g.n())
                .map(|v| {
                    g.distances_from(v)
                        .into_iter()
                        .map(|d| d.expect("connected") as u8)
                        .collect()
                })
                .collect()
        } else {
            Vec::new()
        };
        MvChecker { g, kind, dist }
    }

    pub fn kind(&self) -> CheckerKind {
        self.kind
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    /// Whether `set` is a mutual-visibility set. `set` must fit the graph.
    #[inline]
    pub fn is_mv(&self, set: VertexSet) -> bool {
        match self.kind {
            CheckerKind::Lemma4 => induced_degree_at_most_one(self.g, set),
            CheckerKind::Diameter2 => common_neighbour_outside(self.g, set),
            CheckerKind::General => self.geodesics_avoid(set),
        }
    }

    fn geodesics_avoid(&self, set: VertexSet) -> bool {
        let rows = self.g.rows();
        let all = self.g.vertices().mask();
        let s = set.mask();
        for u in set {
            let later = s & above(u);
            for v in VertexSet::from_mask(later) {
                let target = self.dist[u][v] as usize;
                if target <= 1 {
                    continue;
                }
                let allowed = all & !s | (1 << u) | (1 << v);
                let mut seen = 1u64 << u;
                let mut frontier = seen;
                let mut reached = false;
                for _ in 0..target {
                    let mut next = 0u64;
                    for x in VertexSet::from_mask(frontier) {
                        next |= rows[x];
                    }
                    next &= allowed & !seen;
                    if next & (1 << v) != 0 {
                        reached = true;
                        break;
                    }
                    if next == 0 {
                        break;
                    }
                    seen |= next;
                    frontier = next;
                }
                if !reached {
                    return false;
                }
            }
        }
        true
    }
}

#[inline]
fn induced_degree_at_most_one(g: &Graph, set: VertexSet) -> bool {
    let rows = g.rows();
    let s = set.mask();
    set.iter().all(|v| (rows[v] & s).count_ones() <= 1)
}

#[inline]
fn common_neighbour_outside(g: &Graph, set: VertexSet) -> bool {
    let rows = g.rows();
    let s = set.mask();
    for u in set {
        let later_nonadjacent = s & !rows[u] & above(u);
        for v in VertexSet::from_mask(later_nonadjacent) {
            if rows[u] & rows[v] & !s == 0 {
                return false;
            }
        }
    }
    true
}

/// Geodesic-based check, valid on any connected graph.
pub fn is_mv_set_general(g: &Graph, set: VertexSet) -> Result<bool> {
    g.check_set(set)?;
    Ok(MvChecker::with_kind(g, CheckerKind::General)?.is_mv(set))
}

/// Common-neighbour check for graphs of diameter at most 2.
pub fn is_mv_set_diam2(g: &Graph, set: VertexSet) -> Result<bool> {
    g.check_set(set)?;
    Ok(MvChecker::with_kind(g, CheckerKind::Diameter2)?.is_mv(set))
}

/// Induced-degree check for triangle-free graphs with unique common neighbours.
pub fn is_mv_set_lemma4(g: &Graph, set: VertexSet) -> Result<bool> {
    g.check_set(set)?;
    Ok(MvChecker::with_kind(g, CheckerKind::Lemma4)?.is_mv(set))
}

/// Checks `set` with the automatically selected checker.
pub fn is_mv_set(g: &Graph, set: VertexSet) -> Result<(bool, CheckerKind)> {
    g.check_set(set)?;
    let checker = MvChecker::new(g)?;
    Ok((checker.is_mv(set), checker.kind()))
}
