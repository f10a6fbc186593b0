use std::fmt;

use serde::Serialize;

use super::MvChecker;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest vertex count enumerated without `force`.
pub const ENUMERATION_GUARD: usize = 30;

/// `Σ r_i x^i` where `r_i` counts the mutual-visibility sets of size `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VisibilityPolynomial {
    coefficients: Vec<u64>,
}

impl VisibilityPolynomial {
    pub fn from_coefficients(coefficients: Vec<u64>) -> Self {
        VisibilityPolynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// Number of vertices of the graph the polynomial belongs to.
    pub fn n(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, i: usize) -> u64 {
        self.coefficients.get(i).copied().unwrap_or(0)
    }

    /// Largest `i` with `r_i > 0`, i.e. the mutual-visibility number.
    pub fn degree(&self) -> usize {
        self.coefficients.iter().rposition(|&c| c > 0).unwrap_or(0)
    }

    /// Coefficients up to and including the degree.
    pub fn trimmed(&self) -> &[u64] {
        &self.coefficients[..=self.degree()]
    }
}

impl fmt::Display for VisibilityPolynomial {
    /// `1 + 10x + 45x^2 + ...`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn guard(g: &Graph, force: bool) -> Result<()> {
    if g.n() > ENUMERATION_GUARD && !force {
        return Err(Error::Refused(format!(
            "exhaustive enumeration on {} vertices exceeds the {ENUMERATION_GUARD}-vertex guard; pass --force to override",
            g.n()
        )));
    }
    Ok(())
}

/// Exact visibility polynomial of a connected graph.
///
/// Sets are grown in ascending vertex order and an extension is abandoned as
/// soon as it stops being mutually visible; every subset of a
/// mutual-visibility set is again one, so nothing is missed and each set is
/// visited once.
pub fn visibility_polynomial(g: &Graph, force: bool) -> Result<VisibilityPolynomial> {
    guard(g, force)?;
    let checker = MvChecker::new(g)?;
    let mut counts = vec![0u64; g.n() + 1];
    counts[0] = 1;
    extend(&checker, VertexSet::EMPTY, 0, usize::MAX, &mut counts);
    Ok(VisibilityPolynomial {
        coefficients: counts,
    })
}

/// `r_k` alone; explores only sets of size at most `k`.
pub fn count_mv_sets_of_size(g: &Graph, k: usize, force: bool) -> Result<u64> {
    guard(g, force)?;
    let checker = MvChecker::new(g)?;
    if k > g.n() {
        return Ok(0);
    }
    let mut counts = vec![0u64; k + 1];
    counts[0] = 1;
    extend(&checker, VertexSet::EMPTY, 0, k, &mut counts);
    Ok(counts[k])
}

fn extend(
    checker: &MvChecker<'_>,
    set: VertexSet,
    next: usize,
    max_size: usize,
    counts: &mut [u64],
) {
    if set.len() >= max_size {
        return;
    }
    let n = checker.graph().n();
    for v in next..n {
        let grown = set.with(v);
        if checker.is_mv(grown) {
            counts[grown.len()] += 1;
            extend(checker, grown, v + 1, max_size, counts);
        }
    }
}
