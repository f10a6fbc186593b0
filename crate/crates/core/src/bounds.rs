//! Closed-form upper bounds on the size of a mutual-visibility set.
//!
//! Every formula is evaluated in exact integer arithmetic. The raw functions
//! take their parameters on trust; [`bound_report`] checks each bound's
//! hypotheses against the graph profile and only reports bounds that apply.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{profile, Graph, GraphProfile};

/// Smallest result of [`jensen_bound`] for which the underlying argument
/// holds.
pub const JENSEN_REGIME_MIN: u64 = 8;

fn range(what: &str) -> Error {
    Error::Range(format!("{what} overflows 64-bit arithmetic"))
}

fn to_u64(x: i128, what: &str) -> Result<u64> {
    u64::try_from(x).map_err(|_| range(what))
}

/// Largest integer `s ≥ 0` with `s² + b·s + c ≤ 0`, for `c ≤ 0`.
fn largest_root(b: i128, c: i128, what: &str) -> Result<u64> {
    debug_assert!(c <= 0);
    let disc = b
        .checked_mul(b)
        .and_then(|bb| c.checked_mul(4).and_then(|c4| bb.checked_sub(c4)))
        .ok_or_else(|| range(what))?;
    // floor((-b + floor(√D)) / 2) = floor((-b + √D) / 2).
    let root = (disc as u128).isqrt() as i128;
    to_u64((root - b).div_euclid(2).max(0), what)
}

/// `s² + (Δ²−2Δ−1)s − Δ(Δ−1)n ≤ 0`, solved for the largest integer `s`.
/// Valid for graphs of diameter 2 with maximum degree `Δ`.
pub fn prop1_bound(n: u64, max_degree: u64) -> Result<u64> {
    if n < 2 || max_degree < 2 {
        return Err(Error::Argument(format!(
            "need n >= 2 and maximum degree >= 2, got n = {n}, maximum degree = {max_degree}"
        )));
    }
    let (n, d) = (n as i128, max_degree as i128);
    let b = d
        .checked_mul(d)
        .map(|dd| dd - 2 * d - 1)
        .ok_or_else(|| range("prop1"))?;
    let c = d
        .checked_mul(d - 1)
        .and_then(|x| x.checked_mul(n))
        .ok_or_else(|| range("prop1"))?;
    largest_root(b, -c, "prop1")
}

/// `⌊−2 + √(4 + d(d−1)n)⌋` for triangle-free `d`-regular graphs in which
/// non-adjacent vertices have a unique common neighbour.
pub fn lemma6_bound(n: u64, d: u64) -> Result<u64> {
    if d < 3 {
        return Err(Error::Hypothesis(format!("requires degree >= 3, got {d}")));
    }
    let inner = (d as u128)
        .checked_mul(d as u128 - 1)
        .and_then(|x| x.checked_mul(n as u128))
        .and_then(|x| x.checked_add(4))
        .ok_or_else(|| range("lemma6"))?;
    // inner >= 4, so the square root is at least 2.
    to_u64(inner.isqrt() as i128 - 2, "lemma6")
}

/// `⌊dn / (2d−1)⌋` from double counting the edges leaving the set.
pub fn degree_count_bound(n: u64, d: u64) -> Result<u64> {
    if d < 1 {
        return Err(Error::Argument("requires degree >= 1".into()));
    }
    let num = (d as u128)
        .checked_mul(n as u128)
        .ok_or_else(|| range("degree_count"))?;
    to_u64((num / (2 * d as u128 - 1)) as i128, "degree_count")
}

/// Largest `s ≥ 0` with `(n−s)(s+d−3) ≥ (d−1)²s`, i.e.
/// `s² + ((d−1)² + d − 3 − n)s − n(d−3) ≤ 0`.
///
/// The inequality comes from a convexity argument that needs `s ≥ 8`;
/// smaller results are still returned and callers should flag them with
/// [`JENSEN_REGIME_MIN`].
pub fn jensen_bound(n: u64, d: u64) -> Result<u64> {
    if d < 3 {
        return Err(Error::Hypothesis(format!("requires degree >= 3, got {d}")));
    }
    let (n, d) = (n as i128, d as i128);
    let b = (d - 1)
        .checked_mul(d - 1)
        .map(|sq| sq + d - 3 - n)
        .ok_or_else(|| range("jensen"))?;
    let c = n.checked_mul(d - 3).ok_or_else(|| range("jensen"))?;
    largest_root(b, -c, "jensen")
}

/// `1 + d·Σ_{i<k} (d−1)^i`, the largest order of a graph with maximum
/// degree `d` and diameter `k`.
pub fn moore_bound(d: u64, k: u64) -> Result<u64> {
    if d < 2 || k < 1 {
        return Err(Error::Argument(format!(
            "need d >= 2 and k >= 1, got d = {d}, k = {k}"
        )));
    }
    let mut sum: u64 = 0;
    let mut power: u64 = 1;
    for i in 0..k {
        sum = sum.checked_add(power).ok_or_else(|| range("moore bound"))?;
        if i + 1 < k {
            power = power
                .checked_mul(d - 1)
                .ok_or_else(|| range("moore bound"))?;
        }
    }
    d.checked_mul(sum)
        .and_then(|x| x.checked_add(1))
        .ok_or_else(|| range("moore bound"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Applicability {
    /// Whether the graph satisfies the bound's hypotheses.
    pub holds: bool,
    /// Why the bound is absent, or a caveat on a present value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Applicability {
    fn holds() -> Self {
        Applicability {
            holds: true,
            reason: None,
        }
    }

    fn with_note(note: &str) -> Self {
        Applicability {
            holds: true,
            reason: Some(note.into()),
        }
    }

    fn fails(reason: String) -> Self {
        Applicability {
            holds: false,
            reason: Some(reason),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundApplicability {
    pub prop1: Applicability,
    pub lemma6: Applicability,
    pub degree_count: Applicability,
    pub jensen: Applicability,
    pub moore_n: Applicability,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub prop1: Option<u64>,
    pub lemma6: Option<u64>,
    pub degree_count: Option<u64>,
    pub jensen: Option<u64>,
    /// Moore bound for the graph's maximum degree and diameter.
    pub moore_n: Option<u64>,
    pub applicability: BoundApplicability,
}

impl BoundReport {
    /// The smallest bound present.
    pub fn best(&self) -> Option<u64> {
        [self.prop1, self.lemma6, self.degree_count, self.jensen]
            .into_iter()
            .flatten()
            .min()
    }
}

const JENSEN_NOTE: &str = "generalised from the degree-7 case by the same argument";

/// First failing hypothesis among `checks`, if any.
fn first_failure(checks: &[(bool, &dyn Fn() -> String)]) -> Option<String> {
    checks.iter().find(|(ok, _)| !ok).map(|(_, why)| why())
}

fn evaluate(
    failure: Option<String>,
    compute: impl FnOnce() -> Result<u64>,
) -> (Option<u64>, Applicability) {
    match failure {
        Some(reason) => (None, Applicability::fails(reason)),
        None => match compute() {
            Ok(v) => (Some(v), Applicability::holds()),
            Err(e) => (None, Applicability::fails(e.to_string())),
        },
    }
}

/// All bounds whose hypotheses can be confirmed from the profile of `g`.
pub fn bound_report(g: &Graph) -> BoundReport {
    report_for_profile(&profile(g))
}

pub fn report_for_profile(p: &GraphProfile) -> BoundReport {
    let n = p.n as u64;
    let delta = p.max_degree as u64;
    let degree = p.degree.unwrap_or(p.max_degree) as u64;

    let connected = || "graph is disconnected".to_string();
    let diameter_two = || match p.diameter {
        Some(d) => format!("diameter is {d}, not 2"),
        None => "graph is disconnected".to_string(),
    };
    let regular = || "graph is not regular".to_string();
    let triangle_free = || "triangle-free fails".to_string();
    let unique = || "unique-common-neighbour fails".to_string();
    let degree_three = || format!("degree {degree} < 3");

    let (prop1, prop1_app) = evaluate(
        first_failure(&[
            (p.connected, &connected),
            (p.diameter == Some(2), &diameter_two),
        ]),
        || prop1_bound(n, delta),
    );

    let lemma4_regular: [(bool, &dyn Fn() -> String); 4] = [
        (p.connected, &connected),
        (p.is_regular, &regular),
        (p.triangle_free, &triangle_free),
        (p.unique_common_neighbour, &unique),
    ];
    let (lemma6, lemma6_app) = evaluate(
        first_failure(&[&lemma4_regular[..], &[(degree >= 3, &degree_three)]].concat()),
        || lemma6_bound(n, degree),
    );
    let (degree_count, degree_count_app) = evaluate(first_failure(&lemma4_regular), || {
        degree_count_bound(n, degree)
    });
    let (jensen, mut jensen_app) = evaluate(
        first_failure(&[&lemma4_regular[..], &[(degree >= 3, &degree_three)]].concat()),
        || jensen_bound(n, degree),
    );
    if let Some(s) = jensen {
        jensen_app = if s < JENSEN_REGIME_MIN {
            Applicability::with_note(&format!(
                "{JENSEN_NOTE}; value {s} < {JENSEN_REGIME_MIN} is outside the range where the argument applies"
            ))
        } else {
            Applicability::with_note(JENSEN_NOTE)
        };
    }

    let (moore_n, moore_app) = match p.diameter {
        Some(k) if k >= 1 && delta >= 2 => evaluate(None, || moore_bound(delta, k as u64)),
        Some(_) => (None, Applicability::fails("maximum degree < 2".into())),
        None => (None, Applicability::fails(connected())),
    };

    BoundReport {
        prop1,
        lemma6,
        degree_count,
        jensen,
        moore_n,
        applicability: BoundApplicability {
            prop1: prop1_app,
            lemma6: lemma6_app,
            degree_count: degree_count_app,
            jensen: jensen_app,
            moore_n: moore_app,
        },
    }
}
