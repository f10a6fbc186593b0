//! Fixed-value checks for the Petersen and Hoffman–Singleton graphs, run by
//! the `verify-paper` command.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bounds::{bound_report, moore_bound};
use crate::error::Result;
use crate::graph::{build_petersen, profile, Graph, VertexSet};
use crate::solver::{
    build_ip_model, count_independent_k_sets, count_induced_k_matchings, export_lp,
    max_dissociation, max_induced_matching, mu_exact, parse_lp, verify_certificate, SolveOptions,
};
use crate::visibility::{analyze_set, visibility_polynomial, MvChecker};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Petersen,
    HoffmanSingleton,
    Moore,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub family: Family,
    pub name: &'static str,
    pub expected: String,
    pub got: String,
    pub passed: bool,
    #[serde(rename = "ms")]
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

/// Builds the Hoffman–Singleton graph; replaceable for negative controls.
pub type Builder = fn() -> Result<Graph>;

struct Runner {
    only: Option<Family>,
    rows: Vec<CheckRow>,
}

impl Runner {
    fn check<T: ToString>(
        &mut self,
        family: Family,
        name: &'static str,
        expected: &str,
        run: impl FnOnce() -> Result<T>,
    ) {
        if self.only.is_some_and(|f| f != family) {
            return;
        }
        let start = Instant::now();
        let got = match run() {
            Ok(v) => v.to_string(),
            Err(e) => format!("error: {e}"),
        };
        self.rows.push(CheckRow {
            family,
            name,
            passed: got == expected,
            expected: expected.to_string(),
            got,
            elapsed: start.elapsed(),
        });
    }
}

fn srg_summary(g: &Graph) -> String {
    let p = profile(g);
    match p.srg {
        Some(s) => format!(
            "{s} girth {} diameter {}",
            fmt_opt(p.girth),
            fmt_opt(p.diameter)
        ),
        None => "not strongly regular".into(),
    }
}

fn fmt_opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".into(), |v| v.to_string())
}

fn fmt_bounds(g: &Graph) -> String {
    let r = bound_report(g);
    [r.prop1, r.lemma6, r.degree_count, r.jensen]
        .map(|v| fmt_opt(v.map(|v| v as usize)))
        .join("/")
}

fn proven(optimum: usize, proven: bool) -> String {
    if proven {
        optimum.to_string()
    } else {
        format!("{optimum} (unproven)")
    }
}

/// Structure of every maximum set of the Petersen graph, as
/// "<count> sets, <count> perfect 3-matchings".
fn petersen_maximum_sets(g: &Graph) -> Result<String> {
    let checker = MvChecker::new(g)?;
    let sets: Vec<VertexSet> = (0u64..1 << g.n())
        .map(VertexSet::from_mask)
        .filter(|s| s.len() == 6 && checker.is_mv(*s))
        .collect();
    let mut matchings = 0;
    for s in &sets {
        let a = analyze_set(g, *s)?;
        if a.matching_edges.len() == 3 && a.isolated_count == 0 {
            matchings += 1;
        }
    }
    Ok(format!(
        "{} sets, {matchings} perfect 3-matchings",
        sets.len()
    ))
}

/// Edges `uv` whose far set `V \ (N(u) ∪ N(v))` has four vertices inducing
/// two disjoint edges.
fn petersen_far_sets(g: &Graph) -> String {
    let good = g
        .edges()
        .filter(|&(u, v)| {
            let far = g.vertices() - (g.neighbors(u) | g.neighbors(v));
            far.len() == 4
                && g.edges_within(far) == 2
                && far.iter().all(|x| g.degree_in(x, far) == 1)
        })
        .count();
    format!("{good}/{}", g.edge_count())
}

/// `C(s,2) − e(S) = Σ_t C(k_t,2)` on every mutual-visibility set.
fn pair_identity_on_mv_sets(g: &Graph) -> Result<String> {
    let checker = MvChecker::new(g)?;
    let (mut total, mut holding) = (0, 0);
    for s in (0u64..1 << g.n())
        .map(VertexSet::from_mask)
        .filter(|s| checker.is_mv(*s))
    {
        let a = analyze_set(g, s)?;
        total += 1;
        if a.nonadjacent_pairs() == a.outside_pair_count() {
            holding += 1;
        }
    }
    Ok(format!("{holding}/{total}"))
}

fn hs_certificate(g: &Graph) -> Result<String> {
    let r = mu_exact(g, SolveOptions::default())?;
    let a = verify_certificate(g, r.certificate.vertices(), 20)?;
    Ok(format!(
        "e(S)={} k_t={} on {} vertices",
        a.e_s,
        fmt_opt(a.uniform_k()),
        a.k_histogram.values().sum::<usize>()
    ))
}

fn lp_round_trip(g: &Graph) -> Result<String> {
    let mut text = Vec::new();
    export_lp(&build_ip_model(g), &mut text)?;
    let text = String::from_utf8(text).expect("LP export is ASCII");
    let recovered = parse_lp(&text)?.to_graph()?;
    let r = max_dissociation(&recovered, SolveOptions::default());
    Ok(proven(r.optimum, r.proven))
}

/// Runs every check, or only those for `only`.
pub fn run_checks(only: Option<Family>) -> Vec<CheckRow> {
    run_checks_with(only, crate::graph::build_hoffman_singleton)
}

/// As [`run_checks`] with a custom Hoffman–Singleton builder.
pub fn run_checks_with(only: Option<Family>, build_hs: Builder) -> Vec<CheckRow> {
    use Family::*;
    let mut r = Runner {
        only,
        rows: Vec::new(),
    };
    let p = build_petersen();

    r.check(
        Petersen,
        "strongly regular",
        "srg(10,3,0,1) girth 5 diameter 2",
        || Ok(srg_summary(&p)),
    );
    r.check(
        Petersen,
        "visibility polynomial",
        "1 + 10x + 45x^2 + 90x^3 + 80x^4 + 30x^5 + 5x^6",
        || visibility_polynomial(&p, false),
    );
    r.check(Petersen, "mutual-visibility number", "6", || {
        mu_exact(&p, SolveOptions::default()).map(|r| proven(r.optimum, r.proven))
    });
    r.check(
        Petersen,
        "maximum sets",
        "5 sets, 5 perfect 3-matchings",
        || petersen_maximum_sets(&p),
    );
    r.check(Petersen, "induced 2-matchings", "15", || {
        Ok(count_induced_k_matchings(&p, 2))
    });
    r.check(Petersen, "induced 3-matchings", "5", || {
        Ok(count_induced_k_matchings(&p, 3))
    });
    r.check(Petersen, "independent 4-sets", "5", || {
        Ok(count_independent_k_sets(&p, 4))
    });
    r.check(Petersen, "far sets of edges are 2K2", "15/15", || {
        Ok(petersen_far_sets(&p))
    });
    r.check(Petersen, "pair identity on MV sets", "261/261", || {
        pair_identity_on_mv_sets(&p)
    });
    r.check(
        Petersen,
        "bounds prop1/lemma6/degree/jensen",
        "6/6/6/6",
        || Ok(fmt_bounds(&p)),
    );

    let hs = build_hs().map_err(|e| e.to_string());
    let with_hs = |f: &dyn Fn(&Graph) -> Result<String>| match &hs {
        Ok(g) => f(g),
        Err(message) => Ok(format!("error: {message}")),
    };
    r.check(
        HoffmanSingleton,
        "strongly regular",
        "srg(50,7,0,1) girth 5 diameter 2",
        || with_hs(&|g| Ok(srg_summary(g))),
    );
    r.check(HoffmanSingleton, "mutual-visibility number", "20", || {
        with_hs(&|g| mu_exact(g, SolveOptions::default()).map(|r| proven(r.optimum, r.proven)))
    });
    r.check(
        HoffmanSingleton,
        "certificate structure",
        "e(S)=10 k_t=4 on 30 vertices",
        || with_hs(&hs_certificate),
    );
    r.check(HoffmanSingleton, "induced matching number", "10", || {
        with_hs(&|g| {
            let r = max_induced_matching(g, SolveOptions::default());
            Ok(proven(r.optimum, r.proven))
        })
    });
    r.check(
        HoffmanSingleton,
        "bounds prop1/lemma6/degree/jensen",
        "31/43/26/20",
        || with_hs(&|g| Ok(fmt_bounds(g))),
    );
    r.check(HoffmanSingleton, "LP export round trip", "20", || {
        with_hs(&lp_round_trip)
    });

    for (d, name, expected) in [
        (2, "Moore bound d=2", "5"),
        (3, "Moore bound d=3", "10"),
        (7, "Moore bound d=7", "50"),
        (57, "Moore bound d=57", "3250"),
    ] {
        r.check(Moore, name, expected, || moore_bound(d, 2));
    }
    r.rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{hoffman_singleton_unchecked, validate_srg, Srg};

    #[test]
    fn all_checks_pass() {
        let rows = run_checks(None);
        for row in &rows {
            assert!(
                row.passed,
                "{}: expected {}, got {}",
                row.name, row.expected, row.got
            );
        }
        assert!(rows.iter().any(|r| r.family == Family::HoffmanSingleton));
    }

    #[test]
    fn filter_selects_one_family() {
        let rows = run_checks(Some(Family::Petersen));
        assert!(!rows.is_empty());
        assert!(rows
            .iter()
            .all(|r| r.family == Family::Petersen && r.passed));
    }

    fn corrupted() -> Result<Graph> {
        let g = hoffman_singleton_unchecked();
        let edges = g.edges().skip(1);
        let broken = Graph::from_edges(50, edges)?;
        validate_srg(broken, Srg::new(50, 7, 0, 1))
    }

    #[test]
    fn corrupted_builder_fails_validation_row() {
        assert!(matches!(corrupted(), Err(Error::Construction(_))));
        let rows = run_checks_with(Some(Family::HoffmanSingleton), corrupted);
        let srg = rows.iter().find(|r| r.name == "strongly regular").unwrap();
        assert!(!srg.passed);
        assert!(srg.got.contains("construction failed"), "{}", srg.got);
        assert!(rows.iter().all(|r| !r.passed));
    }
}
