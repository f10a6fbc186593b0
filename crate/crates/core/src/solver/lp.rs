//! The zero-one model for mutual-visibility sets on the induced-degree class,
//! and its LP text form.
//!
//! For every vertex `v`:
//!
//! ```text
//! Σ_{u ∈ N(v)} x_u + deg(v)·x_v ≤ 1 + deg(v)
//! ```
//!
//! which is `Σ x_u ≤ 1 + deg(v)(1 − x_v)` rearranged: a chosen vertex has at
//! most one chosen neighbour, an unchosen one is unconstrained.
//!
//! Exported layout (one item per line, no indentation):
//!
//! ```text
//! Maximize
//! x0 + x1
//! Subject To
//! c0: x1 + x0 <= 2
//! c1: x0 + x1 <= 2
//! Binary
//! x0 x1
//! End
//! ```

use std::io::Write;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// `Σ coefficient·x_var ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    pub terms: Vec<(u64, usize)>,
    pub rhs: u64,
}

impl Constraint {
    pub fn lhs(&self, x: VertexSet) -> u64 {
        self.terms
            .iter()
            .filter(|&&(_, var)| x.contains(var))
            .map(|&(c, _)| c)
            .sum()
    }

    pub fn is_satisfied(&self, x: VertexSet) -> bool {
        self.lhs(x) <= self.rhs
    }
}

/// Maximise `Σ x_v` subject to one constraint per vertex, `x ∈ {0,1}^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IpModel {
    pub variables: usize,
    pub constraints: Vec<Constraint>,
}

pub fn build_ip_model(g: &Graph) -> IpModel {
    let constraints = (0..g.n())
        .map(|v| {
            let degree = g.degree(v) as u64;
            let mut terms: Vec<(u64, usize)> = g.neighbors(v).iter().map(|u| (1, u)).collect();
            terms.push((degree, v));
            Constraint {
                name: format!("c{v}"),
                terms,
                rhs: 1 + degree,
            }
        })
        .collect();
    IpModel {
        variables: g.n(),
        constraints,
    }
}

impl IpModel {
    /// `x` (as the set of variables at 1) satisfies every constraint.
    pub fn is_feasible(&self, x: VertexSet) -> bool {
        x.fits(self.variables) && self.constraints.iter().all(|c| c.is_satisfied(x))
    }

    /// Recovers the graph whose mutual-visibility model this is. Fails if
    /// the constraints are not of the per-vertex form built by
    /// [`build_ip_model`].
    pub fn to_graph(&self) -> Result<Graph> {
        if self.constraints.len() != self.variables {
            return Err(Error::Argument(format!(
                "expected one constraint per variable, found {} for {}",
                self.constraints.len(),
                self.variables
            )));
        }
        let mut edges = Vec::new();
        for (v, c) in self.constraints.iter().enumerate() {
            let bad = |why: &str| Error::Argument(format!("constraint {} for x{v}: {why}", c.name));
            let own: Vec<u64> = c.terms.iter().filter(|t| t.1 == v).map(|t| t.0).collect();
            let degree = c.terms.iter().filter(|t| t.1 != v).count() as u64;
            if own.len() != 1 || own[0] != degree {
                return Err(bad(
                    "self coefficient must equal the number of neighbour terms",
                ));
            }
            if c.rhs != 1 + degree {
                return Err(bad("right-hand side must be 1 + degree"));
            }
            for &(coef, u) in &c.terms {
                if u == v {
                    continue;
                }
                if coef != 1 {
                    return Err(bad("neighbour coefficients must be 1"));
                }
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(self.variables, edges)?;
        if build_ip_model(&g) != canonical_order(self) {
            return Err(Error::Argument("neighbour terms are not symmetric".into()));
        }
        Ok(g)
    }
}

fn canonical_order(model: &IpModel) -> IpModel {
    let mut m = model.clone();
    for (v, c) in m.constraints.iter_mut().enumerate() {
        let own = c
            .terms
            .iter()
            .copied()
            .filter(|t| t.1 == v)
            .collect::<Vec<_>>();
        c.terms.retain(|t| t.1 != v);
        c.terms.sort_by_key(|t| t.1);
        c.terms.extend(own);
        c.name = format!("c{v}");
    }
    m
}

fn write_term(out: &mut String, coef: u64, var: usize) {
    if coef == 1 {
        out.push_str(&format!("x{var}"));
    } else {
        out.push_str(&format!("{coef} x{var}"));
    }
}

fn join_terms(terms: impl Iterator<Item = (u64, usize)>) -> String {
    let mut out = String::new();
    for (i, (coef, var)) in terms.enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        write_term(&mut out, coef, var);
    }
    out
}

/// Writes `model` in LP text format (see the module docs for the layout).
pub fn export_lp<W: Write>(model: &IpModel, mut sink: W) -> Result<()> {
    writeln!(sink, "Maximize")?;
    writeln!(sink, "{}", join_terms((0..model.variables).map(|v| (1, v))))?;
    writeln!(sink, "Subject To")?;
    for c in &model.constraints {
        writeln!(
            sink,
            "{}: {} <= {}",
            c.name,
            join_terms(c.terms.iter().copied()),
            c.rhs
        )?;
    }
    writeln!(sink, "Binary")?;
    let vars: Vec<String> = (0..model.variables).map(|v| format!("x{v}")).collect();
    writeln!(sink, "{}", vars.join(" "))?;
    writeln!(sink, "End")?;
    Ok(())
}

/// Parses the LP text written by [`export_lp`].
pub fn parse_lp(text: &str) -> Result<IpModel> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut expect = |what: &str| -> Result<(usize, &str)> {
        lines.next().ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("missing {what}"),
        })
    };

    let (line, header) = expect("`Maximize`")?;
    if header != "Maximize" {
        return Err(Error::Parse {
            line,
            message: format!("expected `Maximize`, found `{header}`"),
        });
    }
    let (line, objective) = expect("objective")?;
    let objective_vars = parse_terms(objective, line)?;
    let (line, st) = expect("`Subject To`")?;
    if st != "Subject To" {
        return Err(Error::Parse {
            line,
            message: format!("expected `Subject To`, found `{st}`"),
        });
    }

    let mut constraints = Vec::new();
    let binaries = loop {
        let (line, text) = expect("`Binary`")?;
        if text == "Binary" {
            let (line, vars) = expect("binary variable list")?;
            let vars = vars
                .split_whitespace()
                .map(|t| parse_var(t, line))
                .collect::<Result<Vec<_>>>()?;
            break vars;
        }
        let (name, body) = text.split_once(':').ok_or_else(|| Error::Parse {
            line,
            message: "constraint without a name".into(),
        })?;
        let (lhs, rhs) = body.split_once("<=").ok_or_else(|| Error::Parse {
            line,
            message: "constraint without `<=`".into(),
        })?;
        let rhs = rhs.trim().parse().map_err(|_| Error::Parse {
            line,
            message: format!("bad right-hand side `{}`", rhs.trim()),
        })?;
        constraints.push(Constraint {
            name: name.trim().to_string(),
            terms: parse_terms(lhs, line)?,
            rhs,
        });
    };
    let (line, end) = expect("`End`")?;
    if end != "End" {
        return Err(Error::Parse {
            line,
            message: format!("expected `End`, found `{end}`"),
        });
    }

    let variables = binaries.len();
    if binaries.iter().enumerate().any(|(i, &v)| i != v) {
        return Err(Error::Parse {
            line: 0,
            message: "binary section must list x0..x{n-1} in order".into(),
        });
    }
    if objective_vars.iter().map(|t| t.1).ne(0..variables)
        || objective_vars.iter().any(|t| t.0 != 1)
    {
        return Err(Error::Parse {
            line: 0,
            message: "objective must be the sum of all variables".into(),
        });
    }
    if constraints
        .iter()
        .flat_map(|c| &c.terms)
        .any(|t| t.1 >= variables)
    {
        return Err(Error::Parse {
            line: 0,
            message: "constraint uses an undeclared variable".into(),
        });
    }
    Ok(IpModel {
        variables,
        constraints,
    })
}

fn parse_var(token: &str, line: usize) -> Result<usize> {
    token
        .strip_prefix('x')
        .and_then(|i| i.parse().ok())
        .ok_or_else(|| Error::Parse {
            line,
            message: format!("bad variable `{token}`"),
        })
}

fn parse_terms(text: &str, line: usize) -> Result<Vec<(u64, usize)>> {
    text.split('+')
        .map(|term| {
            let parts: Vec<&str> = term.split_whitespace().collect();
            match parts.as_slice() {
                [var] => Ok((1, parse_var(var, line)?)),
                [coef, var] => {
                    let coef = coef.parse().map_err(|_| Error::Parse {
                        line,
                        message: format!("bad coefficient `{coef}`"),
                    })?;
                    Ok((coef, parse_var(var, line)?))
                }
                _ => Err(Error::Parse {
                    line,
                    message: format!("bad term `{}`", term.trim()),
                }),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn lp_text(g: &Graph) -> String {
        let mut buf = Vec::new();
        export_lp(&build_ip_model(g), &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn k2_layout_is_exact() {
        let text = lp_text(&build_complete(2).unwrap());
        assert_eq!(
            text,
            "Maximize\nx0 + x1\nSubject To\nc0: x1 + x0 <= 2\nc1: x0 + x1 <= 2\nBinary\nx0 x1\nEnd\n"
        );
    }

    #[test]
    fn k1_model() {
        let m = build_ip_model(&build_complete(1).unwrap());
        assert_eq!(m.variables, 1);
        assert_eq!(m.constraints[0].terms, vec![(0, 0)]);
        assert_eq!(m.constraints[0].rhs, 1);
        assert!(m.is_feasible(VertexSet::singleton(0)));
        let text = lp_text(&build_complete(1).unwrap());
        assert!(text.contains("c0: 0 x0 <= 1\n"));
        assert_eq!(parse_lp(&text).unwrap(), m);
    }

    #[test]
    fn hoffman_singleton_model_shape() {
        let hs = build_hoffman_singleton().unwrap();
        let m = build_ip_model(&hs);
        assert_eq!((m.variables, m.constraints.len()), (50, 50));
        for (v, c) in m.constraints.iter().enumerate() {
            assert_eq!(c.rhs, 8);
            assert_eq!(c.terms.len(), 8);
            assert_eq!(*c.terms.last().unwrap(), (7, v));
        }
        let text = lp_text(&hs);
        assert!(text
            .lines()
            .any(|l| l.starts_with("c0: ") && l.ends_with(" + 7 x0 <= 8")));
    }

    #[test]
    fn petersen_rhs_is_four() {
        let m = build_ip_model(&build_petersen());
        assert!(m.constraints.iter().all(|c| c.rhs == 4));
    }

    #[test]
    fn feasibility_is_induced_degree_at_most_one() {
        let p = build_petersen();
        let m = build_ip_model(&p);
        for mask in 0u64..1024 {
            let s = VertexSet::from_mask(mask);
            let dissociation = s.iter().all(|v| p.degree_in(v, s) <= 1);
            assert_eq!(m.is_feasible(s), dissociation);
        }
    }

    #[test]
    fn parse_recovers_graph() {
        for g in [
            build_petersen(),
            build_hoffman_singleton().unwrap(),
            build_cycle(7).unwrap(),
        ] {
            let model = parse_lp(&lp_text(&g)).unwrap();
            assert_eq!(model, build_ip_model(&g));
            assert_eq!(model.to_graph().unwrap(), g);
        }
    }

    #[test]
    fn malformed_lp_is_rejected() {
        assert!(parse_lp("Minimize\n").is_err());
        assert!(parse_lp("Maximize\nx0\nSubject To\nc0 x0 <= 1\nBinary\nx0\nEnd\n").is_err());
        assert!(parse_lp("Maximize\nx0\nSubject To\nc0: x0 <= 1\nBinary\nx0\n").is_err());
        let asym = parse_lp(
            "Maximize\nx0 + x1\nSubject To\nc0: x1 + x0 <= 2\nc1: 0 x1 <= 1\nBinary\nx0 x1\nEnd\n",
        )
        .unwrap();
        assert!(asym.to_graph().is_err());
    }
}
