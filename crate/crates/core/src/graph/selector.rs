//! Textual graph selectors: `petersen`, `hoffman-singleton`, `cycle:<n>`,
//! `complete:<n>` and `file:<path>`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::{
    build_complete, build_cycle, build_hoffman_singleton, build_petersen, read_edge_list, Graph,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Petersen,
    HoffmanSingleton,
    Cycle(usize),
    Complete(usize),
    File(PathBuf),
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Petersen => Ok(build_petersen()),
            GraphSpec::HoffmanSingleton => build_hoffman_singleton(),
            GraphSpec::Cycle(n) => build_cycle(*n),
            GraphSpec::Complete(n) => build_complete(*n),
            GraphSpec::File(path) => read_edge_list(path),
        }
    }
}

fn order(family: &str, text: &str) -> Result<usize> {
    text.parse()
        .map_err(|_| Error::Argument(format!("{family}:<n> needs a vertex count, got {text:?}")))
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            None if s == "petersen" => Ok(GraphSpec::Petersen),
            None if s == "hoffman-singleton" => Ok(GraphSpec::HoffmanSingleton),
            Some(("cycle", n)) => Ok(GraphSpec::Cycle(order("cycle", n)?)),
            Some(("complete", n)) => Ok(GraphSpec::Complete(order("complete", n)?)),
            Some(("file", path)) if !path.is_empty() => Ok(GraphSpec::File(path.into())),
            _ => Err(Error::Argument(format!(
                "unknown graph {s:?}; expected petersen, hoffman-singleton, cycle:<n>, complete:<n> or file:<path>"
            ))),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Petersen => f.write_str("petersen"),
            GraphSpec::HoffmanSingleton => f.write_str("hoffman-singleton"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}
