//! Include/exclude search over vertex subsets for hereditary properties,
//! with `|S| + |remaining|` as the bound. Used for graphs outside the
//! induced-degree class.

use super::SolveOptions;
use crate::graph::VertexSet;
use crate::visibility::MvChecker;

pub(crate) struct Outcome {
    pub best: VertexSet,
    pub nodes: u64,
    pub proven: bool,
}

struct State<'c, 'g> {
    checker: &'c MvChecker<'g>,
    options: SolveOptions,
    best: VertexSet,
    nodes: u64,
    aborted: bool,
    /// Exact size wanted in the lexicographic pass.
    target: Option<usize>,
}

pub(crate) fn maximize(checker: &MvChecker<'_>, options: SolveOptions) -> Outcome {
    let n = checker.graph().n();
    let mut state = State {
        checker,
        options,
        best: VertexSet::EMPTY,
        nodes: 0,
        aborted: false,
        target: None,
    };
    state.search(VertexSet::EMPTY, 0, n);
    if !options.canonical || state.aborted {
        return Outcome {
            best: state.best,
            nodes: state.nodes,
            proven: !state.aborted,
        };
    }
    // Include-first in index order meets the lexicographically smallest set
    // of the optimal size first.
    let size = state.best.len();
    let first_nodes = state.nodes;
    let mut lex = State {
        checker,
        options,
        best: VertexSet::EMPTY,
        nodes: first_nodes,
        aborted: false,
        target: Some(size),
    };
    lex.search(VertexSet::EMPTY, 0, n);
    Outcome {
        best: lex.best,
        nodes: lex.nodes,
        proven: !lex.aborted,
    }
}

impl State<'_, '_> {
    fn done(&self) -> bool {
        matches!(self.target, Some(t) if self.best.len() == t)
    }

    fn search(&mut self, set: VertexSet, next: usize, n: usize) {
        self.nodes += 1;
        if self.options.limits.exceeded(self.nodes) {
            self.aborted = true;
            return;
        }
        if set.len() > self.best.len() || (self.target == Some(set.len()) && !self.done()) {
            self.best = set;
        }
        let needed = match self.target {
            Some(t) => t,
            None => self.best.len() + 1,
        };
        if set.len() + (n - next) < needed || self.done() {
            return;
        }
        for v in next..n {
            if set.len() + (n - v) < needed {
                return;
            }
            let grown = set.with(v);
            if self.checker.is_mv(grown) {
                self.search(grown, v + 1, n);
                if self.aborted || self.done() {
                    return;
                }
            }
        }
    }
}
