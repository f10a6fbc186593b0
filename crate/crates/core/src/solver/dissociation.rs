//! Branch-and-bound for maximum dissociation sets (`Δ(G[S]) ≤ 1`) and, with
//! `require_partner`, for maximum induced matchings (every chosen vertex has
//! exactly one chosen neighbour).
//!
//! A node is a pair of disjoint masks: `inc` (chosen) and `und` (undecided);
//! everything else is excluded. Before branching, undecided vertices that
//! can no longer be added are excluded: those adjacent to a chosen vertex
//! that already has its partner, and those adjacent to two chosen vertices.

use super::Limits;
use crate::graph::VertexSet;

pub(crate) struct Outcome {
    pub best: VertexSet,
    pub nodes: u64,
    pub proven: bool,
}

pub(crate) struct Search<'a> {
    rows: &'a [u64],
    require_partner: bool,
    /// Apply the safe inclusion rules; off when the lexicographic order of
    /// the reported optimum matters.
    reductions: bool,
    best: u64,
    best_len: u32,
    /// Stop as soon as a set of this size is found.
    target: Option<u32>,
    nodes: u64,
    limits: Limits,
    aborted: bool,
}

impl<'a> Search<'a> {
    pub fn new(rows: &'a [u64], require_partner: bool, limits: Limits) -> Self {
        Search {
            rows,
            require_partner,
            reductions: true,
            best: 0,
            best_len: 0,
            target: None,
            nodes: 0,
            limits,
            aborted: false,
        }
    }

    /// Finds the first set of exactly `size` vertices in include-first index
    /// order, i.e. the lexicographically smallest one.
    pub fn first_of_size(mut self, size: u32) -> Outcome {
        self.reductions = false;
        self.target = Some(size);
        self.best_len = size.saturating_sub(1);
        let all = VertexSet::full(self.rows.len()).mask();
        self.lex_node(0, all);
        let found = self.best.count_ones() == size;
        Outcome {
            best: VertexSet::from_mask(self.best),
            nodes: self.nodes,
            proven: found || !self.aborted,
        }
    }

    pub fn maximize(mut self) -> Outcome {
        let all = VertexSet::full(self.rows.len()).mask();
        self.node(0, all);
        Outcome {
            best: VertexSet::from_mask(self.best),
            nodes: self.nodes,
            proven: !self.aborted,
        }
    }

    /// Number of sets with exactly `size` vertices. No reductions are
    /// applied; include/exclude branching partitions the sets.
    pub fn count(mut self, size: u32) -> (u64, u64, bool) {
        let all = VertexSet::full(self.rows.len()).mask();
        let mut total = 0;
        self.count_node(0, all, size, &mut total);
        (total, self.nodes, !self.aborted)
    }

    fn count_node(&mut self, inc: u64, und: u64, size: u32, total: &mut u64) {
        if !self.tick() {
            return;
        }
        let (und, partnered) = self.propagate(inc, und);
        let have = inc.count_ones();
        if have == size {
            if !self.require_partner || inc & !partnered == 0 {
                *total += 1;
            }
            return;
        }
        if und == 0 || have + self.bound(inc, und, partnered) < size {
            return;
        }
        let v = self.branch_vertex(und);
        let without = und & !(1 << v);
        self.count_node(inc | (1 << v), without, size, total);
        if self.aborted {
            return;
        }
        self.count_node(inc, without, size, total);
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.limits.exceeded(self.nodes) {
            self.aborted = true;
        }
        !self.aborted
    }

    /// Removes undecided vertices that cannot join `inc`. Returns the
    /// pruned undecided mask and the partnered part of `inc`.
    #[inline]
    fn propagate(&self, inc: u64, mut und: u64) -> (u64, u64) {
        let mut once = 0u64;
        let mut twice = 0u64;
        let mut partnered = 0u64;
        let mut partner_cover = 0u64;
        for v in VertexSet::from_mask(inc) {
            let r = self.rows[v];
            twice |= once & r;
            once |= r;
            if r & inc != 0 {
                partnered |= 1 << v;
                partner_cover |= r;
            }
        }
        und &= !(twice | partner_cover);
        if self.require_partner {
            // A vertex with no possible partner can never be chosen.
            let mut dead = 0u64;
            for u in VertexSet::from_mask(und) {
                if self.rows[u] & (und | (inc & !partnered)) == 0 {
                    dead |= 1 << u;
                }
            }
            und &= !dead;
        }
        (und, partnered)
    }

    /// Upper bound on how many vertices of `und` can still be added.
    #[inline]
    fn bound(&self, inc: u64, und: u64, partnered: u64) -> u32 {
        let mut rem = und;
        let mut total = 0u32;
        // Each unpartnered chosen vertex admits at most one more neighbour.
        // These neighbourhoods are disjoint after propagation.
        for v in VertexSet::from_mask(inc & !partnered) {
            let group = self.rows[v] & rem;
            if group != 0 {
                total += 1;
                rem &= !group;
            }
        }
        // A path on three vertices contributes at most two.
        let mut scan = rem;
        while scan != 0 {
            let c = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if rem & (1 << c) == 0 {
                continue;
            }
            let nb = self.rows[c] & rem;
            if nb.count_ones() >= 2 {
                let a = nb & nb.wrapping_neg();
                let rest = nb & !a;
                let b = rest & rest.wrapping_neg();
                rem &= !((1 << c) | a | b);
                total += 2;
            }
        }
        total + rem.count_ones()
    }

    fn node(&mut self, mut inc: u64, und: u64) {
        if !self.tick() {
            return;
        }
        let (mut und, mut partnered) = self.propagate(inc, und);

        if self.reductions && !self.require_partner {
            loop {
                // Free vertices: no chosen and no undecided neighbour.
                let mut free = 0u64;
                let mut pendant = None;
                for u in VertexSet::from_mask(und) {
                    let r = self.rows[u];
                    if r & inc != 0 {
                        continue;
                    }
                    let open = r & und;
                    match open.count_ones() {
                        0 => free |= 1 << u,
                        1 if pendant.is_none()
                            && self.rows[open.trailing_zeros() as usize] & inc == 0 =>
                        {
                            pendant = Some(u)
                        }
                        _ => {}
                    }
                }
                if free != 0 {
                    inc |= free;
                    und &= !free;
                    continue;
                }
                // A vertex whose single open neighbour `w` has no chosen
                // neighbour can be taken: an optimum containing `w` can swap
                // `w`'s partner (which is undecided) for it.
                if let Some(u) = pendant {
                    inc |= 1 << u;
                    und &= !(1 << u);
                    (und, partnered) = self.propagate(inc, und);
                    continue;
                }
                break;
            }
        }

        self.record_if_valid(inc, partnered);
        if und == 0 {
            return;
        }
        let have = inc.count_ones();
        let upper = have + self.bound(inc, und, partnered);
        if !self.can_improve(upper) {
            return;
        }

        let v = self.branch_vertex(und);
        let without = und & !(1 << v);
        self.node(inc | (1 << v), without);
        if self.aborted {
            return;
        }
        self.node(inc, without);
    }

    /// Include-first search in index order, used for the lexicographic pass.
    fn lex_node(&mut self, inc: u64, und: u64) {
        if !self.tick() {
            return;
        }
        let (und, partnered) = self.propagate(inc, und);
        self.record_if_valid(inc, partnered);
        if self.found_target() || und == 0 {
            return;
        }
        let upper = inc.count_ones() + self.bound(inc, und, partnered);
        if !self.can_improve(upper) {
            return;
        }
        let v = und.trailing_zeros() as usize;
        let without = und & !(1 << v);
        self.lex_node(inc | (1 << v), without);
        if self.aborted || self.found_target() {
            return;
        }
        self.lex_node(inc, without);
    }

    #[inline]
    fn found_target(&self) -> bool {
        matches!(self.target, Some(t) if self.best.count_ones() == t && self.best_len == t)
    }

    #[inline]
    fn can_improve(&self, upper: u32) -> bool {
        let upper = if self.require_partner {
            upper & !1
        } else {
            upper
        };
        upper > self.best_len
    }

    #[inline]
    fn record_if_valid(&mut self, inc: u64, partnered: u64) {
        if self.require_partner && inc & !partnered != 0 {
            return;
        }
        if let Some(t) = self.target {
            if inc.count_ones() == t {
                self.best = inc;
                self.best_len = t;
            }
        } else if inc.count_ones() > self.best_len {
            self.best = inc;
            self.best_len = inc.count_ones();
        }
    }

    /// Highest residual degree, lowest index on ties.
    #[inline]
    fn branch_vertex(&self, und: u64) -> usize {
        let mut best_v = und.trailing_zeros() as usize;
        let mut best_d = 0;
        for v in VertexSet::from_mask(und) {
            let d = (self.rows[v] & und).count_ones();
            if d > best_d {
                best_d = d;
                best_v = v;
            }
        }
        best_v
    }
}
