//! Maximum matching in general graphs via augmenting paths with blossom
//! contraction.
//!
//! Phases start from each free vertex in index order and search breadth
//! first, so the returned matching is deterministic for a given graph. Odd
//! cycles are contracted implicitly through the `base` array; augmenting
//! flips the matching along original vertices, so the witness needs no
//! separate expansion step.

use super::{is_matching, SearchStats, SolveResult, Stopwatch, Witness};
use crate::graph::Graph;
use std::collections::VecDeque;

const NONE: usize = usize::MAX;

/// Matching number with an explicit optimal matching as witness.
pub fn max_matching(g: &Graph) -> SolveResult {
    let sw = Stopwatch::start();
    let n = g.vertex_count();
    let mut state = Search {
        graph: g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        in_queue: vec![false; n],
    };

    let mut augmentations = 0u64;
    for v in 0..n {
        if state.mate[v] == NONE {
            if let Some(end) = state.find_augmenting_path(v) {
                state.augment(v, end);
                augmentations += 1;
            }
        }
    }

    let mut witness = Vec::new();
    for v in 0..n {
        let u = state.mate[v];
        if u != NONE && v < u {
            witness.push((v, u));
        }
    }
    let value = witness.len();
    assert!(is_matching(g, &witness));
    assert!(value <= n / 2);

    SolveResult {
        value,
        witness: Witness::Edges(witness),
        stats: SearchStats {
            nodes_explored: 0,
            augmentations,
        },
        elapsed: sw.elapsed(),
    }
}

struct Search<'g> {
    graph: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
}

impl Search<'_> {
    /// BFS for an augmenting path from the free vertex `start`; returns the
    /// free endpoint reached, with `parent` encoding the alternating path.
    fn find_augmenting_path(&mut self, start: usize) -> Option<usize> {
        let n = self.graph.vertex_count();
        for v in 0..n {
            self.parent[v] = NONE;
            self.base[v] = v;
            self.in_queue[v] = false;
        }

        let mut queue = VecDeque::new();
        queue.push_back(start);
        self.in_queue[start] = true;

        while let Some(v) = queue.pop_front() {
            for &to in self.graph.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == start || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // Two even-level vertices meet: contract the blossom.
                    let b = self.lowest_common_base(v, to);
                    let mut in_blossom = vec![false; n];
                    self.mark_blossom_path(v, b, to, &mut in_blossom);
                    self.mark_blossom_path(to, b, v, &mut in_blossom);
                    for u in 0..n {
                        if in_blossom[self.base[u]] {
                            self.base[u] = b;
                            if !self.in_queue[u] {
                                self.in_queue[u] = true;
                                queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.in_queue[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }

    /// Base vertex where the alternating paths from `v` and `w` first meet.
    fn lowest_common_base(&self, v: usize, w: usize) -> usize {
        let n = self.graph.vertex_count();
        let mut seen = vec![false; n];
        let mut v = v;
        loop {
            v = self.base[v];
            seen[v] = true;
            if self.mate[v] == NONE {
                break;
            }
            v = self.parent[self.mate[v]];
        }
        let mut w = w;
        while !seen[self.base[w]] {
            w = self.parent[self.mate[w]];
        }
        self.base[w]
    }

    /// Walks from `v` up to the blossom base `b`, flagging visited bases and
    /// rethreading parents through `child` so augmentation can traverse the
    /// contracted cycle in either direction.
    fn mark_blossom_path(&mut self, mut v: usize, b: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != b {
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Flips matched/unmatched edges along the discovered path ending at the
    /// free vertex `end`.
    fn augment(&mut self, start: usize, end: usize) {
        let mut v = end;
        while v != start {
            let prev = self.parent[v];
            let next = self.mate[prev];
            self.mate[v] = prev;
            self.mate[prev] = v;
            if next == NONE {
                break;
            }
            v = next;
        }
    }
}
