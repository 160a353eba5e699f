//! Exact maximum independent set by branch and bound.
//!
//! Search design: reduce away vertices of degree 0/1 (always safe to take),
//! solve the all-degree-2 remainder (disjoint cycles) in closed form, and
//! otherwise branch include/exclude on a maximum-degree vertex, lowest index
//! first on ties. A greedy independent set seeds the incumbent and a vertex
//! cover argument gives the pruning bound: the complement of an independent
//! set covers all edges, each vertex covering at most max-degree of them, so
//! alpha <= |R| - ceil(m/Δ) on the remaining subgraph R.

use super::{is_independent_set, SearchStats, SolveError, SolveResult, Stopwatch, Witness};
use crate::bitset::BitSet;
use crate::graph::Graph;

/// Independence number with an optimal vertex set as witness.
///
/// Deterministic for a given graph. Exceeding `node_budget` search nodes
/// aborts with [`SolveError::BudgetExhausted`] rather than returning a bound.
pub fn mis_exact(g: &Graph, node_budget: u64) -> Result<SolveResult, SolveError> {
    let sw = Stopwatch::start();
    let n = g.vertex_count();
    let adj = adjacency_bitsets(g);

    let mut ctx = Ctx {
        adj: &adj,
        best: greedy_independent_set(n, &adj),
        nodes: 0,
        budget: node_budget,
    };
    let mut current = Vec::new();
    ctx.search(BitSet::full(n), &mut current)?;

    let mut witness = ctx.best;
    witness.sort_unstable();
    assert!(is_independent_set(g, &witness));
    Ok(SolveResult {
        value: witness.len(),
        witness: Witness::Vertices(witness),
        stats: SearchStats {
            nodes_explored: ctx.nodes,
            augmentations: 0,
        },
        elapsed: sw.elapsed(),
    })
}

pub(crate) fn adjacency_bitsets(g: &Graph) -> Vec<BitSet> {
    let n = g.vertex_count();
    let mut adj = vec![BitSet::empty(n); n];
    for &(u, v) in g.edges() {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    adj
}

/// Greedy lower bound: repeatedly take a minimum-degree vertex (lowest index
/// on ties) and discard its neighborhood.
fn greedy_independent_set(n: usize, adj: &[BitSet]) -> Vec<usize> {
    let mut remaining = BitSet::full(n);
    let mut chosen = Vec::new();
    while !remaining.is_empty() {
        let v = remaining
            .iter()
            .min_by_key(|&v| (adj[v].intersect_count(&remaining), v))
            .expect("remaining is non-empty");
        chosen.push(v);
        remaining.remove(v);
        remaining.subtract(&adj[v]);
    }
    chosen
}

struct Ctx<'a> {
    adj: &'a [BitSet],
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Ctx<'_> {
    fn search(&mut self, mut cand: BitSet, current: &mut Vec<usize>) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SolveError::BudgetExhausted {
                budget: self.budget,
                explored: self.budget,
            });
        }
        let mark = current.len();

        // Take degree-0 and degree-1 vertices outright; some maximum
        // independent set always contains them.
        loop {
            let mut isolated = None;
            let mut pendant = None;
            for v in cand.iter() {
                match self.adj[v].intersect_count(&cand) {
                    0 => {
                        isolated = Some(v);
                        break;
                    }
                    1 if pendant.is_none() => pendant = Some(v),
                    _ => {}
                }
            }
            match isolated.or(pendant) {
                Some(v) => {
                    current.push(v);
                    cand.remove(v);
                    cand.subtract(&self.adj[v]);
                }
                None => break,
            }
        }

        if cand.is_empty() {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            current.truncate(mark);
            return Ok(());
        }

        // Degree census over the remainder; every degree is >= 2 here.
        let size = cand.count();
        let mut degree_sum = 0;
        let mut max_degree = 0;
        let mut branch_vertex = 0;
        for v in cand.iter() {
            let d = self.adj[v].intersect_count(&cand);
            degree_sum += d;
            if d > max_degree {
                max_degree = d;
                branch_vertex = v;
            }
        }

        if max_degree <= 2 {
            // Disjoint cycles remain; alternate around each.
            let picked = cycles_independent_set(&cand, self.adj);
            current.extend(picked);
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            current.truncate(mark);
            return Ok(());
        }

        let upper = size - (degree_sum / 2).div_ceil(max_degree);
        if current.len() + upper <= self.best.len() {
            current.truncate(mark);
            return Ok(());
        }

        // Include branch first, then exclude.
        let mut included = cand.clone();
        included.remove(branch_vertex);
        included.subtract(&self.adj[branch_vertex]);
        current.push(branch_vertex);
        self.search(included, current)?;
        current.pop();

        cand.remove(branch_vertex);
        self.search(cand, current)?;

        current.truncate(mark);
        Ok(())
    }
}

/// Optimal independent set of a disjoint union of cycles: walk each cycle
/// from its lowest vertex and take every other one.
fn cycles_independent_set(cand: &BitSet, adj: &[BitSet]) -> Vec<usize> {
    let mut picked = Vec::new();
    let mut todo = cand.clone();
    while let Some(start) = todo.first() {
        let mut order = vec![start];
        todo.remove(start);
        let mut prev = start;
        let mut cur = adj[start]
            .iter()
            .find(|&u| cand.contains(u))
            .expect("cycle vertex has two neighbors");
        while cur != start {
            order.push(cur);
            todo.remove(cur);
            let next = adj[cur]
                .iter()
                .find(|&u| cand.contains(u) && u != prev)
                .expect("cycle vertex has two neighbors");
            prev = cur;
            cur = next;
        }
        for i in (0..order.len() - 1).step_by(2) {
            picked.push(order[i]);
        }
    }
    picked
}
