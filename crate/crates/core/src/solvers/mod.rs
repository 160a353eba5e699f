//! Exact solvers for the independence number and the matching number.
//!
//! Two independent routes exist for each quantity: a branch-and-bound /
//! augmenting-path solver for desk-scale graphs, and an exhaustive
//! subset-enumeration oracle for small ones. [`alpha_line`] adds a third
//! route for the matching number by running the independence solver on the
//! line graph. Keeping the routes independent is the point: they cross-check
//! each other.

mod brute;
mod matching;
mod mis;

pub use brute::{matching_bruteforce, mis_bruteforce, MATCHING_BRUTE_MAX_EDGES, MIS_BRUTE_MAX_VERTICES};
pub use matching::max_matching;
pub use mis::mis_exact;

use crate::graph::Graph;
use std::time::Duration;
use thiserror::Error;

/// Default node budget for the branch-and-bound independence solver.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// The search was cut off; this is a distinct outcome, never a silently
    /// wrong answer.
    #[error("node budget of {budget} exhausted after exploring {explored} nodes")]
    BudgetExhausted { budget: u64, explored: u64 },
    #[error("graph too large for exhaustive enumeration: {actual} {unit} exceeds the limit of {limit}")]
    TooLarge {
        unit: &'static str,
        actual: usize,
        limit: usize,
    },
}

/// Optimal certificate returned by a solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Vertices(Vec<usize>),
    Edges(Vec<(usize, usize)>),
}

impl Witness {
    pub fn vertices(&self) -> Option<&[usize]> {
        match self {
            Witness::Vertices(v) => Some(v),
            Witness::Edges(_) => None,
        }
    }

    pub fn edges(&self) -> Option<&[(usize, usize)]> {
        match self {
            Witness::Edges(e) => Some(e),
            Witness::Vertices(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Branch-and-bound nodes or enumerated subsets, depending on the solver.
    pub nodes_explored: u64,
    /// Successful augmenting-path phases (matching solver only).
    pub augmentations: u64,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    /// Optimal cardinality.
    pub value: usize,
    pub witness: Witness,
    pub stats: SearchStats,
    pub elapsed: Duration,
}

/// Checks that `vertices` is an independent set of `g`: in range, duplicate
/// free, and pairwise non-adjacent. Deliberately ignores solver bookkeeping.
pub fn is_independent_set(g: &Graph, vertices: &[usize]) -> bool {
    let n = g.vertex_count();
    if vertices.iter().any(|&v| v >= n) {
        return false;
    }
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if u == v || g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// Checks that `edges` is a matching of `g`: every pair is an actual edge
/// and no two share an endpoint.
pub fn is_matching(g: &Graph, edges: &[(usize, usize)]) -> bool {
    let n = g.vertex_count();
    let mut covered = vec![false; n];
    for &(u, v) in edges {
        if u >= n || v >= n || !g.has_edge(u, v) {
            return false;
        }
        if covered[u] || covered[v] {
            return false;
        }
        covered[u] = true;
        covered[v] = true;
    }
    true
}

/// A matching of size `nu` is perfect exactly when it covers every vertex.
pub fn is_perfect_matching(g: &Graph, nu: usize) -> bool {
    g.vertex_count() == 2 * nu
}

/// Independence number of the line graph, computed by the independence route:
/// build `L(g)`, solve it exactly, and translate the witness back to an edge
/// set of `g` through the label table. The result must be a matching of `g`.
pub fn alpha_line(g: &Graph, node_budget: u64) -> Result<SolveResult, SolveError> {
    let sw = Stopwatch::start();
    let (line, labels) = g.line_graph();
    let inner = mis_exact(&line, node_budget)?;
    let edge_witness: Vec<(usize, usize)> = inner
        .witness
        .vertices()
        .expect("independence solver returns a vertex witness")
        .iter()
        .map(|&i| labels[i].endpoints)
        .collect();
    assert!(
        is_matching(g, &edge_witness),
        "line-graph independent set must translate to a matching"
    );
    Ok(SolveResult {
        value: inner.value,
        witness: Witness::Edges(edge_witness),
        stats: inner.stats,
        elapsed: sw.elapsed(),
    })
}

/// Wall-clock stopwatch that degrades to zero on targets without a monotonic
/// clock (wasm32).
pub(crate) struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    start: std::time::Instant,
}

impl Stopwatch {
    pub fn start() -> Self {
        Stopwatch {
            #[cfg(not(target_arch = "wasm32"))]
            start: std::time::Instant::now(),
        }
    }

    pub fn elapsed(&self) -> Duration {
        #[cfg(not(target_arch = "wasm32"))]
        {
            self.start.elapsed()
        }
        #[cfg(target_arch = "wasm32")]
        {
            Duration::ZERO
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    fn k4() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn independent_set_verifier_rejects_adjacent_pairs() {
        let g = k4();
        assert!(is_independent_set(&g, &[2]));
        assert!(is_independent_set(&g, &[]));
        assert!(!is_independent_set(&g, &[0, 1]));
        assert!(!is_independent_set(&g, &[0, 0]));
        assert!(!is_independent_set(&g, &[7]));
    }

    #[test]
    fn matching_verifier_rejects_shared_endpoints_and_non_edges() {
        let g = k4();
        assert!(is_matching(&g, &[(0, 1), (2, 3)]));
        assert!(!is_matching(&g, &[(0, 1), (1, 2)]));
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!is_matching(&p3, &[(0, 2)]));
    }

    #[test]
    fn perfect_matching_flag_requires_full_cover() {
        assert!(is_perfect_matching(&k4(), 2));
        assert!(!is_perfect_matching(&k4(), 1));
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!is_perfect_matching(&p3, 1));
    }

    #[test]
    fn alpha_line_on_fixed_shapes() {
        // The triangle is its own line graph.
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(alpha_line(&k3, DEFAULT_NODE_BUDGET).unwrap().value, 1);

        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(alpha_line(&k2, DEFAULT_NODE_BUDGET).unwrap().value, 1);
        assert_eq!(max_matching(&k2).value, 1);

        // L(C_5) = C_5, so alpha(L) = alpha = nu = 2.
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(alpha_line(&c5, DEFAULT_NODE_BUDGET).unwrap().value, 2);
        assert_eq!(mis_exact(&c5, DEFAULT_NODE_BUDGET).unwrap().value, 2);
        assert_eq!(max_matching(&c5).value, 2);
    }

    #[test]
    fn alpha_line_of_odd_wheel_is_the_matching_number() {
        // Rim 0..4, hub 5: the perfect matching {(0,1),(2,3),(4,5)} forces 3.
        let w6 = FamilySpec::Wheel { n: 5 }.generate().unwrap();
        let result = alpha_line(&w6, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(result.value, 3);
        assert_eq!(result.value, max_matching(&w6).value);
        assert!(is_matching(&w6, result.witness.edges().unwrap()));
    }
}
