//! Exhaustive subset-enumeration oracles.
//!
//! These are the ground truth the cleverer solvers are checked against, so
//! they stay as plain as possible: walk every bitmask, keep the best subset
//! that passes the defining predicate.

use super::{is_independent_set, is_matching, SearchStats, SolveError, SolveResult, Stopwatch, Witness};
use crate::graph::Graph;

pub const MIS_BRUTE_MAX_VERTICES: usize = 25;
pub const MATCHING_BRUTE_MAX_EDGES: usize = 25;

/// Independence number by enumerating all `2^n` vertex subsets.
pub fn mis_bruteforce(g: &Graph) -> Result<SolveResult, SolveError> {
    let n = g.vertex_count();
    if n > MIS_BRUTE_MAX_VERTICES {
        return Err(SolveError::TooLarge {
            unit: "vertices",
            actual: n,
            limit: MIS_BRUTE_MAX_VERTICES,
        });
    }
    let sw = Stopwatch::start();

    let mut adj = vec![0u32; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }

    let mut best: u32 = 0;
    let mut best_size = 0u32;
    for subset in 0u32..(1u32 << n) {
        if subset.count_ones() <= best_size {
            continue;
        }
        let mut rest = subset;
        let mut independent = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if adj[v] & subset != 0 {
                independent = false;
                break;
            }
            rest &= rest - 1;
        }
        if independent {
            best = subset;
            best_size = subset.count_ones();
        }
    }

    let witness: Vec<usize> = (0..n).filter(|&v| best & (1 << v) != 0).collect();
    assert!(is_independent_set(g, &witness));
    Ok(SolveResult {
        value: best_size as usize,
        witness: Witness::Vertices(witness),
        stats: SearchStats {
            nodes_explored: 1u64 << n,
            augmentations: 0,
        },
        elapsed: sw.elapsed(),
    })
}

/// Matching number by enumerating all `2^m` edge subsets.
pub fn matching_bruteforce(g: &Graph) -> Result<SolveResult, SolveError> {
    let m = g.edge_count();
    if m > MATCHING_BRUTE_MAX_EDGES {
        return Err(SolveError::TooLarge {
            unit: "edges",
            actual: m,
            limit: MATCHING_BRUTE_MAX_EDGES,
        });
    }
    let sw = Stopwatch::start();

    // Endpoints are remapped to a compact range so the cover mask fits one
    // word even when the host graph has many untouched vertices.
    let mut endpoints: Vec<usize> = g.edges().iter().flat_map(|&(u, v)| [u, v]).collect();
    endpoints.sort_unstable();
    endpoints.dedup();
    let compact = |v: usize| endpoints.binary_search(&v).unwrap();
    let edge_masks: Vec<u64> = g
        .edges()
        .iter()
        .map(|&(u, v)| (1u64 << compact(u)) | (1u64 << compact(v)))
        .collect();

    let mut best: u32 = 0;
    let mut best_size = 0u32;
    for subset in 0u32..(1u32 << m) {
        if subset.count_ones() <= best_size {
            continue;
        }
        let mut rest = subset;
        let mut covered = 0u64;
        let mut disjoint = true;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            if covered & edge_masks[e] != 0 {
                disjoint = false;
                break;
            }
            covered |= edge_masks[e];
            rest &= rest - 1;
        }
        if disjoint {
            best = subset;
            best_size = subset.count_ones();
        }
    }

    let witness: Vec<(usize, usize)> = (0..m)
        .filter(|&e| best & (1 << e) != 0)
        .map(|e| g.edges()[e])
        .collect();
    assert!(is_matching(g, &witness));
    Ok(SolveResult {
        value: best_size as usize,
        witness: Witness::Edges(witness),
        stats: SearchStats {
            nodes_explored: 1u64 << m,
            augmentations: 0,
        },
        elapsed: sw.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_alternates_endpoints() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(mis_bruteforce(&p4).unwrap().value, 2);
        assert_eq!(matching_bruteforce(&p4).unwrap().value, 2);
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(matching_bruteforce(&p3).unwrap().value, 1);
    }

    #[test]
    fn complete_graph_values() {
        let k5 = Graph::new(
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
            ],
        )
        .unwrap();
        assert_eq!(mis_bruteforce(&k5).unwrap().value, 1);
        assert_eq!(matching_bruteforce(&k5).unwrap().value, 2);
    }

    #[test]
    fn size_limits_are_reported() {
        let big = Graph::new(26, &[]).unwrap();
        assert!(matches!(
            mis_bruteforce(&big),
            Err(SolveError::TooLarge { unit: "vertices", actual: 26, .. })
        ));
        let star: Vec<(usize, usize)> = (1..27).map(|v| (0, v)).collect();
        let g = Graph::new(27, &star).unwrap();
        assert!(matches!(
            matching_bruteforce(&g),
            Err(SolveError::TooLarge { unit: "edges", actual: 26, .. })
        ));
    }

    #[test]
    fn wheel_and_armed_crown_enumerations() {
        use crate::families::FamilySpec;
        // Independence number of the wheel on a 5-cycle rim.
        let w6 = FamilySpec::Wheel { n: 5 }.generate().unwrap();
        assert_eq!(mis_bruteforce(&w6).unwrap().value, 2);
        // All 2^9 subsets of the 9-vertex armed crown with 3-vertex arms.
        let ac = FamilySpec::ArmedCrown { m: 3, n: 3 }.generate().unwrap();
        assert_eq!(mis_bruteforce(&ac).unwrap().value, 4);
        assert_eq!(matching_bruteforce(&ac).unwrap().value, 4);
    }

    #[test]
    fn edgeless_graph_takes_every_vertex() {
        let g = Graph::new(6, &[]).unwrap();
        let r = mis_bruteforce(&g).unwrap();
        assert_eq!(r.value, 6);
        assert_eq!(matching_bruteforce(&g).unwrap().value, 0);
    }
}
