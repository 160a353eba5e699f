//! Property suite for the solver and transform invariants.
//!
//! The heavyweight claims are cross-route equalities: independence-on-line-
//! graph vs blossom vs exhaustive enumeration must agree on every sampled
//! graph, and the structural identities of the line-graph transform must
//! hold exactly.

use alphaline::{
    alpha_line, is_independent_set, is_matching, is_perfect_matching, matching_bruteforce,
    max_matching, mis_bruteforce, mis_exact, Graph, DEFAULT_NODE_BUDGET,
};
use proptest::prelude::*;

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Random simple graph with up to `max_n` vertices and `max_m` edges.
fn arb_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = all_pairs(n);
        let upper = max_m.min(pairs.len());
        proptest::sample::subsequence(pairs, 0..=upper)
            .prop_map(move |edges| Graph::new(n, &edges).expect("sampled edges are valid"))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Line-graph vertex/edge counts match the incidence identities.
    #[test]
    fn line_graph_count_identities(g in arb_graph(12, 30)) {
        let (line, labels) = g.line_graph();
        prop_assert_eq!(line.vertex_count(), g.edge_count());
        prop_assert_eq!(labels.len(), g.edge_count());
        let degree_pairs: usize = g.degree_sequence().iter().map(|&d| d * d.saturating_sub(1) / 2).sum();
        prop_assert_eq!(line.edge_count(), degree_pairs);
    }

    /// Rebuilding from the edge list reproduces the graph exactly, and the
    /// line-graph transform is deterministic.
    #[test]
    fn construction_round_trip_and_determinism(g in arb_graph(10, 20)) {
        let rebuilt = Graph::new(g.vertex_count(), g.edges()).unwrap();
        prop_assert_eq!(&rebuilt, &g);
        let (l1, labels1) = g.line_graph();
        let (l2, labels2) = g.line_graph();
        prop_assert_eq!(l1, l2);
        prop_assert_eq!(labels1, labels2);
    }

    /// Degree sum equals twice the edge count.
    #[test]
    fn handshake(g in arb_graph(14, 40)) {
        let total: usize = g.degree_sequence().iter().sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    /// The three matching-number routes agree, and every witness passes the
    /// independent verifier.
    #[test]
    fn matching_routes_agree(g in arb_graph(10, 20)) {
        let via_line = alpha_line(&g, DEFAULT_NODE_BUDGET).unwrap();
        let via_blossom = max_matching(&g);
        let via_enumeration = matching_bruteforce(&g).unwrap();
        prop_assert_eq!(via_line.value, via_blossom.value);
        prop_assert_eq!(via_blossom.value, via_enumeration.value);
        prop_assert!(is_matching(&g, via_line.witness.edges().unwrap()));
        prop_assert!(is_matching(&g, via_blossom.witness.edges().unwrap()));
    }

    /// Branch and bound equals exhaustive enumeration for the independence
    /// number, with a valid witness.
    #[test]
    fn independence_routes_agree(g in arb_graph(12, 30)) {
        let exact = mis_exact(&g, DEFAULT_NODE_BUDGET).unwrap();
        let brute = mis_bruteforce(&g).unwrap();
        prop_assert_eq!(exact.value, brute.value);
        prop_assert!(is_independent_set(&g, exact.witness.vertices().unwrap()));
        prop_assert!(is_independent_set(&g, brute.witness.vertices().unwrap()));
    }

    /// nu <= floor(n/2), with equality exactly when the matching is perfect.
    #[test]
    fn matching_bound_and_perfect_flag(g in arb_graph(12, 30)) {
        let nu = max_matching(&g).value;
        prop_assert!(nu <= g.vertex_count() / 2);
        prop_assert_eq!(
            is_perfect_matching(&g, nu),
            2 * nu == g.vertex_count()
        );
    }

    /// Deleting an edge never increases nu and never decreases alpha.
    #[test]
    fn edge_deletion_monotonicity(g in arb_graph(10, 18), pick in any::<proptest::sample::Index>()) {
        if g.edge_count() == 0 {
            return Ok(());
        }
        let drop = pick.index(g.edge_count());
        let kept: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| (i != drop).then_some(e))
            .collect();
        let smaller = Graph::new(g.vertex_count(), &kept).unwrap();

        prop_assert!(max_matching(&smaller).value <= max_matching(&g).value);
        prop_assert!(
            mis_exact(&smaller, DEFAULT_NODE_BUDGET).unwrap().value
                >= mis_exact(&g, DEFAULT_NODE_BUDGET).unwrap().value
        );
    }

    /// DIMACS and JSON renderings parse back to the same graph.
    #[test]
    fn serialization_round_trips(g in arb_graph(12, 30)) {
        let dimacs = alphaline::io::to_dimacs(&g);
        prop_assert_eq!(&alphaline::io::parse_dimacs(&dimacs).unwrap().graph, &g);
        let json = alphaline::io::to_json(&g);
        prop_assert_eq!(&alphaline::io::parse_json_graph(&json).unwrap().graph, &g);
    }
}

/// Known closed forms on instances past the 64-vertex word boundary.
#[test]
fn solvers_handle_graphs_beyond_one_bitset_word() {
    use alphaline::FamilySpec;

    let sunlet = FamilySpec::Sunlet { n: 35 }.generate().unwrap(); // 70 vertices
    assert_eq!(mis_exact(&sunlet, DEFAULT_NODE_BUDGET).unwrap().value, 35);
    assert_eq!(max_matching(&sunlet).value, 35);
    assert_eq!(alpha_line(&sunlet, DEFAULT_NODE_BUDGET).unwrap().value, 35);

    let path = FamilySpec::Path { n: 129 }.generate().unwrap();
    assert_eq!(mis_exact(&path, DEFAULT_NODE_BUDGET).unwrap().value, 65);
    assert_eq!(max_matching(&path).value, 64);

    let cycle = FamilySpec::Cycle { n: 99 }.generate().unwrap();
    assert_eq!(mis_exact(&cycle, DEFAULT_NODE_BUDGET).unwrap().value, 49);
    assert_eq!(max_matching(&cycle).value, 49);
}

/// Development stress run; heavier than the routine suites.
/// `cargo test -p alphaline --test invariants -- --ignored`
#[test]
#[ignore]
fn stress_cross_validation() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xBEEF);
    for i in 0..2000 {
        let g = alphaline::random_graph(&mut rng, 16, 120);
        let exact = mis_exact(&g, DEFAULT_NODE_BUDGET).unwrap().value;
        let brute = mis_bruteforce(&g).unwrap().value;
        assert_eq!(exact, brute, "mis disagreement on graph #{i}: {:?}", g.edges());
    }
    for i in 0..2000 {
        let g = alphaline::random_graph(&mut rng, 18, 25);
        let blossom = max_matching(&g).value;
        let brute = matching_bruteforce(&g).unwrap().value;
        assert_eq!(blossom, brute, "matching disagreement on graph #{i}: {:?}", g.edges());
        let via_line = alpha_line(&g, DEFAULT_NODE_BUDGET).unwrap().value;
        assert_eq!(via_line, blossom, "line route disagreement on graph #{i}");
    }
}
