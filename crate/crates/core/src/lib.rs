//! Exact independence and matching numbers for graphs and their line graphs.
//!
//! The library computes three quantities for a simple undirected graph `G`:
//!
//! - `alpha(G)` — the independence number, by branch and bound;
//! - `nu(G)` — the matching number, by augmenting paths with blossom
//!   contraction;
//! - `alpha(L(G))` — the independence number of the line graph, by building
//!   `L(G)` and solving it, which equals `nu(G)`.
//!
//! On top of the solvers sit generators for ten parameterized graph families
//! (complete, complete bipartite, path, cycle, wheel, helm, fan, sun, sunlet,
//! armed crown), a closed-form oracle predicting `(alpha, alpha(L))` for each
//! family member, exhaustive brute-force oracles for small instances, and a
//! verification harness that sweeps parameter grids and reports where the
//! closed forms and the solvers agree or disagree.

pub mod families;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod io;
pub mod report;
pub mod solvers;

mod bitset;

pub use families::{FamilyError, FamilyKind, FamilySpec};
pub use formulas::{predict, Prediction};
pub use graph::{EdgeLabel, Graph, GraphError};
pub use harness::{
    check_line_identity, default_grid, random_graph, verify_family, verify_one, verify_selected,
    FamilySelector, HarnessError, LineIdentityConfig, LineIdentitySummary, OracleMode, RecordStatus,
    RunConfig, VerificationRecord,
};
pub use report::{emit_report, write_report, ReportError, ReportFormat, RunReport, RunSummary};
pub use solvers::{
    alpha_line, is_independent_set, is_matching, is_perfect_matching, matching_bruteforce,
    max_matching, mis_bruteforce, mis_exact, SearchStats, SolveError, SolveResult, Witness,
    DEFAULT_NODE_BUDGET,
};
