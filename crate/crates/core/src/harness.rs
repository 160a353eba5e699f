//! Batch verification: sweep family parameter grids, compare solver output
//! against the closed-form predictions, and cross-check the line-graph
//! identity on random graphs.
//!
//! Mismatches never abort a sweep. A prediction that disagrees with the
//! solvers is data, recorded in the row and reflected in the exit status.

use crate::families::{FamilyError, FamilyKind, FamilySpec};
use crate::formulas::{predict, Prediction};
use crate::graph::Graph;
use crate::report::ReportFormat;
use crate::solvers::{
    alpha_line, is_perfect_matching, matching_bruteforce, max_matching, mis_bruteforce, mis_exact,
    SolveError, Stopwatch, DEFAULT_NODE_BUDGET, MATCHING_BRUTE_MAX_EDGES, MIS_BRUTE_MAX_VERTICES,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Edge-count cutoff above which sweeps skip the direct line-graph solve and
/// rely on the matching solver alone.
pub const DEFAULT_ALPHA_LINE_EDGE_LIMIT: usize = 60;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleMode {
    /// Cross-check against the exhaustive oracles wherever the instance is
    /// within their size limits.
    On,
    Off,
}

impl FromStr for OracleMode {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "on" => Ok(OracleMode::On),
            "off" => Ok(OracleMode::Off),
            other => Err(HarnessError::InvalidConfig(format!(
                "oracle mode must be `on` or `off`, got `{other}`"
            ))),
        }
    }
}

/// A family kind together with inclusive parameter ranges to sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySelector {
    pub kind: FamilyKind,
    /// Inclusive `n` range.
    pub n_range: (usize, usize),
    /// Inclusive `m` range; `None` for single-parameter families.
    pub m_range: Option<(usize, usize)>,
}

impl FamilySelector {
    /// Default desk-scale grid for one family.
    pub fn default_for(kind: FamilyKind) -> FamilySelector {
        let (n_range, m_range) = match kind {
            FamilyKind::CompleteBipartite => ((1, 8), Some((1, 8))),
            FamilyKind::ArmedCrown => ((3, 6), Some((2, 5))),
            _ => ((3, 12), None),
        };
        FamilySelector {
            kind,
            n_range,
            m_range,
        }
    }

    /// All parameter tuples in sweep order: `m` outer, `n` inner.
    pub fn expand(&self) -> Vec<FamilySpec> {
        let (n_lo, n_hi) = self.n_range;
        let mut specs = Vec::new();
        match self.m_range {
            Some((m_lo, m_hi)) => {
                for m in m_lo..=m_hi {
                    for n in n_lo..=n_hi {
                        specs.push(self.kind.spec(m, n));
                    }
                }
            }
            None => {
                for n in n_lo..=n_hi {
                    specs.push(self.kind.spec(0, n));
                }
            }
        }
        specs
    }

    fn validate(&self) -> Result<(), HarnessError> {
        let check = |name: &str, (lo, hi): (usize, usize), min: usize| {
            if lo > hi {
                return Err(HarnessError::InvalidConfig(format!(
                    "{}: empty {name} range {lo}..{hi}",
                    self.kind.name()
                )));
            }
            if lo < min {
                return Err(HarnessError::Family(FamilyError::ParameterOutOfRange {
                    family: self.kind.name(),
                    param: if name == "n" { "n" } else { "m" },
                    min,
                    got: lo,
                }));
            }
            Ok(())
        };
        check("n", self.n_range, self.kind.min_n())?;
        if self.kind.takes_m() != self.m_range.is_some() {
            return Err(HarnessError::InvalidConfig(format!(
                "{} {} a second parameter `m`",
                self.kind.name(),
                if self.kind.takes_m() { "requires" } else { "does not take" }
            )));
        }
        if let Some(m_range) = self.m_range {
            check("m", m_range, self.kind.min_m())?;
        }
        Ok(())
    }
}

impl fmt::Display for FamilySelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let range = |(lo, hi): (usize, usize)| {
            if lo == hi {
                format!("{lo}")
            } else {
                format!("{lo}..{hi}")
            }
        };
        match self.m_range {
            Some(m) => write!(
                f,
                "{}:m={},n={}",
                self.kind.name(),
                range(m),
                range(self.n_range)
            ),
            None => write!(f, "{}:n={}", self.kind.name(), range(self.n_range)),
        }
    }
}

impl FromStr for FamilySelector {
    type Err = HarnessError;

    /// Accepts `wheel`, `wheel:n=5`, `wheel:n=3..10`, or
    /// `armed_crown:m=2..5,n=3..6`. Omitted ranges fall back to the family's
    /// default grid.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = |reason: String| {
            HarnessError::Family(FamilyError::Malformed {
                spec: s.to_string(),
                reason,
            })
        };
        let (name, params) = match s.split_once(':') {
            Some((name, params)) => (name, Some(params)),
            None => (s, None),
        };
        let kind = FamilyKind::from_name(name)
            .ok_or_else(|| HarnessError::Family(FamilyError::UnknownFamily(name.to_string())))?;
        let mut selector = FamilySelector::default_for(kind);

        if let Some(params) = params {
            for part in params.split(',') {
                let (key, value) = part
                    .split_once('=')
                    .ok_or_else(|| malformed("parameters must look like `n=5` or `n=3..10`".into()))?;
                let range = parse_range(value.trim())
                    .ok_or_else(|| malformed(format!("`{value}` is not a value or `lo..hi` range")))?;
                match key.trim() {
                    "n" => selector.n_range = range,
                    "m" => selector.m_range = Some(range),
                    other => return Err(malformed(format!("unknown parameter `{other}`"))),
                }
            }
        }
        selector.validate()?;
        Ok(selector)
    }
}

fn parse_range(s: &str) -> Option<(usize, usize)> {
    match s.split_once("..") {
        Some((lo, hi)) => Some((lo.trim().parse().ok()?, hi.trim().parse().ok()?)),
        None => {
            let v = s.parse().ok()?;
            Some((v, v))
        }
    }
}

impl Serialize for FamilySelector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilySelector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The families swept by a full default run. Path and cycle are auxiliary
/// (they back the wheel/fan analysis) and are only swept when selected
/// explicitly.
pub fn default_grid() -> Vec<FamilySelector> {
    [
        FamilyKind::Complete,
        FamilyKind::CompleteBipartite,
        FamilyKind::Wheel,
        FamilyKind::Helm,
        FamilyKind::Fan,
        FamilyKind::Sun,
        FamilyKind::Sunlet,
        FamilyKind::ArmedCrown,
    ]
    .into_iter()
    .map(FamilySelector::default_for)
    .collect()
}

/// Reproducible run parameters; a fixed config and seed give byte-identical
/// reports (timings are reported outside the comparable fields).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub selectors: Vec<FamilySelector>,
    pub node_budget: u64,
    pub oracle: OracleMode,
    pub format: ReportFormat,
    pub seed: u64,
    pub alpha_line_edge_limit: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            selectors: default_grid(),
            node_budget: DEFAULT_NODE_BUDGET,
            oracle: OracleMode::On,
            format: ReportFormat::Table,
            seed: 0,
            alpha_line_edge_limit: DEFAULT_ALPHA_LINE_EDGE_LIMIT,
        }
    }
}

/// One verified family member: prediction, solver results, oracle results,
/// and bookkeeping. Match flags are always recomputed from the stored
/// values, never stored themselves.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub spec: FamilySpec,
    pub predicted: Prediction,
    /// Branch-and-bound independence number; `None` if the budget ran out.
    pub alpha: Option<usize>,
    /// Matching number from the augmenting-path solver.
    pub nu: usize,
    /// Independence number of the line graph computed directly on `L(G)`;
    /// `None` if skipped for size or the budget ran out (see `note`).
    pub alpha_line: Option<usize>,
    /// Exhaustive-oracle values where within limits and enabled.
    pub oracle_alpha: Option<usize>,
    pub oracle_nu: Option<usize>,
    pub perfect_matching: bool,
    pub note: String,
    /// Wall time for the whole row; not deterministic between runs.
    pub elapsed_micros: u64,
    pub nodes_explored: u64,
}

/// Per-field comparison outcomes; `None` means the comparison could not be
/// made because a value is unavailable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatchFlags {
    /// predicted alpha vs computed alpha
    pub alpha: Option<bool>,
    /// predicted alpha(L) vs computed nu
    pub nu: Option<bool>,
    /// predicted alpha(L) vs directly computed alpha(L)
    pub alpha_line: Option<bool>,
    /// computed alpha(L) vs computed nu (the line-graph identity)
    pub line_identity: Option<bool>,
    /// computed alpha vs exhaustive oracle
    pub oracle_alpha: Option<bool>,
    /// computed nu vs exhaustive oracle
    pub oracle_nu: Option<bool>,
}

impl MatchFlags {
    pub fn any_mismatch(&self) -> bool {
        [
            self.alpha,
            self.nu,
            self.alpha_line,
            self.line_identity,
            self.oracle_alpha,
            self.oracle_nu,
        ]
        .contains(&Some(false))
    }

    pub fn all_available_match(&self) -> bool {
        !self.any_mismatch()
    }
}

/// Row outcome: `Fail` wins over `Skipped` wins over `Pass`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for RecordStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecordStatus::Pass => "pass",
            RecordStatus::Fail => "fail",
            RecordStatus::Skipped => "skipped",
        })
    }
}

impl VerificationRecord {
    pub fn match_flags(&self) -> MatchFlags {
        MatchFlags {
            alpha: self.alpha.map(|a| a == self.predicted.alpha),
            nu: Some(self.nu == self.predicted.alpha_line),
            alpha_line: self.alpha_line.map(|al| al == self.predicted.alpha_line),
            line_identity: self.alpha_line.map(|al| al == self.nu),
            oracle_alpha: match (self.oracle_alpha, self.alpha) {
                (Some(oracle), Some(alpha)) => Some(oracle == alpha),
                _ => None,
            },
            oracle_nu: self.oracle_nu.map(|oracle| oracle == self.nu),
        }
    }

    pub fn status(&self) -> RecordStatus {
        if self.match_flags().any_mismatch() {
            RecordStatus::Fail
        } else if self.alpha.is_none() {
            RecordStatus::Skipped
        } else {
            RecordStatus::Pass
        }
    }

    /// Computed sum alpha + nu, when alpha is available.
    pub fn computed_sum(&self) -> Option<usize> {
        self.alpha.map(|a| a + self.nu)
    }

    pub fn computed_product(&self) -> Option<usize> {
        self.alpha.map(|a| a * self.nu)
    }
}

/// Verifies one family member: generate, predict, solve, cross-check.
pub fn verify_one(spec: &FamilySpec, config: &RunConfig) -> Result<VerificationRecord, HarnessError> {
    let sw = Stopwatch::start();
    let graph = spec.generate()?;
    let predicted = predict(spec)?;
    let mut notes: Vec<String> = Vec::new();
    let mut nodes_explored = 0u64;

    let isolated = graph.isolated_vertices();
    if !isolated.is_empty() {
        notes.push(format!(
            "graph has {} isolated vertex(es) outside the standing assumption",
            isolated.len()
        ));
    }

    let alpha = match mis_exact(&graph, config.node_budget) {
        Ok(result) => {
            nodes_explored += result.stats.nodes_explored;
            Some(result.value)
        }
        Err(SolveError::BudgetExhausted { budget, .. }) => {
            notes.push(format!("alpha: budget of {budget} nodes exhausted"));
            nodes_explored += config.node_budget;
            None
        }
        Err(e) => return Err(HarnessError::InvalidConfig(e.to_string())),
    };

    let matching = max_matching(&graph);
    let nu = matching.value;

    let alpha_line_value = if graph.edge_count() > config.alpha_line_edge_limit {
        notes.push(format!(
            "alpha_line skipped: {} edges exceeds limit {}",
            graph.edge_count(),
            config.alpha_line_edge_limit
        ));
        None
    } else {
        match alpha_line(&graph, config.node_budget) {
            Ok(result) => {
                nodes_explored += result.stats.nodes_explored;
                Some(result.value)
            }
            Err(SolveError::BudgetExhausted { budget, .. }) => {
                notes.push(format!("alpha_line: budget of {budget} nodes exhausted"));
                nodes_explored += config.node_budget;
                None
            }
            Err(e) => return Err(HarnessError::InvalidConfig(e.to_string())),
        }
    };

    let (oracle_alpha, oracle_nu) = match config.oracle {
        OracleMode::Off => (None, None),
        OracleMode::On => {
            let oracle_alpha = if graph.vertex_count() <= MIS_BRUTE_MAX_VERTICES {
                let r = mis_bruteforce(&graph).expect("within the enumeration limit");
                nodes_explored += r.stats.nodes_explored;
                Some(r.value)
            } else {
                None
            };
            let oracle_nu = if graph.edge_count() <= MATCHING_BRUTE_MAX_EDGES {
                let r = matching_bruteforce(&graph).expect("within the enumeration limit");
                nodes_explored += r.stats.nodes_explored;
                Some(r.value)
            } else {
                None
            };
            (oracle_alpha, oracle_nu)
        }
    };

    Ok(VerificationRecord {
        spec: *spec,
        predicted,
        alpha,
        nu,
        alpha_line: alpha_line_value,
        oracle_alpha,
        oracle_nu,
        perfect_matching: is_perfect_matching(&graph, nu),
        note: notes.join("; "),
        elapsed_micros: sw.elapsed().as_micros() as u64,
        nodes_explored,
    })
}

/// Sweeps one selector in parameter order.
pub fn verify_family(
    selector: &FamilySelector,
    config: &RunConfig,
) -> Result<Vec<VerificationRecord>, HarnessError> {
    selector.validate()?;
    selector
        .expand()
        .iter()
        .map(|spec| verify_one(spec, config))
        .collect()
}

/// Sweeps every selector in `config`, in order.
pub fn verify_selected(config: &RunConfig) -> Result<Vec<VerificationRecord>, HarnessError> {
    let mut records = Vec::new();
    for selector in &config.selectors {
        records.extend(verify_family(selector, config)?);
    }
    Ok(records)
}

// ---------------------------------------------------------------------------
// Random graphs and the line-graph identity check
// ---------------------------------------------------------------------------

/// Uniform-ish random simple graph: vertex count in `1..=max_vertices`, then
/// an edge count in `0..=min(max_edges, C(n,2))`, then that many distinct
/// pairs via a partial shuffle. Fully determined by the generator state.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Graph {
    let n = rng.random_range(1..=max_vertices.max(1));
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let m = rng.random_range(0..=max_edges.min(pairs.len()));
    for i in 0..m {
        let j = rng.random_range(i..pairs.len());
        pairs.swap(i, j);
    }
    Graph::new(n, &pairs[..m]).expect("sampled pairs are valid")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineIdentityConfig {
    pub count: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
    pub seed: u64,
}

/// A graph on which the three matching-number routes disagreed, serialized
/// in full. Any such failure indicates an implementation bug, not a property
/// of the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineIdentityFailure {
    pub index: usize,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub alpha_line: usize,
    pub nu: usize,
    pub oracle_nu: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineIdentitySummary {
    pub config: LineIdentityConfig,
    pub checked: usize,
    pub passed: usize,
    pub failures: Vec<LineIdentityFailure>,
}

impl LineIdentitySummary {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks alpha(L(G)) = nu(G) = exhaustive nu on `count` seeded random
/// graphs: the independence-on-line-graph route, the augmenting-path route,
/// and the edge-subset oracle must agree exactly.
pub fn check_line_identity(config: &LineIdentityConfig) -> Result<LineIdentitySummary, HarnessError> {
    if config.max_vertices == 0 {
        return Err(HarnessError::InvalidConfig(
            "max_vertices must be at least 1".into(),
        ));
    }
    if config.max_edges > MATCHING_BRUTE_MAX_EDGES {
        return Err(HarnessError::InvalidConfig(format!(
            "max_edges {} exceeds the exhaustive-oracle limit of {}",
            config.max_edges, MATCHING_BRUTE_MAX_EDGES
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut failures = Vec::new();
    for index in 0..config.count {
        let g = random_graph(&mut rng, config.max_vertices, config.max_edges);
        let al = alpha_line(&g, DEFAULT_NODE_BUDGET)
            .map_err(|e| HarnessError::InvalidConfig(e.to_string()))?
            .value;
        let nu = max_matching(&g).value;
        let oracle_nu = matching_bruteforce(&g)
            .map_err(|e| HarnessError::InvalidConfig(e.to_string()))?
            .value;
        if !(al == nu && nu == oracle_nu) {
            failures.push(LineIdentityFailure {
                index,
                n: g.vertex_count(),
                edges: g.edges().to_vec(),
                alpha_line: al,
                nu,
                oracle_nu,
            });
        }
    }
    Ok(LineIdentitySummary {
        config: config.clone(),
        checked: config.count,
        passed: config.count - failures.len(),
        failures,
    })
}
