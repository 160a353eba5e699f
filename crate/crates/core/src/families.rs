//! Parameterized generators for the graph families under study, each with a
//! fixed, documented vertex layout so solver witnesses stay interpretable.
//!
//! Layouts:
//! - `complete:n=K`: vertices `0..n`, all pairs.
//! - `complete_bipartite:m=A,n=B`: parts `0..m` and `m..m+n`, all cross pairs.
//! - `path:n=K`: vertices `0..n` in path order.
//! - `cycle:n=K`: vertices `0..n` in cycle order.
//! - `wheel:n=K`: rim cycle `0..n`, hub `n` adjacent to every rim vertex
//!   (the join of a single vertex with an n-cycle; n+1 vertices, 2n edges).
//! - `helm:n=K`: wheel layout plus pendant `n+1+i` attached to rim vertex `i`.
//! - `fan:n=K`: path `0..n`, hub `n` adjacent to every path vertex.
//! - `sun:n=K`: clique on `0..n`; independent vertex `n+i` adjacent to clique
//!   vertices `i` and `(i+1) mod n`.
//! - `sunlet:n=K`: cycle `0..n` plus pendant `n+i` attached to cycle vertex `i`.
//! - `armed_crown:m=A,n=B`: cycle `0..n`; each cycle vertex heads an arm that
//!   is a path on `m` vertices counting the cycle vertex itself, so each arm
//!   adds `m-1` new vertices `n + i*(m-1) .. n + (i+1)*(m-1)` in path order.
//!   Total: `n*m` vertices and `n*m` edges.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} requires {param} >= {min}, got {got}")]
    ParameterOutOfRange {
        family: &'static str,
        param: &'static str,
        min: usize,
        got: usize,
    },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("malformed family spec `{spec}`: {reason}; expected e.g. `wheel:n=5` or `armed_crown:m=3,n=4`")]
    Malformed { spec: String, reason: String },
}

/// The ten family kinds, without parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Complete,
    CompleteBipartite,
    Path,
    Cycle,
    Wheel,
    Helm,
    Fan,
    Sun,
    Sunlet,
    ArmedCrown,
}

pub const ALL_FAMILY_KINDS: [FamilyKind; 10] = [
    FamilyKind::Complete,
    FamilyKind::CompleteBipartite,
    FamilyKind::Path,
    FamilyKind::Cycle,
    FamilyKind::Wheel,
    FamilyKind::Helm,
    FamilyKind::Fan,
    FamilyKind::Sun,
    FamilyKind::Sunlet,
    FamilyKind::ArmedCrown,
];

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Helm => "helm",
            FamilyKind::Fan => "fan",
            FamilyKind::Sun => "sun",
            FamilyKind::Sunlet => "sunlet",
            FamilyKind::ArmedCrown => "armed_crown",
        }
    }

    pub fn from_name(name: &str) -> Option<FamilyKind> {
        ALL_FAMILY_KINDS.into_iter().find(|k| k.name() == name)
    }

    /// Whether this family takes the second parameter `m`.
    pub fn takes_m(self) -> bool {
        matches!(self, FamilyKind::CompleteBipartite | FamilyKind::ArmedCrown)
    }

    /// Smallest valid `n`.
    pub fn min_n(self) -> usize {
        match self {
            FamilyKind::Complete | FamilyKind::CompleteBipartite | FamilyKind::Fan => 1,
            FamilyKind::Path => 2,
            FamilyKind::Cycle
            | FamilyKind::Wheel
            | FamilyKind::Helm
            | FamilyKind::Sun
            | FamilyKind::Sunlet
            | FamilyKind::ArmedCrown => 3,
        }
    }

    /// Smallest valid `m`, for the families that take one.
    pub fn min_m(self) -> usize {
        match self {
            FamilyKind::CompleteBipartite => 1,
            FamilyKind::ArmedCrown => 2,
            _ => 0,
        }
    }

    /// Builds the concrete spec; `m` is ignored by single-parameter families.
    pub fn spec(self, m: usize, n: usize) -> FamilySpec {
        match self {
            FamilyKind::Complete => FamilySpec::Complete { n },
            FamilyKind::CompleteBipartite => FamilySpec::CompleteBipartite { m, n },
            FamilyKind::Path => FamilySpec::Path { n },
            FamilyKind::Cycle => FamilySpec::Cycle { n },
            FamilyKind::Wheel => FamilySpec::Wheel { n },
            FamilyKind::Helm => FamilySpec::Helm { n },
            FamilyKind::Fan => FamilySpec::Fan { n },
            FamilyKind::Sun => FamilySpec::Sun { n },
            FamilyKind::Sunlet => FamilySpec::Sunlet { n },
            FamilyKind::ArmedCrown => FamilySpec::ArmedCrown { m, n },
        }
    }
}

/// One family member: the kind plus its integer parameters.
///
/// `n` counts the defining cycle/path/part as documented per family; the
/// wheel, helm, fan, sun, and sunlet on parameter `n` all have more than `n`
/// vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Wheel { n: usize },
    Helm { n: usize },
    Fan { n: usize },
    Sun { n: usize },
    Sunlet { n: usize },
    ArmedCrown { m: usize, n: usize },
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Complete { .. } => FamilyKind::Complete,
            FamilySpec::CompleteBipartite { .. } => FamilyKind::CompleteBipartite,
            FamilySpec::Path { .. } => FamilyKind::Path,
            FamilySpec::Cycle { .. } => FamilyKind::Cycle,
            FamilySpec::Wheel { .. } => FamilyKind::Wheel,
            FamilySpec::Helm { .. } => FamilyKind::Helm,
            FamilySpec::Fan { .. } => FamilyKind::Fan,
            FamilySpec::Sun { .. } => FamilyKind::Sun,
            FamilySpec::Sunlet { .. } => FamilyKind::Sunlet,
            FamilySpec::ArmedCrown { .. } => FamilyKind::ArmedCrown,
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            FamilySpec::Complete { n }
            | FamilySpec::CompleteBipartite { n, .. }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::Helm { n }
            | FamilySpec::Fan { n }
            | FamilySpec::Sun { n }
            | FamilySpec::Sunlet { n }
            | FamilySpec::ArmedCrown { n, .. } => n,
        }
    }

    pub fn m(&self) -> Option<usize> {
        match *self {
            FamilySpec::CompleteBipartite { m, .. } | FamilySpec::ArmedCrown { m, .. } => Some(m),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let kind = self.kind();
        let n = self.n();
        if n < kind.min_n() {
            return Err(FamilyError::ParameterOutOfRange {
                family: kind.name(),
                param: "n",
                min: kind.min_n(),
                got: n,
            });
        }
        if let Some(m) = self.m() {
            if m < kind.min_m() {
                return Err(FamilyError::ParameterOutOfRange {
                    family: kind.name(),
                    param: "m",
                    min: kind.min_m(),
                    got: m,
                });
            }
        }
        Ok(())
    }

    /// Generates the family member under the canonical layout documented at
    /// module level. Deterministic; never produces isolated vertices.
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let vertices;
        match *self {
            FamilySpec::Complete { n } => {
                vertices = n;
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
            }
            FamilySpec::CompleteBipartite { m, n } => {
                vertices = m + n;
                for u in 0..m {
                    for v in m..m + n {
                        edges.push((u, v));
                    }
                }
            }
            FamilySpec::Path { n } => {
                vertices = n;
                for i in 0..n - 1 {
                    edges.push((i, i + 1));
                }
            }
            FamilySpec::Cycle { n } => {
                vertices = n;
                for i in 0..n {
                    edges.push((i, (i + 1) % n));
                }
            }
            FamilySpec::Wheel { n } => {
                vertices = n + 1;
                for i in 0..n {
                    edges.push((i, (i + 1) % n));
                    edges.push((i, n));
                }
            }
            FamilySpec::Helm { n } => {
                vertices = 2 * n + 1;
                for i in 0..n {
                    edges.push((i, (i + 1) % n));
                    edges.push((i, n));
                    edges.push((i, n + 1 + i));
                }
            }
            FamilySpec::Fan { n } => {
                vertices = n + 1;
                for i in 0..n - 1 {
                    edges.push((i, i + 1));
                }
                for i in 0..n {
                    edges.push((i, n));
                }
            }
            FamilySpec::Sun { n } => {
                vertices = 2 * n;
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
                for i in 0..n {
                    edges.push((n + i, i));
                    edges.push((n + i, (i + 1) % n));
                }
            }
            FamilySpec::Sunlet { n } => {
                vertices = 2 * n;
                for i in 0..n {
                    edges.push((i, (i + 1) % n));
                    edges.push((i, n + i));
                }
            }
            FamilySpec::ArmedCrown { m, n } => {
                vertices = n * m;
                for i in 0..n {
                    edges.push((i, (i + 1) % n));
                    let mut prev = i;
                    for j in 0..m - 1 {
                        let v = n + i * (m - 1) + j;
                        edges.push((prev, v));
                        prev = v;
                    }
                }
            }
        }
        Ok(Graph::new(vertices, &edges).expect("family layouts are simple and in range"))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m() {
            Some(m) => write!(f, "{}:m={},n={}", self.kind().name(), m, self.n()),
            None => write!(f, "{}:n={}", self.kind().name(), self.n()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Parses the CLI grammar: `complete:n=5`, `armed_crown:m=3,n=5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = |reason: &str| FamilyError::Malformed {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (name, params) = s.split_once(':').ok_or_else(|| malformed("missing `:`"))?;
        let kind =
            FamilyKind::from_name(name).ok_or_else(|| FamilyError::UnknownFamily(name.to_string()))?;

        let mut m = None;
        let mut n = None;
        for part in params.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| malformed("parameters must look like `n=5`"))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| malformed(&format!("`{value}` is not a non-negative integer")))?;
            match key.trim() {
                "m" => m = Some(value),
                "n" => n = Some(value),
                other => return Err(malformed(&format!("unknown parameter `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| malformed("missing parameter `n`"))?;
        let spec = if kind.takes_m() {
            let m = m.ok_or_else(|| malformed("this family needs parameter `m`"))?;
            kind.spec(m, n)
        } else {
            if m.is_some() {
                return Err(malformed("this family takes only `n`"));
            }
            kind.spec(0, n)
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_on_three_rim_vertices_is_k4() {
        let w4 = FamilySpec::Wheel { n: 3 }.generate().unwrap();
        assert_eq!(w4.vertex_count(), 4);
        assert_eq!(w4.edge_count(), 6);
        assert_eq!(w4.degree_sequence(), vec![3, 3, 3, 3]);
    }

    #[test]
    fn wheel_degrees_hub_last() {
        let w6 = FamilySpec::Wheel { n: 5 }.generate().unwrap();
        assert_eq!(w6.vertex_count(), 6);
        assert_eq!(w6.edge_count(), 10);
        assert_eq!(w6.degree_sequence(), vec![3, 3, 3, 3, 3, 5]);
    }

    #[test]
    fn helm_counts() {
        let h3 = FamilySpec::Helm { n: 3 }.generate().unwrap();
        assert_eq!(h3.vertex_count(), 7);
        assert_eq!(h3.edge_count(), 9);
    }

    #[test]
    fn family_counts_match_closed_forms() {
        for n in 3..=9 {
            let sun = FamilySpec::Sun { n }.generate().unwrap();
            assert_eq!(sun.vertex_count(), 2 * n);
            assert_eq!(sun.edge_count(), n * (n - 1) / 2 + 2 * n);

            let sunlet = FamilySpec::Sunlet { n }.generate().unwrap();
            assert_eq!(sunlet.vertex_count(), 2 * n);
            assert_eq!(sunlet.edge_count(), 2 * n);

            let helm = FamilySpec::Helm { n }.generate().unwrap();
            assert_eq!(helm.vertex_count(), 2 * n + 1);
            assert_eq!(helm.edge_count(), 3 * n);

            for m in 2..=5 {
                let ac = FamilySpec::ArmedCrown { m, n }.generate().unwrap();
                assert_eq!(ac.vertex_count(), n * m);
                assert_eq!(ac.edge_count(), n * m);
            }
        }
    }

    #[test]
    fn armed_crown_with_two_vertex_arms_looks_like_the_sunlet() {
        // Isomorphic by construction: one extra vertex per arm is a pendant.
        let ac = FamilySpec::ArmedCrown { m: 2, n: 4 }.generate().unwrap();
        let sunlet = FamilySpec::Sunlet { n: 4 }.generate().unwrap();
        assert_eq!(ac.vertex_count(), 8);
        assert_eq!(ac.edge_count(), 8);
        assert_eq!(ac.vertex_count(), sunlet.vertex_count());
        assert_eq!(ac.edge_count(), sunlet.edge_count());
        let mut ac_degrees = ac.degree_sequence();
        let mut sunlet_degrees = sunlet.degree_sequence();
        ac_degrees.sort_unstable();
        sunlet_degrees.sort_unstable();
        assert_eq!(ac_degrees, sunlet_degrees);
        assert_eq!(
            crate::solvers::mis_bruteforce(&ac).unwrap().value,
            crate::solvers::mis_bruteforce(&sunlet).unwrap().value
        );
        assert_eq!(
            crate::solvers::matching_bruteforce(&ac).unwrap().value,
            crate::solvers::matching_bruteforce(&sunlet).unwrap().value
        );
    }

    #[test]
    fn no_generated_family_has_isolated_vertices() {
        let specs = [
            FamilySpec::Complete { n: 1 },
            FamilySpec::CompleteBipartite { m: 1, n: 1 },
            FamilySpec::Path { n: 2 },
            FamilySpec::Cycle { n: 3 },
            FamilySpec::Wheel { n: 3 },
            FamilySpec::Helm { n: 3 },
            FamilySpec::Fan { n: 1 },
            FamilySpec::Sun { n: 3 },
            FamilySpec::Sunlet { n: 3 },
            FamilySpec::ArmedCrown { m: 2, n: 3 },
        ];
        for spec in specs {
            let g = spec.generate().unwrap();
            assert!(
                g.vertex_count() == 1 || !g.has_isolated_vertices(),
                "{spec} has isolated vertices"
            );
        }
    }

    #[test]
    fn parameter_bounds_are_enforced() {
        let err = FamilySpec::Wheel { n: 2 }.generate().unwrap_err();
        assert_eq!(
            err,
            FamilyError::ParameterOutOfRange {
                family: "wheel",
                param: "n",
                min: 3,
                got: 2
            }
        );
        assert!(FamilySpec::ArmedCrown { m: 1, n: 5 }.validate().is_err());
        assert!(FamilySpec::Path { n: 1 }.validate().is_err());
        assert!(FamilySpec::Fan { n: 1 }.validate().is_ok());
    }

    #[test]
    fn spec_grammar_round_trips() {
        for s in ["wheel:n=5", "armed_crown:m=3,n=4", "complete_bipartite:m=2,n=7"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!(matches!(
            "gear:n=5".parse::<FamilySpec>(),
            Err(FamilyError::UnknownFamily(_))
        ));
        assert!(matches!(
            "wheel:n=two".parse::<FamilySpec>(),
            Err(FamilyError::Malformed { .. })
        ));
        assert!(matches!(
            "wheel:m=2,n=5".parse::<FamilySpec>(),
            Err(FamilyError::Malformed { .. })
        ));
        assert!(matches!(
            "wheel:n=1".parse::<FamilySpec>(),
            Err(FamilyError::ParameterOutOfRange { .. })
        ));
    }
}
