//! Closed-form predictions for the independence number of each family member
//! and of its line graph.
//!
//! The line-graph value equals the matching number (an independent set of
//! `L(G)` is exactly a set of pairwise non-adjacent edges of `G`), so each
//! entry is the pair `(alpha(G), nu(G))`. Sums and products are derived from
//! the pair on demand, never stored.

use crate::families::{FamilyError, FamilySpec};
use serde::{Deserialize, Serialize};

/// Predicted `(alpha(G), alpha(L(G)))` pair for one family member, with a
/// provenance string naming the closed form used. Provenance strings appear
/// verbatim in verification reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PredictionRow", into = "PredictionRow")]
pub struct Prediction {
    pub alpha: usize,
    pub alpha_line: usize,
    pub provenance: String,
}

impl Prediction {
    fn new(alpha: usize, alpha_line: usize, provenance: impl Into<String>) -> Self {
        Prediction {
            alpha,
            alpha_line,
            provenance: provenance.into(),
        }
    }

    pub fn sum(&self) -> usize {
        self.alpha + self.alpha_line
    }

    pub fn product(&self) -> usize {
        self.alpha * self.alpha_line
    }
}

/// Serialized form; sum and product are emitted for readers but validated
/// and discarded on parse so they can never drift from the pair.
#[derive(Serialize, Deserialize)]
struct PredictionRow {
    alpha: usize,
    alpha_line: usize,
    sum: usize,
    product: usize,
    provenance: String,
}

impl From<Prediction> for PredictionRow {
    fn from(p: Prediction) -> Self {
        PredictionRow {
            alpha: p.alpha,
            alpha_line: p.alpha_line,
            sum: p.sum(),
            product: p.product(),
            provenance: p.provenance,
        }
    }
}

impl TryFrom<PredictionRow> for Prediction {
    type Error = String;

    fn try_from(row: PredictionRow) -> Result<Self, Self::Error> {
        let p = Prediction::new(row.alpha, row.alpha_line, row.provenance);
        if p.sum() != row.sum || p.product() != row.product {
            return Err(format!(
                "inconsistent prediction: ({}, {}) does not give sum {} and product {}",
                p.alpha, p.alpha_line, row.sum, row.product
            ));
        }
        Ok(p)
    }
}

/// Closed-form `(alpha, alpha(L))` for a family member.
///
/// Every valid parameter choice maps to exactly one case below; the
/// verification harness checks each one against the exact solvers and, on
/// small instances, the exhaustive oracles.
pub fn predict(spec: &FamilySpec) -> Result<Prediction, FamilyError> {
    spec.validate()?;
    let p = match *spec {
        FamilySpec::Complete { n } => Prediction::new(
            1,
            n / 2,
            "complete: every pair is adjacent, so alpha = 1; disjoint edges pair the vertices, nu = floor(n/2)",
        ),
        FamilySpec::CompleteBipartite { m, n } => Prediction::new(
            m.max(n),
            m.min(n),
            "complete bipartite: alpha = max(m,n) (one full part); nu = min(m,n) (cross edges saturate the smaller part)",
        ),
        FamilySpec::Path { n } => Prediction::new(
            n.div_ceil(2),
            n / 2,
            "path: alternate vertices from one end, alpha = ceil(n/2); alternate edges, nu = floor(n/2)",
        ),
        FamilySpec::Cycle { n } => Prediction::new(
            n / 2,
            n / 2,
            "cycle: alternation closes on itself, alpha = nu = floor(n/2)",
        ),
        FamilySpec::Wheel { n } => Prediction::new(
            n / 2,
            n.div_ceil(2),
            "wheel: hub conflicts with every rim vertex, alpha = floor(n/2) from the rim cycle; \
             nu = ceil(n/2): alternate rim edges and, for odd n, one spoke to the uncovered rim vertex",
        ),
        FamilySpec::Helm { n } => Prediction::new(
            n + 1,
            n,
            "helm: pendants plus the hub are independent, alpha = n+1; the n pendant edges are a maximum matching on 2n+1 vertices",
        ),
        FamilySpec::Fan { n } => Prediction::new(
            n.div_ceil(2),
            n.div_ceil(2),
            "fan: alpha = ceil(n/2) by alternating along the path; \
             nu = ceil(n/2): alternate path edges and, for odd n, one spoke to the uncovered path vertex",
        ),
        FamilySpec::Sun { n } => Prediction::new(
            n,
            n,
            "sun: the n outer vertices are independent and maximum; the n outer-to-clique edges perfectly match 2n vertices",
        ),
        FamilySpec::Sunlet { n } => Prediction::new(
            n,
            n,
            "sunlet: the n pendants are independent and maximum; the n pendant edges perfectly match 2n vertices",
        ),
        FamilySpec::ArmedCrown { m, n } => {
            if m % 2 == 1 && n % 2 == 1 {
                Prediction::new(
                    (n / 2) * m.div_ceil(2) + n.div_ceil(2) * ((m - 1) / 2),
                    n / 2 + n * ((m - 1) / 2),
                    "armed crown, m and n odd (arms are paths on m vertices counting the cycle vertex): \
                     alpha = floor(n/2)*(m+1)/2 + ceil(n/2)*(m-1)/2, alternating which arms contribute their cycle vertex; \
                     nu = floor(n/2) + n*(m-1)/2, arm-interior edges plus alternate cycle edges",
                )
            } else {
                Prediction::new(
                    n * m / 2,
                    n * m / 2,
                    "armed crown, m and n not both odd (arms are paths on m vertices counting the cycle vertex): \
                     alpha = nu = nm/2",
                )
            }
        }
    };
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{matching_bruteforce, mis_bruteforce};

    #[test]
    fn complete_graph_pair() {
        for n in 1..=12 {
            let p = predict(&FamilySpec::Complete { n }).unwrap();
            assert_eq!((p.alpha, p.alpha_line), (1, n / 2));
            assert_eq!(p.sum(), n / 2 + 1);
            assert_eq!(p.product(), n / 2);
        }
    }

    #[test]
    fn helm_sum_and_product() {
        let p = predict(&FamilySpec::Helm { n: 3 }).unwrap();
        assert_eq!(p.sum(), 7);
        assert_eq!(p.product(), 12);
    }

    #[test]
    fn armed_crown_odd_odd_pair() {
        let p = predict(&FamilySpec::ArmedCrown { m: 3, n: 3 }).unwrap();
        assert_eq!((p.alpha, p.alpha_line), (4, 4));
        assert_eq!(p.sum(), 8);
        assert_eq!(p.product(), 16);
    }

    #[test]
    fn armed_crown_even_cases_collapse_to_half_the_vertices() {
        for m in 2..=6 {
            for n in 3..=7 {
                if m % 2 == 1 && n % 2 == 1 {
                    continue;
                }
                let p = predict(&FamilySpec::ArmedCrown { m, n }).unwrap();
                assert_eq!(p.alpha, n * m / 2);
                assert_eq!(p.alpha_line, n * m / 2);
                assert_eq!(p.product(), n * n * m * m / 4);
            }
        }
    }

    #[test]
    fn armed_crown_odd_odd_grouped_sum_identity() {
        // The grouped closed form floor(n/2)*[(m+1)/2 + 1] + [(m-1)/2]*[n + ceil(n/2)]
        // must equal alpha + alpha_line of the pair.
        for m in (3..=15).step_by(2) {
            for n in (3..=15).step_by(2) {
                let p = predict(&FamilySpec::ArmedCrown { m, n }).unwrap();
                let grouped = (n / 2) * (m.div_ceil(2) + 1) + ((m - 1) / 2) * (n + n.div_ceil(2));
                assert_eq!(p.sum(), grouped, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn wheel_pair_matches_exhaustive_oracles() {
        // The matching number is ceil(n/2), not floor(n/2): for odd n the rim
        // alternation leaves one rim vertex uncovered and a spoke picks it up
        // (n = 3 gives the complete graph on 4 vertices, whose nu is 2).
        for n in 3..=10 {
            let p = predict(&FamilySpec::Wheel { n }).unwrap();
            let g = FamilySpec::Wheel { n }.generate().unwrap();
            assert_eq!(p.alpha, mis_bruteforce(&g).unwrap().value, "alpha, n={n}");
            assert_eq!(
                p.alpha_line,
                matching_bruteforce(&g).unwrap().value,
                "alpha_line, n={n}"
            );
        }
    }

    #[test]
    fn fan_parity_cases() {
        for n in 1..=12 {
            let p = predict(&FamilySpec::Fan { n }).unwrap();
            if n % 2 == 0 {
                assert_eq!(p.sum(), n);
                assert_eq!(p.product(), n * n / 4);
            } else {
                assert_eq!(p.sum(), n + 1);
                assert_eq!(p.product(), (n + 1) * (n + 1) / 4);
            }
        }
    }

    #[test]
    fn sun_and_sunlet_square_products() {
        for n in 3..=10 {
            for spec in [FamilySpec::Sun { n }, FamilySpec::Sunlet { n }] {
                let p = predict(&spec).unwrap();
                assert_eq!(p.sum(), 2 * n);
                assert_eq!(p.product(), n * n);
            }
        }
    }

    #[test]
    fn predict_rejects_invalid_parameters() {
        assert!(predict(&FamilySpec::Cycle { n: 2 }).is_err());
        assert!(predict(&FamilySpec::ArmedCrown { m: 1, n: 3 }).is_err());
    }

    #[test]
    fn prediction_json_keeps_sum_and_product_consistent() {
        let p = predict(&FamilySpec::Helm { n: 4 }).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.contains("\"sum\":9"));
        let back: Prediction = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);

        let tampered = json.replace("\"sum\":9", "\"sum\":10");
        assert!(serde_json::from_str::<Prediction>(&tampered).is_err());
    }
}
