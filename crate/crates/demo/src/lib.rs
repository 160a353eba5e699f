//! wasm-bindgen surface for the browser demo.
//!
//! Three operations, each returning a JSON string the page renders as SVG:
//!
//! - [`explore_family`]: one family member with its maximum independent set
//!   and maximum matching highlighted, plus predicted vs computed values;
//! - [`line_graph_view`]: the graph next to its line graph, showing how an
//!   independent set of the line graph is a matching of the original;
//! - [`sweep_family`]: a verification sweep over a parameter range.
//!
//! Layout coordinates are in the unit square; the page scales them.

use alphaline::harness::{FamilySelector, RunConfig};
use alphaline::{
    alpha_line, is_perfect_matching, max_matching, mis_exact, predict, FamilySpec, Graph,
    RecordStatus, DEFAULT_NODE_BUDGET,
};
use serde::Serialize;
use std::f64::consts::TAU;
use wasm_bindgen::prelude::wasm_bindgen;

/// Keeps a clumsy parameter choice from freezing the page.
const MAX_DEMO_VERTICES: usize = 64;
const MAX_DEMO_EDGES: usize = 400;
const MAX_SWEEP_ROWS: usize = 200;
const DEMO_ALPHA_LINE_EDGE_LIMIT: usize = 60;

#[derive(Serialize)]
struct VertexView {
    id: usize,
    x: f64,
    y: f64,
    in_mis: bool,
}

#[derive(Serialize)]
struct EdgeView {
    u: usize,
    v: usize,
    in_matching: bool,
}

#[derive(Serialize)]
struct ExploreView {
    spec: String,
    vertices: Vec<VertexView>,
    edges: Vec<EdgeView>,
    alpha: usize,
    nu: usize,
    alpha_line: Option<usize>,
    predicted_alpha: usize,
    predicted_alpha_line: usize,
    sum: usize,
    product: usize,
    predicted_sum: usize,
    predicted_product: usize,
    matches: bool,
    perfect_matching: bool,
    provenance: String,
}

#[derive(Serialize)]
struct LineVertexView {
    id: usize,
    x: f64,
    y: f64,
    label: String,
    in_mis: bool,
}

#[derive(Serialize)]
struct LineGraphView {
    spec: String,
    source_vertices: Vec<VertexView>,
    source_edges: Vec<EdgeView>,
    line_vertices: Vec<LineVertexView>,
    line_edges: Vec<EdgeView>,
    alpha_line: usize,
    nu: usize,
    identity_holds: bool,
    line_vertex_count: usize,
    line_edge_count: usize,
    degree_pair_count: usize,
}

#[derive(Serialize)]
struct SweepRow {
    spec: String,
    predicted_alpha: usize,
    predicted_alpha_line: usize,
    alpha: Option<usize>,
    nu: usize,
    sum: Option<usize>,
    product: Option<usize>,
    status: String,
    note: String,
}

#[derive(Serialize)]
struct SweepView {
    selector: String,
    rows: Vec<SweepRow>,
    pass: usize,
    fail: usize,
    skipped: usize,
}

#[derive(Serialize)]
struct ErrorView {
    error: String,
}

fn error_json(message: impl Into<String>) -> String {
    serde_json::to_string(&ErrorView {
        error: message.into(),
    })
    .expect("error view serializes")
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).unwrap_or_else(|e| error_json(e.to_string()))
}

fn parse_spec(family: &str, m: u32, n: u32) -> Result<FamilySpec, String> {
    let kind = alphaline::FamilyKind::from_name(family)
        .ok_or_else(|| format!("unknown family `{family}`"))?;
    let spec = kind.spec(m as usize, n as usize);
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

fn check_demo_size(g: &Graph) -> Result<(), String> {
    if g.vertex_count() > MAX_DEMO_VERTICES || g.edge_count() > MAX_DEMO_EDGES {
        return Err(format!(
            "instance too large for the demo: {} vertices / {} edges (limits {MAX_DEMO_VERTICES} / {MAX_DEMO_EDGES})",
            g.vertex_count(),
            g.edge_count()
        ));
    }
    Ok(())
}

/// Family member with optimal independent set and matching highlighted.
#[wasm_bindgen]
pub fn explore_family(family: &str, m: u32, n: u32) -> String {
    match explore_family_impl(family, m, n) {
        Ok(view) => view,
        Err(message) => error_json(message),
    }
}

fn explore_family_impl(family: &str, m: u32, n: u32) -> Result<String, String> {
    let spec = parse_spec(family, m, n)?;
    let graph = spec.generate().map_err(|e| e.to_string())?;
    check_demo_size(&graph)?;
    let prediction = predict(&spec).map_err(|e| e.to_string())?;

    let mis = mis_exact(&graph, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
    let matching = max_matching(&graph);
    let alpha_line_value = if graph.edge_count() <= DEMO_ALPHA_LINE_EDGE_LIMIT {
        Some(
            alpha_line(&graph, DEFAULT_NODE_BUDGET)
                .map_err(|e| e.to_string())?
                .value,
        )
    } else {
        None
    };

    let in_mis: Vec<bool> = {
        let mut flags = vec![false; graph.vertex_count()];
        for &v in mis.witness.vertices().unwrap_or(&[]) {
            flags[v] = true;
        }
        flags
    };
    let matched: Vec<(usize, usize)> = matching.witness.edges().unwrap_or(&[]).to_vec();

    let positions = layout(&spec, &graph);
    let vertices = (0..graph.vertex_count())
        .map(|id| VertexView {
            id,
            x: positions[id].0,
            y: positions[id].1,
            in_mis: in_mis[id],
        })
        .collect();
    let edges = graph
        .edges()
        .iter()
        .map(|&(u, v)| EdgeView {
            u,
            v,
            in_matching: matched.contains(&(u, v)),
        })
        .collect();

    let matches = mis.value == prediction.alpha
        && matching.value == prediction.alpha_line
        && alpha_line_value.is_none_or(|al| al == matching.value);

    Ok(json(&ExploreView {
        spec: spec.to_string(),
        vertices,
        edges,
        alpha: mis.value,
        nu: matching.value,
        alpha_line: alpha_line_value,
        predicted_alpha: prediction.alpha,
        predicted_alpha_line: prediction.alpha_line,
        sum: mis.value + matching.value,
        product: mis.value * matching.value,
        predicted_sum: prediction.sum(),
        predicted_product: prediction.product(),
        matches,
        perfect_matching: is_perfect_matching(&graph, matching.value),
        provenance: prediction.provenance,
    }))
}

/// The graph and its line graph side by side. The independent set found on
/// the line graph is translated back and drawn as a matching of the source.
#[wasm_bindgen]
pub fn line_graph_view(family: &str, m: u32, n: u32) -> String {
    match line_graph_view_impl(family, m, n) {
        Ok(view) => view,
        Err(message) => error_json(message),
    }
}

fn line_graph_view_impl(family: &str, m: u32, n: u32) -> Result<String, String> {
    let spec = parse_spec(family, m, n)?;
    let graph = spec.generate().map_err(|e| e.to_string())?;
    check_demo_size(&graph)?;
    if graph.edge_count() > DEMO_ALPHA_LINE_EDGE_LIMIT {
        return Err(format!(
            "line graph too large for the demo: {} edges (limit {DEMO_ALPHA_LINE_EDGE_LIMIT})",
            graph.edge_count()
        ));
    }

    let (line, labels) = graph.line_graph();
    let line_solution = alpha_line(&graph, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
    let chosen_edges: Vec<(usize, usize)> = line_solution.witness.edges().unwrap_or(&[]).to_vec();
    let nu = max_matching(&graph).value;

    let positions = layout(&spec, &graph);
    let source_vertices = (0..graph.vertex_count())
        .map(|id| VertexView {
            id,
            x: positions[id].0,
            y: positions[id].1,
            in_mis: false,
        })
        .collect();
    let source_edges = graph
        .edges()
        .iter()
        .map(|&(u, v)| EdgeView {
            u,
            v,
            in_matching: chosen_edges.contains(&(u, v)),
        })
        .collect();

    let line_positions = circle_layout(line.vertex_count(), 0.5, 0.5, 0.42);
    let line_vertices = labels
        .iter()
        .map(|label| LineVertexView {
            id: label.index,
            x: line_positions[label.index].0,
            y: line_positions[label.index].1,
            label: format!("{}-{}", label.endpoints.0, label.endpoints.1),
            in_mis: chosen_edges.contains(&label.endpoints),
        })
        .collect();
    let line_edges = line
        .edges()
        .iter()
        .map(|&(u, v)| EdgeView {
            u,
            v,
            in_matching: false,
        })
        .collect();

    let degree_pair_count: usize = graph
        .degree_sequence()
        .iter()
        .map(|&d| d * (d.saturating_sub(1)) / 2)
        .sum();

    Ok(json(&LineGraphView {
        spec: spec.to_string(),
        source_vertices,
        source_edges,
        line_vertices,
        line_edges,
        alpha_line: line_solution.value,
        nu,
        identity_holds: line_solution.value == nu,
        line_vertex_count: line.vertex_count(),
        line_edge_count: line.edge_count(),
        degree_pair_count,
    }))
}

/// Verification sweep over a selector such as `wheel:n=3..10`.
#[wasm_bindgen]
pub fn sweep_family(selector: &str) -> String {
    match sweep_family_impl(selector) {
        Ok(view) => view,
        Err(message) => error_json(message),
    }
}

fn sweep_family_impl(selector: &str) -> Result<String, String> {
    let selector: FamilySelector = selector.parse().map_err(|e: alphaline::HarnessError| e.to_string())?;
    let specs = selector.expand();
    if specs.len() > MAX_SWEEP_ROWS {
        return Err(format!(
            "sweep of {} instances exceeds the demo limit of {MAX_SWEEP_ROWS}",
            specs.len()
        ));
    }
    let config = RunConfig::default();
    let records = alphaline::verify_family(&selector, &config).map_err(|e| e.to_string())?;

    let mut view = SweepView {
        selector: selector.to_string(),
        rows: Vec::with_capacity(records.len()),
        pass: 0,
        fail: 0,
        skipped: 0,
    };
    for record in &records {
        match record.status() {
            RecordStatus::Pass => view.pass += 1,
            RecordStatus::Fail => view.fail += 1,
            RecordStatus::Skipped => view.skipped += 1,
        }
        view.rows.push(SweepRow {
            spec: record.spec.to_string(),
            predicted_alpha: record.predicted.alpha,
            predicted_alpha_line: record.predicted.alpha_line,
            alpha: record.alpha,
            nu: record.nu,
            sum: record.computed_sum(),
            product: record.computed_product(),
            status: record.status().to_string(),
            note: record.note.clone(),
        });
    }
    Ok(json(&view))
}

// ---------------------------------------------------------------------------
// Layouts
// ---------------------------------------------------------------------------

fn circle_layout(count: usize, cx: f64, cy: f64, r: f64) -> Vec<(f64, f64)> {
    (0..count)
        .map(|i| {
            let angle = TAU * i as f64 / count.max(1) as f64 - TAU / 4.0;
            (cx + r * angle.cos(), cy + r * angle.sin())
        })
        .collect()
}

fn ring_angle(i: usize, n: usize) -> f64 {
    TAU * i as f64 / n.max(1) as f64 - TAU / 4.0
}

/// Unit-square positions per family, following the canonical vertex layout.
fn layout(spec: &FamilySpec, graph: &Graph) -> Vec<(f64, f64)> {
    let total = graph.vertex_count();
    match *spec {
        FamilySpec::Complete { n } | FamilySpec::Cycle { n } => circle_layout(n, 0.5, 0.5, 0.4),
        FamilySpec::Path { n } => (0..n)
            .map(|i| (0.08 + 0.84 * i as f64 / (n - 1).max(1) as f64, 0.5))
            .collect(),
        FamilySpec::CompleteBipartite { m, n } => {
            let column = |count: usize, x: f64| -> Vec<(f64, f64)> {
                (0..count)
                    .map(|i| {
                        let y = if count == 1 {
                            0.5
                        } else {
                            0.1 + 0.8 * i as f64 / (count - 1) as f64
                        };
                        (x, y)
                    })
                    .collect()
            };
            let mut positions = column(m, 0.25);
            positions.extend(column(n, 0.75));
            positions
        }
        FamilySpec::Wheel { n } => {
            let mut positions = circle_layout(n, 0.5, 0.5, 0.4);
            positions.push((0.5, 0.5));
            positions
        }
        FamilySpec::Helm { n } => {
            let mut positions = circle_layout(n, 0.5, 0.5, 0.26);
            positions.push((0.5, 0.5));
            for i in 0..n {
                let a = ring_angle(i, n);
                positions.push((0.5 + 0.44 * a.cos(), 0.5 + 0.44 * a.sin()));
            }
            positions
        }
        FamilySpec::Fan { n } => {
            // Path vertices on an upper arc, hub below.
            let mut positions: Vec<(f64, f64)> = (0..n)
                .map(|i| {
                    let t = if n == 1 { 0.5 } else { i as f64 / (n - 1) as f64 };
                    let angle = std::f64::consts::PI * (1.0 - t);
                    (0.5 + 0.42 * angle.cos(), 0.62 - 0.45 * angle.sin())
                })
                .collect();
            positions.push((0.5, 0.82));
            positions
        }
        FamilySpec::Sun { n } => {
            let mut positions = circle_layout(n, 0.5, 0.5, 0.24);
            for i in 0..n {
                // Outer vertex i sits between clique vertices i and i+1.
                let a = (ring_angle(i, n) + ring_angle(i + 1, n)) / 2.0;
                positions.push((0.5 + 0.44 * a.cos(), 0.5 + 0.44 * a.sin()));
            }
            positions
        }
        FamilySpec::Sunlet { n } => {
            let mut positions = circle_layout(n, 0.5, 0.5, 0.26);
            for i in 0..n {
                let a = ring_angle(i, n);
                positions.push((0.5 + 0.44 * a.cos(), 0.5 + 0.44 * a.sin()));
            }
            positions
        }
        FamilySpec::ArmedCrown { m, n } => {
            let mut positions = circle_layout(n, 0.5, 0.5, 0.16);
            let step = 0.3 / (m - 1) as f64;
            for i in 0..n {
                let a = ring_angle(i, n);
                for j in 0..m - 1 {
                    let r = 0.16 + step * (j + 1) as f64;
                    positions.push((0.5 + r * a.cos(), 0.5 + r * a.sin()));
                }
            }
            positions
        }
    }
    .into_iter()
    .take(total)
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explore_wheel_reports_the_parity_split() {
        let view = explore_family("wheel", 0, 5);
        let parsed: serde_json::Value = serde_json::from_str(&view).unwrap();
        assert_eq!(parsed["alpha"], 2);
        assert_eq!(parsed["nu"], 3);
        assert_eq!(parsed["matches"], true);
        assert_eq!(parsed["perfect_matching"], true);
        assert_eq!(parsed["vertices"].as_array().unwrap().len(), 6);
        let mis_count = parsed["vertices"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|v| v["in_mis"] == true)
            .count();
        assert_eq!(mis_count, 2);
    }

    #[test]
    fn line_view_translates_the_witness_back() {
        let view = line_graph_view("cycle", 0, 5);
        let parsed: serde_json::Value = serde_json::from_str(&view).unwrap();
        assert_eq!(parsed["alpha_line"], 2);
        assert_eq!(parsed["nu"], 2);
        assert_eq!(parsed["identity_holds"], true);
        assert_eq!(parsed["line_vertex_count"], 5);
        assert_eq!(parsed["line_edge_count"], parsed["degree_pair_count"]);
        let matched = parsed["source_edges"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|e| e["in_matching"] == true)
            .count();
        assert_eq!(matched, 2);
    }

    #[test]
    fn sweep_reports_statuses() {
        let view = sweep_family("sunlet:n=3..8");
        let parsed: serde_json::Value = serde_json::from_str(&view).unwrap();
        assert_eq!(parsed["rows"].as_array().unwrap().len(), 6);
        assert_eq!(parsed["pass"], 6);
        assert_eq!(parsed["fail"], 0);
    }

    #[test]
    fn errors_come_back_as_json() {
        let view = explore_family("gear", 0, 5);
        let parsed: serde_json::Value = serde_json::from_str(&view).unwrap();
        assert!(parsed["error"].as_str().unwrap().contains("gear"));

        let view = explore_family("wheel", 0, 2);
        let parsed: serde_json::Value = serde_json::from_str(&view).unwrap();
        assert!(parsed["error"].as_str().unwrap().contains("n >= 3"));

        let view = explore_family("complete", 0, 40);
        let parsed: serde_json::Value = serde_json::from_str(&view).unwrap();
        assert!(parsed["error"].as_str().unwrap().contains("too large"));
    }

    #[test]
    fn layouts_cover_every_vertex_inside_the_unit_square() {
        let specs = [
            FamilySpec::Complete { n: 6 },
            FamilySpec::CompleteBipartite { m: 3, n: 4 },
            FamilySpec::Path { n: 5 },
            FamilySpec::Cycle { n: 6 },
            FamilySpec::Wheel { n: 6 },
            FamilySpec::Helm { n: 5 },
            FamilySpec::Fan { n: 5 },
            FamilySpec::Sun { n: 4 },
            FamilySpec::Sunlet { n: 5 },
            FamilySpec::ArmedCrown { m: 4, n: 5 },
        ];
        for spec in specs {
            let g = spec.generate().unwrap();
            let positions = layout(&spec, &g);
            assert_eq!(positions.len(), g.vertex_count(), "{spec}");
            for (x, y) in positions {
                assert!((0.0..=1.0).contains(&x) && (0.0..=1.0).contains(&y), "{spec}");
            }
        }
    }
}
