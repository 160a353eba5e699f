//! Immutable simple-graph representation and the line-graph transform.
//!
//! Vertices are dense indices `0..n`. Edges are unordered pairs, stored
//! normalized as `(min, max)` and sorted; that order fixes the vertex
//! numbering of the line graph, so witnesses and reports are reproducible.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,
    #[error("self-loop ({0}, {0}) is not allowed in a simple graph")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) has an endpoint out of range for {n} vertices")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
}

/// Immutable undirected simple graph.
///
/// Construction validates simplicity (no self-loops, no parallel edges,
/// endpoints in range); after that the adjacency view is guaranteed
/// consistent with the edge set and instances can be shared freely across
/// threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// One row of the edge table produced by [`Graph::line_graph`]: line-graph
/// vertex `index` stands for the original edge `endpoints`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeLabel {
    pub index: usize,
    pub endpoints: (usize, usize),
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Pairs may appear in either orientation and duplicates collapse to a
    /// single edge. Self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_normalized(n, edges))
    }

    /// Internal constructor for edge lists already normalized, sorted, and
    /// validated. Unlike [`Graph::new`] this permits `n = 0`, which arises
    /// as the line graph of an edgeless graph.
    pub(crate) fn from_normalized(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Per-vertex degrees, indexed by vertex. The sum is `2 * edge_count`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    /// Builds the line graph together with the table mapping each line-graph
    /// vertex back to the edge it stands for.
    ///
    /// Line-graph vertex `i` is the `i`-th edge in [`Graph::edges`] order;
    /// two line-graph vertices are adjacent iff the corresponding edges share
    /// an endpoint. In a simple graph two distinct edges share at most one
    /// endpoint, so collecting incident pairs per vertex produces each
    /// line-graph edge exactly once.
    pub fn line_graph(&self) -> (Graph, Vec<EdgeLabel>) {
        let labels: Vec<EdgeLabel> = self
            .edges
            .iter()
            .enumerate()
            .map(|(index, &endpoints)| EdgeLabel { index, endpoints })
            .collect();

        let mut incident = vec![Vec::new(); self.n];
        for label in &labels {
            let (u, v) = label.endpoints;
            incident[u].push(label.index);
            incident[v].push(label.index);
        }

        let mut line_edges = Vec::new();
        for list in &incident {
            for (k, &e) in list.iter().enumerate() {
                for &f in &list[k + 1..] {
                    line_edges.push((e.min(f), e.max(f)));
                }
            }
        }
        line_edges.sort_unstable();

        (Graph::from_normalized(labels.len(), line_edges), labels)
    }
}
