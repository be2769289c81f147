//! Finite undirected simple graphs with dense vertex ids `0..n`.
//!
//! Everything downstream (shattering, bounds, reductions) works on this one
//! representation. Vertex labels are carried as metadata only; no algorithm
//! ever looks at them.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

mod blocks;
mod connectivity;
mod cores;
pub mod io;
mod planarity;
mod twins;

pub use blocks::blocks;
pub use connectivity::{
    is_k_connected, local_vertex_connectivity, vertex_connectivity,
    vertex_connectivity_with_separator,
};
pub use cores::k_core;
pub use planarity::is_planar;
pub(crate) use twins::symmetry_class_ids;
pub use twins::{symmetry_classes, twin_classes, TwinMode};

/// Errors raised by graph construction and the connectivity machinery.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("undefined connectivity: graph has fewer than two vertices")]
    UndefinedConnectivity,
    #[error("k must be at least 1, got {0}")]
    KTooSmall(usize),
    #[error("vertices {0} and {1} are adjacent; no separator exists")]
    AdjacentPair(usize, usize),
    #[error("label vector has length {got}, expected {expected}")]
    LabelLengthMismatch { got: usize, expected: usize },
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops, duplicate edges
    /// and endpoints `>= n`.
    pub fn new(
        n: usize,
        edge_list: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edge_list {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for &w in &[u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adj,
            edges: seen.into_iter().collect(),
            labels: None,
        })
    }

    /// Attaches one label per vertex. Labels are metadata only.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelLengthMismatch {
                got: labels.len(),
                expected: self.n,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as canonical `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// True iff the graph has exactly one connected component; false for the
    /// empty graph.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.component_of(0).len() == self.n
    }

    /// Vertices reachable from `start`, ascending.
    pub fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut queue = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        queue.sort_unstable();
        queue
    }

    /// Connected components, each ascending, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for v in 0..self.n {
            if !seen[v] {
                let comp = self.component_of(v);
                for &w in &comp {
                    seen[w] = true;
                }
                out.push(comp);
            }
        }
        out
    }

    /// Induced subgraph on `set`, together with the map new id -> old id
    /// (ascending, so new ids are ranks).
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        set.check_range(self.n)?;
        let map: Vec<usize> = set.iter().collect();
        let mut rank = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            rank[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if rank[u] != usize::MAX && rank[v] != usize::MAX {
                edges.push((rank[u], rank[v]));
            }
        }
        let g = Graph::new(map.len(), edges).expect("induced subgraph of a simple graph is simple");
        Ok((g, map))
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    /// Cycle `C_n` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|u| (u, (u + 1) % n))).expect("cycle is simple")
    }

    /// Path `P_n` on vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|u| (u - 1, u))).expect("path is simple")
    }

    /// Star `K_{1,leaves}` with centre `0`.
    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }
}

/// A subset of the vertices of an associated graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: BTreeSet<usize>,
}

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet::default()
    }

    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.members.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.members.remove(&v)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn min(&self) -> Option<usize> {
        self.members.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.members.union(&other.members).copied().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.members.intersection(&other.members).copied().collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.members.difference(&other.members).copied().collect()
    }

    pub(crate) fn check_range(&self, n: usize) -> Result<(), GraphError> {
        match self.members.last() {
            Some(&v) if v >= n => Err(GraphError::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet {
            members: iter.into_iter().collect(),
        }
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(0, 0)]).unwrap_err(), GraphError::SelfLoop(0));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert!(matches!(
            Graph::new(2, [(0, 5)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 5, n: 2 }
        ));
    }

    #[test]
    fn connectivity_basics() {
        assert!(Graph::path(3).is_connected());
        assert!(!Graph::new(2, []).unwrap().is_connected());
        assert!(!Graph::new(0, []).unwrap().is_connected());
        assert!(Graph::new(1, []).unwrap().is_connected());
    }

    #[test]
    fn induced_subgraph_examples() {
        let (h, map) = Graph::complete(4)
            .induced_subgraph(&[0, 1, 2].into())
            .unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 3);
        assert_eq!(map, vec![0, 1, 2]);

        let (h, _) = Graph::complete(4).induced_subgraph(&VertexSet::empty()).unwrap();
        assert_eq!(h.n(), 0);

        // Three consecutive cycle vertices induce a path.
        let (h, _) = Graph::cycle(5).induced_subgraph(&[0, 1, 2].into()).unwrap();
        assert_eq!(h.m(), 2);
        assert!(h.is_connected());

        let err = Graph::cycle(5).induced_subgraph(&[0, 9].into()).unwrap_err();
        assert!(matches!(err, GraphError::VertexOutOfRange { vertex: 9, .. }));
    }

    #[test]
    fn family_constructors() {
        assert_eq!(Graph::complete(5).m(), 10);
        assert_eq!(Graph::cycle(6).m(), 6);
        assert_eq!(Graph::path(4).m(), 3);
        assert_eq!(Graph::star(5).max_degree(), 5);
    }
}
