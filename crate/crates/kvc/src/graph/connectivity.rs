//! Vertex connectivity via unit-capacity max-flow (Menger).
//!
//! Each vertex is split into an in-node and an out-node joined by a
//! capacity-1 arc, so edge-disjoint paths in the split digraph correspond to
//! internally vertex-disjoint paths in the graph. Global connectivity uses
//! the classical scheme: flows from a minimum-degree vertex to all of its
//! non-neighbours, plus flows between non-adjacent pairs of its neighbours.

use super::{Graph, GraphError};

/// Max-flow state over the vertex-split digraph for one (s, t) query.
struct SplitFlow<'a> {
    g: &'a Graph,
    s: usize,
    t: usize,
    /// vertex_used[v]: the in->out arc of v is saturated.
    vertex_used: Vec<bool>,
    /// edge_flow holds directed flow on graph edges as (from, to) pairs.
    edge_flow: std::collections::HashMap<(usize, usize), i32>,
}

/// Node in the split digraph: (vertex, side); side 0 = in, 1 = out.
type SplitNode = (usize, u8);

impl<'a> SplitFlow<'a> {
    fn new(g: &'a Graph, s: usize, t: usize) -> Self {
        SplitFlow {
            g,
            s,
            t,
            vertex_used: vec![false; g.n()],
            edge_flow: std::collections::HashMap::new(),
        }
    }

    fn flow_on(&self, from: usize, to: usize) -> i32 {
        *self.edge_flow.get(&(from, to)).unwrap_or(&0)
    }

    /// Residual arcs out of a split node.
    fn residual_out(&self, node: SplitNode, push: &mut Vec<SplitNode>) {
        let (v, side) = node;
        if side == 0 {
            // in(v) -> out(v) if unsaturated; plus reverse arcs of incoming
            // edge flow (undo flow that entered v).
            if !self.vertex_used[v] || v == self.s || v == self.t {
                push.push((v, 1));
            }
            for &w in self.g.neighbors(v) {
                if self.flow_on(v, w) < 0 {
                    push.push((w, 1));
                }
            }
        } else {
            // out(v) -> in(w) for each edge with residual capacity; plus the
            // reverse of the in->out arc (never useful for v = s).
            for &w in self.g.neighbors(v) {
                if self.flow_on(v, w) < 1 {
                    push.push((w, 0));
                }
            }
            if self.vertex_used[v] {
                push.push((v, 0));
            }
        }
    }

    /// One BFS augmentation; returns false when t is unreachable.
    fn augment(&mut self) -> bool {
        let n = self.g.n();
        let idx = |(v, side): SplitNode| v * 2 + side as usize;
        let mut prev: Vec<Option<SplitNode>> = vec![None; 2 * n];
        let source = (self.s, 1);
        let target = (self.t, 0);
        prev[idx(source)] = Some(source);
        let mut queue = vec![source];
        let mut head = 0;
        let mut scratch = Vec::new();
        'bfs: while head < queue.len() {
            let node = queue[head];
            head += 1;
            scratch.clear();
            self.residual_out(node, &mut scratch);
            for &next in &scratch {
                if prev[idx(next)].is_none() {
                    prev[idx(next)] = Some(node);
                    if next == target {
                        break 'bfs;
                    }
                    queue.push(next);
                }
            }
        }
        if prev[idx(target)].is_none() {
            return false;
        }
        // Walk the path backwards applying residual updates.
        let mut cur = target;
        while cur != source {
            let p = prev[idx(cur)].unwrap();
            match (p, cur) {
                ((v, 0), (w, 1)) if v == w => self.vertex_used[v] = true,
                ((v, 1), (w, 0)) if v == w => self.vertex_used[v] = false,
                ((v, 1), (w, 0)) => {
                    let f = self.edge_flow.entry((v, w)).or_insert(0);
                    *f += 1;
                    *self.edge_flow.entry((w, v)).or_insert(0) -= 1;
                }
                ((v, 0), (w, 1)) => {
                    // Cancelling flow that previously entered v from w.
                    let f = self.edge_flow.entry((w, v)).or_insert(0);
                    *f -= 1;
                    *self.edge_flow.entry((v, w)).or_insert(0) += 1;
                }
                _ => unreachable!("split-graph arcs connect only these node kinds"),
            }
            cur = p;
        }
        true
    }

    /// Vertices whose in-node is residually reachable from out(s) while their
    /// out-node is not: a minimum s-t vertex separator once flow is maximum.
    fn min_separator(&self) -> Vec<usize> {
        let n = self.g.n();
        let idx = |(v, side): SplitNode| v * 2 + side as usize;
        let mut seen = vec![false; 2 * n];
        let source = (self.s, 1);
        seen[idx(source)] = true;
        let mut queue = vec![source];
        let mut head = 0;
        let mut scratch = Vec::new();
        while head < queue.len() {
            let node = queue[head];
            head += 1;
            scratch.clear();
            self.residual_out(node, &mut scratch);
            for &next in &scratch {
                if !seen[idx(next)] {
                    seen[idx(next)] = true;
                    queue.push(next);
                }
            }
        }
        (0..n)
            .filter(|&v| seen[v * 2] && !seen[v * 2 + 1])
            .collect()
    }
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths together with a
/// minimum `s`-`t` vertex separator. Requires `s` and `t` non-adjacent.
pub fn local_vertex_connectivity(
    g: &Graph,
    s: usize,
    t: usize,
) -> Result<(usize, Vec<usize>), GraphError> {
    let (value, sep) = local_flow(g, s, t, None)?;
    Ok((value, sep.expect("uncapped flow always yields a separator")))
}

/// Flow between non-adjacent s, t; when `cap` is reached early the separator
/// is not computed.
fn local_flow(
    g: &Graph,
    s: usize,
    t: usize,
    cap: Option<usize>,
) -> Result<(usize, Option<Vec<usize>>), GraphError> {
    for &v in &[s, t] {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    if g.has_edge(s, t) {
        return Err(GraphError::AdjacentPair(s, t));
    }
    let mut flow = SplitFlow::new(g, s, t);
    let mut value = 0;
    loop {
        if let Some(c) = cap {
            if value >= c {
                return Ok((value, None));
            }
        }
        if !flow.augment() {
            break;
        }
        value += 1;
    }
    Ok((value, Some(flow.min_separator())))
}

/// Pairs that certify global connectivity: a minimum-degree vertex against
/// its non-neighbours, and non-adjacent pairs among its neighbours.
fn witness_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let v = (0..g.n())
        .min_by_key(|&v| (g.degree(v), v))
        .expect("nonempty graph");
    let mut pairs = Vec::new();
    let mut in_nbhd = vec![false; g.n()];
    in_nbhd[v] = true;
    for &w in g.neighbors(v) {
        in_nbhd[w] = true;
    }
    for w in 0..g.n() {
        if !in_nbhd[w] {
            pairs.push((v, w));
        }
    }
    let nb = g.neighbors(v);
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            if !g.has_edge(x, y) {
                pairs.push((x, y));
            }
        }
    }
    pairs
}

/// The vertex connectivity `kappa(G)`. Complete graphs yield `n - 1`,
/// disconnected graphs `0`; graphs with fewer than two vertices are an error.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, GraphError> {
    vertex_connectivity_with_separator(g).map(|(k, _)| k)
}

/// Connectivity together with a minimum vertex separator; `None` for complete
/// graphs, which have no separator.
pub fn vertex_connectivity_with_separator(
    g: &Graph,
) -> Result<(usize, Option<Vec<usize>>), GraphError> {
    if g.n() < 2 {
        return Err(GraphError::UndefinedConnectivity);
    }
    if g.is_complete() {
        return Ok((g.n() - 1, None));
    }
    if !g.is_connected() {
        return Ok((0, Some(Vec::new())));
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    for (s, t) in witness_pairs(g) {
        let cap = best.as_ref().map(|(k, _)| *k);
        let (value, sep) = local_flow(g, s, t, cap)?;
        if best.as_ref().map_or(true, |(k, _)| value < *k) {
            best = Some((value, sep.expect("value below cap yields a separator")));
        }
    }
    let (k, sep) = best.expect("non-complete graph has a witness pair");
    Ok((k, Some(sep)))
}

/// Whether `kappa(G) >= k`, with flows capped at `k` for early exit.
pub(crate) fn has_connectivity_at_least(g: &Graph, k: usize) -> Result<bool, GraphError> {
    if g.n() < 2 {
        return Err(GraphError::UndefinedConnectivity);
    }
    if g.is_complete() {
        return Ok(g.n() - 1 >= k);
    }
    if k == 0 {
        return Ok(true);
    }
    if !g.is_connected() || (0..g.n()).any(|v| g.degree(v) < k) {
        return Ok(false);
    }
    for (s, t) in witness_pairs(g) {
        let (value, _) = local_flow(g, s, t, Some(k))?;
        if value < k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `G` is k-connected.
///
/// For `k >= 2` this is the standard definition: at least `k + 1` vertices
/// and no separator of size below `k`. For `k = 1` a single vertex counts as
/// connected, so `K_1` is 1-connected; this convention is what makes
/// singleton traces on leaves realizable.
pub fn is_k_connected(g: &Graph, k: usize) -> Result<bool, GraphError> {
    if k < 1 {
        return Err(GraphError::KTooSmall(k));
    }
    if k == 1 {
        return Ok(g.n() >= 1 && g.is_connected());
    }
    if g.n() < k + 1 {
        return Ok(false);
    }
    has_connectivity_at_least(g, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&Graph::complete(5)).unwrap(), 4);
        assert_eq!(vertex_connectivity(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(vertex_connectivity(&Graph::path(4)).unwrap(), 1);
        assert_eq!(
            vertex_connectivity(&Graph::new(3, [(0, 1)]).unwrap()).unwrap(),
            0
        );
        assert_eq!(
            vertex_connectivity(&Graph::new(1, []).unwrap()).unwrap_err(),
            GraphError::UndefinedConnectivity
        );
    }

    #[test]
    fn k_connected_examples() {
        assert!(is_k_connected(&Graph::complete(3), 2).unwrap());
        assert!(!is_k_connected(&Graph::complete(2), 2).unwrap());
        assert!(is_k_connected(&Graph::new(1, []).unwrap(), 1).unwrap());
        assert!(!is_k_connected(&Graph::new(0, []).unwrap(), 1).unwrap());
        assert!(is_k_connected(&Graph::cycle(7), 2).unwrap());
        assert!(!is_k_connected(&Graph::cycle(7), 3).unwrap());
        assert_eq!(
            is_k_connected(&Graph::complete(3), 0).unwrap_err(),
            GraphError::KTooSmall(0)
        );
    }

    #[test]
    fn k33_has_connectivity_three() {
        let edges = (0..3).flat_map(|u| (3..6).map(move |v| (u, v)));
        let g = Graph::new(6, edges).unwrap();
        assert_eq!(vertex_connectivity(&g).unwrap(), 3);
    }

    #[test]
    fn petersen_graph_connectivity() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(vertex_connectivity(&g).unwrap(), 3);
        assert!(is_k_connected(&g, 3).unwrap());
        assert!(!is_k_connected(&g, 4).unwrap());
    }

    #[test]
    fn separator_disconnects() {
        // Two K_4 blocks sharing two vertices: connectivity 2.
        let mut edges = vec![];
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        for &(u, v) in &[(2, 4), (2, 5), (3, 4), (3, 5), (4, 5)] {
            edges.push((u, v));
        }
        let g = Graph::new(6, edges).unwrap();
        let (k, sep) = vertex_connectivity_with_separator(&g).unwrap();
        assert_eq!(k, 2);
        let sep = sep.unwrap();
        assert_eq!(sep.len(), 2);
        let rest: crate::graph::VertexSet =
            (0..6).filter(|v| !sep.contains(v)).collect();
        let (h, _) = g.induced_subgraph(&rest).unwrap();
        assert!(!h.is_connected());
    }
}
