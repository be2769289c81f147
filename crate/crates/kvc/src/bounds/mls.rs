//! Maximum-leaf spanning trees.
//!
//! The exact solver is a branch-and-bound over rooted tree growth: at each
//! step the smallest in-tree vertex with an undecided neighbour either
//! adopts it as a child or forbids that edge. Every spanning tree rooted at
//! vertex 0 is reachable through such decisions, so the search is exhaustive.
//! Pruning uses the optimistic leaf count (undecided vertices plus tree
//! vertices that can still end up with degree one) and the degree-program
//! cap. The greedy mode grows from a max-degree root, always expanding the
//! vertex with the most undecided neighbours; it is a valid spanning tree
//! and a lower bound, nothing more.

use serde::Serialize;

use crate::graph::Graph;

use super::{leaf_count_upper_bound, BoundsError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MlsMode {
    Exact,
    Greedy,
}

/// A rooted spanning tree; `parent[root] = root`. Leaves are the vertices of
/// tree degree one (the root included when it has exactly one child).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanningTreeResult {
    pub parent: Vec<usize>,
    pub leaf_count: usize,
    pub optimal: bool,
}

impl SpanningTreeResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree serializes")
    }

    /// Tree edges as canonical pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.parent
            .iter()
            .enumerate()
            .filter(|&(v, &p)| v != p)
            .map(|(v, &p)| (v.min(p), v.max(p)))
            .collect()
    }
}

fn count_leaves(parent: &[usize]) -> usize {
    let mut deg = vec![0usize; parent.len()];
    for (v, &p) in parent.iter().enumerate() {
        if v != p {
            deg[v] += 1;
            deg[p] += 1;
        }
    }
    deg.iter().filter(|&&d| d == 1).count()
}

/// Maximum-leaf spanning tree, exact or greedy. Requires a connected graph
/// on at least two vertices.
pub fn max_leaf_spanning_tree(
    g: &Graph,
    mode: MlsMode,
) -> Result<SpanningTreeResult, BoundsError> {
    if g.n() < 2 {
        return Err(BoundsError::TooSmall(g.n()));
    }
    if !g.is_connected() {
        return Err(BoundsError::Disconnected);
    }
    let greedy = greedy_tree(g);
    if matches!(mode, MlsMode::Greedy) {
        return Ok(greedy);
    }
    // If the greedy tree meets the degree-program cap it is already optimal.
    let cap = if g.max_degree() >= 2 {
        leaf_count_upper_bound(g.n(), g.max_degree())?
    } else {
        // Only P_2: its unique spanning tree has two leaves.
        return Ok(SpanningTreeResult {
            optimal: true,
            ..greedy
        });
    };
    if greedy.leaf_count == cap {
        return Ok(SpanningTreeResult {
            optimal: true,
            ..greedy
        });
    }
    let mut bb = BranchAndBound {
        g,
        parent: vec![usize::MAX; g.n()],
        children: vec![0; g.n()],
        in_tree: vec![false; g.n()],
        forbidden: std::collections::BTreeSet::new(),
        free: g.n() - 1,
        cap,
        best_leaves: greedy.leaf_count,
        // Greedy may root elsewhere; leaf counting is degree-based, so its
        // parent array is a valid incumbent as-is.
        best_parent: greedy.parent.clone(),
    };
    bb.parent[0] = 0;
    bb.in_tree[0] = true;
    bb.recurse();
    Ok(SpanningTreeResult {
        parent: bb.best_parent,
        leaf_count: bb.best_leaves,
        optimal: true,
    })
}

struct BranchAndBound<'a> {
    g: &'a Graph,
    parent: Vec<usize>,
    children: Vec<usize>,
    in_tree: Vec<bool>,
    forbidden: std::collections::BTreeSet<(usize, usize)>,
    free: usize,
    cap: usize,
    best_leaves: usize,
    best_parent: Vec<usize>,
}

impl BranchAndBound<'_> {
    /// Optimistic leaf count: every free vertex plus every tree vertex that
    /// could still end with tree degree one.
    fn potential(&self) -> usize {
        let mut p = self.free;
        for v in 0..self.g.n() {
            if !self.in_tree[v] {
                continue;
            }
            let degree_now = self.children[v] + usize::from(self.parent[v] != v);
            if degree_now <= 1 {
                p += 1;
            }
        }
        p
    }

    fn next_candidate(&self) -> Option<(usize, usize)> {
        for u in 0..self.g.n() {
            if !self.in_tree[u] {
                continue;
            }
            for &w in self.g.neighbors(u) {
                if !self.in_tree[w] && !self.forbidden.contains(&(u, w)) {
                    return Some((u, w));
                }
            }
        }
        None
    }

    fn recurse(&mut self) {
        if self.best_leaves >= self.cap {
            return;
        }
        if self.free == 0 {
            let leaves = count_leaves(&self.parent);
            if leaves > self.best_leaves
                || (leaves == self.best_leaves && self.parent < self.best_parent)
            {
                self.best_leaves = leaves;
                self.best_parent = self.parent.clone();
            }
            return;
        }
        if self.potential() <= self.best_leaves {
            return;
        }
        let Some((u, w)) = self.next_candidate() else {
            return; // remaining free vertices are unreachable on this branch
        };
        // Branch 1: adopt w as a child of u.
        self.parent[w] = u;
        self.children[u] += 1;
        self.in_tree[w] = true;
        self.free -= 1;
        self.recurse();
        self.free += 1;
        self.in_tree[w] = false;
        self.children[u] -= 1;
        self.parent[w] = usize::MAX;
        // Branch 2: never use the edge u -> w.
        self.forbidden.insert((u, w));
        self.recurse();
        self.forbidden.remove(&(u, w));
    }
}

/// Grows a tree from a max-degree root, always expanding the tree vertex
/// with the most undecided neighbours (ties to the smallest id) and
/// attaching all of them at once.
fn greedy_tree(g: &Graph) -> SpanningTreeResult {
    let n = g.n();
    let root = (0..n).max_by_key(|&v| (g.degree(v), usize::MAX - v)).unwrap();
    let mut parent = vec![usize::MAX; n];
    let mut in_tree = vec![false; n];
    parent[root] = root;
    in_tree[root] = true;
    let mut free = n - 1;
    while free > 0 {
        let best = (0..n)
            .filter(|&v| in_tree[v])
            .max_by_key(|&v| {
                let gain = g.neighbors(v).iter().filter(|&&w| !in_tree[w]).count();
                (gain, usize::MAX - v)
            })
            .expect("tree is nonempty");
        let adopt: Vec<usize> = g
            .neighbors(best)
            .iter()
            .copied()
            .filter(|&w| !in_tree[w])
            .collect();
        debug_assert!(!adopt.is_empty(), "connected graph always has a frontier");
        for w in adopt {
            parent[w] = best;
            in_tree[w] = true;
            free -= 1;
        }
    }
    let leaf_count = count_leaves(&parent);
    SpanningTreeResult {
        parent,
        leaf_count,
        optimal: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// All spanning trees by edge-subset enumeration; the test oracle.
    fn max_leaves_by_enumeration(g: &Graph) -> usize {
        let m = g.m();
        let n = g.n();
        let mut best = 0;
        for mask in 0u64..(1 << m) {
            if mask.count_ones() as usize != n - 1 {
                continue;
            }
            let edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let t = Graph::new(n, edges).unwrap();
            if t.is_connected() {
                let leaves = (0..n).filter(|&v| t.degree(v) == 1).count();
                best = best.max(leaves);
            }
        }
        best
    }

    #[test]
    fn path_and_star() {
        let r = max_leaf_spanning_tree(&Graph::path(4), MlsMode::Exact).unwrap();
        assert_eq!(r.leaf_count, 2);
        let r = max_leaf_spanning_tree(&Graph::star(5), MlsMode::Exact).unwrap();
        assert_eq!(r.leaf_count, 5);
    }

    #[test]
    fn k4_has_three_leaves() {
        // Oracle first: enumerate all 16 spanning trees of K_4.
        assert_eq!(max_leaves_by_enumeration(&Graph::complete(4)), 3);
        let r = max_leaf_spanning_tree(&Graph::complete(4), MlsMode::Exact).unwrap();
        assert_eq!(r.leaf_count, 3);
        assert!(r.optimal);
    }

    #[test]
    fn exact_matches_enumeration_on_assorted_graphs() {
        let graphs = vec![
            Graph::cycle(6),
            Graph::complete(5),
            Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap(),
            Graph::new(
                7,
                [
                    (0, 1),
                    (0, 2),
                    (1, 2),
                    (1, 3),
                    (2, 4),
                    (3, 4),
                    (3, 5),
                    (4, 6),
                    (5, 6),
                ],
            )
            .unwrap(),
        ];
        for g in graphs {
            let want = max_leaves_by_enumeration(&g);
            let got = max_leaf_spanning_tree(&g, MlsMode::Exact).unwrap();
            assert_eq!(got.leaf_count, want);
            // The tree is a real spanning tree of G.
            let t = Graph::new(g.n(), got.edges()).unwrap();
            assert!(t.is_connected());
            assert_eq!(t.m(), g.n() - 1);
            for (u, v) in got.edges() {
                assert!(g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn greedy_is_a_valid_lower_bound() {
        let g = Graph::new(
            8,
            [
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 5),
                (3, 6),
                (4, 7),
                (5, 7),
                (6, 7),
            ],
        )
        .unwrap();
        let greedy = max_leaf_spanning_tree(&g, MlsMode::Greedy).unwrap();
        let exact = max_leaf_spanning_tree(&g, MlsMode::Exact).unwrap();
        assert!(greedy.leaf_count <= exact.leaf_count);
        assert!(!greedy.optimal);
        assert!(
            exact.leaf_count <= leaf_count_upper_bound(g.n(), g.max_degree()).unwrap()
        );
    }

    #[test]
    fn rejects_disconnected_and_tiny() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            max_leaf_spanning_tree(&g, MlsMode::Exact).unwrap_err(),
            BoundsError::Disconnected
        );
        let one = Graph::new(1, []).unwrap();
        assert_eq!(
            max_leaf_spanning_tree(&one, MlsMode::Exact).unwrap_err(),
            BoundsError::TooSmall(1)
        );
    }

    #[test]
    fn p2_is_its_own_tree() {
        let r = max_leaf_spanning_tree(&Graph::path(2), MlsMode::Exact).unwrap();
        assert_eq!(r.leaf_count, 2);
        assert!(r.optimal);
    }
}
