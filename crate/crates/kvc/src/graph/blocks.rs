//! Biconnected components (blocks).
//!
//! Any 2-connected subgraph lies inside a single block, which is what makes
//! the k = 2 trace-realizability check polynomial.

use super::{Graph, VertexSet};

/// The blocks of `G` as vertex sets: maximal biconnected subgraphs, with
/// bridges as 2-element blocks and isolated vertices as singletons. Every
/// edge belongs to exactly one block; two blocks share at most one vertex.
/// Blocks are returned sorted by their member lists.
pub fn blocks(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out: Vec<VertexSet> = Vec::new();

    // Iterative DFS: (vertex, parent, neighbor index).
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            out.push([root].into());
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (u, parent, ref mut i)) = stack.last_mut() {
            if *i < g.degree(u) {
                let w = g.neighbors(u)[*i];
                *i += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, u, 0));
                } else if disc[w] < disc[u] {
                    // Back edge.
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        // p closes a block; pop its edges.
                        let mut members = VertexSet::empty();
                        while let Some(&(a, b)) = edge_stack.last() {
                            if disc[a] >= disc[u] || (a, b) == (p, u) {
                                members.insert(a);
                                members.insert(b);
                                edge_stack.pop();
                                if (a, b) == (p, u) {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        if !members.is_empty() {
                            out.push(members);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let bs = blocks(&g);
        assert_eq!(bs.len(), 2);
        assert!(bs.iter().all(|b| b.len() == 3));
        assert_eq!(bs[0].intersection(&bs[1]).len(), 1);
    }

    #[test]
    fn path_splits_into_bridges() {
        let bs = blocks(&Graph::path(4));
        assert_eq!(bs.len(), 3);
        assert!(bs.iter().all(|b| b.len() == 2));
    }

    #[test]
    fn cycle_is_one_block() {
        let bs = blocks(&Graph::cycle(5));
        assert_eq!(bs, vec![VertexSet::full(5)]);
    }

    #[test]
    fn isolated_vertices_are_singleton_blocks() {
        let g = Graph::new(4, [(1, 2)]).unwrap();
        let bs = blocks(&g);
        assert_eq!(bs.len(), 3);
        assert_eq!(bs[0], [0].into());
        assert_eq!(bs[1], [1, 2].into());
        assert_eq!(bs[2], [3].into());
    }

    #[test]
    fn every_edge_in_exactly_one_block() {
        let g = Graph::new(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 3),
                (5, 6),
                (6, 7),
            ],
        )
        .unwrap();
        let bs = blocks(&g);
        for &(u, v) in g.edges() {
            let holding = bs
                .iter()
                .filter(|b| b.contains(u) && b.contains(v))
                .count();
            assert_eq!(holding, 1, "edge ({u}, {v})");
        }
    }
}
