//! Exact planarity testing.
//!
//! Classical Demoucron-Malgrange-Pertuiset path addition, run per block: a
//! cycle of the block is embedded first, then at every step one path of a
//! remaining piece is drawn into an admissible face. If some piece has no
//! admissible face the block is non-planar; a piece with exactly one
//! admissible face is handled first, and when every piece has two or more
//! any choice is safe. Quadratic per block, exact, and sufficient at the
//! scales this crate targets. Kuratowski certificates are not produced.

use std::collections::BTreeSet;

use super::{blocks, Graph, VertexSet};

/// Whether `G` is planar.
pub fn is_planar(g: &Graph) -> bool {
    if g.n() <= 4 {
        return true;
    }
    if g.n() >= 3 && g.m() > 3 * g.n() - 6 {
        return false;
    }
    blocks(g).into_iter().all(|b| {
        if b.len() <= 2 {
            return true;
        }
        let (h, _) = g
            .induced_subgraph(&b)
            .expect("block vertices are in range");
        block_is_planar(&h)
    })
}

/// A piece of `G` relative to the embedded subgraph: either a single
/// non-embedded edge between embedded vertices, or a component of
/// `G - V(H)` plus its attachment edges.
struct Piece {
    /// Internal vertices (empty for edge pieces).
    interior: Vec<usize>,
    attachments: Vec<usize>,
}

/// DMP on one biconnected graph with at least 3 vertices.
fn block_is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n <= 4 {
        return true;
    }
    if g.m() > 3 * n - 6 {
        return false;
    }

    let cycle = find_cycle(g);
    let mut embedded: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut on_h = vec![false; n];
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded.insert((u.min(v), u.max(v)));
        on_h[u] = true;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    while embedded.len() < g.m() {
        let pieces = compute_pieces(g, &embedded, &on_h);
        debug_assert!(!pieces.is_empty());

        // Faces admissible for each piece.
        let face_sets: Vec<VertexSet> = faces
            .iter()
            .map(|f| f.iter().copied().collect())
            .collect();
        let mut chosen: Option<(usize, usize)> = None; // (piece, admissible count + face)
        let mut chosen_face = 0;
        for (pi, piece) in pieces.iter().enumerate() {
            let mut count = 0;
            let mut first_face = usize::MAX;
            for (fi, fs) in face_sets.iter().enumerate() {
                if piece.attachments.iter().all(|&a| fs.contains(a)) {
                    count += 1;
                    if first_face == usize::MAX {
                        first_face = fi;
                    }
                }
            }
            if count == 0 {
                return false;
            }
            if chosen.map_or(true, |(_, best)| count < best) {
                chosen = Some((pi, count));
                chosen_face = first_face;
                if count == 1 {
                    break;
                }
            }
        }
        let (pi, _) = chosen.expect("pieces exist while edges remain");
        let path = piece_path(g, &pieces[pi], &on_h);
        embed_path(&mut faces, chosen_face, &path);
        for w in path.windows(2) {
            embedded.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            on_h[v] = true;
        }
    }
    true
}

/// Any cycle of a biconnected graph, as a vertex list. Proper DFS: the
/// first non-tree edge seen closes a cycle with the tree path to its
/// ancestor endpoint.
fn find_cycle(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    visited[0] = true;
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    while let Some(&mut (u, ref mut i)) = stack.last_mut() {
        if *i >= g.degree(u) {
            stack.pop();
            continue;
        }
        let w = g.neighbors(u)[*i];
        *i += 1;
        if !visited[w] {
            visited[w] = true;
            parent[w] = u;
            stack.push((w, 0));
        } else if parent[u] != w {
            // First back edge: w is a DFS ancestor of u.
            let mut cycle = vec![u];
            let mut cur = u;
            while cur != w {
                cur = parent[cur];
                cycle.push(cur);
            }
            return cycle;
        }
    }
    unreachable!("biconnected graph on >= 3 vertices contains a cycle")
}

fn compute_pieces(g: &Graph, embedded: &BTreeSet<(usize, usize)>, on_h: &[bool]) -> Vec<Piece> {
    let n = g.n();
    let mut pieces = Vec::new();
    // Edge pieces.
    for &(u, v) in g.edges() {
        if on_h[u] && on_h[v] && !embedded.contains(&(u, v)) {
            pieces.push(Piece {
                interior: Vec::new(),
                attachments: vec![u, v],
            });
        }
    }
    // Component pieces.
    let mut seen = vec![false; n];
    for start in 0..n {
        if on_h[start] || seen[start] {
            continue;
        }
        let mut interior = vec![start];
        let mut attachments = BTreeSet::new();
        seen[start] = true;
        let mut head = 0;
        while head < interior.len() {
            let u = interior[head];
            head += 1;
            for &w in g.neighbors(u) {
                if on_h[w] {
                    attachments.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    interior.push(w);
                }
            }
        }
        interior.sort_unstable();
        pieces.push(Piece {
            interior,
            attachments: attachments.into_iter().collect(),
        });
    }
    pieces
}

/// A path through the piece between two distinct attachment vertices.
fn piece_path(g: &Graph, piece: &Piece, on_h: &[bool]) -> Vec<usize> {
    debug_assert!(piece.attachments.len() >= 2, "biconnected invariant");
    if piece.interior.is_empty() {
        return piece.attachments.clone();
    }
    let a = piece.attachments[0];
    let inside = |v: usize| !on_h[v] && piece.interior.binary_search(&v).is_ok();
    // BFS from a through the interior until another attachment is reached.
    let mut prev = vec![usize::MAX; g.n()];
    let mut queue: Vec<usize> = Vec::new();
    for &w in g.neighbors(a) {
        if inside(w) && prev[w] == usize::MAX {
            prev[w] = a;
            queue.push(w);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &w in g.neighbors(u) {
            if on_h[w] && w != a && piece.attachments.contains(&w) {
                let mut path = vec![w, u];
                let mut cur = u;
                while cur != a {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return path;
            }
            if inside(w) && prev[w] == usize::MAX {
                prev[w] = u;
                queue.push(w);
            }
        }
    }
    unreachable!("piece of a biconnected graph reaches a second attachment")
}

/// Splits `faces[face]` along `path` (whose endpoints lie on the face).
fn embed_path(faces: &mut Vec<Vec<usize>>, face: usize, path: &[usize]) {
    let f = faces.swap_remove(face);
    let a = path[0];
    let b = *path.last().expect("path has endpoints");
    let ia = f.iter().position(|&v| v == a).expect("endpoint on face");
    let rotated: Vec<usize> = f[ia..].iter().chain(f[..ia].iter()).copied().collect();
    let ib = rotated
        .iter()
        .position(|&v| v == b)
        .expect("endpoint on face");
    let interior = &path[1..path.len() - 1];
    let mut f1: Vec<usize> = rotated[..=ib].to_vec();
    f1.extend(interior.iter().rev());
    let mut f2: Vec<usize> = rotated[ib..].to_vec();
    f2.push(a);
    f2.extend(interior.iter());
    faces.push(f1);
    faces.push(f2);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33() -> Graph {
        Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn small_graphs_are_planar() {
        assert!(is_planar(&Graph::complete(4)));
        assert!(is_planar(&Graph::cycle(3)));
        assert!(is_planar(&Graph::new(0, []).unwrap()));
    }

    #[test]
    fn kuratowski_graphs_are_not_planar() {
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&k33()));
    }

    #[test]
    fn near_kuratowski_graphs_are_planar() {
        // K_5 minus an edge.
        let edges: Vec<_> = Graph::complete(5)
            .edges()
            .iter()
            .copied()
            .filter(|&e| e != (3, 4))
            .collect();
        assert!(is_planar(&Graph::new(5, edges).unwrap()));
        // K_{3,3} minus an edge.
        let edges: Vec<_> = k33()
            .edges()
            .iter()
            .copied()
            .filter(|&e| e != (2, 5))
            .collect();
        assert!(is_planar(&Graph::new(6, edges).unwrap()));
    }

    #[test]
    fn petersen_graph_is_not_planar() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        assert!(!is_planar(&g));
    }

    #[test]
    fn grid_is_planar() {
        let idx = |r: usize, c: usize| r * 4 + c;
        let mut edges = Vec::new();
        for r in 0..4 {
            for c in 0..4 {
                if c + 1 < 4 {
                    edges.push((idx(r, c), idx(r, c + 1)));
                }
                if r + 1 < 4 {
                    edges.push((idx(r, c), idx(r + 1, c)));
                }
            }
        }
        assert!(is_planar(&Graph::new(16, edges).unwrap()));
    }

    #[test]
    fn octahedron_and_cube_are_planar() {
        // Octahedron = K_{2,2,2}.
        let g = Graph::new(
            6,
            [
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
            ],
        )
        .unwrap();
        assert!(is_planar(&g));
        let cube = Graph::new(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        assert!(is_planar(&cube));
    }

    #[test]
    fn graphs_glued_at_cut_vertices() {
        // K_5 sharing one vertex with a triangle: non-planar.
        let mut edges: Vec<_> = Graph::complete(5).edges().to_vec();
        edges.extend([(4, 5), (4, 6), (5, 6)]);
        assert!(!is_planar(&Graph::new(7, edges).unwrap()));

        // Two K_4 blocks at a cut vertex: planar.
        let mut edges: Vec<_> = Graph::complete(4).edges().to_vec();
        for u in 3..7 {
            for v in u + 1..7 {
                edges.push((u, v));
            }
        }
        assert!(is_planar(&Graph::new(7, edges).unwrap()));
    }
}
