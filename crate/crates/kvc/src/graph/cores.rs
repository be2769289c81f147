//! k-cores by iterative peeling. A k-connected subgraph has minimum degree
//! at least k, so it always survives inside the k-core; peeling is the cheap
//! first pruning step of the general-k realizability search.

use super::{Graph, VertexSet};

/// The maximal vertex set whose induced subgraph has minimum degree >= k.
/// May be empty.
pub fn k_core(g: &Graph, k: usize) -> VertexSet {
    let mut alive = vec![true; g.n()];
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut queue: Vec<usize> = (0..g.n()).filter(|&v| deg[v] < k).collect();
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] < k {
                    queue.push(w);
                }
            }
        }
    }
    (0..g.n()).filter(|&v| alive[v]).collect()
}
