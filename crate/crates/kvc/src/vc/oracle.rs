//! Brute-force shattering oracle, straight from the definition.
//!
//! For every trace `W ⊆ A` it enumerates all candidate witnesses
//! `S = W ∪ T` with `T ⊆ V \ A` and tests family membership naively:
//! k-connectivity by deleting every (k-1)-subset and checking connectivity
//! on bitmasks. Deliberately independent of the block/flow machinery the
//! polynomial checker uses — this is the reference the fast path is judged
//! against.

use crate::graph::{Graph, VertexSet};

use super::VcError;

/// Default cap on `|A|` for the oracle (2^|A| traces are enumerated).
pub const ORACLE_SET_LIMIT: usize = 20;

/// Adjacency as bitmasks; the oracle is limited to 64 vertices.
pub(crate) struct BitGraph {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl BitGraph {
    pub fn new(g: &Graph) -> Result<Self, VcError> {
        if g.n() > 64 {
            return Err(VcError::OracleScale(format!(
                "graph has {} vertices, oracle handles at most 64",
                g.n()
            )));
        }
        let mut adj = vec![0u64; g.n()];
        for &(u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(BitGraph { n: g.n(), adj })
    }

    /// Is the induced subgraph on `mask` connected (and nonempty)?
    pub fn connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let start = mask.trailing_zeros() as usize;
        let mut reached = 1u64 << start;
        let mut frontier = reached;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & mask;
            }
            frontier = next & !reached;
            reached |= next;
        }
        reached == mask
    }

    /// Naive family membership: empty set, or k = 1 and connected, or at
    /// least k+1 vertices and connected after deleting any k-1 of them.
    pub fn family_member(&self, mask: u64, k: usize) -> bool {
        if mask == 0 {
            return true;
        }
        if k == 1 {
            return self.connected(mask);
        }
        if (mask.count_ones() as usize) < k + 1 {
            return false;
        }
        self.survives_deletions(mask, mask, k - 1)
    }

    /// Connectivity after deleting every `left`-subset of `from`.
    fn survives_deletions(&self, mask: u64, from: u64, left: usize) -> bool {
        if left == 0 {
            return self.connected(mask);
        }
        let mut f = from;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            // Delete v; choose further deletions among higher bits only.
            if !self.survives_deletions(mask & !(1 << v), f, left - 1) {
                return false;
            }
        }
        true
    }
}

/// Definition-level shattering check: all `2^|A|` traces must be realizable.
/// Guarded by [`ORACLE_SET_LIMIT`]; see
/// [`is_shattered_bruteforce_with_limit`] to override.
pub fn is_shattered_bruteforce(g: &Graph, a: &VertexSet, k: usize) -> Result<bool, VcError> {
    is_shattered_bruteforce_with_limit(g, a, k, ORACLE_SET_LIMIT)
}

/// See [`is_shattered_bruteforce`].
pub fn is_shattered_bruteforce_with_limit(
    g: &Graph,
    a: &VertexSet,
    k: usize,
    limit: usize,
) -> Result<bool, VcError> {
    if k < 1 {
        return Err(VcError::Graph(crate::graph::GraphError::KTooSmall(k)));
    }
    a.check_range(g.n())?;
    if a.len() > limit {
        return Err(VcError::OracleScale(format!(
            "|A| = {} exceeds the oracle limit of {limit}",
            a.len()
        )));
    }
    let bg = BitGraph::new(g)?;
    let members: Vec<usize> = a.iter().collect();
    let a_mask: u64 = members.iter().map(|&v| 1u64 << v).sum();
    let outside = ((!0u64) >> (64 - bg.n.max(1))) & !a_mask;
    // Iterate traces as index masks over A.
    for trace_bits in 0u64..(1 << members.len()) {
        let mut w_mask = 0u64;
        for (i, &v) in members.iter().enumerate() {
            if trace_bits >> i & 1 == 1 {
                w_mask |= 1 << v;
            }
        }
        if w_mask == 0 {
            continue; // empty trace: empty subgraph.
        }
        // Witness candidates: W plus any subset of V \ A.
        let mut found = false;
        let mut t = outside;
        loop {
            if bg.family_member(w_mask | t, k) {
                found = true;
                break;
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & outside;
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact VC-dimension by the oracle alone: enumerates all subsets of V.
/// Reference implementation for cross-checks; limited to 20 vertices.
pub fn vc_dimension_bruteforce(g: &Graph, k: usize) -> Result<usize, VcError> {
    let n = g.n();
    if n > 20 {
        return Err(VcError::OracleScale(format!(
            "brute-force VC over all subsets is limited to 20 vertices, got {n}"
        )));
    }
    let mut best = 0;
    for bits in 0u64..(1 << n) {
        let size = bits.count_ones() as usize;
        if size <= best {
            continue;
        }
        let a: VertexSet = (0..n).filter(|&v| bits >> v & 1 == 1).collect();
        if is_shattered_bruteforce(g, &a, k)? {
            best = size;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_shatters_three_but_not_four() {
        let g = Graph::complete(5);
        assert!(is_shattered_bruteforce(&g, &[0, 1, 2].into(), 2).unwrap());
        assert!(!is_shattered_bruteforce(&g, &[0, 1, 2, 3].into(), 2).unwrap());
    }

    #[test]
    fn star_leaves_shatter_for_k1() {
        let g = Graph::star(3);
        assert!(is_shattered_bruteforce(&g, &[1, 2, 3].into(), 1).unwrap());
        assert!(!is_shattered_bruteforce(&g, &[0, 1, 2, 3].into(), 1).unwrap());
    }

    #[test]
    fn empty_set_is_shattered() {
        let g = Graph::new(2, []).unwrap();
        assert!(is_shattered_bruteforce(&g, &VertexSet::empty(), 3).unwrap());
    }

    #[test]
    fn oracle_guard() {
        let g = Graph::complete(25);
        let a: VertexSet = (0..22).collect();
        assert!(matches!(
            is_shattered_bruteforce(&g, &a, 2),
            Err(VcError::OracleScale(_))
        ));
    }

    #[test]
    fn bitgraph_connectivity() {
        let bg = BitGraph::new(&Graph::path(4)).unwrap();
        assert!(bg.connected(0b1111));
        assert!(bg.connected(0b0110));
        assert!(!bg.connected(0b1001));
        assert!(!bg.connected(0));
    }

    #[test]
    fn naive_k_connectivity_matches_flow() {
        use crate::graph::is_k_connected;
        let g = Graph::new(
            6,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (1, 3),
                (2, 3),
                (3, 4),
                (3, 5),
                (4, 5),
                (2, 4),
            ],
        )
        .unwrap();
        let bg = BitGraph::new(&g).unwrap();
        let full = 0b111111u64;
        for k in 1..=3 {
            assert_eq!(
                bg.family_member(full, k),
                is_k_connected(&g, k).unwrap(),
                "k = {k}"
            );
        }
    }
}
