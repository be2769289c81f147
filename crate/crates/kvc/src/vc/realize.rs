//! Trace realizability: does some family member `H` satisfy
//! `V(H) ∩ A = W`?
//!
//! Removing `A \ W` from the graph reduces the question to "is there a
//! k-connected induced subgraph containing W" in what remains. For k = 1
//! that is a component lookup, for k = 2 a block lookup. For k >= 3 no
//! polynomial method is known to us, so the search peels to the k-core and
//! then branches on small separators: a k-connected subgraph cannot straddle
//! a cut of size below k, so each side of the cut (plus the cut itself)
//! bounds a strictly smaller subproblem. Exact, with exponential worst case
//! accepted at the intended scale.

use std::collections::BTreeSet;

use crate::graph::{
    blocks, is_k_connected, k_core, vertex_connectivity_with_separator, Graph, VertexSet,
};

use super::{VcError, Witness};

/// Whether trace `w` of candidate set `a` is realizable by the family of
/// k-connected subgraphs (plus the empty subgraph).
pub fn realizable(g: &Graph, a: &VertexSet, w: &VertexSet, k: usize) -> Result<bool, VcError> {
    realize_trace(g, a, w, k).map(|r| r.is_some())
}

/// Like [`realizable`] but returns the witness: a family member vertex set
/// whose intersection with `a` is exactly `w`.
pub fn realize_trace(
    g: &Graph,
    a: &VertexSet,
    w: &VertexSet,
    k: usize,
) -> Result<Option<Witness>, VcError> {
    if k < 1 {
        return Err(VcError::Graph(crate::graph::GraphError::KTooSmall(k)));
    }
    a.check_range(g.n())?;
    if !w.is_subset(a) {
        return Err(VcError::TraceNotInSet {
            w: w.clone(),
            a: a.clone(),
        });
    }
    if w.is_empty() {
        return Ok(Some(Witness::Empty));
    }
    // Work in G' = G - (A \ W): any witness must avoid A \ W and may use
    // everything else.
    let keep: VertexSet = (0..g.n())
        .filter(|&v| !a.contains(v) || w.contains(v))
        .collect();
    let (gp, map) = g.induced_subgraph(&keep)?;
    let mut rank = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        rank[v] = i;
    }
    let w_local: Vec<usize> = w.iter().map(|v| rank[v]).collect();

    let witness_local = match k {
        1 => {
            // All of W inside one connected component.
            let comp = gp.component_of(w_local[0]);
            let comp_set: BTreeSet<usize> = comp.iter().copied().collect();
            w_local
                .iter()
                .all(|v| comp_set.contains(v))
                .then(|| comp)
        }
        2 => {
            // Some block of size >= 3 containing all of W.
            blocks(&gp)
                .into_iter()
                .find(|b| b.len() >= 3 && w_local.iter().all(|&v| b.contains(v)))
                .map(|b| b.iter().collect())
        }
        _ => {
            let mut search = GeneralSearch {
                g: &gp,
                w: &w_local,
                k,
                refuted: BTreeSet::new(),
            };
            let start: Vec<usize> = (0..gp.n()).collect();
            search.find(start)
        }
    };
    Ok(witness_local.map(|vs| {
        Witness::Set(vs.into_iter().map(|v| map[v]).collect())
    }))
}

/// Exact search for a k-connected induced subgraph containing `w`, k >= 3.
struct GeneralSearch<'a> {
    g: &'a Graph,
    w: &'a [usize],
    k: usize,
    /// Candidate sets already shown to contain no solution.
    refuted: BTreeSet<Vec<usize>>,
}

impl GeneralSearch<'_> {
    fn find(&mut self, candidate: Vec<usize>) -> Option<Vec<usize>> {
        // Peel: a k-connected subgraph lies inside the k-core.
        let cset: VertexSet = candidate.iter().copied().collect();
        let (h, map) = self.g.induced_subgraph(&cset).expect("candidate in range");
        let core = k_core(&h, self.k);
        if core.len() < self.k + 1 {
            return None;
        }
        let core_global: BTreeSet<usize> = core.iter().map(|v| map[v]).collect();
        if !self.w.iter().all(|v| core_global.contains(v)) {
            return None;
        }
        // W must sit inside one component of the core.
        let (hc, cmap) = self
            .g
            .induced_subgraph(&core_global.iter().copied().collect())
            .expect("core in range");
        let mut crank = vec![usize::MAX; self.g.n()];
        for (i, &v) in cmap.iter().enumerate() {
            crank[v] = i;
        }
        let comp_local = hc.component_of(crank[self.w[0]]);
        let comp: Vec<usize> = comp_local.iter().map(|&v| cmap[v]).collect();
        let comp_set: BTreeSet<usize> = comp.iter().copied().collect();
        if !self.w.iter().all(|v| comp_set.contains(v)) {
            return None;
        }
        if self.refuted.contains(&comp) {
            return None;
        }
        let (hk, kmap) = self
            .g
            .induced_subgraph(&comp.iter().copied().collect())
            .expect("component in range");
        if hk.n() >= self.k + 1 && is_k_connected(&hk, self.k).expect("k >= 1") {
            return Some(comp);
        }
        // Not k-connected: find a separator of size < k and recurse on each
        // side (plus the separator), which strictly shrinks the candidate.
        let (kappa, sep) =
            vertex_connectivity_with_separator(&hk).expect("component has >= k+1 >= 2 vertices");
        debug_assert!(kappa < self.k);
        let sep = sep.expect("non-complete: below-k connectivity");
        let sep_global: BTreeSet<usize> = sep.iter().map(|&v| kmap[v]).collect();
        let rest: VertexSet = comp
            .iter()
            .copied()
            .filter(|v| !sep_global.contains(v))
            .collect();
        let (hr, rmap) = self.g.induced_subgraph(&rest).expect("rest in range");
        for part_local in hr.components() {
            let mut next: Vec<usize> = part_local.iter().map(|&v| rmap[v]).collect();
            next.extend(sep_global.iter().copied());
            next.sort_unstable();
            if self.w.iter().all(|v| next.binary_search(v).is_ok()) {
                if let Some(found) = self.find(next) {
                    return Some(found);
                }
            }
        }
        self.refuted.insert(comp);
        None
    }
}
