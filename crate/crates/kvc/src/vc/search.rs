//! Exact VC-dimension search.
//!
//! Shattering is hereditary downward, so shattered sets form an independence
//! system and depth-first growth in ascending vertex order enumerates them
//! without repetition. The first maximum-size set found is automatically the
//! lexicographically smallest one. Pruning:
//!
//! - the leaf-count upper bound caps the achievable dimension up front;
//! - vertices that have an unused earlier twin in the candidate window are
//!   skipped (swapping twins is an automorphism, so nothing is lost);
//! - trace witnesses are cached along the DFS path and only rechecked when
//!   the newly added vertex invalidates them.
//!
//! Results are identical with pruning and caching on or off; the slow paths
//! stay available as correctness references.

use std::collections::BTreeMap;

use crate::bounds::leaf_count_upper_bound;
use crate::graph::{symmetry_class_ids, Graph, VertexSet};

use super::{
    realize::realize_trace, shatter::next_combination, is_shattered_poly, SearchStats, VcError,
    VcResult, Witness,
};

/// Knobs for the exact search. Defaults: twin pruning on, incremental
/// witness caching on, no node budget.
#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Skip candidates with an unused earlier twin; also compresses cached
    /// traces by symmetry class.
    pub twin_pruning: bool,
    /// Reuse witnesses cached along the DFS path instead of rechecking every
    /// trace at every node.
    pub incremental: bool,
    /// Abort with [`VcError::BudgetExhausted`] after this many candidate
    /// sets.
    pub node_budget: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            twin_pruning: true,
            incremental: true,
            node_budget: None,
        }
    }
}

/// Exact `VC_{k-con}(G)` with default options.
pub fn vc_dimension(g: &Graph, k: usize) -> Result<VcResult, VcError> {
    vc_dimension_with(g, k, &SearchOptions::default())
}

/// Exact `VC_{k-con}(G)`.
pub fn vc_dimension_with(g: &Graph, k: usize, opts: &SearchOptions) -> Result<VcResult, VcError> {
    let mut searcher = Searcher::new(g, k, opts, None)?;
    searcher.run()?;
    let witness: VertexSet = searcher.best.iter().copied().collect();
    let certificate = is_shattered_poly(g, &witness, k)?.certificate;
    Ok(VcResult {
        dimension: witness.len(),
        witness,
        certificate,
        stats: searcher.stats,
    })
}

/// Decision variant: is `VC_{k-con}(G) >= s`? Returns a shattered witness of
/// size `s` when the answer is yes; exits as soon as one is found.
pub fn vc_at_least(g: &Graph, k: usize, s: usize) -> Result<Option<VertexSet>, VcError> {
    vc_at_least_with(g, k, s, &SearchOptions::default())
}

/// See [`vc_at_least`].
pub fn vc_at_least_with(
    g: &Graph,
    k: usize,
    s: usize,
    opts: &SearchOptions,
) -> Result<Option<VertexSet>, VcError> {
    if s == 0 {
        return Ok(Some(VertexSet::empty()));
    }
    let mut searcher = Searcher::new(g, k, opts, Some(s))?;
    searcher.run()?;
    if searcher.best.len() >= s {
        Ok(Some(searcher.best.iter().copied().collect()))
    } else {
        Ok(None)
    }
}

/// Cache key of a trace: class ids (twin pruning) or raw vertices.
type TraceKey = Vec<usize>;

struct Searcher<'a> {
    g: &'a Graph,
    k: usize,
    opts: SearchOptions,
    /// Class id per vertex; identity when twin pruning is off.
    class_of: Vec<usize>,
    /// Members per class, ascending.
    class_members: Vec<Vec<usize>>,
    /// Upper bound on the dimension.
    bound: usize,
    /// Stop as soon as a set of this size is found.
    target: Option<usize>,
    best: Vec<usize>,
    stats: SearchStats,
}

impl<'a> Searcher<'a> {
    fn new(
        g: &'a Graph,
        k: usize,
        opts: &SearchOptions,
        target: Option<usize>,
    ) -> Result<Self, VcError> {
        if k < 1 {
            return Err(VcError::Graph(crate::graph::GraphError::KTooSmall(k)));
        }
        let n = g.n();
        let (class_of, class_members) = if opts.twin_pruning {
            let ids = symmetry_class_ids(g);
            let count = ids.iter().copied().max().map_or(0, |m| m + 1);
            let mut members = vec![Vec::new(); count];
            for v in 0..n {
                members[ids[v]].push(v);
            }
            (ids, members)
        } else {
            ((0..n).collect(), (0..n).map(|v| vec![v]).collect())
        };
        // The leaf-count bound applies to connected graphs; fall back to n.
        let mut bound = n;
        if g.is_connected() && n >= 2 && g.max_degree() >= 2 {
            let lub = leaf_count_upper_bound(n, g.max_degree())
                .expect("guards checked") as i64;
            let b = if k >= 2 { lub - k as i64 + 1 } else { lub + 1 };
            bound = bound.min(b.max(0) as usize);
        }
        Ok(Searcher {
            g,
            k,
            opts: *opts,
            class_of,
            class_members,
            bound,
            target,
            best: Vec::new(),
            stats: SearchStats::default(),
        })
    }

    fn run(&mut self) -> Result<(), VcError> {
        if let Some(s) = self.target {
            if self.bound < s {
                return Ok(()); // the upper bound already refutes it
            }
        }
        let mut cache: BTreeMap<TraceKey, Witness> = BTreeMap::new();
        let mut a: Vec<usize> = Vec::new();
        self.extend(&mut a, 0, &mut cache)
    }

    fn done(&self) -> bool {
        match self.target {
            Some(s) => self.best.len() >= s,
            None => self.best.len() >= self.bound,
        }
    }

    fn extend(
        &mut self,
        a: &mut Vec<usize>,
        start: usize,
        cache: &mut BTreeMap<TraceKey, Witness>,
    ) -> Result<(), VcError> {
        for v in start..self.g.n() {
            if self.done() {
                return Ok(());
            }
            // Not enough vertices left to beat the incumbent.
            let optimistic = a.len() + (self.g.n() - v);
            let needed = self.target.unwrap_or(self.best.len() + 1);
            if optimistic < needed {
                return Ok(());
            }
            if self.opts.twin_pruning && !self.is_class_representative(v, start) {
                continue;
            }
            if let Some(budget) = self.opts.node_budget {
                if self.stats.sets_examined >= budget {
                    return Err(VcError::BudgetExhausted(budget));
                }
            }
            self.stats.sets_examined += 1;
            let mut child_cache = cache.clone();
            if !self.opts.incremental {
                child_cache.clear();
            }
            a.push(v);
            if self.still_shattered(a, v, &mut child_cache)? {
                if a.len() > self.best.len() {
                    self.best = a.clone();
                }
                self.extend(a, v + 1, &mut child_cache)?;
            }
            a.pop();
        }
        Ok(())
    }

    /// v may only be chosen if it is the first member of its class inside
    /// the candidate window (everything in `a` is below `start`).
    fn is_class_representative(&self, v: usize, start: usize) -> bool {
        self.class_members[self.class_of[v]]
            .iter()
            .find(|&&u| u >= start)
            == Some(&v)
    }

    /// Checks that `a` (which just gained `v`) is still shattered, reusing
    /// cached witnesses that `v` does not invalidate.
    fn still_shattered(
        &mut self,
        a: &[usize],
        v: usize,
        cache: &mut BTreeMap<TraceKey, Witness>,
    ) -> Result<bool, VcError> {
        let a_set: VertexSet = a.iter().copied().collect();
        let max_size = (self.k + 1).min(a.len());
        // Enumerate traces of size 1..=max_size as index combinations.
        let mut indices: Vec<usize> = Vec::new();
        for size in 1..=max_size {
            indices.clear();
            indices.extend(0..size);
            loop {
                let trace: Vec<usize> = indices.iter().map(|&i| a[i]).collect();
                let key = self.trace_key(&trace);
                let cached_ok = match cache.get(&key) {
                    Some(witness) if !witness.contains(v) => true,
                    _ => false,
                };
                if !cached_ok {
                    let w: VertexSet = trace.iter().copied().collect();
                    self.stats.realizability_calls += 1;
                    match realize_trace(self.g, &a_set, &w, self.k)? {
                        Some(witness) => {
                            cache.insert(key, witness);
                        }
                        None => return Ok(false),
                    }
                }
                if !next_combination(&mut indices, a.len()) {
                    break;
                }
            }
        }
        Ok(true)
    }

    fn trace_key(&self, trace: &[usize]) -> TraceKey {
        if self.opts.twin_pruning {
            let mut key: Vec<usize> = trace.iter().map(|&v| self.class_of[v]).collect();
            key.sort_unstable();
            key
        } else {
            trace.to_vec()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        assert_eq!(vc_dimension(&Graph::complete(4), 2).unwrap().dimension, 2);
        assert_eq!(vc_dimension(&Graph::complete(5), 2).unwrap().dimension, 3);
        // K_{k+1} pins the Theorem 3 bound: dimension 1 for every k.
        for k in 2..=5 {
            assert_eq!(
                vc_dimension(&Graph::complete(k + 1), k).unwrap().dimension,
                1,
                "K_{}",
                k + 1
            );
        }
    }

    #[test]
    fn cycles_have_dimension_one() {
        for n in 3..=8 {
            let r = vc_dimension(&Graph::cycle(n), 2).unwrap();
            assert_eq!(r.dimension, 1, "C_{n}");
            assert_eq!(r.witness, [0].into());
        }
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        let r = vc_dimension(&Graph::complete(5), 2).unwrap();
        assert_eq!(r.witness, [0, 1, 2].into());
        r.certificate.validate(&Graph::complete(5)).unwrap();
    }

    #[test]
    fn options_do_not_change_results() {
        let graphs = [
            Graph::complete(5),
            Graph::cycle(6),
            Graph::star(4),
            Graph::path(5),
            Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)]).unwrap(),
        ];
        for g in &graphs {
            for k in 1..=3 {
                let reference = vc_dimension_with(
                    g,
                    k,
                    &SearchOptions {
                        twin_pruning: false,
                        incremental: false,
                        node_budget: None,
                    },
                )
                .unwrap();
                for twin in [false, true] {
                    for inc in [false, true] {
                        let r = vc_dimension_with(
                            g,
                            k,
                            &SearchOptions {
                                twin_pruning: twin,
                                incremental: inc,
                                node_budget: None,
                            },
                        )
                        .unwrap();
                        assert_eq!(r.dimension, reference.dimension);
                        assert_eq!(r.witness, reference.witness);
                    }
                }
            }
        }
    }

    #[test]
    fn decision_variant() {
        let g = Graph::complete(5);
        assert!(vc_at_least(&g, 2, 3).unwrap().is_some());
        assert!(vc_at_least(&g, 2, 4).unwrap().is_none());
        assert_eq!(
            vc_at_least(&Graph::cycle(6), 2, 1).unwrap(),
            Some([0].into())
        );
        assert_eq!(vc_at_least(&g, 2, 0).unwrap(), Some(VertexSet::empty()));
    }

    #[test]
    fn budget_is_enforced() {
        let opts = SearchOptions {
            node_budget: Some(3),
            ..SearchOptions::default()
        };
        let err = vc_dimension_with(&Graph::complete(6), 2, &opts).unwrap_err();
        assert_eq!(err, VcError::BudgetExhausted(3));
    }

    #[test]
    fn empty_graph() {
        let g = Graph::new(0, []).unwrap();
        let r = vc_dimension(&g, 2).unwrap();
        assert_eq!(r.dimension, 0);
        assert!(r.witness.is_empty());
    }
}
