//! Set multicover and its reduction to the k-connected VC decision problem.
//!
//! The construction: columns of `t + k + 1` copies per ground element (set
//! A), one vertex per subset (B), a k-clique (C) joined completely to B and
//! to a reservoir D of `t + m + 1` vertices; a subset vertex is joined to
//! every copy of every element it covers. The instance has a multicover of
//! size at most `t` iff the graph's k-connected VC-dimension reaches
//! `|V| - (t + k)`.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::vc::{is_shattered_poly_with, vc_at_least, ShatterOptions};

use super::{GadgetGraph, ReduceError, Role};

/// Default cap on the subset count for the exact solver (2^m index sets).
pub const MULTICOVER_SUBSET_LIMIT: usize = 20;

/// Ground set `{0..ground_size-1}`, subsets, coverage demand `k` and budget
/// `t`: is there an index set of at most `t` subsets covering every element
/// at least `k` times?
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MulticoverInstance {
    pub ground_size: usize,
    pub subsets: Vec<Vec<usize>>,
    /// Coverage demand (the paper's k).
    pub k: usize,
    /// Budget (the paper's t).
    pub t: usize,
}

impl MulticoverInstance {
    pub fn new(
        ground_size: usize,
        subsets: Vec<Vec<usize>>,
        k: usize,
        t: usize,
    ) -> Result<Self, ReduceError> {
        if k == 0 {
            return Err(ReduceError::ZeroCoverage);
        }
        let mut canonical = Vec::with_capacity(subsets.len());
        for (si, subset) in subsets.into_iter().enumerate() {
            let mut s = subset;
            s.sort_unstable();
            s.dedup();
            if let Some(&element) = s.iter().find(|&&e| e >= ground_size) {
                return Err(ReduceError::ElementOutOfRange {
                    subset: si,
                    element,
                    n: ground_size,
                });
            }
            canonical.push(s);
        }
        Ok(MulticoverInstance {
            ground_size,
            subsets: canonical,
            k,
            t,
        })
    }

    pub fn num_subsets(&self) -> usize {
        self.subsets.len()
    }

    fn covers(&self, index_set: &[usize]) -> bool {
        let mut count = vec![0usize; self.ground_size];
        for &i in index_set {
            for &e in &self.subsets[i] {
                count[e] += 1;
            }
        }
        count.iter().all(|&c| c >= self.k)
    }
}

/// Lexicographically first feasible index set, or `None`. Exhaustive DFS in
/// index order with a budget cut; guarded by [`MULTICOVER_SUBSET_LIMIT`].
pub fn solve_multicover(inst: &MulticoverInstance) -> Result<Option<Vec<usize>>, ReduceError> {
    solve_multicover_with_limit(inst, MULTICOVER_SUBSET_LIMIT)
}

/// See [`solve_multicover`].
pub fn solve_multicover_with_limit(
    inst: &MulticoverInstance,
    limit: usize,
) -> Result<Option<Vec<usize>>, ReduceError> {
    if inst.num_subsets() > limit {
        return Err(ReduceError::SolverScale(inst.num_subsets(), limit));
    }
    fn dfs(inst: &MulticoverInstance, chosen: &mut Vec<usize>, from: usize) -> bool {
        if inst.covers(chosen) {
            return true;
        }
        if chosen.len() >= inst.t {
            return false;
        }
        for i in from..inst.num_subsets() {
            chosen.push(i);
            if dfs(inst, chosen, i + 1) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    Ok(dfs(inst, &mut chosen, 0).then_some(chosen))
}

/// Builds the reduction graph. Vertex numbering: the `n` columns of A first
/// (column by column), then B, then the clique C, then the reservoir D.
/// Requires `k >= 2`.
pub fn multicover_to_graph(inst: &MulticoverInstance) -> Result<GadgetGraph, ReduceError> {
    if inst.k < 2 {
        return Err(ReduceError::KTooSmall(inst.k));
    }
    let (n, m, k, t) = (inst.ground_size, inst.num_subsets(), inst.k, inst.t);
    let copies = t + k + 1;
    let a_size = n * copies;
    let b_base = a_size;
    let c_base = b_base + m;
    let d_base = c_base + k;
    let total = d_base + (t + m + 1);

    let mut roles = Vec::with_capacity(total);
    let mut provenance = Vec::with_capacity(total);
    for column in 0..n {
        for _ in 0..copies {
            roles.push(Role::ColumnCopy);
            provenance.push(Some(column));
        }
    }
    for i in 0..m {
        roles.push(Role::SetVertex);
        provenance.push(Some(i));
    }
    for _ in 0..k {
        roles.push(Role::Clique);
        provenance.push(None);
    }
    for _ in 0..t + m + 1 {
        roles.push(Role::Reservoir);
        provenance.push(None);
    }

    let mut edges = Vec::new();
    // C is a clique, joined completely to B and D.
    for i in 0..k {
        for j in i + 1..k {
            edges.push((c_base + i, c_base + j));
        }
        for b in 0..m {
            edges.push((c_base + i, b_base + b));
        }
        for d in 0..t + m + 1 {
            edges.push((c_base + i, d_base + d));
        }
    }
    // Subset vertices reach every copy of every element they cover.
    for (i, subset) in inst.subsets.iter().enumerate() {
        for &element in subset {
            for copy in 0..copies {
                edges.push((b_base + i, element * copies + copy));
            }
        }
    }
    let graph = Graph::new(total, edges)?;
    Ok(GadgetGraph {
        graph,
        roles,
        provenance,
        threshold: total - (t + k),
        intended_k: k,
        faithful_p: true,
    })
}

/// Both sides of the reduction claim on one instance.
#[derive(Debug, Clone, Serialize)]
pub struct MulticoverVerification {
    pub solver_answer: Option<Vec<usize>>,
    pub vc_answer: bool,
    pub agree: bool,
    pub threshold: usize,
    /// On yes-instances, the shattered witness `A ∪ D ∪ {v_i : i ∉ I}`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    /// Whether the witness certificate re-validated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_valid: Option<bool>,
}

/// Runs the solver and the VC decision independently and reports agreement.
/// On yes-instances the claimed shattered witness is re-validated through
/// the polynomial checker and its certificate.
pub fn verify_multicover_reduction(
    inst: &MulticoverInstance,
) -> Result<MulticoverVerification, ReduceError> {
    verify_multicover_reduction_with(inst, 48)
}

/// See [`verify_multicover_reduction`]; `vertex_limit` guards the search.
pub fn verify_multicover_reduction_with(
    inst: &MulticoverInstance,
    vertex_limit: usize,
) -> Result<MulticoverVerification, ReduceError> {
    let gg = multicover_to_graph(inst)?;
    if gg.graph.n() > vertex_limit {
        return Err(ReduceError::VerifyScale(gg.graph.n(), vertex_limit));
    }
    let solver_answer = solve_multicover(inst)?;
    let vc_witness = vc_at_least(&gg.graph, inst.k, gg.threshold)?;
    let vc_answer = vc_witness.is_some();
    let agree = solver_answer.is_some() == vc_answer;

    let mut witness = None;
    let mut certificate_valid = None;
    if let Some(index_set) = &solver_answer {
        let copies = inst.t + inst.k + 1;
        let a_size = inst.ground_size * copies;
        let b_base = a_size;
        let d_base = b_base + inst.num_subsets() + inst.k;
        let mut set = VertexSet::empty();
        for v in 0..a_size {
            set.insert(v);
        }
        for i in 0..inst.num_subsets() {
            if !index_set.contains(&i) {
                set.insert(b_base + i);
            }
        }
        for v in d_base..gg.graph.n() {
            set.insert(v);
        }
        let outcome = is_shattered_poly_with(
            &gg.graph,
            &set,
            inst.k,
            &ShatterOptions {
                twin_compression: true,
            },
        )?;
        let cert_ok = outcome.shattered
            && outcome.certificate.validate(&gg.graph).is_ok()
            && set.len() >= gg.threshold;
        witness = Some(set.iter().collect());
        certificate_valid = Some(cert_ok);
    }
    Ok(MulticoverVerification {
        solver_answer,
        vc_answer,
        agree,
        threshold: gg.threshold,
        witness,
        certificate_valid,
    })
}
