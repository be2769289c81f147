//! The polynomial shattering check.
//!
//! Only traces of size at most k + 1 need to be tested. For a larger trace
//! `W`, fix any `K ⊆ W` with `|K| = k` and take witnesses for each
//! `K ∪ {w}` (size k + 1, already checked): the witnesses pairwise share
//! the k vertices of `K`, and the union of two k-connected graphs meeting
//! in at least k vertices is k-connected, so their union realizes exactly
//! `W`. This is the membership argument that puts the decision problem in
//! NP, and it is what keeps this check polynomial per trace family.
//!
//! Twin compression: vertices in one symmetry class are exchangeable by an
//! automorphism fixing `A` setwise, so two traces with the same class
//! multiset are equi-realizable. Enumerating class multisets instead of raw
//! traces is what makes the 387-vertex planar gadget checkable in seconds.

use std::collections::BTreeMap;

use crate::graph::{symmetry_class_ids, Graph, VertexSet};

use super::{realize::realize_trace, ShatterCertificate, VcError, Witness};

/// Options for [`is_shattered_poly_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct ShatterOptions {
    /// Collapse traces that agree as multisets of symmetry classes.
    pub twin_compression: bool,
}

/// Outcome of a shattering check: the verdict, witnesses for the traces that
/// were actually checked, and the first failing trace when not shattered.
#[derive(Debug, Clone)]
pub struct ShatterOutcome {
    pub shattered: bool,
    pub certificate: ShatterCertificate,
    pub failing_trace: Option<VertexSet>,
}

/// Polynomial shattering check: every nonempty trace of size at most k + 1
/// must be realizable (the empty trace always is).
pub fn is_shattered_poly(g: &Graph, a: &VertexSet, k: usize) -> Result<ShatterOutcome, VcError> {
    is_shattered_poly_with(g, a, k, &ShatterOptions::default())
}

/// See [`is_shattered_poly`]; `opts` may enable twin compression.
pub fn is_shattered_poly_with(
    g: &Graph,
    a: &VertexSet,
    k: usize,
    opts: &ShatterOptions,
) -> Result<ShatterOutcome, VcError> {
    if k < 1 {
        return Err(VcError::Graph(crate::graph::GraphError::KTooSmall(k)));
    }
    a.check_range(g.n())?;
    let mut certificate = ShatterCertificate::new(a.clone(), k);
    certificate.insert(VertexSet::empty(), Witness::Empty);

    let outcome = if opts.twin_compression {
        check_compressed(g, a, k, &mut certificate)?
    } else {
        check_plain(g, a, k, &mut certificate)?
    };
    Ok(ShatterOutcome {
        shattered: outcome.is_none(),
        certificate,
        failing_trace: outcome,
    })
}

/// Checks every nonempty trace of size <= k+1; returns the first failure.
fn check_plain(
    g: &Graph,
    a: &VertexSet,
    k: usize,
    certificate: &mut ShatterCertificate,
) -> Result<Option<VertexSet>, VcError> {
    let members: Vec<usize> = a.iter().collect();
    let max_size = (k + 1).min(members.len());
    let mut indices: Vec<usize> = Vec::new();
    for size in 1..=max_size {
        indices.clear();
        indices.extend(0..size);
        loop {
            let w: VertexSet = indices.iter().map(|&i| members[i]).collect();
            match realize_trace(g, a, &w, k)? {
                Some(witness) => certificate.insert(w, witness),
                None => return Ok(Some(w)),
            }
            if !next_combination(&mut indices, members.len()) {
                break;
            }
        }
    }
    Ok(None)
}

/// Same contract as `check_plain`, but one representative per class
/// multiset. The certificate then carries entries for representatives only.
fn check_compressed(
    g: &Graph,
    a: &VertexSet,
    k: usize,
    certificate: &mut ShatterCertificate,
) -> Result<Option<VertexSet>, VcError> {
    let class_of = symmetry_class_ids(g);
    // Members of each class inside A, ascending.
    let mut class_members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in a.iter() {
        class_members.entry(class_of[v]).or_default().push(v);
    }
    let classes: Vec<(usize, Vec<usize>)> = class_members.into_iter().collect();
    let max_size = (k + 1).min(a.len());

    // Enumerate multisets over classes (by index) with bounded multiplicity.
    let mut stack: Vec<(usize, usize)> = Vec::new(); // (class index, multiplicity)
    fn enumerate(
        g: &Graph,
        a: &VertexSet,
        k: usize,
        classes: &[(usize, Vec<usize>)],
        from: usize,
        remaining: usize,
        stack: &mut Vec<(usize, usize)>,
        certificate: &mut ShatterCertificate,
    ) -> Result<Option<VertexSet>, VcError> {
        if !stack.is_empty() {
            // Representative: lowest ids from each chosen class.
            let w: VertexSet = stack
                .iter()
                .flat_map(|&(ci, mult)| classes[ci].1[..mult].iter().copied())
                .collect();
            match realize_trace(g, a, &w, k)? {
                Some(witness) => certificate.insert(w, witness),
                None => return Ok(Some(w)),
            }
        }
        if remaining == 0 {
            return Ok(None);
        }
        for ci in from..classes.len() {
            let cap = classes[ci].1.len().min(remaining);
            for mult in 1..=cap {
                stack.push((ci, mult));
                if let Some(fail) = enumerate(
                    g,
                    a,
                    k,
                    classes,
                    ci + 1,
                    remaining - mult,
                    stack,
                    certificate,
                )? {
                    return Ok(Some(fail));
                }
                stack.pop();
            }
        }
        Ok(None)
    }
    enumerate(g, a, k, &classes, 0, max_size, &mut stack, certificate)
}

/// Advances `indices` to the next size-|indices| combination of `0..n`.
pub(crate) fn next_combination(indices: &mut [usize], n: usize) -> bool {
    let size = indices.len();
    let mut i = size;
    while i > 0 {
        i -= 1;
        if indices[i] < n - (size - i) {
            indices[i] += 1;
            for j in i + 1..size {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
