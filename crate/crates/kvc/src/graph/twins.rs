//! Twin vertices and the symmetry classes used for search pruning.
//!
//! Swapping two vertices with identical open neighbourhoods (or identical
//! closed neighbourhoods) is a graph automorphism, so twins are
//! interchangeable inside any shattered set. Search and certificate checks
//! exploit this to collapse combinatorially identical branches.

use std::collections::BTreeMap;

use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinMode {
    /// `N(u) = N(v)` (non-adjacent twins).
    Open,
    /// `N[u] = N[v]` (adjacent twins).
    Closed,
}

/// Partition of the vertices into twin classes. Classes are ascending and
/// ordered by their smallest member.
pub fn twin_classes(g: &Graph, mode: TwinMode) -> Vec<Vec<usize>> {
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        let mut key = g.neighbors(v).to_vec();
        if matches!(mode, TwinMode::Closed) {
            key.push(v);
            key.sort_unstable();
        }
        groups.entry(key).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    classes
}

/// Coarsest partition obtained by merging open- and closed-twin classes.
///
/// Within one class, any permutation of the members extends (by identity
/// elsewhere) to an automorphism of `G`: transpositions along a chain of
/// twin pairs generate the full symmetric group on the class.
pub fn symmetry_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let r = find(parent, parent[v]);
            parent[v] = r;
        }
        parent[v]
    }
    for mode in [TwinMode::Open, TwinMode::Closed] {
        for class in twin_classes(g, mode) {
            for pair in class.windows(2) {
                let (a, b) = (find(&mut parent, pair[0]), find(&mut parent, pair[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    groups.into_values().collect()
}

/// Class id per vertex for `symmetry_classes`, ids assigned in class order.
pub(crate) fn symmetry_class_ids(g: &Graph) -> Vec<usize> {
    let classes = symmetry_classes(g);
    let mut ids = vec![0; g.n()];
    for (i, class) in classes.iter().enumerate() {
        for &v in class {
            ids[v] = i;
        }
    }
    ids
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_has_no_twins() {
        let classes = twin_classes(&Graph::cycle(5), TwinMode::Open);
        assert_eq!(classes.len(), 5);
    }

    #[test]
    fn complete_graph_is_one_closed_class() {
        let classes = twin_classes(&Graph::complete(3), TwinMode::Closed);
        assert_eq!(classes, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn star_leaves_are_open_twins() {
        let classes = twin_classes(&Graph::star(4), TwinMode::Open);
        assert_eq!(classes, vec![vec![0], vec![1, 2, 3, 4]]);
    }

    #[test]
    fn swapping_symmetry_class_members_is_an_automorphism() {
        let g = Graph::new(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
        for class in symmetry_classes(&g) {
            for w in class.windows(2) {
                let (a, b) = (w[0], w[1]);
                let swap = |v: usize| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                };
                for u in 0..g.n() {
                    for v in u + 1..g.n() {
                        assert_eq!(g.has_edge(u, v), g.has_edge(swap(u), swap(v)));
                    }
                }
            }
        }
    }
}
