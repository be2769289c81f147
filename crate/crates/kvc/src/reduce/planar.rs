//! The planar reduction: monotone laid-out 1-in-3 SAT to the k = 2 decision
//! problem.
//!
//! Building blocks, all parameterized by the vein count `p` (faithful value
//! `5m + 6n + 1`):
//!
//! - a *shamrock* is a triangle (its *centre*) with three *leaves*; a leaf
//!   over a centre pair is a bundle of length-two ears, each contributing
//!   one interior vertex adjacent to both pair members. Leaf vertices are
//!   *veins*, except a designated *peak* in clause gadgets.
//! - a *clause gadget* is a shamrock with `p` veins and one peak per leaf;
//!   the three peaks stand for the clause's literals.
//! - a *variable gadget* is a 4-cycle `left-horizontal — positive-literal —
//!   right-horizontal — negative-literal` plus a peakless shamrock attached
//!   by three edges: distinct centre vertices to the positive literal, the
//!   negative literal, and the left horizontal. That third edge landing on
//!   a horizontal is what gives every truth assignment exactly two edges
//!   from the shamrock into the removed pattern.
//! - a *connector* joins consecutive variables' facing horizontals with one
//!   direct edge and `p` disjoint length-two paths. Connectors close the
//!   variable sequence into a ring (the last one routed through the outer
//!   face), because the removed pattern must contain a cycle through the
//!   false vertices, not a path.
//!
//! Peaks attach to the literal vertices their clause mentions, following
//! the monotone representation: positive clauses above, negative below.
//! The removal pattern `A` of a satisfying assignment — all centres, all
//! horizontals, the false literal per variable, the two false peaks per
//! clause — has exactly `5m + 6n` vertices, and its complement is shattered.

use crate::graph::{is_k_connected, Graph, GraphError, VertexSet};
use crate::sat::{Formula, RectilinearLayout, Side};

use super::{GadgetGraph, ReduceError, Role};

/// The construction-faithful vein count `5m + 6n + 1`.
pub fn faithful_p(num_clauses: usize, num_vars: usize) -> usize {
    5 * num_clauses + 6 * num_vars + 1
}

/// A standalone gadget piece with its designated port vertices.
#[derive(Debug, Clone)]
pub struct GadgetFragment {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub provenance: Vec<Option<usize>>,
    /// Clause gadget: the three peaks (by literal index). Variable gadget:
    /// `[positive literal, negative literal, left horizontal, right
    /// horizontal]`. Connector: the two endpoints.
    pub ports: Vec<usize>,
}

/// Mutable builder shared by the fragment constructors and the full
/// reduction.
struct Builder {
    edges: Vec<(usize, usize)>,
    roles: Vec<Role>,
    provenance: Vec<Option<usize>>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            edges: Vec::new(),
            roles: Vec::new(),
            provenance: Vec::new(),
        }
    }

    fn push(&mut self, role: Role, provenance: Option<usize>) -> usize {
        self.roles.push(role);
        self.provenance.push(provenance);
        self.roles.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u.min(v), u.max(v)));
    }

    fn finish(self) -> Result<(Graph, Vec<Role>, Vec<Option<usize>>), GraphError> {
        let g = Graph::new(self.roles.len(), self.edges)?;
        Ok((g, self.roles, self.provenance))
    }
}

/// Emits a shamrock: a centre triangle plus, per leaf `l` over the centre
/// pair `(c_l, c_{l+1 mod 3})`, `p` veins and (for clause gadgets) one
/// peak. Returns `(centres, peaks)`.
fn emit_shamrock(
    b: &mut Builder,
    p: usize,
    provenance: usize,
    with_peaks: bool,
) -> ([usize; 3], Vec<usize>) {
    let centres = [0, 1, 2].map(|_| b.push(Role::Centre, Some(provenance)));
    b.edge(centres[0], centres[1]);
    b.edge(centres[1], centres[2]);
    b.edge(centres[2], centres[0]);
    let mut peaks = Vec::new();
    for leaf in 0..3 {
        let (u, v) = (centres[leaf], centres[(leaf + 1) % 3]);
        for _ in 0..p {
            let vein = b.push(Role::Vein, Some(provenance));
            b.edge(vein, u);
            b.edge(vein, v);
        }
        if with_peaks {
            let peak = b.push(Role::Peak, Some(provenance));
            b.edge(peak, u);
            b.edge(peak, v);
            peaks.push(peak);
        }
    }
    (centres, peaks)
}

/// Variable gadget: the 4-cycle plus the peakless shamrock and its three
/// attachment edges. Returns `[pos, neg, left, right]`.
fn emit_variable_gadget(b: &mut Builder, p: usize, var: usize) -> [usize; 4] {
    let pos = b.push(Role::LiteralPos, Some(var));
    let neg = b.push(Role::LiteralNeg, Some(var));
    let left = b.push(Role::HorizontalLeft, Some(var));
    let right = b.push(Role::HorizontalRight, Some(var));
    // 4-cycle with the literals opposite each other.
    b.edge(left, pos);
    b.edge(pos, right);
    b.edge(right, neg);
    b.edge(neg, left);
    let (centres, _) = emit_shamrock(b, p, var, false);
    b.edge(centres[0], pos);
    b.edge(centres[1], neg);
    b.edge(centres[2], left);
    [pos, neg, left, right]
}

/// Connector between two horizontal vertices: one direct edge and `p`
/// length-two paths.
fn emit_connector(b: &mut Builder, p: usize, provenance: usize, u: usize, v: usize) {
    b.edge(u, v);
    for _ in 0..p {
        let mid = b.push(Role::ConnectorMid, Some(provenance));
        b.edge(mid, u);
        b.edge(mid, v);
    }
}

/// Standalone clause gadget: `3 + 3(p + 1)` vertices, ports = peaks.
pub fn build_clause_gadget(p: usize, clause: usize) -> Result<GadgetFragment, ReduceError> {
    if p < 1 {
        return Err(ReduceError::ZeroP);
    }
    let mut b = Builder::new();
    let (_, peaks) = emit_shamrock(&mut b, p, clause, true);
    let (graph, roles, provenance) = b.finish()?;
    Ok(GadgetFragment {
        graph,
        roles,
        provenance,
        ports: peaks,
    })
}

/// Standalone variable gadget: `4 + 3 + 3p` vertices, ports =
/// `[pos, neg, left, right]`.
pub fn build_variable_gadget(p: usize, var: usize) -> Result<GadgetFragment, ReduceError> {
    if p < 1 {
        return Err(ReduceError::ZeroP);
    }
    let mut b = Builder::new();
    let ports = emit_variable_gadget(&mut b, p, var);
    let (graph, roles, provenance) = b.finish()?;
    Ok(GadgetFragment {
        graph,
        roles,
        provenance,
        ports: ports.to_vec(),
    })
}

/// Standalone connector: two endpoint vertices plus `p` fresh midpoints.
pub fn build_connector(p: usize, connector: usize) -> Result<GadgetFragment, ReduceError> {
    if p < 1 {
        return Err(ReduceError::ZeroP);
    }
    let mut b = Builder::new();
    let u = b.push(Role::HorizontalRight, None);
    let v = b.push(Role::HorizontalLeft, None);
    emit_connector(&mut b, p, connector, u, v);
    let (graph, roles, provenance) = b.finish()?;
    Ok(GadgetFragment {
        graph,
        roles,
        provenance,
        ports: vec![u, v],
    })
}

/// Builds the planar reduction graph at the faithful `p = 5m + 6n + 1`.
pub fn planar_reduction(
    f: &Formula,
    layout: &RectilinearLayout,
) -> Result<GadgetGraph, ReduceError> {
    planar_reduction_with_p(f, layout, faithful_p(f.num_clauses(), f.num_vars()))
}

/// Like [`planar_reduction`] with an explicit vein count. Values other than
/// the faithful one are stamped `faithful_p = false`; they are for
/// miniature experiments only, the claim is proved at the faithful value.
pub fn planar_reduction_with_p(
    f: &Formula,
    layout: &RectilinearLayout,
    p: usize,
) -> Result<GadgetGraph, ReduceError> {
    if p < 1 {
        return Err(ReduceError::ZeroP);
    }
    if !crate::sat::is_monotone(f) {
        return Err(ReduceError::NotMonotone);
    }
    let violations = crate::sat::validate_layout(f, layout);
    if !violations.is_empty() {
        return Err(ReduceError::Sat(crate::sat::SatError::InvalidLayout(
            violations.len(),
            violations[0].to_string(),
        )));
    }
    for (ci, clause) in f.clauses().iter().enumerate() {
        let expected = if clause.is_positive() {
            Side::Above
        } else {
            Side::Below
        };
        if layout.geom[ci].side != expected {
            return Err(ReduceError::WrongSide { clause: ci });
        }
    }

    let n = f.num_vars();
    let m = f.num_clauses();
    let mut b = Builder::new();
    // Variables left to right, then clauses by index, then connectors.
    let mut var_ports = vec![[0usize; 4]; n];
    for &var in &layout.order {
        var_ports[var] = emit_variable_gadget(&mut b, p, var);
    }
    for ci in 0..m {
        let (_, peaks) = emit_shamrock(&mut b, p, ci, true);
        for (li, lit) in f.clauses()[ci].lits().iter().enumerate() {
            let target = if lit.negated {
                var_ports[lit.var][1]
            } else {
                var_ports[lit.var][0]
            };
            b.edge(peaks[li], target);
        }
    }
    // Connectors close the variable order into a ring.
    for c in 0..n {
        let left_var = layout.order[c];
        let right_var = layout.order[(c + 1) % n];
        emit_connector(&mut b, p, c, var_ports[left_var][3], var_ports[right_var][2]);
    }
    let (graph, roles, provenance) = b.finish()?;
    debug_assert_eq!(graph.n(), m * (3 * p + 6) + n * (3 * p + 7) + n * p);
    let threshold = graph.n() - (5 * m + 6 * n);
    Ok(GadgetGraph {
        graph,
        roles,
        provenance,
        threshold,
        intended_k: 2,
        faithful_p: p == faithful_p(m, n),
    })
}

/// The removal pattern of an assignment: all centres, all horizontals, the
/// false literal vertex per variable, and each clause's false peaks.
fn removal_pattern(gg: &GadgetGraph, assignment: &[bool]) -> Result<VertexSet, ReduceError> {
    let g = &gg.graph;
    let mut pattern = VertexSet::empty();
    for v in 0..g.n() {
        match gg.roles[v] {
            Role::Centre | Role::HorizontalLeft | Role::HorizontalRight => {
                pattern.insert(v);
            }
            Role::LiteralPos | Role::LiteralNeg => {
                let var = gg.provenance[v].expect("literal vertices carry their variable");
                if var >= assignment.len() {
                    return Err(ReduceError::NotCanonicalWitness(format!(
                        "assignment has {} values but variable {var} exists",
                        assignment.len()
                    )));
                }
                let truth = assignment[var] != matches!(gg.roles[v], Role::LiteralNeg);
                if !truth {
                    pattern.insert(v);
                }
            }
            Role::Peak => {
                // A peak is false iff its literal vertex neighbour is false.
                let lit = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .find(|&w| matches!(gg.roles[w], Role::LiteralPos | Role::LiteralNeg))
                    .ok_or_else(|| {
                        ReduceError::NotCanonicalWitness(
                            "peak without a literal attachment".into(),
                        )
                    })?;
                let var = gg.provenance[lit].expect("literal vertices carry their variable");
                let truth = assignment[var] != matches!(gg.roles[lit], Role::LiteralNeg);
                if !truth {
                    pattern.insert(v);
                }
            }
            _ => {}
        }
    }
    Ok(pattern)
}

/// Encodes a 1-in-3 satisfying assignment as the claimed shattered set
/// `V \ A`. The assignment is validated structurally: every clause gadget
/// must end up with exactly two false peaks.
pub fn shattered_set_from_assignment(
    gg: &GadgetGraph,
    assignment: &[bool],
) -> Result<VertexSet, ReduceError> {
    let pattern = removal_pattern(gg, assignment)?;
    // Exactly one true literal per clause <=> exactly two false peaks.
    let mut false_peaks_per_clause = std::collections::BTreeMap::new();
    for v in gg.vertices_with_role(Role::Peak) {
        let clause = gg.provenance[v].expect("peaks carry their clause");
        *false_peaks_per_clause.entry(clause).or_insert(0usize) +=
            usize::from(pattern.contains(v));
    }
    if false_peaks_per_clause.values().any(|&c| c != 2) {
        return Err(ReduceError::NotSatisfying);
    }
    Ok(gg.complement_of(&pattern))
}

/// [`shattered_set_from_assignment`] plus structural assertions on the
/// removal pattern: the size identity `|A| = 5m + 6n`, 2-connectivity of
/// the induced pattern, the cycle through the variable-gadget false
/// vertices, and the two-edge attachment of every remaining piece.
pub fn shattered_set_from_assignment_checked(
    gg: &GadgetGraph,
    assignment: &[bool],
) -> Result<VertexSet, ReduceError> {
    let vprime = shattered_set_from_assignment(gg, assignment)?;
    let pattern = gg.complement_of(&vprime);
    let fail = |msg: String| Err(ReduceError::NotCanonicalWitness(msg));

    let m = gg
        .vertices_with_role(Role::Peak)
        .filter_map(|v| gg.provenance[v])
        .collect::<std::collections::BTreeSet<_>>()
        .len();
    let n = gg
        .vertices_with_role(Role::LiteralPos)
        .count();
    if pattern.len() != 5 * m + 6 * n {
        return fail(format!(
            "removal pattern has {} vertices, expected {}",
            pattern.len(),
            5 * m + 6 * n
        ));
    }
    let (ga, map) = gg.graph.induced_subgraph(&pattern)?;
    if !is_k_connected(&ga, 2)? {
        return fail("removal pattern is not 2-connected".into());
    }
    // The ring part: horizontals and false literals, each of degree 2
    // within the pattern, forming one cycle of length 3n.
    let ring: Vec<usize> = (0..ga.n())
        .filter(|&v| {
            matches!(
                gg.roles[map[v]],
                Role::HorizontalLeft | Role::HorizontalRight | Role::LiteralPos | Role::LiteralNeg
            )
        })
        .collect();
    if ring.len() != 3 * n {
        return fail(format!("ring has {} vertices, expected {}", ring.len(), 3 * n));
    }
    let ring_set: VertexSet = ring.iter().copied().collect();
    let (ring_graph, _) = ga.induced_subgraph(&ring_set)?;
    if !(ring_graph.is_connected() && (0..ring_graph.n()).all(|v| ring_graph.degree(v) == 2)) {
        return fail("false vertices do not form a single cycle".into());
    }
    // Every remaining piece hangs off the ring by exactly two edges.
    let rest: VertexSet = (0..ga.n()).filter(|v| !ring_set.contains(*v)).collect();
    let (rest_graph, rest_map) = ga.induced_subgraph(&rest)?;
    for piece in rest_graph.components() {
        let mut attachment_edges = 0;
        for &v in &piece {
            let orig = rest_map[v];
            attachment_edges += ga
                .neighbors(orig)
                .iter()
                .filter(|&&w| ring_set.contains(w))
                .count();
        }
        if attachment_edges != 2 {
            return fail(format!(
                "a gadget piece attaches to the cycle by {attachment_edges} edges, expected 2"
            ));
        }
    }
    Ok(vprime)
}

/// Decodes an assignment from a shattered set of at least threshold size:
/// a literal is true iff its vertex is in the set. When both literal
/// vertices of a variable are present, ones of degree 3 (appearing in no
/// clause) are discounted first; any remaining ambiguity is rejected.
pub fn assignment_from_shattered_set(
    gg: &GadgetGraph,
    vprime: &VertexSet,
) -> Result<Vec<bool>, ReduceError> {
    if vprime.len() < gg.threshold {
        return Err(ReduceError::BelowThreshold {
            got: vprime.len(),
            threshold: gg.threshold,
        });
    }
    let num_vars = gg.vertices_with_role(Role::LiteralPos).count();
    let mut assignment = vec![false; num_vars];
    for var in 0..num_vars {
        let mut present: Vec<usize> = (0..gg.graph.n())
            .filter(|&v| {
                gg.provenance[v] == Some(var)
                    && matches!(gg.roles[v], Role::LiteralPos | Role::LiteralNeg)
                    && vprime.contains(v)
            })
            .collect();
        if present.len() == 2 {
            // Literal vertices outside every clause have degree 3; the
            // canonical witness never needs them.
            present.retain(|&v| gg.graph.degree(v) != 3);
        }
        match present.as_slice() {
            [] => return Err(ReduceError::MissingLiteral { var }),
            [v] => assignment[var] = matches!(gg.roles[*v], Role::LiteralPos),
            _ => {
                return Err(ReduceError::NotCanonicalWitness(format!(
                    "both literal vertices of variable {var} are present"
                )))
            }
        }
    }
    Ok(assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::{ClauseGeom, Formula, RectilinearLayout, Side};

    fn one_clause_instance() -> (Formula, RectilinearLayout) {
        let f = Formula::new(3, [[(0, false), (1, false), (2, false)]]).unwrap();
        let layout = RectilinearLayout {
            order: vec![0, 1, 2],
            geom: vec![ClauseGeom {
                side: Side::Above,
                level: 1,
            }],
        };
        (f, layout)
    }

    #[test]
    fn fragment_counts() {
        let p = 4;
        let clause = build_clause_gadget(p, 0).unwrap();
        assert_eq!(clause.graph.n(), 3 + 3 * (p + 1));
        assert_eq!(clause.ports.len(), 3);
        let var = build_variable_gadget(p, 0).unwrap();
        assert_eq!(var.graph.n(), 4 + 3 + 3 * p);
        let conn = build_connector(p, 0).unwrap();
        assert_eq!(conn.graph.n() - 2, p);
        assert!(build_clause_gadget(0, 0).is_err());
    }

    #[test]
    fn leaf_vertices_touch_exactly_their_centre_pair() {
        let frag = build_clause_gadget(3, 0).unwrap();
        for v in 0..frag.graph.n() {
            match frag.roles[v] {
                Role::Vein | Role::Peak => {
                    let nbrs: Vec<usize> = frag
                        .graph
                        .neighbors(v)
                        .iter()
                        .copied()
                        .filter(|&w| matches!(frag.roles[w], Role::Centre))
                        .collect();
                    assert_eq!(nbrs.len(), 2);
                    assert_eq!(frag.graph.degree(v), 2);
                }
                _ => {}
            }
        }
    }

    #[test]
    fn reduction_arithmetic_m1_n3() {
        let (f, layout) = one_clause_instance();
        assert_eq!(faithful_p(1, 3), 24);
        let gg = planar_reduction(&f, &layout).unwrap();
        // m(3p+6) + n(3p+7) + np = 78 + 237 + 72.
        assert_eq!(gg.graph.n(), 387);
        assert_eq!(gg.threshold, 364);
        assert!(gg.faithful_p);
        assert_eq!(gg.intended_k, 2);
    }

    #[test]
    fn reduction_rejects_bad_inputs() {
        let f = Formula::new(3, [[(0, false), (1, true), (2, false)]]).unwrap();
        let layout = RectilinearLayout {
            order: vec![0, 1, 2],
            geom: vec![ClauseGeom {
                side: Side::Above,
                level: 1,
            }],
        };
        assert_eq!(
            planar_reduction(&f, &layout).unwrap_err(),
            ReduceError::NotMonotone
        );
        // Negative clause drawn above.
        let f = Formula::new(3, [[(0, true), (1, true), (2, true)]]).unwrap();
        assert_eq!(
            planar_reduction(&f, &layout).unwrap_err(),
            ReduceError::WrongSide { clause: 0 }
        );
    }

    #[test]
    fn encode_decode_round_trip_small_p() {
        let (f, layout) = one_clause_instance();
        let gg = planar_reduction_with_p(&f, &layout, 2).unwrap();
        assert!(!gg.faithful_p);
        for assignment in [
            vec![true, false, false],
            vec![false, true, false],
            vec![false, false, true],
        ] {
            let vprime = shattered_set_from_assignment_checked(&gg, &assignment).unwrap();
            assert_eq!(vprime.len(), gg.threshold);
            let decoded = assignment_from_shattered_set(&gg, &vprime).unwrap();
            assert_eq!(decoded, assignment);
        }
        // Two true literals: not 1-in-3.
        assert_eq!(
            shattered_set_from_assignment(&gg, &[true, true, false]).unwrap_err(),
            ReduceError::NotSatisfying
        );
    }

    #[test]
    fn decode_rejects_defective_sets() {
        let (f, layout) = one_clause_instance();
        let gg = planar_reduction_with_p(&f, &layout, 2).unwrap();
        let vprime = shattered_set_from_assignment(&gg, &[true, false, false]).unwrap();
        // Starve it below the threshold.
        let mut small = vprime.clone();
        let drop: Vec<usize> = small.iter().take(3).collect();
        for v in drop {
            small.remove(v);
        }
        assert!(matches!(
            assignment_from_shattered_set(&gg, &small),
            Err(ReduceError::BelowThreshold { .. })
        ));
        // Remove every literal vertex of variable 0.
        let mut headless = vprime.clone();
        for v in 0..gg.graph.n() {
            if gg.provenance[v] == Some(0)
                && matches!(gg.roles[v], Role::LiteralPos | Role::LiteralNeg)
            {
                headless.remove(v);
            }
        }
        // Pad it back over the threshold with pattern vertices that are not
        // literals of variable 0.
        for v in 0..gg.graph.n() {
            if headless.len() == vprime.len() {
                break;
            }
            if !headless.contains(v)
                && !(gg.provenance[v] == Some(0)
                    && matches!(gg.roles[v], Role::LiteralPos | Role::LiteralNeg))
            {
                headless.insert(v);
            }
        }
        assert!(matches!(
            assignment_from_shattered_set(&gg, &headless),
            Err(ReduceError::MissingLiteral { var: 0 })
        ));
    }
}
