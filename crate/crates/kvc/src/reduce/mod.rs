//! Hardness-reduction constructions and their verification harnesses.
//!
//! Two builders: set multicover to a general-k instance, and monotone planar
//! 1-in-3 SAT to a planar k = 2 instance. Both emit [`GadgetGraph`]s whose
//! vertices carry role and provenance tags, so witnesses can be encoded,
//! decoded and re-validated without reverse-engineering the construction.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::sat::SatError;
use crate::vc::VcError;

mod multicover;
mod planar;

pub use multicover::{
    multicover_to_graph, solve_multicover, solve_multicover_with_limit,
    verify_multicover_reduction, verify_multicover_reduction_with, MulticoverInstance,
    MulticoverVerification, MULTICOVER_SUBSET_LIMIT,
};
pub use planar::{
    assignment_from_shattered_set, build_clause_gadget, build_connector, build_variable_gadget,
    faithful_p, planar_reduction, planar_reduction_with_p, shattered_set_from_assignment,
    shattered_set_from_assignment_checked, GadgetFragment,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReduceError {
    #[error("subset {subset} contains element {element} outside the ground set of size {n}")]
    ElementOutOfRange {
        subset: usize,
        element: usize,
        n: usize,
    },
    #[error("coverage demand must be at least 1")]
    ZeroCoverage,
    #[error("instance has {0} subsets, over the solver limit of {1}")]
    SolverScale(usize, usize),
    #[error("the multicover construction needs k >= 2, got {0}")]
    KTooSmall(usize),
    #[error("instance too large to verify: {0} vertices, limit {1}")]
    VerifyScale(usize, usize),
    #[error("gadget parameter p must be at least 1")]
    ZeroP,
    #[error("formula is not monotone")]
    NotMonotone,
    #[error("clause {clause} is drawn on the wrong side for its polarity")]
    WrongSide { clause: usize },
    #[error("{0}")]
    Sat(#[from] SatError),
    #[error("assignment does not satisfy the formula in the 1-in-3 sense")]
    NotSatisfying,
    #[error("set has {got} vertices, below the threshold {threshold}")]
    BelowThreshold { got: usize, threshold: usize },
    #[error("variable {var} has no literal vertex in the shattered set")]
    MissingLiteral { var: usize },
    #[error("not a canonical witness: {0}")]
    NotCanonicalWitness(String),
    #[error("{0}")]
    Vc(#[from] VcError),
    #[error("{0}")]
    Graph(#[from] crate::graph::GraphError),
}

/// What a vertex of a reduction graph is for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    // Multicover construction.
    ColumnCopy,
    SetVertex,
    Clique,
    Reservoir,
    // Planar construction.
    Centre,
    Vein,
    Peak,
    LiteralPos,
    LiteralNeg,
    HorizontalLeft,
    HorizontalRight,
    ConnectorMid,
}

/// A reduction output: the graph, per-vertex role and provenance tags, and
/// the VC threshold the reduction's claim refers to ("yes-instance iff the
/// k-connected VC-dimension is at least `threshold`").
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
    /// Which column/set/clause/variable/connector a vertex came from.
    pub provenance: Vec<Option<usize>>,
    pub threshold: usize,
    pub intended_k: usize,
    /// False when the gadget parameter p was overridden away from its
    /// construction-faithful value.
    pub faithful_p: bool,
}

#[derive(Serialize, Deserialize)]
struct GadgetGraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    roles: Vec<Role>,
    provenance: Vec<Option<usize>>,
    threshold: usize,
    intended_k: usize,
    faithful_p: bool,
}

impl GadgetGraph {
    pub fn vertices_with_role(&self, role: Role) -> impl Iterator<Item = usize> + '_ {
        self.roles
            .iter()
            .enumerate()
            .filter(move |&(_, &r)| r == role)
            .map(|(v, _)| v)
    }

    pub fn to_json(&self) -> String {
        let doc = GadgetGraphJson {
            n: self.graph.n(),
            edges: self.graph.edges().to_vec(),
            roles: self.roles.clone(),
            provenance: self.provenance.clone(),
            threshold: self.threshold,
            intended_k: self.intended_k,
            faithful_p: self.faithful_p,
        };
        serde_json::to_string(&doc).expect("gadget graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ReduceError> {
        let doc: GadgetGraphJson = serde_json::from_str(text)
            .map_err(|e| ReduceError::NotCanonicalWitness(format!("invalid JSON: {e}")))?;
        Ok(GadgetGraph {
            graph: Graph::new(doc.n, doc.edges)?,
            roles: doc.roles,
            provenance: doc.provenance,
            threshold: doc.threshold,
            intended_k: doc.intended_k,
            faithful_p: doc.faithful_p,
        })
    }

    /// Graphviz export with one color per role, for eyeballing gadgets.
    pub fn to_dot(&self) -> String {
        let color = |r: Role| match r {
            Role::ColumnCopy => "lightblue",
            Role::SetVertex => "orange",
            Role::Clique => "red",
            Role::Reservoir => "gray",
            Role::Centre => "red",
            Role::Vein => "lightblue",
            Role::Peak => "gold",
            Role::LiteralPos => "green",
            Role::LiteralNeg => "darkgreen",
            Role::HorizontalLeft => "plum",
            Role::HorizontalRight => "violet",
            Role::ConnectorMid => "gray",
        };
        let mut out = String::from("graph gadget {\n  node [style=filled];\n");
        for v in 0..self.graph.n() {
            let prov = self.provenance[v]
                .map(|p| format!(" {p}"))
                .unwrap_or_default();
            out.push_str(&format!(
                "  {v} [fillcolor={}, label=\"{v}\\n{:?}{prov}\"];\n",
                color(self.roles[v]),
                self.roles[v],
            ));
        }
        for &(u, v) in self.graph.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// All vertices except the given ones; handy for complements of removal
    /// patterns.
    pub fn complement_of(&self, removed: &VertexSet) -> VertexSet {
        (0..self.graph.n())
            .filter(|&v| !removed.contains(v))
            .collect()
    }
}
