//! Shattering semantics for the family of k-connected subgraphs.
//!
//! The family `P_k` contains, besides every k-connected subgraph of `G`, the
//! empty subgraph — without it no graph could shatter even a singleton set
//! whose removal-complement admits no family member (the complete graph
//! `K_{k+1}` needs the empty trace realized somehow). For k = 1 the family
//! is all nonempty connected subgraphs including single vertices, which is
//! what lets the leaves of a star be shattered and the lower bound
//! `ell(G) <= VC_con(G)` hold.
//!
//! Trace realizability only ever inspects induced subgraphs: enlarging the
//! edge set of a subgraph on a fixed vertex set preserves k-connectivity and
//! leaves the trace unchanged, so an edge-maximal representative always
//! exists.

use std::collections::BTreeMap;

use crate::graph::{self, Graph, GraphError, VertexSet};

mod oracle;
mod realize;
mod search;
mod shatter;

pub use oracle::{
    is_shattered_bruteforce, is_shattered_bruteforce_with_limit, vc_dimension_bruteforce,
    ORACLE_SET_LIMIT,
};
pub use realize::{realizable, realize_trace};
pub use search::{vc_at_least, vc_at_least_with, vc_dimension, vc_dimension_with, SearchOptions};
pub use shatter::{is_shattered_poly, is_shattered_poly_with, ShatterOptions, ShatterOutcome};

/// Errors from the shattering engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VcError {
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("trace {w} is not a subset of the candidate set {a}")]
    TraceNotInSet { w: VertexSet, a: VertexSet },
    #[error("oracle scale exceeded: {0}")]
    OracleScale(String),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("certificate invalid: {0}")]
    BadCertificate(String),
}

/// Whether the induced subgraph on `s` belongs to the family `P_k`.
///
/// The empty set is always a member (the empty subgraph); for k = 1 any
/// nonempty connected induced subgraph qualifies, single vertices included.
pub fn family_member(g: &Graph, s: &VertexSet, k: usize) -> Result<bool, VcError> {
    if k < 1 {
        return Err(VcError::Graph(GraphError::KTooSmall(k)));
    }
    s.check_range(g.n())?;
    if s.is_empty() {
        return Ok(true);
    }
    let (h, _) = g.induced_subgraph(s)?;
    Ok(graph::is_k_connected(&h, k)?)
}

/// Witness for one realized trace: a family member's vertex set, or the
/// empty subgraph (allowed only for the empty trace).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Empty,
    Set(VertexSet),
}

impl Witness {
    pub fn contains(&self, v: usize) -> bool {
        match self {
            Witness::Empty => false,
            Witness::Set(s) => s.contains(v),
        }
    }
}

/// Per-trace witnesses certifying that a set is shattered (for the traces
/// the polynomial check inspects: all of size at most k + 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShatterCertificate {
    pub a: VertexSet,
    pub k: usize,
    entries: BTreeMap<VertexSet, Witness>,
}

impl ShatterCertificate {
    pub fn new(a: VertexSet, k: usize) -> Self {
        ShatterCertificate {
            a,
            k,
            entries: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, trace: VertexSet, witness: Witness) {
        self.entries.insert(trace, witness);
    }

    pub fn get(&self, trace: &VertexSet) -> Option<&Witness> {
        self.entries.get(trace)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexSet, &Witness)> {
        self.entries.iter()
    }

    /// Re-validates every entry: the witness must be a family member whose
    /// intersection with `A` is exactly the trace; the empty-subgraph marker
    /// is only allowed for the empty trace.
    pub fn validate(&self, g: &Graph) -> Result<(), VcError> {
        for (trace, witness) in &self.entries {
            if !trace.is_subset(&self.a) {
                return Err(VcError::BadCertificate(format!(
                    "trace {trace} is not contained in A = {}",
                    self.a
                )));
            }
            match witness {
                Witness::Empty => {
                    if !trace.is_empty() {
                        return Err(VcError::BadCertificate(format!(
                            "empty witness recorded for nonempty trace {trace}"
                        )));
                    }
                }
                Witness::Set(s) => {
                    if &s.intersection(&self.a) != trace {
                        return Err(VcError::BadCertificate(format!(
                            "witness {s} meets A in {}, expected {trace}",
                            s.intersection(&self.a)
                        )));
                    }
                    if !family_member(g, s, self.k)? {
                        return Err(VcError::BadCertificate(format!(
                            "witness {s} is not a {}-connected subgraph",
                            self.k
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// JSON form: `{"A": [...], "k": 2, "traces": [{"W": [...], "witness":
    /// [...]|"empty"}, ...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&CertJson::from(self)).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, VcError> {
        let doc: CertJson = serde_json::from_str(text)
            .map_err(|e| VcError::BadCertificate(format!("invalid JSON: {e}")))?;
        doc.try_into()
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct CertJson {
    #[serde(rename = "A")]
    a: Vec<usize>,
    k: usize,
    traces: Vec<CertEntryJson>,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct CertEntryJson {
    #[serde(rename = "W")]
    w: Vec<usize>,
    witness: serde_json::Value,
}

impl From<&ShatterCertificate> for CertJson {
    fn from(c: &ShatterCertificate) -> Self {
        CertJson {
            a: c.a.iter().collect(),
            k: c.k,
            traces: c
                .entries
                .iter()
                .map(|(w, wit)| CertEntryJson {
                    w: w.iter().collect(),
                    witness: match wit {
                        Witness::Empty => serde_json::Value::String("empty".into()),
                        Witness::Set(s) => serde_json::json!(s.iter().collect::<Vec<_>>()),
                    },
                })
                .collect(),
        }
    }
}

impl TryFrom<CertJson> for ShatterCertificate {
    type Error = VcError;

    fn try_from(doc: CertJson) -> Result<Self, VcError> {
        let mut cert = ShatterCertificate::new(doc.a.into_iter().collect(), doc.k);
        for entry in doc.traces {
            let witness = match entry.witness {
                serde_json::Value::String(s) if s == "empty" => Witness::Empty,
                serde_json::Value::Array(items) => {
                    let mut set = VertexSet::empty();
                    for item in items {
                        let v = item.as_u64().ok_or_else(|| {
                            VcError::BadCertificate("witness entries must be integers".into())
                        })?;
                        set.insert(v as usize);
                    }
                    Witness::Set(set)
                }
                other => {
                    return Err(VcError::BadCertificate(format!(
                        "witness must be a vertex array or \"empty\", got {other}"
                    )))
                }
            };
            cert.insert(entry.w.into_iter().collect(), witness);
        }
        Ok(cert)
    }
}

/// Counters reported by the exact search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct SearchStats {
    pub sets_examined: u64,
    pub realizability_calls: u64,
}

/// Result of the exact VC computation: the dimension, the lexicographically
/// smallest maximum shattered set, its certificate and search counters.
#[derive(Debug, Clone)]
pub struct VcResult {
    pub dimension: usize,
    pub witness: VertexSet,
    pub certificate: ShatterCertificate,
    pub stats: SearchStats,
}

impl VcResult {
    pub fn to_json(&self) -> String {
        let doc = serde_json::json!({
            "dimension": self.dimension,
            "witness": self.witness.iter().collect::<Vec<_>>(),
            "certificate": serde_json::from_str::<serde_json::Value>(&self.certificate.to_json())
                .expect("certificate is valid JSON"),
            "search_stats": self.stats,
        });
        serde_json::to_string(&doc).expect("result serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_member_examples() {
        let k4 = Graph::complete(4);
        assert!(family_member(&k4, &VertexSet::empty(), 2).unwrap());
        assert!(family_member(&k4, &[0, 1, 2].into(), 2).unwrap());
        // Three consecutive cycle vertices induce a path: not 2-connected.
        assert!(!family_member(&Graph::cycle(5), &[0, 1, 2].into(), 2).unwrap());
        // Single vertices are 1-connected.
        assert!(family_member(&k4, &[3].into(), 1).unwrap());
        // Non-adjacent path endpoints induce a disconnected pair.
        assert!(!family_member(&Graph::path(3), &[0, 2].into(), 1).unwrap());
    }

    #[test]
    fn certificate_json_round_trip() {
        let mut cert = ShatterCertificate::new([0, 1].into(), 2);
        cert.insert(VertexSet::empty(), Witness::Empty);
        cert.insert([0].into(), Witness::Set([0, 2, 3].into()));
        let back = ShatterCertificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(cert, back);
        back.validate(&Graph::complete(4)).unwrap();
    }

    #[test]
    fn certificate_validation_catches_lies() {
        let g = Graph::cycle(5);
        let mut cert = ShatterCertificate::new([0].into(), 2);
        cert.insert([0].into(), Witness::Set([0, 1, 2].into()));
        assert!(cert.validate(&g).is_err());

        let mut cert = ShatterCertificate::new([0].into(), 2);
        cert.insert([0].into(), Witness::Empty);
        assert!(cert.validate(&g).is_err());
    }
}
