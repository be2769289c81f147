//! Graph serialization: a JSON form and DIMACS edge format.
//!
//! JSON: `{"n": 5, "edges": [[0,1], ...], "labels": [...]}` with 0-indexed
//! vertices; `labels` is optional. DIMACS: `p edge <n> <m>` header and
//! `e <u> <v>` lines, 1-indexed, `c` comment lines ignored. Both readers
//! reject self-loops and duplicate edges with a diagnostic naming the
//! offending line (edge index for JSON).

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphReadError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("edge #{index} = ({u}, {v}): {reason}")]
    BadJsonEdge {
        index: usize,
        u: usize,
        v: usize,
        reason: String,
    },
    #[error("line {line}: {reason}")]
    BadLine { line: usize, reason: String },
    #[error("missing 'p edge' header")]
    MissingHeader,
    #[error("declared {declared} edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("{0}")]
    Graph(GraphError),
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

/// Serializes to the JSON graph form (keys in fixed order, edges canonical).
pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.n(),
        edges: g.edges().to_vec(),
        labels: g.labels().map(<[String]>::to_vec),
    };
    serde_json::to_string(&doc).expect("graph serializes")
}

/// Parses the JSON graph form, validating simplicity edge by edge.
pub fn from_json(text: &str) -> Result<Graph, GraphReadError> {
    let doc: GraphJson =
        serde_json::from_str(text).map_err(|e| GraphReadError::Json(e.to_string()))?;
    // Re-add edges one at a time so errors can name the offending entry.
    let mut edges = Vec::new();
    for (index, &(u, v)) in doc.edges.iter().enumerate() {
        edges.push((u, v));
        if let Err(e) = Graph::new(doc.n, edges.iter().copied()) {
            return Err(GraphReadError::BadJsonEdge {
                index,
                u,
                v,
                reason: e.to_string(),
            });
        }
    }
    let mut g = Graph::new(doc.n, edges).expect("validated above");
    if let Some(labels) = doc.labels {
        g = g.with_labels(labels).map_err(GraphReadError::Graph)?;
    }
    Ok(g)
}

/// Serializes to DIMACS edge format (1-indexed).
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Parses DIMACS edge format with line-precise diagnostics.
pub fn from_dimacs(text: &str) -> Result<Graph, GraphReadError> {
    let mut n: Option<usize> = None;
    let mut declared_m = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let bad = |reason: &str| GraphReadError::BadLine {
            line,
            reason: reason.to_string(),
        };
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.first() {
            None | Some(&"c") => continue,
            Some(&"p") => {
                if n.is_some() {
                    return Err(bad("duplicate 'p' header"));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(bad("expected 'p edge <n> <m>'"));
                }
                n = Some(
                    fields[2]
                        .parse()
                        .map_err(|_| bad("vertex count is not a number"))?,
                );
                declared_m = fields[3]
                    .parse()
                    .map_err(|_| bad("edge count is not a number"))?;
            }
            Some(&"e") => {
                let nv = n.ok_or(GraphReadError::MissingHeader)?;
                if fields.len() != 3 {
                    return Err(bad("expected 'e <u> <v>'"));
                }
                let u: usize = fields[1]
                    .parse()
                    .map_err(|_| bad("endpoint is not a number"))?;
                let v: usize = fields[2]
                    .parse()
                    .map_err(|_| bad("endpoint is not a number"))?;
                if u == 0 || v == 0 || u > nv || v > nv {
                    return Err(bad(&format!(
                        "endpoint out of range 1..={nv}"
                    )));
                }
                let (u, v) = (u - 1, v - 1);
                if u == v {
                    return Err(bad("self-loop"));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(bad("duplicate edge"));
                }
                edges.push((u, v));
            }
            Some(other) => return Err(bad(&format!("unknown record '{other}'"))),
        }
    }
    let n = n.ok_or(GraphReadError::MissingHeader)?;
    if edges.len() != declared_m {
        return Err(GraphReadError::EdgeCountMismatch {
            declared: declared_m,
            found: edges.len(),
        });
    }
    Graph::new(n, edges).map_err(GraphReadError::Graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let g = Graph::cycle(5)
            .with_labels((0..5).map(|i| format!("v{i}")).collect())
            .unwrap();
        let back = from_json(&to_json(&g)).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn json_rejects_loop_with_location() {
        let err = from_json(r#"{"n":3,"edges":[[0,1],[2,2]]}"#).unwrap_err();
        assert_eq!(
            err.to_string(),
            "edge #1 = (2, 2): self-loop at vertex 2"
        );
    }

    #[test]
    fn dimacs_round_trip() {
        let g = Graph::complete(4);
        assert_eq!(from_dimacs(&to_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn dimacs_rejects_duplicates_with_line() {
        let text = "c demo\np edge 3 2\ne 1 2\ne 2 1\n";
        let err = from_dimacs(text).unwrap_err();
        assert_eq!(err.to_string(), "line 4: duplicate edge");
    }

    #[test]
    fn dimacs_range_check() {
        let err = from_dimacs("p edge 2 1\ne 1 5\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: endpoint out of range 1..=2");
    }
}
