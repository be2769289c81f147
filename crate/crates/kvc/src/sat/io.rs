//! Formula serialization: JSON (with optional layout) and DIMACS CNF.
//!
//! JSON: `{"num_vars": 3, "order": [0,1,2], "clauses": [{"lits":
//! [[0,false],[1,true],[2,false]], "side": "above", "level": 1}]}`. The
//! `order` field and the per-clause `side`/`level` fields are either all
//! present (laid-out instance) or all absent (bare formula).
//!
//! DIMACS CNF is accepted for interoperability; it carries no layout, and
//! every clause must have exactly three literals.

use serde::{Deserialize, Serialize};

use super::layout::{ClauseGeom, RectilinearLayout, Side};
use super::Formula;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SatIoError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Formula(super::SatError),
    #[error("layout fields must be all present or all absent")]
    PartialLayout,
    #[error("line {line}: {reason}")]
    BadLine { line: usize, reason: String },
    #[error("missing 'p cnf' header")]
    MissingHeader,
    #[error("declared {declared} clauses, found {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
}

#[derive(Serialize, Deserialize)]
struct FormulaJson {
    num_vars: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<Vec<usize>>,
    clauses: Vec<ClauseJson>,
}

#[derive(Serialize, Deserialize)]
struct ClauseJson {
    lits: Vec<(usize, bool)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    side: Option<Side>,
    #[serde(skip_serializing_if = "Option::is_none")]
    level: Option<u32>,
}

pub fn to_json(f: &Formula, layout: Option<&RectilinearLayout>) -> String {
    let doc = FormulaJson {
        num_vars: f.num_vars(),
        order: layout.map(|l| l.order.clone()),
        clauses: f
            .clauses()
            .iter()
            .enumerate()
            .map(|(i, c)| ClauseJson {
                lits: c.lits().iter().map(|l| (l.var, l.negated)).collect(),
                side: layout.map(|l| l.geom[i].side),
                level: layout.map(|l| l.geom[i].level),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("formula serializes")
}

pub fn from_json(text: &str) -> Result<(Formula, Option<RectilinearLayout>), SatIoError> {
    let doc: FormulaJson =
        serde_json::from_str(text).map_err(|e| SatIoError::Json(e.to_string()))?;
    let mut specs = Vec::new();
    for clause in &doc.clauses {
        if clause.lits.len() != 3 {
            return Err(SatIoError::Json(format!(
                "clause has {} literals, expected exactly 3",
                clause.lits.len()
            )));
        }
        specs.push([clause.lits[0], clause.lits[1], clause.lits[2]]);
    }
    let formula = Formula::new(doc.num_vars, specs).map_err(SatIoError::Formula)?;
    let with_layout = doc.order.is_some();
    let uniform = doc
        .clauses
        .iter()
        .all(|c| c.side.is_some() == with_layout && c.level.is_some() == with_layout);
    if !uniform {
        return Err(SatIoError::PartialLayout);
    }
    let layout = doc.order.map(|order| RectilinearLayout {
        order,
        geom: doc
            .clauses
            .iter()
            .map(|c| ClauseGeom {
                side: c.side.expect("checked"),
                level: c.level.expect("checked"),
            })
            .collect(),
    });
    Ok((formula, layout))
}

/// Parses DIMACS CNF restricted to exactly-3-literal clauses.
pub fn from_dimacs_cnf(text: &str) -> Result<Formula, SatIoError> {
    let mut num_vars: Option<usize> = None;
    let mut declared = 0usize;
    let mut specs: Vec<[(usize, bool); 3]> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let bad = |reason: &str| SatIoError::BadLine {
            line,
            reason: reason.to_string(),
        };
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.first() {
            None | Some(&"c") => continue,
            Some(&"p") => {
                if fields.len() != 4 || fields[1] != "cnf" {
                    return Err(bad("expected 'p cnf <vars> <clauses>'"));
                }
                num_vars = Some(
                    fields[2]
                        .parse()
                        .map_err(|_| bad("variable count is not a number"))?,
                );
                declared = fields[3]
                    .parse()
                    .map_err(|_| bad("clause count is not a number"))?;
            }
            Some(_) => {
                let nv = num_vars.ok_or(SatIoError::MissingHeader)?;
                let lits: Vec<i64> = fields
                    .iter()
                    .map(|s| s.parse::<i64>().map_err(|_| bad("literal is not a number")))
                    .collect::<Result<_, _>>()?;
                if lits.last() != Some(&0) {
                    return Err(bad("clause line must end with 0"));
                }
                let lits = &lits[..lits.len() - 1];
                if lits.len() != 3 {
                    return Err(bad(&format!(
                        "clause has {} literals, expected exactly 3",
                        lits.len()
                    )));
                }
                let mut spec = [(0usize, false); 3];
                for (slot, &l) in spec.iter_mut().zip(lits) {
                    if l == 0 {
                        return Err(bad("literal 0 inside a clause"));
                    }
                    let var = l.unsigned_abs() as usize;
                    if var > nv {
                        return Err(bad(&format!("variable {var} out of range 1..={nv}")));
                    }
                    *slot = (var - 1, l < 0);
                }
                specs.push(spec);
            }
        }
    }
    if num_vars.is_none() {
        return Err(SatIoError::MissingHeader);
    }
    if specs.len() != declared {
        return Err(SatIoError::ClauseCountMismatch {
            declared,
            found: specs.len(),
        });
    }
    Formula::new(num_vars.unwrap(), specs).map_err(SatIoError::Formula)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::inequality_gadget_instance;

    #[test]
    fn json_round_trip_with_layout() {
        let (f, l) = inequality_gadget_instance();
        let text = to_json(&f, Some(&l));
        let (f2, l2) = from_json(&text).unwrap();
        assert_eq!(f, f2);
        assert_eq!(Some(l), l2);
    }

    #[test]
    fn json_round_trip_bare() {
        let (f, _) = inequality_gadget_instance();
        let (f2, l2) = from_json(&to_json(&f, None)).unwrap();
        assert_eq!(f, f2);
        assert!(l2.is_none());
    }

    #[test]
    fn partial_layout_is_rejected() {
        let text = r#"{"num_vars":3,"order":[0,1,2],"clauses":[{"lits":[[0,false],[1,false],[2,false]]}]}"#;
        assert_eq!(from_json(text).unwrap_err(), SatIoError::PartialLayout);
    }

    #[test]
    fn dimacs_cnf_reader() {
        let f = from_dimacs_cnf("c demo\np cnf 4 2\n1 -2 3 0\n2 3 -4 0\n").unwrap();
        assert_eq!(f.num_clauses(), 2);
        assert_eq!(f.num_vars(), 4);
        assert!(f.clauses()[0].lits()[1].negated);

        let err = from_dimacs_cnf("p cnf 3 1\n1 2 0\n").unwrap_err();
        assert_eq!(
            err.to_string(),
            "line 2: clause has 2 literals, expected exactly 3"
        );
    }
}
