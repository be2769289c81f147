//! Rectilinear representations.
//!
//! Variables sit on a horizontal line (a permutation gives their order);
//! each clause is a horizontal bar at an integer level above or below the
//! line with vertical legs down to its three variables. Validity is purely
//! combinatorial: on each side the leg intervals of two clauses must be
//! disjoint, touch at a single shared variable, or nest — a nested inner
//! clause strictly closer to the line — and no clause may drop a leg
//! strictly inside the span of a clause nested below it. Variables are
//! drawn as wide rectangles, which is why a shared endpoint never forces a
//! crossing.

use serde::{Deserialize, Serialize};

use super::{Formula, SatError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Above,
    Below,
}

/// Placement of one clause: which side of the line and how far from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseGeom {
    pub side: Side,
    pub level: u32,
}

/// Variable order plus one geometry record per clause. Legs are implicit:
/// a clause's leg for a literal sits at its variable's position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectilinearLayout {
    pub order: Vec<usize>,
    pub geom: Vec<ClauseGeom>,
}

impl RectilinearLayout {
    /// Position of each variable on the line (inverse of `order`).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.order.len()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LayoutViolation {
    /// `order` is not a permutation of the variables.
    NotPermutation,
    /// Geometry record count differs from the clause count.
    GeomCountMismatch { clauses: usize, geoms: usize },
    ZeroLevel { clause: usize },
    /// Same-side leg intervals interleave (or coincide): edges must cross.
    Crossing { first: usize, second: usize },
    /// Nested clauses with the inner one not strictly closer to the line.
    LevelOrder { inner: usize, outer: usize },
    /// An outer clause drops a leg strictly inside a nested clause's span.
    LegThroughBar { outer: usize, inner: usize, position: usize },
}

impl std::fmt::Display for LayoutViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LayoutViolation::NotPermutation => write!(f, "order is not a permutation"),
            LayoutViolation::GeomCountMismatch { clauses, geoms } => {
                write!(f, "{clauses} clauses but {geoms} geometry records")
            }
            LayoutViolation::ZeroLevel { clause } => {
                write!(f, "clause {clause} has level 0")
            }
            LayoutViolation::Crossing { first, second } => {
                write!(f, "clauses {first} and {second} cross")
            }
            LayoutViolation::LevelOrder { inner, outer } => {
                write!(
                    f,
                    "clause {inner} is nested inside {outer} but not at a smaller level"
                )
            }
            LayoutViolation::LegThroughBar {
                outer,
                inner,
                position,
            } => write!(
                f,
                "clause {outer} drops a leg at position {position}, inside nested clause {inner}"
            ),
        }
    }
}

/// Checks the layout against the formula; an empty list means valid.
pub fn validate_layout(f: &Formula, layout: &RectilinearLayout) -> Vec<LayoutViolation> {
    let mut out = Vec::new();
    let n = f.num_vars();
    if layout.order.len() != n || {
        let mut sorted = layout.order.clone();
        sorted.sort_unstable();
        sorted != (0..n).collect::<Vec<_>>()
    } {
        out.push(LayoutViolation::NotPermutation);
        return out;
    }
    if layout.geom.len() != f.num_clauses() {
        out.push(LayoutViolation::GeomCountMismatch {
            clauses: f.num_clauses(),
            geoms: layout.geom.len(),
        });
        return out;
    }
    for (ci, geom) in layout.geom.iter().enumerate() {
        if geom.level == 0 {
            out.push(LayoutViolation::ZeroLevel { clause: ci });
        }
    }
    let pos = layout.positions();
    let legs: Vec<Vec<usize>> = f
        .clauses()
        .iter()
        .map(|c| {
            let mut l: Vec<usize> = c.lits().iter().map(|lit| pos[lit.var]).collect();
            l.sort_unstable();
            l
        })
        .collect();
    for i in 0..f.num_clauses() {
        for j in i + 1..f.num_clauses() {
            if layout.geom[i].side != layout.geom[j].side {
                continue;
            }
            let (li, lj) = (&legs[i], &legs[j]);
            let (lo_i, hi_i) = (li[0], li[2]);
            let (lo_j, hi_j) = (lj[0], lj[2]);
            let lo = lo_i.max(lo_j);
            let hi = hi_i.min(hi_j);
            if lo > hi {
                continue; // disjoint
            }
            if lo == hi {
                continue; // touching at one shared variable
            }
            let (inner, outer) = if lo_i >= lo_j && hi_i <= hi_j && (lo_i, hi_i) != (lo_j, hi_j) {
                (i, j)
            } else if lo_j >= lo_i && hi_j <= hi_i && (lo_i, hi_i) != (lo_j, hi_j) {
                (j, i)
            } else {
                out.push(LayoutViolation::Crossing { first: i, second: j });
                continue;
            };
            if layout.geom[inner].level >= layout.geom[outer].level {
                out.push(LayoutViolation::LevelOrder { inner, outer });
            }
            let (ilo, ihi) = (legs[inner][0], legs[inner][2]);
            for &p in &legs[outer] {
                if ilo < p && p < ihi {
                    out.push(LayoutViolation::LegThroughBar {
                        outer,
                        inner,
                        position: p,
                    });
                }
            }
        }
    }
    out
}

/// A literal whose sign disagrees with its clause's side: a negative literal
/// above the line or a positive one below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InconsistentPair {
    pub clause: usize,
    /// Index of the literal within the clause.
    pub lit: usize,
    pub var: usize,
}

/// All inconsistent literal-clause pairs, deterministically ordered: above
/// side first, then leftmost clause, then leftmost literal. An empty answer
/// on a valid layout means the representation is monotone.
pub fn find_inconsistent_pairs(
    f: &Formula,
    layout: &RectilinearLayout,
) -> Result<Vec<InconsistentPair>, SatError> {
    let violations = validate_layout(f, layout);
    if !violations.is_empty() {
        return Err(SatError::InvalidLayout(
            violations.len(),
            violations[0].to_string(),
        ));
    }
    let pos = layout.positions();
    let mut pairs: Vec<(usize, usize, InconsistentPair)> = Vec::new();
    for (ci, clause) in f.clauses().iter().enumerate() {
        let side = layout.geom[ci].side;
        let clause_lo = clause.lits().iter().map(|l| pos[l.var]).min().unwrap();
        for (li, lit) in clause.lits().iter().enumerate() {
            let inconsistent = match side {
                Side::Above => lit.negated,
                Side::Below => !lit.negated,
            };
            if inconsistent {
                pairs.push((
                    clause_lo,
                    pos[lit.var],
                    InconsistentPair {
                        clause: ci,
                        lit: li,
                        var: lit.var,
                    },
                ));
            }
        }
    }
    pairs.sort_by_key(|&(clause_lo, lit_pos, p)| {
        (
            layout.geom[p.clause].side != Side::Above,
            clause_lo,
            p.clause,
            lit_pos,
        )
    });
    Ok(pairs.into_iter().map(|(_, _, p)| p).collect())
}
