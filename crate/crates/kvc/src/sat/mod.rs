//! 1-in-3 satisfiability and rectilinear instance machinery.
//!
//! Clauses have exactly three literals over distinct variables; a formula is
//! 1-in-3 satisfied when every clause has exactly one true literal.
//! Instances carry rectilinear representations (variables on a line, clause
//! combs above or below) that the monotone conversion rewrites step by step.

use serde::{Deserialize, Serialize};

pub mod gen;
pub mod io;
mod layout;
mod monotone;

pub use layout::{
    find_inconsistent_pairs, validate_layout, ClauseGeom, InconsistentPair, LayoutViolation,
    RectilinearLayout, Side,
};
pub use monotone::{
    inequality_gadget, inequality_gadget_instance, make_monotone, remove_inconsistent_pair,
    GadgetFragment, MonotoneResult, StepRecord,
};

/// Cap on variable count for [`solve_1in3`]; the solver is exact and
/// backtracking, so raise it deliberately via [`solve_1in3_with_limit`].
pub const SOLVE_VAR_LIMIT: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SatError {
    #[error("clause {clause} repeats variable {var}")]
    RepeatedVariable { clause: usize, var: usize },
    #[error("clause {clause} uses variable {var}, but the formula has {num_vars}")]
    VariableOutOfRange {
        clause: usize,
        var: usize,
        num_vars: usize,
    },
    #[error("assignment has {got} values, formula has {expected} variables")]
    AssignmentSizeMismatch { got: usize, expected: usize },
    #[error("formula has {0} variables, over the solver limit of {1}")]
    SolverScale(usize, usize),
    #[error("layout is invalid: {0} violation(s), first: {1}")]
    InvalidLayout(usize, String),
    #[error("pair (variable {var}, clause {clause}) is not inconsistent")]
    PairNotInconsistent { var: usize, clause: usize },
    #[error("gadget variables must be distinct and fresh")]
    GadgetVarCollision,
}

/// A literal: variable id plus negation flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lit {
    pub var: usize,
    pub negated: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Lit {
        Lit {
            var,
            negated: false,
        }
    }

    pub fn neg(var: usize) -> Lit {
        Lit { var, negated: true }
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        assignment[self.var] != self.negated
    }
}

/// Exactly three literals over three distinct variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Clause(pub [Lit; 3]);

impl Clause {
    pub fn lits(&self) -> &[Lit; 3] {
        &self.0
    }

    pub fn contains_var(&self, var: usize) -> bool {
        self.0.iter().any(|l| l.var == var)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| !l.negated)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|l| l.negated)
    }
}

/// A 3-CNF formula read in the 1-in-3 sense.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    num_vars: usize,
    clauses: Vec<Clause>,
}

pub type Assignment = Vec<bool>;

impl Formula {
    /// Clauses given as `(var, negated)` triples. Repeated variables within
    /// a clause are rejected: the paper's constructions never produce them
    /// and their rectilinear legs would be ambiguous.
    pub fn new(
        num_vars: usize,
        clauses: impl IntoIterator<Item = [(usize, bool); 3]>,
    ) -> Result<Self, SatError> {
        let mut out = Vec::new();
        for (ci, spec) in clauses.into_iter().enumerate() {
            for (i, &(var, _)) in spec.iter().enumerate() {
                if var >= num_vars {
                    return Err(SatError::VariableOutOfRange {
                        clause: ci,
                        var,
                        num_vars,
                    });
                }
                if spec[i + 1..].iter().any(|&(w, _)| w == var) {
                    return Err(SatError::RepeatedVariable { clause: ci, var });
                }
            }
            out.push(Clause(spec.map(|(var, negated)| Lit { var, negated })));
        }
        Ok(Formula {
            num_vars,
            clauses: out,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }
}

/// True iff every clause has exactly one true literal.
pub fn eval_1in3(f: &Formula, assignment: &[bool]) -> Result<bool, SatError> {
    if assignment.len() != f.num_vars {
        return Err(SatError::AssignmentSizeMismatch {
            got: assignment.len(),
            expected: f.num_vars,
        });
    }
    Ok(f.clauses
        .iter()
        .all(|c| c.0.iter().filter(|l| l.eval(assignment)).count() == 1))
}

/// Lexicographically first 1-in-3 satisfying assignment (false < true,
/// scanning variables in id order), or `None`. Exact backtracking with
/// per-clause pruning; guarded by [`SOLVE_VAR_LIMIT`].
pub fn solve_1in3(f: &Formula) -> Result<Option<Assignment>, SatError> {
    solve_1in3_with_limit(f, SOLVE_VAR_LIMIT)
}

/// See [`solve_1in3`].
pub fn solve_1in3_with_limit(f: &Formula, limit: usize) -> Result<Option<Assignment>, SatError> {
    if f.num_vars > limit {
        return Err(SatError::SolverScale(f.num_vars, limit));
    }
    let mut assignment = vec![false; f.num_vars];
    if assign(f, 0, &mut assignment) {
        Ok(Some(assignment))
    } else {
        Ok(None)
    }
}

/// Assign variables `next..` trying false before true; prune when a clause
/// already has two true literals or can no longer reach one.
fn assign(f: &Formula, next: usize, assignment: &mut [bool]) -> bool {
    if !feasible(f, next, assignment) {
        return false;
    }
    if next == assignment.len() {
        return true;
    }
    for value in [false, true] {
        assignment[next] = value;
        if assign(f, next + 1, assignment) {
            return true;
        }
    }
    assignment[next] = false;
    false
}

fn feasible(f: &Formula, assigned_below: usize, assignment: &[bool]) -> bool {
    for clause in &f.clauses {
        let mut trues = 0;
        let mut open = 0;
        for lit in clause.lits() {
            if lit.var < assigned_below {
                trues += usize::from(lit.eval(assignment));
            } else {
                open += 1;
            }
        }
        if trues > 1 || trues + open < 1 {
            return false;
        }
    }
    true
}

/// True iff every clause is all-positive or all-negative.
pub fn is_monotone(f: &Formula) -> bool {
    f.clauses
        .iter()
        .all(|c| c.is_positive() || c.is_negative())
}
