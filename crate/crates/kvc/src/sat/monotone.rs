//! Inconsistent-pair elimination: converting a laid-out 1-in-3 instance
//! into an equisatisfiable monotone one.
//!
//! The inequality gadget `x != y` is the three-clause formula
//! `(x v a v y) ^ (a v b v c) ^ (!b v !c v !d)` over four fresh variables;
//! it is 1-in-3 satisfiable exactly when one of `x`, `y` is true. One
//! elimination step, for a negative literal of `x_i` in an above-clause
//! `C_j` (the below case mirrors):
//!
//! 1. introduce fresh variables `x` and `y`,
//! 2. replace the offending literal in `C_j` by `x`,
//! 3. insert the gadgets `x_i != x` and `x != y`,
//! 4. re-attach same-side clauses that reach `x_i` to the right of `C_j`
//!    to `y` instead (`x_i -> y`, `!x_i -> !y`).
//!
//! With `x = !x_i` and `y = x_i` forced by the gadgets, every rewrite
//! preserves truth values, so each step is equisatisfiable and removes
//! exactly one inconsistent pair. The ten fresh variables go on the line
//! immediately right of `x_i`; the gadget combs take levels 1 and 2, with
//! the old clauses pushed up to make room. Which clauses count as "to the
//! right" is read off the laminar structure: left-enders innermost first,
//! then the spanner, then right-enders outermost first — the attachment
//! order forced by any planar drawing with wide variable rectangles.

use super::layout::{ClauseGeom, InconsistentPair, RectilinearLayout, Side};
use super::{find_inconsistent_pairs, Formula, SatError};

/// The inequality gadget as data: three clauses (with sides and levels) and
/// the canonical left-to-right order of its six variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetFragment {
    pub clauses: [([(usize, bool); 3], Side, u32); 3],
    pub order: [usize; 6],
}

/// The inequality gadget `x != y` over the four fresh variables
/// `[a, b, c, d]`. All six variables must be distinct.
pub fn inequality_gadget(
    x: usize,
    y: usize,
    fresh: [usize; 4],
) -> Result<GadgetFragment, SatError> {
    let [a, b, c, d] = fresh;
    let all = [x, y, a, b, c, d];
    for (i, &v) in all.iter().enumerate() {
        if all[i + 1..].contains(&v) {
            return Err(SatError::GadgetVarCollision);
        }
    }
    Ok(GadgetFragment {
        clauses: [
            ([(x, false), (a, false), (y, false)], Side::Above, 2),
            ([(a, false), (b, false), (c, false)], Side::Above, 1),
            ([(b, true), (c, true), (d, true)], Side::Below, 1),
        ],
        order: [x, a, b, c, d, y],
    })
}

/// Standalone instance of the gadget over variables `x = 0, y = 1,
/// a..d = 2..=5`, with its monotone rectilinear representation.
pub fn inequality_gadget_instance() -> (Formula, RectilinearLayout) {
    let fragment = inequality_gadget(0, 1, [2, 3, 4, 5]).expect("distinct ids");
    let formula = Formula::new(6, fragment.clauses.map(|(lits, _, _)| lits))
        .expect("gadget clauses are well-formed");
    let layout = RectilinearLayout {
        order: fragment.order.to_vec(),
        geom: fragment
            .clauses
            .iter()
            .map(|&(_, side, level)| ClauseGeom { side, level })
            .collect(),
    };
    (formula, layout)
}

/// What one elimination step did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    pub clause: usize,
    pub var: usize,
    pub side: Side,
    /// Fresh variable substituted into the fixed clause (`x`).
    pub new_var_x: usize,
    /// Fresh variable taking over right-side attachments (`y`).
    pub new_var_y: usize,
    /// Clauses re-attached from `var` to `y`.
    pub rerouted: Vec<usize>,
}

/// Laminar attachment order of same-side clauses at one variable position:
/// smaller key = attaches further left on the variable's rectangle.
fn attachment_key(legs: [usize; 3], q: usize, clause: usize) -> (u8, usize, usize) {
    let (lo, hi) = (legs[0], legs[2]);
    if hi == q {
        (0, usize::MAX - lo, clause) // left-enders: innermost first
    } else if lo == q {
        (2, usize::MAX - hi, clause) // right-enders: outermost first
    } else {
        (1, 0, clause) // the spanner (unique in a valid layout)
    }
}

/// Removes one inconsistent pair. Returns the rewritten instance and a step
/// record; the pair count strictly decreases and satisfiability in the
/// 1-in-3 sense is preserved.
pub fn remove_inconsistent_pair(
    f: &Formula,
    layout: &RectilinearLayout,
    pair: &InconsistentPair,
) -> Result<(Formula, RectilinearLayout, StepRecord), SatError> {
    let pairs = find_inconsistent_pairs(f, layout)?;
    if !pairs.contains(pair) {
        return Err(SatError::PairNotInconsistent {
            var: pair.var,
            clause: pair.clause,
        });
    }
    let side = layout.geom[pair.clause].side;
    let pos = layout.positions();
    let q = pos[pair.var];

    // Ten fresh variables, in line order a1 b1 c1 d1 x a2 b2 c2 d2 y.
    let base = f.num_vars();
    let [a1, b1, c1, d1, vx, a2, b2, c2, d2, vy] =
        [0, 1, 2, 3, 4, 5, 6, 7, 8, 9].map(|i| base + i);

    // Same-side clauses attaching q, in laminar attachment order.
    let legs_of = |ci: usize| -> [usize; 3] {
        let mut l: Vec<usize> = f.clauses()[ci].lits().iter().map(|lit| pos[lit.var]).collect();
        l.sort_unstable();
        [l[0], l[1], l[2]]
    };
    let mut attached: Vec<usize> = (0..f.num_clauses())
        .filter(|&ci| layout.geom[ci].side == side && f.clauses()[ci].contains_var(pair.var))
        .collect();
    attached.sort_by_key(|&ci| attachment_key(legs_of(ci), q, ci));
    let at = attached
        .iter()
        .position(|&ci| ci == pair.clause)
        .expect("the fixed clause attaches its own variable");
    let rerouted: Vec<usize> = attached[at + 1..].to_vec();

    // Rewrite clauses.
    let mut clauses: Vec<[(usize, bool); 3]> = f
        .clauses()
        .iter()
        .map(|c| c.lits().map(|l| (l.var, l.negated)))
        .collect();
    for lit in clauses[pair.clause].iter_mut() {
        if lit.0 == pair.var {
            // Above-pairs fix a negative literal with positive x; below-pairs
            // a positive literal with negative x. Either way x = !x_i.
            *lit = (vx, side == Side::Below);
        }
    }
    for &ci in &rerouted {
        for lit in clauses[ci].iter_mut() {
            if lit.0 == pair.var {
                lit.0 = vy; // y = x_i, polarity unchanged
            }
        }
    }
    let g1 = inequality_gadget(pair.var, vx, [a1, b1, c1, d1])?;
    let g2 = inequality_gadget(vx, vy, [a2, b2, c2, d2])?;
    let mut geom: Vec<ClauseGeom> = layout
        .geom
        .iter()
        .map(|g| ClauseGeom {
            side: g.side,
            // Two fresh above levels and one fresh below level.
            level: g.level + if g.side == Side::Above { 2 } else { 1 },
        })
        .collect();
    for gadget in [&g1, &g2] {
        for &(lits, gside, glevel) in &gadget.clauses {
            clauses.push(lits);
            geom.push(ClauseGeom {
                side: gside,
                level: glevel,
            });
        }
    }

    // Splice the fresh variables into the order right after x_i.
    let mut order = Vec::with_capacity(layout.order.len() + 10);
    for &v in &layout.order {
        order.push(v);
        if v == pair.var {
            order.extend([a1, b1, c1, d1, vx, a2, b2, c2, d2, vy]);
        }
    }

    let formula = Formula::new(base + 10, clauses)?;
    let layout = RectilinearLayout { order, geom };
    let record = StepRecord {
        clause: pair.clause,
        var: pair.var,
        side,
        new_var_x: vx,
        new_var_y: vy,
        rerouted,
    };
    Ok((formula, layout, record))
}

/// Result of the full conversion.
#[derive(Debug, Clone)]
pub struct MonotoneResult {
    pub formula: Formula,
    pub layout: RectilinearLayout,
    pub steps: Vec<StepRecord>,
}

/// Eliminates inconsistent pairs until the representation is monotone.
/// Deterministic: always fixes the first pair in the canonical order
/// (above side, then leftmost clause, then leftmost literal). Terminates in
/// at most as many steps as there were pairs initially (at most 3m).
pub fn make_monotone(f: &Formula, layout: &RectilinearLayout) -> Result<MonotoneResult, SatError> {
    let mut formula = f.clone();
    let mut layout = layout.clone();
    let mut steps = Vec::new();
    loop {
        let pairs = find_inconsistent_pairs(&formula, &layout)?;
        let Some(first) = pairs.first() else {
            break;
        };
        let before = pairs.len();
        let (nf, nl, record) = remove_inconsistent_pair(&formula, &layout, first)?;
        debug_assert_eq!(nf.num_vars(), formula.num_vars() + 10);
        debug_assert_eq!(nf.num_clauses(), formula.num_clauses() + 6);
        debug_assert!(
            find_inconsistent_pairs(&nf, &nl)?.len() < before,
            "pair count must strictly decrease"
        );
        formula = nf;
        layout = nl;
        steps.push(record);
    }
    Ok(MonotoneResult {
        formula,
        layout,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::{eval_1in3, is_monotone, solve_1in3_with_limit, validate_layout};

    /// Plain 2^n enumeration, the oracle for the pruned solver.
    fn satisfiable_by_enumeration(f: &Formula) -> bool {
        assert!(f.num_vars() <= 24);
        (0u64..1 << f.num_vars()).any(|bits| {
            let a: Vec<bool> = (0..f.num_vars()).map(|i| bits >> i & 1 == 1).collect();
            eval_1in3(f, &a).unwrap()
        })
    }

    #[test]
    fn gadget_instance_is_valid_and_monotone_laid_out() {
        let (f, l) = inequality_gadget_instance();
        assert!(validate_layout(&f, &l).is_empty());
        assert!(is_monotone(&f));
        assert!(find_inconsistent_pairs(&f, &l).unwrap().is_empty());
    }

    #[test]
    fn gadget_forces_inequality() {
        // Lemma-level truth table: the gadget is satisfiable exactly when
        // one of x, y is true, over all 64 assignments.
        let (f, _) = inequality_gadget_instance();
        let mut seen = std::collections::BTreeSet::new();
        for bits in 0u8..64 {
            let a: Vec<bool> = (0..6).map(|i| bits >> i & 1 == 1).collect();
            if eval_1in3(&f, &a).unwrap() {
                seen.insert((a[0], a[1]));
            }
        }
        let expect: std::collections::BTreeSet<(bool, bool)> =
            [(true, false), (false, true)].into_iter().collect();
        assert_eq!(seen, expect);
        // The construction's explicit witness: a=F, b=T, c=F, d=T.
        assert!(eval_1in3(&f, &[true, false, false, true, false, true]).unwrap());
    }

    #[test]
    fn gadget_rejects_colliding_variables() {
        assert_eq!(
            inequality_gadget(0, 0, [1, 2, 3, 4]).unwrap_err(),
            SatError::GadgetVarCollision
        );
    }

    #[test]
    fn single_step_example() {
        // (x1 v !x2 v x3) above: one step yields C = (x1 v x v x3) plus two
        // gadgets; 10 new variables, 7 clauses, zero pairs left.
        let f = Formula::new(3, [[(0, false), (1, true), (2, false)]]).unwrap();
        let l = RectilinearLayout {
            order: vec![0, 1, 2],
            geom: vec![ClauseGeom {
                side: Side::Above,
                level: 1,
            }],
        };
        let pairs = find_inconsistent_pairs(&f, &l).unwrap();
        assert_eq!(pairs.len(), 1);
        let (nf, nl, record) = remove_inconsistent_pair(&f, &l, &pairs[0]).unwrap();
        assert_eq!(nf.num_vars(), 13);
        assert_eq!(nf.num_clauses(), 7);
        assert_eq!(record.new_var_x, 7);
        assert_eq!(
            nf.clauses()[0].lits().map(|l| (l.var, l.negated)),
            [(0, false), (7, false), (2, false)]
        );
        assert!(validate_layout(&nf, &nl).is_empty());
        assert!(find_inconsistent_pairs(&nf, &nl).unwrap().is_empty());
        assert!(is_monotone(&nf));
        // Equisatisfiable, both by enumeration and by the solver.
        assert!(satisfiable_by_enumeration(&f));
        assert_eq!(
            satisfiable_by_enumeration(&f),
            satisfiable_by_enumeration(&nf)
        );
        assert!(solve_1in3_with_limit(&nf, 16).unwrap().is_some());
    }

    #[test]
    fn applying_to_a_monotone_instance_fails() {
        let f = Formula::new(3, [[(0, false), (1, false), (2, false)]]).unwrap();
        let l = RectilinearLayout {
            order: vec![0, 1, 2],
            geom: vec![ClauseGeom {
                side: Side::Above,
                level: 1,
            }],
        };
        let bogus = InconsistentPair {
            clause: 0,
            lit: 0,
            var: 0,
        };
        assert_eq!(
            remove_inconsistent_pair(&f, &l, &bogus).unwrap_err(),
            SatError::PairNotInconsistent { var: 0, clause: 0 }
        );
    }

    #[test]
    fn make_monotone_is_identity_on_monotone_input() {
        let (f, l) = inequality_gadget_instance();
        let result = make_monotone(&f, &l).unwrap();
        assert!(result.steps.is_empty());
        assert_eq!(result.formula, f);
    }

    #[test]
    fn make_monotone_with_shared_variable_attachments() {
        // Two nested above-clauses sharing the attachments at x1 and x3,
        // each with one inconsistent literal. Exercises the laminar
        // attachment ordering on both ends.
        let f = Formula::new(
            4,
            [
                [(1, true), (2, false), (3, false)],
                [(0, false), (1, false), (3, true)],
            ],
        )
        .unwrap();
        let l = RectilinearLayout {
            order: vec![0, 1, 2, 3],
            geom: vec![
                ClauseGeom {
                    side: Side::Above,
                    level: 1,
                },
                ClauseGeom {
                    side: Side::Above,
                    level: 2,
                },
            ],
        };
        assert!(validate_layout(&f, &l).is_empty());
        let result = make_monotone(&f, &l).unwrap();
        assert!(is_monotone(&result.formula));
        assert!(validate_layout(&result.formula, &result.layout).is_empty());
        assert_eq!(result.steps.len(), 2);
        // 3m bound on steps.
        assert!(result.steps.len() <= 3 * f.num_clauses());
        assert!(satisfiable_by_enumeration(&f));
        assert!(
            solve_1in3_with_limit(&result.formula, result.formula.num_vars())
                .unwrap()
                .is_some()
        );
    }
}
