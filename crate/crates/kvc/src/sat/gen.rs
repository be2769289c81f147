//! Seeded generator of random laid-out 1-in-3 instances.

use rand::seq::SliceRandom;
use rand::Rng;

use super::layout::{ClauseGeom, RectilinearLayout, Side};
use super::{validate_layout, Formula};

/// A random formula with a valid rectilinear representation, found by
/// rejection sampling. `max_vars >= 3`; instances stay small, so a valid
/// draw always turns up quickly.
pub fn random_laid_out_instance(
    rng: &mut impl Rng,
    max_vars: usize,
    max_clauses: usize,
) -> (Formula, RectilinearLayout) {
    assert!(max_vars >= 3 && max_clauses >= 1);
    loop {
        let n = rng.gen_range(3..=max_vars);
        let m = rng.gen_range(1..=max_clauses);
        let mut vars: Vec<usize> = (0..n).collect();
        let clauses: Vec<[(usize, bool); 3]> = (0..m)
            .map(|_| {
                vars.shuffle(rng);
                [0, 1, 2].map(|i| (vars[i], rng.gen_bool(0.5)))
            })
            .collect();
        let Ok(formula) = Formula::new(n, clauses) else {
            continue;
        };
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let geom: Vec<ClauseGeom> = (0..m)
            .map(|_| ClauseGeom {
                side: if rng.gen_bool(0.5) {
                    Side::Above
                } else {
                    Side::Below
                },
                level: rng.gen_range(1..=3),
            })
            .collect();
        let layout = RectilinearLayout { order, geom };
        if validate_layout(&formula, &layout).is_empty() {
            return (formula, layout);
        }
    }
}
