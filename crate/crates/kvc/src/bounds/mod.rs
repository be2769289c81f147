//! Bounds sandwiching the VC-dimension.
//!
//! With `ell(G)` the number of leaves in a maximum-leaf spanning tree:
//!
//! - `ell(G) <= VC_con(G) <= ell(G) + 1` (the k = 1 case);
//! - `VC_{k-con}(G) <= ell(G) - k + 1` for k >= 2, tight on `K_{k+1}`;
//! - a Turán-style lower bound: a dense graph contains a large clique, and
//!   a clique on `r + 1` vertices shatters `r - k` of them;
//! - a closed-form lower bound chaining the Turán one through the integer
//!   program that caps `ell(G)` at `n - ceil((n-2)/(max_degree-1))`.
//!
//! All integer arithmetic is exact; the one real-valued bound is reported
//! un-ceiled, mirroring its statement, and is exact in f64 at these
//! magnitudes.

use serde::Serialize;

use crate::graph::Graph;

mod mls;

pub use mls::{max_leaf_spanning_tree, MlsMode, SpanningTreeResult};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("graph is disconnected; bounds apply per component")]
    Disconnected,
    #[error("graph needs at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("degenerate: G is a disjoint union of edges/vertices")]
    DegenerateDegree,
    #[error("k must be at least 2 for the k-connected upper bound, got {0}")]
    KTooSmall(usize),
    #[error("edge count {m} is impossible for a simple graph on {n} vertices")]
    NotSimple { n: usize, m: usize },
}

/// Upper bound on the number of spanning-tree leaves:
/// `n - ceil((n-2)/(max_degree-1))`. The subtracted term is the minimum
/// possible number of internal vertices, from the degree-sum integer
/// program.
pub fn leaf_count_upper_bound(n: usize, max_degree: usize) -> Result<usize, BoundsError> {
    if n < 2 {
        return Err(BoundsError::TooSmall(n));
    }
    if max_degree < 2 {
        return Err(BoundsError::DegenerateDegree);
    }
    Ok(n - (n - 2).div_ceil(max_degree - 1))
}

/// `ell - k + 1`, the k-connected upper bound (k >= 2). May be non-positive;
/// no clamping — the dimension is separately bounded below by zero.
pub fn upper_bound_kcon(ell: usize, k: usize) -> Result<i64, BoundsError> {
    if k < 2 {
        return Err(BoundsError::KTooSmall(k));
    }
    Ok(ell as i64 - k as i64 + 1)
}

/// Turán-style lower bound `ceil(n^2/(n^2 - 2m) - 1) - k`, computed with
/// exact integer arithmetic. Often vacuous (negative) on sparse graphs.
pub fn lower_bound_turan(n: usize, m: usize, k: usize) -> Result<i64, BoundsError> {
    if m > n.saturating_mul(n.saturating_sub(1)) / 2 {
        return Err(BoundsError::NotSimple { n, m });
    }
    // ceil(n^2/(n^2-2m) - 1) = ceil(2m / (n^2 - 2m)); the denominator is
    // positive for every simple graph.
    let d = n * n - 2 * m;
    let r = (2 * m).div_ceil(d);
    Ok(r as i64 - k as i64)
}

/// The closed-form lower bound
/// `ell - k + 1 - (n + 2 - ceil((n-2)/(max_degree-1)) - n^2/(n^2-2m))`,
/// reported as a real number (callers may ceil, the dimension being
/// integral).
pub fn lower_bound_thm5(
    n: usize,
    m: usize,
    max_degree: usize,
    ell: usize,
    k: usize,
) -> Result<f64, BoundsError> {
    if n < 2 {
        return Err(BoundsError::TooSmall(n));
    }
    if max_degree < 2 {
        return Err(BoundsError::DegenerateDegree);
    }
    if m > n * (n - 1) / 2 {
        return Err(BoundsError::NotSimple { n, m });
    }
    let c = (n - 2).div_ceil(max_degree - 1);
    let density = (n * n) as f64 / (n * n - 2 * m) as f64;
    Ok(ell as f64 - k as f64 + 1.0 - ((n + 2 - c) as f64 - density))
}

/// How `ell` in a [`BoundReport`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EllMode {
    Exact,
    Greedy,
}

/// Everything the bound formulas say about one graph and one k.
///
/// In greedy mode `ell_low` is the heuristic leaf count and `ell_high` the
/// degree-program cap; in exact mode they coincide. `upper` is the
/// k-connected upper bound for k >= 2 and the `ell + 1` bound for k = 1,
/// always computed from `ell_high` so it stays valid either way.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub k: usize,
    pub ell_low: usize,
    pub ell_high: usize,
    pub ell_mode: EllMode,
    pub upper: i64,
    pub lower_turan: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_thm5: Option<f64>,
}

impl BoundReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Evaluates every bound for a connected graph. Disconnected input is
/// rejected; apply per component and take the maximum instead.
pub fn bound_report(g: &Graph, k: usize, mode: MlsMode) -> Result<BoundReport, BoundsError> {
    if !g.is_connected() {
        return Err(BoundsError::Disconnected);
    }
    if g.n() < 2 {
        return Err(BoundsError::TooSmall(g.n()));
    }
    let tree = max_leaf_spanning_tree(g, mode)?;
    let max_degree = g.max_degree();
    let (ell_low, ell_high) = if tree.optimal {
        (tree.leaf_count, tree.leaf_count)
    } else {
        let cap = if max_degree >= 2 {
            leaf_count_upper_bound(g.n(), max_degree)?
        } else {
            g.n()
        };
        (tree.leaf_count, cap)
    };
    let upper = if k >= 2 {
        upper_bound_kcon(ell_high, k)?
    } else {
        ell_high as i64 + 1
    };
    let lower_thm5 = if max_degree >= 2 {
        Some(lower_bound_thm5(g.n(), g.m(), max_degree, ell_low, k)?)
    } else {
        None
    };
    Ok(BoundReport {
        n: g.n(),
        m: g.m(),
        max_degree,
        k,
        ell_low,
        ell_high,
        ell_mode: if tree.optimal {
            EllMode::Exact
        } else {
            EllMode::Greedy
        },
        upper,
        lower_turan: lower_bound_turan(g.n(), g.m(), k)?,
        lower_thm5,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leaf_cap_examples() {
        assert_eq!(leaf_count_upper_bound(5, 4).unwrap(), 4);
        assert_eq!(leaf_count_upper_bound(4, 2).unwrap(), 2);
        assert_eq!(
            leaf_count_upper_bound(2, 1).unwrap_err(),
            BoundsError::DegenerateDegree
        );
    }

    #[test]
    fn kcon_upper_examples() {
        assert_eq!(upper_bound_kcon(4, 2).unwrap(), 3);
        assert_eq!(upper_bound_kcon(2, 2).unwrap(), 1);
        for k in 2..=6 {
            assert_eq!(upper_bound_kcon(k, k).unwrap(), 1);
        }
        assert_eq!(upper_bound_kcon(3, 1).unwrap_err(), BoundsError::KTooSmall(1));
    }

    #[test]
    fn turan_examples() {
        // K_5: ceil(2*10/5) - 2 = 2.
        assert_eq!(lower_bound_turan(5, 10, 2).unwrap(), 2);
        // C_5: ceil(10/15) - 2 = 1 - 2 (vacuous).
        assert_eq!(lower_bound_turan(5, 5, 2).unwrap(), -1);
        // K_4 with k = 3: ceil(12/4) - 3 = 0.
        assert_eq!(lower_bound_turan(4, 6, 3).unwrap(), 0);
        assert!(matches!(
            lower_bound_turan(3, 17, 2),
            Err(BoundsError::NotSimple { .. })
        ));
    }

    #[test]
    fn thm5_examples() {
        // K_5, k = 2: 4 - 2 + 1 - (5 + 2 - 1 - 5) = 2.
        let v = lower_bound_thm5(5, 10, 4, 4, 2).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
        // C_5, k = 2: 1 - (7 - 3 - 5/3) = -4/3.
        let v = lower_bound_thm5(5, 5, 2, 2, 2).unwrap();
        assert!((v + 4.0 / 3.0).abs() < 1e-12);
        assert_eq!(
            lower_bound_thm5(2, 1, 1, 2, 2).unwrap_err(),
            BoundsError::DegenerateDegree
        );
    }

    #[test]
    fn report_on_k5() {
        let report = bound_report(&Graph::complete(5), 2, MlsMode::Exact).unwrap();
        assert_eq!(report.ell_low, 4);
        assert_eq!(report.upper, 3);
        assert_eq!(report.lower_turan, 2);
        assert!((report.lower_thm5.unwrap() - 2.0).abs() < 1e-12);
        assert!(report.to_json().contains("\"ell_mode\":\"exact\""));
    }

    #[test]
    fn report_rejects_disconnected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            bound_report(&g, 2, MlsMode::Exact).unwrap_err(),
            BoundsError::Disconnected
        );
    }
}
