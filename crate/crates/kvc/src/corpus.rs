//! Seeded random graph generators for sweeps and property tests.

use rand::Rng;

use crate::graph::Graph;

/// G(n, p) with the given edge probability.
pub fn random_graph(rng: &mut impl Rng, n: usize, edge_prob: f64) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(edge_prob))
        .collect::<Vec<_>>();
    Graph::new(n, edges).expect("generated edges are simple")
}

/// A connected graph: a random recursive tree plus extra random edges.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, extra_edge_prob: f64) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && !edges.contains(&(v, u)) && rng.gen_bool(extra_edge_prob)
            {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn connected_generator_is_connected_and_deterministic() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let g1 = random_connected_graph(&mut rng, 12, 0.3);
        assert!(g1.is_connected());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let g2 = random_connected_graph(&mut rng, 12, 0.3);
        assert_eq!(g1, g2);
    }
}
