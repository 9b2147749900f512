//! Generators for labeled graphs: exhaustive enumeration at desk scale and
//! seeded random sampling for larger sweeps.

use rand::Rng;

use crate::graph::{is_connected, Graph};

/// All labeled simple graphs on `n` vertices, in edge-bitmask order.
/// `n` is capped at 8 by the caller's good sense; the iterator itself is lazy.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let count: u64 = 1 << pairs.len();
    (0..count).map(move |mask| {
        let mut g = Graph::empty(n);
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    })
}

/// All labeled connected graphs on `n` vertices.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_graphs(n).filter(is_connected)
}

/// Random graph where each pair is an edge with probability `p`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random connected graph: a random spanning tree plus density-`p` extra
/// edges.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        g.add_edge(parent, v).unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn graph_counts() {
        assert_eq!(all_graphs(3).count(), 8);
        assert_eq!(all_graphs(4).count(), 64);
        // Labeled connected graphs on 4 vertices: a known count.
        assert_eq!(connected_graphs(4).count(), 38);
    }

    #[test]
    fn random_connected_is_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_connected_graph(8, 0.2, &mut rng);
            assert!(is_connected(&g));
        }
    }
}
