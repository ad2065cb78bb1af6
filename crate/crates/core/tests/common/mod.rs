#![allow(dead_code)]

use multitour::rng::SplitMix64;
use multitour::DirectedMultigraph;
use num_bigint::BigUint;

pub fn uints(values: &[u64]) -> Vec<BigUint> {
    values.iter().map(|&v| BigUint::from(v)).collect()
}

pub fn g2() -> DirectedMultigraph {
    DirectedMultigraph::build(&["a", "b"], &[("a", "b"), ("b", "a"), ("b", "a")]).unwrap()
}

pub fn c3() -> DirectedMultigraph {
    DirectedMultigraph::build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap()
}

/// Bidirected triangle.
pub fn t3() -> DirectedMultigraph {
    DirectedMultigraph::build(
        &["a", "b", "c"],
        &[
            ("a", "b"),
            ("b", "a"),
            ("b", "c"),
            ("c", "b"),
            ("a", "c"),
            ("c", "a"),
        ],
    )
    .unwrap()
}

pub fn loop_graph() -> DirectedMultigraph {
    DirectedMultigraph::build(&["a"], &[("a", "a")]).unwrap()
}

/// Every strongly connected multigraph with `1..=max_vertices` vertices and
/// `1..=max_edges` edges, loops included, with edges listed in sorted order.
/// Relabellings of the same graph are all included.
pub fn exhaustive_family(max_vertices: usize, max_edges: usize) -> Vec<DirectedMultigraph> {
    let mut family = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
        for m in n.max(1)..=max_edges {
            // Nondecreasing index sequences enumerate multisets of pairs.
            let mut choice = vec![0usize; m];
            loop {
                let edges: Vec<(usize, usize)> = choice.iter().map(|&i| pairs[i]).collect();
                let g = DirectedMultigraph::from_index_edges(n, &edges).unwrap();
                if g.is_strongly_connected() {
                    family.push(g);
                }
                let Some(slot) = (0..m).rev().find(|&s| choice[s] + 1 < pairs.len()) else {
                    break;
                };
                let value = choice[slot] + 1;
                choice[slot..].fill(value);
            }
        }
    }
    family
}

/// A random strongly connected multigraph with at most `max_vertices`
/// vertices and at most `max_edges` edges, by rejection sampling.
pub fn random_strongly_connected(
    rng: &mut SplitMix64,
    max_vertices: usize,
    max_edges: usize,
) -> DirectedMultigraph {
    loop {
        let n = 1 + rng.below(max_vertices);
        let m = n + rng.below(max_edges - n + 1);
        let edges: Vec<(usize, usize)> = (0..m).map(|_| (rng.below(n), rng.below(n))).collect();
        let g = DirectedMultigraph::from_index_edges(n, &edges).unwrap();
        if g.is_strongly_connected() {
            return g;
        }
    }
}

pub fn random_family(
    seed: u64,
    count: usize,
    max_vertices: usize,
    max_edges: usize,
) -> Vec<DirectedMultigraph> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| random_strongly_connected(&mut rng, max_vertices, max_edges))
        .collect()
}

/// A random Eulerian multigraph: a union of random closed walks that covers
/// every vertex, so it is strongly connected.
pub fn random_eulerian(rng: &mut SplitMix64, max_vertices: usize) -> DirectedMultigraph {
    loop {
        let n = 1 + rng.below(max_vertices);
        let walks = 1 + rng.below(4);
        let mut edges = Vec::new();
        for _ in 0..walks {
            let len = 1 + rng.below(4);
            let stops: Vec<usize> = (0..len).map(|_| rng.below(n)).collect();
            for i in 0..len {
                edges.push((stops[i], stops[(i + 1) % len]));
            }
        }
        let g = DirectedMultigraph::from_index_edges(n, &edges).unwrap();
        if g.is_strongly_connected() {
            assert!(g.is_eulerian());
            return g;
        }
    }
}

/// Sum of `pi_v * d_v`.
pub fn tour_length(g: &DirectedMultigraph, pi: &[BigUint]) -> BigUint {
    (0..g.vertex_count())
        .map(|v| &pi[v] * g.out_degree(v).unwrap())
        .sum()
}

/// All vectors in `1..=max` of length `n`, in lexicographic order.
pub fn positive_vectors(n: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=max).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}
