//! Helpers shared by the property tests. Everything here recomputes from
//! the edge list so the library's own metric code is not trusted.

#![allow(dead_code)]

use std::collections::VecDeque;

use proptest::prelude::*;
use radcap::Graph;

/// BFS distances from every vertex; `None` for unreachable pairs.
pub fn bfs_all(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.n();
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in g.neighbors(u) {
                    if d[w].is_none() {
                        d[w] = Some(d[u].unwrap() + 1);
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

pub fn components(g: &Graph) -> usize {
    let d = bfs_all(g);
    (0..g.n())
        .filter(|&v| (0..v).all(|u| d[v][u].is_none()))
        .count()
}

/// Arbitrary simple graph on up to `max_n` vertices.
pub fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Connected graph on `lo..=hi` vertices: a random tree plus random chords.
pub fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        let extra = proptest::collection::vec((0..n, 0..n), 0..=n);
        (parents, extra).prop_map(move |(parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .into_iter()
                .enumerate()
                .map(|(i, p)| (p, i + 1))
                .collect();
            edges.extend(extra.into_iter().filter(|(a, b)| a != b));
            Graph::new(n, edges).unwrap()
        })
    })
}

pub fn edge_set(g: &Graph) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = g.edges().map(|(a, b)| (a.min(b), a.max(b))).collect();
    e.sort_unstable();
    e
}
