//! Immutable simple undirected graphs and their metric invariants.
//!
//! Vertices are dense indices `0..n`. Any structured coordinates a family
//! generator wants to expose (subsets, words, tuples) are carried as
//! display labels only; every algorithm works on indices.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

/// Fixed-width bitset used for adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn new(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_subset(&self, other: &BitRow) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set: Vec<usize> = (0..self.words.len() * 64)
            .filter(|&i| self.contains(i))
            .collect();
        f.debug_set().entries(set).finish()
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<BitRow>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse into one edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![BitRow::new(n); n];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::InvalidVertex { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::InvalidVertex { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        let adj: Vec<Vec<usize>> = rows
            .iter()
            .map(|row| (0..n).filter(|&j| row.contains(j)).collect())
            .collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph {
            adj,
            rows,
            edge_count,
            labels: None,
        })
    }

    /// Attaches display labels. They must be one per vertex and pairwise distinct.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::InvalidParam(format!(
                "expected {} labels, got {}",
                self.n(),
                labels.len()
            )));
        }
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::InvalidParam(format!(
                "duplicate vertex label {:?}",
                w[0]
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn row(&self, v: usize) -> &BitRow {
        &self.rows[v]
    }

    /// `N[u] ⊆ N[v]`.
    pub fn closed_nbhd_subset(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        if !self.has_edge(u, v) {
            return false;
        }
        // u ∈ N[v] holds; check N(u) \ {v} ⊆ N(v).
        self.adj[u].iter().all(|&x| x == v || self.has_edge(v, x))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Subgraph induced by `vertices` (in the given order); vertex `i` of the
    /// result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n() {
                return Err(GraphError::InvalidVertex {
                    vertex: v,
                    n: self.n(),
                });
            }
            if index[v] != usize::MAX {
                return Err(GraphError::InvalidParam(format!("vertex {v} listed twice")));
            }
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        let sub = Graph::new(vertices.len(), edges)?;
        match &self.labels {
            Some(l) => sub.with_labels(vertices.iter().map(|&v| l[v].clone()).collect()),
            None => Ok(sub),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        bfs(self, 0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n()];
        let mut count = 0;
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    /// Length of a shortest cycle, `0` for forests.
    pub fn girth(&self) -> u32 {
        let n = self.n();
        let mut best = u32::MAX;
        let mut dist = vec![UNREACHABLE; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.fill(UNREACHABLE);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(x) = queue.pop_front() {
                // Any cycle found deeper cannot beat the current best.
                if 2 * dist[x] >= best {
                    break;
                }
                for &y in &self.adj[x] {
                    if dist[y] == UNREACHABLE {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        if best == u32::MAX {
            0
        } else {
            best
        }
    }

    /// Shorthand for [`DistanceMatrix::new`].
    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::new(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Storage sentinel for "no path"; never exposed as a number.
pub(crate) const UNREACHABLE: u32 = u32::MAX;

fn bfs(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == UNREACHABLE {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// All-pairs hop distances.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    ecc: Option<Vec<u32>>,
}

impl DistanceMatrix {
    /// One BFS per source vertex.
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut d = Vec::with_capacity(n * n);
        for s in 0..n {
            d.extend(bfs(g, s));
        }
        let connected = d.iter().all(|&x| x != UNREACHABLE);
        let ecc = connected.then(|| {
            (0..n)
                .map(|u| d[u * n..(u + 1) * n].iter().copied().max().unwrap_or(0))
                .collect()
        });
        DistanceMatrix { n, d, ecc }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `None` when `u` and `v` lie in different components.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let x = self.d[u * self.n + v];
        (x != UNREACHABLE).then_some(x)
    }

    /// Raw distance on a matrix known to be connected.
    #[inline]
    pub(crate) fn hops(&self, u: usize, v: usize) -> u32 {
        let x = self.d[u * self.n + v];
        debug_assert!(x != UNREACHABLE);
        x
    }

    pub fn is_connected(&self) -> bool {
        self.ecc.is_some()
    }

    /// Eccentricities, only defined for connected graphs.
    pub fn eccentricities(&self) -> Option<&[u32]> {
        self.ecc.as_deref()
    }

    pub fn eccentricity(&self, v: usize) -> Option<u32> {
        self.ecc.as_ref().map(|e| e[v])
    }

    /// `(radius, diameter)`.
    pub fn radius_diameter(&self) -> Result<(u32, u32), GraphError> {
        let ecc = self.ecc.as_ref().ok_or(GraphError::NotConnected)?;
        let rad = ecc.iter().copied().min().unwrap_or(0);
        let diam = ecc.iter().copied().max().unwrap_or(0);
        Ok((rad, diam))
    }

    pub fn radius(&self) -> Result<u32, GraphError> {
        self.radius_diameter().map(|(r, _)| r)
    }

    pub fn diameter(&self) -> Result<u32, GraphError> {
        self.radius_diameter().map(|(_, d)| d)
    }

    /// Distances from `u` to every vertex, as a raw row (sentinel included).
    pub(crate) fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for u in 0..self.n {
            let row: Vec<Option<u32>> = (0..self.n).map(|v| self.get(u, v)).collect();
            list.entry(&row);
        }
        list.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn build_small_graphs() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(k2.m(), 1);
        assert!(k2.has_edge(1, 0));

        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.m(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn rejects_loops_and_bad_vertices() {
        assert_eq!(
            Graph::new(3, [(0, 0)]).unwrap_err(),
            GraphError::SelfLoop { vertex: 0 }
        );
        assert_eq!(
            Graph::new(2, [(0, 2)]).unwrap_err(),
            GraphError::InvalidVertex { vertex: 2, n: 2 }
        );
    }

    #[test]
    fn labels_must_be_distinct() {
        let g = path(2);
        assert!(g.clone().with_labels(vec!["a".into(), "a".into()]).is_err());
        assert!(g.clone().with_labels(vec!["a".into()]).is_err());
        let g = g.with_labels(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(g.label(1), "b");
    }

    #[test]
    fn cycle_and_path_distances() {
        let dm = cycle(6).distances();
        assert_eq!(dm.get(0, 3), Some(3));
        assert!(dm.eccentricities().unwrap().iter().all(|&e| e == 3));

        let dm = path(4).distances();
        assert_eq!(dm.get(0, 3), Some(3));
        assert_eq!(dm.eccentricity(1), Some(2));

        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let dm = two_k2.distances();
        assert_eq!(dm.get(0, 2), None);
        assert!(dm.eccentricities().is_none());
        assert_eq!(dm.radius_diameter(), Err(GraphError::NotConnected));
    }

    #[test]
    fn radius_and_diameter() {
        assert_eq!(cycle(7).distances().radius_diameter(), Ok((3, 3)));
        assert_eq!(path(5).distances().radius_diameter(), Ok((2, 4)));
    }

    #[test]
    fn girth_values() {
        assert_eq!(path(6).girth(), 0);
        let star = Graph::new(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(star.girth(), 0);
        assert_eq!(cycle(9).girth(), 9);
        assert_eq!(cycle(3).girth(), 3);
        // C_6 with a long chord: shortest cycle 4.
        let g = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6)).chain([(0, 3)])).unwrap();
        assert_eq!(g.girth(), 4);
    }

    #[test]
    fn petersen_girth_matches_exhaustive_search() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(g.girth(), brute_force_girth(&g));
        assert_eq!(g.girth(), 5);
    }

    /// Shortest simple cycle by DFS over all vertex sequences.
    fn brute_force_girth(g: &Graph) -> u32 {
        fn extend(g: &Graph, path: &mut Vec<usize>, best: &mut usize) {
            let start = path[0];
            let last = *path.last().unwrap();
            for &y in g.neighbors(last) {
                if y == start && path.len() >= 3 {
                    *best = (*best).min(path.len());
                } else if y > start && !path.contains(&y) && path.len() + 1 < *best {
                    path.push(y);
                    extend(g, path, best);
                    path.pop();
                }
            }
        }
        let mut best = usize::MAX;
        for s in 0..g.n() {
            extend(g, &mut vec![s], &mut best);
        }
        if best == usize::MAX {
            0
        } else {
            best as u32
        }
    }

    #[test]
    fn connectivity() {
        assert!(cycle(5).is_connected());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::new(1, []).unwrap().is_connected());
        assert!(Graph::new(0, []).unwrap().is_connected());
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let g = cycle(5)
            .with_labels((0..5).map(|i| format!("v{i}")).collect())
            .unwrap();
        let h = g.induced(&[4, 0, 1]).unwrap();
        assert_eq!(h.m(), 2);
        assert!(h.has_edge(0, 1) && h.has_edge(1, 2) && !h.has_edge(0, 2));
        assert_eq!(h.label(0), "v4");
    }

    #[test]
    fn closed_neighbourhood_containment() {
        // Leaf 2 hangs off 1 in the path 0-1-2.
        let g = path(3);
        assert!(g.closed_nbhd_subset(2, 1));
        assert!(!g.closed_nbhd_subset(1, 2));
        assert!(!g.closed_nbhd_subset(0, 2));
    }
}
