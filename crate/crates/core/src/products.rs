//! Cartesian, strong and lexicographic products.
//!
//! Vertex `(a, b)` of `G * H` has index `a * |V(H)| + b`. The G-layer
//! `G^b` is therefore `{b, |V(H)| + b, ...}` and the H-layer `^aH` is the
//! contiguous block `a * |V(H)| .. (a + 1) * |V(H)|`.

use std::fmt;
use std::str::FromStr;

use crate::error::GraphError;
use crate::generators::SizeGuard;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Strong,
    Lexicographic,
}

impl ProductKind {
    pub const ALL: [ProductKind; 3] = [
        ProductKind::Cartesian,
        ProductKind::Strong,
        ProductKind::Lexicographic,
    ];
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lexicographic",
        })
    }
}

impl FromStr for ProductKind {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cartesian" => Ok(ProductKind::Cartesian),
            "strong" => Ok(ProductKind::Strong),
            "lexicographic" => Ok(ProductKind::Lexicographic),
            other => Err(GraphError::InvalidParam(format!(
                "unknown product {other:?}"
            ))),
        }
    }
}

/// Index of `(a, b)` in a product whose second factor has `h_order` vertices.
#[inline]
pub fn pair_index(a: usize, b: usize, h_order: usize) -> usize {
    a * h_order + b
}

/// Inverse of [`pair_index`].
#[inline]
pub fn split_index(v: usize, h_order: usize) -> (usize, usize) {
    (v / h_order, v % h_order)
}

pub fn product(
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    guard: SizeGuard,
) -> Result<Graph, GraphError> {
    if g.n() == 0 || h.n() == 0 {
        return Err(GraphError::InvalidParam(
            "product factors must be nonempty".into(),
        ));
    }
    let order = guard.check(g.n() as u128 * h.n() as u128)?;
    let hn = h.n();
    let mut edges = Vec::new();
    // G-edges paired with H-vertices (Cartesian and strong), or with any
    // H-pair (lexicographic).
    for (a1, a2) in g.edges() {
        match kind {
            ProductKind::Cartesian => {
                edges.extend((0..hn).map(|b| (pair_index(a1, b, hn), pair_index(a2, b, hn))));
            }
            ProductKind::Strong => {
                edges.extend((0..hn).map(|b| (pair_index(a1, b, hn), pair_index(a2, b, hn))));
                for (b1, b2) in h.edges() {
                    edges.push((pair_index(a1, b1, hn), pair_index(a2, b2, hn)));
                    edges.push((pair_index(a1, b2, hn), pair_index(a2, b1, hn)));
                }
            }
            ProductKind::Lexicographic => {
                for b1 in 0..hn {
                    for b2 in 0..hn {
                        edges.push((pair_index(a1, b1, hn), pair_index(a2, b2, hn)));
                    }
                }
            }
        }
    }
    // Edges inside each H-layer; identical for all three products.
    for a in 0..g.n() {
        edges.extend(
            h.edges()
                .map(|(b1, b2)| (pair_index(a, b1, hn), pair_index(a, b2, hn))),
        );
    }
    let labels = (0..order)
        .map(|v| {
            let (a, b) = split_index(v, hn);
            format!("({},{})", g.label(a), h.label(b))
        })
        .collect();
    Graph::new(order, edges)?.with_labels(labels)
}

/// Vertices of the G-layer `G^b`, ordered by the G coordinate.
pub fn g_layer(g_order: usize, h_order: usize, b: usize) -> Vec<usize> {
    (0..g_order).map(|a| pair_index(a, b, h_order)).collect()
}

/// Vertices of the H-layer `^aH`, ordered by the H coordinate.
pub fn h_layer(h_order: usize, a: usize) -> Vec<usize> {
    (0..h_order).map(|b| pair_index(a, b, h_order)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};
    use std::collections::BTreeSet;

    fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn small_products() {
        let k2 = complete(2).unwrap();
        let square = product(ProductKind::Cartesian, &k2, &k2, SizeGuard::DEFAULT).unwrap();
        assert_eq!(square.m(), 4);
        assert!((0..4).all(|v| square.degree(v) == 2));
        assert_eq!(square.girth(), 4);

        let k4 = product(ProductKind::Strong, &k2, &k2, SizeGuard::DEFAULT).unwrap();
        assert_eq!(edge_set(&k4), edge_set(&complete(4).unwrap()));

        let c4 = cycle(4).unwrap();
        let k1 = complete(1).unwrap();
        let lex = product(ProductKind::Lexicographic, &c4, &k1, SizeGuard::DEFAULT).unwrap();
        assert_eq!(edge_set(&lex), edge_set(&c4));
    }

    #[test]
    fn labels_and_layers() {
        let g = path(3).unwrap();
        let h = cycle(4).unwrap();
        let p = product(ProductKind::Cartesian, &g, &h, SizeGuard::DEFAULT).unwrap();
        assert_eq!(p.label(pair_index(2, 1, 4)), "(2,1)");
        assert_eq!(g_layer(3, 4, 1), vec![1, 5, 9]);
        assert_eq!(h_layer(4, 2), vec![8, 9, 10, 11]);
        let layer = p.induced(&g_layer(3, 4, 0)).unwrap();
        assert_eq!(edge_set(&layer), edge_set(&g));
    }

    #[test]
    fn edge_counts() {
        let g = cycle(5).unwrap();
        let h = path(3).unwrap();
        let (ng, mg, nh, mh) = (5, 5, 3, 2);
        let cart = product(ProductKind::Cartesian, &g, &h, SizeGuard::DEFAULT).unwrap();
        assert_eq!(cart.m(), mg * nh + ng * mh);
        let strong = product(ProductKind::Strong, &g, &h, SizeGuard::DEFAULT).unwrap();
        assert_eq!(strong.m(), mg * nh + ng * mh + 2 * mg * mh);
        let lex = product(ProductKind::Lexicographic, &g, &h, SizeGuard::DEFAULT).unwrap();
        assert_eq!(lex.m(), mg * nh * nh + ng * mh);
    }

    #[test]
    fn size_guard_and_empty_factors() {
        let g = cycle(10).unwrap();
        assert!(matches!(
            product(ProductKind::Strong, &g, &g, SizeGuard(99)),
            Err(GraphError::SizeGuard { requested: 100, .. })
        ));
        let empty = Graph::new(0, []).unwrap();
        assert!(product(ProductKind::Cartesian, &g, &empty, SizeGuard::DEFAULT).is_err());
    }
}
