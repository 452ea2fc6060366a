//! Graph families: cycles, paths, complete graphs, hypercubes, Hamming
//! graphs, generalized Johnson graphs, Sierpiński graphs, circulants, the
//! named cubic vertex-transitive instance, and seeded random graphs.
//!
//! Every generator is deterministic. Vertex indices follow the natural
//! mixed-radix order of the family's coordinates (first coordinate most
//! significant), so e.g. `hamming(d, q)` and the iterated Cartesian power
//! of `K_q` produce identical edge sets.

use std::fmt;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::Graph;

/// Upper bound on the number of vertices a generator may produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard(pub usize);

impl SizeGuard {
    pub const DEFAULT: SizeGuard = SizeGuard(1 << 16);

    pub fn check(self, requested: u128) -> Result<usize, GraphError> {
        if requested > self.0 as u128 {
            Err(GraphError::SizeGuard {
                requested,
                limit: self.0,
            })
        } else {
            Ok(requested as usize)
        }
    }
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard::DEFAULT
    }
}

fn checked_pow(base: u128, exp: u32) -> u128 {
    base.checked_pow(exp).unwrap_or(u128::MAX)
}

fn index_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Word label over an alphabet of size `q`; digits are concatenated when they
/// are single characters, otherwise joined with dots.
fn word_label(digits: &[usize], q: usize, offset: usize) -> String {
    if q + offset <= 10 {
        digits.iter().map(|d| (d + offset).to_string()).collect()
    } else {
        digits.iter().map(|d| (d + offset).to_string()).join(".")
    }
}

/// Mixed-radix digits of `index`, most significant first.
fn digits_of(mut index: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    out
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParam(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?.with_labels(index_labels(n))
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParam("path needs n >= 1".into()));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))?.with_labels(index_labels(n))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParam(
            "complete graph needs n >= 1".into(),
        ));
    }
    Graph::new(n, (0..n).tuple_combinations())?.with_labels(index_labels(n))
}

/// `Q_d` on binary words of length `d`.
pub fn hypercube(d: u32, guard: SizeGuard) -> Result<Graph, GraphError> {
    if d < 1 {
        return Err(GraphError::InvalidParam("hypercube needs d >= 1".into()));
    }
    hamming(d, 2, guard)
}

/// `H(d, q)`: words of length `d` over `q` symbols, adjacent when they differ
/// in exactly one coordinate.
pub fn hamming(d: u32, q: usize, guard: SizeGuard) -> Result<Graph, GraphError> {
    if d < 1 || q < 2 {
        return Err(GraphError::InvalidParam(format!(
            "hamming needs d >= 1 and q >= 2, got d={d} q={q}"
        )));
    }
    let n = guard.check(checked_pow(q as u128, d))?;
    let len = d as usize;
    let mut edges = Vec::new();
    for v in 0..n {
        let mut place = 1;
        for _ in 0..len {
            let digit = (v / place) % q;
            for other in digit + 1..q {
                edges.push((v, v + (other - digit) * place));
            }
            place *= q;
        }
    }
    let labels = (0..n)
        .map(|v| word_label(&digits_of(v, q, len), q, 0))
        .collect();
    Graph::new(n, edges)?.with_labels(labels)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `J(n, k, i)`: `k`-subsets of `{1..n}`, adjacent when they share exactly
/// `i` elements. Subsets are indexed in lexicographic order.
pub fn generalized_johnson(
    n: usize,
    k: usize,
    i: usize,
    guard: SizeGuard,
) -> Result<Graph, GraphError> {
    if !(n > k && k > i) {
        return Err(GraphError::InvalidParam(format!(
            "generalized Johnson needs n > k > i >= 0, got ({n}, {k}, {i})"
        )));
    }
    guard.check(binomial(n, k))?;
    let subsets: Vec<Vec<usize>> = (1..=n).combinations(k).collect();
    let meet = |a: &[usize], b: &[usize]| {
        let (mut x, mut y, mut c) = (0, 0, 0);
        while x < a.len() && y < b.len() {
            match a[x].cmp(&b[y]) {
                std::cmp::Ordering::Less => x += 1,
                std::cmp::Ordering::Greater => y += 1,
                std::cmp::Ordering::Equal => {
                    c += 1;
                    x += 1;
                    y += 1;
                }
            }
        }
        c
    };
    let edges = (0..subsets.len())
        .tuple_combinations()
        .filter(|&(a, b)| meet(&subsets[a], &subsets[b]) == i);
    let edges: Vec<_> = edges.collect();
    let labels = subsets
        .iter()
        .map(|s| format!("{{{}}}", s.iter().join(",")))
        .collect();
    Graph::new(subsets.len(), edges)?.with_labels(labels)
}

/// `J(n, k) = J(n, k, k-1)`.
pub fn johnson(n: usize, k: usize, guard: SizeGuard) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::InvalidParam("johnson needs k >= 1".into()));
    }
    generalized_johnson(n, k, k - 1, guard)
}

/// `K(n, k) = J(n, k, 0)`.
pub fn kneser(n: usize, k: usize, guard: SizeGuard) -> Result<Graph, GraphError> {
    generalized_johnson(n, k, 0, guard)
}

/// Sierpiński graph `S(n, k)` on words of `[k]^n`, labelled with symbols
/// `1..=k`.
pub fn sierpinski(n: u32, k: usize, guard: SizeGuard) -> Result<Graph, GraphError> {
    if k < 1 {
        return Err(GraphError::InvalidParam("sierpinski needs k >= 1".into()));
    }
    let order = guard.check(checked_pow(k as u128, n))?;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // Block size of S(level - 1, k) inside S(level, k).
    let mut block = 1usize;
    for level in 1..=n {
        // Lift the previous level into each of the k copies.
        let prev = edges.clone();
        edges.clear();
        for i in 0..k {
            let base = i * block;
            edges.extend(prev.iter().map(|&(x, y)| (base + x, base + y)));
        }
        // Bridges {i j^(level-1), j i^(level-1)}.
        let repunit = |j: usize| -> usize {
            let mut acc = 0;
            for _ in 0..level - 1 {
                acc = acc * k + j;
            }
            acc
        };
        for (i, j) in (0..k).tuple_combinations() {
            edges.push((i * block + repunit(j), j * block + repunit(i)));
        }
        block *= k;
    }
    debug_assert_eq!(block, order);
    let labels = (0..order)
        .map(|v| word_label(&digits_of(v, k, n as usize), k, 1))
        .collect();
    Graph::new(order, edges)?.with_labels(labels)
}

/// Circulant graph: `j ~ j ± s (mod n)` for each step `s`.
pub fn circulant(n: usize, steps: &[usize]) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParam(format!(
            "circulant needs n >= 3, got {n}"
        )));
    }
    if let Some(&s) = steps.iter().find(|&&s| s < 1 || s > n / 2) {
        return Err(GraphError::InvalidParam(format!(
            "circulant step {s} outside 1..={}",
            n / 2
        )));
    }
    let edges = steps
        .iter()
        .flat_map(|&s| (0..n).map(move |j| (j, (j + s) % n)));
    Graph::new(n, edges)?.with_labels(index_labels(n))
}

pub const CUBIC_VT_24_6: &str = "CubicVT24_6";

const CUBIC_VT_24_6_EDGES: [(usize, usize); 36] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 20),
    (1, 21),
    (2, 18),
    (2, 22),
    (3, 19),
    (3, 23),
    (4, 5),
    (4, 16),
    (4, 17),
    (5, 8),
    (5, 9),
    (6, 12),
    (6, 13),
    (6, 15),
    (7, 10),
    (7, 11),
    (7, 14),
    (8, 11),
    (8, 13),
    (9, 10),
    (9, 12),
    (10, 21),
    (11, 20),
    (12, 23),
    (13, 22),
    (14, 22),
    (14, 23),
    (15, 18),
    (15, 19),
    (16, 19),
    (16, 21),
    (17, 18),
    (17, 20),
];

pub fn named_instance(id: &str) -> Result<Graph, GraphError> {
    match id {
        CUBIC_VT_24_6 => Graph::new(24, CUBIC_VT_24_6_EDGES)?.with_labels(index_labels(24)),
        other => Err(GraphError::UnknownInstance(other.to_string())),
    }
}

const GNP_ATTEMPTS: usize = 1000;

/// Erdős–Rényi sample conditioned on connectivity by rejection.
pub fn random_connected_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParam("gnp needs n >= 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidParam(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GNP_ATTEMPTS {
        let edges: Vec<(usize, usize)> = (0..n)
            .tuple_combinations()
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::new(n, edges)?;
        if g.is_connected() {
            return g.with_labels(index_labels(n));
        }
    }
    Err(GraphError::CouldNotConnect {
        attempts: GNP_ATTEMPTS,
    })
}

/// Uniform random recursive tree plus `extra` random non-tree edges.
/// Always connected; sparse enough to have long shortest cycles.
pub fn random_tree_plus_edges(n: usize, extra: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParam("tree needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let room = n * (n - 1) / 2 - (n - 1);
    for _ in 0..extra.min(room) {
        loop {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let e = (u.min(v), u.max(v));
            if u != v && !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == e) {
                edges.push(e);
                break;
            }
        }
    }
    Graph::new(n, edges)?.with_labels(index_labels(n))
}

/// A parameterised family member, as accepted by the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Hypercube(u32),
    Hamming { d: u32, q: usize },
    Johnson { n: usize, k: usize },
    Kneser { n: usize, k: usize },
    GeneralizedJohnson { n: usize, k: usize, i: usize },
    Sierpinski { n: u32, k: usize },
    Circulant { n: usize, steps: Vec<usize> },
    Named(String),
    RandomGnp { n: usize, p: f64, seed: u64 },
}

/// Closed-form rc value known for a family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub rc: u32,
    pub rule: &'static str,
}

impl FamilySpec {
    /// Parses `kind` plus positional parameters. `seed` is used by random kinds only.
    pub fn parse(kind: &str, params: &[String], seed: u64) -> Result<FamilySpec, GraphError> {
        fn num<T: std::str::FromStr>(
            params: &[String],
            i: usize,
            kind: &str,
        ) -> Result<T, GraphError> {
            let raw = params.get(i).ok_or_else(|| {
                GraphError::InvalidParam(format!("{kind}: missing parameter #{}", i + 1))
            })?;
            raw.parse()
                .map_err(|_| GraphError::InvalidParam(format!("{kind}: bad parameter {raw:?}")))
        }
        let arity = |want: usize| -> Result<(), GraphError> {
            if params.len() == want {
                Ok(())
            } else {
                Err(GraphError::InvalidParam(format!(
                    "{kind}: expected {want} parameters, got {}",
                    params.len()
                )))
            }
        };
        let spec = match kind {
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle(num(params, 0, kind)?)
            }
            "path" => {
                arity(1)?;
                FamilySpec::Path(num(params, 0, kind)?)
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete(num(params, 0, kind)?)
            }
            "hypercube" => {
                arity(1)?;
                FamilySpec::Hypercube(num(params, 0, kind)?)
            }
            "hamming" => {
                arity(2)?;
                FamilySpec::Hamming {
                    d: num(params, 0, kind)?,
                    q: num(params, 1, kind)?,
                }
            }
            "johnson" => {
                arity(2)?;
                FamilySpec::Johnson {
                    n: num(params, 0, kind)?,
                    k: num(params, 1, kind)?,
                }
            }
            "kneser" => {
                arity(2)?;
                FamilySpec::Kneser {
                    n: num(params, 0, kind)?,
                    k: num(params, 1, kind)?,
                }
            }
            "generalized_johnson" | "generalized-johnson" => {
                arity(3)?;
                FamilySpec::GeneralizedJohnson {
                    n: num(params, 0, kind)?,
                    k: num(params, 1, kind)?,
                    i: num(params, 2, kind)?,
                }
            }
            "sierpinski" => {
                arity(2)?;
                FamilySpec::Sierpinski {
                    n: num(params, 0, kind)?,
                    k: num(params, 1, kind)?,
                }
            }
            "circulant" => {
                if params.len() < 2 {
                    return Err(GraphError::InvalidParam(
                        "circulant: expected n followed by at least one step".into(),
                    ));
                }
                FamilySpec::Circulant {
                    n: num(params, 0, kind)?,
                    steps: (1..params.len())
                        .map(|i| num(params, i, kind))
                        .collect::<Result<_, _>>()?,
                }
            }
            "named_instance" | "instance" => {
                arity(1)?;
                FamilySpec::Named(params[0].clone())
            }
            "random_gnp_connected" | "gnp" => {
                arity(2)?;
                FamilySpec::RandomGnp {
                    n: num(params, 0, kind)?,
                    p: num(params, 1, kind)?,
                    seed,
                }
            }
            other => {
                return Err(GraphError::InvalidParam(format!(
                    "unknown family {other:?}"
                )))
            }
        };
        Ok(spec)
    }

    pub fn build(&self, guard: SizeGuard) -> Result<Graph, GraphError> {
        let small = |n: usize| guard.check(n as u128).map(|_| ());
        match self {
            FamilySpec::Cycle(n) => small(*n).and_then(|_| cycle(*n)),
            FamilySpec::Path(n) => small(*n).and_then(|_| path(*n)),
            FamilySpec::Complete(n) => small(*n).and_then(|_| complete(*n)),
            FamilySpec::Hypercube(d) => hypercube(*d, guard),
            FamilySpec::Hamming { d, q } => hamming(*d, *q, guard),
            FamilySpec::Johnson { n, k } => johnson(*n, *k, guard),
            FamilySpec::Kneser { n, k } => kneser(*n, *k, guard),
            FamilySpec::GeneralizedJohnson { n, k, i } => generalized_johnson(*n, *k, *i, guard),
            FamilySpec::Sierpinski { n, k } => sierpinski(*n, *k, guard),
            FamilySpec::Circulant { n, steps } => small(*n).and_then(|_| circulant(*n, steps)),
            FamilySpec::Named(id) => named_instance(id),
            FamilySpec::RandomGnp { n, p, seed } => {
                small(*n).and_then(|_| random_connected_gnp(*n, *p, *seed))
            }
        }
    }

    /// Closed-form rc for this family member, if one is known. Families whose
    /// value is `rad - 1` are evaluated against the built graph `g`; `None`
    /// means no closed form applies (or `g` is disconnected).
    pub fn predicted_rc(&self, g: &Graph) -> Option<Prediction> {
        let rad_minus_one = |rule| {
            let rad = g.distances().radius().ok()?;
            Some(Prediction {
                rc: rad.saturating_sub(1),
                rule,
            })
        };
        match *self {
            FamilySpec::Cycle(n) => Some(Prediction {
                rc: (n / 2 - 1) as u32,
                rule: "floor(n/2) - 1",
            }),
            FamilySpec::Path(_) => Some(Prediction {
                rc: 0,
                rule: "trees are cop-win",
            }),
            FamilySpec::Complete(_) => Some(Prediction {
                rc: 0,
                rule: "complete graphs are cop-win",
            }),
            FamilySpec::Hypercube(d) => Some(Prediction {
                rc: d.saturating_sub(1),
                rule: "d - 1",
            }),
            FamilySpec::Hamming { d, .. } => Some(Prediction {
                rc: d.saturating_sub(1),
                rule: "d - 1",
            }),
            FamilySpec::Johnson { n, k } if k <= n => Some(Prediction {
                rc: (k.min(n - k) as u32).saturating_sub(1),
                rule: "min(k, n-k) - 1",
            }),
            FamilySpec::Johnson { .. } => None,
            FamilySpec::Kneser { .. } | FamilySpec::GeneralizedJohnson { .. } => {
                rad_minus_one("rad - 1 (generously transitive)")
            }
            FamilySpec::Sierpinski { n, k } => match k {
                1 | 2 => Some(Prediction {
                    rc: 0,
                    rule: "S(n,1) and S(n,2) are trees",
                }),
                3 if n >= 3 => Some(Prediction {
                    rc: 3 * (1 << (n - 2)) - 1,
                    rule: "3 * 2^(n-2) - 1",
                }),
                3 => Some(Prediction {
                    rc: ((1u32 << n) - 1).saturating_sub(1),
                    rule: "2^n - 2 (rad - 1)",
                }),
                _ => None,
            },
            FamilySpec::Circulant { .. } => {
                rad_minus_one("rad - 1 (Cayley graph of an abelian group)")
            }
            FamilySpec::Named(ref id) if id == CUBIC_VT_24_6 => Some(Prediction {
                rc: 3,
                rule: "rad - 2",
            }),
            FamilySpec::Named(_) | FamilySpec::RandomGnp { .. } => None,
        }
    }

    /// Previously computed values for members without a closed form.
    pub fn known_value(&self) -> Option<u32> {
        match *self {
            FamilySpec::Sierpinski { n: 3, k: 4 } => Some(5),
            FamilySpec::Sierpinski { n: 4, k: 4 } => Some(11),
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(n) => write!(f, "cycle-{n}"),
            FamilySpec::Path(n) => write!(f, "path-{n}"),
            FamilySpec::Complete(n) => write!(f, "complete-{n}"),
            FamilySpec::Hypercube(d) => write!(f, "hypercube-{d}"),
            FamilySpec::Hamming { d, q } => write!(f, "hamming-{d}-{q}"),
            FamilySpec::Johnson { n, k } => write!(f, "johnson-{n}-{k}"),
            FamilySpec::Kneser { n, k } => write!(f, "kneser-{n}-{k}"),
            FamilySpec::GeneralizedJohnson { n, k, i } => {
                write!(f, "generalized_johnson-{n}-{k}-{i}")
            }
            FamilySpec::Sierpinski { n, k } => write!(f, "sierpinski-{n}-{k}"),
            FamilySpec::Circulant { n, steps } => {
                write!(f, "circulant-{n}-{}", steps.iter().join("_"))
            }
            FamilySpec::Named(id) => write!(f, "{id}"),
            FamilySpec::RandomGnp { n, p, seed } => write!(f, "gnp-{n}-{p}-{seed}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn basic_families() {
        let c4 = cycle(4).unwrap();
        assert_eq!((c4.n(), c4.m(), c4.girth()), (4, 4, 4));
        let k5 = complete(5).unwrap();
        assert_eq!(k5.m(), 10);
        assert_eq!(k5.distances().diameter(), Ok(1));
        let p1 = path(1).unwrap();
        assert_eq!((p1.n(), p1.m()), (1, 0));
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(complete(0).is_err());
    }

    #[test]
    fn hypercube_shapes() {
        let q1 = hypercube(1, SizeGuard::DEFAULT).unwrap();
        assert_eq!((q1.n(), q1.m()), (2, 1));
        let q3 = hypercube(3, SizeGuard::DEFAULT).unwrap();
        assert_eq!((q3.n(), q3.m()), (8, 12));
        assert_eq!(q3.distances().radius_diameter(), Ok((3, 3)));
        assert_eq!(q3.label(5), "101");
        assert!(matches!(
            hypercube(25, SizeGuard::DEFAULT),
            Err(GraphError::SizeGuard { .. })
        ));
    }

    #[test]
    fn hamming_small_cases() {
        let k4 = hamming(1, 4, SizeGuard::DEFAULT).unwrap();
        assert_eq!(edge_set(&k4), edge_set(&complete(4).unwrap()));
        let rook = hamming(2, 3, SizeGuard::DEFAULT).unwrap();
        assert_eq!((rook.n(), rook.m()), (9, 18));
        assert_eq!(
            edge_set(&hamming(3, 2, SizeGuard::DEFAULT).unwrap()),
            edge_set(&hypercube(3, SizeGuard::DEFAULT).unwrap())
        );
        assert!(hamming(2, 1, SizeGuard::DEFAULT).is_err());
        assert!(hamming(10, 4, SizeGuard(1000)).is_err());
    }

    #[test]
    fn generalized_johnson_cases() {
        let oct = johnson(4, 2, SizeGuard::DEFAULT).unwrap();
        assert_eq!((oct.n(), oct.m()), (6, 12));
        assert!((0..6).all(|v| oct.degree(v) == 4));
        assert_eq!(oct.label(0), "{1,2}");

        let petersen = kneser(5, 2, SizeGuard::DEFAULT).unwrap();
        assert_eq!((petersen.n(), petersen.m(), petersen.girth()), (10, 15, 5));
        assert!((0..10).all(|v| petersen.degree(v) == 3));

        let matching = kneser(4, 2, SizeGuard::DEFAULT).unwrap();
        assert_eq!((matching.n(), matching.m()), (6, 3));
        assert!(!matching.is_connected());

        assert!(generalized_johnson(4, 4, 1, SizeGuard::DEFAULT).is_err());
        assert!(generalized_johnson(5, 2, 2, SizeGuard::DEFAULT).is_err());
    }

    #[test]
    fn johnson_graphs_are_regular() {
        for n in 3..9 {
            for k in 1..n {
                let g = johnson(n, k, SizeGuard::DEFAULT).unwrap();
                assert_eq!(g.n() as u128, binomial(n, k));
                assert!((0..g.n()).all(|v| g.degree(v) == k * (n - k)), "J({n},{k})");
            }
        }
    }

    #[test]
    fn sierpinski_small_cases() {
        let s13 = sierpinski(1, 3, SizeGuard::DEFAULT).unwrap();
        assert_eq!(edge_set(&s13), edge_set(&complete(3).unwrap()));
        let s0 = sierpinski(0, 3, SizeGuard::DEFAULT).unwrap();
        assert_eq!((s0.n(), s0.m()), (1, 0));

        let s33 = sierpinski(3, 3, SizeGuard::DEFAULT).unwrap();
        assert_eq!((s33.n(), s33.m()), (27, 39));
        let idx = |w: &str| s33.labels().unwrap().iter().position(|l| l == w).unwrap();
        // Bridges from levels 3 and 2.
        for (a, b) in [
            ("122", "211"),
            ("133", "311"),
            ("233", "322"),
            ("112", "121"),
            ("223", "232"),
        ] {
            assert!(s33.has_edge(idx(a), idx(b)), "{a}-{b}");
        }
        assert!(!s33.has_edge(idx("111"), idx("222")));
        assert_eq!(s33.distances().radius(), Ok(6));

        let s23 = sierpinski(2, 3, SizeGuard::DEFAULT).unwrap();
        assert_eq!(s23.distances().radius(), Ok(3));
    }

    #[test]
    fn sierpinski_radius_closed_form() {
        // rad = (2^(k-1) - 1) 2^(n-k+1) for n >= k, 2^n - 1 otherwise.
        for (n, k) in [(1, 3), (2, 3), (3, 3), (4, 3), (2, 4), (3, 4), (4, 4)] {
            let g = sierpinski(n, k, SizeGuard::DEFAULT).unwrap();
            let expected = if n as usize >= k {
                ((1u32 << (k - 1)) - 1) << (n as usize - k + 1)
            } else {
                (1u32 << n) - 1
            };
            assert_eq!(g.distances().radius(), Ok(expected), "S({n},{k})");
        }
    }

    #[test]
    fn sierpinski_edge_recurrence() {
        for k in 1..=5usize {
            let mut prev = 0usize;
            for n in 0..=4u32 {
                let g = sierpinski(n, k, SizeGuard::DEFAULT).unwrap();
                assert_eq!(g.n(), k.pow(n));
                if n > 0 {
                    assert_eq!(g.m(), k * prev + k * (k - 1) / 2, "S({n},{k})");
                }
                prev = g.m();
            }
        }
    }

    #[test]
    fn circulant_cases() {
        let c8 = circulant(8, &[1]).unwrap();
        assert_eq!(edge_set(&c8), edge_set(&cycle(8).unwrap()));
        let g = circulant(8, &[1, 2]).unwrap();
        assert!((0..8).all(|v| g.degree(v) == 4));
        let m = circulant(6, &[3]).unwrap();
        assert_eq!(m.m(), 3);
        assert!(!m.is_connected());
        assert!(circulant(8, &[5]).is_err());
        assert!(circulant(8, &[0]).is_err());
    }

    #[test]
    fn cubic_vt_instance() {
        let g = named_instance(CUBIC_VT_24_6).unwrap();
        assert_eq!((g.n(), g.m()), (24, 36));
        assert!((0..24).all(|v| g.degree(v) == 3));
        assert_eq!(g.distances().radius(), Ok(5));
        assert!(matches!(
            named_instance("nope"),
            Err(GraphError::UnknownInstance(_))
        ));
    }

    #[test]
    fn gnp_determinism_and_extremes() {
        let k1 = random_connected_gnp(1, 0.5, 3).unwrap();
        assert_eq!(k1.n(), 1);
        let k6 = random_connected_gnp(6, 1.0, 3).unwrap();
        assert_eq!(k6.m(), 15);
        let a = random_connected_gnp(10, 0.3, 42).unwrap();
        let b = random_connected_gnp(10, 0.3, 42).unwrap();
        assert_eq!(edge_set(&a), edge_set(&b));
        assert!(a.is_connected());
        assert_eq!(
            random_connected_gnp(5, 0.0, 1).unwrap_err(),
            GraphError::CouldNotConnect {
                attempts: GNP_ATTEMPTS
            }
        );
        assert!(random_connected_gnp(5, 1.5, 1).is_err());
    }

    #[test]
    fn family_spec_parse_and_build() {
        let p = |kind: &str, args: &[&str]| {
            FamilySpec::parse(
                kind,
                &args.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                9,
            )
        };
        assert_eq!(
            p("sierpinski", &["4", "3"]).unwrap(),
            FamilySpec::Sierpinski { n: 4, k: 3 }
        );
        assert_eq!(
            p("circulant", &["8", "1", "2"]).unwrap(),
            FamilySpec::Circulant {
                n: 8,
                steps: vec![1, 2]
            }
        );
        assert!(p("cycle", &[]).is_err());
        assert!(p("cycle", &["x"]).is_err());
        assert!(p("dodecahedron", &["1"]).is_err());
        let spec = p("generalized_johnson", &["5", "2", "0"]).unwrap();
        assert_eq!(spec.build(SizeGuard::DEFAULT).unwrap().n(), 10);
        assert!(FamilySpec::Cycle(100).build(SizeGuard(50)).is_err());
        assert_eq!(spec.to_string(), "generalized_johnson-5-2-0");
    }
}
