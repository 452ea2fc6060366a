//! Executable forms of the structural results about rc: retractions,
//! evenness, distance expansion, the radius-pair condition, generous
//! transitivity and the product formulas. Every predicate is checked
//! directly on the graph; rc values come from the solver.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{GameError, GraphError, RetractionError};
use crate::game::{Game, SearchMode};
use crate::generators::SizeGuard;
use crate::graph::Graph;
use crate::io::write_graph6;
use crate::products::{pair_index, product, split_index, ProductKind};

/// A map `V(G) -> S` that fixes `S` pointwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Retraction {
    target: Vec<usize>,
    map: Vec<usize>,
}

impl Retraction {
    /// `target` is sorted and deduplicated; `map[v]` is the image of `v`.
    pub fn new(mut target: Vec<usize>, map: Vec<usize>) -> Self {
        target.sort_unstable();
        target.dedup();
        Retraction { target, map }
    }

    pub fn target(&self) -> &[usize] {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `G[S]`, with vertex `i` standing for `target()[i]`.
    pub fn retract(&self, g: &Graph) -> Result<Graph, GraphError> {
        g.induced(&self.target)
    }
}

fn not_retraction(msg: String) -> RetractionError {
    RetractionError::NotARetraction(msg)
}

/// Checks, in order: `S` nonempty and in range, `f` total into `S`, `f`
/// fixes `S`, every edge maps to an edge or a single vertex, `G[S]` is
/// isometric in `G`, and `f` does not increase distances. The first failed
/// clause is reported with a witness.
pub fn verify_retraction(g: &Graph, r: &Retraction) -> Result<(), RetractionError> {
    let n = g.n();
    if r.target.is_empty() {
        return Err(not_retraction("target set is empty".into()));
    }
    if let Some(&v) = r.target.iter().find(|&&v| v >= n) {
        return Err(GraphError::InvalidVertex { vertex: v, n }.into());
    }
    if r.map.len() != n {
        return Err(not_retraction(format!(
            "map has {} entries for {n} vertices",
            r.map.len()
        )));
    }
    let mut in_target = vec![false; n];
    for &v in &r.target {
        in_target[v] = true;
    }
    if let Some(v) = (0..n).find(|&v| r.map[v] >= n || !in_target[r.map[v]]) {
        return Err(not_retraction(format!(
            "f({v}) = {} is not in the target set",
            r.map[v]
        )));
    }
    if let Some(&v) = r.target.iter().find(|&&v| r.map[v] != v) {
        return Err(not_retraction(format!(
            "f({v}) = {} but target vertices must be fixed",
            r.map[v]
        )));
    }
    let f = &r.map;
    if let Some((x, y)) = g
        .edges()
        .find(|&(x, y)| f[x] != f[y] && !g.has_edge(f[x], f[y]))
    {
        return Err(not_retraction(format!(
            "edge {x}-{y} maps to {}-{}, neither equal nor adjacent",
            f[x], f[y]
        )));
    }
    let h = r.retract(g)?;
    let dg = g.distances();
    let dh = h.distances();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in r.target.iter().enumerate() {
        index[v] = i;
    }
    for (i, &x) in r.target.iter().enumerate() {
        for (j, &y) in r.target.iter().enumerate().skip(i + 1) {
            if dg.get(x, y) != dh.get(i, j) {
                return Err(not_retraction(format!(
                    "G[S] is not isometric: d_G({x},{y}) = {:?} but d_S = {:?}",
                    dg.get(x, y),
                    dh.get(i, j)
                )));
            }
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            let before = dg.hops(x, y);
            let after = dh.hops(index[f[x]], index[f[y]]);
            if after > before {
                return Err(not_retraction(format!(
                    "f stretches {x},{y}: distance {before} becomes {after}"
                )));
            }
        }
    }
    Ok(())
}

/// Lowest `u` (then lowest `v != u`) with `N[u] ⊆ N[v]`.
pub fn find_corner(g: &Graph) -> Option<(usize, usize)> {
    (0..g.n()).find_map(|u| {
        g.neighbors(u)
            .iter()
            .copied()
            .find(|&v| g.closed_nbhd_subset(u, v))
            .map(|v| (u, v))
    })
}

/// Folds corner `u` onto `v`: `S = V - {u}`, `f(u) = v`.
pub fn corner_fold(g: &Graph, u: usize, v: usize) -> Result<Retraction, RetractionError> {
    let n = g.n();
    for w in [u, v] {
        if w >= n {
            return Err(GraphError::InvalidVertex { vertex: w, n }.into());
        }
    }
    if u == v || !g.closed_nbhd_subset(u, v) {
        return Err(not_retraction(format!("N[{u}] is not contained in N[{v}]")));
    }
    let target = (0..n).filter(|&x| x != u).collect();
    let map = (0..n).map(|x| if x == u { v } else { x }).collect();
    Ok(Retraction::new(target, map))
}

/// Which layer of a product to project onto.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    /// `G^b`: `(a, b') -> (a, b)`.
    G { b: usize },
    /// `^aH`: `(a', b) -> (a, b)`.
    H { a: usize },
}

/// Projection of a product onto one of its layers. G-layers are retracts
/// of all three products; H-layers only of the Cartesian and strong ones.
pub fn layer_projection(
    kind: ProductKind,
    g_order: usize,
    h_order: usize,
    layer: Layer,
) -> Result<Retraction, RetractionError> {
    let order = g_order * h_order;
    let (target, map) = match layer {
        Layer::G { b } => {
            if b >= h_order {
                return Err(
                    GraphError::InvalidParam(format!("H coordinate {b} out of range")).into(),
                );
            }
            let map = (0..order)
                .map(|v| pair_index(split_index(v, h_order).0, b, h_order))
                .collect();
            (
                (0..g_order).map(|a| pair_index(a, b, h_order)).collect(),
                map,
            )
        }
        Layer::H { a } => {
            if a >= g_order {
                return Err(
                    GraphError::InvalidParam(format!("G coordinate {a} out of range")).into(),
                );
            }
            if kind == ProductKind::Lexicographic && h_order > 1 {
                return Err(not_retraction(
                    "H-layers of a lexicographic product are not retracts in general".into(),
                ));
            }
            let map = (0..order)
                .map(|v| pair_index(a, split_index(v, h_order).1, h_order))
                .collect();
            (
                (0..h_order).map(|b| pair_index(a, b, h_order)).collect(),
                map,
            )
        }
    };
    Ok(Retraction::new(target, map))
}

/// A graph attached to a failing report, in graph6.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedGraph {
    pub name: String,
    pub graph6: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graphs: Vec<NamedGraph>,
    pub detail: String,
}

/// Outcome of checking one statement on one input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: &'static str,
    pub inputs: String,
    pub predicted: String,
    pub values: BTreeMap<String, Option<u32>>,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

impl TheoremReport {
    /// Attaches `graphs` as a counterexample when `pass` is false.
    pub fn new(
        theorem: &'static str,
        inputs: impl Into<String>,
        predicted: impl Into<String>,
        values: impl IntoIterator<Item = (&'static str, Option<u32>)>,
        pass: bool,
        graphs: &[(&str, &Graph)],
    ) -> TheoremReport {
        let values: BTreeMap<String, Option<u32>> = values
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        let counterexample = (!pass).then(|| Counterexample {
            graphs: graphs
                .iter()
                .map(|(name, g)| NamedGraph {
                    name: name.to_string(),
                    graph6: String::from_utf8(write_graph6(g)).expect("graph6 is ASCII"),
                })
                .collect(),
            detail: values
                .iter()
                .map(|(k, v)| format!("{k}={}", v.map_or("none".to_string(), |x| x.to_string())))
                .collect::<Vec<_>>()
                .join(" "),
        });
        TheoremReport {
            theorem,
            inputs: inputs.into(),
            predicted: predicted.into(),
            values,
            pass,
            counterexample,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// `(rc, rad)` of a connected graph.
pub fn rc_and_radius(g: &Graph) -> Result<(u32, u32), GameError> {
    let game = Game::new(g)?;
    Ok((
        game.radius_capture_number(SearchMode::Binary),
        game.radius(),
    ))
}

/// rc of a retract never exceeds rc of the host graph.
pub fn check_retract_monotonicity(
    g: &Graph,
    r: &Retraction,
) -> Result<TheoremReport, RetractionError> {
    verify_retraction(g, r)?;
    let h = r.retract(g)?;
    let (rc_g, _) = rc_and_radius(g).map_err(|_| GraphError::NotConnected)?;
    let (rc_h, _) = rc_and_radius(&h).map_err(|_| GraphError::NotConnected)?;
    Ok(TheoremReport::new(
        "retract-monotonicity",
        format!("n={} m={} |S|={}", g.n(), g.m(), h.n()),
        "rc(G[S]) <= rc(G)",
        [("rc_g", Some(rc_g)), ("rc_retract", Some(rc_h))],
        rc_h <= rc_g,
        &[("G", g), ("G[S]", &h)],
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Evenness {
    NotEven,
    Even,
    HarmonicEven,
}

impl fmt::Display for Evenness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Evenness::NotEven => "not_even",
            Evenness::Even => "even",
            Evenness::HarmonicEven => "harmonic_even",
        })
    }
}

/// `v'` for every `v` when each vertex has exactly one vertex at distance
/// `diam`; `None` otherwise (including disconnected graphs).
pub fn antipodal_map(g: &Graph) -> Option<Vec<usize>> {
    let d = g.distances();
    let diam = d.diameter().ok()?;
    (0..g.n())
        .map(|v| {
            let mut far = (0..g.n()).filter(|&u| d.hops(v, u) == diam);
            match (far.next(), far.next()) {
                (Some(u), None) => Some(u),
                _ => None,
            }
        })
        .collect()
}

pub fn classify_evenness(g: &Graph) -> Evenness {
    let Some(anti) = antipodal_map(g) else {
        return Evenness::NotEven;
    };
    let harmonic = g.edges().all(|(u, v)| g.has_edge(anti[u], anti[v]));
    if harmonic {
        Evenness::HarmonicEven
    } else {
        Evenness::Even
    }
}

/// In an even graph of diameter `d`, adjacent `u, v` satisfy
/// `d(u, v') = d - 1`. `None` when `g` is not even.
pub fn check_even_neighbor_antipode(g: &Graph) -> Option<bool> {
    let anti = antipodal_map(g)?;
    let d = g.distances();
    let diam = d.diameter().ok()?;
    Some(
        g.edges()
            .all(|(u, v)| d.hops(u, anti[v]) + 1 == diam && d.hops(v, anti[u]) + 1 == diam),
    )
}

/// Every pair at distance `i` can be stretched to `i + 1` by moving the
/// second vertex one step. Requires `0 <= i <= rad`.
pub fn check_distance_expansion(g: &Graph, i: u32) -> Result<bool, GraphError> {
    let d = g.distances();
    let rad = d.radius()?;
    if i > rad {
        return Err(GraphError::InvalidParam(format!(
            "i = {i} exceeds the radius {rad}"
        )));
    }
    let n = g.n();
    Ok((0..n).all(|x| {
        (0..n)
            .filter(|&y| d.hops(x, y) == i)
            .all(|y| g.neighbors(y).iter().any(|&z| d.hops(x, z) == i + 1))
    }))
}

/// For every pair at distance `rad` and every step of the first vertex,
/// the second can step to restore distance `rad`.
pub fn check_radius_pair_condition(g: &Graph) -> Result<bool, GraphError> {
    let d = g.distances();
    let rad = d.radius()?;
    let n = g.n();
    let closed = |v: usize| std::iter::once(v).chain(g.neighbors(v).iter().copied());
    Ok((0..n).all(|x| {
        (0..n)
            .filter(|&y| d.hops(x, y) == rad)
            .all(|y| closed(x).all(|xp| closed(y).any(|yp| d.hops(xp, yp) == rad)))
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

/// The search budget ran out before an answer was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetExhausted;

struct SwapSearch<'a> {
    n: usize,
    dist: &'a [u32],
    order: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
    profile: &'a [Vec<u32>],
    budget: &'a mut u64,
}

impl SwapSearch<'_> {
    fn d(&self, a: usize, b: usize) -> u32 {
        self.dist[a * self.n + b]
    }

    fn fits(&self, x: usize, y: usize, depth: usize) -> bool {
        self.profile[x] == self.profile[y]
            && self.order[..depth]
                .iter()
                .all(|&z| self.d(x, z) == self.d(y, self.image[z]))
    }

    fn extend(&mut self, depth: usize) -> Result<bool, BudgetExhausted> {
        if depth == self.n {
            return Ok(true);
        }
        let x = self.order[depth];
        if self.image[x] != usize::MAX {
            // Pre-assigned (the swapped pair), already checked.
            return self.extend(depth + 1);
        }
        for y in 0..self.n {
            if self.used[y] {
                continue;
            }
            if *self.budget == 0 {
                return Err(BudgetExhausted);
            }
            *self.budget -= 1;
            if !self.fits(x, y, depth) {
                continue;
            }
            self.image[x] = y;
            self.used[y] = true;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.image[x] = usize::MAX;
            self.used[y] = false;
        }
        Ok(false)
    }
}

/// Sorted distance multiset of each vertex; automorphisms preserve it.
fn distance_profiles(n: usize, dist: &[u32]) -> Vec<Vec<u32>> {
    (0..n)
        .map(|v| {
            let mut p = dist[v * n..(v + 1) * n].to_vec();
            p.sort_unstable();
            p
        })
        .collect()
}

fn all_distances(g: &Graph) -> Vec<u32> {
    let d = g.distances();
    let n = g.n();
    let mut out = Vec::with_capacity(n * n);
    for u in 0..n {
        out.extend((0..n).map(|v| d.hops(u, v)));
    }
    out
}

/// An automorphism exchanging `u` and `v`, found by backtracking over
/// distance-preserving partial maps.
pub fn swapping_automorphism(
    g: &Graph,
    u: usize,
    v: usize,
    budget: &mut u64,
) -> Result<Option<Vec<usize>>, BudgetExhausted> {
    let n = g.n();
    let dist = all_distances(g);
    let profile = distance_profiles(n, &dist);
    swap_search(g, &dist, &profile, u, v, budget)
}

fn swap_search(
    g: &Graph,
    dist: &[u32],
    profile: &[Vec<u32>],
    u: usize,
    v: usize,
    budget: &mut u64,
) -> Result<Option<Vec<usize>>, BudgetExhausted> {
    let n = g.n();
    if profile[u] != profile[v] {
        return Ok(None);
    }
    // Assign u, v first, then the rest in BFS order from u so each new
    // vertex has an assigned neighbour constraining it.
    let mut order = vec![u];
    if v != u {
        order.push(v);
    }
    let mut seen = vec![false; n];
    seen[u] = true;
    seen[v] = true;
    let mut queue: VecDeque<usize> = order.iter().copied().collect();
    while order.len() < n {
        let Some(x) = queue.pop_front() else {
            let next = (0..n).find(|&x| !seen[x]).expect("some vertex unseen");
            seen[next] = true;
            order.push(next);
            queue.push_back(next);
            continue;
        };
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                order.push(y);
                queue.push_back(y);
            }
        }
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    image[u] = v;
    image[v] = u;
    used[u] = true;
    used[v] = true;
    if dist[u * n + v] != dist[v * n + u] {
        return Ok(None);
    }
    let mut search = SwapSearch {
        n,
        dist,
        order,
        image,
        used,
        profile,
        budget,
    };
    Ok(search.extend(0)?.then_some(search.image))
}

/// Whether every pair of vertices is swapped by some automorphism.
/// `budget` bounds the total number of candidate extensions tried.
pub fn is_generously_transitive(g: &Graph, budget: u64) -> Decision {
    let n = g.n();
    let dist = all_distances(g);
    let profile = distance_profiles(n, &dist);
    let mut left = budget;
    for u in 0..n {
        for v in u + 1..n {
            match swap_search(g, &dist, &profile, u, v, &mut left) {
                Ok(Some(_)) => {}
                Ok(None) => return Decision::No,
                Err(BudgetExhausted) => return Decision::Unknown,
            }
        }
    }
    Decision::Yes
}

/// Checks the Cartesian bounds, the Cartesian equality when a factor has
/// rc = rad - 1, the strong-product formula, and (for factors with at least
/// two vertices) the lexicographic formula for `G ∘ H`.
pub fn check_product_theorems(
    g: &Graph,
    h: &Graph,
    guard: SizeGuard,
) -> Result<Vec<TheoremReport>, GraphError> {
    let factor = |x: &Graph| rc_and_radius(x).map_err(|_| GraphError::NotConnected);
    let (rc_g, rad_g) = factor(g)?;
    let (rc_h, rad_h) = factor(h)?;
    let inputs = format!("G: n={} m={}; H: n={} m={}", g.n(), g.m(), h.n(), h.m());
    let base = [
        ("rc_g", Some(rc_g)),
        ("rad_g", Some(rad_g)),
        ("rc_h", Some(rc_h)),
        ("rad_h", Some(rad_h)),
    ];
    let with = |extra: &[(&'static str, Option<u32>)]| {
        base.iter()
            .copied()
            .chain(extra.iter().copied())
            .collect::<Vec<_>>()
    };
    let mut reports = Vec::new();

    let cart = product(ProductKind::Cartesian, g, h, guard)?;
    let (rc_cart, _) = factor(&cart)?;
    // With a one-vertex factor the product is a copy of the other factor,
    // and the robber cannot keep away from the cop in K_1, so the +1 in the
    // lower bound only applies to nontrivial factors.
    let nontrivial = g.n() >= 2 && h.n() >= 2;
    let lower = rc_g + rc_h + u32::from(nontrivial);
    let upper = (rad_g + rc_h).min(rad_h + rc_g);
    let graphs = [("G", g), ("H", h)];
    reports.push(TheoremReport::new(
        "cartesian-bounds",
        inputs.clone(),
        format!("{lower} <= rc(G□H) <= {upper}"),
        with(&[("rc_product", Some(rc_cart))]),
        lower <= rc_cart && rc_cart <= upper,
        &graphs,
    ));
    if nontrivial && (rc_g + 1 == rad_g || rc_h + 1 == rad_h) {
        reports.push(TheoremReport::new(
            "cartesian-coincidence",
            inputs.clone(),
            format!("rc(G□H) = {lower}"),
            with(&[("rc_product", Some(rc_cart))]),
            rc_cart == lower,
            &graphs,
        ));
    }

    let strong = product(ProductKind::Strong, g, h, guard)?;
    let (rc_strong, _) = factor(&strong)?;
    let expected = rc_g.max(rc_h);
    reports.push(TheoremReport::new(
        "strong-product",
        inputs.clone(),
        format!("rc(G⊠H) = {expected}"),
        with(&[("rc_product", Some(rc_strong))]),
        rc_strong == expected,
        &graphs,
    ));

    if nontrivial {
        let lex = product(ProductKind::Lexicographic, g, h, guard)?;
        let (rc_lex, _) = factor(&lex)?;
        let expected = if rc_g >= 1 { rc_g } else { rc_h.min(1) };
        reports.push(TheoremReport::new(
            "lexicographic-product",
            inputs,
            format!("rc(G∘H) = {expected}"),
            with(&[("rc_product", Some(rc_lex))]),
            rc_lex == expected,
            &graphs,
        ));
    }
    Ok(reports)
}
