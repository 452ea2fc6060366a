//! Seeded property suites over random and structured instances. Each suite
//! returns one [`TheoremReport`] per checked statement and instance, in a
//! fixed order regardless of how the work was scheduled.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::GraphError;
use crate::game::{naive_rc_oracle, Game, SearchMode};
use crate::generators::{
    circulant, complete, cycle, hypercube, named_instance, path, random_connected_gnp,
    random_tree_plus_edges, FamilySpec, SizeGuard, CUBIC_VT_24_6,
};
use crate::graph::Graph;
use crate::outerplanar::{
    inner_faces, random_outerplanar, rc_outerplanar_formula, validate_embedding,
};
use crate::products::{product, ProductKind};
use crate::theory::{
    check_distance_expansion, check_even_neighbor_antipode, check_product_theorems,
    check_radius_pair_condition, check_retract_monotonicity, classify_evenness, corner_fold,
    is_generously_transitive, layer_projection, rc_and_radius, Decision, Evenness, Layer,
    TheoremReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Bounds,
    Retracts,
    Evenness,
    Products,
    Outerplanar,
    Families,
    TransitiveSweep,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Bounds,
        Suite::Retracts,
        Suite::Evenness,
        Suite::Products,
        Suite::Outerplanar,
        Suite::Families,
        Suite::TransitiveSweep,
    ];

    fn salt(self) -> u64 {
        self as u64 + 1
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Bounds => "bounds",
            Suite::Retracts => "retracts",
            Suite::Evenness => "evenness",
            Suite::Products => "products",
            Suite::Outerplanar => "outerplanar",
            Suite::Families => "families",
            Suite::TransitiveSweep => "transitive-sweep",
        })
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub trials: usize,
    pub seed: u64,
    /// Largest random instance (vertices, or product order for `products`).
    pub max_n: usize,
    pub guard: SizeGuard,
}

impl SuiteConfig {
    /// Defaults used by the command line for `suite`.
    pub fn defaults(suite: Suite) -> SuiteConfig {
        let (trials, max_n) = match suite {
            Suite::Bounds => (200, 14),
            Suite::Retracts => (100, 12),
            Suite::Evenness => (100, 12),
            Suite::Products => (50, 100),
            Suite::Outerplanar => (200, 14),
            Suite::Families | Suite::TransitiveSweep => (0, 14),
        };
        SuiteConfig {
            trials,
            seed: 1,
            max_n,
            guard: SizeGuard::DEFAULT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteSummary {
    pub suite: Suite,
    /// Gated checks: any failure is a counterexample.
    pub reports: Vec<TheoremReport>,
    /// Exploratory data, never gated.
    pub observations: Vec<TheoremReport>,
}

impl SuiteSummary {
    /// `(passed, total)` per statement id.
    pub fn pass_counts(&self) -> BTreeMap<&'static str, (usize, usize)> {
        let mut out: BTreeMap<&'static str, (usize, usize)> = BTreeMap::new();
        for r in &self.reports {
            let e = out.entry(r.theorem).or_default();
            e.0 += usize::from(r.pass);
            e.1 += 1;
        }
        out
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremReport> {
        self.reports.iter().filter(|r| !r.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }
}

/// Independent RNG per trial so results do not depend on scheduling.
fn trial_rng(cfg: &SuiteConfig, suite: Suite, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(suite.salt() << 32 | trial as u64);
    rng
}

/// A random connected graph on `lo..=hi` vertices: alternately a dense
/// G(n, p) sample and a sparse tree with a few extra edges.
pub fn random_connected(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Result<Graph, GraphError> {
    let n = rng.gen_range(lo..=hi.max(lo));
    let seed = rng.gen();
    if rng.gen_bool(0.5) {
        let p = rng.gen_range(0.25..0.7);
        random_connected_gnp(n, p, seed)
    } else {
        let extra = rng.gen_range(0..=n / 2 + 1);
        random_tree_plus_edges(n, extra, seed)
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteSummary, GraphError> {
    let (reports, observations) = match suite {
        Suite::Bounds => (trials(cfg, suite, bounds_trial)?, Vec::new()),
        Suite::Retracts => (trials(cfg, suite, retract_trial)?, Vec::new()),
        Suite::Evenness => (evenness_suite(cfg)?, Vec::new()),
        Suite::Products => (trials(cfg, suite, product_trial)?, Vec::new()),
        Suite::Outerplanar => (trials(cfg, suite, outerplanar_trial)?, Vec::new()),
        Suite::Families => (families_suite(cfg)?, Vec::new()),
        Suite::TransitiveSweep => (Vec::new(), transitive_sweep(cfg)?),
    };
    Ok(SuiteSummary {
        suite,
        reports,
        observations,
    })
}

fn trials(
    cfg: &SuiteConfig,
    suite: Suite,
    trial: fn(&SuiteConfig, &mut ChaCha8Rng, usize) -> Result<Vec<TheoremReport>, GraphError>,
) -> Result<Vec<TheoremReport>, GraphError> {
    let per_trial: Vec<Result<Vec<TheoremReport>, GraphError>> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| trial(cfg, &mut trial_rng(cfg, suite, t), t))
        .collect();
    let mut out = Vec::new();
    for r in per_trial {
        out.extend(r?);
    }
    Ok(out)
}

fn game_of(g: &Graph) -> Result<Game<'_>, GraphError> {
    Game::new(g).map_err(|_| GraphError::NotConnected)
}

/// Girth and radius bounds, search-mode agreement, monotonicity in `k`, and
/// (for `n <= 10`) agreement with the reference oracle.
fn bounds_trial(
    cfg: &SuiteConfig,
    rng: &mut ChaCha8Rng,
    t: usize,
) -> Result<Vec<TheoremReport>, GraphError> {
    let g = random_connected(rng, 2, cfg.max_n)?;
    let game = game_of(&g)?;
    let id = format!("trial {t}: n={} m={}", g.n(), g.m());
    let linear = game.radius_capture_number(SearchMode::Linear);
    let binary = game.radius_capture_number(SearchMode::Binary);
    let (lb, ub) = game.rc_bounds();
    let graphs = [("G", &g)];
    let mut out = vec![
        TheoremReport::new(
            "rc-bounds",
            id.clone(),
            format!("{lb} <= rc <= {ub}"),
            [
                ("rc", Some(linear)),
                ("lb", Some(lb)),
                ("ub", Some(ub)),
                ("girth", Some(g.girth())),
            ],
            lb <= linear && linear <= ub,
            &graphs,
        ),
        TheoremReport::new(
            "search-modes-agree",
            id.clone(),
            "linear = binary",
            [("linear", Some(linear)), ("binary", Some(binary))],
            linear == binary,
            &graphs,
        ),
    ];
    let diam = game.diameter();
    let wins: Vec<bool> = (0..=diam).map(|k| game.is_cop_win(k)).collect();
    let first = wins.iter().position(|&w| w);
    let monotone = first.is_some_and(|f| wins[f..].iter().all(|&w| w));
    out.push(TheoremReport::new(
        "cop-win-monotone-in-k",
        id.clone(),
        "cop-win at k implies cop-win at k+1",
        [
            ("first_cop_win", first.map(|f| f as u32)),
            ("diam", Some(diam)),
        ],
        monotone && first == Some(linear as usize),
        &graphs,
    ));
    if g.n() <= 10 {
        let oracle = naive_rc_oracle(&g);
        out.push(TheoremReport::new(
            "oracle-agrees",
            id,
            "solver = fixed-point reference",
            [("solver", Some(linear)), ("oracle", oracle)],
            oracle == Some(linear),
            &graphs,
        ));
    }
    Ok(out)
}

/// All corner pairs `(u, v)` with `N[u] ⊆ N[v]`.
fn corners(g: &Graph) -> Vec<(usize, usize)> {
    (0..g.n())
        .flat_map(|u| {
            g.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| g.closed_nbhd_subset(u, v))
                .map(move |v| (u, v))
        })
        .collect()
}

/// Random connected factor on `lo..=hi` vertices, drawn from a mix of
/// structured and random graphs.
fn random_factor(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Result<Graph, GraphError> {
    let hi = hi.max(lo);
    match rng.gen_range(0..5) {
        0 if hi >= 3 => cycle(rng.gen_range(lo.max(3)..=hi)),
        1 => path(rng.gen_range(lo..=hi)),
        2 => complete(rng.gen_range(lo..=hi.min(5).max(lo))),
        _ => random_connected(rng, lo, hi),
    }
}

/// Corner folds on even trials, product-layer projections on odd ones.
fn retract_trial(
    cfg: &SuiteConfig,
    rng: &mut ChaCha8Rng,
    t: usize,
) -> Result<Vec<TheoremReport>, GraphError> {
    let as_graph = |e: crate::error::RetractionError| match e {
        crate::error::RetractionError::Graph(g) => g,
        other => GraphError::InvalidParam(other.to_string()),
    };
    let report = if t.is_multiple_of(2) {
        let mut g = random_connected(rng, 3, cfg.max_n)?;
        let mut found = corners(&g);
        if found.is_empty() {
            // Hang a leaf so there is something to fold.
            let n = g.n();
            let at = rng.gen_range(0..n);
            let edges: Vec<_> = g.edges().chain([(at, n)]).collect();
            g = Graph::new(n + 1, edges)?;
            found = corners(&g);
        }
        let &(u, v) = found.choose(rng).expect("a leaf is a corner");
        let r = corner_fold(&g, u, v).map_err(as_graph)?;
        check_retract_monotonicity(&g, &r).map_err(as_graph)?
    } else {
        let budget = cfg.max_n.max(4);
        let a = random_factor(rng, 2, budget / 2)?;
        let b = random_factor(rng, 2, (budget / a.n()).max(2))?;
        let kind = *ProductKind::ALL.choose(rng).expect("nonempty");
        let p = product(kind, &a, &b, cfg.guard)?;
        let layer = if kind != ProductKind::Lexicographic && rng.gen_bool(0.5) {
            Layer::H {
                a: rng.gen_range(0..a.n()),
            }
        } else {
            Layer::G {
                b: rng.gen_range(0..b.n()),
            }
        };
        let r = layer_projection(kind, a.n(), b.n(), layer).map_err(as_graph)?;
        check_retract_monotonicity(&p, &r).map_err(as_graph)?
    };
    Ok(vec![report])
}

fn product_trial(
    cfg: &SuiteConfig,
    rng: &mut ChaCha8Rng,
    _t: usize,
) -> Result<Vec<TheoremReport>, GraphError> {
    let cap = cfg.max_n.max(4);
    let g = random_factor(rng, 2, (cap / 2).min(12))?;
    let h = random_factor(rng, 2, (cap / g.n()).clamp(2, 12))?;
    check_product_theorems(&g, &h, cfg.guard)
}

fn outerplanar_trial(
    cfg: &SuiteConfig,
    rng: &mut ChaCha8Rng,
    t: usize,
) -> Result<Vec<TheoremReport>, GraphError> {
    let n = rng.gen_range(3..=cfg.max_n.max(3));
    let p = rng.gen_range(0.0..=1.0);
    let (g, e) = random_outerplanar(n, p, rng.gen())?;
    validate_embedding(&g, &e).map_err(|err| GraphError::InvalidParam(err.to_string()))?;
    let faces = inner_faces(&e);
    let predicted = rc_outerplanar_formula(&e);
    let (rc, _) = rc_and_radius(&g).map_err(|_| GraphError::NotConnected)?;
    let id = format!("trial {t}: n={n} chords={}", e.chords.len());
    let graphs = [("G", &g)];
    Ok(vec![
        TheoremReport::new(
            "outerplanar-longest-face",
            id.clone(),
            format!("rc = floor({}/2) - 1 = {predicted}", faces.max_size()),
            [
                ("rc", Some(rc)),
                ("longest_face", Some(faces.max_size() as u32)),
            ],
            rc == predicted,
            &graphs,
        ),
        TheoremReport::new(
            "face-accounting",
            id,
            "sum of face sizes = n + 2 chords, faces = chords + 1",
            [
                ("faces", Some(faces.faces.len() as u32)),
                ("size_sum", Some(faces.sizes().iter().sum::<usize>() as u32)),
            ],
            faces.faces.len() == e.chords.len() + 1
                && faces.sizes().iter().sum::<usize>() == n + 2 * e.chords.len(),
            &graphs,
        ),
    ])
}

/// Classification of the standard even families, then rc and the
/// neighbour-antipode distance on every even graph among the structured
/// instances and `trials` random ones.
fn evenness_suite(cfg: &SuiteConfig) -> Result<Vec<TheoremReport>, GraphError> {
    let mut named: Vec<(String, Graph, Option<Evenness>)> = Vec::new();
    for k in 2..=10 {
        named.push((
            format!("C{}", 2 * k),
            cycle(2 * k)?,
            Some(Evenness::HarmonicEven),
        ));
    }
    for k in [3, 5, 7, 9] {
        named.push((format!("C{k}"), cycle(k)?, Some(Evenness::NotEven)));
    }
    for d in 1..=6 {
        named.push((
            format!("Q{d}"),
            hypercube(d, cfg.guard)?,
            Some(Evenness::HarmonicEven),
        ));
    }
    named.push(("P3".into(), path(3)?, Some(Evenness::NotEven)));
    for (a, b) in [(4, 4), (4, 6), (6, 6), (4, 8)] {
        let g = product(ProductKind::Cartesian, &cycle(a)?, &cycle(b)?, cfg.guard)?;
        named.push((format!("C{a}xC{b}"), g, None));
    }
    named.push((CUBIC_VT_24_6.into(), named_instance(CUBIC_VT_24_6)?, None));
    for t in 0..cfg.trials {
        let g = random_connected(&mut trial_rng(cfg, Suite::Evenness, t), 2, cfg.max_n)?;
        named.push((format!("random {t}"), g, None));
    }

    let per: Vec<Result<Vec<TheoremReport>, GraphError>> = named
        .par_iter()
        .map(|(id, g, expected)| {
            let class = classify_evenness(g);
            let graphs = [("G", g)];
            let mut out = Vec::new();
            if let Some(want) = expected {
                out.push(TheoremReport::new(
                    "evenness-classification",
                    format!("{id} classified {class}"),
                    format!("{want}"),
                    [],
                    class == *want,
                    &graphs,
                ));
            }
            if class != Evenness::NotEven {
                let ok = check_even_neighbor_antipode(g) == Some(true);
                out.push(TheoremReport::new(
                    "even-neighbour-antipode",
                    id.clone(),
                    "d(u, v') = diam - 1 for every edge uv",
                    [],
                    ok,
                    &graphs,
                ));
            }
            if class == Evenness::HarmonicEven {
                let (rc, rad) = rc_and_radius(g).map_err(|_| GraphError::NotConnected)?;
                out.push(TheoremReport::new(
                    "harmonic-even-rc",
                    id.clone(),
                    "rc = rad - 1",
                    [("rc", Some(rc)), ("rad", Some(rad))],
                    rc == rad.saturating_sub(1),
                    &graphs,
                ));
            }
            Ok(out)
        })
        .collect();
    flatten(per)
}

fn flatten(
    per: Vec<Result<Vec<TheoremReport>, GraphError>>,
) -> Result<Vec<TheoremReport>, GraphError> {
    let mut out = Vec::new();
    for r in per {
        out.extend(r?);
    }
    Ok(out)
}

/// Budget for generous-transitivity searches in the suites.
pub const SWAP_BUDGET: u64 = 1 << 22;

/// Family members exercised by the `families` suite.
pub fn family_instances() -> Vec<FamilySpec> {
    let mut specs: Vec<FamilySpec> = (3..=24).map(FamilySpec::Cycle).collect();
    specs.extend((1..=7).map(FamilySpec::Hypercube));
    specs.extend([(2, 3), (2, 4), (3, 3), (2, 5)].map(|(d, q)| FamilySpec::Hamming { d, q }));
    specs.extend(
        [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3)].map(|(n, k)| FamilySpec::Johnson { n, k }),
    );
    specs.extend(generalized_johnson_instances(70));
    specs.extend((1..=5).map(|n| FamilySpec::Sierpinski { n, k: 3 }));
    specs.extend([
        FamilySpec::Sierpinski { n: 3, k: 4 },
        FamilySpec::Sierpinski { n: 4, k: 4 },
    ]);
    specs.push(FamilySpec::Named(CUBIC_VT_24_6.into()));
    specs
}

/// Every `J(n, k, i)` with `n > k > i >= 0` and `C(n, k) <= max_order`.
/// Some of them are disconnected.
pub fn generalized_johnson_instances(max_order: u64) -> Vec<FamilySpec> {
    // C(n, j) grows with j up to n/2, so stop as soon as it passes the cap.
    let choose = |n: u64, k: u64| {
        let mut acc = 1u64;
        for j in 0..k.min(n - k) {
            acc = acc * (n - j) / (j + 1);
            if acc > max_order {
                break;
            }
        }
        acc
    };
    let mut out = Vec::new();
    for n in 2..=max_order as usize {
        for k in 1..n {
            if choose(n as u64, k as u64) > max_order {
                continue;
            }
            for i in 0..k {
                out.push(FamilySpec::GeneralizedJohnson { n, k, i });
            }
        }
    }
    out
}

/// Closed forms and computed values for the standard families, plus the
/// generous-transitivity, radius-pair and distance-expansion implications
/// wherever they can be checked.
fn families_suite(cfg: &SuiteConfig) -> Result<Vec<TheoremReport>, GraphError> {
    let specs = family_instances();
    let per: Vec<Result<Vec<TheoremReport>, GraphError>> = specs
        .par_iter()
        .map(|spec| {
            let g = spec.build(cfg.guard)?;
            if !g.is_connected() {
                return Ok(Vec::new());
            }
            family_reports(&spec.to_string(), spec, &g)
        })
        .collect();
    flatten(per)
}

pub fn family_reports(
    id: &str,
    spec: &FamilySpec,
    g: &Graph,
) -> Result<Vec<TheoremReport>, GraphError> {
    let (rc, rad) = rc_and_radius(g).map_err(|_| GraphError::NotConnected)?;
    let graphs = [("G", g)];
    let base = [("rc", Some(rc)), ("rad", Some(rad))];
    let mut out = Vec::new();
    if let Some(p) = spec.predicted_rc(g) {
        out.push(TheoremReport::new(
            "family-closed-form",
            id,
            format!("rc = {} = {}", p.rule, p.rc),
            base,
            rc == p.rc,
            &graphs,
        ));
    }
    if let Some(known) = spec.known_value() {
        out.push(TheoremReport::new(
            "family-computed-value",
            id,
            format!("rc = {known}"),
            base,
            rc == known,
            &graphs,
        ));
    }
    out.extend(implication_reports(id, g, rc, rad)?);
    Ok(out)
}

/// Sufficient conditions for `rc = rad - 1` and for `rc >= i`, each
/// cross-checked against the solver whenever the condition holds.
pub fn implication_reports(
    id: &str,
    g: &Graph,
    rc: u32,
    rad: u32,
) -> Result<Vec<TheoremReport>, GraphError> {
    let graphs = [("G", g)];
    let base = [("rc", Some(rc)), ("rad", Some(rad))];
    let mut out = Vec::new();
    if check_radius_pair_condition(g)? {
        out.push(TheoremReport::new(
            "radius-pair-condition",
            id,
            "rc = rad - 1",
            base,
            rc == rad.saturating_sub(1),
            &graphs,
        ));
    }
    let expanding = (0..=rad)
        .filter(|&i| check_distance_expansion(g, i) == Ok(true))
        .max();
    if let Some(i) = expanding {
        out.push(TheoremReport::new(
            "distance-expansion",
            id,
            format!("rc >= {i}"),
            [("rc", Some(rc)), ("i", Some(i))],
            rc >= i,
            &graphs,
        ));
    }
    if g.n() <= 12 {
        let decision = is_generously_transitive(g, SWAP_BUDGET);
        if decision == Decision::Yes {
            out.push(TheoremReport::new(
                "generous-transitivity",
                id,
                "rc = rad - 1",
                base,
                rc == rad.saturating_sub(1),
                &graphs,
            ));
        }
    }
    Ok(out)
}

/// rc against rad/2 on small circulants and the cubic instance. Reported
/// only: `pass` records whether `2 rc >= rad`.
fn transitive_sweep(cfg: &SuiteConfig) -> Result<Vec<TheoremReport>, GraphError> {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for n in 5..=cfg.max_n.max(5) {
        let half = n / 2;
        for s2 in 2..=half {
            for s3 in (s2 + 1)..=half + 1 {
                let steps: Vec<usize> = if s3 > half {
                    vec![1, s2]
                } else {
                    vec![1, s2, s3]
                };
                graphs.push((
                    format!(
                        "circulant-{n}-{}",
                        steps
                            .iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join("_")
                    ),
                    circulant(n, &steps)?,
                ));
            }
        }
    }
    graphs.push((CUBIC_VT_24_6.into(), named_instance(CUBIC_VT_24_6)?));
    let per: Vec<Result<Vec<TheoremReport>, GraphError>> = graphs
        .par_iter()
        .map(|(id, g)| {
            let (rc, rad) = rc_and_radius(g).map_err(|_| GraphError::NotConnected)?;
            Ok(vec![TheoremReport::new(
                "rc-vs-half-radius",
                id.clone(),
                "rc >= rad / 2 (open question)",
                [("rc", Some(rc)), ("rad", Some(rad))],
                2 * rc >= rad,
                &[("G", g)],
            )])
        })
        .collect();
    flatten(per)
}
