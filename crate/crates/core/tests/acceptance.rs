//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use radcap::game::{
    certify_cop_strategy, certify_robber_strategy, naive_rc_oracle, simulate, GameState, Outcome,
    RandomPlayer, Role, Turn,
};
use radcap::generators::{
    cycle, generalized_johnson, hamming, hypercube, johnson, named_instance, path, sierpinski,
    FamilySpec, SizeGuard, CUBIC_VT_24_6,
};
use radcap::suites::{
    family_instances, generalized_johnson_instances, random_connected, run_suite, Suite,
    SuiteConfig,
};
use radcap::theory::{
    check_distance_expansion, check_radius_pair_condition, classify_evenness, Evenness,
};
use radcap::{Game, Graph, SearchMode};

type Verdict = Result<String, String>;

const G: SizeGuard = SizeGuard::DEFAULT;

/// rc in both search modes, which must agree.
fn rc(g: &Graph) -> Result<u32, String> {
    let game = Game::new(g).map_err(|e| e.to_string())?;
    let lin = game.radius_capture_number(SearchMode::Linear);
    let bin = game.radius_capture_number(SearchMode::Binary);
    if lin != bin {
        return Err(format!("linear {lin} != binary {bin}"));
    }
    Ok(lin)
}

/// Checks `rc(g) == want` for every case, in parallel, reporting the first
/// mismatch.
fn expect_all(cases: Vec<(String, Graph, u32)>) -> Verdict {
    let count = cases.len();
    let bad: Vec<String> = cases
        .par_iter()
        .filter_map(|(id, g, want)| match rc(g) {
            Ok(got) if got == *want => None,
            Ok(got) => Some(format!("{id}: rc {got}, expected {want}")),
            Err(e) => Some(format!("{id}: {e}")),
        })
        .collect();
    match bad.first() {
        None => Ok(format!("{count} instances")),
        Some(first) => Err(format!("{} of {count} wrong; first: {first}", bad.len())),
    }
}

fn cycles() -> Verdict {
    expect_all(
        (3..=24)
            .map(|n| (format!("C{n}"), cycle(n).unwrap(), (n / 2 - 1) as u32))
            .collect(),
    )
}

fn hypercubes() -> Verdict {
    expect_all(
        (1..=7)
            .map(|d| (format!("Q{d}"), hypercube(d, G).unwrap(), d - 1))
            .collect(),
    )
}

fn hamming_graphs() -> Verdict {
    expect_all(
        [(2, 3), (2, 4), (3, 3), (2, 5)]
            .into_iter()
            .map(|(d, q)| (format!("H({d},{q})"), hamming(d, q, G).unwrap(), d - 1))
            .collect(),
    )
}

fn johnson_graphs() -> Verdict {
    expect_all(
        [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3)]
            .into_iter()
            .map(|(n, k)| {
                (
                    format!("J({n},{k})"),
                    johnson(n, k, G).unwrap(),
                    k as u32 - 1,
                )
            })
            .collect(),
    )
}

fn generalized_johnson_graphs() -> Verdict {
    let mut cases = Vec::new();
    let mut disconnected = 0;
    for spec in generalized_johnson_instances(70) {
        let FamilySpec::GeneralizedJohnson { n, k, i } = spec else {
            unreachable!()
        };
        let g = generalized_johnson(n, k, i, G).unwrap();
        match g.distances().radius() {
            Ok(rad) => cases.push((format!("J({n},{k},{i})"), g, rad - 1)),
            Err(_) => disconnected += 1,
        }
    }
    expect_all(cases).map(|s| format!("{s} connected, {disconnected} disconnected skipped"))
}

fn sierpinski_k3() -> Verdict {
    expect_all(
        (1..=5u32)
            .map(|n| {
                let want = if n >= 3 {
                    3 * (1 << (n - 2)) - 1
                } else {
                    (1 << n) - 2
                };
                (format!("S({n},3)"), sierpinski(n, 3, G).unwrap(), want)
            })
            .collect(),
    )
}

fn sierpinski_k4() -> Verdict {
    let mut notes = Vec::new();
    for (n, want_rc, want_rad) in [(3, 5, 7), (4, 11, 14)] {
        let g = sierpinski(n, 4, G).unwrap();
        let rad = g.distances().radius().unwrap();
        let got = rc(&g)?;
        if (got, rad) != (want_rc, want_rad) {
            return Err(format!(
                "S({n},4): rc {got} rad {rad}, expected rc {want_rc} rad {want_rad}"
            ));
        }
        notes.push(format!("S({n},4) rc {got} rad {rad}"));
    }
    Ok(notes.join(", "))
}

fn cubic_instance() -> Verdict {
    let g = named_instance(CUBIC_VT_24_6).unwrap();
    let rad = g.distances().radius().unwrap();
    let got = rc(&g)?;
    let expands = check_distance_expansion(&g, 3).map_err(|e| e.to_string())?;
    let pair = check_radius_pair_condition(&g).map_err(|e| e.to_string())?;
    if (g.n(), rad, got, expands, pair) == (24, 5, 3, true, false) {
        Ok("n 24, rad 5, rc 3, expansion at 3 holds, radius-pair condition fails".into())
    } else {
        Err(format!(
            "n {} rad {rad} rc {got} expansion {expands} radius-pair {pair}",
            g.n()
        ))
    }
}

fn suite(suite: Suite, trials: usize, max_n: usize, seed: u64) -> Verdict {
    let cfg = SuiteConfig {
        trials,
        seed,
        max_n,
        ..SuiteConfig::defaults(suite)
    };
    let summary = run_suite(suite, &cfg).map_err(|e| e.to_string())?;
    let counts = summary
        .pass_counts()
        .into_iter()
        .map(|(id, (p, t))| format!("{id} {p}/{t}"))
        .collect::<Vec<_>>()
        .join(", ");
    let verdict = match summary.failures().next() {
        None => Ok(counts),
        Some(f) => Err(format!("{counts}; first counterexample: {}", f.to_json())),
    };
    verdict
}

fn oracle_equivalence() -> Verdict {
    let bad: Vec<String> = (0..100u64)
        .into_par_iter()
        .filter_map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x0AC1E ^ t);
            let g = random_connected(&mut rng, 2, 10).unwrap();
            let game = Game::new(&g).unwrap();
            let lin = game.radius_capture_number(SearchMode::Linear);
            let bin = game.radius_capture_number(SearchMode::Binary);
            let naive = naive_rc_oracle(&g);
            (naive != Some(lin) || lin != bin)
                .then(|| format!("trial {t}: oracle {naive:?} linear {lin} binary {bin}"))
        })
        .collect();
    match bad.first() {
        None => Ok("100 graphs, no disagreements".into()),
        Some(b) => Err(format!("{} disagreements; first {b}", bad.len())),
    }
}

fn evenness() -> Verdict {
    let mut wrong = Vec::new();
    for k in 2..=10 {
        if classify_evenness(&cycle(2 * k).unwrap()) != Evenness::HarmonicEven {
            wrong.push(format!("C{}", 2 * k));
        }
    }
    for d in 1..=6 {
        if classify_evenness(&hypercube(d, G).unwrap()) != Evenness::HarmonicEven {
            wrong.push(format!("Q{d}"));
        }
    }
    if classify_evenness(&path(3).unwrap()) != Evenness::NotEven {
        wrong.push("P3".into());
    }
    if !wrong.is_empty() {
        return Err(format!("misclassified: {}", wrong.join(" ")));
    }
    suite(Suite::Evenness, 100, 12, 14)
}

/// Certificates for one graph: the cop strategy at `rc` captures within
/// `ceil(rank / 2)` moves against every robber, and below `rc` the robber
/// strategy keeps `d >= rc + 1` after its moves and `d >= rc` after cop
/// moves against every cop, and survives `4 n^2` moves in simulation.
fn certify(id: &str, g: &Graph, random_cops: u64) -> Result<(), String> {
    let game = Game::new(g).map_err(|e| e.to_string())?;
    let k = game.radius_capture_number(SearchMode::Binary);
    let win = game.solve(k);
    let cop = game.cop_strategy(&win).map_err(|e| format!("{id}: {e}"))?;
    let cert = certify_cop_strategy(&game, k, &cop).map_err(|e| format!("{id}: {e}"))?;
    for &(r, moves) in &cert.worst_case {
        let bound = win
            .rank(GameState::new(cert.start, r, Turn::CopToMove))
            .expect("start wins against every placement")
            .div_ceil(2);
        if moves > bound {
            return Err(format!(
                "{id}: robber at {r} lasts {moves} cop moves, bound {bound}"
            ));
        }
    }
    if k == 0 {
        return Ok(());
    }
    let below = k - 1;
    let lose = game.solve(below);
    let robber = game
        .robber_strategy(&lose)
        .map_err(|e| format!("{id}: {e}"))?;
    let rc_cert =
        certify_robber_strategy(&game, below, &robber).map_err(|e| format!("{id}: {e}"))?;
    if rc_cert.min_after_robber < k + 1 || rc_cert.min_after_cop < k {
        return Err(format!(
            "{id}: robber distances {} / {} below {} / {k}",
            rc_cert.min_after_robber,
            rc_cert.min_after_cop,
            k + 1
        ));
    }
    let budget = 4 * g.n() * g.n();
    let check_run = |cop_player: &mut dyn radcap::game::Player, who: &str| -> Result<(), String> {
        let mut robber_player = &robber;
        let t = simulate(&game, below, cop_player, &mut robber_player, budget)
            .map_err(|e| e.to_string())?;
        if t.outcome != (Outcome::Survived { moves: budget }) {
            return Err(format!("{id}: robber caught by {who}: {:?}", t.outcome));
        }
        if t.distances_after(Role::Robber).any(|d| d < k + 1)
            || t.distances_after(Role::Cop).any(|d| d < k)
        {
            return Err(format!("{id}: distance invariant broken against {who}"));
        }
        Ok(())
    };
    let mut optimal = &cop;
    check_run(&mut optimal, "the extracted cop")?;
    let mut seeds = ChaCha8Rng::seed_from_u64(g.n() as u64);
    for i in 0..random_cops {
        let mut random = RandomPlayer::new(g, Role::Cop, seeds.gen());
        check_run(&mut random, &format!("random cop {i}"))?;
    }
    Ok(())
}

fn strategy_certificates() -> Verdict {
    let specs = family_instances();
    let results: Vec<Result<bool, String>> = specs
        .par_iter()
        .map(|spec| {
            let g = spec.build(G).map_err(|e| e.to_string())?;
            if !g.is_connected() {
                return Ok(false);
            }
            certify(&spec.to_string(), &g, 100)?;
            Ok(true)
        })
        .collect();
    let mut checked = 0;
    for r in results {
        checked += usize::from(r?);
    }
    Ok(format!("{checked} graphs certified, 100 random cops each"))
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("cycles rc(C_n) = floor(n/2) - 1, n = 3..24", cycles),
        ("hypercubes rc(Q_n) = n - 1, n = 1..7", hypercubes),
        ("Hamming rc(H(d,q)) = d - 1", hamming_graphs),
        ("Johnson rc(J(n,k)) = k - 1", johnson_graphs),
        (
            "generalized Johnson rc = rad - 1, C(n,k) <= 70",
            generalized_johnson_graphs,
        ),
        ("Sierpinski S(n,3), n = 1..5", sierpinski_k3),
        ("Sierpinski S(3,4) = 5, S(4,4) = 11", sierpinski_k4),
        (
            "cubic vertex-transitive instance of order 24",
            cubic_instance,
        ),
        ("bound sandwich, 200 random graphs n <= 14", || {
            suite(Suite::Bounds, 200, 14, 9)
        }),
        (
            "oracle equivalence, 100 random graphs n <= 10",
            oracle_equivalence,
        ),
        ("product formulas, 50 factor pairs, order <= 100", || {
            suite(Suite::Products, 50, 100, 11)
        }),
        ("outerplanar longest face, 200 instances n <= 14", || {
            suite(Suite::Outerplanar, 200, 14, 12)
        }),
        ("retract monotonicity, 100 instances", || {
            suite(Suite::Retracts, 100, 12, 13)
        }),
        ("evenness pipeline", evenness),
        (
            "strategy certificates on every family instance",
            strategy_certificates,
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS {:>2} {name} [{secs:.2}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{secs:.2}s]: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 15 criteria passed", 15 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
