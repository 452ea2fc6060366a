//! `radcap`: compute radius capture numbers and run the verification suites.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use radcap::game::{simulate, GameState, Player, Turn};
use radcap::generators::{named_instance, FamilySpec, SizeGuard};
use radcap::io::{parse_edge_list, parse_graph6_file};
use radcap::results::{emit_results, OutputFormat, ResultRecord};
use radcap::suites::{run_suite, Suite, SuiteConfig, SuiteSummary};
use radcap::WinAnalysis;
use radcap::{Game, Graph, SearchMode};

#[derive(Parser)]
#[command(
    name = "radcap",
    version,
    about = "Radius capture numbers of cops-and-robber games"
)]
struct Cli {
    /// Capture-radius search strategy.
    #[arg(long, global = true, default_value = "binary", value_parser = parse_search)]
    search: SearchMode,
    /// Seed for random families, suites and random opponents.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output format for result records.
    #[arg(long = "out", global = true, default_value = "csv", value_parser = parse_out)]
    out: OutputFormat,
    /// Record wall time per graph (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    /// Largest graph order accepted.
    #[arg(long, global = true, env = "RC_SIZE_GUARD", default_value_t = SizeGuard::DEFAULT.0,
          value_parser = parse_guard)]
    size_guard: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute rc and metric data for graphs read from a file or a named instance.
    Compute(InputArgs),
    /// Build a family member and compare its rc with the closed form.
    Family {
        /// cycle, path, complete, hypercube, hamming, johnson, kneser,
        /// generalized_johnson, sierpinski, circulant, instance, gnp
        kind: String,
        params: Vec<String>,
    },
    /// Run a property suite and report pass counts.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Play out a winning strategy for one side and print the transcript.
    Strategy {
        #[command(flatten)]
        input: InputArgs,
        /// Capture radius.
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum)]
        role: RoleArg,
        #[arg(long, default_value_t = 100)]
        max_moves: usize,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Input file, or `-` for standard input.
    #[arg(required_unless_present = "instance", conflicts_with = "instance")]
    path: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: InputFormat,
    /// Use a built-in named instance instead of a file.
    #[arg(long)]
    instance: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum RoleArg {
    Cop,
    Robber,
}

fn parse_search(s: &str) -> Result<SearchMode, String> {
    s.parse()
}

fn parse_guard(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("the size guard must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_out(s: &str) -> Result<OutputFormat, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// Why a command did not succeed; each maps to an exit code.
enum Failure {
    /// Bad input or arguments: exit 2.
    Usage(anyhow::Error),
    /// A computed value contradicted a checked statement: exit 1.
    Verification(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(input) => compute(&cli, input),
        Command::Family { kind, params } => family(&cli, kind, params),
        Command::Verify {
            suite,
            trials,
            max_n,
        } => verify(&cli, *suite, *trials, *max_n),
        Command::Strategy {
            input,
            k,
            role,
            max_moves,
        } => strategy(&cli, input, *k, *role, *max_moves),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn guard(cli: &Cli) -> SizeGuard {
    SizeGuard(cli.size_guard)
}

fn read_input(path: &Path) -> anyhow::Result<Vec<u8>> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .context("reading standard input")?;
        Ok(buf)
    } else {
        fs::read(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// Record ids must not contain commas, so file stems are sanitised.
fn stem_id(path: &Path) -> String {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "stdin".into());
    stem.replace([',', '\n'], "_")
}

/// Usable `(id, graph)` pairs plus one message per unusable record.
type Loaded = (Vec<(String, Graph)>, Vec<String>);

/// Loads every graph the input names, as `(id, graph)` pairs in input order.
/// Lines that fail to parse are reported on stderr and collected as errors.
fn load_graphs(cli: &Cli, input: &InputArgs) -> anyhow::Result<Loaded> {
    let limit = guard(cli);
    let checked = |id: String, g: Graph| -> Result<(String, Graph), String> {
        match limit.check(g.n() as u128) {
            Ok(_) => Ok((id, g)),
            Err(e) => Err(format!("{id}: {e}")),
        }
    };
    if let Some(name) = &input.instance {
        let g = named_instance(name)?;
        return checked(name.clone(), g)
            .map(|x| (vec![x], vec![]))
            .map_err(|e| anyhow!(e));
    }
    let path = input
        .path
        .as_deref()
        .expect("clap requires a path without --instance");
    let bytes = read_input(path)?;
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    match input.format {
        InputFormat::Graph6 => {
            let stem = stem_id(path);
            for (line, parsed) in parse_graph6_file(&bytes) {
                let id = format!("{stem}:{line}");
                match parsed {
                    Ok(g) => match checked(id, g) {
                        Ok(x) => graphs.push(x),
                        Err(e) => errors.push(e),
                    },
                    Err(e) => errors.push(format!("{}: line {line}: {e}", path.display())),
                }
            }
        }
        InputFormat::Edgelist => {
            let text = String::from_utf8(bytes).context("edge list is not UTF-8")?;
            let g = parse_edge_list(&text).with_context(|| path.display().to_string())?;
            graphs.push(checked(stem_id(path), g).map_err(|e| anyhow!(e))?);
        }
    }
    Ok((graphs, errors))
}

fn warn_if_disconnected(record: &ResultRecord) {
    if record.rc().is_none() && record.n() > 0 {
        eprintln!("warning: {} is disconnected; rc is undefined", record.id());
    } else if record.n() == 0 {
        eprintln!("warning: {} has no vertices; rc is undefined", record.id());
    }
}

fn compute(cli: &Cli, input: &InputArgs) -> CmdResult {
    let (graphs, errors) = load_graphs(cli, input)?;
    for e in &errors {
        eprintln!("error: {e}");
    }
    let records = graphs
        .par_iter()
        .map(|(id, g)| ResultRecord::measure(id.as_str(), g, cli.search, cli.timing))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Verification(e.to_string()))?;
    records.iter().for_each(warn_if_disconnected);
    print!("{}", emit_results(&records, cli.out));
    if errors.is_empty() {
        Ok(())
    } else {
        Err(Failure::Usage(anyhow!(
            "{} input record(s) could not be used",
            errors.len()
        )))
    }
}

fn family(cli: &Cli, kind: &str, params: &[String]) -> CmdResult {
    let spec =
        FamilySpec::parse(kind, params, cli.seed.unwrap_or(0)).map_err(anyhow::Error::from)?;
    let g = spec.build(guard(cli)).map_err(anyhow::Error::from)?;
    let record = ResultRecord::measure(spec.to_string(), &g, cli.search, cli.timing)
        .map_err(|e| Failure::Verification(e.to_string()))?;
    warn_if_disconnected(&record);
    let prediction = spec.predicted_rc(&g);
    let known = spec.known_value();
    let mismatch = match (record.rc(), &prediction, known) {
        (Some(rc), Some(p), _) if p.rc != rc => {
            Some(format!("measured {rc}, predicted {} ({})", p.rc, p.rule))
        }
        (Some(rc), None, Some(v)) if v != rc => {
            Some(format!("measured {rc}, previously computed value {v}"))
        }
        _ => None,
    };
    match cli.out {
        OutputFormat::Csv => {
            print!(
                "{}",
                emit_results(std::slice::from_ref(&record), OutputFormat::Csv)
            );
            let measured = record
                .rc()
                .map_or_else(|| "undefined".to_string(), |v| v.to_string());
            match (&prediction, known) {
                _ if record.rc().is_none() => println!("# measured {measured}"),
                (Some(p), _) => println!("# measured {measured}, predicted {} ({})", p.rc, p.rule),
                (None, Some(v)) => {
                    println!("# measured {measured}, no closed form; computed value {v}")
                }
                (None, None) => println!("# measured {measured}, no closed form"),
            }
        }
        OutputFormat::Json => {
            let mut value = serde_json::to_value(&record).map_err(anyhow::Error::from)?;
            value["predicted"] = prediction
                .as_ref()
                .filter(|_| record.rc().is_some())
                .map_or(
                    serde_json::Value::Null,
                    |p| serde_json::json!({ "rc": p.rc, "rule": p.rule }),
                );
            value["computed_value"] = known.map_or(serde_json::Value::Null, Into::into);
            println!(
                "{}",
                serde_json::to_string_pretty(&value).map_err(anyhow::Error::from)?
            );
        }
    }
    match mismatch {
        Some(m) => Err(Failure::Verification(format!("{spec}: {m}"))),
        None => Ok(()),
    }
}

fn verify(cli: &Cli, suite: Suite, trials: Option<usize>, max_n: Option<usize>) -> CmdResult {
    let mut cfg = SuiteConfig::defaults(suite);
    cfg.trials = trials.unwrap_or(cfg.trials);
    cfg.max_n = max_n.unwrap_or(cfg.max_n);
    cfg.seed = cli.seed.unwrap_or(cfg.seed);
    cfg.guard = guard(cli);
    let summary = run_suite(suite, &cfg).map_err(anyhow::Error::from)?;
    print_summary(cli, &cfg, &summary)?;
    let mut failed = 0;
    for f in summary.failures() {
        eprintln!("{}", f.to_json());
        failed += 1;
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "{failed} counterexample(s) in suite {suite}"
        )))
    }
}

fn print_summary(cli: &Cli, cfg: &SuiteConfig, summary: &SuiteSummary) -> anyhow::Result<()> {
    let counts = summary.pass_counts();
    let mut out = io::stdout().lock();
    match cli.out {
        OutputFormat::Csv => {
            writeln!(
                out,
                "suite {} (trials {}, seed {}, max-n {})",
                summary.suite, cfg.trials, cfg.seed, cfg.max_n
            )?;
            for (id, (pass, total)) in &counts {
                writeln!(out, "  {id}: {pass}/{total} pass")?;
            }
            for o in &summary.observations {
                let values = o
                    .values
                    .iter()
                    .map(|(k, v)| {
                        format!("{k}={}", v.map_or_else(|| "-".into(), |x| x.to_string()))
                    })
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(out, "  observe {} {}: {values}", o.theorem, o.inputs)?;
            }
            writeln!(
                out,
                "{}",
                if summary.all_pass() {
                    "all checks passed"
                } else {
                    "counterexamples found"
                }
            )?;
        }
        OutputFormat::Json => {
            let value = serde_json::json!({
                "suite": summary.suite.to_string(),
                "trials": cfg.trials,
                "seed": cfg.seed,
                "max_n": cfg.max_n,
                "pass_counts": counts
                    .iter()
                    .map(|(id, (p, t))| (id.to_string(), serde_json::json!({ "pass": p, "total": t })))
                    .collect::<serde_json::Map<_, _>>(),
                "observations": summary.observations,
                "all_pass": summary.all_pass(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
        }
    }
    Ok(())
}

fn strategy(cli: &Cli, input: &InputArgs, k: u32, role: RoleArg, max_moves: usize) -> CmdResult {
    let (mut graphs, errors) = load_graphs(cli, input)?;
    if let Some(e) = errors.first() {
        return Err(Failure::Usage(anyhow!(e.clone())));
    }
    if graphs.len() != 1 {
        return Err(Failure::Usage(anyhow!(
            "strategy needs exactly one graph, input has {}",
            graphs.len()
        )));
    }
    let (id, g) = graphs.pop().expect("one graph");
    let game = Game::new(&g).map_err(anyhow::Error::from)?;
    let analysis = game.solve(k);
    let transcript = match role {
        RoleArg::Cop => {
            if !analysis.is_cop_win() {
                return Err(Failure::Usage(anyhow!(
                    "role cannot win: the cop has no winning strategy on {id} at radius {k}"
                )));
            }
            let mut cop = game.cop_strategy(&analysis).map_err(anyhow::Error::from)?;
            let mut robber = DelayingRobber {
                game: &game,
                analysis: &analysis,
            };
            simulate(&game, k, &mut cop, &mut robber, max_moves).map_err(anyhow::Error::from)?
        }
        RoleArg::Robber => {
            if analysis.is_cop_win() {
                return Err(Failure::Usage(anyhow!(
                    "role cannot win: the robber has no evasion strategy on {id} at radius {k}"
                )));
            }
            let mut robber = game
                .robber_strategy(&analysis)
                .map_err(anyhow::Error::from)?;
            let mut cop = ChasingCop { game: &game };
            simulate(&game, k, &mut cop, &mut robber, max_moves).map_err(anyhow::Error::from)?
        }
    };
    let (winner, opponent) = match role {
        RoleArg::Cop => ("cop", "robber that delays capture as long as possible"),
        RoleArg::Robber => ("robber", "cop that always closes in"),
    };
    println!(
        "{id}: n {}, radius {k}, winning {winner} against a {opponent}",
        g.n()
    );
    print!("{}", transcript.render(&g));
    Ok(())
}

/// Robber that maximises the number of plies left before capture.
struct DelayingRobber<'a, 'g> {
    game: &'a Game<'g>,
    analysis: &'a WinAnalysis,
}

impl DelayingRobber<'_, '_> {
    fn best(&self, cop: usize, options: impl Iterator<Item = usize>) -> usize {
        options
            .max_by_key(|&r| {
                let rank = self
                    .analysis
                    .rank(GameState::new(cop, r, Turn::CopToMove))
                    .unwrap_or(u32::MAX);
                (rank, std::cmp::Reverse(r))
            })
            .expect("nonempty graph")
    }
}

impl Player for DelayingRobber<'_, '_> {
    fn place(&mut self, cop_at: Option<usize>) -> usize {
        self.best(
            cop_at.expect("the cop places first"),
            0..self.game.graph().n(),
        )
    }

    fn respond(&mut self, cop: usize, robber: usize) -> usize {
        let g = self.game.graph();
        self.best(
            cop,
            std::iter::once(robber).chain(g.neighbors(robber).iter().copied()),
        )
    }
}

/// Cop that starts at a centre and always steps to a vertex nearest the robber.
struct ChasingCop<'a, 'g> {
    game: &'a Game<'g>,
}

impl Player for ChasingCop<'_, '_> {
    fn place(&mut self, _cop_at: Option<usize>) -> usize {
        let d = self.game.distances();
        (0..self.game.graph().n())
            .min_by_key(|&v| d.eccentricity(v))
            .expect("nonempty graph")
    }

    fn respond(&mut self, cop: usize, robber: usize) -> usize {
        let d = self.game.distances();
        std::iter::once(cop)
            .chain(self.game.graph().neighbors(cop).iter().copied())
            .min_by_key(|&c| d.get(c, robber))
            .expect("closed neighbourhood is nonempty")
    }
}
