use std::fmt::Write;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Game, Role, Strategy};
use crate::error::GameError;
use crate::graph::Graph;

/// Anything that can play one side of the game.
pub trait Player {
    /// Initial vertex. The robber is told where the cop stands.
    fn place(&mut self, cop_at: Option<usize>) -> usize;
    /// Next vertex for the player to move in `(cop, robber)`.
    fn respond(&mut self, cop: usize, robber: usize) -> usize;
}

impl Player for Strategy {
    fn place(&mut self, cop_at: Option<usize>) -> usize {
        self.placement(cop_at)
    }

    fn respond(&mut self, cop: usize, robber: usize) -> usize {
        self.next(cop, robber)
    }
}

impl Player for &Strategy {
    fn place(&mut self, cop_at: Option<usize>) -> usize {
        self.placement(cop_at)
    }

    fn respond(&mut self, cop: usize, robber: usize) -> usize {
        self.next(cop, robber)
    }
}

/// Uniform random walker on closed neighbourhoods, seeded.
pub struct RandomPlayer<'g> {
    graph: &'g Graph,
    role: Role,
    rng: ChaCha8Rng,
}

impl<'g> RandomPlayer<'g> {
    pub fn new(graph: &'g Graph, role: Role, seed: u64) -> Self {
        RandomPlayer {
            graph,
            role,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Player for RandomPlayer<'_> {
    fn place(&mut self, _cop_at: Option<usize>) -> usize {
        self.rng.gen_range(0..self.graph.n())
    }

    fn respond(&mut self, cop: usize, robber: usize) -> usize {
        let me = match self.role {
            Role::Cop => cop,
            Role::Robber => robber,
        };
        let mut options = self.graph.neighbors(me).to_vec();
        options.push(me);
        *options.choose(&mut self.rng).expect("nonempty")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    Placement,
    Move,
}

/// Position after one placement or move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub mover: Role,
    pub kind: StepKind,
    pub cop: usize,
    pub robber: usize,
    pub distance: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// Distance dropped to `k` or less after `moves` moves (0 = at placement).
    CopCaptured {
        moves: usize,
        last_mover: Role,
    },
    Survived {
        moves: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub k: u32,
    pub steps: Vec<Step>,
    pub outcome: Outcome,
}

impl Transcript {
    /// Steps after which it was the given player who had just moved
    /// (placements excluded).
    pub fn distances_after(&self, mover: Role) -> impl Iterator<Item = u32> + '_ {
        self.steps
            .iter()
            .filter(move |s| s.mover == mover && s.kind == StepKind::Move)
            .map(|s| s.distance)
    }

    pub fn render(&self, g: &Graph) -> String {
        let mut out = String::new();
        for (i, s) in self.steps.iter().enumerate() {
            let (verb, at) = match (s.kind, s.mover) {
                (StepKind::Placement, Role::Cop) => ("places on", s.cop),
                (StepKind::Placement, Role::Robber) => ("places on", s.robber),
                (StepKind::Move, Role::Cop) => ("moves to", s.cop),
                (StepKind::Move, Role::Robber) => ("moves to", s.robber),
            };
            let _ = writeln!(
                out,
                "{i:>4} {:<6} {verb:<10}{:<8} cop={} robber={} d={}",
                s.mover.to_string(),
                g.label(at),
                g.label(s.cop),
                g.label(s.robber),
                s.distance
            );
        }
        let _ = match self.outcome {
            Outcome::CopCaptured { moves, last_mover } => writeln!(
                out,
                "captured at radius {} after {moves} moves (last move by {last_mover})",
                self.k
            ),
            Outcome::Survived { moves } => {
                writeln!(out, "robber survived {moves} moves at radius {}", self.k)
            }
        };
        out
    }
}

/// Plays the game at radius `k` for at most `max_moves` single moves.
pub fn simulate(
    game: &Game<'_>,
    k: u32,
    cop: &mut dyn Player,
    robber: &mut dyn Player,
    max_moves: usize,
) -> Result<Transcript, GameError> {
    let g = game.graph();
    let n = g.n();
    let d = |c: usize, r: usize| game.distances().hops(c, r);
    let mut steps = Vec::new();

    let c0 = cop.place(None);
    if c0 >= n {
        return Err(GameError::IllegalPlacement {
            role: Role::Cop,
            vertex: c0,
            n,
        });
    }
    let r0 = robber.place(Some(c0));
    if r0 >= n {
        return Err(GameError::IllegalPlacement {
            role: Role::Robber,
            vertex: r0,
            n,
        });
    }
    let (mut c, mut r) = (c0, r0);
    steps.push(Step {
        mover: Role::Cop,
        kind: StepKind::Placement,
        cop: c,
        robber: r,
        distance: d(c, r),
    });
    steps.push(Step {
        mover: Role::Robber,
        kind: StepKind::Placement,
        cop: c,
        robber: r,
        distance: d(c, r),
    });
    if d(c, r) <= k {
        return Ok(Transcript {
            k,
            steps,
            outcome: Outcome::CopCaptured {
                moves: 0,
                last_mover: Role::Robber,
            },
        });
    }

    let legal = |from: usize, to: usize| to < n && (to == from || g.has_edge(from, to));
    let mut moves = 0;
    while moves < max_moves {
        let mover = if moves % 2 == 0 {
            let to = cop.respond(c, r);
            if !legal(c, to) {
                return Err(GameError::IllegalMove {
                    role: Role::Cop,
                    from: c,
                    to,
                    cop: c,
                    robber: r,
                });
            }
            c = to;
            Role::Cop
        } else {
            let to = robber.respond(c, r);
            if !legal(r, to) {
                return Err(GameError::IllegalMove {
                    role: Role::Robber,
                    from: r,
                    to,
                    cop: c,
                    robber: r,
                });
            }
            r = to;
            Role::Robber
        };
        moves += 1;
        steps.push(Step {
            mover,
            kind: StepKind::Move,
            cop: c,
            robber: r,
            distance: d(c, r),
        });
        if d(c, r) <= k {
            return Ok(Transcript {
                k,
                steps,
                outcome: Outcome::CopCaptured {
                    moves,
                    last_mover: mover,
                },
            });
        }
    }
    Ok(Transcript {
        k,
        steps,
        outcome: Outcome::Survived { moves: max_moves },
    })
}
