//! The one-cop game with radius of capture `k`.
//!
//! The cop places first, then the robber (knowing the cop's vertex); after
//! that they alternate, cop first, each moving to a vertex of their closed
//! neighbourhood. The cop wins as soon as the distance between the players
//! is at most `k`, checked after the placements and after every move.
//!
//! [`Game::solve`] classifies every state `(cop, robber, turn)` by backward
//! induction from the capture states. Each robber-to-move state keeps a
//! counter of successors not yet known to be cop-win; it becomes cop-win
//! when the counter reaches zero. A cop-to-move state becomes cop-win as
//! soon as one successor is. Processing states in FIFO order makes each
//! state's rank (plies until capture under optimal play) come out as the
//! minimum over cop successors and the maximum over robber successors.

mod certify;
mod oracle;
mod play;
mod strategy;

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::GameError;
use crate::graph::{DistanceMatrix, Graph};

pub use certify::{
    certify_cop_strategy, certify_robber_strategy, CopCertificate, RobberCertificate,
};
pub use oracle::naive_rc_oracle;
pub use play::{simulate, Outcome, Player, RandomPlayer, Step, StepKind, Transcript};
pub use strategy::Strategy;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Role {
    Cop,
    Robber,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Cop => "cop",
            Role::Robber => "robber",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Turn {
    CopToMove,
    RobberToMove,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameState {
    pub cop: usize,
    pub robber: usize,
    pub turn: Turn,
}

impl GameState {
    pub fn new(cop: usize, robber: usize, turn: Turn) -> Self {
        GameState { cop, robber, turn }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchMode {
    Linear,
    #[default]
    Binary,
}

impl std::str::FromStr for SearchMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "linear" => Ok(SearchMode::Linear),
            "binary" => Ok(SearchMode::Binary),
            other => Err(format!("unknown search mode {other:?}")),
        }
    }
}

/// Rank sentinel for states the robber survives.
const NOT_WON: u32 = u32::MAX;

/// Outcome of the backward induction at a fixed capture radius.
#[derive(Clone)]
pub struct WinAnalysis {
    k: u32,
    n: usize,
    cop_rank: Vec<u32>,
    robber_rank: Vec<u32>,
    initial_cop_choices: Vec<usize>,
}

impl WinAnalysis {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cop start vertices that win against every robber placement.
    pub fn initial_cop_choices(&self) -> &[usize] {
        &self.initial_cop_choices
    }

    /// Whether the graph is in CWRC(k).
    pub fn is_cop_win(&self) -> bool {
        !self.initial_cop_choices.is_empty()
    }

    fn table(&self, turn: Turn) -> &[u32] {
        match turn {
            Turn::CopToMove => &self.cop_rank,
            Turn::RobberToMove => &self.robber_rank,
        }
    }

    /// Plies until capture under optimal play; `None` when the robber
    /// survives from this state.
    pub fn rank(&self, s: GameState) -> Option<u32> {
        let r = self.table(s.turn)[s.cop * self.n + s.robber];
        (r != NOT_WON).then_some(r)
    }

    pub fn state_is_cop_win(&self, s: GameState) -> bool {
        self.rank(s).is_some()
    }

    /// Number of cop-win states of each turn.
    pub fn cop_win_counts(&self) -> (usize, usize) {
        let count = |t: &[u32]| t.iter().filter(|&&r| r != NOT_WON).count();
        (count(&self.cop_rank), count(&self.robber_rank))
    }
}

impl fmt::Debug for WinAnalysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, r) = self.cop_win_counts();
        f.debug_struct("WinAnalysis")
            .field("k", &self.k)
            .field("n", &self.n)
            .field("cop_win_cop_to_move", &c)
            .field("cop_win_robber_to_move", &r)
            .field("initial_cop_choices", &self.initial_cop_choices)
            .finish()
    }
}

/// `N[v]` in increasing vertex order.
pub(crate) fn closed_neighborhood(g: &Graph, v: usize) -> Vec<usize> {
    let nb = g.neighbors(v);
    let at = nb.partition_point(|&x| x < v);
    let mut out = Vec::with_capacity(nb.len() + 1);
    out.extend_from_slice(&nb[..at]);
    out.push(v);
    out.extend_from_slice(&nb[at..]);
    out
}

/// A connected graph prepared for solving: distances are computed once and
/// shared by every radius.
pub struct Game<'g> {
    graph: &'g Graph,
    dist: DistanceMatrix,
    closed: Vec<Vec<usize>>,
}

impl<'g> Game<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self, GameError> {
        if graph.n() == 0 {
            return Err(GameError::EmptyGraph);
        }
        let dist = graph.distances();
        if !dist.is_connected() {
            return Err(GameError::NotConnected);
        }
        let closed = (0..graph.n())
            .map(|v| closed_neighborhood(graph, v))
            .collect();
        Ok(Game {
            graph,
            dist,
            closed,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    pub(crate) fn closed(&self, v: usize) -> &[usize] {
        &self.closed[v]
    }

    pub fn radius(&self) -> u32 {
        self.dist.radius().expect("game graphs are connected")
    }

    pub fn diameter(&self) -> u32 {
        self.dist.diameter().expect("game graphs are connected")
    }

    /// `(lower, upper)` bounds on rc: `max(0, floor(girth/2) - 1)` and
    /// `rad - 1` (taken as 0 for the one-vertex graph).
    pub fn rc_bounds(&self) -> (u32, u32) {
        let lower = (self.graph.girth() / 2).saturating_sub(1);
        let upper = self.radius().saturating_sub(1);
        (lower, upper)
    }

    pub fn solve(&self, k: u32) -> WinAnalysis {
        let n = self.graph.n();
        let nn = n * n;
        let mut cop_rank = vec![NOT_WON; nn];
        let mut robber_rank = vec![NOT_WON; nn];
        let mut pending: Vec<u32> = Vec::with_capacity(nn);
        // Queue entries: state index * 2 + (0 cop to move, 1 robber to move).
        let mut queue: VecDeque<usize> = VecDeque::new();

        for c in 0..n {
            for (r, &d) in self.dist.row(c).iter().enumerate() {
                let s = c * n + r;
                pending.push(self.closed[r].len() as u32);
                if d <= k {
                    cop_rank[s] = 0;
                    robber_rank[s] = 0;
                    queue.push_back(2 * s);
                    queue.push_back(2 * s + 1);
                }
            }
        }

        while let Some(entry) = queue.pop_front() {
            let s = entry / 2;
            let (c, r) = (s / n, s % n);
            if entry % 2 == 0 {
                // (c, r) cop to move is won; robber predecessors moved r' -> r.
                let next = cop_rank[s] + 1;
                for &rp in &self.closed[r] {
                    let p = c * n + rp;
                    if robber_rank[p] == NOT_WON {
                        pending[p] -= 1;
                        if pending[p] == 0 {
                            robber_rank[p] = next;
                            queue.push_back(2 * p + 1);
                        }
                    }
                }
            } else {
                // (c, r) robber to move is won; cop predecessors moved c' -> c.
                let next = robber_rank[s] + 1;
                for &cp in &self.closed[c] {
                    let p = cp * n + r;
                    if cop_rank[p] == NOT_WON {
                        cop_rank[p] = next;
                        queue.push_back(2 * p);
                    }
                }
            }
        }

        let initial_cop_choices = (0..n)
            .filter(|&c| cop_rank[c * n..(c + 1) * n].iter().all(|&x| x != NOT_WON))
            .collect();
        WinAnalysis {
            k,
            n,
            cop_rank,
            robber_rank,
            initial_cop_choices,
        }
    }

    pub fn is_cop_win(&self, k: u32) -> bool {
        self.solve(k).is_cop_win()
    }

    /// Least `k` with the graph in CWRC(k).
    pub fn radius_capture_number(&self, mode: SearchMode) -> u32 {
        let (lower, upper) = self.rc_bounds();
        match mode {
            SearchMode::Linear => (lower..)
                .find(|&k| self.is_cop_win(k))
                .expect("cop wins once k reaches the diameter"),
            SearchMode::Binary => {
                let mut hi = upper.max(lower);
                // The upper bound is a theorem; keep the search honest if it
                // ever fails by walking on towards the diameter.
                while !self.is_cop_win(hi) {
                    hi += 1;
                }
                let mut lo = lower;
                while lo < hi {
                    let mid = lo + (hi - lo) / 2;
                    if self.is_cop_win(mid) {
                        hi = mid;
                    } else {
                        lo = mid + 1;
                    }
                }
                lo
            }
        }
    }

    /// Rank-greedy cop strategy; see [`Strategy::cop`].
    pub fn cop_strategy(&self, analysis: &WinAnalysis) -> Result<Strategy, GameError> {
        Strategy::cop(self, analysis)
    }

    /// Attractor-avoiding robber strategy; see [`Strategy::robber`].
    pub fn robber_strategy(&self, analysis: &WinAnalysis) -> Result<Strategy, GameError> {
        Strategy::robber(self, analysis)
    }
}

/// Backward induction for `g` at radius `k`.
pub fn solve_cwrc(g: &Graph, k: u32) -> Result<WinAnalysis, GameError> {
    Ok(Game::new(g)?.solve(k))
}

/// rc(G), or `None` for disconnected (or empty) graphs.
pub fn radius_capture_number(g: &Graph, mode: SearchMode) -> Option<u32> {
    Game::new(g)
        .ok()
        .map(|game| game.radius_capture_number(mode))
}
