use super::{Game, GameState, Role, Turn, WinAnalysis};
use crate::error::GameError;

/// A deterministic positional strategy for one player.
///
/// `moves[cop * n + robber]` is the mover's next vertex in the state where
/// it is this player's turn. Every state has a prescribed move: inside the
/// winning region the move is certified by the analysis, outside it the
/// player falls back to a greedy distance rule (cop closes in, robber runs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strategy {
    role: Role,
    k: u32,
    n: usize,
    /// Cop: a single start vertex. Robber: placement indexed by the cop's vertex.
    initial: Vec<usize>,
    moves: Vec<usize>,
}

impl Strategy {
    /// Starts on the lowest winning vertex and always moves to a successor of
    /// minimal rank (lowest index on ties), so capture happens within
    /// `ceil(rank / 2)` cop moves.
    pub fn cop(game: &Game<'_>, a: &WinAnalysis) -> Result<Strategy, GameError> {
        let start = *a
            .initial_cop_choices()
            .first()
            .ok_or(GameError::NoWinningStrategy { k: a.k() })?;
        let n = a.n();
        let dist = game.distances();
        let mut moves = Vec::with_capacity(n * n);
        for c in 0..n {
            for r in 0..n {
                let here = GameState::new(c, r, Turn::CopToMove);
                let ranked = match a.rank(here) {
                    Some(rank) if rank > 0 => game
                        .closed(c)
                        .iter()
                        .filter_map(|&x| {
                            a.rank(GameState::new(x, r, Turn::RobberToMove))
                                .map(|rk| (rk, x))
                        })
                        .min(),
                    _ => None,
                };
                let choice = match ranked {
                    Some((_, x)) => x,
                    None => *game
                        .closed(c)
                        .iter()
                        .min_by_key(|&&x| (dist.hops(x, r), x))
                        .expect("closed neighbourhoods are nonempty"),
                };
                moves.push(choice);
            }
        }
        Ok(Strategy {
            role: Role::Cop,
            k: a.k(),
            n,
            initial: vec![start],
            moves,
        })
    }

    /// Places on the lowest vertex outside the cop's winning region and always
    /// steps to the lowest successor that stays outside it.
    pub fn robber(game: &Game<'_>, a: &WinAnalysis) -> Result<Strategy, GameError> {
        if a.is_cop_win() {
            return Err(GameError::NoEvasionStrategy { k: a.k() });
        }
        let n = a.n();
        let dist = game.distances();
        let safe = |c: usize, r: usize| !a.state_is_cop_win(GameState::new(c, r, Turn::CopToMove));
        let initial = (0..n)
            .map(|c| {
                (0..n)
                    .find(|&r| safe(c, r))
                    .expect("no cop start wins, so every start has a safe reply")
            })
            .collect();
        let mut moves = Vec::with_capacity(n * n);
        for c in 0..n {
            for r in 0..n {
                let escaping = if a.state_is_cop_win(GameState::new(c, r, Turn::RobberToMove)) {
                    None
                } else {
                    game.closed(r).iter().copied().find(|&y| safe(c, y))
                };
                let choice = escaping.unwrap_or_else(|| {
                    *game
                        .closed(r)
                        .iter()
                        .min_by_key(|&&y| (std::cmp::Reverse(dist.hops(c, y)), y))
                        .expect("closed neighbourhoods are nonempty")
                });
                moves.push(choice);
            }
        }
        Ok(Strategy {
            role: Role::Robber,
            k: a.k(),
            n,
            initial,
            moves,
        })
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cop: the start vertex (argument ignored). Robber: the reply to the
    /// cop's placement.
    pub fn placement(&self, cop_at: Option<usize>) -> usize {
        match self.role {
            Role::Cop => self.initial[0],
            Role::Robber => self.initial[cop_at.expect("robber placement needs the cop's vertex")],
        }
    }

    /// Next vertex of the player to move in position `(cop, robber)`.
    pub fn next(&self, cop: usize, robber: usize) -> usize {
        self.moves[cop * self.n + robber]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, hypercube, SizeGuard};

    #[test]
    fn wrong_role_requests_fail() {
        let g = cycle(6).unwrap();
        let game = Game::new(&g).unwrap();
        let losing = game.solve(1);
        assert_eq!(
            game.cop_strategy(&losing).unwrap_err(),
            GameError::NoWinningStrategy { k: 1 }
        );
        let winning = game.solve(2);
        assert_eq!(
            game.robber_strategy(&winning).unwrap_err(),
            GameError::NoEvasionStrategy { k: 2 }
        );
    }

    #[test]
    fn moves_stay_in_closed_neighbourhoods() {
        let g = hypercube(3, SizeGuard::DEFAULT).unwrap();
        let game = Game::new(&g).unwrap();
        let cop = game.cop_strategy(&game.solve(2)).unwrap();
        let robber = game.robber_strategy(&game.solve(1)).unwrap();
        for c in 0..8 {
            for r in 0..8 {
                let x = cop.next(c, r);
                assert!(x == c || g.has_edge(c, x));
                let y = robber.next(c, r);
                assert!(y == r || g.has_edge(r, y));
            }
        }
    }

    #[test]
    fn cop_starts_on_lowest_winning_vertex() {
        let g = cycle(4).unwrap();
        let game = Game::new(&g).unwrap();
        let a = game.solve(1);
        let s = game.cop_strategy(&a).unwrap();
        assert_eq!(s.placement(None), a.initial_cop_choices()[0]);
        assert_eq!(s.role(), Role::Cop);
    }

    #[test]
    fn robber_placement_is_safe() {
        let g = cycle(8).unwrap();
        let game = Game::new(&g).unwrap();
        let a = game.solve(2);
        let s = game.robber_strategy(&a).unwrap();
        for c in 0..8 {
            let r = s.placement(Some(c));
            assert!(game.distances().get(c, r).unwrap() > 2);
            assert!(!a.state_is_cop_win(GameState::new(c, r, Turn::CopToMove)));
        }
    }
}
