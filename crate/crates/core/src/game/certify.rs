//! Exhaustive checks of extracted strategies, independent of the ranks the
//! solver assigned.

use std::collections::VecDeque;

use super::{Game, Role, Strategy};
use crate::error::GameError;

/// Worst-case number of cop moves until capture, per robber placement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopCertificate {
    pub start: usize,
    /// `(robber placement, cop moves)`; 0 means captured at placement.
    pub worst_case: Vec<(usize, u32)>,
}

impl CopCertificate {
    pub fn max_moves(&self) -> u32 {
        self.worst_case.iter().map(|&(_, m)| m).max().unwrap_or(0)
    }
}

#[derive(Clone, Copy)]
enum Mark {
    New,
    Active,
    Done(u32),
}

struct Frame {
    robber: usize,
    cop_next: usize,
    reply: usize,
    worst: u32,
}

/// Walks the full game tree of `strategy` against every robber reply and
/// returns the longest capture time. Fails if some line of play escapes
/// (revisits a position) or the strategy moves illegally.
pub fn certify_cop_strategy(
    game: &Game<'_>,
    k: u32,
    strategy: &Strategy,
) -> Result<CopCertificate, GameError> {
    if strategy.role() != Role::Cop {
        return Err(GameError::Certificate("not a cop strategy".into()));
    }
    let g = game.graph();
    let n = g.n();
    let d = |c: usize, r: usize| game.distances().hops(c, r);
    let legal = |from: usize, to: usize| to < n && (to == from || g.has_edge(from, to));
    let mut marks = vec![Mark::New; n * n];

    // Cop to move at (c, r), not yet captured.
    let open = |c: usize, r: usize| -> Result<Option<usize>, GameError> {
        let to = strategy.next(c, r);
        if !legal(c, to) {
            return Err(GameError::IllegalMove {
                role: Role::Cop,
                from: c,
                to,
                cop: c,
                robber: r,
            });
        }
        Ok((d(to, r) > k).then_some(to))
    };

    let start = strategy.placement(None);
    if start >= n {
        return Err(GameError::IllegalPlacement {
            role: Role::Cop,
            vertex: start,
            n,
        });
    }
    let mut worst_case = Vec::with_capacity(n);
    for r0 in 0..n {
        if d(start, r0) <= k {
            worst_case.push((r0, 0));
            continue;
        }
        let s0 = start * n + r0;
        let value = match marks[s0] {
            Mark::Done(v) => v,
            Mark::Active => unreachable!("stack is empty between roots"),
            Mark::New => {
                let mut stack: Vec<Frame> = Vec::new();
                let mut root_value = 0;
                match open(start, r0)? {
                    None => {
                        marks[s0] = Mark::Done(1);
                        root_value = 1;
                    }
                    Some(cn) => {
                        marks[s0] = Mark::Active;
                        stack.push(Frame {
                            robber: r0,
                            cop_next: cn,
                            reply: 0,
                            worst: 0,
                        });
                    }
                }
                while let Some(top) = stack.last_mut() {
                    let replies = game.closed(top.robber);
                    if top.reply == replies.len() {
                        let done = stack.pop().expect("nonempty");
                        let value = done.worst + 1;
                        // The frame's own state is (previous cop, robber); recover it
                        // from the parent, or from the root.
                        let state = match stack.last() {
                            Some(parent) => parent.cop_next * n + done.robber,
                            None => s0,
                        };
                        marks[state] = Mark::Done(value);
                        match stack.last_mut() {
                            Some(parent) => parent.worst = parent.worst.max(value),
                            None => root_value = value,
                        }
                        continue;
                    }
                    let rr = replies[top.reply];
                    top.reply += 1;
                    let c = top.cop_next;
                    if d(c, rr) <= k {
                        // Robber stepped into range; no further cop move needed.
                        continue;
                    }
                    let child = c * n + rr;
                    match marks[child] {
                        Mark::Done(v) => top.worst = top.worst.max(v),
                        Mark::Active => {
                            return Err(GameError::Certificate(format!(
                                "robber can repeat position cop={c} robber={rr} forever"
                            )))
                        }
                        Mark::New => match open(c, rr)? {
                            None => {
                                marks[child] = Mark::Done(1);
                                top.worst = top.worst.max(1);
                            }
                            Some(cn) => {
                                marks[child] = Mark::Active;
                                stack.push(Frame {
                                    robber: rr,
                                    cop_next: cn,
                                    reply: 0,
                                    worst: 0,
                                });
                            }
                        },
                    }
                }
                root_value
            }
        };
        worst_case.push((r0, value));
    }
    Ok(CopCertificate { start, worst_case })
}

/// Smallest distances seen over every line of play consistent with the
/// robber strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RobberCertificate {
    /// Positions (cop to move) reachable against some cop behaviour.
    pub positions: usize,
    /// Minimum distance right after a cop move.
    pub min_after_cop: u32,
    /// Minimum distance right after a robber placement or move.
    pub min_after_robber: u32,
}

/// Checks that `strategy` keeps the distance above `k` against every cop
/// placement and every cop move, by closing the set of reachable positions.
pub fn certify_robber_strategy(
    game: &Game<'_>,
    k: u32,
    strategy: &Strategy,
) -> Result<RobberCertificate, GameError> {
    if strategy.role() != Role::Robber {
        return Err(GameError::Certificate("not a robber strategy".into()));
    }
    let g = game.graph();
    let n = g.n();
    let d = |c: usize, r: usize| game.distances().hops(c, r);
    let mut seen = vec![false; n * n];
    let mut queue = VecDeque::new();
    let mut min_after_cop = u32::MAX;
    let mut min_after_robber = u32::MAX;

    for c in 0..n {
        let r = strategy.placement(Some(c));
        if r >= n {
            return Err(GameError::IllegalPlacement {
                role: Role::Robber,
                vertex: r,
                n,
            });
        }
        min_after_robber = min_after_robber.min(d(c, r));
        if d(c, r) <= k {
            return Err(GameError::Certificate(format!(
                "placement {r} against cop {c} is within radius {k}"
            )));
        }
        if !seen[c * n + r] {
            seen[c * n + r] = true;
            queue.push_back((c, r));
        }
    }
    let mut positions = 0;
    while let Some((c, r)) = queue.pop_front() {
        positions += 1;
        for &cn in game.closed(c) {
            let dc = d(cn, r);
            min_after_cop = min_after_cop.min(dc);
            if dc <= k {
                return Err(GameError::Certificate(format!(
                    "cop reaches {cn} within radius {k} of robber {r}"
                )));
            }
            let rn = strategy.next(cn, r);
            if rn >= n || (rn != r && !g.has_edge(r, rn)) {
                return Err(GameError::IllegalMove {
                    role: Role::Robber,
                    from: r,
                    to: rn,
                    cop: cn,
                    robber: r,
                });
            }
            let dr = d(cn, rn);
            min_after_robber = min_after_robber.min(dr);
            if dr <= k {
                return Err(GameError::Certificate(format!(
                    "robber steps to {rn} within radius {k} of cop {cn}"
                )));
            }
            if !seen[cn * n + rn] {
                seen[cn * n + rn] = true;
                queue.push_back((cn, rn));
            }
        }
    }
    Ok(RobberCertificate {
        positions,
        min_after_cop,
        min_after_robber,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{GameState, Turn};
    use crate::generators::{complete, cycle, sierpinski, SizeGuard};

    #[test]
    fn four_cycle_cop_captures_in_one_move() {
        let g = cycle(4).unwrap();
        let game = Game::new(&g).unwrap();
        let a = game.solve(1);
        let cop = game.cop_strategy(&a).unwrap();
        let cert = certify_cop_strategy(&game, 1, &cop).unwrap();
        assert_eq!(cert.max_moves(), 1);
    }

    #[test]
    fn complete_graph_capture_on_first_move() {
        let g = complete(6).unwrap();
        let game = Game::new(&g).unwrap();
        let cop = game.cop_strategy(&game.solve(0)).unwrap();
        let cert = certify_cop_strategy(&game, 0, &cop).unwrap();
        assert_eq!(cert.max_moves(), 1);
        assert!(cert
            .worst_case
            .iter()
            .all(|&(r, m)| (r == cert.start) == (m == 0)));
    }

    #[test]
    fn sierpinski_cop_certificate_respects_rank() {
        let g = sierpinski(2, 3, SizeGuard::DEFAULT).unwrap();
        let game = Game::new(&g).unwrap();
        let a = game.solve(2);
        let cop = game.cop_strategy(&a).unwrap();
        let cert = certify_cop_strategy(&game, 2, &cop).unwrap();
        for &(r, moves) in &cert.worst_case {
            if moves == 0 {
                continue;
            }
            let rank = a
                .rank(GameState::new(cert.start, r, Turn::CopToMove))
                .unwrap();
            assert!(
                moves <= rank.div_ceil(2),
                "robber {r}: {moves} > ceil({rank}/2)"
            );
        }
    }

    #[test]
    fn losing_cop_strategy_is_rejected() {
        // Greedy fallback moves on C_6 at k = 1 cannot force capture.
        let g = cycle(6).unwrap();
        let game = Game::new(&g).unwrap();
        let cop = game.cop_strategy(&game.solve(2)).unwrap();
        assert!(certify_cop_strategy(&game, 1, &cop).is_err());
    }

    #[test]
    fn robber_certificate_on_c6() {
        let g = cycle(6).unwrap();
        let game = Game::new(&g).unwrap();
        let robber = game.robber_strategy(&game.solve(1)).unwrap();
        let cert = certify_robber_strategy(&game, 1, &robber).unwrap();
        assert_eq!(cert.min_after_robber, 3);
        assert_eq!(cert.min_after_cop, 2);
        // The same strategy does not survive a larger radius.
        assert!(certify_robber_strategy(&game, 2, &robber).is_err());
    }
}
