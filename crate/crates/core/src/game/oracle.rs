//! A deliberately simple reference for rc, sharing nothing with the solver
//! except the [`Graph`] type.

use crate::graph::Graph;

const INF: u32 = u32::MAX / 4;

fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for &v in g.neighbors(u) {
            row[v] = 1;
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                let via = d[u][w] + d[w][v];
                if via < d[u][v] {
                    d[u][v] = via;
                }
            }
        }
    }
    d
}

/// Cop-win test at radius `k` by sweeping every state until nothing changes.
fn cop_wins(g: &Graph, d: &[Vec<u32>], k: u32) -> bool {
    let n = g.n();
    let closed = |v: usize| std::iter::once(v).chain(g.neighbors(v).iter().copied());
    // won[turn][c][r]; turn 0 = cop to move, 1 = robber to move.
    let mut won = vec![vec![vec![false; n]; n]; 2];
    for c in 0..n {
        for r in 0..n {
            if d[c][r] <= k {
                won[0][c][r] = true;
                won[1][c][r] = true;
            }
        }
    }
    loop {
        let mut changed = false;
        for c in 0..n {
            for r in 0..n {
                if !won[0][c][r] && closed(c).any(|x| won[1][x][r]) {
                    won[0][c][r] = true;
                    changed = true;
                }
                if !won[1][c][r] && closed(r).all(|y| won[0][c][y]) {
                    won[1][c][r] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    (0..n).any(|c| (0..n).all(|r| won[0][c][r]))
}

/// rc by exhaustive fixed-point iteration for `k = 0, 1, ...`; `None` for
/// empty or disconnected graphs. Meant for small graphs only.
pub fn naive_rc_oracle(g: &Graph) -> Option<u32> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let d = floyd_warshall(g);
    if d.iter().flatten().any(|&x| x >= INF) {
        return None;
    }
    let diam = d.iter().flatten().copied().max().unwrap_or(0);
    (0..=diam).find(|&k| cop_wins(g, &d, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, johnson, path, SizeGuard};

    #[test]
    fn small_values() {
        assert_eq!(naive_rc_oracle(&path(5).unwrap()), Some(0));
        assert_eq!(naive_rc_oracle(&cycle(5).unwrap()), Some(1));
        assert_eq!(
            naive_rc_oracle(&johnson(4, 2, SizeGuard::DEFAULT).unwrap()),
            Some(1)
        );
    }

    #[test]
    fn disconnected_is_none() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(naive_rc_oracle(&g), None);
        assert_eq!(naive_rc_oracle(&Graph::new(0, []).unwrap()), None);
    }
}
