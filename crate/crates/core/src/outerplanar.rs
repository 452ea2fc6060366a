//! 2-connected outerplanar graphs given as a polygon with non-crossing
//! chords.

use std::collections::BTreeSet;
use std::fmt::Write;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{EmbeddingError, GraphError};
use crate::graph::Graph;

/// Outer cycle order plus chords, both in vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterplanarEmbedding {
    pub outer: Vec<usize>,
    pub chords: Vec<(usize, usize)>,
}

/// Inner faces as vertex cycles, each listed in outer-cycle order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceList {
    pub faces: Vec<Vec<usize>>,
}

impl FaceList {
    pub fn sizes(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn max_size(&self) -> usize {
        self.faces.iter().map(Vec::len).max().unwrap_or(0)
    }
}

fn not_embedding(msg: String) -> EmbeddingError {
    EmbeddingError::NotOuterplanarEmbedding(msg)
}

impl OuterplanarEmbedding {
    pub fn n(&self) -> usize {
        self.outer.len()
    }

    /// Position of each vertex on the outer cycle. Assumes `outer` is a
    /// permutation.
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n()];
        for (i, &v) in self.outer.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Chords as position pairs `(i, j)` with `i < j`.
    fn chord_positions(&self) -> Vec<(usize, usize)> {
        let pos = self.positions();
        self.chords
            .iter()
            .map(|&(a, b)| {
                let (i, j) = (pos[a], pos[b]);
                (i.min(j), i.max(j))
            })
            .collect()
    }

    /// Checks the embedding on its own: permutation, chord sanity, no
    /// crossings.
    pub fn validate(&self) -> Result<(), EmbeddingError> {
        let n = self.n();
        if n < 3 {
            return Err(not_embedding(format!(
                "outer cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut seen = vec![false; n];
        for &v in &self.outer {
            if v >= n || seen[v] {
                return Err(not_embedding(format!(
                    "outer order is not a permutation of 0..{n}"
                )));
            }
            seen[v] = true;
        }
        for &(a, b) in &self.chords {
            if a >= n || b >= n {
                return Err(not_embedding(format!(
                    "chord ({a},{b}) has a vertex out of range"
                )));
            }
            if a == b {
                return Err(not_embedding(format!("chord ({a},{b}) is a loop")));
            }
        }
        let cp = self.chord_positions();
        let mut distinct = BTreeSet::new();
        for (&(a, b), &(i, j)) in self.chords.iter().zip(&cp) {
            if j - i == 1 || (i == 0 && j == n - 1) {
                return Err(not_embedding(format!(
                    "chord ({a},{b}) joins consecutive outer vertices"
                )));
            }
            if !distinct.insert((i, j)) {
                return Err(not_embedding(format!("chord ({a},{b}) is repeated")));
            }
        }
        for (x, &(i1, j1)) in cp.iter().enumerate() {
            for (y, &(i2, j2)) in cp.iter().enumerate().skip(x + 1) {
                if (i1 < i2 && i2 < j1 && j1 < j2) || (i2 < i1 && i1 < j2 && j2 < j1) {
                    let (a, b) = self.chords[x];
                    let (c, d) = self.chords[y];
                    return Err(not_embedding(format!(
                        "chords ({a},{b}) and ({c},{d}) cross"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Outer cycle edges followed by chords.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut edges: Vec<_> = (0..n)
            .map(|i| (self.outer[i], self.outer[(i + 1) % n]))
            .collect();
        edges.extend_from_slice(&self.chords);
        edges
    }

    pub fn to_graph(&self) -> Result<Graph, EmbeddingError> {
        self.validate()?;
        Graph::new(self.n(), self.edges()).map_err(|e| not_embedding(e.to_string()))
    }

    /// Text form: the outer order on the first line, then one chord per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let outer: Vec<String> = self.outer.iter().map(usize::to_string).collect();
        out.push_str(&outer.join(" "));
        out.push('\n');
        for &(a, b) in &self.chords {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    pub fn parse(text: &str) -> Result<OuterplanarEmbedding, EmbeddingError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (first, header) = lines.next().ok_or(EmbeddingError::Syntax {
            line: 1,
            msg: "missing outer order".into(),
        })?;
        let parse_id = |line: usize, tok: &str| {
            tok.parse::<usize>().map_err(|_| EmbeddingError::Syntax {
                line,
                msg: format!("bad vertex id {tok:?}"),
            })
        };
        let outer = header
            .split_whitespace()
            .map(|t| parse_id(first, t))
            .collect::<Result<Vec<_>, _>>()?;
        let mut chords = Vec::new();
        for (line, l) in lines {
            let toks: Vec<&str> = l.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(EmbeddingError::Syntax {
                    line,
                    msg: format!("expected \"u v\", got {l:?}"),
                });
            }
            chords.push((parse_id(line, toks[0])?, parse_id(line, toks[1])?));
        }
        Ok(OuterplanarEmbedding { outer, chords })
    }
}

/// Validates `e` and checks that `g`'s edges are exactly the outer cycle
/// plus the chords.
pub fn validate_embedding(g: &Graph, e: &OuterplanarEmbedding) -> Result<(), EmbeddingError> {
    e.validate()?;
    if g.n() != e.n() {
        return Err(EmbeddingError::EdgeSetMismatch(format!(
            "graph has {} vertices, embedding has {}",
            g.n(),
            e.n()
        )));
    }
    let expected = e.edges();
    if let Some(&(u, v)) = expected.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Err(EmbeddingError::EdgeSetMismatch(format!(
            "edge ({u},{v}) missing from graph"
        )));
    }
    if g.m() != expected.len() {
        let wanted: BTreeSet<(usize, usize)> = expected
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        let extra = g
            .edges()
            .find(|e| !wanted.contains(e))
            .expect("graph has more edges");
        return Err(EmbeddingError::EdgeSetMismatch(format!(
            "graph edge ({},{}) is neither on the outer cycle nor a chord",
            extra.0, extra.1
        )));
    }
    Ok(())
}

/// Splits the polygon along its chords. Walks the outer cycle keeping a
/// stack of open vertices; a chord ending at the current position closes
/// the face between its endpoints. Inner chords (larger start) close first.
pub fn inner_faces(e: &OuterplanarEmbedding) -> FaceList {
    let n = e.n();
    let mut ending: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, j) in e.chord_positions() {
        ending[j].push(i);
    }
    let mut faces = Vec::with_capacity(e.chords.len() + 1);
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    for (j, starts) in ending.iter_mut().enumerate() {
        stack.push(j);
        starts.sort_unstable_by(|a, b| b.cmp(a));
        for &i in starts.iter() {
            let from = stack
                .iter()
                .rposition(|&p| p == i)
                .expect("chord start is open");
            faces.push(stack[from..].iter().map(|&p| e.outer[p]).collect());
            stack.truncate(from + 1);
            stack.push(j);
        }
    }
    faces.push(stack.iter().map(|&p| e.outer[p]).collect());
    FaceList { faces }
}

/// `floor(|C| / 2) - 1` for a longest inner face `C`.
pub fn rc_outerplanar_formula(e: &OuterplanarEmbedding) -> u32 {
    (inner_faces(e).max_size() as u32 / 2).saturating_sub(1)
}

/// Random `n`-gon with non-crossing chords. Chords come from recursively
/// splitting position intervals, each candidate kept with probability
/// `chord_prob`; vertex ids are then shuffled along the cycle.
pub fn random_outerplanar(
    n: usize,
    chord_prob: f64,
    seed: u64,
) -> Result<(Graph, OuterplanarEmbedding), GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParam(format!(
            "polygon needs n >= 3, got {n}"
        )));
    }
    if !(0.0..=1.0).contains(&chord_prob) {
        return Err(GraphError::InvalidParam(format!(
            "chord probability {chord_prob} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chords_pos = Vec::new();
    // Interval (i, j) is bounded by the outer path i..j and an edge ij.
    let mut work = vec![(0, n - 1)];
    while let Some((i, j)) = work.pop() {
        if j - i < 2 {
            continue;
        }
        let m = rng.gen_range(i + 1..j);
        for (a, b) in [(i, m), (m, j)] {
            if b - a >= 2 && rng.gen_bool(chord_prob) {
                chords_pos.push((a, b));
            }
            work.push((a, b));
        }
    }
    let mut outer: Vec<usize> = (0..n).collect();
    outer.shuffle(&mut rng);
    let chords = chords_pos
        .into_iter()
        .map(|(a, b)| (outer[a], outer[b]))
        .collect();
    let e = OuterplanarEmbedding { outer, chords };
    let g = Graph::new(n, e.edges())?;
    Ok((g, e))
}
