//! graph6 and edge-list codecs.

use std::fmt::Write;

use crate::error::ParseError;
use crate::graph::Graph;

/// Largest order graph6 can express with the 8-byte size field.
pub const GRAPH6_MAX_N: usize = (1 << 36) - 1;

const HEADER: &[u8] = b">>graph6<<";

fn g6_err(offset: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Graph6 {
        offset,
        msg: msg.into(),
    }
}

fn sixbits(line: &[u8], at: usize) -> Result<u64, ParseError> {
    match line.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(g6_err(
            at,
            format!("byte {b:#04x} outside the printable range 63..=126"),
        )),
        None => Err(g6_err(at, "unexpected end of record")),
    }
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// line break are ignored. Offsets in errors count from the record start
/// (after the header).
pub fn parse_graph6(line: &[u8]) -> Result<Graph, ParseError> {
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let line = line.strip_suffix(b"\n").unwrap_or(line);
    let line = line.strip_suffix(b"\r").unwrap_or(line);
    let (n, mut at) = match line.first() {
        None => return Err(g6_err(0, "empty record")),
        Some(&126) if line.get(1) == Some(&126) => {
            let mut n = 0u64;
            for i in 2..8 {
                n = (n << 6) | sixbits(line, i)?;
            }
            (n, 8)
        }
        Some(&126) => {
            let mut n = 0u64;
            for i in 1..4 {
                n = (n << 6) | sixbits(line, i)?;
            }
            (n, 4)
        }
        Some(_) => (sixbits(line, 0)?, 1),
    };
    let n = usize::try_from(n).map_err(|_| g6_err(0, "order does not fit in memory"))?;
    let bits = n.saturating_mul(n.saturating_sub(1)) / 2;
    let needed = bits.div_ceil(6);
    if line.len() != at + needed {
        return Err(g6_err(
            line.len().min(at + needed),
            format!(
                "expected {needed} adjacency bytes for n = {n}, found {}",
                line.len() - at
            ),
        ));
    }
    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    let mut remaining = bits;
    while remaining > 0 {
        let chunk = sixbits(line, at)?;
        let take = remaining.min(6);
        for b in 0..take {
            if chunk >> (5 - b) & 1 == 1 {
                edges.push((i, j));
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        if take < 6 && chunk & ((1 << (6 - take)) - 1) != 0 {
            return Err(g6_err(at, "nonzero padding bits"));
        }
        remaining -= take;
        at += 1;
    }
    Graph::new(n, edges).map_err(|e| g6_err(0, e.to_string()))
}

/// Canonical graph6 encoding, without header or line break.
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    assert!(n <= GRAPH6_MAX_N, "graph6 cannot encode {n} vertices");
    let mut out = Vec::new();
    let push_size = |out: &mut Vec<u8>, value: usize, groups: u32| {
        for k in (0..groups).rev() {
            out.push(((value >> (6 * k)) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_size(&mut out, n, 3);
    } else {
        out.extend_from_slice(&[126, 126]);
        push_size(&mut out, n, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

/// Parses every non-empty line of a graph6 file, keeping per-line results.
pub fn parse_graph6_file(text: &[u8]) -> Vec<(usize, Result<Graph, ParseError>)> {
    text.split(|&b| b == b'\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix(b"\r").unwrap_or(l)))
        .filter(|(_, l)| !l.is_empty() && l != &HEADER)
        .map(|(line, l)| (line, parse_graph6(l)))
        .collect()
}

/// Edge-list text: a first line `n <count>`, then one `u v` pair per line.
/// Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let syntax = |line: usize, msg: String| ParseError::EdgeList { line, msg };
    let (first, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing \"n <count>\" header".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| syntax(first, format!("bad vertex count {count:?}")))?,
        _ => {
            return Err(syntax(
                first,
                format!("expected \"n <count>\", got {header:?}"),
            ))
        }
    };
    let mut g = Graph::new(n, []).map_err(|source| ParseError::EdgeListGraph {
        line: first,
        source,
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let pair = match l.split_whitespace().collect::<Vec<_>>()[..] {
            [u, v] => match (u.parse::<usize>(), v.parse::<usize>()) {
                (Ok(u), Ok(v)) => (u, v),
                _ => return Err(syntax(line, format!("bad vertex ids in {l:?}"))),
            },
            _ => return Err(syntax(line, format!("expected \"u v\", got {l:?}"))),
        };
        // Validate eagerly so the error carries this line number.
        Graph::new(n, [pair]).map_err(|source| ParseError::EdgeListGraph { line, source })?;
        edges.push(pair);
    }
    if !edges.is_empty() {
        g = Graph::new(n, edges).expect("edges were validated one by one");
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
