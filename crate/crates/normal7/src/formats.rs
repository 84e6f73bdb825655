//! graph6, the edge-list text format and DOT.
//!
//! graph6 stores the upper triangle of the adjacency matrix column by
//! column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six bits per byte offset
//! by 63, after a size header. Parsed edges keep that order.
//!
//! The edge-list format carries multigraphs: a header line `n m`, then one
//! `u v` line per edge (`u u` for a loop). Blank lines and lines starting
//! with `#` are skipped.

use std::fmt::Write as _;

use normal7_core::coloring::{edge_status, EdgeColoring, EdgeStatus};
use normal7_core::{PseudoGraph, VertexId};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6 byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("graph6 encodes simple graphs only")]
    NotSimple,
}

const HEADER: &str = ">>graph6<<";
/// Largest order with the 4-byte size header.
const SHORT_LIMIT: usize = 258_047;

fn size_field(bytes: &[u8], at: usize) -> Result<(usize, usize), FormatError> {
    let err = |offset, reason| FormatError::Graph6 { offset, reason };
    let first = *bytes.get(at).ok_or(err(at, "missing size"))?;
    if first != 126 {
        return if (63..=125).contains(&first) { Ok(((first - 63) as usize, at + 1)) } else { Err(err(at, "byte out of range")) };
    }
    let (start, len) = if bytes.get(at + 1) == Some(&126) { (at + 2, 6) } else { (at + 1, 3) };
    let mut n = 0usize;
    for i in start..start + len {
        let b = *bytes.get(i).ok_or(err(i, "truncated size header"))?;
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte out of range"));
        }
        n = n << 6 | (b - 63) as usize;
    }
    Ok((n, start + len))
}

/// One graph6 record, with or without the `>>graph6<<` header. Offsets in
/// errors count from the start of `line`.
pub fn parse_graph6(line: &str) -> Result<PseudoGraph, FormatError> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let at = if bytes.starts_with(HEADER.as_bytes()) { HEADER.len() } else { 0 };
    let (n, body) = size_field(bytes, at)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = bytes.len() - body;
    if have != need {
        let offset = body + have.min(need);
        let reason = if have < need { "truncated adjacency data" } else { "trailing bytes" };
        return Err(FormatError::Graph6 { offset, reason });
    }
    let mut g = PseudoGraph::new(n);
    let mut k = 0usize;
    for (i, &b) in bytes[body..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::Graph6 { offset: body + i, reason: "byte out of range" });
        }
    }
    let bit = |k: usize| (bytes[body + k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(VertexId(i as u32), VertexId(j as u32)).expect("vertices in range");
            }
            k += 1;
        }
    }
    for k in bits..need * 6 {
        if bit(k) {
            return Err(FormatError::Graph6 { offset: body + k / 6, reason: "nonzero padding bits" });
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &PseudoGraph) -> Result<String, FormatError> {
    if !g.is_simple() {
        return Err(FormatError::NotSimple);
    }
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        let (prefix, len): (&[u8], usize) = if n <= SHORT_LIMIT { (&[126], 3) } else { (&[126, 126], 6) };
        out.extend_from_slice(prefix);
        for i in (0..len).rev() {
            out.push((n >> (6 * i) & 63) as u8 + 63);
        }
    }
    let mut adj = vec![false; n * n];
    for e in g.edges() {
        let (a, b) = g.ends(e);
        adj[a.index() * n + b.index()] = true;
        adj[b.index() * n + a.index()] = true;
    }
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | adj[i * n + j] as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                (acc, filled) = (0, 0);
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn parse_edge_list(text: &str) -> Result<PseudoGraph, FormatError> {
    let err = |line: usize, reason: String| FormatError::EdgeList { line, reason };
    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let pair = |line: usize, l: &str| -> Result<(usize, usize), FormatError> {
        let nums: Vec<&str> = l.split_whitespace().collect();
        match nums.as_slice() {
            [a, b] => Ok((
                a.parse().map_err(|_| err(line, format!("not a number: {a}")))?,
                b.parse().map_err(|_| err(line, format!("not a number: {b}")))?,
            )),
            _ => Err(err(line, "expected two integers".into())),
        }
    };
    let (line, header) = rows.next().ok_or(err(1, "missing header `n m`".into()))?;
    let (n, m) = pair(line, header)?;
    let mut g = PseudoGraph::new(n);
    let mut last = line;
    for (line, l) in rows {
        let (u, v) = pair(line, l)?;
        if u >= n || v >= n {
            return Err(err(line, format!("vertex out of range 0..{n}")));
        }
        g.add_edge(VertexId(u as u32), VertexId(v as u32)).expect("vertices in range");
        last = line;
    }
    if g.edge_count() != m {
        return Err(err(last, format!("header announces {m} edges, found {}", g.edge_count())));
    }
    Ok(g)
}

pub fn write_edge_list(g: &PseudoGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let (a, b) = g.ends(e);
        writeln!(out, "{} {}", a.0, b.0).expect("writing to a String");
    }
    out
}

/// Edge-list text starts with a line of two integers; anything else is
/// read as graph6 records.
pub fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| {
            let parts: Vec<&str> = l.split_whitespace().collect();
            parts.len() == 2 && parts.iter().all(|p| p.parse::<usize>().is_ok())
        })
}

/// Every graph in `text`: one edge list, or one graph6 record per
/// non-empty line.
pub fn parse_graphs(text: &str) -> Result<Vec<PseudoGraph>, FormatError> {
    if looks_like_edge_list(text) {
        return Ok(vec![parse_edge_list(text)?]);
    }
    text.lines().map(str::trim).filter(|l| !l.is_empty()).map(parse_graph6).collect()
}

/// DOT text; with a coloring, every edge is labeled by its color and its
/// status (`P` poor, `R` rich, `-` neither).
pub fn write_dot(g: &PseudoGraph, coloring: Option<&EdgeColoring>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        writeln!(out, "  {};", v.0).expect("writing to a String");
    }
    for e in g.edges() {
        let (a, b) = g.ends(e);
        match coloring {
            Some(c) => {
                let status = match edge_status(g, c, e) {
                    Ok(EdgeStatus::Poor) => "P",
                    Ok(EdgeStatus::Rich) => "R",
                    _ => "-",
                };
                let col = c.color(e);
                writeln!(out, "  {} -- {} [label=\"{col} {status}\", colorscheme=set19, color={col}];", a.0, b.0)
            }
            None => writeln!(out, "  {} -- {};", a.0, b.0),
        }
        .expect("writing to a String");
    }
    out.push_str("}\n");
    out
}
