//! graph6 and edge-list text formats.
//!
//! graph6 is accepted for up to [`GRAPH6_MAX_VERTICES`] vertices (the
//! single-byte size form). Edge lists are `u-v` tokens separated by commas,
//! whitespace or newlines, with `#` starting a comment that runs to the end
//! of the line. An optional `n=<count>` token fixes the vertex count, which
//! is otherwise one more than the largest vertex id.

use super::Graph;
use crate::error::{Error, Result};

pub const GRAPH6_MAX_VERTICES: usize = 62;

const HEADER: &str = ">>graph6<<";

/// Parses either format. Text whose first significant character is a digit,
/// `#`, or an `n=` token is read as an edge list; anything else as graph6.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    match trimmed.chars().next() {
        Some(c) if c.is_ascii_digit() || c == '#' => parse_edge_list(text),
        Some('n') if trimmed.starts_with("n=") => parse_edge_list(text),
        _ => parse_graph6(text),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s).as_bytes();
    let (&first, body) = s
        .split_first()
        .ok_or_else(|| Error::MalformedInput("empty graph6 string".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::MalformedInput(format!("invalid graph6 size byte {first:#04x}")));
    }
    if first == 126 {
        return Err(Error::MalformedInput(format!(
            "graph6 input is limited to {GRAPH6_MAX_VERTICES} vertices"
        )));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::MalformedInput(format!(
            "graph6 body has {} bytes, expected {} for n = {n}",
            body.len(),
            bits.div_ceil(6)
        )));
    }
    let mut sextets = Vec::with_capacity(body.len());
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::MalformedInput(format!(
                "byte {b:#04x} at position {} is outside the graph6 alphabet",
                i + 1
            )));
        }
        sextets.push(b - 63);
    }
    let bit_at = |k: usize| sextets[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bits..sextets.len() * 6).any(bit_at) {
        return Err(Error::MalformedInput("nonzero graph6 padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut edges = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for token in line.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            if let Some(count) = token.strip_prefix("n=") {
                let count = count
                    .parse()
                    .map_err(|_| Error::MalformedInput(format!("bad vertex count {token:?}")))?;
                declared_n = Some(count);
                continue;
            }
            let (u, v) = token
                .split_once('-')
                .ok_or_else(|| Error::MalformedInput(format!("expected u-v, found {token:?}")))?;
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::MalformedInput(format!("bad vertex id in {token:?}")))
            };
            edges.push((parse(u)?, parse(v)?));
        }
    }
    let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared_n {
        Some(n) if n < implied => {
            return Err(Error::MalformedInput(format!(
                "n={n} is smaller than the largest vertex id {}",
                implied - 1
            )))
        }
        Some(n) => n,
        None => implied,
    };
    if n == 0 {
        return Err(Error::MalformedInput("edge list names no vertices".into()));
    }
    Graph::from_edges(n, edges)
}

impl Graph {
    /// Canonical graph6 string (no header, no trailing newline).
    pub fn to_graph6(&self) -> Result<String> {
        let n = self.n();
        if n > GRAPH6_MAX_VERTICES {
            return Err(Error::BadParams(format!(
                "graph6 output is limited to {GRAPH6_MAX_VERTICES} vertices, graph has {n}"
            )));
        }
        let mut out = vec![n as u8 + 63];
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i, j) as u8;
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
        Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
    }

    /// Edge-list text accepted by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n={}", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!(",{u}-{v}"));
        }
        out
    }
}
