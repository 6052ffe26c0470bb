//! Simple undirected graphs stored as adjacency bit rows.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n`; row `u` has bit
//! `v` set iff `uv` is an edge. Degrees are cached alongside the rows.

mod classify;
pub(crate) mod families;
mod format;

pub use classify::{classify, Classification, Kind};
pub use families::{make_named, Family, MAX_FAMILY_VERTICES};
pub use format::{parse_edge_list, parse_graph, parse_graph6, GRAPH6_MAX_VERTICES};

use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    degrees: Vec<usize>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            degrees: vec![0; n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::MalformedInput(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::MalformedInput(format!("loop edge at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a 0/1 adjacency matrix given row by row.
    pub fn from_adjacency_rows(rows: &[&[u8]]) -> Result<Graph> {
        let n = rows.len();
        let mut edges = Vec::new();
        for (u, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedInput(format!("row {u} has length {}", row.len())));
            }
            for (v, &bit) in row.iter().enumerate() {
                match bit {
                    0 => {}
                    1 if rows[v][u] == 1 => {
                        if u < v {
                            edges.push((u, v));
                        }
                    }
                    _ => {
                        return Err(Error::MalformedInput(format!(
                            "adjacency entry ({u},{v}) is not a symmetric 0/1 value"
                        )))
                    }
                }
            }
        }
        Graph::from_edges(n, edges)
    }

    /// Decodes an upper-triangle bitmask: bit `e` corresponds to the `e`-th
    /// pair `(i, j)`, `i < j`, in column order `(0,1), (0,2), (1,2), (0,3), ...`
    /// (the graph6 bit order).
    pub fn from_upper_mask(n: usize, mask: u64) -> Graph {
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    g.set_edge(i, j);
                }
                bit += 1;
            }
        }
        g
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        if !self.has_edge(u, v) {
            self.rows[u * self.words + v / 64] |= 1 << (v % 64);
            self.rows[v * self.words + u / 64] |= 1 << (u % 64);
            self.degrees[u] += 1;
            self.degrees[v] += 1;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn edge_count(&self) -> usize {
        self.degrees.iter().sum::<usize>() / 2
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.rows[v * self.words..(v + 1) * self.words];
        row.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0).iter().all(|&seen| seen)
    }

    fn component_of(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// A proper 2-coloring (colors 0/1, each component's lowest vertex gets
    /// 0), or `None` if the graph has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color: Vec<Option<u8>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(0);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(1 - cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// Entry `v` is the sum of the degrees of the neighbors of `v`, which is
    /// also row `v` of `A^2` summed.
    pub fn neighbor_degree_sums(&self) -> Vec<u64> {
        (0..self.n)
            .map(|v| self.neighbors(v).map(|u| self.degrees[u] as u64).sum())
            .collect()
    }

    pub fn first_isolated_vertex(&self) -> Option<usize> {
        self.degrees.iter().position(|&d| d == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Shorthand for the neighbor degree sums of `g`.
pub fn neighbor_degree_sums(g: &Graph) -> Vec<u64> {
    g.neighbor_degree_sums()
}
