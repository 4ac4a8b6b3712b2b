//! Finite simple undirected graphs on vertices `0..n-1`.

use crate::error::{Error, Result};
use std::fmt;

/// A finite simple graph. Edges are stored symmetrically in a dense
/// adjacency matrix plus a canonical sorted edge list.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>, // row-major n*n, symmetric, diagonal false
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    /// Builds a graph from an edge list. Self-loops and out-of-range
    /// endpoints are rejected; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArg(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArg(format!("self-loop at vertex {u}")));
            }
            g.adj[u * n + v] = true;
            g.adj[v * n + u] = true;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(v, u)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    /// The complement graph: `{u,v}` is an edge iff it is not one here.
    pub fn complement(&self) -> Graph {
        let n = self.n;
        let mut c = Graph::empty(n);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    c.adj[u * n + v] = !self.adj[u * n + v];
                }
            }
        }
        c
    }

    /// Maximal connected pieces, each as a standalone graph together with
    /// the map from its local indices back to the original vertex indices.
    /// Components are ordered by their smallest original vertex.
    pub fn connected_components(&self) -> Vec<(Graph, Vec<usize>)> {
        let n = self.n;
        let mut comp_of = vec![usize::MAX; n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp_of[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for u in self.neighbors(v) {
                    if comp_of[u] == usize::MAX {
                        comp_of[u] = id;
                        stack.push(u);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        comps
            .into_iter()
            .map(|members| {
                let mut local = Graph::empty(members.len());
                for (i, &u) in members.iter().enumerate() {
                    for (j, &v) in members.iter().enumerate().skip(i + 1) {
                        if self.has_edge(u, v) {
                            local.adj[i * members.len() + j] = true;
                            local.adj[j * members.len() + i] = true;
                        }
                    }
                }
                (local, members)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Parses the line-oriented edge-list format: a header `n <count>`
    /// followed by `u v` lines; blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut g: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match n {
                None => {
                    let mut parts = line.split_whitespace();
                    if parts.next() != Some("n") {
                        return Err(Error::parse(line_no, format!("expected 'n <count>', got '{line}'")));
                    }
                    let count = parts
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| Error::parse(line_no, "bad vertex count"))?;
                    if parts.next().is_some() {
                        return Err(Error::parse(line_no, "trailing tokens after vertex count"));
                    }
                    n = Some(count);
                    g = Some(Graph::empty(count));
                }
                Some(count) => {
                    let mut parts = line.split_whitespace();
                    let u = parts
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| Error::parse(line_no, format!("malformed edge line '{line}'")))?;
                    let v = parts
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| Error::parse(line_no, format!("malformed edge line '{line}'")))?;
                    if parts.next().is_some() {
                        return Err(Error::parse(line_no, "trailing tokens on edge line"));
                    }
                    if u >= count || v >= count {
                        return Err(Error::parse(
                            line_no,
                            format!("vertex index out of range: {u} {v} (n = {count})"),
                        ));
                    }
                    if u == v {
                        return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
                    }
                    let g = g.as_mut().unwrap();
                    g.adj[u * count + v] = true;
                    g.adj[v * count + u] = true;
                }
            }
        }
        g.ok_or_else(|| Error::parse(0, "missing 'n <count>' header"))
    }

    /// Decodes a single graph6-encoded graph (printable bytes 63..126,
    /// big-endian 6-bit groups, upper triangle in column order).
    pub fn parse_graph6(text: &str) -> Result<Graph> {
        Self::parse_graph6_line(text.trim(), 1)
    }

    fn parse_graph6_line(line: &str, line_no: usize) -> Result<Graph> {
        let bytes = line.as_bytes();
        if bytes.is_empty() {
            return Err(Error::parse(line_no, "empty graph6 string"));
        }
        for &b in bytes {
            if !(63..=126).contains(&b) {
                return Err(Error::parse(
                    line_no,
                    format!("byte {b} outside the graph6 range 63..126"),
                ));
            }
        }
        let vals: Vec<u64> = bytes.iter().map(|&b| (b - 63) as u64).collect();
        let (n, header_len) = if vals[0] != 63 {
            (vals[0] as usize, 1)
        } else if vals.len() >= 4 && vals[1] != 63 {
            (((vals[1] << 12) | (vals[2] << 6) | vals[3]) as usize, 4)
        } else if vals.len() >= 8 {
            let mut v: u64 = 0;
            for &x in &vals[2..8] {
                v = (v << 6) | x;
            }
            (v as usize, 8)
        } else {
            return Err(Error::parse(line_no, "truncated graph6 size header"));
        };
        let bits_needed = n * n.saturating_sub(1) / 2;
        let data_len = bits_needed.div_ceil(6);
        if vals.len() != header_len + data_len {
            return Err(Error::parse(
                line_no,
                format!(
                    "bad graph6 length: expected {} bytes for n = {n}, got {}",
                    header_len + data_len,
                    vals.len()
                ),
            ));
        }
        let mut g = Graph::empty(n);
        let mut pos = 0;
        for v in 1..n {
            for u in 0..v {
                let word = vals[header_len + pos / 6];
                if (word >> (5 - pos % 6)) & 1 == 1 {
                    g.adj[u * n + v] = true;
                    g.adj[v * n + u] = true;
                }
                pos += 1;
            }
        }
        Ok(g)
    }

    /// Decodes a file of graph6 lines, one graph per non-empty line.
    /// An optional `>>graph6<<` header prefix on the first line is skipped.
    pub fn parse_graph6_file(text: &str) -> Result<Vec<Graph>> {
        let mut out = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let mut line = raw.trim();
            if idx == 0 {
                line = line.strip_prefix(">>graph6<<").unwrap_or(line).trim();
            }
            if line.is_empty() {
                continue;
            }
            out.push(Self::parse_graph6_line(line, idx + 1)?);
        }
        Ok(out)
    }

    /// Encodes this graph in graph6 format.
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut vals: Vec<u8> = Vec::new();
        if n <= 62 {
            vals.push(n as u8);
        } else if n <= 258047 {
            vals.push(63);
            vals.push((n >> 12) as u8 & 63);
            vals.push((n >> 6) as u8 & 63);
            vals.push(n as u8 & 63);
        } else {
            vals.push(63);
            vals.push(63);
            for shift in (0..36).step_by(6).rev() {
                vals.push((n >> shift) as u8 & 63);
            }
        }
        let mut word = 0u8;
        let mut used = 0;
        for v in 1..n {
            for u in 0..v {
                word = (word << 1) | u8::from(self.has_edge(u, v));
                used += 1;
                if used == 6 {
                    vals.push(word);
                    word = 0;
                    used = 0;
                }
            }
        }
        if used > 0 {
            vals.push(word << (6 - used));
        }
        vals.iter().map(|&v| (v + 63) as char).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

// ---------------------------------------------------------------------------
// Standard constructions
// ---------------------------------------------------------------------------

/// Path on `n` vertices `0-1-...-(n-1)`.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Cycle on `n >= 3` vertices; `n = 1, 2` degenerate to `K_1`, `K_2`.
pub fn cycle_graph(n: usize) -> Graph {
    if n < 3 {
        return complete_graph(n);
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).unwrap()
}

/// Complete graph on `n` vertices.
pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Star with one center and `leaves` leaves (so `leaves + 1` vertices).
pub fn star_graph(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).unwrap()
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite_graph(part_sizes: &[usize]) -> Graph {
    let n: usize = part_sizes.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in part_sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Disjoint union, relabeling the second graph's vertices after the first's.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let n = a.n() + b.n();
    let mut edges = a.edges();
    edges.extend(b.edges().iter().map(|&(u, v)| (u + a.n(), v + a.n())));
    Graph::from_edges(n, &edges).unwrap()
}

/// Join: disjoint union plus all edges between the two sides.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let mut g = disjoint_union(a, b);
    let n = g.n();
    for u in 0..a.n() {
        for v in a.n()..n {
            g.adj[u * n + v] = true;
            g.adj[v * n + u] = true;
        }
    }
    g
}
