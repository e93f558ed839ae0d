//! Simple undirected graphs on dense vertex indices `0..n`, their
//! construction operators, and text encodings.
//!
//! The adjacency is stored as one sorted vertex set per vertex, which keeps
//! every iteration order deterministic.  Graphs are value types: operators
//! return new graphs, and a constructed graph is never mutated by the
//! algorithms in this crate, so `&Graph` can be shared freely across threads.
//!
//! Supported text formats:
//!
//! - graph6 (<https://users.cecs.anu.edu.au/~bdm/data/formats.txt>), one
//!   graph per line, bit-exact round-trips with zero padding;
//! - a plain edge list (`n m` header line, then one `u v` pair per line);
//! - DOT output (write-only) for quick visualization.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A set of vertex indices of some [`Graph`].
pub type VertexSet = BTreeSet<usize>;

/// Errors from graph construction and vertex-indexed operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// A vertex index is outside `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An edge endpoint was repeated (`u == v`); loops are not representable.
    LoopEdge { vertex: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::LoopEdge { vertex } => write!(f, "loop edge at vertex {vertex}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph on vertices `0..n`.
///
/// Invariants maintained by every constructor: adjacency is symmetric, there
/// are no loops, and every stored neighbor is in range.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Graph {
        Graph { adj: vec![BTreeSet::new(); n] }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::edgeless(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// The path `P_k` on `k` vertices, edges `0-1-...-(k-1)`.
    pub fn path(k: usize) -> Graph {
        let mut g = Graph::edgeless(k);
        for v in 1..k {
            g.insert_edge(v - 1, v);
        }
        g
    }

    /// The cycle `C_k` on `k >= 3` vertices, edges `0-1-...-(k-1)-0`.
    pub fn cycle(k: usize) -> Graph {
        assert!(k >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(k);
        g.insert_edge(k - 1, 0);
        g
    }

    /// The star `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::edgeless(leaves + 1);
        for v in 1..=leaves {
            g.insert_edge(0, v);
        }
        g
    }

    /// Builds a graph from an edge list, validating ranges and loop-freeness.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::edgeless(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the undirected edge `{u, v}`.  Idempotent.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        if u >= n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n });
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
        if u == v {
            return Err(GraphError::LoopEdge { vertex: u });
        }
        self.insert_edge(u, v);
        Ok(())
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    /// The open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// The closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|s| s.len() == n - 1)
    }

    /// True iff `vertices` are pairwise adjacent.
    pub fn is_clique<'a, I: IntoIterator<Item = &'a usize>>(&self, vertices: I) -> bool {
        let vs: Vec<usize> = vertices.into_iter().copied().collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if u == v || !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff `vertices` are pairwise non-adjacent.
    pub fn is_independent_set<'a, I: IntoIterator<Item = &'a usize>>(&self, vertices: I) -> bool {
        let vs: Vec<usize> = vertices.into_iter().copied().collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff `v` is simplicial, i.e. `N(v)` induces a clique.
    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(self.neighbors(v))
    }

    /// Connected components, each sorted, ordered by smallest contained vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// The complement graph: `uv` is an edge iff `u != v` and `uv` is not an
    /// edge here.  Involutive.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::edgeless(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.has_edge(u, v) {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    /// The subgraph induced by `keep`, together with the vertex relabeling.
    ///
    /// New indices follow the sorted order of `keep`.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        let n = self.n();
        for &v in keep {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
        }
        let old_of_new: Vec<usize> = keep.iter().copied().collect();
        let mut new_of_old = vec![None; n];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = Some(new);
        }
        let mut g = Graph::edgeless(old_of_new.len());
        for (new_u, &old_u) in old_of_new.iter().enumerate() {
            for &old_v in &self.adj[old_u] {
                if let Some(new_v) = new_of_old.get(old_v).copied().flatten() {
                    if new_u < new_v {
                        g.insert_edge(new_u, new_v);
                    }
                }
            }
        }
        Ok(InducedSubgraph { graph: g, old_of_new })
    }

    /// The induced subgraph on all vertices *except* `remove`.
    pub fn remove_vertices(&self, remove: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        for &v in remove {
            if v >= self.n() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() });
            }
        }
        let keep: VertexSet = (0..self.n()).filter(|v| !remove.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// A copy of the graph with the single edge `{u, v}` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].remove(&v);
        g.adj[v].remove(&u);
        g
    }

    /// Disjoint union: vertices of `other` are shifted by `self.n()`.
    pub fn union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut g = Graph::edgeless(shift + other.n());
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + shift, v + shift);
        }
        g
    }

    /// Join: the disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut g = self.union(other);
        for u in 0..shift {
            for v in shift..g.n() {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

/// An induced subgraph plus the bijection back to the host graph.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `old_of_new[new] = old`; sorted ascending by the old index.
    pub old_of_new: Vec<usize>,
}

impl InducedSubgraph {
    /// Maps a host-graph vertex to its index in the subgraph, if kept.
    pub fn new_of_old(&self, old: usize) -> Option<usize> {
        self.old_of_new.binary_search(&old).ok()
    }
}

/// Named small-graph families used as fixtures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    Complete,
    Edgeless,
    Cycle,
    Path,
    Star,
    Custom,
}

/// A `(family, size)` label; `build` materializes the graph for the
/// non-custom families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyLabel {
    pub family: GraphFamily,
    pub size: usize,
}

impl FamilyLabel {
    pub fn new(family: GraphFamily, size: usize) -> FamilyLabel {
        assert!(size >= 1, "family size parameter must be at least 1");
        FamilyLabel { family, size }
    }

    /// `Complete`/`Edgeless`/`Path` of `size` vertices, `Cycle` of `size >= 3`
    /// vertices, `Star` with `size` leaves.  `Custom` has no canonical graph.
    pub fn build(&self) -> Option<Graph> {
        match self.family {
            GraphFamily::Complete => Some(Graph::complete(self.size)),
            GraphFamily::Edgeless => Some(Graph::edgeless(self.size)),
            GraphFamily::Cycle if self.size >= 3 => Some(Graph::cycle(self.size)),
            GraphFamily::Cycle => None,
            GraphFamily::Path => Some(Graph::path(self.size)),
            GraphFamily::Star => Some(Graph::star(self.size)),
            GraphFamily::Custom => None,
        }
    }
}

/// Errors from graph6 parsing and serialization, with the byte offset of the
/// first offending input byte where applicable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graph6Error {
    EmptyInput,
    /// A byte outside the printable graph6 range 63..=126.
    InvalidByte { offset: usize, byte: u8 },
    /// The header announced more adjacency bytes than the line contains.
    Truncated { expected_len: usize, found_len: usize },
    /// Extra bytes after the adjacency bit-vector.
    TrailingBytes { offset: usize },
    /// Padding bits after the last adjacency bit must be zero.
    NonZeroPadding { offset: usize },
    /// The multi-byte length header is malformed.
    BadHeader { offset: usize },
    /// Graphs on more than 258047 vertices are not encoded.
    UnsupportedSize { n: usize },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::EmptyInput => write!(f, "empty graph6 input"),
            Graph6Error::InvalidByte { offset, byte } => {
                write!(f, "invalid graph6 byte {byte:#04x} at offset {offset}")
            }
            Graph6Error::Truncated { expected_len, found_len } => {
                write!(f, "truncated graph6 line: expected {expected_len} bytes, found {found_len}")
            }
            Graph6Error::TrailingBytes { offset } => {
                write!(f, "trailing bytes after graph6 data at offset {offset}")
            }
            Graph6Error::NonZeroPadding { offset } => {
                write!(f, "non-zero padding bits in graph6 byte at offset {offset}")
            }
            Graph6Error::BadHeader { offset } => {
                write!(f, "malformed graph6 length header at offset {offset}")
            }
            Graph6Error::UnsupportedSize { n } => {
                write!(f, "graph on {n} vertices exceeds the supported graph6 range")
            }
        }
    }
}

impl core::error::Error for Graph6Error {}

const G6_MAX_N: usize = 258047;

/// Parses one graph6 line into a graph.
///
/// Accepts the one-byte header (`n <= 62`) and the four-byte header
/// (`63 <= n <= 258047`).  Padding bits must be zero, so parsing is the exact
/// inverse of [`to_graph6`].
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::EmptyInput);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { offset, byte: b });
        }
    }
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        // Four-byte form: '~' then 18 bits.  The eight-byte form (n beyond
        // 258047) is out of supported range.
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Graph6Error::UnsupportedSize { n: G6_MAX_N + 1 });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader { offset: bytes.len() });
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        if n <= 62 {
            // Canonical encodings use the short header for small n.
            return Err(Graph6Error::BadHeader { offset: 0 });
        }
        (n, 4)
    };
    let bit_count = n * (n.saturating_sub(1)) / 2;
    let data_len = bit_count.div_ceil(6);
    let expected_len = header_len + data_len;
    if bytes.len() < expected_len {
        return Err(Graph6Error::Truncated { expected_len, found_len: bytes.len() });
    }
    if bytes.len() > expected_len {
        return Err(Graph6Error::TrailingBytes { offset: expected_len });
    }
    let mut g = Graph::edgeless(n);
    let mut pos = 0usize;
    // Upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[header_len + pos / 6] - 63;
            if (byte >> (5 - pos % 6)) & 1 == 1 {
                g.insert_edge(i, j);
            }
            pos += 1;
        }
    }
    // Remaining bits of the last data byte must be zero.
    while !pos.is_multiple_of(6) {
        let byte = bytes[header_len + pos / 6] - 63;
        if (byte >> (5 - pos % 6)) & 1 == 1 {
            return Err(Graph6Error::NonZeroPadding { offset: header_len + pos / 6 });
        }
        pos += 1;
    }
    Ok(g)
}

/// Serializes a graph as one graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > G6_MAX_N {
        return Err(Graph6Error::UnsupportedSize { n });
    }
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push(acc + 63);
    }
    // All bytes are in 63..=126 by construction.
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Errors from edge-list parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeListError {
    MissingHeader,
    BadToken { line: usize, token: String },
    WrongEdgeCount { expected: usize, found: usize },
    Graph(GraphError),
}

impl fmt::Display for EdgeListError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeListError::MissingHeader => write!(f, "missing `n m` header line"),
            EdgeListError::BadToken { line, token } => {
                write!(f, "unparsable token {token:?} on line {line}")
            }
            EdgeListError::WrongEdgeCount { expected, found } => {
                write!(f, "header announced {expected} edges, found {found}")
            }
            EdgeListError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for EdgeListError {}

impl From<GraphError> for EdgeListError {
    fn from(e: GraphError) -> Self {
        EdgeListError::Graph(e)
    }
}

/// Parses the plain edge-list format: a `n m` header line, then `m` lines
/// `u v` with 0-based endpoints.  Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (header_no, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let mut header_it = header.split_whitespace();
    let n = parse_usize(header_it.next(), header_no)?;
    let m = parse_usize(header_it.next(), header_no)?;
    if header_it.next().is_some() {
        return Err(EdgeListError::BadToken { line: header_no + 1, token: String::from(header) });
    }
    let mut g = Graph::edgeless(n);
    let mut found = 0usize;
    for (line_no, line) in lines {
        let mut it = line.split_whitespace();
        let u = parse_usize(it.next(), line_no)?;
        let v = parse_usize(it.next(), line_no)?;
        if it.next().is_some() {
            return Err(EdgeListError::BadToken { line: line_no + 1, token: String::from(line) });
        }
        g.add_edge(u, v)?;
        found += 1;
    }
    if found != m {
        return Err(EdgeListError::WrongEdgeCount { expected: m, found });
    }
    Ok(g)
}

fn parse_usize(token: Option<&str>, line_no: usize) -> Result<usize, EdgeListError> {
    let token = token.ok_or(EdgeListError::BadToken {
        line: line_no + 1,
        token: String::from("<missing>"),
    })?;
    token.parse().map_err(|_| EdgeListError::BadToken {
        line: line_no + 1,
        token: String::from(token),
    })
}

/// Serializes a graph in the edge-list format, edges lexicographically.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// DOT output for visualization.  Every vertex gets a node line so isolated
/// vertices are visible.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
