//! The ground-truth connectivity oracle.
//!
//! Local connectivity `kappa(u, v)` — the maximum number of internally
//! disjoint u-v paths — is computed exactly by max-flow on the vertex-split
//! network: every vertex other than the endpoints becomes an `in -> out` arc
//! of capacity one, edges become arcs of unbounded capacity, and the flow
//! value from `out(u)` to `in(v)` counts the paths.  For adjacent pairs the
//! direct edge is removed first and the answer incremented, since a length-one
//! path has no internal vertex to meter.
//!
//! Everything downstream of the flow is bookkeeping: path extraction, the
//! pairwise sweep deciding ideal connectedness (`kappa(u, v) =
//! min{deg(u), deg(v)}` for every pair), exact average connectivity, and the
//! fault-set sweep for strong m-Menger connectivity.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::combin::find_subset;
use crate::graph::{Graph, VertexSet};

/// Errors from connectivity queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConnectivityError {
    /// Local connectivity is undefined for a vertex paired with itself.
    SameVertex { vertex: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    /// The query needs at least `need` vertices.
    TooFewVertices { n: usize, need: usize },
    /// The fault budget exceeds the vertex count.
    FaultBudgetTooLarge { m: usize, n: usize },
    /// A separator query requires a non-adjacent pair.
    AdjacentPair { u: usize, v: usize },
}

impl fmt::Display for ConnectivityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnectivityError::SameVertex { vertex } => {
                write!(f, "local connectivity of vertex {vertex} with itself is undefined")
            }
            ConnectivityError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            ConnectivityError::TooFewVertices { n, need } => {
                write!(f, "operation needs at least {need} vertices, graph has {n}")
            }
            ConnectivityError::FaultBudgetTooLarge { m, n } => {
                write!(f, "fault budget {m} exceeds vertex count {n}")
            }
            ConnectivityError::AdjacentPair { u, v } => {
                write!(f, "vertices {u} and {v} are adjacent; no separator exists")
            }
        }
    }
}

impl core::error::Error for ConnectivityError {}

/// A family of internally disjoint paths between two fixed endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSystem {
    pub source: usize,
    pub target: usize,
    /// Each path as its full vertex sequence, source first.
    pub paths: Vec<Vec<usize>>,
}

/// Violations detected by [`PathSystem::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathSystemError {
    EndpointsEqual,
    EndpointOutOfRange { vertex: usize },
    BadPath { index: usize },
    /// Some vertex is internal to two different paths.
    SharedInternalVertex { vertex: usize },
    /// More than one path is the bare edge between the endpoints.
    DuplicateDirectEdge,
    /// The queried vertex is not an endpoint of the system.
    NotAnEndpoint { vertex: usize },
}

impl fmt::Display for PathSystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathSystemError::EndpointsEqual => write!(f, "path system endpoints coincide"),
            PathSystemError::EndpointOutOfRange { vertex } => {
                write!(f, "endpoint {vertex} out of range")
            }
            PathSystemError::BadPath { index } => {
                write!(f, "path {index} is not a simple source-target path in the graph")
            }
            PathSystemError::SharedInternalVertex { vertex } => {
                write!(f, "vertex {vertex} is internal to more than one path")
            }
            PathSystemError::DuplicateDirectEdge => {
                write!(f, "more than one direct-edge path")
            }
            PathSystemError::NotAnEndpoint { vertex } => {
                write!(f, "vertex {vertex} is not an endpoint of the path system")
            }
        }
    }
}

impl core::error::Error for PathSystemError {}

impl PathSystem {
    /// Checks every invariant against `g`: each path is a simple
    /// source-target walk along edges, paths share only the endpoints, and at
    /// most one path is the direct edge.
    pub fn validate(&self, g: &Graph) -> Result<(), PathSystemError> {
        let n = g.n();
        if self.source == self.target {
            return Err(PathSystemError::EndpointsEqual);
        }
        for &e in [self.source, self.target].iter() {
            if e >= n {
                return Err(PathSystemError::EndpointOutOfRange { vertex: e });
            }
        }
        let mut internal_seen: BTreeSet<usize> = BTreeSet::new();
        let mut direct_edges = 0usize;
        for (index, path) in self.paths.iter().enumerate() {
            if path.len() < 2
                || path[0] != self.source
                || *path.last().unwrap() != self.target
            {
                return Err(PathSystemError::BadPath { index });
            }
            let mut within: BTreeSet<usize> = BTreeSet::new();
            for window in path.windows(2) {
                if !g.has_edge(window[0], window[1]) {
                    return Err(PathSystemError::BadPath { index });
                }
            }
            for &v in path {
                if v >= n || !within.insert(v) {
                    return Err(PathSystemError::BadPath { index });
                }
            }
            for &v in &path[1..path.len() - 1] {
                if !internal_seen.insert(v) {
                    return Err(PathSystemError::SharedInternalVertex { vertex: v });
                }
            }
            if path.len() == 2 {
                direct_edges += 1;
                if direct_edges > 1 {
                    return Err(PathSystemError::DuplicateDirectEdge);
                }
            }
        }
        Ok(())
    }
}

/// A failing pair for ideal connectedness: `local < bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealityWitness {
    pub u: usize,
    pub v: usize,
    /// `kappa(u, v)`.
    pub local: usize,
    /// `min{deg(u), deg(v)}`.
    pub bound: usize,
}

/// The result of the pairwise ideal-connectedness sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealityReport {
    pub ideally_connected: bool,
    /// First failing pair in lexicographic order, when not ideally connected.
    pub witness: Option<IdealityWitness>,
    /// Global vertex connectivity (minimum pairwise local connectivity;
    /// `n - 1` for complete graphs, 0 for the one-vertex graph).
    pub kappa: usize,
    /// Full symmetric matrix of local connectivities, on request.
    pub local_table: Option<Vec<Vec<usize>>>,
}

/// Verdict of the strong m-Menger sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MengerVerdict {
    pub holds: bool,
    /// First fault set (ordered by size, then lexicographically) whose
    /// removal leaves a non-ideally-connected graph.
    pub failing_fault_set: Option<Vec<usize>>,
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<(), ConnectivityError> {
    let n = g.n();
    if u >= n {
        return Err(ConnectivityError::VertexOutOfRange { vertex: u, n });
    }
    if v >= n {
        return Err(ConnectivityError::VertexOutOfRange { vertex: v, n });
    }
    if u == v {
        return Err(ConnectivityError::SameVertex { vertex: u });
    }
    Ok(())
}

/// `kappa(u, v)`: the maximum number of internally disjoint u-v paths.
pub fn local_connectivity(g: &Graph, u: usize, v: usize) -> Result<usize, ConnectivityError> {
    check_pair(g, u, v)?;
    if g.has_edge(u, v) {
        // The direct edge is always part of a maximum family; count it and
        // route the rest through the split network without that edge.
        let mut net = SplitNetwork::new(&g.without_edge(u, v), u, v);
        Ok(net.max_flow() + 1)
    } else {
        let mut net = SplitNetwork::new(g, u, v);
        Ok(net.max_flow())
    }
}

/// A maximum family of internally disjoint u-v paths, extracted from the
/// flow.  `paths.len()` equals [`local_connectivity`].
pub fn disjoint_paths(g: &Graph, u: usize, v: usize) -> Result<PathSystem, ConnectivityError> {
    check_pair(g, u, v)?;
    let mut paths = Vec::new();
    let adjacent = g.has_edge(u, v);
    let flow_graph = if adjacent { g.without_edge(u, v) } else { g.clone() };
    let mut net = SplitNetwork::new(&flow_graph, u, v);
    net.max_flow();
    paths.extend(net.extract_paths());
    if adjacent {
        paths.push(vec![u, v]);
    }
    let system = PathSystem { source: u, target: v, paths };
    debug_assert!(system.validate(g).is_ok());
    Ok(system)
}

/// Global vertex connectivity.
///
/// Disconnected graphs have connectivity 0 and the complete graph `K_n` has
/// connectivity `n - 1`; otherwise some minimum cutset separates a
/// non-adjacent pair, so the minimum over non-adjacent pairs suffices.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, ConnectivityError> {
    let n = g.n();
    if n == 0 {
        return Err(ConnectivityError::TooFewVertices { n, need: 1 });
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let mut best = n - 1;
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) {
                let mut net = SplitNetwork::new(g, u, v);
                best = best.min(net.max_flow());
            }
        }
    }
    Ok(best)
}

/// A minimum u-v separator for a non-adjacent pair, extracted from the
/// residual network of a maximum flow.
pub fn minimum_separator(g: &Graph, u: usize, v: usize) -> Result<VertexSet, ConnectivityError> {
    check_pair(g, u, v)?;
    if g.has_edge(u, v) {
        return Err(ConnectivityError::AdjacentPair { u, v });
    }
    let mut net = SplitNetwork::new(g, u, v);
    let flow = net.max_flow();
    let cut = net.separator();
    debug_assert_eq!(cut.len(), flow);
    Ok(cut)
}

/// The full symmetric matrix of pairwise local connectivities.
#[allow(clippy::needless_range_loop)] // symmetric fill of table[u][v] and table[v][u]
pub fn local_connectivity_table(g: &Graph) -> Result<Vec<Vec<usize>>, ConnectivityError> {
    let n = g.n();
    let mut table = vec![vec![0usize; n]; n];
    for u in 0..n {
        for v in (u + 1)..n {
            let k = local_connectivity(g, u, v)?;
            table[u][v] = k;
            table[v][u] = k;
        }
    }
    Ok(table)
}

/// Decides ideal connectedness by the full pairwise sweep.
///
/// `with_table` additionally returns the local-connectivity matrix.
pub fn is_ideally_connected(g: &Graph, with_table: bool) -> Result<IdealityReport, ConnectivityError> {
    let n = g.n();
    if n == 0 {
        return Err(ConnectivityError::TooFewVertices { n, need: 1 });
    }
    let mut table = if with_table { Some(vec![vec![0usize; n]; n]) } else { None };
    let mut witness: Option<IdealityWitness> = None;
    let mut kappa = if n == 1 { 0 } else { n - 1 };
    for u in 0..n {
        for v in (u + 1)..n {
            let local = local_connectivity(g, u, v)?;
            kappa = kappa.min(local);
            if let Some(t) = table.as_mut() {
                t[u][v] = local;
                t[v][u] = local;
            }
            let bound = g.degree(u).min(g.degree(v));
            if local < bound && witness.is_none() {
                witness = Some(IdealityWitness { u, v, local, bound });
            }
        }
    }
    Ok(IdealityReport {
        ideally_connected: witness.is_none(),
        witness,
        kappa,
        local_table: table,
    })
}

/// Exact average of `kappa(u, v)` over unordered pairs.
pub fn average_connectivity(g: &Graph) -> Result<Ratio<u64>, ConnectivityError> {
    let n = g.n();
    if n < 2 {
        return Err(ConnectivityError::TooFewVertices { n, need: 2 });
    }
    let mut sum: u64 = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            sum += local_connectivity(g, u, v)? as u64;
        }
    }
    let pairs = (n as u64) * (n as u64 - 1) / 2;
    Ok(Ratio::new(sum, pairs))
}

/// Checks strong m-Menger connectivity: every removal of at most `m`
/// vertices must leave an ideally connected graph.
///
/// Fault sets are enumerated by size and then lexicographically, and the
/// sweep stops at the first failure, so the reported set is deterministic.
/// With `m = 0` this coincides with [`is_ideally_connected`].
pub fn is_strongly_m_menger(g: &Graph, m: usize) -> Result<MengerVerdict, ConnectivityError> {
    let n = g.n();
    if m > n {
        return Err(ConnectivityError::FaultBudgetTooLarge { m, n });
    }
    for size in 0..=m {
        let failing = find_subset(n, size, |subset| {
            let remove: VertexSet = subset.iter().copied().collect();
            let reduced = g.remove_vertices(&remove).expect("fault set is in range");
            if reduced.graph.n() == 0 {
                return false; // empty remainder is vacuously ideal
            }
            let report = is_ideally_connected(&reduced.graph, false)
                .expect("remainder is nonempty");
            !report.ideally_connected
        });
        if let Some(fault) = failing {
            return Ok(MengerVerdict { holds: false, failing_fault_set: Some(fault) });
        }
    }
    Ok(MengerVerdict { holds: true, failing_fault_set: None })
}

/// True iff every neighbor of `u` other than the opposite endpoint is an
/// internal vertex of exactly one path of the system.
pub fn saturates(g: &Graph, ps: &PathSystem, u: usize) -> Result<bool, PathSystemError> {
    ps.validate(g)?;
    let opposite = if u == ps.source {
        ps.target
    } else if u == ps.target {
        ps.source
    } else {
        return Err(PathSystemError::NotAnEndpoint { vertex: u });
    };
    for &w in g.neighbors(u) {
        if w == opposite {
            continue;
        }
        let occurrences = ps
            .paths
            .iter()
            .filter(|p| p[1..p.len() - 1].contains(&w))
            .count();
        if occurrences != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertex-split flow network.  Node `2v` is `in(v)`, node `2v + 1` is
/// `out(v)`; splitter arcs (capacity one) exist for every vertex except the
/// endpoints, and each undirected edge becomes two unbounded arcs.
///
/// Storage is flat: arcs come in forward/reverse pairs (`a ^ 1` is the
/// reverse of `a`) and the adjacency is compressed into one index array, so
/// a network build costs a handful of allocations and the BFS scratch is
/// reused across augmentations.
struct SplitNetwork {
    arc_to: Vec<u32>,
    arc_cap: Vec<u32>,
    adj_start: Vec<u32>,
    adj_arcs: Vec<u32>,
    source: usize,
    sink: usize,
    n: usize,
    prev_arc: Vec<u32>,
    queue: Vec<u32>,
}

const INF: u32 = u32::MAX / 2;
const UNSEEN: u32 = u32::MAX;

impl SplitNetwork {
    fn new(g: &Graph, s: usize, t: usize) -> SplitNetwork {
        let n = g.n();
        let nodes = 2 * n;
        let pair_count = n.saturating_sub(2) + 2 * g.edge_count();
        let mut arc_to: Vec<u32> = Vec::with_capacity(2 * pair_count);
        let mut arc_cap: Vec<u32> = Vec::with_capacity(2 * pair_count);
        let mut arc_from: Vec<u32> = Vec::with_capacity(2 * pair_count);
        let mut push_pair = |from: usize, to: usize, cap: u32| {
            arc_from.push(from as u32);
            arc_to.push(to as u32);
            arc_cap.push(cap);
            arc_from.push(to as u32);
            arc_to.push(from as u32);
            arc_cap.push(0);
        };
        for v in 0..n {
            if v != s && v != t {
                push_pair(2 * v, 2 * v + 1, 1);
            }
        }
        for (a, b) in g.edges() {
            push_pair(2 * a + 1, 2 * b, INF);
            push_pair(2 * b + 1, 2 * a, INF);
        }
        // Counting sort of arc ids by their from-node.
        let mut adj_start = vec![0u32; nodes + 1];
        for &f in &arc_from {
            adj_start[f as usize + 1] += 1;
        }
        for i in 0..nodes {
            adj_start[i + 1] += adj_start[i];
        }
        let mut cursor = adj_start.clone();
        let mut adj_arcs = vec![0u32; arc_from.len()];
        for (arc, &f) in arc_from.iter().enumerate() {
            adj_arcs[cursor[f as usize] as usize] = arc as u32;
            cursor[f as usize] += 1;
        }
        SplitNetwork {
            arc_to,
            arc_cap,
            adj_start,
            adj_arcs,
            source: 2 * s + 1,
            sink: 2 * t,
            n,
            prev_arc: vec![UNSEEN; nodes],
            queue: Vec::with_capacity(nodes),
        }
    }

    fn arcs_from(&self, node: usize) -> &[u32] {
        &self.adj_arcs[self.adj_start[node] as usize..self.adj_start[node + 1] as usize]
    }

    /// Edmonds-Karp; every augmentation carries one unit through a splitter.
    fn max_flow(&mut self) -> usize {
        let mut flow = 0usize;
        while self.bfs_reaches_sink() {
            let mut bottleneck = u32::MAX;
            let mut at = self.sink;
            while at != self.source {
                let a = self.prev_arc[at] as usize;
                bottleneck = bottleneck.min(self.arc_cap[a]);
                at = self.arc_to[a ^ 1] as usize;
            }
            debug_assert!(bottleneck >= 1);
            let mut at = self.sink;
            while at != self.source {
                let a = self.prev_arc[at] as usize;
                self.arc_cap[a] -= bottleneck;
                self.arc_cap[a ^ 1] += bottleneck;
                at = self.arc_to[a ^ 1] as usize;
            }
            flow += bottleneck as usize;
        }
        flow
    }

    /// BFS over positive-capacity arcs, leaving the predecessor arcs in
    /// `prev_arc`.
    fn bfs_reaches_sink(&mut self) -> bool {
        self.prev_arc.fill(UNSEEN);
        self.queue.clear();
        self.queue.push(self.source as u32);
        // The source's own slot marks it visited.
        self.prev_arc[self.source] = 0;
        let mut head = 0;
        while head < self.queue.len() {
            let node = self.queue[head] as usize;
            head += 1;
            if node == self.sink {
                return true;
            }
            for i in self.adj_start[node] as usize..self.adj_start[node + 1] as usize {
                let a = self.adj_arcs[i] as usize;
                let to = self.arc_to[a] as usize;
                if self.arc_cap[a] > 0 && self.prev_arc[to] == UNSEEN {
                    self.prev_arc[to] = a as u32;
                    self.queue.push(to as u32);
                }
            }
        }
        false
    }

    /// Vertices whose splitter arc crosses the residual cut.  Only valid
    /// after `max_flow`.
    fn separator(&mut self) -> VertexSet {
        self.bfs_reaches_sink(); // recompute residual reachability
        (0..self.n)
            .filter(|&v| self.prev_arc[2 * v] != UNSEEN && self.prev_arc[2 * v + 1] == UNSEEN)
            .collect()
    }

    /// Decomposes the flow into vertex sequences.  Each saturated edge arc
    /// carries one unit; conservation plus unit splitters make every walk a
    /// simple path from source to sink.
    fn extract_paths(&self) -> Vec<Vec<usize>> {
        let mut consumed = vec![false; self.arc_to.len()];
        let mut paths = Vec::new();
        let s = self.source / 2;
        loop {
            // A forward edge arc out(s) -> in(w) carries flow iff its
            // reverse arc gained capacity.
            let first = self
                .arcs_from(self.source)
                .iter()
                .map(|&a| a as usize)
                .find(|&a| a % 2 == 0 && self.arc_cap[a ^ 1] > 0 && !consumed[a]);
            let Some(mut arc) = first else { break };
            let mut path = vec![s];
            loop {
                consumed[arc] = true;
                let in_node = self.arc_to[arc] as usize;
                let v = in_node / 2;
                path.push(v);
                if in_node == self.sink {
                    break;
                }
                // Cross the splitter, then pick the unit leaving out(v).
                let out_node = in_node + 1;
                arc = self
                    .arcs_from(out_node)
                    .iter()
                    .map(|&a| a as usize)
                    .find(|&a| a % 2 == 0 && self.arc_cap[a ^ 1] > 0 && !consumed[a])
                    .expect("flow conservation");
            }
            paths.push(path);
        }
        paths
    }
}
