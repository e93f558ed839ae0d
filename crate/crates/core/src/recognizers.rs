//! Certificate-producing recognizers.
//!
//! Every recognizer returns either a replayable certificate of membership or
//! a concrete forbidden structure:
//!
//! - cograph: a cotree, or four vertices inducing `P4`;
//! - chordal: a perfect elimination ordering, or an induced chordless cycle;
//! - threshold: a creation sequence, or an induced `C4`/`P4`/`2K2`;
//! - split: a clique/independent partition, or an induced `2K2`/`C4`/`C5`.
//!
//! Certificates are self-validating (`Cotree::evaluate`,
//! `CreationSequence::replay`, `EliminationOrdering::verify`,
//! `SplitPartition::validate`), so callers never have to trust the
//! recognizer's search.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::combin::find_subset;
use crate::graph::{Graph, GraphError, VertexSet};

// ---------------------------------------------------------------------------
// Induced-subgraph witness searches
// ---------------------------------------------------------------------------

fn induced_edges(g: &Graph, verts: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// If `verts` (4 vertices) induces a path, returns it in path order starting
/// from the smaller endpoint.
fn as_induced_p4(g: &Graph, verts: &[usize]) -> Option<[usize; 4]> {
    let edges = induced_edges(g, verts);
    if edges.len() != 3 {
        return None;
    }
    let deg = |v: usize| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
    let mut ends: Vec<usize> = verts.iter().copied().filter(|&v| deg(v) == 1).collect();
    if ends.len() != 2 {
        return None; // degree profile of K3 plus isolated, or a star
    }
    ends.sort_unstable();
    let mut path = vec![ends[0]];
    while path.len() < 4 {
        let last = *path.last().unwrap();
        let next = verts
            .iter()
            .copied()
            .find(|&v| !path.contains(&v) && g.has_edge(last, v))?;
        path.push(next);
    }
    (*path.last().unwrap() == ends[1]).then(|| [path[0], path[1], path[2], path[3]])
}

fn as_induced_cycle(g: &Graph, verts: &[usize]) -> Option<Vec<usize>> {
    let k = verts.len();
    let edges = induced_edges(g, verts);
    if edges.len() != k {
        return None;
    }
    let deg = |v: usize| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
    if verts.iter().any(|&v| deg(v) != 2) {
        return None;
    }
    // 2-regular on k vertices with k edges is a single cycle iff connected;
    // walk it starting at the smallest vertex toward its smaller neighbor.
    let start = *verts.iter().min().unwrap();
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    loop {
        let at = *cycle.last().unwrap();
        let next = verts
            .iter()
            .copied()
            .filter(|&v| v != at && v != prev && g.has_edge(at, v))
            .min()?;
        if next == start {
            break;
        }
        prev = at;
        cycle.push(next);
    }
    (cycle.len() == k).then_some(cycle)
}

fn as_induced_2k2(g: &Graph, verts: &[usize]) -> Option<[usize; 4]> {
    let edges = induced_edges(g, verts);
    if edges.len() != 2 {
        return None;
    }
    let (a, b) = edges[0];
    let (c, d) = edges[1];
    // Two edges on 4 vertices are a perfect matching iff they are disjoint.
    (a != c && a != d && b != c && b != d).then_some([a, b, c, d])
}

fn find_p4_among(g: &Graph, verts: &[usize]) -> Option<[usize; 4]> {
    let mut found = None;
    find_subset(verts.len(), 4, |idx| {
        let pick = [verts[idx[0]], verts[idx[1]], verts[idx[2]], verts[idx[3]]];
        found = as_induced_p4(g, &pick);
        found.is_some()
    });
    found
}

/// Four vertices inducing a path, in path order, if any exist.
pub fn find_induced_p4(g: &Graph) -> Option<[usize; 4]> {
    let all: Vec<usize> = (0..g.n()).collect();
    find_p4_among(g, &all)
}

/// Four vertices inducing a 4-cycle, in cyclic order, if any exist.
pub fn find_induced_c4(g: &Graph) -> Option<[usize; 4]> {
    let mut found = None;
    find_subset(g.n(), 4, |idx| {
        found = as_induced_cycle(g, idx).map(|c| [c[0], c[1], c[2], c[3]]);
        found.is_some()
    });
    found
}

/// Four vertices inducing two disjoint edges `[a, b, c, d]` (edges `ab` and
/// `cd`), if any exist.
pub fn find_induced_2k2(g: &Graph) -> Option<[usize; 4]> {
    let mut found = None;
    find_subset(g.n(), 4, |idx| {
        found = as_induced_2k2(g, idx);
        found.is_some()
    });
    found
}

/// True iff no four vertices induce two disjoint edges.
pub fn is_2k2_free(g: &Graph) -> bool {
    find_induced_2k2(g).is_none()
}

// ---------------------------------------------------------------------------
// Cographs
// ---------------------------------------------------------------------------

/// A cotree: a recognition certificate for cographs.  Evaluating it by
/// taking graph unions at `Union` nodes and joins at `Join` nodes rebuilds
/// the recognized graph exactly (leaves carry the original vertex indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CotreeError {
    DuplicateLeaf { vertex: usize },
    /// Leaves must be exactly `0..n` for some n.
    NonContiguousLeaves,
    /// Internal nodes need at least two children (the empty root stands for
    /// the empty graph).
    UnaryInternalNode,
}

impl fmt::Display for CotreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CotreeError::DuplicateLeaf { vertex } => write!(f, "duplicate cotree leaf {vertex}"),
            CotreeError::NonContiguousLeaves => write!(f, "cotree leaves are not 0..n"),
            CotreeError::UnaryInternalNode => write!(f, "cotree internal node with fewer than two children"),
        }
    }
}

impl core::error::Error for CotreeError {}

impl Cotree {
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(cs) | Cotree::Join(cs) => {
                for c in cs {
                    c.collect_leaves(out);
                }
            }
        }
    }

    fn check_arity(&self, is_root: bool) -> Result<(), CotreeError> {
        match self {
            Cotree::Leaf(_) => Ok(()),
            Cotree::Union(cs) | Cotree::Join(cs) => {
                if cs.len() < 2 && !(is_root && cs.is_empty()) {
                    return Err(CotreeError::UnaryInternalNode);
                }
                for c in cs {
                    c.check_arity(false)?;
                }
                Ok(())
            }
        }
    }

    /// Rebuilds the graph the cotree describes, on vertices `0..n`.
    pub fn evaluate(&self) -> Result<Graph, CotreeError> {
        self.check_arity(true)?;
        let mut leaves = self.leaves();
        let n = leaves.len();
        leaves.sort_unstable();
        for (i, &v) in leaves.iter().enumerate() {
            if v != i {
                return Err(if leaves[..i].contains(&v) {
                    CotreeError::DuplicateLeaf { vertex: v }
                } else {
                    CotreeError::NonContiguousLeaves
                });
            }
        }
        let mut g = Graph::edgeless(n);
        self.add_edges(&mut g);
        Ok(g)
    }

    fn add_edges(&self, g: &mut Graph) {
        if let Cotree::Union(cs) | Cotree::Join(cs) = self {
            for c in cs {
                c.add_edges(g);
            }
            if let Cotree::Join(cs) = self {
                // Cross edges between every pair of child leaf sets.
                let leaf_sets: Vec<Vec<usize>> = cs.iter().map(|c| c.leaves()).collect();
                for i in 0..leaf_sets.len() {
                    for j in i + 1..leaf_sets.len() {
                        for &u in &leaf_sets[i] {
                            for &v in &leaf_sets[j] {
                                g.add_edge(u, v).expect("leaves validated");
                            }
                        }
                    }
                }
            }
        }
    }

    /// True iff the cotree is well formed and evaluates to exactly `g`.
    pub fn validates(&self, g: &Graph) -> bool {
        self.evaluate().is_ok_and(|h| h == *g)
    }
}

/// Recognizes cographs by recursive complement-component decomposition.
///
/// Returns a cotree whose evaluation reproduces `g`, or four vertices
/// inducing a path as the non-membership witness.
pub fn recognize_cograph(g: &Graph) -> Result<Cotree, [usize; 4]> {
    let all: Vec<usize> = (0..g.n()).collect();
    if g.n() == 0 {
        return Ok(Cotree::Union(Vec::new()));
    }
    decompose_cograph(g, &all)
}

fn decompose_cograph(g: &Graph, verts: &[usize]) -> Result<Cotree, [usize; 4]> {
    if verts.len() == 1 {
        return Ok(Cotree::Leaf(verts[0]));
    }
    let keep: VertexSet = verts.iter().copied().collect();
    let sub = g.induced_subgraph(&keep).expect("vertices in range");
    let comps = sub.graph.components();
    if comps.len() > 1 {
        let children = comps
            .into_iter()
            .map(|comp| {
                let orig: Vec<usize> = comp.into_iter().map(|v| sub.old_of_new[v]).collect();
                decompose_cograph(g, &orig)
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Cotree::Union(children));
    }
    let co_comps = sub.graph.complement().components();
    if co_comps.len() > 1 {
        let children = co_comps
            .into_iter()
            .map(|comp| {
                let orig: Vec<usize> = comp.into_iter().map(|v| sub.old_of_new[v]).collect();
                decompose_cograph(g, &orig)
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Cotree::Join(children));
    }
    // Connected with connected complement: such a graph always contains an
    // induced P4 (and has at least 4 vertices).
    Err(find_p4_among(g, verts).expect("connected co-connected graph contains P4"))
}

// ---------------------------------------------------------------------------
// Chordal graphs
// ---------------------------------------------------------------------------

/// A perfect elimination ordering; `ordering[0]` is eliminated first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrdering(pub Vec<usize>);

impl EliminationOrdering {
    /// Full check of the defining property: for each vertex, its neighbors
    /// occurring later in the ordering are pairwise adjacent.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.0.len() != n {
            return false;
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.0.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return false;
            }
            pos[v] = i;
        }
        for &v in &self.0 {
            let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
            if !g.is_clique(&later) {
                return false;
            }
        }
        true
    }
}

/// Recognizes chordal graphs by lexicographic BFS followed by the standard
/// elimination check.  On failure returns an induced chordless cycle (length
/// at least 4) in cyclic order.
pub fn recognize_chordal(g: &Graph) -> Result<EliminationOrdering, Vec<usize>> {
    let order = lex_bfs(g);
    let n = g.n();
    let mut pos = vec![0usize; n];
    // Elimination order is the reverse of the visit order.
    let peo: Vec<usize> = order.iter().rev().copied().collect();
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &peo {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else { continue };
        for &w in &later {
            if w != parent && !g.has_edge(parent, w) {
                return Err(extract_chordless_cycle(g));
            }
        }
    }
    Ok(EliminationOrdering(peo))
}

/// Lexicographic BFS; ties broken by smallest vertex index.
fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let next = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited[next] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            if !visited[w] {
                labels[w].push(n - step); // descending stamps keep labels sorted
            }
        }
    }
    order
}

/// Finds an induced cycle of length >= 4 in a non-chordal graph.
///
/// For every vertex `v` with a non-adjacent neighbor pair `(a, b)`, a
/// shortest a-b path avoiding `N[v] \ {a, b}` closes into a chordless cycle
/// through `v`; any chordless cycle arises this way, so the scan always
/// succeeds on non-chordal inputs.
fn extract_chordless_cycle(g: &Graph) -> Vec<usize> {
    let n = g.n();
    for v in 0..n {
        let nbrs: Vec<usize> = g.neighbors(v).iter().copied().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut blocked = vec![false; n];
                blocked[v] = true;
                for &w in &nbrs {
                    if w != a && w != b {
                        blocked[w] = true;
                    }
                }
                if let Some(path) = shortest_path_avoiding(g, a, b, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    debug_assert!(cycle.len() >= 4);
                    return cycle;
                }
            }
        }
    }
    unreachable!("caller established the graph is not chordal");
}

fn shortest_path_avoiding(g: &Graph, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    let mut queue = alloc::collections::VecDeque::new();
    queue.push_back(from);
    prev[from] = from;
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut at = to;
            while at != from {
                at = prev[at];
                path.push(at);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if !blocked[w] && prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Threshold graphs
// ---------------------------------------------------------------------------

/// How a vertex enters during threshold construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexTag {
    Isolated,
    Dominating,
}

/// A threshold-graph certificate: vertices in construction order with their
/// insertion tags.  The first tag is conventional (a lone vertex is both).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CreationSequence {
    pub order: Vec<usize>,
    pub tags: Vec<VertexTag>,
}

/// The construction order must visit each vertex of `0..n` exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotAPermutation {
    pub vertex: usize,
}

impl fmt::Display for NotAPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "creation order is not a permutation (vertex {})", self.vertex)
    }
}

impl core::error::Error for NotAPermutation {}

impl CreationSequence {
    /// Replays the construction on the original vertex indices; the result
    /// equals the recognized graph exactly.
    pub fn replay(&self) -> Result<Graph, NotAPermutation> {
        let n = self.order.len();
        let mut seen = vec![false; n];
        for &v in &self.order {
            if v >= n || seen[v] {
                return Err(NotAPermutation { vertex: v });
            }
            seen[v] = true;
        }
        let mut g = Graph::edgeless(n);
        for (i, &v) in self.order.iter().enumerate() {
            if self.tags[i] == VertexTag::Dominating {
                for &p in &self.order[..i] {
                    g.add_edge(v, p).expect("distinct in-range vertices");
                }
            }
        }
        Ok(g)
    }

    /// Replays tags onto fresh vertices `0..len` in order.
    pub fn replay_tags(tags: &[VertexTag]) -> Graph {
        let seq = CreationSequence { order: (0..tags.len()).collect(), tags: tags.to_vec() };
        seq.replay().expect("identity order is valid")
    }
}

/// An induced obstruction to being a threshold graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenSubgraph {
    pub kind: ForbiddenKind,
    /// `C4` in cyclic order, `P4` in path order, `2K2` as `[a, b, c, d]`
    /// with edges `ab` and `cd`.
    pub vertices: [usize; 4],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForbiddenKind {
    C4,
    P4,
    TwoK2,
}

/// Recognizes threshold graphs by peeling: repeatedly remove a dominating
/// vertex if one exists, otherwise an isolated vertex, ties to the lowest
/// index.  If neither exists the remainder contains an induced `C4`, `P4`,
/// or `2K2`, which is returned as the witness.
pub fn recognize_threshold(g: &Graph) -> Result<CreationSequence, ForbiddenSubgraph> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive_count = n;
    let mut removal: Vec<(usize, VertexTag)> = Vec::with_capacity(n);
    while alive_count > 0 {
        let dominating = (0..n).find(|&v| alive[v] && degree[v] == alive_count - 1);
        let pick = match dominating {
            Some(v) => (v, VertexTag::Dominating),
            None => match (0..n).find(|&v| alive[v] && degree[v] == 0) {
                Some(v) => (v, VertexTag::Isolated),
                None => {
                    let rest: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
                    return Err(forbidden_among(g, &rest)
                        .expect("a graph with no dominating or isolated vertex is not threshold"));
                }
            },
        };
        alive[pick.0] = false;
        alive_count -= 1;
        for &w in g.neighbors(pick.0) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
        removal.push(pick);
    }
    removal.reverse();
    let (order, tags): (Vec<_>, Vec<_>) = removal.into_iter().unzip();
    let seq = CreationSequence { order, tags };
    debug_assert_eq!(seq.replay().as_ref(), Ok(g));
    Ok(seq)
}

fn forbidden_among(g: &Graph, verts: &[usize]) -> Option<ForbiddenSubgraph> {
    let mut found = None;
    find_subset(verts.len(), 4, |idx| {
        let pick = [verts[idx[0]], verts[idx[1]], verts[idx[2]], verts[idx[3]]];
        found = classify_forbidden(g, &pick);
        found.is_some()
    });
    found
}

fn classify_forbidden(g: &Graph, pick: &[usize; 4]) -> Option<ForbiddenSubgraph> {
    if let Some(c) = as_induced_cycle(g, pick) {
        return Some(ForbiddenSubgraph { kind: ForbiddenKind::C4, vertices: [c[0], c[1], c[2], c[3]] });
    }
    if let Some(p) = as_induced_p4(g, pick) {
        return Some(ForbiddenSubgraph { kind: ForbiddenKind::P4, vertices: p });
    }
    as_induced_2k2(g, pick).map(|m| ForbiddenSubgraph { kind: ForbiddenKind::TwoK2, vertices: m })
}

// ---------------------------------------------------------------------------
// Split graphs
// ---------------------------------------------------------------------------

/// A partition of the vertices into a clique and an independent set.  The
/// independent part may be empty (complete graphs are split).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    pub fn validate(&self, g: &Graph) -> bool {
        if self.clique.len() + self.independent.len() != g.n() {
            return false;
        }
        if self.clique.intersection(&self.independent).next().is_some() {
            return false;
        }
        g.is_clique(&self.clique) && g.is_independent_set(&self.independent)
    }
}

/// An induced obstruction to being a split graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitObstruction {
    pub kind: SplitObstructionKind,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitObstructionKind {
    TwoK2,
    C4,
    C5,
}

/// Recognizes split graphs by the degree-sequence criterion: with degrees
/// sorted non-increasingly and `m = max{i : d_i >= i - 1}`, the graph is
/// split iff `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`, and then the `m`
/// highest-degree vertices form the clique.  The partition is re-checked
/// structurally before being returned.
pub fn recognize_split(g: &Graph) -> Result<SplitPartition, SplitObstruction> {
    let n = g.n();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_unstable_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let degrees: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=n).take_while(|&i| degrees[i - 1] >= i - 1).count();
    let left: usize = degrees[..m].iter().sum();
    let right: usize = m * (m.saturating_sub(1)) + degrees[m..].iter().sum::<usize>();
    if left == right {
        let partition = SplitPartition {
            clique: by_degree[..m].iter().copied().collect(),
            independent: by_degree[m..].iter().copied().collect(),
        };
        debug_assert!(partition.validate(g));
        return Ok(partition);
    }
    Err(split_obstruction(g).expect("non-split graph contains 2K2, C4, or C5"))
}

fn split_obstruction(g: &Graph) -> Option<SplitObstruction> {
    if let Some(m) = find_induced_2k2(g) {
        return Some(SplitObstruction { kind: SplitObstructionKind::TwoK2, vertices: m.to_vec() });
    }
    if let Some(c) = find_induced_c4(g) {
        return Some(SplitObstruction { kind: SplitObstructionKind::C4, vertices: c.to_vec() });
    }
    let mut found = None;
    find_subset(g.n(), 5, |idx| {
        found = as_induced_cycle(g, idx);
        found.is_some()
    });
    found.map(|c| SplitObstruction { kind: SplitObstructionKind::C5, vertices: c })
}

// ---------------------------------------------------------------------------
// Trivially perfect graphs and nested neighborhoods
// ---------------------------------------------------------------------------

/// True iff the graph has neither an induced `P4` nor an induced `C4`.
pub fn is_trivially_perfect(g: &Graph) -> bool {
    recognize_cograph(g).is_ok() && find_induced_c4(g).is_none()
}

/// Outcome of ordering a vertex set by neighborhood containment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NestedNeighborhoodResult {
    /// `v_1, ..., v_k` with `N(v_i) ⊆ N(v_{i+1})`.
    Ordered(Vec<usize>),
    /// Two members whose neighborhoods are incomparable.
    Incomparable(usize, usize),
}

/// Orders `u` so that open neighborhoods are nested, if possible.
///
/// Sorting by degree is sound because containment implies a degree order;
/// only consecutive containments need checking afterwards.
pub fn nested_neighborhood_order(
    g: &Graph,
    u: &VertexSet,
) -> Result<NestedNeighborhoodResult, GraphError> {
    for &v in u {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    let mut members: Vec<usize> = u.iter().copied().collect();
    members.sort_unstable_by(|&a, &b| g.degree(a).cmp(&g.degree(b)).then(a.cmp(&b)));
    for pair in members.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if !g.neighbors(a).is_subset(g.neighbors(b)) {
            return Ok(NestedNeighborhoodResult::Incomparable(a, b));
        }
    }
    Ok(NestedNeighborhoodResult::Ordered(members))
}
