//! Maximal cliques of chordal graphs and their clique trees.
//!
//! A clique tree of a chordal graph assigns the maximal cliques to the nodes
//! of a tree so that, for every vertex, the nodes whose cliques contain it
//! induce a subtree.  This module verifies such assignments, constructs one
//! (maximum-weight spanning tree of the clique-intersection graph), profiles
//! cliques by size, and decides *clique-tree universality*: whether every
//! tree shape on `|M_G|` nodes admits a valid assignment.
//!
//! For threshold graphs the size profile tells the whole story: an
//! assignment is a clique tree iff, for every `j`, the nodes carrying
//! cliques of size at least `j` induce a subtree.  That nested-subtree test
//! and the breadth-first largest-clique-first assignment it justifies are
//! implemented here and cross-checked against the direct definition by the
//! test suites.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::recognizers::{recognize_chordal, recognize_threshold, ForbiddenSubgraph};

/// The maximal cliques of a chordal graph, each sorted ascending, listed by
/// decreasing size and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalCliqueSet {
    pub cliques: Vec<Vec<usize>>,
}

impl MaximalCliqueSet {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// The clique number: size of the largest maximal clique.
    pub fn omega(&self) -> usize {
        self.cliques.first().map_or(0, Vec::len)
    }

    /// Indices of the cliques containing `v`.
    pub fn containing(&self, v: usize) -> Vec<usize> {
        (0..self.cliques.len())
            .filter(|&i| self.cliques[i].binary_search(&v).is_ok())
            .collect()
    }
}

/// Enumerates the maximal cliques of a chordal graph via its elimination
/// ordering: each vertex with its later neighbors is a candidate, and
/// candidates contained in other candidates are discarded.  A chordal graph
/// has at most `n` maximal cliques.
pub fn maximal_cliques_chordal(g: &Graph) -> Result<MaximalCliqueSet, CliqueTreeError> {
    let peo = recognize_chordal(g).map_err(CliqueTreeError::NotChordal)?;
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.0.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(n);
    for &v in &peo.0 {
        let mut cand: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        cand.push(v);
        cand.sort_unstable();
        candidates.push(cand);
    }
    candidates.sort_unstable();
    candidates.dedup();
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for (i, cand) in candidates.iter().enumerate() {
        let contained = candidates.iter().enumerate().any(|(j, other)| {
            j != i && other.len() >= cand.len() && cand.iter().all(|v| other.binary_search(v).is_ok())
        });
        // Equal candidates were deduplicated, so containment here is proper.
        if !contained {
            cliques.push(cand.clone());
        }
    }
    cliques.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    Ok(MaximalCliqueSet { cliques })
}

/// An unlabeled tree on nodes `0..node_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeShape {
    pub node_count: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeShapeError {
    NoNodes,
    WrongEdgeCount { nodes: usize, edges: usize },
    EdgeOutOfRange { edge: (usize, usize) },
    NotConnected,
}

impl fmt::Display for TreeShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeShapeError::NoNodes => write!(f, "a tree needs at least one node"),
            TreeShapeError::WrongEdgeCount { nodes, edges } => {
                write!(f, "a tree on {nodes} nodes has {} edges, found {edges}", nodes - 1)
            }
            TreeShapeError::EdgeOutOfRange { edge } => write!(f, "edge {edge:?} out of range"),
            TreeShapeError::NotConnected => write!(f, "tree edges do not connect all nodes"),
        }
    }
}

impl core::error::Error for TreeShapeError {}

impl TreeShape {
    /// The path `0 - 1 - ... - (k-1)`.
    pub fn path(k: usize) -> TreeShape {
        TreeShape { node_count: k, edges: (1..k).map(|i| (i - 1, i)).collect() }
    }

    /// The star with center 0 and `k - 1` leaves.
    pub fn star(k: usize) -> TreeShape {
        TreeShape { node_count: k, edges: (1..k).map(|i| (0, i)).collect() }
    }

    /// Decodes a Pruefer code into the tree on `code.len() + 2` nodes.
    pub fn from_pruefer(code: &[usize]) -> TreeShape {
        let k = code.len() + 2;
        assert!(code.iter().all(|&c| c < k), "code digits must be below {k}");
        let mut degree = vec![1usize; k];
        for &c in code {
            degree[c] += 1;
        }
        let mut edges = Vec::with_capacity(k - 1);
        for &c in code {
            let leaf = (0..k).find(|&v| degree[v] == 1).expect("a leaf always remains");
            edges.push((leaf.min(c), leaf.max(c)));
            degree[leaf] -= 1;
            degree[c] -= 1;
        }
        let last: Vec<usize> = (0..k).filter(|&v| degree[v] == 1).collect();
        edges.push((last[0], last[1]));
        TreeShape { node_count: k, edges }
    }

    pub fn validate(&self) -> Result<(), TreeShapeError> {
        let k = self.node_count;
        if k == 0 {
            return Err(TreeShapeError::NoNodes);
        }
        if self.edges.len() != k - 1 {
            return Err(TreeShapeError::WrongEdgeCount { nodes: k, edges: self.edges.len() });
        }
        for &(a, b) in &self.edges {
            if a >= k || b >= k || a == b {
                return Err(TreeShapeError::EdgeOutOfRange { edge: (a, b) });
            }
        }
        let adj = self.adjacency();
        let mut seen = vec![false; k];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        // k - 1 edges and connected implies acyclic.
        if count != k {
            return Err(TreeShapeError::NotConnected);
        }
        Ok(())
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.node_count];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn is_path_shape(&self) -> bool {
        self.node_count <= 2 || self.degrees().iter().all(|&d| d <= 2)
    }

    /// Canonical certificate invariant under relabeling: the rooted
    /// encoding at the tree center (or the sorted pair at a bicenter).
    pub fn canonical_form(&self) -> String {
        let adj = self.adjacency();
        let centers = tree_centers(&adj);
        if centers.len() == 1 {
            encode_rooted(&adj, centers[0], usize::MAX)
        } else {
            let a = encode_rooted(&adj, centers[0], centers[1]);
            let b = encode_rooted(&adj, centers[1], centers[0]);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            format!("[{lo}|{hi}]")
        }
    }
}

fn tree_centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let k = adj.len();
    if k <= 2 {
        return (0..k).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; k];
    let mut layer: Vec<usize> = (0..k).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = k;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..k).filter(|&v| !removed[v]).collect()
}

fn encode_rooted(adj: &[Vec<usize>], root: usize, blocked: usize) -> String {
    let mut child_codes: Vec<String> = adj[root]
        .iter()
        .filter(|&&c| c != blocked)
        .map(|&c| encode_rooted(adj, c, root))
        .collect();
    child_codes.sort_unstable();
    let mut out = String::from("(");
    for c in child_codes {
        out.push_str(&c);
    }
    out.push(')');
    out
}

/// All unlabeled trees on `k >= 1` nodes, generated by leaf extension with
/// canonical-form deduplication.  Order is deterministic.
pub fn all_tree_shapes(k: usize) -> Vec<TreeShape> {
    assert!(k >= 1, "tree enumeration needs at least one node");
    let mut shapes = vec![TreeShape { node_count: 1, edges: Vec::new() }];
    for size in 2..=k {
        let mut next: BTreeMap<String, TreeShape> = BTreeMap::new();
        for t in &shapes {
            for attach in 0..t.node_count {
                let mut edges = t.edges.clone();
                edges.push((attach, size - 1));
                let grown = TreeShape { node_count: size, edges };
                next.entry(grown.canonical_form()).or_insert(grown);
            }
        }
        shapes = next.into_values().collect();
    }
    shapes
}

/// A tree shape plus a bijection from its nodes to maximal-clique indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTreePair {
    pub tree: TreeShape,
    /// `assignment[node]` indexes into the associated [`MaximalCliqueSet`].
    pub assignment: Vec<usize>,
}

/// Errors from clique-tree operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliqueTreeError {
    NotChordal(Vec<usize>),
    NotThreshold(ForbiddenSubgraph),
    BadTree(TreeShapeError),
    /// The assignment is not a bijection onto the clique indices.
    AssignmentNotBijection,
    NodeCountMismatch { nodes: usize, cliques: usize },
    /// The graph has no maximal clique (it is empty).
    NoCliques,
    /// Tree enumeration is capped; more cliques than the cap.
    TooManyCliques { count: usize, limit: usize },
}

impl fmt::Display for CliqueTreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliqueTreeError::NotChordal(c) => write!(f, "graph is not chordal (induced cycle {c:?})"),
            CliqueTreeError::NotThreshold(w) => {
                write!(f, "graph is not threshold (induced {:?} on {:?})", w.kind, w.vertices)
            }
            CliqueTreeError::BadTree(e) => write!(f, "{e}"),
            CliqueTreeError::AssignmentNotBijection => {
                write!(f, "assignment is not a bijection onto the maximal cliques")
            }
            CliqueTreeError::NodeCountMismatch { nodes, cliques } => {
                write!(f, "tree has {nodes} nodes but the graph has {cliques} maximal cliques")
            }
            CliqueTreeError::NoCliques => write!(f, "the empty graph has no maximal cliques"),
            CliqueTreeError::TooManyCliques { count, limit } => {
                write!(f, "{count} maximal cliques exceed the enumeration limit {limit}")
            }
        }
    }
}

impl core::error::Error for CliqueTreeError {}

fn check_pair_shape(
    cliques: &MaximalCliqueSet,
    pair: &CliqueTreePair,
) -> Result<(), CliqueTreeError> {
    pair.tree.validate().map_err(CliqueTreeError::BadTree)?;
    if pair.tree.node_count != cliques.len() {
        return Err(CliqueTreeError::NodeCountMismatch {
            nodes: pair.tree.node_count,
            cliques: cliques.len(),
        });
    }
    if pair.assignment.len() != cliques.len() {
        return Err(CliqueTreeError::AssignmentNotBijection);
    }
    let mut seen = vec![false; cliques.len()];
    for &c in &pair.assignment {
        if c >= cliques.len() || seen[c] {
            return Err(CliqueTreeError::AssignmentNotBijection);
        }
        seen[c] = true;
    }
    Ok(())
}

/// Whether the given node subset induces a connected subgraph of the tree.
fn connected_in_tree(adj: &[Vec<usize>], nodes: &[usize]) -> bool {
    if nodes.len() <= 1 {
        return true;
    }
    let in_set: BTreeSet<usize> = nodes.iter().copied().collect();
    let mut seen = BTreeSet::new();
    let mut stack = vec![nodes[0]];
    seen.insert(nodes[0]);
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if in_set.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == nodes.len()
}

/// Verdict of a clique-tree verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTreeVerdict {
    pub valid: bool,
    /// First vertex whose clique nodes fail to induce a subtree.
    pub violating_vertex: Option<usize>,
}

/// Verifies the defining property directly: for every vertex of `g`, the
/// tree nodes whose assigned cliques contain it must induce a subtree.
pub fn verify_clique_tree_pair(
    g: &Graph,
    pair: &CliqueTreePair,
) -> Result<CliqueTreeVerdict, CliqueTreeError> {
    let cliques = maximal_cliques_chordal(g)?;
    check_pair_shape(&cliques, pair)?;
    let adj = pair.tree.adjacency();
    for v in 0..g.n() {
        let nodes: Vec<usize> = (0..pair.tree.node_count)
            .filter(|&node| cliques.cliques[pair.assignment[node]].binary_search(&v).is_ok())
            .collect();
        if !connected_in_tree(&adj, &nodes) {
            return Ok(CliqueTreeVerdict { valid: false, violating_vertex: Some(v) });
        }
    }
    Ok(CliqueTreeVerdict { valid: true, violating_vertex: None })
}

/// Counts of maximal cliques of size at least `j`, for `j = 1..=omega`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KjProfile {
    /// `counts[j - 1]` is the number of maximal cliques of size `>= j`.
    pub counts: Vec<usize>,
}

/// The clique-size profile of a chordal graph.  Non-increasing, starting at
/// the number of maximal cliques.
pub fn kj_profile(g: &Graph) -> Result<KjProfile, CliqueTreeError> {
    let cliques = maximal_cliques_chordal(g)?;
    let omega = cliques.omega();
    let counts = (1..=omega)
        .map(|j| cliques.cliques.iter().filter(|c| c.len() >= j).count())
        .collect();
    Ok(KjProfile { counts })
}

/// Verifies a clique-tree pair of a threshold graph by the nested-subtree
/// test: for every `j`, the nodes carrying cliques of size at least `j`
/// must induce a subtree.  Agrees with [`verify_clique_tree_pair`] on
/// threshold inputs.
pub fn verify_threshold_tree_pair(
    g: &Graph,
    pair: &CliqueTreePair,
) -> Result<bool, CliqueTreeError> {
    recognize_threshold(g).map_err(CliqueTreeError::NotThreshold)?;
    let cliques = maximal_cliques_chordal(g)?;
    check_pair_shape(&cliques, pair)?;
    let adj = pair.tree.adjacency();
    for j in 1..=cliques.omega() {
        let nodes: Vec<usize> = (0..pair.tree.node_count)
            .filter(|&node| cliques.cliques[pair.assignment[node]].len() >= j)
            .collect();
        // Successive levels are nested, so connectedness of each level is
        // the whole condition.
        if !connected_in_tree(&adj, &nodes) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds a clique-tree assignment for a threshold graph on an arbitrary
/// tree: breadth-first from node 0, handing each newly reached node a
/// largest unassigned clique (ties by clique content).  The result always
/// verifies, because every size-prefix of the cliques then occupies a
/// breadth-first-connected node set.
pub fn universal_assignment(
    g: &Graph,
    tree: &TreeShape,
) -> Result<CliqueTreePair, CliqueTreeError> {
    recognize_threshold(g).map_err(CliqueTreeError::NotThreshold)?;
    let cliques = maximal_cliques_chordal(g)?;
    tree.validate().map_err(CliqueTreeError::BadTree)?;
    if tree.node_count != cliques.len() {
        return Err(CliqueTreeError::NodeCountMismatch {
            nodes: tree.node_count,
            cliques: cliques.len(),
        });
    }
    let adj = tree.adjacency();
    let mut assignment = vec![usize::MAX; tree.node_count];
    let mut next_clique = 0usize; // cliques are already ordered largest first
    let mut queue = VecDeque::from([0usize]);
    let mut seen = vec![false; tree.node_count];
    seen[0] = true;
    while let Some(node) = queue.pop_front() {
        assignment[node] = next_clique;
        next_clique += 1;
        for &w in &adj[node] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    let pair = CliqueTreePair { tree: tree.clone(), assignment };
    debug_assert!(verify_clique_tree_pair(g, &pair).unwrap().valid);
    Ok(pair)
}

/// Outcome of the universality sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalityVerdict {
    pub universal: bool,
    /// A tree shape admitting no valid assignment, when not universal.
    pub failing_tree: Option<TreeShape>,
}

const UNIVERSALITY_CLIQUE_LIMIT: usize = 9;

/// Decides clique-tree universality of a chordal graph: every unlabeled tree
/// on `|M_G|` nodes must admit some bijection passing verification.
///
/// Tree shapes are enumerated up to isomorphism (the assignment absorbs node
/// labels); the per-shape search backtracks over assignments in
/// breadth-first node order, pruning a partial assignment as soon as a
/// vertex reappears without being present in the parent's clique.
pub fn is_clique_tree_universal(g: &Graph) -> Result<UniversalityVerdict, CliqueTreeError> {
    let cliques = maximal_cliques_chordal(g)?;
    let k = cliques.len();
    if k == 0 {
        return Err(CliqueTreeError::NoCliques);
    }
    if k > UNIVERSALITY_CLIQUE_LIMIT {
        return Err(CliqueTreeError::TooManyCliques { count: k, limit: UNIVERSALITY_CLIQUE_LIMIT });
    }
    let member = membership_table(g.n(), &cliques);
    for shape in all_tree_shapes(k) {
        if find_assignment(&cliques, &member, g.n(), &shape).is_none() {
            return Ok(UniversalityVerdict { universal: false, failing_tree: Some(shape) });
        }
    }
    Ok(UniversalityVerdict { universal: true, failing_tree: None })
}

fn membership_table(n: usize, cliques: &MaximalCliqueSet) -> Vec<Vec<bool>> {
    let mut member = vec![vec![false; n]; cliques.len()];
    for (i, c) in cliques.cliques.iter().enumerate() {
        for &v in c {
            member[i][v] = true;
        }
    }
    member
}

/// Searches for a bijection making `shape` a clique tree; returns the
/// assignment in node order if one exists.
fn find_assignment(
    cliques: &MaximalCliqueSet,
    member: &[Vec<bool>],
    n: usize,
    shape: &TreeShape,
) -> Option<Vec<usize>> {
    let k = cliques.len();
    let adj = shape.adjacency();
    // Breadth-first node order so each node's parent is assigned first.
    let mut order = Vec::with_capacity(k);
    let mut parent = vec![usize::MAX; k];
    let mut seen = vec![false; k];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut search = AssignmentSearch {
        order,
        parent,
        cliques,
        member,
        assignment: vec![usize::MAX; k],
        used: vec![false; k],
        occurrences: vec![0usize; n],
    };
    search.place(0).then_some(search.assignment)
}

struct AssignmentSearch<'a> {
    order: Vec<usize>,
    parent: Vec<usize>,
    cliques: &'a MaximalCliqueSet,
    member: &'a [Vec<bool>],
    assignment: Vec<usize>,
    used: Vec<bool>,
    occurrences: Vec<usize>,
}

impl AssignmentSearch<'_> {
    fn place(&mut self, step: usize) -> bool {
        if step == self.order.len() {
            return true;
        }
        let node = self.order[step];
        for c in 0..self.cliques.len() {
            if self.used[c] {
                continue;
            }
            // Once a vertex has appeared, its occupied nodes grow only along
            // tree edges: the parent's clique must already contain it.
            let ok = self.parent[node] == usize::MAX
                || self.cliques.cliques[c].iter().all(|&v| {
                    self.occurrences[v] == 0
                        || self.member[self.assignment[self.parent[node]]][v]
                });
            if ok {
                self.assignment[node] = c;
                self.used[c] = true;
                for &v in &self.cliques.cliques[c] {
                    self.occurrences[v] += 1;
                }
                if self.place(step + 1) {
                    return true;
                }
                for &v in &self.cliques.cliques[c] {
                    self.occurrences[v] -= 1;
                }
                self.used[c] = false;
                self.assignment[node] = usize::MAX;
            }
        }
        false
    }
}

/// True iff the star shape on `|M_G|` nodes is a clique tree of `g` under
/// some assignment; equivalently, some maximal clique contains every vertex
/// shared by two or more cliques.
pub fn star_clique_tree_check(g: &Graph) -> Result<bool, CliqueTreeError> {
    let cliques = maximal_cliques_chordal(g)?;
    if cliques.is_empty() {
        return Err(CliqueTreeError::NoCliques);
    }
    let mut count = vec![0usize; g.n()];
    for c in &cliques.cliques {
        for &v in c {
            count[v] += 1;
        }
    }
    let shared: Vec<usize> = (0..g.n()).filter(|&v| count[v] >= 2).collect();
    Ok(cliques
        .cliques
        .iter()
        .any(|c| shared.iter().all(|v| c.binary_search(v).is_ok())))
}

/// Constructs a clique tree as a maximum-weight spanning tree of the
/// clique-intersection graph (edge weight = intersection size), by greedy
/// edge selection.  Zero-weight edges connect the clique forests of
/// disconnected graphs; the subtree property is unaffected because no vertex
/// spans components.
pub fn construct_clique_tree(g: &Graph) -> Result<CliqueTreePair, CliqueTreeError> {
    let cliques = maximal_cliques_chordal(g)?;
    let k = cliques.len();
    if k == 0 {
        return Err(CliqueTreeError::NoCliques);
    }
    let mut candidates: Vec<(usize, usize, usize)> = Vec::new(); // (weight, i, j)
    for i in 0..k {
        for j in (i + 1)..k {
            let weight = cliques.cliques[i]
                .iter()
                .filter(|v| cliques.cliques[j].binary_search(v).is_ok())
                .count();
            candidates.push((weight, i, j));
        }
    }
    candidates.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut root: Vec<usize> = (0..k).collect();
    fn find(root: &mut [usize], mut x: usize) -> usize {
        while root[x] != x {
            root[x] = root[root[x]];
            x = root[x];
        }
        x
    }
    let mut edges = Vec::with_capacity(k.saturating_sub(1));
    for (_, i, j) in candidates {
        let (ri, rj) = (find(&mut root, i), find(&mut root, j));
        if ri != rj {
            root[ri] = rj;
            edges.push((i, j));
        }
    }
    edges.sort_unstable();
    let pair = CliqueTreePair { tree: TreeShape { node_count: k, edges }, assignment: (0..k).collect() };
    debug_assert!(verify_clique_tree_pair(g, &pair).unwrap().valid);
    Ok(pair)
}

/// DOT rendering of a clique tree; nodes are labeled with clique contents.
pub fn clique_tree_to_dot(cliques: &MaximalCliqueSet, pair: &CliqueTreePair) -> String {
    let mut out = String::from("graph cliquetree {\n");
    for node in 0..pair.tree.node_count {
        let members = &cliques.cliques[pair.assignment[node]];
        let label: Vec<String> = members.iter().map(|v| format!("{v}")).collect();
        out.push_str(&format!("  {node} [label=\"{{{}}}\"];\n", label.join(" ")));
    }
    for &(a, b) in &pair.tree.edges {
        out.push_str(&format!("  {a} -- {b};\n"));
    }
    out.push_str("}\n");
    out
}
