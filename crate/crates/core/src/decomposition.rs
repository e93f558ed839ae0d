//! Clique-cut decomposition and the structural characterization of ideal
//! connectedness it supports.
//!
//! A *clique cut of minimum size* (here: a cut whose removal disconnects the
//! graph, whose size equals the vertex connectivity, and whose members are
//! pairwise adjacent) splits a graph into *cut-subgraphs*: each component of
//! `G - S` together with `S`.  For a graph possessing such a cut, ideal
//! connectedness is equivalent to three checkable conditions on the
//! cut-subgraphs:
//!
//! 1. every cut-subgraph is ideally connected and t-connected (`t = |S|`);
//! 2. at most one component carries a vertex of degree exceeding `t`, and
//!    inside that component's subgraph the degree chain
//!    `deg_H(u) <= deg_H(s) < deg_G(s)` holds for all non-cut `u` and `s` in
//!    the cut;
//! 3. the cut vertices' degree order inside every subgraph is consistent
//!    with their global degree order.
//!
//! Condition 1 is evaluated with the flow oracle, never with the fast
//! class-based deciders, so the equivalence tests do not validate the
//! theorem with itself.
//!
//! For chordal graphs every minimum cutset is a clique (Dirac), and the
//! decomposition collapses further: one distinguished head subgraph plus
//! single simplicial vertices attached to the whole cut.

use alloc::vec::Vec;
use core::fmt;

use crate::combin::find_subset;
use crate::connectivity::{
    is_ideally_connected, minimum_separator, vertex_connectivity, IdealityWitness,
};
use crate::graph::{Graph, VertexSet};
use crate::recognizers::recognize_chordal;

/// Why a claimed clique cut is not one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutViolation {
    GraphNotConnected,
    GraphComplete,
    VertexOutOfRange { vertex: usize },
    NotAClique,
    DoesNotDisconnect,
    WrongSize { expected: usize, found: usize },
}

/// Errors from decomposition operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionError {
    InvalidCut(CutViolation),
    /// The operation requires a chordal graph; carries a chordless cycle.
    NotChordal(Vec<usize>),
    /// The operation requires an ideally connected graph.
    NotIdeallyConnected(IdealityWitness),
    /// The graph has no minimum-size clique cut.
    NoCliqueCut,
}

impl fmt::Display for DecompositionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionError::InvalidCut(v) => write!(f, "invalid clique cut: {v:?}"),
            DecompositionError::NotChordal(c) => write!(f, "graph is not chordal (induced cycle {c:?})"),
            DecompositionError::NotIdeallyConnected(w) => write!(
                f,
                "graph is not ideally connected (pair ({}, {}) has {} < {})",
                w.u, w.v, w.local, w.bound
            ),
            DecompositionError::NoCliqueCut => write!(f, "no minimum-size clique cut exists"),
        }
    }
}

impl core::error::Error for DecompositionError {}

/// A minimum vertex cutset inducing a complete subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCut {
    pub members: VertexSet,
}

impl CliqueCut {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Checks all defining properties against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), DecompositionError> {
        if !g.is_connected() {
            return Err(DecompositionError::InvalidCut(CutViolation::GraphNotConnected));
        }
        if g.is_complete() {
            return Err(DecompositionError::InvalidCut(CutViolation::GraphComplete));
        }
        for &v in &self.members {
            if v >= g.n() {
                return Err(DecompositionError::InvalidCut(CutViolation::VertexOutOfRange {
                    vertex: v,
                }));
            }
        }
        if !g.is_clique(&self.members) {
            return Err(DecompositionError::InvalidCut(CutViolation::NotAClique));
        }
        let rest = g.remove_vertices(&self.members).expect("members in range");
        if rest.graph.components().len() < 2 {
            return Err(DecompositionError::InvalidCut(CutViolation::DoesNotDisconnect));
        }
        let kappa = vertex_connectivity(g).expect("graph is nonempty");
        if self.members.len() != kappa {
            return Err(DecompositionError::InvalidCut(CutViolation::WrongSize {
                expected: kappa,
                found: self.members.len(),
            }));
        }
        Ok(())
    }
}

/// One component of `G - S` together with `S`, induced in `G`.
#[derive(Clone, Debug)]
pub struct CutSubgraph {
    pub graph: Graph,
    /// `old_of_new[new] = old`, ascending.
    pub old_of_new: Vec<usize>,
    /// The component vertices (original ids, ascending), i.e. the subgraph
    /// vertices outside the cut.
    pub component: Vec<usize>,
}

impl CutSubgraph {
    pub fn new_of_old(&self, old: usize) -> Option<usize> {
        self.old_of_new.binary_search(&old).ok()
    }

    /// Degree of an original-id vertex inside this subgraph.
    pub fn degree_of_old(&self, old: usize) -> Option<usize> {
        self.new_of_old(old).map(|v| self.graph.degree(v))
    }
}

/// A graph decomposed along a clique cut.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub cut: CliqueCut,
    /// Cut-subgraphs ordered by the smallest vertex of their component.
    pub subgraphs: Vec<CutSubgraph>,
    /// Index of the unique subgraph whose component carries a vertex of
    /// degree exceeding `|S|` in the whole graph, when exactly one does.
    pub distinguished_index: Option<usize>,
}

/// A minimum vertex cutset, from the first non-adjacent pair (in
/// lexicographic order) whose local connectivity attains the minimum.
pub fn find_min_vertex_cut(g: &Graph) -> Result<VertexSet, DecompositionError> {
    if !g.is_connected() {
        return Err(DecompositionError::InvalidCut(CutViolation::GraphNotConnected));
    }
    if g.is_complete() {
        return Err(DecompositionError::InvalidCut(CutViolation::GraphComplete));
    }
    let kappa = vertex_connectivity(g).expect("nonempty");
    let n = g.n();
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) {
                let cut = minimum_separator(g, u, v).expect("valid non-adjacent pair");
                if cut.len() == kappa {
                    return Ok(cut);
                }
            }
        }
    }
    unreachable!("a non-complete connected graph has a minimum separator");
}

/// Searches for a minimum-size clique cut.
///
/// Chordal graphs: every minimum cutset is one, so the flow-derived cut is
/// returned directly.  Otherwise all `kappa(G)`-subsets are enumerated in
/// lexicographic order and the first clique that disconnects the graph wins;
/// `None` means no minimum cutset is a clique.
pub fn find_kappa_clique_cut(g: &Graph) -> Result<Option<CliqueCut>, DecompositionError> {
    if !g.is_connected() {
        return Err(DecompositionError::InvalidCut(CutViolation::GraphNotConnected));
    }
    if g.is_complete() {
        return Err(DecompositionError::InvalidCut(CutViolation::GraphComplete));
    }
    if recognize_chordal(g).is_ok() {
        let members = find_min_vertex_cut(g)?;
        debug_assert!(g.is_clique(&members));
        return Ok(Some(CliqueCut { members }));
    }
    let kappa = vertex_connectivity(g).expect("nonempty");
    let found = find_subset(g.n(), kappa, |subset| {
        g.is_clique(subset) && {
            let remove: VertexSet = subset.iter().copied().collect();
            g.remove_vertices(&remove).expect("in range").graph.components().len() >= 2
        }
    });
    Ok(found.map(|s| CliqueCut { members: s.into_iter().collect() }))
}

/// Every minimum-size clique cut, in lexicographic order.  Used by the
/// uniqueness check; exponential in `kappa(G)` but fine at desk scale.
pub fn all_kappa_clique_cuts(g: &Graph) -> Result<Vec<CliqueCut>, DecompositionError> {
    if !g.is_connected() {
        return Err(DecompositionError::InvalidCut(CutViolation::GraphNotConnected));
    }
    if g.is_complete() {
        return Err(DecompositionError::InvalidCut(CutViolation::GraphComplete));
    }
    let kappa = vertex_connectivity(g).expect("nonempty");
    let mut cuts = Vec::new();
    find_subset(g.n(), kappa, |subset| {
        if g.is_clique(subset) {
            let remove: VertexSet = subset.iter().copied().collect();
            if g.remove_vertices(&remove).expect("in range").graph.components().len() >= 2 {
                cuts.push(CliqueCut { members: remove });
            }
        }
        false
    });
    Ok(cuts)
}

/// Splits `g` along a validated clique cut into its cut-subgraphs.
pub fn cut_subgraphs(g: &Graph, cut: &CliqueCut) -> Result<Decomposition, DecompositionError> {
    cut.validate(g)?;
    let t = cut.size();
    let rest = g.remove_vertices(&cut.members).expect("validated");
    let mut subgraphs = Vec::new();
    for comp in rest.graph.components() {
        let component: Vec<usize> = comp.into_iter().map(|v| rest.old_of_new[v]).collect();
        let mut keep: VertexSet = component.iter().copied().collect();
        keep.extend(cut.members.iter().copied());
        let induced = g.induced_subgraph(&keep).expect("validated");
        subgraphs.push(CutSubgraph {
            graph: induced.graph,
            old_of_new: induced.old_of_new,
            component,
        });
    }
    let high: Vec<usize> = (0..subgraphs.len())
        .filter(|&i| subgraphs[i].component.iter().any(|&v| g.degree(v) > t))
        .collect();
    Ok(Decomposition {
        cut: cut.clone(),
        subgraphs,
        distinguished_index: (high.len() == 1).then(|| high[0]),
    })
}

/// A failure of condition 1 (each cut-subgraph ideally connected and
/// t-connected).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cond1Failure {
    NotIdeal { subgraph: usize, witness: IdealityWitness },
    NotTConnected { subgraph: usize, connectivity: usize },
}

/// A failure of condition 2 (a single high-degree component, with the
/// degree chain inside it).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cond2Failure {
    TwoHighDegreeComponents { first: usize, second: usize },
    /// `deg_H(u) <= deg_H(s) < deg_G(s)` failed in the high subgraph.
    DegreeChain { subgraph: usize, vertex: usize, cut_vertex: usize },
}

/// A failure of condition 3 (cut-vertex degree order per subgraph).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cond3Failure {
    pub subgraph: usize,
    /// Globally `deg(s1) <= deg(s2)` but the subgraph order is reversed.
    pub s1: usize,
    pub s2: usize,
}

/// Per-condition verdicts for the clique-cut characterization of ideal
/// connectedness.
#[derive(Clone, Debug)]
pub struct ConditionReport {
    pub cond1_failure: Option<Cond1Failure>,
    pub cond2_failure: Option<Cond2Failure>,
    pub cond3_failure: Option<Cond3Failure>,
}

impl ConditionReport {
    pub fn cond1(&self) -> bool {
        self.cond1_failure.is_none()
    }

    pub fn cond2(&self) -> bool {
        self.cond2_failure.is_none()
    }

    pub fn cond3(&self) -> bool {
        self.cond3_failure.is_none()
    }

    /// Equivalent to ideal connectedness of the whole graph when the cut is
    /// a valid minimum-size clique cut.
    pub fn overall(&self) -> bool {
        self.cond1() && self.cond2() && self.cond3()
    }
}

/// Evaluates the three structural conditions exactly as stated, with the
/// flow oracle for the per-subgraph ideality checks.
pub fn verify_structure_theorem(
    g: &Graph,
    cut: &CliqueCut,
) -> Result<ConditionReport, DecompositionError> {
    let decomp = cut_subgraphs(g, cut)?;
    let t = cut.size();

    let mut cond1_failure = None;
    for (i, sub) in decomp.subgraphs.iter().enumerate() {
        let report = is_ideally_connected(&sub.graph, false).expect("subgraph nonempty");
        if !report.ideally_connected {
            cond1_failure = Some(Cond1Failure::NotIdeal {
                subgraph: i,
                witness: report.witness.expect("failing report carries witness"),
            });
            break;
        }
        let kappa = vertex_connectivity(&sub.graph).expect("subgraph nonempty");
        if kappa < t {
            cond1_failure = Some(Cond1Failure::NotTConnected { subgraph: i, connectivity: kappa });
            break;
        }
    }

    let high: Vec<usize> = (0..decomp.subgraphs.len())
        .filter(|&i| decomp.subgraphs[i].component.iter().any(|&v| g.degree(v) > t))
        .collect();
    let mut cond2_failure = None;
    if high.len() >= 2 {
        cond2_failure = Some(Cond2Failure::TwoHighDegreeComponents { first: high[0], second: high[1] });
    } else if let Some(&j) = high.first() {
        let sub = &decomp.subgraphs[j];
        'chain: for &u in &sub.component {
            for &s in &cut.members {
                let du = sub.degree_of_old(u).expect("component vertex");
                let ds = sub.degree_of_old(s).expect("cut vertex");
                if !(du <= ds && ds < g.degree(s)) {
                    cond2_failure =
                        Some(Cond2Failure::DegreeChain { subgraph: j, vertex: u, cut_vertex: s });
                    break 'chain;
                }
            }
        }
    }

    let mut cond3_failure = None;
    let members: Vec<usize> = cut.members.iter().copied().collect();
    'order: for (a_idx, &a) in members.iter().enumerate() {
        for &b in &members[a_idx + 1..] {
            // Orient by global degree; equal degrees constrain both ways.
            for (s1, s2) in [(a, b), (b, a)] {
                if g.degree(s1) <= g.degree(s2) {
                    for (i, sub) in decomp.subgraphs.iter().enumerate() {
                        let d1 = sub.degree_of_old(s1).expect("cut vertex");
                        let d2 = sub.degree_of_old(s2).expect("cut vertex");
                        if d1 > d2 {
                            cond3_failure = Some(Cond3Failure { subgraph: i, s1, s2 });
                            break 'order;
                        }
                    }
                }
            }
        }
    }

    Ok(ConditionReport { cond1_failure, cond2_failure, cond3_failure })
}

/// Errors from [`glue_along_clique`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GlueError {
    NoParts,
    WrongCliqueSize { part: usize, expected: usize, found: usize },
    RepeatedCliqueVertex { part: usize, vertex: usize },
    VertexOutOfRange { part: usize, vertex: usize },
    NotAClique { part: usize },
}

impl fmt::Display for GlueError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlueError::NoParts => write!(f, "gluing needs at least one part"),
            GlueError::WrongCliqueSize { part, expected, found } => {
                write!(f, "part {part}: designated clique has {found} vertices, expected {expected}")
            }
            GlueError::RepeatedCliqueVertex { part, vertex } => {
                write!(f, "part {part}: clique vertex {vertex} repeated")
            }
            GlueError::VertexOutOfRange { part, vertex } => {
                write!(f, "part {part}: vertex {vertex} out of range")
            }
            GlueError::NotAClique { part } => write!(f, "part {part}: designated set is not a clique"),
        }
    }
}

impl core::error::Error for GlueError {}

/// The glued graph plus, per part, the map from part vertices to result
/// vertices.
#[derive(Clone, Debug)]
pub struct GluedGraph {
    pub graph: Graph,
    /// `part_maps[p][old] = new`.
    pub part_maps: Vec<Vec<usize>>,
}

/// Glues graphs along a shared clique of size `t`.
///
/// Each part designates an *ordered* clique; position `k` of every part is
/// identified with result vertex `k`.  Non-clique vertices follow, part by
/// part, in ascending original order.  Restricting the result to one part's
/// image reproduces that part.
pub fn glue_along_clique(parts: &[(Graph, Vec<usize>)], t: usize) -> Result<GluedGraph, GlueError> {
    if parts.is_empty() {
        return Err(GlueError::NoParts);
    }
    for (p, (graph, clique)) in parts.iter().enumerate() {
        if clique.len() != t {
            return Err(GlueError::WrongCliqueSize { part: p, expected: t, found: clique.len() });
        }
        let mut seen = VertexSet::new();
        for &v in clique {
            if v >= graph.n() {
                return Err(GlueError::VertexOutOfRange { part: p, vertex: v });
            }
            if !seen.insert(v) {
                return Err(GlueError::RepeatedCliqueVertex { part: p, vertex: v });
            }
        }
        if !graph.is_clique(clique) {
            return Err(GlueError::NotAClique { part: p });
        }
    }
    let total: usize = t + parts.iter().map(|(g, _)| g.n() - t).sum::<usize>();
    let mut result = Graph::edgeless(total);
    let mut part_maps = Vec::with_capacity(parts.len());
    let mut next_free = t;
    for (graph, clique) in parts {
        let mut map = alloc::vec![usize::MAX; graph.n()];
        for (k, &v) in clique.iter().enumerate() {
            map[v] = k;
        }
        for slot in map.iter_mut() {
            if *slot == usize::MAX {
                *slot = next_free;
                next_free += 1;
            }
        }
        for (u, v) in graph.edges() {
            result.add_edge(map[u], map[v]).expect("mapped vertices in range");
        }
        part_maps.push(map);
    }
    Ok(GluedGraph { graph: result, part_maps })
}

/// Checks the degree chain `deg_H(u) = deg_G(u) <= deg_H(s) < deg_G(s)` for
/// every cut-subgraph `H`, non-cut vertex `u` of `H`, and cut vertex `s`.
///
/// Requires an ideally connected graph and a valid clique cut.
pub fn check_lemma_u_s(g: &Graph, cut: &CliqueCut) -> Result<bool, DecompositionError> {
    let report = is_ideally_connected(g, false)
        .map_err(|_| DecompositionError::InvalidCut(CutViolation::GraphNotConnected))?;
    if !report.ideally_connected {
        return Err(DecompositionError::NotIdeallyConnected(report.witness.unwrap()));
    }
    let decomp = cut_subgraphs(g, cut)?;
    for sub in &decomp.subgraphs {
        for &u in &sub.component {
            let du_inside = sub.degree_of_old(u).expect("component vertex");
            if du_inside != g.degree(u) {
                return Ok(false);
            }
            for &s in &cut.members {
                let ds_inside = sub.degree_of_old(s).expect("cut vertex");
                if !(du_inside <= ds_inside && ds_inside < g.degree(s)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Checks that the clique cut of an ideally connected graph is unique and
/// that the maximum degree is attained on the cut with value at least
/// `|S| + 1`.
pub fn check_unique_cut(g: &Graph) -> Result<bool, DecompositionError> {
    let report = is_ideally_connected(g, false)
        .map_err(|_| DecompositionError::InvalidCut(CutViolation::GraphNotConnected))?;
    if !report.ideally_connected {
        return Err(DecompositionError::NotIdeallyConnected(report.witness.unwrap()));
    }
    let cuts = all_kappa_clique_cuts(g)?;
    let Some(first) = cuts.first() else {
        return Err(DecompositionError::NoCliqueCut);
    };
    let t = first.size();
    let max_on_cut = first.members.iter().map(|&s| g.degree(s)).max().unwrap_or(0);
    // The maximum degree must sit on the cut and exceed the cut size.
    Ok(cuts.len() == 1 && max_on_cut == g.max_degree() && max_on_cut > t)
}

/// The chordal refinement of the decomposition: one head subgraph, all other
/// parts being a single vertex simplicial to the whole cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordalStructure {
    /// Index of the head subgraph in the decomposition order.
    pub head_index: usize,
    /// The lone simplicial vertices of the remaining parts (original ids).
    pub simplicial_vertices: VertexSet,
}

/// Identifies the chordal decomposition shape, failing (with `None`) exactly
/// when the graph is not ideally connected.
///
/// Beyond "every non-head part is the cut plus one simplicial vertex" and
/// "the head is ideally connected, t-connected and chordal", the high-degree
/// degree chain of condition 2 is enforced on the head whenever some
/// component carries a vertex of degree exceeding `t`; dropping it would
/// wrongly accept graphs such as the path on four vertices.
pub fn chordal_structure(
    g: &Graph,
    cut: &CliqueCut,
) -> Result<Option<ChordalStructure>, DecompositionError> {
    recognize_chordal(g).map_err(DecompositionError::NotChordal)?;
    let decomp = cut_subgraphs(g, cut)?;
    let t = cut.size();
    // A single-vertex component whose vertex sees the whole cut makes the
    // part a complete graph on t + 1 vertices.
    let is_simplicial_part = |sub: &CutSubgraph| {
        sub.component.len() == 1 && g.degree(sub.component[0]) == t
    };
    let heads: Vec<usize> = (0..decomp.subgraphs.len())
        .filter(|&i| !is_simplicial_part(&decomp.subgraphs[i]))
        .collect();
    if heads.len() >= 2 {
        return Ok(None);
    }
    let head_index = heads.first().copied().unwrap_or(0);
    let head = &decomp.subgraphs[head_index];
    let head_report = is_ideally_connected(&head.graph, false).expect("nonempty");
    if !head_report.ideally_connected {
        return Ok(None);
    }
    if vertex_connectivity(&head.graph).expect("nonempty") < t {
        return Ok(None);
    }
    let any_high = decomp
        .subgraphs
        .iter()
        .any(|sub| sub.component.iter().any(|&v| g.degree(v) > t));
    if any_high {
        for &u in &head.component {
            for &s in &cut.members {
                let du = head.degree_of_old(u).expect("component vertex");
                let ds = head.degree_of_old(s).expect("cut vertex");
                if du > ds {
                    return Ok(None);
                }
            }
        }
    }
    let simplicial_vertices = decomp
        .subgraphs
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != head_index)
        .map(|(_, sub)| sub.component[0])
        .collect();
    Ok(Some(ChordalStructure { head_index, simplicial_vertices }))
}

/// All simplicial vertices: those whose neighborhood induces a clique.
pub fn find_simplicial(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&v| g.is_simplicial(v)).collect()
}
