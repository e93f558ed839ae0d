//! Fast ideal-connectedness deciders.
//!
//! Two graph classes admit purely structural tests that replace the pairwise
//! flow sweep:
//!
//! - a cograph is ideally connected iff it is 2K2-free;
//! - a chordal graph is ideally connected iff it is a threshold graph.
//!
//! Each decider embeds the certificate (cotree or 2K2 witness, creation
//! sequence or forbidden subgraph) in its verdict so that every fast answer
//! can be re-checked without re-running the search.  The test suites compare
//! these verdicts against the flow oracle exhaustively; the deciders
//! themselves never consult it.
//!
//! The same characterizations yield two constructive byproducts: the
//! safe-union calculus on cotrees, and length-two path systems in threshold
//! graphs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::connectivity::{is_ideally_connected, ConnectivityError, PathSystem};
use crate::graph::Graph;
use crate::recognizers::{
    find_induced_2k2, recognize_cograph, recognize_chordal, recognize_threshold, Cotree,
    CotreeError, CreationSequence, ForbiddenSubgraph,
};

/// Which characterization produced a fast verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AppliedTheorem {
    /// The 2K2-freeness test for cographs.
    Cograph,
    /// The threshold test for chordal graphs.
    Chordal,
    /// Neither class applies; no fast criterion exists.
    NotApplicable,
}

/// The certificate backing a fast verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FastCertificate {
    Cotree(Cotree),
    TwoK2([usize; 4]),
    CreationSequence(CreationSequence),
    Forbidden(ForbiddenSubgraph),
}

/// A structurally derived ideal-connectedness verdict.
///
/// `ideally_connected` and `certificate` are populated exactly when a
/// theorem applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastVerdict {
    pub theorem: AppliedTheorem,
    pub ideally_connected: Option<bool>,
    pub certificate: Option<FastCertificate>,
}

/// Decides ideal connectedness of a cograph via 2K2-freeness.
///
/// Errors with the induced-P4 witness if `g` is not a cograph.
pub fn fast_ideal_cograph(g: &Graph) -> Result<FastVerdict, [usize; 4]> {
    let cotree = recognize_cograph(g)?;
    Ok(match find_induced_2k2(g) {
        None => FastVerdict {
            theorem: AppliedTheorem::Cograph,
            ideally_connected: Some(true),
            certificate: Some(FastCertificate::Cotree(cotree)),
        },
        Some(witness) => FastVerdict {
            theorem: AppliedTheorem::Cograph,
            ideally_connected: Some(false),
            certificate: Some(FastCertificate::TwoK2(witness)),
        },
    })
}

/// Decides ideal connectedness of a chordal graph via the threshold test.
///
/// Errors with a chordless-cycle witness if `g` is not chordal.
pub fn fast_ideal_chordal(g: &Graph) -> Result<FastVerdict, Vec<usize>> {
    recognize_chordal(g)?;
    Ok(match recognize_threshold(g) {
        Ok(seq) => FastVerdict {
            theorem: AppliedTheorem::Chordal,
            ideally_connected: Some(true),
            certificate: Some(FastCertificate::CreationSequence(seq)),
        },
        Err(witness) => FastVerdict {
            theorem: AppliedTheorem::Chordal,
            ideally_connected: Some(false),
            certificate: Some(FastCertificate::Forbidden(witness)),
        },
    })
}

/// Tries the cograph criterion, then the chordal one.  Graphs in neither
/// class get `NotApplicable` and no verdict.
pub fn fast_ideal(g: &Graph) -> FastVerdict {
    if let Ok(v) = fast_ideal_cograph(g) {
        return v;
    }
    if let Ok(v) = fast_ideal_chordal(g) {
        return v;
    }
    FastVerdict {
        theorem: AppliedTheorem::NotApplicable,
        ideally_connected: None,
        certificate: None,
    }
}

/// Decides ideal connectedness directly on a cotree: every union node may
/// have at most one child whose subgraph contains an edge.
///
/// Equals [`fast_ideal_cograph`] on the evaluated graph.
pub fn cotree_is_ideally_connected(t: &Cotree) -> Result<bool, CotreeError> {
    t.evaluate()?; // validates leaves and arity
    Ok(safe_unions_only(t))
}

fn safe_unions_only(t: &Cotree) -> bool {
    match t {
        Cotree::Leaf(_) => true,
        Cotree::Join(cs) => cs.iter().all(safe_unions_only),
        Cotree::Union(cs) => {
            cs.iter().all(safe_unions_only)
                && cs.iter().filter(|c| subtree_has_edge(c)).count() <= 1
        }
    }
}

fn subtree_has_edge(t: &Cotree) -> bool {
    match t {
        Cotree::Leaf(_) => false,
        Cotree::Union(cs) => cs.iter().any(subtree_has_edge),
        // A join of two or more nonempty parts always creates an edge.
        Cotree::Join(cs) => cs.len() >= 2 || cs.iter().any(subtree_has_edge),
    }
}

/// Oracle verdicts for a join and its two factors.  The join-preservation
/// property states `join_ideal == (left_ideal && right_ideal)`; the test
/// suites assert it, this function just measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JoinLemmaRecord {
    pub left_ideal: bool,
    pub right_ideal: bool,
    pub join_ideal: bool,
}

/// Precondition failures of [`check_join_lemma`]: one factor is not a
/// cograph (witness indices refer to that factor).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JoinLemmaError {
    LeftNotCograph([usize; 4]),
    RightNotCograph([usize; 4]),
}

impl fmt::Display for JoinLemmaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JoinLemmaError::LeftNotCograph(w) => write!(f, "left factor contains induced P4 {w:?}"),
            JoinLemmaError::RightNotCograph(w) => write!(f, "right factor contains induced P4 {w:?}"),
        }
    }
}

impl core::error::Error for JoinLemmaError {}

/// Measures the three oracle verdicts around a graph join of two cographs.
/// Empty factors are vacuously ideally connected.
pub fn check_join_lemma(g1: &Graph, g2: &Graph) -> Result<JoinLemmaRecord, JoinLemmaError> {
    recognize_cograph(g1).map_err(JoinLemmaError::LeftNotCograph)?;
    recognize_cograph(g2).map_err(JoinLemmaError::RightNotCograph)?;
    let ideal = |g: &Graph| {
        g.n() == 0
            || is_ideally_connected(g, false)
                .expect("nonempty graph")
                .ideally_connected
    };
    Ok(JoinLemmaRecord {
        left_ideal: ideal(g1),
        right_ideal: ideal(g2),
        join_ideal: ideal(&g1.join(g2)),
    })
}

/// Errors from [`threshold_disjoint_paths`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThresholdPathsError {
    NotThreshold(ForbiddenSubgraph),
    Pair(ConnectivityError),
    /// The construction produced the wrong number of paths; this indicates a
    /// recognizer bug and should never occur.
    CountMismatch { expected: usize, got: usize },
}

impl fmt::Display for ThresholdPathsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThresholdPathsError::NotThreshold(w) => {
                write!(f, "graph is not threshold (induced {:?} on {:?})", w.kind, w.vertices)
            }
            ThresholdPathsError::Pair(e) => write!(f, "{e}"),
            ThresholdPathsError::CountMismatch { expected, got } => {
                write!(f, "internal consistency error: expected {expected} paths, built {got}")
            }
        }
    }
}

impl core::error::Error for ThresholdPathsError {}

/// Builds a maximum family of internally disjoint u-v paths in a threshold
/// graph without any flow computation: one length-two path through each
/// common neighbor, plus the direct edge when present.  The family has
/// exactly `min{deg(u), deg(v)}` paths.
pub fn threshold_disjoint_paths(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<PathSystem, ThresholdPathsError> {
    let n = g.n();
    if u >= n {
        return Err(ThresholdPathsError::Pair(ConnectivityError::VertexOutOfRange { vertex: u, n }));
    }
    if v >= n {
        return Err(ThresholdPathsError::Pair(ConnectivityError::VertexOutOfRange { vertex: v, n }));
    }
    if u == v {
        return Err(ThresholdPathsError::Pair(ConnectivityError::SameVertex { vertex: u }));
    }
    recognize_threshold(g).map_err(ThresholdPathsError::NotThreshold)?;
    let mut paths: Vec<Vec<usize>> = g
        .neighbors(u)
        .intersection(g.neighbors(v))
        .map(|&z| vec![u, z, v])
        .collect();
    if g.has_edge(u, v) {
        paths.push(vec![u, v]);
    }
    let expected = g.degree(u).min(g.degree(v));
    if paths.len() != expected {
        return Err(ThresholdPathsError::CountMismatch { expected, got: paths.len() });
    }
    let system = PathSystem { source: u, target: v, paths };
    debug_assert!(system.validate(g).is_ok());
    Ok(system)
}

/// How two vertices' neighborhoods relate, judged from the lower-degree
/// side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeighborhoodRelation {
    /// `N(x) ⊆ N(y)` for the lower-degree non-adjacent vertex x.
    OpenContained,
    /// `N[x] ⊆ N[y]` for the lower-degree adjacent vertex x.
    ClosedContained,
    EqualOpen,
    EqualClosed,
    Incomparable,
}

/// Classifies the containment between the neighborhoods of `u` and `v`.
///
/// In an ideally connected chordal graph the answer is never
/// `Incomparable`; that consequence is checked by the test suites.
pub fn neighborhood_comparability(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<NeighborhoodRelation, ConnectivityError> {
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
    if g.neighbors(u) == g.neighbors(v) {
        return Ok(NeighborhoodRelation::EqualOpen);
    }
    if g.closed_neighborhood(u) == g.closed_neighborhood(v) {
        return Ok(NeighborhoodRelation::EqualClosed);
    }
    // Strict containment forces a strict degree order, so on equal degrees
    // only the equality cases above were possible.
    let (x, y) = if g.degree(u) <= g.degree(v) { (u, v) } else { (v, u) };
    if g.has_edge(x, y) {
        if g.closed_neighborhood(x).is_subset(&g.closed_neighborhood(y)) {
            return Ok(NeighborhoodRelation::ClosedContained);
        }
    } else if g.neighbors(x).is_subset(g.neighbors(y)) {
        return Ok(NeighborhoodRelation::OpenContained);
    }
    Ok(NeighborhoodRelation::Incomparable)
}
