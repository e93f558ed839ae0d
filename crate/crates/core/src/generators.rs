//! Deterministic fixtures, seeded random generators per graph class, and
//! exhaustive small-graph enumeration.
//!
//! Randomness comes from an explicitly specified generator
//! ([`SplitMix64`]) rather than a platform RNG, so a `(n, seed)` pair
//! reproduces the same graph byte-for-byte on any implementation of these
//! recipes.  Sampling is uniform over construction traces (creation
//! sequences, cotrees, attachment choices), which is *not* uniform over
//! isomorphism classes; the generators are fixture factories, not samplers.

use alloc::vec;
use alloc::vec::Vec;

use crate::cliquetree::TreeShape;
use crate::graph::Graph;
use crate::recognizers::{CreationSequence, VertexTag};
use core::fmt;

/// SplitMix64: `state += 0x9E3779B97F4A7C15`, then two xor-shift-multiply
/// rounds (`>> 30`, `* 0xBF58476D1CE4E5B9`; `>> 27`, `* 0x94D049BB133111EB`;
/// `>> 31`).  Small, well known, and trivially portable.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in `0..bound` by reduction; the slight modulo
    /// bias is irrelevant here and keeps the recipe portable.
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "below(0) is empty");
        (self.next_u64() % bound as u64) as usize
    }

    pub fn next_bool(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    /// In-place Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            items.swap(i, self.below(i + 1));
        }
    }
}

/// The 16-vertex threshold fixture: a 12-clique on `0..12` plus four
/// vertices with nested neighborhoods inside the clique — vertices 12 and 13
/// see `{0, 1, 2}`, vertex 14 sees `{0, 1, 2, 3}`, vertex 15 sees
/// `{0, 1, 2, 3, 4}` (pendant degrees 3, 3, 4, 5).
///
/// Its five maximal cliques have sizes 12, 6, 5, 4, 4.
pub fn threshold16() -> Graph {
    let mut g = Graph::complete(12).union(&Graph::edgeless(4));
    for k in 0..3 {
        g.add_edge(12, k).unwrap();
        g.add_edge(13, k).unwrap();
    }
    for k in 0..4 {
        g.add_edge(14, k).unwrap();
    }
    for k in 0..5 {
        g.add_edge(15, k).unwrap();
    }
    g
}

/// The 6-vertex split graph that is not threshold: a triangle `0, 1, 2` and
/// three independent vertices, each adjacent to a different pair of triangle
/// vertices (3 to `{0, 1}`, 4 to `{0, 2}`, 5 to `{1, 2}`).
///
/// It has four maximal cliques and is not clique-tree universal: the path on
/// four nodes admits no valid assignment.
pub fn split_non_threshold6() -> Graph {
    Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (4, 0), (4, 2), (5, 1), (5, 2)])
        .unwrap()
}

/// The previous fixture with the edge `{3, 1}` removed (vertex 3 had degree
/// two).  Still split and not threshold, but clique-tree universal.
pub fn split_universal_variant6() -> Graph {
    split_non_threshold6().without_edge(3, 1)
}

/// A random threshold graph: vertex 0, then `n - 1` coin flips between
/// adding an isolated and a dominating vertex.
pub fn random_threshold(n: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    let mut rng = SplitMix64::new(seed);
    let mut tags = vec![VertexTag::Isolated];
    for _ in 1..n {
        tags.push(if rng.next_bool() { VertexTag::Dominating } else { VertexTag::Isolated });
    }
    CreationSequence::replay_tags(&tags)
}

/// A random cograph: evaluation of a random binary cotree on `n` leaves
/// (random split sizes, coin-flipped union/join at every internal node).
pub fn random_cograph(n: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    let mut rng = SplitMix64::new(seed);
    fn build(next_leaf: &mut usize, n: usize, rng: &mut SplitMix64) -> crate::recognizers::Cotree {
        use crate::recognizers::Cotree;
        if n == 1 {
            let leaf = Cotree::Leaf(*next_leaf);
            *next_leaf += 1;
            return leaf;
        }
        let left = 1 + rng.below(n - 1);
        let join = rng.next_bool();
        let l = build(next_leaf, left, rng);
        let r = build(next_leaf, n - left, rng);
        if join {
            Cotree::Join(vec![l, r])
        } else {
            Cotree::Union(vec![l, r])
        }
    }
    let mut next_leaf = 0;
    let tree = build(&mut next_leaf, n, &mut rng);
    tree.evaluate().expect("generated cotree is well formed")
}

/// A random chordal graph: each new vertex attaches to a random clique of
/// the current graph (grown greedily around a random vertex), which keeps
/// the reverse insertion order a perfect elimination ordering.
///
/// With `connected` the attachment clique is never empty; otherwise a
/// quarter of the vertices start isolated on average.
pub fn random_chordal(n: usize, seed: u64, connected: bool) -> Graph {
    assert!(n >= 1);
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::edgeless(n);
    for v in 1..n {
        if !connected && rng.below(4) == 0 {
            continue; // isolated attachment
        }
        let anchor = rng.below(v);
        let mut candidates: Vec<usize> =
            g.neighbors(anchor).iter().copied().filter(|&w| w < v).collect();
        rng.shuffle(&mut candidates);
        let mut clique = vec![anchor];
        for c in candidates {
            if rng.next_bool() && clique.iter().all(|&x| g.has_edge(x, c)) {
                clique.push(c);
            }
        }
        for x in clique {
            g.add_edge(v, x).unwrap();
        }
    }
    g
}

/// A random tree shape on `k` nodes via a random Pruefer code.
pub fn random_tree(k: usize, seed: u64) -> TreeShape {
    assert!(k >= 1);
    if k == 1 {
        return TreeShape { node_count: 1, edges: Vec::new() };
    }
    let mut rng = SplitMix64::new(seed);
    let code: Vec<usize> = (0..k - 2).map(|_| rng.below(k)).collect();
    TreeShape::from_pruefer(&code)
}

/// Errors from exhaustive enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorError {
    /// The labeled-graph sweep is capped at 7 vertices (2^21 graphs).
    TooManyVertices { n: usize, limit: usize },
}

impl fmt::Display for GeneratorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorError::TooManyVertices { n, limit } => {
                write!(f, "exhaustive enumeration of {n}-vertex graphs exceeds the limit of {limit}")
            }
        }
    }
}

impl core::error::Error for GeneratorError {}

const ALL_GRAPHS_LIMIT: usize = 7;

/// Streams every labeled simple graph on `n <= 7` vertices exactly once, in
/// increasing order of the upper-triangle edge bitmask.
pub fn all_graphs(n: usize) -> Result<AllGraphs, GeneratorError> {
    if n > ALL_GRAPHS_LIMIT {
        return Err(GeneratorError::TooManyVertices { n, limit: ALL_GRAPHS_LIMIT });
    }
    let bits = n * n.saturating_sub(1) / 2;
    Ok(AllGraphs { n, next_mask: 0, end: 1u64 << bits })
}

/// Iterator over all labeled graphs on a fixed vertex count.
pub struct AllGraphs {
    n: usize,
    next_mask: u64,
    end: u64,
}

impl Iterator for AllGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next_mask == self.end {
            return None;
        }
        let mask = self.next_mask;
        self.next_mask += 1;
        let mut g = Graph::edgeless(self.n);
        let mut bit = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if (mask >> bit) & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
                bit += 1;
            }
        }
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = (self.end - self.next_mask) as usize;
        (rest, Some(rest))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliquetree::maximal_cliques_chordal;
    use crate::graph::to_graph6;
    use crate::recognizers::{recognize_split, recognize_threshold};

    #[test]
    fn threshold16_shape() {
        let g = threshold16();
        assert_eq!(g.n(), 16);
        assert!(recognize_threshold(&g).is_ok());
        let mut pendant_degrees: Vec<usize> = (12..16).map(|v| g.degree(v)).collect();
        pendant_degrees.sort_unstable();
        assert_eq!(pendant_degrees, vec![3, 3, 4, 5]);
        let m = maximal_cliques_chordal(&g).unwrap();
        assert_eq!(m.len(), 5);
        assert_eq!(m.omega(), 12);
    }

    #[test]
    fn split6_shape() {
        let g = split_non_threshold6();
        assert!(recognize_split(&g).is_ok());
        assert!(recognize_threshold(&g).is_err());
        assert_eq!(maximal_cliques_chordal(&g).unwrap().len(), 4);
        // All triangle vertices have degree 4, the independent ones degree 2.
        assert_eq!(g.degree_sequence(), vec![4, 4, 4, 2, 2, 2]);
    }

    #[test]
    fn variant6_shape() {
        let g = split_universal_variant6();
        assert!(recognize_split(&g).is_ok());
        assert!(recognize_threshold(&g).is_err());
        assert_eq!(g.edge_count(), split_non_threshold6().edge_count() - 1);
    }

    #[test]
    fn determinism() {
        for seed in [0u64, 1, 42, u64::MAX] {
            let a = to_graph6(&random_threshold(10, seed)).unwrap();
            let b = to_graph6(&random_threshold(10, seed)).unwrap();
            assert_eq!(a, b);
            let a = to_graph6(&random_chordal(10, seed, true)).unwrap();
            let b = to_graph6(&random_chordal(10, seed, true)).unwrap();
            assert_eq!(a, b);
        }
        assert_eq!(random_threshold(1, 7), Graph::complete(1));
    }

    #[test]
    fn generators_satisfy_their_recognizers() {
        use crate::recognizers::{recognize_chordal, recognize_cograph};
        for seed in 0..30u64 {
            let n = 1 + (seed as usize % 12);
            assert!(recognize_threshold(&random_threshold(n, seed)).is_ok());
            assert!(recognize_cograph(&random_cograph(n, seed)).is_ok());
            assert!(recognize_chordal(&random_chordal(n, seed, false)).is_ok());
            let connected = random_chordal(n, seed, true);
            assert!(recognize_chordal(&connected).is_ok());
            assert!(connected.is_connected());
        }
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(all_graphs(2).unwrap().count(), 2);
        assert_eq!(all_graphs(3).unwrap().count(), 8);
        assert_eq!(all_graphs(4).unwrap().count(), 64);
        assert!(all_graphs(8).is_err());
    }

    #[test]
    fn random_trees_are_trees() {
        for seed in 0..20u64 {
            let k = 1 + (seed as usize % 9);
            let t = random_tree(k, seed);
            assert_eq!(t.node_count, k);
            t.validate().unwrap();
        }
    }
}
