//! Brute-force oracles, independent of the library's algorithms.
//!
//! Local connectivity is recomputed from first principles: enumerate every
//! simple path between the endpoints, then find the largest
//! internally-disjoint family by exhaustive search over internal-vertex
//! bitmasks.  Class membership is recomputed by scanning all vertex subsets
//! for forbidden induced structures.  Nothing here calls the flow network,
//! the recognizers, or the clique machinery.

#![allow(dead_code)] // each integration test binary uses a subset

use idealconn::Graph;

/// Every simple u-v path, as vertex sequences.
pub fn all_simple_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![u];
    let mut on_path = vec![false; g.n()];
    on_path[u] = true;
    fn dfs(
        g: &Graph,
        v: usize,
        current: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let at = *current.last().unwrap();
        if at == v {
            out.push(current.clone());
            return;
        }
        for &w in g.neighbors(at) {
            if !on_path[w] {
                on_path[w] = true;
                current.push(w);
                dfs(g, v, current, on_path, out);
                current.pop();
                on_path[w] = false;
            }
        }
    }
    dfs(g, v, &mut current, &mut on_path, &mut out);
    out
}

/// Maximum number of internally disjoint u-v paths, by exhaustive family
/// search.  Only suitable for very small graphs (n <= 7 or so).
pub fn brute_local_connectivity(g: &Graph, u: usize, v: usize) -> usize {
    assert!(u != v);
    let paths = all_simple_paths(g, u, v);
    // Internal vertices as bitmasks; mask-disjoint == internally disjoint.
    let masks: Vec<u32> = paths
        .iter()
        .map(|p| p[1..p.len() - 1].iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut memo = vec![vec![u8::MAX; 1 << g.n()]; masks.len() + 1];
    fn best(i: usize, used: u32, masks: &[u32], memo: &mut [Vec<u8>]) -> u8 {
        if i == masks.len() {
            return 0;
        }
        if memo[i][used as usize] != u8::MAX {
            return memo[i][used as usize];
        }
        let mut value = best(i + 1, used, masks, memo);
        if masks[i] & used == 0 {
            value = value.max(1 + best(i + 1, used | masks[i], masks, memo));
        }
        memo[i][used as usize] = value;
        value
    }
    best(0, 0, &masks, &mut memo) as usize
}

/// Ideal connectedness by the brute-force local connectivities.
pub fn brute_is_ideally_connected(g: &Graph) -> bool {
    let n = g.n();
    for u in 0..n {
        for v in (u + 1)..n {
            if brute_local_connectivity(g, u, v) < g.degree(u).min(g.degree(v)) {
                return false;
            }
        }
    }
    true
}

fn subset_vertices(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn induced_degree(g: &Graph, verts: &[usize], v: usize) -> usize {
    verts.iter().filter(|&&w| w != v && g.has_edge(v, w)).count()
}

fn induced_edge_count(g: &Graph, verts: &[usize]) -> usize {
    let mut m = 0;
    for (i, &u) in verts.iter().enumerate() {
        for &w in &verts[i + 1..] {
            if g.has_edge(u, w) {
                m += 1;
            }
        }
    }
    m
}

fn induced_connected(g: &Graph, verts: &[usize]) -> bool {
    if verts.is_empty() {
        return true;
    }
    let mut seen = vec![verts[0]];
    let mut stack = vec![verts[0]];
    while let Some(u) = stack.pop() {
        for &w in verts {
            if g.has_edge(u, w) && !seen.contains(&w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == verts.len()
}

/// Does this exact vertex set induce a (chordless) cycle?
fn induces_cycle(g: &Graph, verts: &[usize]) -> bool {
    verts.len() >= 3
        && induced_edge_count(g, verts) == verts.len()
        && verts.iter().all(|&v| induced_degree(g, verts, v) == 2)
        && induced_connected(g, verts)
}

fn induces_p4(g: &Graph, verts: &[usize]) -> bool {
    verts.len() == 4
        && induced_edge_count(g, verts) == 3
        && induced_connected(g, verts)
        && verts.iter().all(|&v| induced_degree(g, verts, v) <= 2)
}

fn induces_2k2(g: &Graph, verts: &[usize]) -> bool {
    verts.len() == 4
        && induced_edge_count(g, verts) == 2
        && verts.iter().all(|&v| induced_degree(g, verts, v) == 1)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| subset_vertices(m, n))
        .collect()
}

/// No induced path on four vertices.
pub fn brute_is_cograph(g: &Graph) -> bool {
    subsets_of_size(g.n(), 4).iter().all(|s| !induces_p4(g, s))
}

/// No induced chordless cycle on four or more vertices.
pub fn brute_is_chordal(g: &Graph) -> bool {
    let n = g.n();
    (0u32..1 << n).all(|mask| {
        let verts = subset_vertices(mask, n);
        verts.len() < 4 || !induces_cycle(g, &verts)
    })
}

/// No induced C4, P4, or 2K2.
pub fn brute_is_threshold(g: &Graph) -> bool {
    subsets_of_size(g.n(), 4)
        .iter()
        .all(|s| !induces_p4(g, s) && !induces_2k2(g, s) && !induces_cycle(g, s))
}

/// No induced 2K2, C4, or C5.
pub fn brute_is_split(g: &Graph) -> bool {
    let four_ok = subsets_of_size(g.n(), 4)
        .iter()
        .all(|s| !induces_2k2(g, s) && !induces_cycle(g, s));
    four_ok && subsets_of_size(g.n(), 5).iter().all(|s| !induces_cycle(g, s))
}

/// No induced 2K2 anywhere.
pub fn brute_is_2k2_free(g: &Graph) -> bool {
    subsets_of_size(g.n(), 4).iter().all(|s| !induces_2k2(g, s))
}
