//! Acceptance suite: one test per release criterion.  Each test prints a
//! single PASS line (visible with `--nocapture`) after asserting every
//! instance; any failure aborts the test with the offending graph attached.
//!
//! Criteria with a stated time budget assert it; the sweeps are exact, not
//! sampled, wherever the criterion says "all".

mod support;

use std::collections::BTreeSet;
use std::time::Instant;

use idealconn::cliquetree::{
    is_clique_tree_universal, kj_profile, maximal_cliques_chordal, universal_assignment,
    verify_clique_tree_pair, verify_threshold_tree_pair, CliqueTreePair, TreeShape,
};
use idealconn::connectivity::{is_ideally_connected, local_connectivity, vertex_connectivity};
use idealconn::decomposition::{
    all_kappa_clique_cuts, check_lemma_u_s, check_unique_cut, cut_subgraphs, find_kappa_clique_cut,
    verify_structure_theorem,
};
use idealconn::generators::{
    all_graphs, random_chordal, random_cograph, random_threshold, random_tree,
    split_non_threshold6, threshold16, SplitMix64,
};
use idealconn::graph::{parse_graph6, to_graph6};
use idealconn::recognizers::{
    recognize_chordal, recognize_split, recognize_threshold, CreationSequence, VertexTag,
};
use idealconn::theorems::{fast_ideal_chordal, fast_ideal_cograph, threshold_disjoint_paths};
use idealconn::Graph;
use support::brute_local_connectivity;

fn oracle_ideal(g: &Graph) -> bool {
    is_ideally_connected(g, false).unwrap().ideally_connected
}

/// Criterion 1: the cograph decider equals the flow oracle on every labeled
/// cograph with at most six vertices.
#[test]
fn criterion_01_cograph_decider_exhaustive() {
    let start = Instant::now();
    let mut checked = 0usize;
    for n in 1..=6 {
        for g in all_graphs(n).unwrap() {
            let Ok(verdict) = fast_ideal_cograph(&g) else { continue };
            assert_eq!(
                verdict.ideally_connected,
                Some(oracle_ideal(&g)),
                "decider/oracle disagreement on {g:?}"
            );
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    // 1 + 2 + 8 + 52 + 472 + 5504 labeled cographs on 1..=6 vertices.
    assert_eq!(checked, 6039);
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}");
    println!("ACCEPTANCE 1 (cograph decider, n <= 6 exhaustive): PASS ({checked} cographs, {elapsed:?})");
}

/// Criterion 2: the chordal decider equals the flow oracle on every labeled
/// chordal graph with at most six vertices, plus ten thousand random
/// chordal graphs with up to twelve.
#[test]
fn criterion_02_chordal_decider_exhaustive_and_random() {
    let start = Instant::now();
    let mut checked = 0usize;
    for n in 1..=6 {
        for g in all_graphs(n).unwrap() {
            let Ok(verdict) = fast_ideal_chordal(&g) else { continue };
            assert_eq!(
                verdict.ideally_connected,
                Some(oracle_ideal(&g)),
                "decider/oracle disagreement on {g:?}"
            );
            checked += 1;
        }
    }
    let mut rng = SplitMix64::new(0xc2);
    for seed in 0..10_000u64 {
        let n = 1 + rng.below(12);
        let g = random_chordal(n, seed, seed % 2 == 0);
        let verdict = fast_ideal_chordal(&g).expect("generated graphs are chordal");
        assert_eq!(
            verdict.ideally_connected,
            Some(oracle_ideal(&g)),
            "decider/oracle disagreement on {g:?}"
        );
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "took {elapsed:?}");
    println!("ACCEPTANCE 2 (chordal decider, exhaustive + 10^4 random): PASS ({checked} graphs, {elapsed:?})");
}

/// Criterion 3: the structure-theorem conditions are equivalent to ideal
/// connectedness on every connected non-complete graph with at most six
/// vertices possessing a minimum-size clique cut.
#[test]
fn criterion_03_structure_theorem_biconditional() {
    let start = Instant::now();
    let mut checked = 0usize;
    for n in 2..=6 {
        for g in all_graphs(n).unwrap() {
            if !g.is_connected() || g.is_complete() {
                continue;
            }
            let Some(cut) = find_kappa_clique_cut(&g).unwrap() else { continue };
            let report = verify_structure_theorem(&g, &cut).unwrap();
            assert_eq!(
                report.overall(),
                oracle_ideal(&g),
                "structure conditions vs oracle on {g:?} with cut {:?}: {report:?}",
                cut.members
            );
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(checked > 5_000);
    assert!(elapsed.as_secs() < 300, "took {elapsed:?}");
    println!("ACCEPTANCE 3 (structure theorem biconditional, n <= 6): PASS ({checked} graphs, {elapsed:?})");
}

/// Criterion 4: the subgraph lemmas and the uniqueness corollary hold on
/// every ideally connected graph with a clique cut, exhaustively to n = 6
/// and on a thousand random threshold graphs with up to fourteen vertices.
#[test]
fn criterion_04_lemma_property_suites() {
    let start = Instant::now();
    let mut checked = 0usize;
    let check_graph = |g: &Graph| {
        if !g.is_connected() || g.is_complete() || g.n() < 2 {
            return false;
        }
        let Some(cut) = find_kappa_clique_cut(g).unwrap() else { return false };
        if !oracle_ideal(g) {
            return false;
        }
        let t = cut.size();
        let decomp = cut_subgraphs(g, &cut).unwrap();

        // At most one component carries a vertex of degree above t.
        let high = decomp
            .subgraphs
            .iter()
            .filter(|s| s.component.iter().any(|&v| g.degree(v) > t))
            .count();
        assert!(high <= 1, "{g:?}");

        // Degree chain and the local-connectivity equalities around the cut.
        assert!(check_lemma_u_s(g, &cut).unwrap(), "{g:?}");
        for sub in &decomp.subgraphs {
            for &u in &sub.component {
                for &s in &cut.members {
                    let du = g.degree(u);
                    assert_eq!(local_connectivity(g, u, s).unwrap(), du, "{g:?}");
                    let nu = sub.new_of_old(u).unwrap();
                    let ns = sub.new_of_old(s).unwrap();
                    assert_eq!(local_connectivity(&sub.graph, nu, ns).unwrap(), du, "{g:?}");
                }
            }
        }

        // Every cut-subgraph is ideally connected with connectivity >= t.
        for sub in &decomp.subgraphs {
            assert!(oracle_ideal(&sub.graph), "{g:?}");
            assert!(vertex_connectivity(&sub.graph).unwrap() >= t, "{g:?}");
        }

        // The clique cut is unique and carries the maximum degree, which
        // exceeds t.
        assert!(check_unique_cut(g).unwrap(), "{g:?}");
        assert_eq!(all_kappa_clique_cuts(g).unwrap().len(), 1, "{g:?}");
        true
    };

    for n in 2..=6 {
        for g in all_graphs(n).unwrap() {
            if check_graph(&g) {
                checked += 1;
            }
        }
    }
    let mut qualifying = 0usize;
    let mut seed = 0u64;
    let mut rng = SplitMix64::new(0xc4);
    while qualifying < 1_000 {
        let n = 2 + rng.below(13);
        let g = random_threshold(n, seed);
        seed += 1;
        if check_graph(&g) {
            qualifying += 1;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    println!("ACCEPTANCE 4 (subgraph lemma suites): PASS ({checked} graphs, {elapsed:?})");
}

/// Criterion 5: the two named fixtures behave exactly as documented.
#[test]
fn criterion_05_fixtures_exact() {
    let start = Instant::now();

    let g16 = threshold16();
    let m = maximal_cliques_chordal(&g16).unwrap();
    assert_eq!(m.len(), 5);
    assert_eq!(
        kj_profile(&g16).unwrap().counts,
        vec![5, 5, 5, 5, 3, 2, 1, 1, 1, 1, 1, 1]
    );
    assert!(recognize_threshold(&g16).is_ok());
    assert!(oracle_ideal(&g16));

    let g6 = split_non_threshold6();
    assert!(recognize_split(&g6).is_ok());
    assert!(recognize_chordal(&g6).is_ok());
    assert!(recognize_threshold(&g6).is_err());
    let report = is_ideally_connected(&g6, false).unwrap();
    assert!(!report.ideally_connected);
    let w = report.witness.unwrap();
    assert_eq!((w.local, w.bound), (3, 4));
    assert_eq!(maximal_cliques_chordal(&g6).unwrap().len(), 4);
    let verdict = is_clique_tree_universal(&g6).unwrap();
    assert!(!verdict.universal);
    let failing = verdict.failing_tree.unwrap();
    assert_eq!(failing.node_count, 4);
    assert!(failing.is_path_shape());

    let elapsed = start.elapsed();
    assert!(elapsed.as_millis() < 1000, "took {elapsed:?}");
    println!("ACCEPTANCE 5 (fixtures exact): PASS ({elapsed:?})");
}

/// Criterion 6: the breadth-first assignment always produces a verified
/// clique tree, across 500 random threshold graphs and 20 random trees
/// each.
#[test]
fn criterion_06_universal_assignment_random() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0xc6);
    let mut graphs = 0usize;
    let mut pairs = 0usize;
    let mut seed = 0u64;
    while graphs < 500 {
        let n = 1 + rng.below(20);
        let g = random_threshold(n, 0x600D + seed);
        seed += 1;
        let k = maximal_cliques_chordal(&g).unwrap().len();
        if k == 0 || k > 8 {
            continue;
        }
        graphs += 1;
        for trial in 0..20u64 {
            let tree = random_tree(k, seed.wrapping_mul(131).wrapping_add(trial));
            let pair = universal_assignment(&g, &tree).unwrap();
            assert!(
                verify_clique_tree_pair(&g, &pair).unwrap().valid,
                "assignment failed for {g:?} on {tree:?}"
            );
            pairs += 1;
        }
    }
    let elapsed = start.elapsed();
    assert_eq!(pairs, 10_000);
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}");
    println!("ACCEPTANCE 6 (universal assignment, 500 x 20): PASS ({pairs} pairs, {elapsed:?})");
}

/// Criterion 7: on every threshold graph with at most four maximal cliques
/// (from all creation sequences of length up to eight, deduplicated) and
/// every tree and bijection, the nested-subtree verifier agrees with the
/// definitional one.
#[test]
fn criterion_07_threshold_verifier_equivalence() {
    let start = Instant::now();
    // Threshold graphs with equal degree multisets are isomorphic, so the
    // degree sequence is a sound deduplication key.
    let mut by_degrees: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut graphs: Vec<Graph> = Vec::new();
    for len in 1..=8usize {
        for bits in 0u32..1 << (len - 1) {
            let tags: Vec<VertexTag> = core::iter::once(VertexTag::Isolated)
                .chain((0..len - 1).map(|i| {
                    if bits >> i & 1 == 1 {
                        VertexTag::Dominating
                    } else {
                        VertexTag::Isolated
                    }
                }))
                .collect();
            let g = CreationSequence::replay_tags(&tags);
            if by_degrees.insert(g.degree_sequence()) {
                graphs.push(g);
            }
        }
    }
    let mut checked = 0usize;
    let mut kept = 0usize;
    for g in &graphs {
        let k = maximal_cliques_chordal(g).unwrap().len();
        if k > 4 {
            continue;
        }
        kept += 1;
        for tree in all_labeled_trees(k) {
            for assignment in permutations(k) {
                let pair = CliqueTreePair { tree: tree.clone(), assignment };
                let by_definition = verify_clique_tree_pair(g, &pair).unwrap().valid;
                let by_profile = verify_threshold_tree_pair(g, &pair).unwrap();
                assert_eq!(by_definition, by_profile, "{g:?} {pair:?}");
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(kept >= 10);
    println!(
        "ACCEPTANCE 7 (threshold verifier equivalence): PASS ({kept} graphs, {checked} pairs, {elapsed:?})"
    );
}

fn all_labeled_trees(k: usize) -> Vec<TreeShape> {
    match k {
        0 => Vec::new(),
        1 => vec![TreeShape { node_count: 1, edges: vec![] }],
        2 => vec![TreeShape::path(2)],
        _ => {
            let mut out = Vec::new();
            let mut code = vec![0usize; k - 2];
            loop {
                out.push(TreeShape::from_pruefer(&code));
                let mut i = 0;
                while i < code.len() {
                    code[i] += 1;
                    if code[i] < k {
                        break;
                    }
                    code[i] = 0;
                    i += 1;
                }
                if i == code.len() {
                    return out;
                }
            }
        }
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(k - 1) {
        for slot in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(slot, k - 1);
            out.push(p);
        }
    }
    out
}

/// Criterion 8: the length-two path constructor returns exactly
/// `min{deg(u), deg(v)}` internally disjoint short paths, matching the flow
/// oracle, across a thousand random threshold graphs with up to fifty
/// vertices and every vertex pair.
#[test]
fn criterion_08_threshold_paths_bulk() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0xc8);
    let mut pairs = 0usize;
    for seed in 0..1_000u64 {
        let n = 2 + rng.below(49);
        let g = random_threshold(n, 0x8008 + seed);
        for u in 0..n {
            for v in (u + 1)..n {
                let ps = threshold_disjoint_paths(&g, u, v).unwrap();
                ps.validate(&g).unwrap();
                assert!(ps.paths.iter().all(|p| p.len() <= 3), "{g:?}");
                let expected = g.degree(u).min(g.degree(v));
                assert_eq!(ps.paths.len(), expected, "{g:?} ({u}, {v})");
                assert_eq!(local_connectivity(&g, u, v).unwrap(), expected, "{g:?} ({u}, {v})");
                pairs += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 180, "took {elapsed:?}");
    println!("ACCEPTANCE 8 (threshold length-2 paths, 10^3 graphs): PASS ({pairs} pairs, {elapsed:?})");
}

/// Criterion 9: the flow oracle equals exhaustive disjoint-path-family
/// enumeration on every labeled graph with at most five vertices and every
/// pair.
#[test]
fn criterion_09_flow_oracle_ground_truth() {
    let start = Instant::now();
    let mut pairs = 0usize;
    for n in 2..=5 {
        for g in all_graphs(n).unwrap() {
            for u in 0..n {
                for v in (u + 1)..n {
                    assert_eq!(
                        local_connectivity(&g, u, v).unwrap(),
                        brute_local_connectivity(&g, u, v),
                        "{g:?} ({u}, {v})"
                    );
                    pairs += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    println!("ACCEPTANCE 9 (flow oracle vs enumeration, n <= 5): PASS ({pairs} pairs, {elapsed:?})");
}

/// Criterion 10: byte-identical graph6 round-trips across a mixed corpus of
/// ten thousand generated graphs.
#[test]
fn criterion_10_graph6_round_trip_corpus() {
    let start = Instant::now();
    let mut corpus = String::new();
    let mut count = 0usize;
    let mut rng = SplitMix64::new(0xca);
    while count < 10_000 {
        let g = match count % 8 {
            0 => random_threshold(1 + rng.below(30), count as u64),
            1 => random_cograph(1 + rng.below(20), count as u64),
            2 => random_chordal(1 + rng.below(25), count as u64, count % 16 < 8),
            3 => Graph::complete(1 + rng.below(15)),
            4 => Graph::path(1 + rng.below(40)),
            5 => Graph::cycle(3 + rng.below(40)),
            6 => Graph::star(1 + rng.below(40)),
            _ => {
                // Dense random graph on up to 70 vertices, exercising the
                // extended header.
                let n = 63 + rng.below(8);
                let mut g = Graph::edgeless(n);
                for u in 0..n {
                    for v in (u + 1)..n {
                        if rng.next_bool() {
                            g.add_edge(u, v).unwrap();
                        }
                    }
                }
                g
            }
        };
        corpus.push_str(&to_graph6(&g).unwrap());
        corpus.push('\n');
        count += 1;
    }
    let mut round_tripped = 0usize;
    for line in corpus.lines() {
        let g = parse_graph6(line).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), line, "round-trip broke on {line:?}");
        round_tripped += 1;
    }
    assert_eq!(round_tripped, 10_000);
    let elapsed = start.elapsed();
    println!("ACCEPTANCE 10 (graph6 corpus round-trip): PASS ({round_tripped} lines, {elapsed:?})");
}
