//! Property tests for the graph type, its operators, and the text codecs.

use proptest::prelude::*;

use idealconn::graph::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use idealconn::{Graph, VertexSet};

mod support;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |bv| {
            let mut g = Graph::edgeless(n);
            let mut bit = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bv[bit] {
                        g.add_edge(u, v).unwrap();
                    }
                    bit += 1;
                }
            }
            g
        })
    })
}

fn well_formed(g: &Graph) {
    for v in 0..g.n() {
        assert!(!g.has_edge(v, v));
        for &w in g.neighbors(v) {
            assert!(w < g.n());
            assert!(g.has_edge(w, v));
        }
    }
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        let line = to_graph6(&g).unwrap();
        let back = parse_graph6(&line).unwrap();
        prop_assert_eq!(&back, &g);
        // Byte-identical re-serialization.
        prop_assert_eq!(to_graph6(&back).unwrap(), line);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(12)) {
        let text = to_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn complement_is_involutive(g in arb_graph(12)) {
        let c = g.complement();
        well_formed(&c);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn join_edge_count(g1 in arb_graph(8), g2 in arb_graph(8)) {
        let j = g1.join(&g2);
        well_formed(&j);
        prop_assert_eq!(j.edge_count(), g1.edge_count() + g2.edge_count() + g1.n() * g2.n());
        let u = g1.union(&g2);
        prop_assert_eq!(u.edge_count(), g1.edge_count() + g2.edge_count());
        prop_assert_eq!(u.n(), g1.n() + g2.n());
    }

    #[test]
    fn induced_preserves_adjacency(g in arb_graph(10), picks in proptest::collection::vec(any::<bool>(), 10)) {
        let keep: VertexSet = (0..g.n()).filter(|&v| picks[v]).collect();
        let sub = g.induced_subgraph(&keep).unwrap();
        well_formed(&sub.graph);
        prop_assert_eq!(sub.graph.n(), keep.len());
        for (nu, &ou) in sub.old_of_new.iter().enumerate() {
            for (nv, &ov) in sub.old_of_new.iter().enumerate() {
                prop_assert_eq!(sub.graph.has_edge(nu, nv), g.has_edge(ou, ov));
            }
        }
    }
}
