use std::sync::OnceLock;

use proptest::prelude::*;

use ehrgraph::families::connected_one_three_graphs_upto;
use ehrgraph::lattice::{count_p, count_q, enumerate_q_points, vol_coset};
use ehrgraph::multigraph::{enumerate_internally_eulerian, permute_edges, permute_nodes};
use ehrgraph::nni::{apply_nni, in_some_q, nni_moves, weighted_nni};
use ehrgraph::{MultiGraph, QPoint};

fn graphs() -> &'static [MultiGraph] {
    static G: OnceLock<Vec<MultiGraph>> = OnceLock::new();
    G.get_or_init(|| connected_one_three_graphs_upto(7))
}

fn graph() -> impl Strategy<Value = MultiGraph> {
    (0..graphs().len()).prop_map(|i| graphs()[i].clone())
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cosets_partition_q(g in graph(), t in 0u64..=5) {
        let mut total = 0u128;
        for h in enumerate_internally_eulerian(&g).unwrap() {
            total += vol_coset(&g, h, t).unwrap();
        }
        prop_assert_eq!(total, count_q(&g, t).unwrap());
    }

    #[test]
    fn odd_dilations_scale_by_eulerian_count(g in graph(), half in 0u64..=2) {
        let t = 2 * half + 1;
        let n = enumerate_internally_eulerian(&g).unwrap().len() as u128;
        prop_assert_eq!(count_q(&g, t).unwrap(), n * count_p(&g, t).unwrap());
    }

    #[test]
    fn counts_ignore_labels(
        (g, edge_perm, node_perm) in graph().prop_flat_map(|g| {
            let (m, n) = (g.m(), g.n());
            (Just(g), shuffled(m), shuffled(n))
        }),
        t in 0u64..=4,
    ) {
        let h = permute_nodes(&permute_edges(&g, &edge_perm), &node_perm);
        prop_assert_eq!(count_p(&g, t).unwrap(), count_p(&h, t).unwrap());
        prop_assert_eq!(count_q(&g, t).unwrap(), count_q(&h, t).unwrap());
    }

    #[test]
    fn weighted_nni_round_trips(g in graph(), t in 0u64..=4, pick in any::<prop::sample::Index>(), mv in any::<prop::sample::Index>()) {
        let moves = nni_moves(&g);
        prop_assume!(!moves.is_empty());
        let trail = moves[mv.index(moves.len())];
        let points = enumerate_q_points(&g, t).unwrap();
        let p: &QPoint = &points[pick.index(points.len())];
        let g2 = apply_nni(&g, trail).unwrap();
        let img = weighted_nni(&g, trail, p).unwrap();
        prop_assert!(in_some_q(&g2, &img));
        prop_assert!(img.z.iter().all(|&z| z <= t as i64));
        prop_assert_eq!(&weighted_nni(&g2, trail.mirrored(), &img).unwrap(), p);
    }

    #[test]
    fn g13_round_trip(g in graph()) {
        prop_assert_eq!(MultiGraph::parse_g13(&g.to_g13()).unwrap(), g);
    }
}
