mod common;

use std::path::PathBuf;

use common::{p6_td, path_graph, prepared, random_instance};
use proptest::prelude::*;
use treecut_core::engine::{doubling_step, StepCase};
use treecut_core::generate::{generate, Family, InstanceSpec};
use treecut_core::graph::{self, Graph};
use treecut_core::labeling::*;
use treecut_core::treedec::*;

fn check_invariants(g: &Graph, td: &TreeDecomposition, p: &TreePath, pl: &PLabeling) {
    let n = g.n();
    assert_eq!(pl.n(), n);
    let mut seen = vec![false; n + 1];
    for k in 1..=n {
        let v = pl.vertex(k);
        assert!(!seen[v]);
        seen[v] = true;
        assert_eq!(pl.label(v), Some(k));
    }

    let blocks = pl.blocks();
    let order: Vec<usize> = blocks.iter().map(|b| b.node).collect();
    assert_eq!(order, p.nodes());
    let mut first_on_path = vec![usize::MAX; n + 1];
    for &i in p.nodes().iter().rev() {
        for &v in td.cluster(i) {
            first_on_path[v] = i;
        }
    }
    for b in &blocks {
        assert!(b.r_len() >= 1, "empty R block at node {}", b.node);
        for k in b.s_start..b.r_start {
            let v = pl.vertex(k);
            assert!(!pl.in_r(v) && first_on_path[v] == usize::MAX);
            let hangs = pl.hanging(b.node).iter().any(|&(j, _)| td.cluster(j).contains(&v));
            assert!(hangs, "S vertex {v} not in the subtree of node {}", b.node);
        }
        for k in b.r_start..=b.end {
            let v = pl.vertex(k);
            assert!(pl.in_r(v));
            assert_eq!(first_on_path[v], b.node);
        }
    }

    let cap = td.max_cluster_size() * graph::max_degree(g);
    for k in 1..=n {
        if pl.in_r(pl.vertex(k)) {
            let prefix: Vec<usize> = (1..=k).map(|j| pl.vertex(j)).collect();
            assert!(graph::cut_width_of_set(g, &prefix) <= cap);
        }
    }

    for &i in p.nodes() {
        let parts = decompose_by_node(pl, i).unwrap().parts();
        let mut part_of = vec![usize::MAX; n + 1];
        for (q, part) in parts.iter().enumerate() {
            for &v in part {
                assert_eq!(part_of[v], usize::MAX);
                part_of[v] = q;
            }
        }
        assert!(part_of[1..].iter().all(|&q| q != usize::MAX));
        let boundary = cluster_boundary_edges(g, td, i);
        assert!(boundary.len() <= cap);
        for (u, v) in g.edges() {
            if part_of[u] != part_of[v] {
                assert!(boundary.binary_search(&(u, v)).is_ok(), "edge {u}-{v} crosses parts of node {i}");
            }
        }
    }
}

#[test]
fn p6_whole_tree() {
    let td = p6_td();
    let p = TreePath::new(&td, (0..5).collect()).unwrap();
    let pl = build_plabeling(&td, &p).unwrap();
    assert_eq!(pl.vertices_by_label(), &[1, 2, 3, 4, 5, 6]);
    assert_eq!(pl.r_count(), 6);
    check_invariants(&path_graph(6), &td, &p, &pl);
}

#[test]
fn star_path_decomposition() {
    let g = Graph::from_edges(5, (2..=5).map(|v| (1, v))).unwrap();
    let td = tree_to_width1_td(&g).unwrap();
    let (nr, p) = prepared(&td);
    assert_eq!(p.len(), nr.node_count());
    let pl = build_plabeling(&nr, &p).unwrap();
    assert_eq!(pl.r_count(), 5);
    check_invariants(&g, &nr, &p, &pl);
}

#[test]
fn spider_hangs_legs_at_branch_nodes() {
    let (g, td) = generate(&InstanceSpec::new(Family::Spider, 3, 3, 0)).unwrap();
    let (nr, p) = prepared(&td);
    let pl = build_plabeling(&nr, &p).unwrap();
    check_invariants(&g, &nr, &p, &pl);
    let with_s: Vec<usize> = pl.blocks().iter().filter(|b| b.s_len() > 0).map(|b| b.node).collect();
    assert_eq!(with_s.len(), 1);
    assert!(nr.cluster(with_s[0]).contains(&1));
    // The center edges are chained on the path, so only the tail of one leg hangs.
    assert_eq!(pl.n() - pl.r_count(), 2);
}

#[test]
fn boundary_edges() {
    let g = path_graph(6);
    let td = p6_td();
    assert_eq!(cluster_boundary_edges(&g, &td, 2), vec![(2, 3), (3, 4), (4, 5)]);
    let td = TreeDecomposition::new(6, vec![vec![1, 2], vec![]], vec![(0, 1)]).unwrap();
    assert!(cluster_boundary_edges(&g, &td, 1).is_empty());
    let star = Graph::from_edges(5, (2..=5).map(|v| (1, v))).unwrap();
    let td = tree_to_width1_td(&star).unwrap();
    let i = (0..td.node_count()).find(|&i| td.cluster(i).contains(&2)).unwrap();
    assert_eq!(cluster_boundary_edges(&star, &td, i).len(), 4);
}

#[test]
fn node_parts_on_p6() {
    let td = p6_td();
    let p = TreePath::new(&td, (0..5).collect()).unwrap();
    let pl = build_plabeling(&td, &p).unwrap();
    let mid = decompose_by_node(&pl, 2).unwrap();
    assert_eq!(mid.prefix, vec![1, 2, 3]);
    assert_eq!(mid.isolated, vec![4]);
    assert_eq!(mid.suffix, vec![5, 6]);
    assert!(decompose_by_node(&pl, 0).unwrap().prefix.is_empty());
}

#[test]
fn redundant_paths_are_refused() {
    let td = TreeDecomposition::new(3, vec![vec![1, 2], vec![2], vec![2, 3]], vec![(0, 1), (1, 2)]).unwrap();
    let p = TreePath::new(&td, vec![0, 1, 2]).unwrap();
    assert!(build_plabeling(&td, &p).is_err());
}

fn golden(name: &str, actual: &str) {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(actual, expected, "golden file {name}");
}

#[test]
fn golden_dumps() {
    let td = p6_td();
    let p = TreePath::new(&td, (0..5).collect()).unwrap();
    golden("p6.txt", &build_plabeling(&td, &p).unwrap().dump(&td));

    for (name, spec) in [
        ("star4.txt", InstanceSpec::new(Family::Star, 4, 0, 0)),
        ("spider3x3.txt", InstanceSpec::new(Family::Spider, 3, 3, 0)),
        ("ternary2.txt", InstanceSpec::new(Family::Ternary, 2, 0, 0)),
        ("grid3.txt", InstanceSpec::new(Family::Grid, 3, 0, 0)),
    ] {
        let (_, td) = generate(&spec).unwrap();
        let (nr, p) = prepared(&td);
        golden(name, &build_plabeling(&nr, &p).unwrap().dump(&nr));
    }
}

/// After a second-case step, labeling the restricted decomposition from
/// scratch along the new path gives the same `R` and path nodes.
fn check_rebuild(td: &TreeDecomposition, pl: &PLabeling) {
    let (nodes, edges) = pl.tree();
    let local = |i: usize| nodes.iter().position(|&j| j == i).unwrap();
    let clusters = nodes
        .iter()
        .map(|&i| td.cluster(i).iter().filter_map(|&v| pl.label(v)).collect())
        .collect();
    let edges = edges.iter().map(|&(a, b)| (local(a), local(b))).collect();
    let sub = TreeDecomposition::new(pl.n(), clusters, edges).unwrap();
    let path = TreePath::new(&sub, pl.path().iter().map(|&i| local(i)).collect()).unwrap();
    let fresh = build_plabeling(&sub, &path).unwrap();
    for k in 1..=pl.n() {
        let v = pl.vertex(k);
        assert_eq!(fresh.in_r(k), pl.in_r(v));
        assert_eq!(nodes[fresh.path_node(k)], pl.path_node(v));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn invariants_on_random_instances(seed in any::<u64>()) {
        let (g, td) = random_instance(seed, 24, 30);
        let (nr, p) = prepared(&td);
        let pl = build_plabeling(&nr, &p).unwrap();
        check_invariants(&g, &nr, &p, &pl);
    }

    #[test]
    fn in_place_update_matches_rebuild(seed in any::<u64>(), frac in 0.05f64..0.95) {
        let (_, td) = random_instance(seed, 40, 60);
        let (nr, p) = prepared(&td);
        let mut pl = build_plabeling(&nr, &p).unwrap();
        let m = ((pl.n() as f64 * frac) as usize).max(1);
        let step = doubling_step(&mut pl, m, &nr).unwrap();
        if step.cut.case != StepCase::Case1 {
            check_rebuild(&nr, &pl);
        }
    }
}

#[test]
fn in_place_update_on_ternary_trees() {
    let mut second = 0;
    for h in 2..5 {
        let (_, td) = generate(&InstanceSpec::new(Family::Ternary, h, 0, 0)).unwrap();
        let (nr, p) = prepared(&td);
        let base = build_plabeling(&nr, &p).unwrap();
        for m in 1..=base.n() {
            let mut pl = base.clone();
            if doubling_step(&mut pl, m, &nr).unwrap().cut.case != StepCase::Case1 {
                second += 1;
                check_rebuild(&nr, &pl);
            }
        }
    }
    assert!(second > 0);
}
