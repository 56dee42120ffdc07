mod common;

use common::{p6_td, path_graph, random_instance, random_tree};
use proptest::prelude::*;
use treecut_core::generate::{self, Family, InstanceSpec};
use treecut_core::graph::{self, Graph};
use treecut_core::oracle::brute_force_heaviest_path;
use treecut_core::treedec::*;
use treecut_core::{Error, Ratio};

#[test]
fn validation_examples() {
    let g = path_graph(6);
    let td = p6_td();
    assert!(validate(&g, &td).is_valid());
    assert_eq!(td.width(), 1);

    let missing = TreeDecomposition::new(
        6,
        vec![vec![1, 2], vec![3, 4], vec![4, 5], vec![5, 6]],
        vec![(0, 1), (1, 2), (2, 3)],
    )
    .unwrap();
    assert_eq!(validate(&g, &missing).uncovered_edge, Some((2, 3)));

    // vertex 4 at both ends of a path whose middle lacks it
    let g = Graph::from_edges(4, [(1, 2), (2, 3), (1, 4), (3, 4)]).unwrap();
    let td = TreeDecomposition::new(
        4,
        vec![vec![1, 4], vec![1, 2, 3], vec![3, 4]],
        vec![(0, 1), (1, 2)],
    )
    .unwrap();
    assert_eq!(validate(&g, &td).disconnected_vertex, Some(4));
}

#[test]
fn size_and_width() {
    assert_eq!(p6_td().size(), 15);
    let td = TreeDecomposition::new(7, vec![(1..=7).collect()], vec![]).unwrap();
    assert_eq!((td.size(), td.width()), (8, 6));
    let (_, td) = generate::generate(&InstanceSpec::new(Family::Ternary, 2, 0, 0)).unwrap();
    assert_eq!((td.node_count(), td.size()), (12, 36));
}

#[test]
fn nonredundant_examples() {
    let td = TreeDecomposition::new(2, vec![vec![1, 2], vec![1, 2]], vec![(0, 1)]).unwrap();
    let nr = make_nonredundant(&td).unwrap();
    assert_eq!(nr.clusters(), &[vec![1, 2]]);

    assert_eq!(make_nonredundant(&p6_td()).unwrap().clusters(), p6_td().clusters());

    let chain = TreeDecomposition::new(
        3,
        vec![vec![1], vec![1, 2], vec![2], vec![2, 3]],
        vec![(0, 1), (1, 2), (2, 3)],
    )
    .unwrap();
    let mut got: Vec<Vec<usize>> = make_nonredundant(&chain)
        .unwrap()
        .clusters()
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c
        })
        .collect();
    got.sort();
    assert_eq!(got, vec![vec![1, 2], vec![2, 3]]);

    let empty = TreeDecomposition::new(2, vec![vec![], vec![]], vec![(0, 1)]).unwrap();
    assert!(matches!(make_nonredundant(&empty), Err(Error::EmptyDecomposition)));
}

#[test]
fn restriction_examples() {
    let keep = VertexRenaming::keep(6, &[1, 2, 3]).unwrap();
    let r = restrict_to_vertices(&p6_td(), &keep).unwrap();
    assert_eq!(r.clusters(), &[vec![1, 2], vec![2, 3], vec![3], vec![], vec![]]);
    let sub = path_graph(6).induced_subgraph(&[1, 2, 3]).unwrap().0;
    assert!(validate(&sub, &r).is_valid());

    let r = restrict(&p6_td(), &[2], None, &VertexRenaming::identity(6)).unwrap();
    assert_eq!(r.node_count(), 1);
    assert!(matches!(
        restrict(&p6_td(), &[0, 2], None, &VertexRenaming::identity(6)),
        Err(Error::DisconnectedKeepTree)
    ));
    let joined = restrict(&p6_td(), &[0, 2], Some((0, 2)), &VertexRenaming::identity(6)).unwrap();
    assert_eq!(joined.edges().len(), 1);
}

/// Center node {1} with branches whose cluster unions are 5, 4 and 2
/// vertices, all sharing vertex 1.
fn y_fixture() -> TreeDecomposition {
    TreeDecomposition::new(
        9,
        vec![
            vec![1],
            vec![1, 2, 3],
            vec![3, 4, 5],
            vec![1, 6, 7],
            vec![7, 8],
            vec![1, 9],
        ],
        vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)],
    )
    .unwrap()
}

#[test]
fn heaviest_path_examples() {
    let (p, w) = heaviest_path(&p6_td());
    assert_eq!((p.len(), w.weight, w.relative), (5, 6, Ratio::new(1, 1)));

    let td = y_fixture();
    let (p, w) = heaviest_path(&td);
    assert_eq!(w.weight, 8);
    let mut ends = [p.nodes()[0], *p.nodes().last().unwrap()];
    ends.sort_unstable();
    assert_eq!(ends, [2, 4]);
    assert_eq!(brute_force_heaviest_path(&td).unwrap().1, 8);

    let single = TreeDecomposition::new(3, vec![vec![1, 2, 3]], vec![]).unwrap();
    let (p, w) = heaviest_path(&single);
    assert_eq!((p.nodes(), w.weight), (&[0][..], 3));
}

#[test]
fn path_weight_examples() {
    let td = p6_td();
    let all = TreePath::new(&td, (0..5).collect()).unwrap();
    assert_eq!(path_weight(&td, &all).relative, Ratio::new(1, 1));
    let one = TreePath::new(&td, vec![0]).unwrap();
    let w = path_weight(&td, &one);
    assert_eq!((w.weight, w.relative), (2, Ratio::new(1, 3)));

    let (_, td) = generate::generate(&InstanceSpec::new(Family::Ternary, 2, 0, 0)).unwrap();
    let (p, w) = heaviest_path(&td);
    assert_eq!(w.weight, brute_force_heaviest_path(&td).unwrap().1);
    assert_eq!(path_weight(&td, &p).weight, w.weight);
    assert!(w.relative >= Ratio::new(5, 13));
}

#[test]
fn nonredundant_path_chain() {
    let td = TreeDecomposition::new(3, vec![vec![1, 2], vec![2], vec![2, 3]], vec![(0, 1), (1, 2)]).unwrap();
    let p = TreePath::new(&td, vec![0, 1, 2]).unwrap();
    assert_eq!(is_nonredundant_path(&td, &p), None);
    let td = TreeDecomposition::new(2, vec![vec![], vec![1, 2]], vec![(0, 1)]).unwrap();
    let p = TreePath::new(&td, vec![0, 1]).unwrap();
    assert_eq!(is_nonredundant_path(&td, &p), None);
    assert_eq!(is_nonredundant_path(&td, &TreePath::new(&td, vec![1]).unwrap()), Some(PathEnd::Front));
}

#[test]
fn width_one_decompositions() {
    let td = tree_to_width1_td(&path_graph(6)).unwrap();
    assert_eq!(td.node_count(), 5);
    assert_eq!(heaviest_relative_weight(&td), Ratio::new(1, 1));

    let star = Graph::from_edges(5, (2..=5).map(|v| (1, v))).unwrap();
    let td = tree_to_width1_td(&star).unwrap();
    assert_eq!(td.node_count(), 4);
    assert!(heaviest_relative_weight(&td) >= Ratio::new(3, 5));

    let single = tree_to_width1_td(&Graph::empty(1).unwrap()).unwrap();
    assert_eq!(single.clusters(), &[vec![1]]);
    let cyc = Graph::from_edges(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
    assert!(matches!(tree_to_width1_td(&cyc), Err(Error::NotATree)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn heaviest_path_matches_brute_force(seed in any::<u64>()) {
        let (_, td) = random_instance(seed, 14, 12);
        let (p, w) = heaviest_path(&td);
        let (_, best) = brute_force_heaviest_path(&td).unwrap();
        prop_assert_eq!(w.weight, best);
        prop_assert_eq!(path_weight(&td, &p).weight, best);
    }

    #[test]
    fn nonredundant_contract(seed in any::<u64>()) {
        let (g, td) = random_instance(seed, 20, 30);
        let nr = make_nonredundant(&td).unwrap();
        prop_assert!(validate(&g, &nr).is_valid());
        prop_assert!(is_nonredundant(&nr));
        prop_assert!(nr.node_count() <= g.n());
        prop_assert!(nr.size() <= td.size());
        prop_assert!(nr.max_cluster_size() <= td.max_cluster_size());
        prop_assert!(heaviest_relative_weight(&nr) >= heaviest_relative_weight(&td));
        for &(a, b) in nr.edges() {
            let (x, y) = (nr.cluster(a), nr.cluster(b));
            prop_assert!(!x.iter().all(|v| y.contains(v)));
            prop_assert!(!y.iter().all(|v| x.contains(v)));
        }
        let (p, _) = heaviest_path(&nr);
        prop_assert!(is_nonredundant_path(&nr, &p).is_some());
    }

    #[test]
    fn width_one_route_beats_diameter(n in 1usize..60, seed in any::<u64>()) {
        let (g, td) = random_tree(n, seed);
        prop_assert!(validate(&g, &td).is_valid());
        prop_assert!(td.max_cluster_size() <= 2);
        prop_assert!(heaviest_relative_weight(&td) >= graph::relative_diameter(&g).unwrap());
    }

    #[test]
    fn restriction_to_any_subset_is_valid(seed in any::<u64>(), mask in any::<u32>()) {
        let (g, td) = random_instance(seed, 20, 25);
        let keep: Vec<usize> = (1..=g.n()).filter(|&v| mask >> (v % 32) & 1 == 1).collect();
        prop_assume!(!keep.is_empty());
        let renaming = VertexRenaming::keep(g.n(), &keep).unwrap();
        let r = restrict_to_vertices(&td, &renaming).unwrap();
        let (sub, _) = g.induced_subgraph(&keep).unwrap();
        prop_assert!(validate(&sub, &r).is_valid());
        prop_assert!(r.size() <= td.size());
    }

    #[test]
    fn relative_weight_range(seed in any::<u64>()) {
        let (g, td) = random_instance(seed, 20, 25);
        let r = heaviest_relative_weight(&td);
        prop_assert!(r >= Ratio::new(1, g.n() as u64) && r <= Ratio::new(1, 1));
    }
}
