mod common;

use common::{distances, path_graph, random_tree};
use proptest::prelude::*;
use treecut_core::graph::{self, Graph, Partition};
use treecut_core::Ratio;

fn star4() -> Graph {
    Graph::from_edges(5, (2..=5).map(|v| (1, v))).unwrap()
}

#[test]
fn max_degree_examples() {
    assert_eq!(graph::max_degree(&path_graph(6)), 2);
    assert_eq!(graph::max_degree(&star4()), 4);
    assert_eq!(graph::max_degree(&Graph::empty(1).unwrap()), 0);
}

#[test]
fn cut_width_examples() {
    let p = Partition::bipartition(6, &[1, 2, 3]).unwrap();
    assert_eq!(graph::cut_width(&path_graph(6), &p).unwrap(), 1);
    let one = Partition::from_classes(6, &[(1..=6).collect()]).unwrap();
    assert_eq!(graph::cut_width(&path_graph(6), &one).unwrap(), 0);
    let p = Partition::bipartition(5, &[2, 3]).unwrap();
    assert_eq!(graph::cut_width(&star4(), &p).unwrap(), 2);
}

#[test]
fn partitions_must_cover() {
    assert!(Partition::from_classes(4, &[vec![1, 2], vec![2, 3, 4]]).is_err());
    assert!(Partition::from_classes(4, &[vec![1, 2], vec![3]]).is_err());
    let p = Partition::bipartition(4, &[1, 2]).unwrap();
    assert!(graph::cut_width(&path_graph(6), &p).is_err());
}

#[test]
fn longest_paths() {
    assert_eq!(graph::longest_path_in_tree(&path_graph(6)).unwrap().len(), 6);
    let lp = graph::longest_path_in_tree(&star4()).unwrap();
    assert_eq!(lp.len(), 3);
    assert_eq!(lp[1], 1);
    let cyc = Graph::from_edges(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
    assert!(graph::longest_path_in_tree(&cyc).is_err());
}

#[test]
fn relative_diameter_of_forests() {
    assert_eq!(graph::relative_diameter(&path_graph(6)).unwrap(), Ratio::new(1, 1));
    assert_eq!(graph::relative_diameter(&star4()).unwrap(), Ratio::new(3, 5));
    // two components: a path of 3 and a star with 3 leaves
    let g = Graph::from_edges(7, [(1, 2), (2, 3), (4, 5), (4, 6), (4, 7)]).unwrap();
    assert_eq!(graph::relative_diameter(&g).unwrap(), Ratio::new(6, 7));
}

#[test]
fn rejects_bad_edges() {
    assert!(Graph::from_edges(3, [(1, 1)]).is_err());
    assert!(Graph::from_edges(3, [(1, 2), (2, 1)]).is_err());
    assert!(Graph::from_edges(3, [(1, 4)]).is_err());
    assert!(Graph::empty(0).is_err());
}

proptest! {
    #[test]
    fn longest_path_matches_all_pairs_bfs(n in 1usize..40, seed in any::<u64>()) {
        let (g, _) = random_tree(n, seed);
        let diameter = (1..=n).flat_map(|s| distances(&g, s).into_iter().skip(1)).max().unwrap();
        let lp = graph::longest_path_in_tree(&g).unwrap();
        prop_assert_eq!(lp.len(), diameter + 1);
        for w in lp.windows(2) {
            prop_assert!(g.has_edge(w[0], w[1]));
        }
    }

    #[test]
    fn cut_width_is_symmetric(n in 2usize..30, seed in any::<u64>(), mask in any::<u32>()) {
        let (g, _) = random_tree(n, seed);
        let black: Vec<usize> = (1..=n).filter(|&v| mask >> (v % 32) & 1 == 1).collect();
        let white: Vec<usize> = (1..=n).filter(|&v| mask >> (v % 32) & 1 == 0).collect();
        let brute = g.edges().filter(|&(u, v)| black.contains(&u) != black.contains(&v)).count();
        prop_assert_eq!(graph::cut_width_of_set(&g, &black), brute);
        prop_assert_eq!(graph::cut_width_of_set(&g, &white), brute);
    }
}
