mod common;

use std::path::Path;

use common::random_instance;
use proptest::prelude::*;
use treecut_core::io::*;
use treecut_core::{Graph, TreeDecomposition};

fn edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

fn same_td(a: &TreeDecomposition, b: &TreeDecomposition) -> bool {
    a.universe() == b.universe() && a.ids() == b.ids() && a.clusters() == b.clusters() && a.edges() == b.edges()
}

#[test]
fn detection() {
    assert_eq!(GraphFormat::detect(Path::new("g.json"), ""), GraphFormat::Json);
    assert_eq!(GraphFormat::detect(Path::new("g.col"), ""), GraphFormat::Dimacs);
    assert_eq!(GraphFormat::detect(Path::new("g"), "c hi\np edge 2 1\ne 1 2\n"), GraphFormat::Dimacs);
    assert_eq!(GraphFormat::detect(Path::new("g"), " {\"n\":1}"), GraphFormat::Json);
    assert_eq!(GraphFormat::detect(Path::new("g.txt"), "# c\n2 1\n1 2\n"), GraphFormat::EdgeList);
}

#[test]
fn malformed_inputs() {
    assert!(parse_edge_list("").is_err());
    assert!(parse_edge_list("3 2\n1 2\n").is_err());
    assert!(parse_edge_list("3 1\n1 x\n").is_err());
    assert!(parse_edge_list("2 1\n1 3\n").is_err());
    assert!(parse_dimacs("p edge 3 2\ne 1 2\n").is_err());
    assert!(td_from_json(r#"{"nodes":[{"id":0,"cluster":[1]}],"edges":[[0,7]]}"#).is_err());
}

#[test]
fn files_by_extension() {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let g = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
    for (name, format) in [("c4.txt", GraphFormat::EdgeList), ("c4.col", GraphFormat::Dimacs), ("c4.json", GraphFormat::Json)] {
        let path = dir.join(name);
        std::fs::write(&path, write_graph(&g, format).unwrap()).unwrap();
        assert_eq!(edges(&read_graph(&path).unwrap()), edges(&g));
    }
}

#[test]
fn universe_defaults_to_largest_vertex() {
    let td = td_from_json(r#"{"nodes":[{"id":5,"cluster":[1,3]},{"id":9,"cluster":[3,4]}],"edges":[[5,9]]}"#).unwrap();
    assert_eq!(td.universe(), 4);
    assert_eq!(td.ids(), &[5, 9]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph_round_trips(seed in any::<u64>()) {
        let (g, _) = random_instance(seed, 30, 30);
        for format in [GraphFormat::EdgeList, GraphFormat::Dimacs, GraphFormat::Json] {
            let text = write_graph(&g, format).unwrap();
            prop_assert_eq!(GraphFormat::detect(Path::new("x"), &text), format);
            let back = parse_graph(&text, format).unwrap();
            prop_assert_eq!(back.n(), g.n());
            prop_assert_eq!(edges(&back), edges(&g));
        }
    }

    #[test]
    fn td_round_trips(seed in any::<u64>()) {
        let (_, td) = random_instance(seed, 30, 40);
        let back = td_from_json(&td_to_json(&td).unwrap()).unwrap();
        prop_assert!(same_td(&td, &back));
    }
}
