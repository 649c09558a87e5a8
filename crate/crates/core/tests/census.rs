use std::collections::HashSet;

use dsgraph::census::{
    enumerate_graphs, kites_of_order, Census, CensusOptions, DsVerdict, GENERATOR_VERSION,
};
use dsgraph::exact::{charpoly, charpoly_pendant_recurrence, trace_powers, MatrixKind};
use dsgraph::graph::{is_isomorphic, make_family, Family};
use dsgraph::reproduce::labeled_class_representatives;
use dsgraph::structure::{is_smith, triangle_count, triangle_count_enumerated};
use dsgraph::transforms::line_graph_simple;
use dsgraph::Graph;

#[test]
fn counts_match_known_sequence() {
    let census = Census::default();
    let all: Vec<usize> = (1..=8)
        .map(|n| census.enumerate_graphs(n, false).unwrap().len())
        .collect();
    assert_eq!(all, [1, 2, 4, 11, 34, 156, 1044, 12346]);
    let connected: Vec<usize> = (1..=8)
        .map(|n| census.enumerate_graphs(n, true).unwrap().len())
        .collect();
    assert_eq!(connected, [1, 1, 2, 6, 21, 112, 853, 11117]);
}

#[test]
fn counts_match_labeled_dedup() {
    for n in 1..=6 {
        assert_eq!(
            enumerate_graphs(n, false).unwrap().len(),
            labeled_class_representatives(n).unwrap().len(),
            "n = {n}"
        );
    }
}

#[test]
fn enumeration_is_isomorph_free_and_canonical() {
    let graphs = enumerate_graphs(7, false).unwrap();
    let forms: HashSet<String> = graphs
        .iter()
        .map(|g| dsgraph::graph::canonical_form(g).unwrap())
        .collect();
    assert_eq!(forms.len(), graphs.len());
    for g in &graphs {
        assert_eq!(dsgraph::graph::canonical_form(g).unwrap(), g.to_graph6());
    }
}

#[test]
fn report_independent_of_parallelism() {
    let serial = Census::new(CensusOptions {
        jobs: Some(1),
        cache_dir: None,
    })
    .unwrap();
    let parallel = Census::new(CensusOptions {
        jobs: Some(4),
        cache_dir: None,
    })
    .unwrap();
    for kind in MatrixKind::ALL {
        let a = serial
            .cospectral_classes(7, kind, false, &kites_of_order(7))
            .unwrap();
        let b = parallel
            .cospectral_classes(7, kind, false, &kites_of_order(7))
            .unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}

#[test]
fn cache_round_trip_and_stale_guard() {
    let dir = tempfile::tempdir().unwrap();
    let opts = CensusOptions {
        jobs: None,
        cache_dir: Some(dir.path().to_path_buf()),
    };
    let fresh = Census::new(opts.clone())
        .unwrap()
        .table(6, MatrixKind::SignlessLaplacian)
        .unwrap();
    let path = dir.path().join("census-n6-signless_laplacian.tsv");
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with(&format!(
        "# dsgraph-census v{GENERATOR_VERSION} n=6 kind=signless_laplacian\n"
    )));
    assert_eq!(text.lines().count(), 157);

    let reloaded = Census::new(opts.clone())
        .unwrap()
        .table(6, MatrixKind::SignlessLaplacian)
        .unwrap();
    assert_eq!(fresh.entries.len(), reloaded.entries.len());
    for (a, b) in fresh.entries.iter().zip(&reloaded.entries) {
        assert_eq!((&a.graph, &a.charpoly), (&b.graph, &b.charpoly));
    }

    // A file from another generator version is rebuilt, not trusted.
    std::fs::write(
        &path,
        "# dsgraph-census v0 n=6 kind=signless_laplacian\nE???\t1\n",
    )
    .unwrap();
    let rebuilt = Census::new(opts)
        .unwrap()
        .table(6, MatrixKind::SignlessLaplacian)
        .unwrap();
    assert_eq!(rebuilt.entries.len(), 156);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
}

#[test]
fn cospectral_classes_share_walk_counts() {
    let census = Census::default();
    for n in 1..=7 {
        let table = census.table(n, MatrixKind::Adjacency).unwrap();
        for class in table.nontrivial_classes(false) {
            let g0 = &class[0].graph;
            for e in &class[1..] {
                assert!(!is_isomorphic(g0, &e.graph).unwrap());
                assert_eq!(trace_powers(g0, n), trace_powers(&e.graph, n));
                assert_eq!(g0.size(), e.graph.size());
                assert_eq!(triangle_count(g0), triangle_count(&e.graph));
            }
        }
    }
}

#[test]
fn equal_traces_imply_equal_polynomials() {
    // Conversely to the test above, equal power traces up to n force equal
    // polynomials (Newton's identities), checked over the whole census.
    let census = Census::default();
    for n in 1..=7 {
        let table = census.table(n, MatrixKind::Adjacency).unwrap();
        let mut by_traces = std::collections::HashMap::new();
        for e in &table.entries {
            let t = trace_powers(&e.graph, n);
            if let Some(p) = by_traces.insert(t, e.charpoly.clone()) {
                assert_eq!(p, e.charpoly);
            }
        }
    }
}

#[test]
fn per_graph_checks_over_census() {
    let census = Census::default();
    for n in 1..=8 {
        for e in census
            .table(n, MatrixKind::Adjacency)
            .unwrap()
            .entries
            .iter()
        {
            let g = &e.graph;
            assert_eq!(triangle_count(g), triangle_count_enumerated(g));
            if let Some(&x1) = g.pendant_vertices().first() {
                assert_eq!(charpoly_pendant_recurrence(g, x1).unwrap(), e.charpoly);
            }
        }
    }
}

#[test]
fn smith_graphs_in_census() {
    let mut expected: Vec<Graph> = (3..=8)
        .map(|n| make_family(&Family::Cycle { n }).unwrap())
        .collect();
    expected.extend((4..=7).map(|n| make_family(&Family::SmithD { n }).unwrap()));
    expected.push(make_family(&Family::SmithE6).unwrap());
    expected.push(make_family(&Family::SmithE7).unwrap());
    let census = Census::default();
    let mut found = Vec::new();
    for n in 1..=8 {
        for g in census.enumerate_graphs(n, true).unwrap() {
            if is_smith(&g).unwrap() {
                found.push(g);
            }
        }
    }
    assert_eq!(found.len(), expected.len());
    for h in &expected {
        assert!(found.iter().any(|g| is_isomorphic(g, h).unwrap()), "{h}");
    }
}

#[test]
fn starlike_trees_signless_ds() {
    // Among connected graphs every starlike tree with a vertex of degree at
    // least 4 is determined by its signless Laplacian spectrum. Over all
    // graphs there is one exception up to order 8: T(1,2,2,2) shares its
    // polynomial with (K3 with a pendant at each vertex) + K2.
    let census = Census::default();
    let exception = Graph::from_graph6("G?CaC[").unwrap();
    let mate = Graph::from_graph6("G?CaKK").unwrap();
    assert!(is_isomorphic(
        &exception,
        &make_family(&Family::Starlike {
            branches: vec![1, 2, 2, 2]
        })
        .unwrap()
    )
    .unwrap());
    let mut checked = 0;
    for n in 5..=8 {
        for g in census.enumerate_graphs(n, true).unwrap() {
            let deg = g.degrees();
            let starlike = g.is_tree() && deg.iter().filter(|&&d| d > 2).count() == 1;
            if starlike && g.max_degree() >= 4 {
                checked += 1;
                assert!(
                    census
                        .ds_check(&g, MatrixKind::SignlessLaplacian, true)
                        .unwrap()
                        .is_ds(),
                    "{g}"
                );
                let all = census
                    .ds_check(&g, MatrixKind::SignlessLaplacian, false)
                    .unwrap();
                if g == exception {
                    assert_eq!(all, DsVerdict::Mates(vec![mate.clone()]));
                    assert!(!mate.is_connected());
                } else {
                    assert!(all.is_ds(), "{g}");
                }
            }
        }
    }
    assert!(checked > 10);
}

#[test]
fn signless_mates_have_cospectral_line_graphs() {
    let census = Census::default();
    for n in 2..=7 {
        let table = census.table(n, MatrixKind::SignlessLaplacian).unwrap();
        for class in table.nontrivial_classes(false) {
            for (i, a) in class.iter().enumerate() {
                for b in &class[i + 1..] {
                    if a.graph.size() == b.graph.size() {
                        let la = line_graph_simple(&a.graph);
                        let lb = line_graph_simple(&b.graph);
                        assert_eq!(
                            charpoly(&la, MatrixKind::Adjacency).unwrap(),
                            charpoly(&lb, MatrixKind::Adjacency).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn kites_never_share_a_class() {
    let census = Census::default();
    for n in 2..=8 {
        let r = census.connectivity_filter_report(n).unwrap();
        assert_eq!(r.classes_with_kite, 0, "n = {n}");
    }
}
