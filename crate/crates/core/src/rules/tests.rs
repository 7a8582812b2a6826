use super::*;

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

/// `P4` on `0..4` joined to `P4` on `4..8`.
fn p4_join_p4() -> Graph {
    let mut g = graph(8, &[(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)]);
    for u in 0..4 {
        for v in 4..8 {
            g.add_edge(u, v);
        }
    }
    g
}

#[test]
fn rule1_examples() {
    let r = rule1_comodule(&Graph::complete(5), 2).unwrap();
    assert_eq!(r.graph.n(), 0);
    assert_eq!(r.k, 2);

    let g = graph(6, &[(0, 1), (1, 2), (2, 3), (4, 5)]);
    let r = rule1_comodule(&g, 1).unwrap();
    assert_eq!(r.application.removed, vec![4, 5]);
    assert_eq!(r.graph, Graph::path(4));

    assert!(rule1_comodule(&Graph::path(4), 3).is_none());
}

#[test]
fn rule2_examples() {
    let star = graph(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
    let r = rule2_module_reduce(&star, 1).unwrap();
    assert_eq!(r.application.removed, vec![3, 4, 5]);
    assert_eq!(r.graph, graph(3, &[(0, 1), (0, 2)]));
    assert!(rule2_module_reduce(&star, 4).is_none());

    let empty = Graph::new(5);
    let r = rule2_module_reduce(&empty, 2).unwrap();
    assert_eq!(r.application.witness, Witness::IndependentModule { set: VertexSet::full(5) });
    assert_eq!(r.graph.n(), 3);
}

#[test]
fn rule3_examples() {
    let g = graph(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]);
    let r = rule3_module_extract(&g, 1).unwrap();
    assert_eq!(r.application.witness, Witness::Module { set: [0, 1].into() });
    assert_eq!(r.application.added, vec![4, 5]);
    assert_eq!(r.graph, graph(6, &[(0, 2), (1, 2), (2, 3), (4, 5)]));
    // the result is a star plus an edge, itself a cograph, so R1 clears it
    let r1 = rule1_comodule(&r.graph, 1).unwrap();
    assert!(r1.application.removed.ends_with(&[4, 5]));
    assert_eq!(r1.graph.n(), 0);
    // with a P4 left behind, only the copy goes
    let g = graph(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5)]);
    let r = rule3_module_extract(&g, 1).unwrap();
    assert_eq!(r.application.added, vec![6, 7]);
    let r1 = rule1_comodule(&r.graph, 1).unwrap();
    assert_eq!(r1.application.removed, vec![6, 7]);
    assert!(rule3_module_extract(&Graph::path(4), 1).is_none());
}

#[test]
fn guillemot_examples() {
    let r = rg2(&Graph::complete(4), 0).unwrap();
    assert_eq!(r.graph, graph(4, &[(0, 1), (2, 3)]));

    let g = graph(7, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6)]);
    let r = rg1(&g, 0).unwrap();
    assert_eq!(r.application.removed, vec![0, 1, 2]);
    assert_eq!(r.graph, Graph::path(4));

    // P4 plus a pendant twin: {0, 4} is a module hanging off vertex 1
    let g = graph(5, &[(0, 1), (1, 2), (2, 3), (4, 1)]);
    assert!(rg3(&g, 0).is_some());
    assert!(rg3(&g, 1).is_none());
}

#[test]
fn join_of_two_p4s_separates_the_rule_sets() {
    let g = p4_join_p4();
    assert!(is_reduced_ours(&g, 1));
    assert!(!is_reduced_guillemot(&g, 1));
    assert!(rg2(&g, 1).is_some());
}

#[test]
fn applications_replay() {
    let g = graph(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5)]);
    for kind in RuleKind::ALL {
        for k in 0..3 {
            if let Some(r) = apply_rule(kind, &g, k) {
                assert_eq!(r.application.replay(&g, k).unwrap(), (r.graph.clone(), r.k));
                assert_eq!(r.application.rule, kind);
            }
        }
    }
}

#[test]
fn nested_detection_needs_room() {
    assert!(detect_nested_t_module(&Graph::path(4), 0, DEFAULT_SEARCH_CAP).found.is_none());
    assert!(detect_nested_t_module(&Graph::new(0), 0, DEFAULT_SEARCH_CAP).found.is_none());
}

#[test]
fn reconstruct_side_of_twins_under_a_join() {
    // (x (+ 0 1) 2): 0 and 2 see each other, 1 sees 2
    let g = graph(3, &[(0, 2), (1, 2)]);
    assert_eq!(reconstruct_side(&g, 0, 2), VertexSet::full(3));
    assert_eq!(reconstruct_side(&g, 0, 1), [0, 1].into());
}

#[test]
fn application_json_shape() {
    let g = graph(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]);
    let r = rule3_module_extract(&g, 1).unwrap();
    let v = serde_json::to_value(&r.application).unwrap();
    for key in ["rule", "witness", "edits", "removed", "added", "k_delta"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["rule"], "R3");
    assert_eq!(v["edits"], serde_json::json!([[0, 1]]));
}
