use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;

fn chain(edges: usize) -> RootedForest {
    RootedForest::from_parents((0..=edges).map(|i| i.checked_sub(1)).collect()).unwrap()
}

#[test]
fn edit_paths_split_at_lca() {
    let t: Cotree = "(x 0 1)".parse().unwrap();
    let s = EditSet::from_pairs([(0, 1)]).unwrap();
    let cover = edit_paths(&t, &s).unwrap();
    assert_eq!(cover.len(), 2);
    assert!(cover.paths().iter().all(|p| p.edge_count() == 1 && p.top() == t.root()));
    assert!(edit_paths(&t, &EditSet::new()).unwrap().is_empty());
}

#[test]
fn edit_path_halves_partition_leaf_paths() {
    let t: Cotree = "(+ (x 0 (+ 1 2)) (x 3 4) 5)".parse().unwrap();
    let s = EditSet::from_pairs([(1, 3), (0, 2), (4, 5)]).unwrap();
    let cover = edit_paths(&t, &s).unwrap();
    assert_eq!(cover.len(), 6);
    for (i, (x, y)) in s.iter().enumerate() {
        let (px, py) = (&cover.paths()[2 * i], &cover.paths()[2 * i + 1]);
        assert_eq!(px.top(), py.top());
        assert_eq!(px.top(), t.lca_of_vertices(x, y));
        assert_eq!(px.bottom(), t.leaf(x));
        assert_eq!(py.bottom(), t.leaf(y));
        assert_eq!(px.edge_count() + py.edge_count(), t.leaf_depth(x) + t.leaf_depth(y) - 2 * t.depth(px.top()));
    }
}

#[test]
fn full_path_is_sparse() {
    let tree = chain(8);
    let cover = PathCover::new(vec![DescendingPath::new((0..=8).collect())]);
    let w = find_c_sparse(&tree, &cover, 2).unwrap().unwrap();
    assert_eq!(w.intersect_count, 1);
    assert_eq!(w.path.edge_count(), 2);
    assert_eq!(w.start, 0);
    let w = find_c_sparse(&tree, &cover, 8).unwrap().unwrap();
    assert_eq!(w.path.edge_count(), 8);
    assert!(find_c_sparse(&tree, &cover, 9).unwrap().is_none());
}

#[test]
fn multiplicity_counts() {
    let tree = chain(1);
    let edge = DescendingPath::new(vec![0, 1]);
    let cover = PathCover::new(vec![edge; 5]);
    assert!(find_c_sparse(&tree, &cover, 2).unwrap().is_none());
}

#[test]
fn counterexample_sizes() {
    assert_eq!(counterexample_tree(8).unwrap().0.node_count(), 39);
    assert_eq!(counterexample_tree(8).unwrap().0.edge_count(), 38);
    assert_eq!(counterexample_tree(2).unwrap().0.node_count(), 5);
    assert!(matches!(counterexample_tree(6), Err(Error::NotPowerOfTwo(6))));
    assert!(counterexample_tree(1).is_err());
    let (tree, cover) = counterexample_tree(8).unwrap();
    cover.check_covering(&tree).unwrap();
    assert!(find_c_sparse(&tree, &cover, 3).unwrap().is_none());
}

#[test]
fn restriction_keeps_prefixes() {
    let tree = chain(4).subforest(|u| u <= 2);
    let cover = PathCover::new(vec![DescendingPath::new(vec![0, 1, 2, 3, 4]), DescendingPath::new(vec![3, 4])]);
    let r = cover.restrict_to(&tree);
    assert_eq!(r.paths(), &[DescendingPath::new(vec![0, 1, 2])]);
}

#[test]
fn lemma_reports() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 1..=6 {
        for c in 2..=3 {
            let (tree, cover) = random_path_instance(&mut rng, k, c, k);
            let r = check_pathcase(&tree, &cover, c).unwrap();
            assert!(r.hypothesis_met && r.consistent(), "{r:?}");
            let (forest, cover) = random_forest_instance(&mut rng, k, c, 0);
            let r = check_forest(&forest, &cover, c).unwrap();
            assert!(r.hypothesis_met && r.consistent(), "{r:?}");
        }
    }
    let short = chain(3);
    let cover = PathCover::new(vec![DescendingPath::new(vec![0, 1, 2, 3])]);
    assert!(!check_pathcase(&short, &cover, 2).unwrap().hypothesis_met);
    let partial = PathCover::new(vec![DescendingPath::new(vec![0, 1])]);
    assert!(matches!(check_pathcase(&short, &partial, 2), Err(Error::NotCovering { .. })));
}
