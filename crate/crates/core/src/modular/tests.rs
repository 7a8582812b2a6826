use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (1u32..(1 << n)).map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}

fn brute_module(g: &Graph, x: &VertexSet) -> bool {
    (0..g.n())
        .filter(|y| !x.contains(*y))
        .all(|y| x.iter().all(|v| g.has_edge(y, v)) || x.iter().all(|v| !g.has_edge(y, v)))
}

/// Smallest `T` inside the cut making `x` a module, by increasing size.
fn brute_cost(g: &Graph, x: &VertexSet) -> usize {
    let cut: Vec<(usize, usize)> = g.cut(x).unwrap().iter().collect();
    for size in 0..=cut.len() {
        let mut found = false;
        for_each_combination(cut.len(), size, &mut |idx| {
            if !found {
                let t = EditSet::from_pairs(idx.iter().map(|&i| cut[i])).unwrap();
                found = brute_module(&g.edit(&t).unwrap(), x);
            }
        });
        if found {
            return size;
        }
    }
    unreachable!("editing the whole cut side always works")
}

fn for_each_combination(n: usize, r: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == r {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, r, cur, f);
            cur.pop();
        }
    }
    rec(0, n, r, &mut Vec::new(), f)
}

#[test]
fn module_examples() {
    let p4 = Graph::path(4);
    assert!(is_module(&p4, &VertexSet::singleton(2)));
    assert!(!is_module(&p4, &[1, 2].into()));
    let twins = graph(4, &[(0, 2), (1, 2), (2, 3)]);
    assert!(is_module(&twins, &[0, 1].into()));
}

#[test]
fn module_cost_examples() {
    let p4 = Graph::path(4);
    let r = module_cost(&p4, &[1, 2].into()).unwrap();
    assert_eq!(r.cost, 2);
    assert_eq!(brute_cost(&p4, &[1, 2].into()), 2);
    assert!(is_module(&p4.edit(&r.repair).unwrap(), &[1, 2].into()));
    assert!(!is_t_module(&p4, &[1, 2].into(), 1).unwrap());
    assert!(is_t_module(&p4, &[1, 2].into(), 2).unwrap());

    // a triangle seen partially by two outsiders: two edits make it a module
    let g = graph(6, &[(0, 1), (0, 2), (1, 2), (3, 0), (4, 0), (4, 1), (5, 0), (5, 1), (5, 2)]);
    let x: VertexSet = [0, 1, 2].into();
    let r = module_cost(&g, &x).unwrap();
    assert_eq!(r.cost, 2);
    assert_eq!(brute_cost(&g, &x), 2);
    assert!(r.repair.is_subset(&g.cut(&x).unwrap()));
}

#[test]
fn module_cost_matches_brute_force_small() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(2..=6);
        let g = random_graph(&mut rng, n, 0.5);
        for x in subsets(n) {
            assert_eq!(module_cost(&g, &x).unwrap().cost, brute_cost(&g, &x), "{g:?} {x:?}");
        }
    }
}

#[test]
fn certified_agrees_with_cost() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let n = rng.gen_range(4..=9);
        let g = random_graph(&mut rng, n, 0.5);
        let x: VertexSet = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
        let (k, t) = (rng.gen_range(0..3), rng.gen_range(0..3));
        if x.len() < k + t + 1 {
            assert!(certified_t_module(&g, &x, t, k).is_err());
            continue;
        }
        let cost = module_cost(&g, &x).unwrap().cost;
        let cert = certified_t_module(&g, &x, t, k).unwrap();
        assert_eq!(cert.is_some(), cost <= t);
        if let Some(rep) = cert {
            assert!(rep.len() <= t);
            assert!(is_module(&g.edit(&rep).unwrap(), &x));
        }
    }
}

#[test]
fn comodule_examples() {
    let g = graph(3, &[(0, 1)]);
    let c = proper_comodules(&g);
    assert_eq!(c.len(), 2);
    assert_eq!(c[0].comodule, [0, 1].into());
    assert_eq!(c[1].comodule, [2].into());
    assert!(c.iter().all(|r| r.kind == ComoduleKind::Component));
    assert!(proper_comodules(&Graph::path(4)).is_empty());
    let c4 = Graph::cycle(4);
    let c = proper_comodules(&c4);
    let sets: Vec<VertexSet> = c.iter().map(|r| r.comodule.clone()).collect();
    assert_eq!(sets, vec![[0, 2].into(), [1, 3].into()]);
    assert!(c.iter().all(|r| r.kind == ComoduleKind::CoComponent));
}

#[test]
fn rule3_examples() {
    let g = graph(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]);
    assert!(rule3_candidates(&g).contains(&[0, 1].into()));
    let k4 = Graph::complete(4);
    let c = rule3_candidates(&k4);
    for u in 0..4 {
        for v in u + 1..4 {
            assert!(c.contains(&[u, v].into()));
        }
    }
    assert!(rule3_candidates(&Graph::path(4)).is_empty());
}

fn check_decomposition(g: &Graph) {
    let md = modular_decomposition(g);
    assert_eq!(md.root().vertices, VertexSet::full(g.n()));
    for node in &md.nodes {
        assert!(is_module(g, &node.vertices));
        if node.kind == MdKind::Leaf {
            assert_eq!(node.vertices.len(), 1);
            continue;
        }
        let union: VertexSet = node.children.iter().flat_map(|&c| md.node(c).vertices.iter()).collect();
        assert_eq!(union, node.vertices);
        assert_eq!(union.len(), node.children.iter().map(|&c| md.node(c).vertices.len()).sum::<usize>());
    }
}

fn brute_rule3(g: &Graph) -> bool {
    subsets(g.n()).any(|x| {
        x.len() < g.n()
            && brute_module(g, &x)
            && g.has_edge_within(&x)
            && has_outgoing_edge(g, &x)
            && !is_comodule(g, &x)
    })
}

#[test]
fn rule3_candidates_are_complete() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for round in 0..600 {
        let n = rng.gen_range(2..=9);
        let p = [0.2, 0.5, 0.8][round % 3];
        let g = random_graph(&mut rng, n, p);
        check_decomposition(&g);
        let cands = rule3_candidates(&g);
        assert!(cands.iter().all(|x| is_rule3_module(&g, x)));
        assert_eq!(!cands.is_empty(), brute_rule3(&g), "{g:?}");
    }
}

#[test]
fn independent_modules_are_maximal() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..300 {
        let n = rng.gen_range(2..=9);
        let g = random_graph(&mut rng, n, 0.4);
        let found = independent_modules(&g);
        let largest = found.iter().map(VertexSet::len).max().unwrap_or(1);
        let brute = subsets(n).filter(|x| g.is_independent(x) && brute_module(&g, x)).map(|x| x.len()).max().unwrap();
        assert_eq!(largest.max(1), brute, "{g:?}");
        assert!(found.iter().all(|x| g.is_independent(x) && is_module(&g, x)));
    }
}

proptest! {
    #[test]
    fn repair_makes_module(seed in any::<u64>(), n in 2usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.5);
        let x: VertexSet = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        prop_assume!(!x.is_empty());
        let r = module_cost(&g, &x).unwrap();
        prop_assert!(is_module(&g.edit(&r.repair).unwrap(), &x));
        prop_assert_eq!(r.cost == 0, is_module(&g, &x));
    }
}
