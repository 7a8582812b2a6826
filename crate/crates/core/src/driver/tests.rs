use rand::Rng;

use super::*;
use crate::graph::VertexSet;
use crate::rules::is_reduced_ours;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// All optimal edit sets by checking every subset of pairs.
fn naive_optima(g: &Graph) -> (usize, Vec<EditSet>) {
    let all = pairs(g.n());
    let mut best: Option<(usize, Vec<EditSet>)> = None;
    for mask in 0u32..1 << all.len() {
        let s: EditSet = all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        if !g.edit(&s).unwrap().is_cograph() {
            continue;
        }
        match &mut best {
            Some((opt, sols)) if s.len() == *opt => sols.push(s),
            Some((opt, _)) if s.len() > *opt => {}
            _ => best = Some((s.len(), vec![s])),
        }
    }
    let (opt, mut sols) = best.unwrap();
    sols.sort();
    (opt, sols)
}

fn sound(g: &Graph, k: usize, s: &EditSet) -> bool {
    s.len() <= k && g.edit(s).unwrap().is_cograph()
}

#[test]
fn brute_force_examples() {
    let p4 = Graph::path(4);
    let s = brute_force_solve(&Instance::new(p4.clone(), 1)).unwrap();
    assert_eq!(s.len(), 1);
    assert!(sound(&p4, 1, &s));

    let c5 = Graph::cycle(5);
    assert!(brute_force_solve(&Instance::new(c5.clone(), 1)).is_none());
    let s = brute_force_solve(&Instance::new(c5.clone(), 2)).unwrap();
    assert!(sound(&c5, 2, &s));

    let k4 = Graph::complete(4);
    assert_eq!(brute_force_solve(&Instance::new(k4, 0)), Some(EditSet::new()));
}

#[test]
fn enumerate_optima_examples() {
    for g in [Graph::path(4), Graph::cycle(5), Graph::complete(3), Graph::path(5)] {
        let report = enumerate_optima(&g).unwrap();
        let (opt, sols) = naive_optima(&g);
        assert_eq!(report.opt, opt);
        let mut got = report.solutions.clone();
        got.sort();
        assert_eq!(got, sols);
    }
    assert_eq!(enumerate_optima(&Graph::cycle(5)).unwrap().opt, 2);
    assert_eq!(enumerate_optima(&Graph::complete(3)).unwrap().solutions, vec![EditSet::new()]);
}

#[test]
fn oracles_agree() {
    let mut rng = rng_from_seed(3);
    for _ in 0..150 {
        let n = rng.gen_range(1..=7);
        let g = random_graph(&mut rng, n, 0.5);
        let opt = enumerate_optima(&g).unwrap().opt;
        for k in 0..=3 {
            let inst = Instance::new(g.clone(), k);
            let brute = brute_force_solve(&inst);
            assert_eq!(brute.is_some(), opt <= k, "{g:?} k={k}");
            if let Some(s) = brute {
                assert!(sound(&g, k, &s));
            }
            assert_eq!(optimum_capped(&g, k).unwrap(), opt.min(k + 1));
        }
        assert_eq!(minimum_edit(&g, 6).map(|s| s.len()), Some(opt).filter(|&o| o <= 6));
    }
}

#[test]
fn forbidden_pairs_are_respected() {
    let p4 = Graph::path(4);
    let forbidden: EditSet = [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)].into_iter().collect();
    // only 0-3 is left, and adding it gives C4, a cograph
    let s = brute_force_avoiding(&p4, 1, &forbidden).unwrap();
    assert_eq!(s, [(0, 3)].into_iter().collect());
    let all: EditSet = pairs(4).into_iter().collect();
    assert!(brute_force_avoiding(&p4, 3, &all).is_none());
}

#[test]
fn verify_equivalence_examples() {
    let p4 = Graph::path(4);
    assert!(!verify_equivalence(&Instance::new(p4.clone(), 0), &Instance::new(p4.clone(), 1)).unwrap());
    assert!(verify_equivalence(&Instance::new(p4.clone(), 1), &Instance::new(p4, 1)).unwrap());
}

#[test]
fn enumeration_guard() {
    assert!(matches!(enumerate_optima(&Graph::new(40)), Err(Error::TooLarge(_))));
}

#[test]
fn cograph_is_yes_with_no_edits() {
    for seed in 0..20 {
        let (inst, planted) = gen_planted(12, 0, seed).unwrap();
        assert!(planted.is_empty() && inst.graph.is_cograph());
        let res = kernelize(&inst, &KernelConfig::default()).unwrap();
        assert_eq!(res.verdict, Verdict::Yes { edits: EditSet::new() });
        assert_eq!(res.kernel.graph.n(), 0);
    }
}

#[test]
fn planted_noise_is_a_certificate() {
    for seed in 0..30 {
        let (inst, planted) = gen_planted(8, 2, seed).unwrap();
        assert_eq!(planted.len(), 2);
        assert!(inst.graph.edit(&planted).unwrap().is_cograph());
        assert!(optimum_capped(&inst.graph, 2).unwrap() <= 2);
    }
}

#[test]
fn p4_with_twin_module() {
    // P4 on 0..3, plus a component where 4..=9 are twins seen by 10 and 11
    let mut g = Graph::path(4);
    let mut edges = g.edges();
    for v in 4..=9 {
        edges.push((v, 10));
        edges.push((v, 11));
    }
    edges.push((11, 12));
    g = Graph::from_edges(13, edges).unwrap();
    let inst = Instance::new(g.clone(), 1);
    let res = kernelize(&inst, &KernelConfig::default()).unwrap();
    assert!(res.trace.iter().any(|a| matches!(a.rule, RuleKind::R1 | RuleKind::R2)));
    let opt = enumerate_optima(&g).unwrap().opt;
    match &res.verdict {
        Verdict::Yes { edits } => assert!(opt <= 1 && sound(&g, 1, edits)),
        Verdict::No { .. } => assert!(opt > 1),
        Verdict::Reduced { .. } => panic!("brute force should settle k = 1"),
    }
}

#[test]
fn kernelize_preserves_answers() {
    let mut rng = rng_from_seed(5);
    for _ in 0..120 {
        let n = rng.gen_range(1..=9);
        let k = rng.gen_range(0..=3);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let inst = Instance::new(g.clone(), k);
        let res = kernelize(&inst, &KernelConfig::default()).unwrap();
        let yes = optimum_capped(&g, k).unwrap() <= k;
        match &res.verdict {
            Verdict::Yes { edits } => assert!(yes && sound(&g, k, edits)),
            Verdict::No { .. } => assert!(!yes),
            Verdict::Reduced { .. } => panic!("unexpected REDUCED"),
        }
        assert_eq!(replay_trace(&inst, &res.trace).unwrap(), res.kernel);
    }
}

#[test]
fn reduced_verdict_without_brute_force() {
    let config = KernelConfig { allow_brute: false, ..KernelConfig::default() };
    let inst = Instance::new(Graph::cycle(5), 1);
    let res = kernelize(&inst, &config).unwrap();
    // C5 is prime, so nothing applies; 5 vertices fit the bound for k = 1
    assert!(res.trace.is_empty());
    assert_eq!(res.verdict, Verdict::Reduced { instance: inst.clone() });

    let tight = KernelConfig { size_coefficient: 1, ..config.clone() };
    let res = kernelize(&inst, &tight).unwrap();
    assert!(matches!(res.verdict, Verdict::No { why: NoReason::SizeBound }));

    let assisted = KernelConfig { r4: R4Mode::Assisted, ..tight };
    let res = kernelize(&inst, &assisted).unwrap();
    assert!(matches!(res.verdict, Verdict::Reduced { .. }));
    assert!(!res.warnings.is_empty());
}

#[test]
fn size_bound_values() {
    assert_eq!(size_bound(409, 0), 0.0);
    assert_eq!(size_bound(409, 1), 818.0);
    assert_eq!(size_bound(1, 4), 16.0 * 4.0);
}

#[test]
fn iteration_cap_reports_trace() {
    let inst = Instance::new(Graph::path(4), 1);
    // the isolated vertex is a comodule, so R1 must fire
    let inst2 = Instance::new(Graph::from_edges(5, Graph::path(4).edges()).unwrap(), 1);
    let config = KernelConfig { iteration_cap: Some(0), ..KernelConfig::default() };
    assert!(kernelize(&inst, &config).is_ok());
    match kernelize(&inst2, &config) {
        Err(Error::IterationCap { cap: 0, trace }) => assert!(trace.is_empty()),
        other => panic!("{other:?}"),
    }
}

#[test]
fn random_cotrees_are_canonical() {
    let mut rng = rng_from_seed(9);
    for n in 1..40 {
        let t = random_cotree(&mut rng, n);
        assert!(t.is_canonical());
        assert_eq!(t.n(), n);
        assert!(t.realize().is_cograph());
    }
}

#[test]
fn planted_nested_matches_extraction() {
    for seed in 0..4 {
        let p = gen_planted_nested(1, 2, 60, seed).unwrap();
        let g = &p.instance.graph;
        p.module.validate(g, 2).unwrap();
        assert_eq!(p.module.forced_pairs(g), p.planted);
        assert!(is_reduced_ours(g, 2), "seed {seed}");
        let ext = crate::sparsepath::extract_nested_module(g, &p.planted, 2).unwrap().unwrap();
        assert_eq!(ext.module, p.module);
        assert!(ext.non_free.is_empty() || ext.non_free.len() <= 2 * ext.ell);

        let config = KernelConfig { r4: R4Mode::Assisted, ..KernelConfig::default() };
        let res = kernelize(&p.instance, &config).unwrap();
        assert_eq!(res.trace[0].rule, RuleKind::R4);
        assert_eq!(res.trace[0].edits, p.planted);
        assert!(matches!(res.verdict, Verdict::Yes { .. }));
    }
}

#[test]
fn planted_nested_rejects_small_scale() {
    assert!(gen_planted_nested(1, 2, 54, 0).is_err());
    assert!(gen_planted_nested(1, 2, 55, 0).is_ok());
    assert!(gen_planted_nested(0, 2, 100, 0).is_err());
}

#[test]
fn compact_nested_modules() {
    for seed in 0..5 {
        let p = gen_nested_compact(1, 2, 1, seed).unwrap();
        let g = &p.instance.graph;
        p.module.validate(g, 2).unwrap();
        assert_eq!(p.module.forced_pairs(g), p.planted);
        // every optimal solution contains the forced pair
        let report = enumerate_optima(g).unwrap();
        assert_eq!(report.opt, 1);
        assert!(report.solutions.iter().all(|s| p.planted.is_subset(s)));
    }
    let p = gen_nested_compact(2, 1, 2, 0).unwrap();
    p.module.validate(&p.instance.graph, 1).unwrap();
    assert!(matches!(rule4_apply(&p.instance.graph, 1, &p.module).unwrap(), Rule4Outcome::No { .. }));
    let union: VertexSet = p.module.parts().iter().fold(VertexSet::new(), |acc, s| acc.union(s));
    assert_eq!(union.len(), p.instance.graph.n());
}
