//! End-to-end checks through the public API.

use cokernel::driver::{
    enumerate_optima, gen_planted, kernelize, optimum_capped, random_graph, replay_trace, rng_from_seed,
    verify_equivalence, Instance, KernelConfig, R4Mode, Verdict,
};
use cokernel::graph::{read_instance_text, write_instance_text};
use cokernel::rules::{apply_rule, RuleKind};
use cokernel::{EditSet, Graph};
use rand::Rng;

#[test]
fn planted_instances_end_to_end() {
    for seed in 0..40 {
        let n = 6 + (seed % 7) as usize;
        let k = (seed % 4) as usize;
        let (inst, planted) = gen_planted(n, k, seed).unwrap();
        let text = write_instance_text(&inst.graph, inst.k);
        let (g, k2) = read_instance_text(&text).unwrap();
        assert_eq!((g.clone(), k2), (inst.graph.clone(), inst.k));

        let res = kernelize(&inst, &KernelConfig::default()).unwrap();
        assert_eq!(replay_trace(&inst, &res.trace).unwrap(), res.kernel);
        match res.verdict {
            Verdict::Yes { edits } => {
                assert!(edits.len() <= planted.len());
                assert!(g.edit(&edits).unwrap().is_cograph());
            }
            other => panic!("planted edits certify YES, got {other:?}"),
        }
    }
}

#[test]
fn off_mode_without_brute_force_reaches_a_fixpoint() {
    let config = KernelConfig { r4: R4Mode::Off, allow_brute: false, size_check: false, ..KernelConfig::default() };
    let mut rng = rng_from_seed(17);
    for _ in 0..60 {
        let n = rng.gen_range(1..=9);
        let k = rng.gen_range(0..=3);
        let g = random_graph(&mut rng, n, 0.5);
        let inst = Instance::new(g, k);
        let res = kernelize(&inst, &config).unwrap();
        let Verdict::Reduced { instance } = &res.verdict else {
            panic!("expected REDUCED, got {:?}", res.verdict);
        };
        for kind in [RuleKind::R1, RuleKind::R2, RuleKind::R3] {
            assert!(apply_rule(kind, &instance.graph, instance.k).is_none(), "{kind:?} still applies");
        }
        assert!(!res.warnings.is_empty());
        assert!(verify_equivalence(&inst, instance).unwrap());
    }
}

#[test]
fn kernel_result_json_shape() {
    let inst = Instance::new(Graph::path(4), 1);
    let res = kernelize(&inst, &KernelConfig::default()).unwrap();
    let v = serde_json::to_value(&res).unwrap();
    assert_eq!(v["verdict"]["verdict"], "yes");
    assert_eq!(v["verdict"]["edits"].as_array().unwrap().len(), 1);
    assert_eq!(v["kernel"]["n"], 4);
    assert!(v["trace"].as_array().unwrap().is_empty());

    let inst = Instance::new(Graph::cycle(5), 1);
    let v = serde_json::to_value(kernelize(&inst, &KernelConfig::default()).unwrap()).unwrap();
    assert_eq!(v["verdict"]["verdict"], "no");
    assert_eq!(v["verdict"]["why"]["reason"], "brute_force");
}

#[test]
fn optimum_matches_on_disjoint_unions() {
    // two C5s need two edits each
    let mut edges = Graph::cycle(5).edges();
    edges.extend(Graph::cycle(5).edges().into_iter().map(|(u, v)| (u + 5, v + 5)));
    let g = Graph::from_edges(10, edges).unwrap();
    assert_eq!(optimum_capped(&g, 5).unwrap(), 4);
    assert_eq!(optimum_capped(&g, 2).unwrap(), 3);
    let c5 = enumerate_optima(&Graph::cycle(5)).unwrap();
    assert_eq!(c5.opt, 2);
    assert!(c5.solutions.iter().all(|s: &EditSet| Graph::cycle(5).edit(s).unwrap().is_cograph()));
}
