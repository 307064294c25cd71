//! Graph solvers against exhaustive subset enumeration, including the
//! worked vertex-cover gadget values and the two formulations of
//! feedback-arc-set top membership.

mod common;

use std::collections::BTreeSet;

use ecx_core::gen;
use ecx_core::graphs::{
    alpha, backward_arcs, decide_graph_control, fas_top_membership, independence,
    min_feedback_arc_set, min_vertex_cover, vc_membership, Digraph, GraphControlInstance,
    Qbf2Formula, QLit,
};
use ecx_core::reduce::{karp_3sat_to_vc, qsat2_to_vcms};
use ecx_core::Limits;

fn limits() -> Limits {
    Limits::default()
}

#[test]
fn branch_and_bound_equals_subset_enumeration() {
    for seed in 0..200 {
        let mut rng = gen::rng_from_seed(seed);
        let n = 2 + (seed % 7) as usize; // up to 8 vertices
        let g = gen::graph(&mut rng, n, 0.4 + (seed % 3) as f64 * 0.2);
        let bb = min_vertex_cover(&g, &limits()).unwrap();
        assert_eq!(bb.size, common::min_vc_by_subsets(&g), "seed {seed}");
        for v in 0..n {
            assert_eq!(
                vc_membership(&g, v, &limits()).unwrap(),
                common::vc_membership_by_subsets(&g, v),
                "seed {seed} vertex {v}"
            );
        }
    }
}

#[test]
fn gallai_identity_alpha_plus_cover_equals_n() {
    for seed in 0..200 {
        let mut rng = gen::rng_from_seed(3000 + seed);
        let n = 1 + (seed % 8) as usize;
        let g = gen::graph(&mut rng, n, 0.5);
        let cover = min_vertex_cover(&g, &limits()).unwrap().size;
        let a = alpha(&g, &limits()).unwrap();
        assert_eq!(a + cover, n, "seed {seed}");
        let (a2, av) = independence(&g, 0, &limits()).unwrap();
        let (oracle_a, oracle_av) = common::independence_by_subsets(&g, 0);
        assert_eq!((a2, av), (oracle_a, oracle_av), "seed {seed}");
    }
}

#[test]
fn fas_ordering_form_equals_arc_subset_form() {
    for seed in 0..150 {
        let mut rng = gen::rng_from_seed(7000 + seed);
        let n = 2 + (seed % 5) as usize; // up to 6 vertices
        let d = gen::digraph(&mut rng, n, 0.6);
        if d.num_arcs() > 16 {
            continue;
        }
        let report = min_feedback_arc_set(&d, &limits()).unwrap();
        assert_eq!(report.size, common::min_fas_by_arc_subsets(&d), "seed {seed}");
        // the witness ordering's backward arcs form a feedback arc set
        let cut: BTreeSet<(usize, usize)> =
            backward_arcs(&d, &report.ordering).into_iter().collect();
        assert_eq!(cut.len() as u64, report.size);
        let residual =
            Digraph::new(d.n(), d.arcs().filter(|a| !cut.contains(a)).collect::<Vec<_>>())
                .unwrap();
        assert!(residual.is_acyclic());
        for v in 0..n {
            assert_eq!(
                fas_top_membership(&d, v, &limits()).unwrap(),
                common::fas_membership_by_arc_subsets(&d, v),
                "seed {seed} vertex {v}"
            );
        }
    }
}

#[test]
fn worked_h_gadget_cover_sizes() {
    // phi = (x1 v x1 v y1) & (!x1 v !y1 v !y1) & (!x1 v y1 v y1)
    let f = Qbf2Formula::new(
        1,
        vec![
            [QLit::x(0), QLit::x(0), QLit::y(0)],
            [QLit::nx(0), QLit::ny(0), QLit::ny(0)],
            [QLit::nx(0), QLit::y(0), QLit::y(0)],
        ],
    )
    .unwrap();
    let (n, m) = (1usize, 3usize);
    let (karp_graph, layout, _) = karp_3sat_to_vc(&f.matrix()).unwrap();
    assert_eq!(karp_graph.n(), 13);
    assert_eq!(min_vertex_cover(&karp_graph, &limits()).unwrap().size, 8);
    assert_eq!(layout.cover_target(), 2 * n + 2 * m);

    let (inst, _) = qsat2_to_vcms(&f).unwrap();
    let GraphControlInstance::Vcms {
        graph, deletable, target, ..
    } = &inst
    else {
        panic!("wrong kind")
    };
    // deleting the negated x1 vertex (setting x1 = 0): minimum cover has
    // size n + 3m = 10 and excludes the membership target
    let without_neg: BTreeSet<usize> = (0..graph.n()).filter(|&v| v != deletable[1]).collect();
    let (h_minus_neg, ids) = graph.induced(&without_neg);
    let t = ids.binary_search(target).unwrap();
    assert_eq!(min_vertex_cover(&h_minus_neg, &limits()).unwrap().size, n + 3 * m);
    assert!(!vc_membership(&h_minus_neg, t, &limits()).unwrap());
    // deleting the positive x1 vertex (setting x1 = 1): minimum cover has
    // size n + 3m + 1 and includes the target
    let without_pos: BTreeSet<usize> = (0..graph.n()).filter(|&v| v != deletable[0]).collect();
    let (h_minus_pos, ids) = graph.induced(&without_pos);
    let t = ids.binary_search(target).unwrap();
    assert_eq!(
        min_vertex_cover(&h_minus_pos, &limits()).unwrap().size,
        n + 3 * m + 1
    );
    assert!(vc_membership(&h_minus_pos, t, &limits()).unwrap());
    // the instance as a whole is a yes with witness {x1}
    let out = decide_graph_control(&inst, &limits()).unwrap();
    assert!(out.decision);
    assert_eq!(out.witness_vertices, Some(vec![deletable[0]]));
}

#[test]
fn graph_control_monotone_in_limit() {
    for kind in ["vcms", "vcma", "ismd", "fasms", "fasma", "fasmaa", "gnd"] {
        for seed in 0..12 {
            let mut rng = gen::rng_from_seed(9000 + seed);
            let base = gen::graph_control(&mut rng, kind, 5, 0).unwrap();
            let mut prev = false;
            for k in 0..3usize {
                let inst = with_limit(&base, k);
                let now = decide_graph_control(&inst, &limits()).unwrap().decision;
                assert!(!prev || now, "kind {kind} seed {seed} k {k}");
                prev = now;
            }
        }
    }
}

fn with_limit(inst: &GraphControlInstance, k: usize) -> GraphControlInstance {
    let mut out = inst.clone();
    match &mut out {
        GraphControlInstance::Vcms { limit, .. }
        | GraphControlInstance::Vcma { limit, .. }
        | GraphControlInstance::Ismd { limit, .. }
        | GraphControlInstance::Fasms { limit, .. }
        | GraphControlInstance::Fasma { limit, .. }
        | GraphControlInstance::Fasmaa { limit, .. }
        | GraphControlInstance::Gnd { limit, .. } => *limit = k,
    }
    out
}

#[test]
fn qsat2_decide_worked_example() {
    let f = Qbf2Formula::new(
        1,
        vec![
            [QLit::x(0), QLit::x(0), QLit::y(0)],
            [QLit::nx(0), QLit::ny(0), QLit::ny(0)],
            [QLit::nx(0), QLit::y(0), QLit::y(0)],
        ],
    )
    .unwrap();
    assert_eq!(
        ecx_core::graphs::qsat2_decide(&f, &limits()).unwrap(),
        Some(1),
        "true via x1 = 1"
    );
}
