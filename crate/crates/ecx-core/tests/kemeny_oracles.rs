//! Kemeny solvers against exhaustive permutation enumeration and the
//! metric structure of Kendall tau.

mod common;

use ecx_core::elections::{
    is_kemeny_winner, kemeny_score, kemeny_winners, kendall_tau, Election, Variant, Vote,
};
use ecx_core::gen;
use ecx_core::reduce::mcgarvey;
use ecx_core::graphs::Digraph;
use ecx_core::Limits;
use itertools::Itertools;
use proptest::prelude::*;

fn limits() -> Limits {
    Limits::default()
}

#[test]
fn dp_equals_permutation_enumeration_on_random_elections() {
    for seed in 0..120 {
        let mut rng = gen::rng_from_seed(seed);
        let m = 2 + (seed % 6) as usize; // up to 7 candidates
        let voters = 1 + (seed % 9) as usize;
        let e = gen::election(&mut rng, m, voters).unwrap();
        let (score, winners, consensus) = common::kemeny_by_permutations(&e);
        let out = kemeny_winners(&e, Variant::Kemeny, &limits()).unwrap();
        assert_eq!(out.score, score, "seed {seed}");
        assert_eq!(out.winners, winners, "seed {seed}");
        assert_eq!(out.consensus, consensus, "lex-smallest optimum, seed {seed}");
        for p in 0..m {
            assert_eq!(
                is_kemeny_winner(&e, Variant::Kemeny, p, &limits()).unwrap(),
                winners.contains(&p),
                "seed {seed} candidate {p}"
            );
        }
    }
}

#[test]
fn branch_and_bound_matches_dp_past_the_dp_route() {
    let mut tight = Limits::default();
    tight.order_dp_vertices = 2; // force branch and bound inside is_kemeny_winner
    for seed in 200..260 {
        let mut rng = gen::rng_from_seed(seed);
        let m = 3 + (seed % 5) as usize;
        let e = gen::election(&mut rng, m, 5).unwrap();
        let reference = kemeny_winners(&e, Variant::Kemeny, &limits()).unwrap();
        for p in 0..m {
            assert_eq!(
                is_kemeny_winner(&e, Variant::Kemeny, p, &tight).unwrap(),
                reference.winners.contains(&p),
                "seed {seed} candidate {p}"
            );
        }
    }
}

#[test]
fn kemeny_score_is_count_weighted_kendall_sum() {
    for seed in 0..40 {
        let mut rng = gen::rng_from_seed(1000 + seed);
        let m = 2 + (seed % 5) as usize;
        let e = gen::election(&mut rng, m, 6).unwrap();
        for consensus in (0..m).permutations(m).take(24) {
            let direct = kemeny_score(&e, &consensus).unwrap();
            let via_tau: u64 = e
                .votes()
                .iter()
                .map(|v| v.count * kendall_tau(v.ranking.order(), &consensus).unwrap())
                .sum();
            assert_eq!(direct, via_tau);
        }
    }
}

#[test]
fn mcgarvey_three_cycle_consensus_pays_the_backward_arc() {
    // a -> b -> c -> a
    let cycle = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
    let (e, _) = mcgarvey(&cycle).unwrap();
    let (optimal, winners, _) = common::kemeny_by_permutations(&e);
    // Every consensus breaks at least one arc; [a,b,c] is optimal and the
    // forced backward arc (c,a) costs its margin of 2 over the base.
    let score_abc = kemeny_score(&e, &[0, 1, 2]).unwrap();
    assert_eq!(score_abc, optimal);
    let acyclic_value: u64 = {
        // the same election minus the cost of the broken arc: what a
        // hypothetical arc-respecting order would pay
        score_abc - 2
    };
    // no consensus attains the acyclic value
    for perm in (0..3).permutations(3) {
        assert!(kemeny_score(&e, &perm).unwrap() > acyclic_value);
    }
    // symmetry: all three candidates win
    assert_eq!(winners, vec![0, 1, 2]);
    let out = kemeny_winners(&e, Variant::Kemeny, &limits()).unwrap();
    assert_eq!(out.winners, winners);
}

#[test]
fn mcgarvey_transitive_triangle_has_unique_winner() {
    // a -> b, b -> c, a -> c
    let dag = Digraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
    let (e, _) = mcgarvey(&dag).unwrap();
    let (score, winners, consensus) = common::kemeny_by_permutations(&e);
    assert_eq!(winners, vec![0]);
    assert_eq!(consensus, vec![0, 1, 2]);
    let out = kemeny_winners(&e, Variant::Kemeny, &limits()).unwrap();
    assert_eq!((out.score, out.winners), (score, winners));
}

#[test]
fn kemeny_prime_handles_partial_profiles() {
    // votes: 2 x (a>b), 1 x (c>a); enumerate optimum by hand
    let e = Election::new(
        3,
        vec![Vote::partial(2, vec![0, 1]), Vote::partial(1, vec![2, 0])],
    )
    .unwrap();
    let (score, winners, _) = common::kemeny_by_permutations(&e);
    assert_eq!(score, 0); // [2,0,1] satisfies everyone
    let out = kemeny_winners(&e, Variant::KemenyPrime, &limits()).unwrap();
    assert_eq!(out.score, score);
    assert_eq!(out.winners, winners);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Kendall tau is a metric on complete rankings (m <= 5).
    #[test]
    fn kendall_tau_metric_axioms(
        perm_seed in 0u64..5000,
        m in 2usize..=5,
    ) {
        let mut rng = gen::rng_from_seed(perm_seed);
        let e = gen::election(&mut rng, m, 3).unwrap();
        let r1 = e.votes()[0].ranking.order().to_vec();
        let r2 = e.votes()[1].ranking.order().to_vec();
        let r3 = e.votes()[2].ranking.order().to_vec();
        let d12 = kendall_tau(&r1, &r2).unwrap();
        let d21 = kendall_tau(&r2, &r1).unwrap();
        prop_assert_eq!(d12, d21);
        prop_assert_eq!(kendall_tau(&r1, &r1).unwrap(), 0);
        prop_assert_eq!(d12 == 0, r1 == r2);
        let d13 = kendall_tau(&r1, &r3).unwrap();
        let d23 = kendall_tau(&r2, &r3).unwrap();
        prop_assert!(d13 <= d12 + d23);
        prop_assert!(d12 <= (m * (m - 1) / 2) as u64);
    }

    /// Winner sets are never empty and optimal scores match the first-place
    /// cost of every winner.
    #[test]
    fn winner_sets_nonempty(seed in 0u64..400) {
        let mut rng = gen::rng_from_seed(seed);
        let m = 2 + (seed % 5) as usize;
        let e = gen::election(&mut rng, m, 4).unwrap();
        let out = kemeny_winners(&e, Variant::Kemeny, &Limits::default()).unwrap();
        prop_assert!(!out.winners.is_empty());
        prop_assert_eq!(out.consensus.len(), m);
        prop_assert_eq!(kemeny_score(&e, &out.consensus).unwrap(), out.score);
        prop_assert!(out.winners.contains(&out.consensus[0]));
    }
}
