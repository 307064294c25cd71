//! Young scores against exhaustive enumeration, and the score claims of the
//! independent-set gadget.

mod common;

use ecx_core::elections::{young_score, young_winners, Election, Vote};
use ecx_core::gen;
use ecx_core::graphs::Graph;
use ecx_core::reduce::{ensure_young_preconditions, ismd_to_young_ccdv};
use ecx_core::Limits;
use itertools::Itertools;

fn limits() -> Limits {
    Limits::default()
}

#[test]
fn young_scores_match_submultiset_enumeration() {
    for seed in 0..60 {
        let mut rng = gen::rng_from_seed(seed);
        let e = gen::election(&mut rng, 3, 5).unwrap();
        let winners = young_winners(&e, &limits()).unwrap();
        for c in 0..3 {
            let oracle = common::young_by_submultisets(&e, c);
            assert_eq!(winners.scores[c], oracle, "seed {seed} candidate {c}");
            let report = young_score(&e, c, &limits()).unwrap();
            assert_eq!(report.score, oracle);
            assert_eq!(report.kept.iter().sum::<u64>(), oracle);
        }
        let top = *winners.scores.iter().max().unwrap();
        assert_eq!(
            winners.winners,
            (0..3).filter(|&c| winners.scores[c] == top).collect::<Vec<_>>()
        );
    }
}

#[test]
fn young_score_grows_with_a_top_supporter() {
    for seed in 0..40 {
        let mut rng = gen::rng_from_seed(500 + seed);
        let m = 2 + (seed % 4) as usize;
        let e = gen::election(&mut rng, m, 5).unwrap();
        for c in 0..m {
            let before = young_score(&e, c, &limits()).unwrap().score;
            let mut votes = e.votes().to_vec();
            let mut order = vec![c];
            order.extend((0..m).filter(|&d| d != c));
            votes.push(Vote::complete(1, order));
            let bigger = Election::new(m, votes).unwrap();
            let after = young_score(&bigger, c, &limits()).unwrap().score;
            assert!(after >= before + 1, "seed {seed} candidate {c}");
        }
    }
}

/// The gadget's score claims on a path graph: for every admissible deletion
/// set (type-II voter spared), score(q) = 2 alpha(G - W) and
/// score(p) = 2 alpha_target(G - W), with W read off the type-I deletions.
#[test]
fn gadget_score_claims_on_padded_path() {
    let p4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
    let k = 1usize;
    let g = ensure_young_preconditions(&p4, k, &limits()).unwrap();
    let target = 0;
    let (gadget, _) = ismd_to_young_ccdv(&g, k, target, &limits()).unwrap();
    let e = &gadget.instance.election;
    let voters = e.votes().len();

    // delete sets of at most k vote entries (single copies); admissible
    // sets spare the type-II voter, and the p claim needs the target's own
    // voter intact (alpha_target is undefined once the target is gone)
    for size in 0..=k {
        for deleted in (0..voters).combinations(size) {
            if deleted.contains(&gadget.type_ii_entry)
                || deleted.contains(&gadget.vertex_voter[target])
            {
                continue;
            }
            let mut votes = Vec::new();
            for (i, vote) in e.votes().iter().enumerate() {
                let remove = if deleted.contains(&i) { 1 } else { 0 };
                if vote.count > remove {
                    votes.push(Vote {
                        count: vote.count - remove,
                        ranking: vote.ranking.clone(),
                    });
                }
            }
            let sub = Election::new(e.num_candidates(), votes).unwrap();
            // vertices of the deleted type-I voters
            let w: Vec<usize> = deleted
                .iter()
                .filter_map(|&entry| gadget.vertex_voter.iter().position(|&v| v == entry))
                .collect();
            let kept: std::collections::BTreeSet<usize> =
                (0..g.n()).filter(|v| !w.contains(v)).collect();
            let (g_minus_w, ids) = g.induced(&kept);
            let t = ids.binary_search(&target).unwrap();
            let (a, a_t) = ecx_core::graphs::independence(&g_minus_w, t, &limits()).unwrap();
            let q_score = young_score(&sub, gadget.candidate_q, &limits()).unwrap().score;
            let p_score = young_score(&sub, gadget.candidate_p, &limits()).unwrap().score;
            assert_eq!(q_score, 2 * a as u64, "deleted {deleted:?}");
            assert_eq!(p_score, 2 * a_t as u64, "deleted {deleted:?}");
        }
    }
}

#[test]
fn winner_sets_nonempty_on_random_profiles() {
    for seed in 0..50 {
        let mut rng = gen::rng_from_seed(900 + seed);
        let e = gen::election(&mut rng, 4, 5).unwrap();
        let w = young_winners(&e, &limits()).unwrap();
        assert!(!w.winners.is_empty());
    }
}
