//! Kemeny and Kemeny' scores and winners.
//!
//! A Kemeny consensus is a complete ranking minimizing the summed pairwise
//! disagreements with the voters; a candidate wins iff it tops some
//! consensus. Kemeny' admits partial votes: a pair contributes only when the
//! vote lists both of its candidates, and the consensus is still a complete
//! order.

use crate::ordering::{self, OrderWeights};
use crate::{Error, Limits, Result};

use super::{Election, PairwiseMatrix};

/// Which pairwise semantics to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Complete votes only.
    Kemeny,
    /// Partial votes allowed; pairs with an unlisted member contribute 0.
    KemenyPrime,
}

/// Score of a concrete complete consensus against a complete-vote election.
pub fn kemeny_score(e: &Election, consensus: &[usize]) -> Result<u64> {
    if e.has_partial_votes() {
        return Err(Error::invalid(
            "election has partial votes; use kemeny_prime_score",
        ));
    }
    score_against(e, consensus)
}

/// Kemeny' score: identical sum, but partial votes only contribute pairs
/// they list on both sides.
pub fn kemeny_prime_score(e: &Election, consensus: &[usize]) -> Result<u64> {
    score_against(e, consensus)
}

fn score_against(e: &Election, consensus: &[usize]) -> Result<u64> {
    let m = e.num_candidates();
    if consensus.len() != m {
        return Err(Error::invalid("consensus must rank every candidate"));
    }
    let mut seen = vec![false; m];
    for &c in consensus {
        if c >= m || seen[c] {
            return Err(Error::invalid("consensus is not a permutation"));
        }
        seen[c] = true;
    }
    let pw = e.pairwise();
    let mut score = 0;
    for i in 0..m {
        for j in i + 1..m {
            // consensus[i] above consensus[j]: disagreement with every vote
            // preferring consensus[j].
            score += pw.prefers(consensus[j], consensus[i]);
        }
    }
    Ok(score)
}

/// Result of exact Kemeny winner determination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KemenyOutcome {
    /// Minimum total disagreement over all complete consensuses.
    pub score: u64,
    /// All candidates topping some optimal consensus, ascending.
    pub winners: Vec<usize>,
    /// The lexicographically smallest optimal consensus.
    pub consensus: Vec<usize>,
}

pub(crate) fn weights_for(pw: &PairwiseMatrix) -> OrderWeights {
    let m = pw.num_candidates();
    let mut w = OrderWeights::new(m);
    for a in 0..m {
        for b in 0..m {
            if a != b {
                w.set(a, b, pw.prefers(b, a));
            }
        }
    }
    w
}

/// Exact winner set, optimal score, and a witness consensus via the subset
/// dynamic program. Capped by `limits.kemeny_dp_candidates`.
pub fn kemeny_winners(e: &Election, variant: Variant, limits: &Limits) -> Result<KemenyOutcome> {
    if variant == Variant::Kemeny && e.has_partial_votes() {
        return Err(Error::invalid(
            "election has partial votes; use the kemeny_prime variant",
        ));
    }
    let m = e.num_candidates();
    if m > limits.kemeny_dp_candidates {
        return Err(Error::limit(format!(
            "kemeny winner DP over {m} candidates exceeds the cap of {}",
            limits.kemeny_dp_candidates
        )));
    }
    let w = weights_for(&e.pairwise());
    let mut dp_limits = limits.clone();
    dp_limits.order_dp_vertices = limits.kemeny_dp_candidates;
    let (score, consensus) = ordering::optimal_order(&w, &dp_limits)?;
    let firsts = ordering::first_fixed_costs(&w, &dp_limits)?;
    let winners = (0..m).filter(|&c| firsts[c] == score).collect();
    Ok(KemenyOutcome {
        score,
        winners,
        consensus,
    })
}

/// Is `p` a Kemeny (or Kemeny') winner? Scales past the DP cap via branch
/// and bound on the pairwise-margin digraph, which handles the sparse
/// McGarvey-style elections produced by the feedback-arc-set reductions.
pub fn is_kemeny_winner(e: &Election, variant: Variant, p: usize, limits: &Limits) -> Result<bool> {
    if variant == Variant::Kemeny && e.has_partial_votes() {
        return Err(Error::invalid(
            "election has partial votes; use the kemeny_prime variant",
        ));
    }
    if p >= e.num_candidates() {
        return Err(Error::invalid(format!("no candidate {p}")));
    }
    let w = weights_for(&e.pairwise());
    let optimal = ordering::optimal_cost(&w, limits)?;
    let with_p_first = ordering::optimal_cost_with_first(&w, p, limits)?;
    Ok(with_p_first == optimal)
}
