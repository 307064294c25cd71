//! Young scores: the largest sub-multiset of voters under which a candidate
//! is a weak Condorcet winner. The empty subset always qualifies (every
//! pairwise comparison ties 0-0), so scores are well defined and >= 0.

use std::collections::HashMap;

use crate::{Error, Limits, Result};

use super::Election;

/// Young score with a witness: how many copies of each vote entry to keep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungReport {
    pub score: u64,
    /// Kept copies per vote entry of the input election; sums to `score`.
    pub kept: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungWinners {
    /// Young score per candidate.
    pub scores: Vec<u64>,
    /// Candidates with maximum score, ascending.
    pub winners: Vec<usize>,
}

struct Group {
    count: u64,
    /// +1 per kept copy toward c's margin over d, per rival index.
    sign: Vec<i64>,
    /// Vote entries merged into this group.
    entries: Vec<(usize, u64)>,
}

/// Maximum cardinality of a voter sub-multiset in which `c` beats-or-ties
/// every rival pairwise. Enumerates kept-count vectors over distinct votes;
/// the search space (product of count+1 over distinct votes) is capped at
/// `2^limits.young_enum_bits`.
pub fn young_score(e: &Election, c: usize, limits: &Limits) -> Result<YoungReport> {
    if c >= e.num_candidates() {
        return Err(Error::invalid(format!("no candidate {c}")));
    }
    if e.has_partial_votes() {
        return Err(Error::invalid("young scores require complete votes"));
    }
    let rivals: Vec<usize> = (0..e.num_candidates()).filter(|&d| d != c).collect();

    // Merge identical rankings so that 2|V| copies of a padding vote cost one
    // search dimension, not 2|V|.
    let mut index: HashMap<&[usize], usize> = HashMap::new();
    let mut groups: Vec<Group> = Vec::new();
    for (i, vote) in e.votes().iter().enumerate() {
        let order = vote.ranking.order();
        let gi = *index.entry(order).or_insert_with(|| {
            let pos: HashMap<usize, usize> =
                order.iter().enumerate().map(|(p, &d)| (d, p)).collect();
            let sign = rivals
                .iter()
                .map(|&d| if pos[&c] < pos[&d] { 1 } else { -1 })
                .collect();
            groups.push(Group {
                count: 0,
                sign,
                entries: Vec::new(),
            });
            groups.len() - 1
        });
        groups[gi].count += vote.count;
        groups[gi].entries.push((i, vote.count));
    }

    let mut log_space = 0.0f64;
    for g in &groups {
        log_space += ((g.count + 1) as f64).log2();
    }
    if log_space > limits.young_enum_bits as f64 {
        return Err(Error::limit(format!(
            "young enumeration space is 2^{log_space:.1}, cap is 2^{}",
            limits.young_enum_bits
        )));
    }

    // suffix_pos[gi][r]: max total positive contribution to rival r from
    // groups gi.. (used to prune branches that can no longer recover).
    let mut suffix_pos = vec![vec![0i64; rivals.len()]; groups.len() + 1];
    for gi in (0..groups.len()).rev() {
        for r in 0..rivals.len() {
            suffix_pos[gi][r] = suffix_pos[gi + 1][r]
                + if groups[gi].sign[r] > 0 {
                    groups[gi].count as i64
                } else {
                    0
                };
        }
    }
    let suffix_count: Vec<u64> = {
        let mut s = vec![0u64; groups.len() + 1];
        for gi in (0..groups.len()).rev() {
            s[gi] = s[gi + 1] + groups[gi].count;
        }
        s
    };

    struct Search<'a> {
        groups: &'a [Group],
        suffix_pos: &'a [Vec<i64>],
        suffix_count: &'a [u64],
        best: u64,
        best_kept: Vec<u64>,
        kept: Vec<u64>,
    }

    impl Search<'_> {
        fn dfs(&mut self, gi: usize, total: u64, margins: &mut [i64]) {
            if margins
                .iter()
                .zip(&self.suffix_pos[gi])
                .any(|(&m, &recoverable)| m + recoverable < 0)
            {
                return;
            }
            if total + self.suffix_count[gi] <= self.best {
                return;
            }
            if gi == self.groups.len() {
                // margins are all >= 0 here (suffix is empty).
                self.best = total;
                self.best_kept = self.kept.clone();
                return;
            }
            let g = &self.groups[gi];
            for keep in (0..=g.count).rev() {
                for (m, &s) in margins.iter_mut().zip(&g.sign) {
                    *m += keep as i64 * s;
                }
                self.kept[gi] = keep;
                self.dfs(gi + 1, total + keep, margins);
                for (m, &s) in margins.iter_mut().zip(&g.sign) {
                    *m -= keep as i64 * s;
                }
            }
            self.kept[gi] = 0;
        }
    }

    let mut search = Search {
        groups: &groups,
        suffix_pos: &suffix_pos,
        suffix_count: &suffix_count,
        best: 0,
        best_kept: Vec::new(),
        kept: vec![0; groups.len()],
    };
    let mut margins = vec![0i64; rivals.len()];
    search.dfs(0, 0, &mut margins);
    if search.best_kept.is_empty() {
        search.best_kept = vec![0; groups.len()];
    }

    // Distribute group keeps back onto the original vote entries.
    let mut kept = vec![0u64; e.votes().len()];
    for (g, &k) in groups.iter().zip(&search.best_kept) {
        let mut left = k;
        for &(entry, count) in &g.entries {
            let take = left.min(count);
            kept[entry] = take;
            left -= take;
        }
    }
    Ok(YoungReport {
        score: search.best,
        kept,
    })
}

/// Young winners: candidates maximizing the Young score.
pub fn young_winners(e: &Election, limits: &Limits) -> Result<YoungWinners> {
    let scores: Vec<u64> = (0..e.num_candidates())
        .map(|c| young_score(e, c, limits).map(|r| r.score))
        .collect::<Result<_>>()?;
    let top = *scores.iter().max().expect("at least one candidate");
    let winners = (0..e.num_candidates())
        .filter(|&c| scores[c] == top)
        .collect();
    Ok(YoungWinners { scores, winners })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elections::Vote;

    #[test]
    fn single_voter() {
        let e = Election::new(3, vec![Vote::complete(1, vec![1, 0, 2])]).unwrap();
        let r = young_score(&e, 1, &Limits::default()).unwrap();
        assert_eq!(r.score, 1);
        assert_eq!(r.kept, vec![1]);
        // bottom candidate: only the empty subset works
        assert_eq!(young_score(&e, 2, &Limits::default()).unwrap().score, 0);
    }

    #[test]
    fn unanimous() {
        let e = Election::new(2, vec![Vote::complete(5, vec![0, 1])]).unwrap();
        assert_eq!(young_score(&e, 0, &Limits::default()).unwrap().score, 5);
    }

    #[test]
    fn symmetric_tie() {
        let e = Election::new(
            2,
            vec![Vote::complete(1, vec![0, 1]), Vote::complete(1, vec![1, 0])],
        )
        .unwrap();
        let out = young_winners(&e, &Limits::default()).unwrap();
        assert_eq!(out.scores, vec![2, 2]);
        assert_eq!(out.winners, vec![0, 1]);
    }

    #[test]
    fn witness_replays_to_score() {
        let e = Election::new(
            3,
            vec![
                Vote::complete(2, vec![0, 1, 2]),
                Vote::complete(2, vec![1, 2, 0]),
                Vote::complete(1, vec![2, 0, 1]),
            ],
        )
        .unwrap();
        for c in 0..3 {
            let r = young_score(&e, c, &Limits::default()).unwrap();
            assert_eq!(r.kept.iter().sum::<u64>(), r.score);
            let kept_votes: Vec<Vote> = e
                .votes()
                .iter()
                .zip(&r.kept)
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| Vote::complete(k, v.ranking.order().to_vec()))
                .collect();
            let sub = Election::new(3, kept_votes).unwrap();
            use crate::elections::{condorcet_status, CondorcetStatus};
            assert_ne!(
                condorcet_status(&sub, c).unwrap(),
                CondorcetStatus::Neither
            );
        }
    }

    #[test]
    fn enumeration_cap() {
        let votes = (0..30)
            .map(|i| Vote::complete(1, if i % 2 == 0 { vec![0, 1] } else { vec![1, 0] }))
            .collect();
        let e = Election::new(2, votes).unwrap();
        let mut limits = Limits::default();
        limits.young_enum_bits = 4;
        assert!(young_score(&e, 0, &limits).is_err());
    }
}
