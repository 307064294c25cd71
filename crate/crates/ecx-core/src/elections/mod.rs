//! Election data model and exact winner determination for Kemeny, Kemeny',
//! Young, and Dodgson elections.
//!
//! Candidates are `0..m`. A vote is a strict ranking, most-preferred first,
//! with a positive multiplicity. Complete votes rank every candidate; partial
//! votes (used by the Kemeny' variant) rank any nonempty duplicate-free
//! subset.

mod dodgson;
mod kemeny;
mod young;

pub use dodgson::{
    dodgson_score, dodgson_winners, is_dodgson_winner, DodgsonReport, DodgsonWinners, LiftStep,
};
pub use kemeny::{
    is_kemeny_winner, kemeny_prime_score, kemeny_score, kemeny_winners, KemenyOutcome, Variant,
};
pub use young::{young_score, young_winners, YoungReport, YoungWinners};

use crate::{Error, Result};

/// A strict ranking, most-preferred candidate first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VoteRanking {
    /// Ranks every candidate of the election.
    Complete(Vec<usize>),
    /// Ranks a subset of the candidates; unlisted candidates contribute no
    /// pairwise disagreements under Kemeny'.
    Partial(Vec<usize>),
}

impl VoteRanking {
    pub fn order(&self) -> &[usize] {
        match self {
            VoteRanking::Complete(o) | VoteRanking::Partial(o) => o,
        }
    }

    pub fn is_partial(&self) -> bool {
        matches!(self, VoteRanking::Partial(_))
    }
}

/// A ranking with a positive multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vote {
    pub count: u64,
    pub ranking: VoteRanking,
}

impl Vote {
    pub fn complete(count: u64, order: Vec<usize>) -> Self {
        Vote {
            count,
            ranking: VoteRanking::Complete(order),
        }
    }

    pub fn partial(count: u64, order: Vec<usize>) -> Self {
        Vote {
            count,
            ranking: VoteRanking::Partial(order),
        }
    }
}

/// An election: a candidate set `0..num_candidates` and a multiset of votes.
///
/// The vote list may be empty; several constructions (McGarvey on an arcless
/// digraph, Young sub-elections) legitimately produce voterless elections, in
/// which case every candidate ties every pairwise comparison 0-0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Election {
    num_candidates: usize,
    candidate_names: Option<Vec<String>>,
    votes: Vec<Vote>,
}

impl Election {
    /// Builds an election, validating every ranking against `num_candidates`.
    pub fn new(num_candidates: usize, votes: Vec<Vote>) -> Result<Self> {
        if num_candidates == 0 {
            return Err(Error::invalid("an election needs at least one candidate"));
        }
        for (i, vote) in votes.iter().enumerate() {
            if vote.count == 0 {
                return Err(Error::invalid(format!("vote {i} has count 0")));
            }
            let order = vote.ranking.order();
            let mut seen = vec![false; num_candidates];
            for &c in order {
                if c >= num_candidates {
                    return Err(Error::invalid(format!(
                        "vote {i} ranks candidate {c}, but there are only {num_candidates}"
                    )));
                }
                if seen[c] {
                    return Err(Error::invalid(format!(
                        "vote {i} ranks candidate {c} twice"
                    )));
                }
                seen[c] = true;
            }
            match &vote.ranking {
                VoteRanking::Complete(o) => {
                    if o.len() != num_candidates {
                        return Err(Error::invalid(format!(
                            "vote {i} is marked complete but ranks {} of {num_candidates} candidates",
                            o.len()
                        )));
                    }
                }
                VoteRanking::Partial(o) => {
                    if o.is_empty() {
                        return Err(Error::invalid(format!("vote {i} ranks no candidates")));
                    }
                }
            }
        }
        Ok(Election {
            num_candidates,
            candidate_names: None,
            votes,
        })
    }

    pub fn with_names(mut self, names: Vec<(usize, String)>) -> Result<Self> {
        let mut table = vec![String::new(); self.num_candidates];
        for (i, name) in names {
            if i >= self.num_candidates {
                return Err(Error::invalid(format!("name given for candidate {i}")));
            }
            table[i] = name;
        }
        for (i, slot) in table.iter_mut().enumerate() {
            if slot.is_empty() {
                *slot = format!("c{}", i + 1);
            }
        }
        self.candidate_names = Some(table);
        Ok(self)
    }

    pub fn num_candidates(&self) -> usize {
        self.num_candidates
    }

    pub fn votes(&self) -> &[Vote] {
        &self.votes
    }

    pub fn candidate_names(&self) -> Option<&[String]> {
        self.candidate_names.as_deref()
    }

    /// Display label for a candidate: its declared name, or `c<i+1>`.
    pub fn candidate_label(&self, c: usize) -> String {
        match &self.candidate_names {
            Some(names) if c < names.len() => names[c].clone(),
            _ => format!("c{}", c + 1),
        }
    }

    /// Total number of voters (sum of vote counts).
    pub fn num_voters(&self) -> u64 {
        self.votes.iter().map(|v| v.count).sum()
    }

    pub fn has_partial_votes(&self) -> bool {
        self.votes.iter().any(|v| v.ranking.is_partial())
    }

    /// The pairwise preference matrix of this election.
    pub fn pairwise(&self) -> PairwiseMatrix {
        PairwiseMatrix::from_election(self)
    }

    /// Projects the election onto `kept` (sorted, deduplicated candidate ids),
    /// renumbering candidates to `0..kept.len()` in ascending original order.
    /// Every vote keeps its count and the relative order of kept candidates.
    pub fn restrict(&self, kept: &[usize]) -> Result<Election> {
        let mut sorted: Vec<usize> = kept.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() {
            return Err(Error::invalid("cannot restrict an election to no candidates"));
        }
        if let Some(&max) = sorted.last() {
            if max >= self.num_candidates {
                return Err(Error::invalid(format!(
                    "restriction keeps candidate {max}, but there are only {}",
                    self.num_candidates
                )));
            }
        }
        let mut new_id = vec![usize::MAX; self.num_candidates];
        for (i, &c) in sorted.iter().enumerate() {
            new_id[c] = i;
        }
        let votes = self
            .votes
            .iter()
            .map(|v| {
                let order: Vec<usize> = v
                    .ranking
                    .order()
                    .iter()
                    .filter(|&&c| new_id[c] != usize::MAX)
                    .map(|&c| new_id[c])
                    .collect();
                Vote {
                    count: v.count,
                    ranking: match &v.ranking {
                        VoteRanking::Complete(_) => VoteRanking::Complete(order),
                        VoteRanking::Partial(_) => VoteRanking::Partial(order),
                    },
                }
            })
            // A partial vote can project to nothing; drop it.
            .filter(|v| !v.ranking.order().is_empty())
            .collect();
        let names = self
            .candidate_names
            .as_ref()
            .map(|ns| sorted.iter().map(|&c| ns[c].clone()).collect());
        Ok(Election {
            num_candidates: sorted.len(),
            candidate_names: names,
            votes,
        })
    }
}

/// `prefers[a][b]`: number of voters ranking `a` above `b`. For partial votes
/// a pair counts only when the vote lists both candidates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairwiseMatrix {
    m: usize,
    prefers: Vec<u64>,
}

impl PairwiseMatrix {
    pub fn from_election(e: &Election) -> Self {
        let m = e.num_candidates();
        let mut prefers = vec![0u64; m * m];
        for vote in e.votes() {
            let order = vote.ranking.order();
            for i in 0..order.len() {
                for j in i + 1..order.len() {
                    prefers[order[i] * m + order[j]] += vote.count;
                }
            }
        }
        PairwiseMatrix { m, prefers }
    }

    pub fn num_candidates(&self) -> usize {
        self.m
    }

    pub fn prefers(&self, a: usize, b: usize) -> u64 {
        self.prefers[a * self.m + b]
    }

    /// Signed margin of `a` over `b`.
    pub fn margin(&self, a: usize, b: usize) -> i64 {
        self.prefers(a, b) as i64 - self.prefers(b, a) as i64
    }
}

/// Result of a pairwise comparison sweep for one candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CondorcetStatus {
    /// Beats every other candidate pairwise.
    Condorcet,
    /// Beats or ties every other candidate pairwise.
    WeakCondorcet,
    Neither,
}

/// Classifies `c` against the whole field. On an empty voter set every
/// candidate is a weak Condorcet winner (all comparisons tie 0-0).
pub fn condorcet_status(e: &Election, c: usize) -> Result<CondorcetStatus> {
    if c >= e.num_candidates() {
        return Err(Error::invalid(format!("no candidate {c}")));
    }
    let pw = e.pairwise();
    condorcet_status_from(&pw, c)
}

pub(crate) fn condorcet_status_from(pw: &PairwiseMatrix, c: usize) -> Result<CondorcetStatus> {
    let mut strict = true;
    let mut weak = true;
    for d in 0..pw.num_candidates() {
        if d == c {
            continue;
        }
        let margin = pw.margin(c, d);
        if margin <= 0 {
            strict = false;
        }
        if margin < 0 {
            weak = false;
        }
    }
    Ok(if strict && pw.num_candidates() > 1 {
        CondorcetStatus::Condorcet
    } else if weak {
        CondorcetStatus::WeakCondorcet
    } else {
        CondorcetStatus::Neither
    })
}

/// Kendall tau distance between two complete rankings over the same
/// candidates: the number of unordered pairs ranked oppositely.
pub fn kendall_tau(r1: &[usize], r2: &[usize]) -> Result<u64> {
    let m = r1.len();
    if r2.len() != m {
        return Err(Error::invalid("rankings have different lengths"));
    }
    let mut pos1 = vec![usize::MAX; m];
    let mut pos2 = vec![usize::MAX; m];
    for i in 0..m {
        if r1[i] >= m || pos1[r1[i]] != usize::MAX {
            return Err(Error::invalid("first ranking is not a permutation"));
        }
        if r2[i] >= m || pos2[r2[i]] != usize::MAX {
            return Err(Error::invalid("second ranking is not a permutation"));
        }
        pos1[r1[i]] = i;
        pos2[r2[i]] = i;
    }
    let mut disagreements = 0;
    for a in 0..m {
        for b in a + 1..m {
            let first = pos1[a] < pos1[b];
            let second = pos2[a] < pos2[b];
            if first != second {
                disagreements += 1;
            }
        }
    }
    Ok(disagreements)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn election(m: usize, votes: Vec<Vec<usize>>) -> Election {
        Election::new(m, votes.into_iter().map(|o| Vote::complete(1, o)).collect()).unwrap()
    }

    #[test]
    fn rejects_bad_votes() {
        assert!(Election::new(2, vec![Vote::complete(0, vec![0, 1])]).is_err());
        assert!(Election::new(2, vec![Vote::complete(1, vec![0, 0])]).is_err());
        assert!(Election::new(2, vec![Vote::complete(1, vec![0, 2])]).is_err());
        assert!(Election::new(2, vec![Vote::complete(1, vec![0])]).is_err());
        assert!(Election::new(2, vec![Vote::partial(1, vec![])]).is_err());
        assert!(Election::new(0, vec![]).is_err());
    }

    #[test]
    fn kendall_tau_basics() {
        let r: Vec<usize> = vec![2, 0, 1, 3];
        assert_eq!(kendall_tau(&r, &r).unwrap(), 0);
        let rev: Vec<usize> = r.iter().rev().copied().collect();
        assert_eq!(kendall_tau(&r, &rev).unwrap(), 6);
        assert_eq!(kendall_tau(&[0, 1, 2], &[1, 0, 2]).unwrap(), 1);
        assert!(kendall_tau(&[0, 1], &[0, 1, 2]).is_err());
        assert!(kendall_tau(&[0, 0, 1], &[0, 1, 2]).is_err());
    }

    #[test]
    fn pairwise_counts_both_dialects() {
        let e = Election::new(
            3,
            vec![Vote::complete(2, vec![0, 1, 2]), Vote::partial(1, vec![2, 0])],
        )
        .unwrap();
        let pw = e.pairwise();
        assert_eq!(pw.prefers(0, 1), 2);
        assert_eq!(pw.prefers(1, 0), 0);
        assert_eq!(pw.prefers(2, 0), 1);
        assert_eq!(pw.prefers(0, 2), 2);
        // pair (1,2) in the partial vote: 1 unlisted, contributes nothing
        assert_eq!(pw.prefers(1, 2), 2);
        assert_eq!(pw.prefers(2, 1), 0);
    }

    #[test]
    fn condorcet_cases() {
        let empty = Election::new(3, vec![]).unwrap();
        for c in 0..3 {
            assert_eq!(
                condorcet_status(&empty, c).unwrap(),
                CondorcetStatus::WeakCondorcet
            );
        }
        let single = election(3, vec![vec![1, 0, 2]]);
        assert_eq!(
            condorcet_status(&single, 1).unwrap(),
            CondorcetStatus::Condorcet
        );
        assert_eq!(
            condorcet_status(&single, 0).unwrap(),
            CondorcetStatus::Neither
        );
        // 2 voters (a>b>c), 1 voter (b>c>a): a is Condorcet
        let e = Election::new(
            3,
            vec![
                Vote::complete(2, vec![0, 1, 2]),
                Vote::complete(1, vec![1, 2, 0]),
            ],
        )
        .unwrap();
        assert_eq!(condorcet_status(&e, 0).unwrap(), CondorcetStatus::Condorcet);
    }

    #[test]
    fn restrict_projects_order() {
        let e = election(3, vec![vec![0, 1, 2]]);
        let r = e.restrict(&[0, 2]).unwrap();
        assert_eq!(r.num_candidates(), 2);
        assert_eq!(r.votes()[0].ranking.order(), &[0, 1]);
        let full = e.restrict(&[0, 1, 2]).unwrap();
        assert_eq!(full, e);
        assert!(e.restrict(&[]).is_err());
    }
}
