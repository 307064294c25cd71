//! From feedback-arc-set membership problems to Kemeny control problems.
//!
//! Vertices become candidates. For the complete-vote variants the voters are
//! McGarvey's construction over the full vertex set (projection onto any
//! candidate subset preserves the margin correspondence); for the arc-adding
//! variant each arc is one partial vote under the Kemeny' rule.

use crate::control::{ControlAction, ControlInstance, Rule};
use crate::elections::{Election, Vote};
use crate::graphs::GraphControlInstance;
use crate::{Error, Result};

use super::{mcgarvey, ReductionTrace};

/// Feedback-Arc-Set-Member-Select to Kemeny control by deleting designated
/// candidates.
pub fn fasms_to_kemeny_ccdcstar(
    inst: &GraphControlInstance,
) -> Result<(ControlInstance, ReductionTrace)> {
    let GraphControlInstance::Fasms {
        digraph,
        deletable,
        limit,
        target,
    } = inst
    else {
        return Err(Error::invalid("expected a fasms instance"));
    };
    let (election, _) = mcgarvey(digraph)?;
    let trace = ReductionTrace::new("fasms-to-kemeny-ccdcstar")
        .count("candidates", election.num_candidates() as u64)
        .count("voters", election.num_voters())
        .part("deletable", deletable.clone())
        .part("preferred", vec![*target]);
    let out = ControlInstance {
        rule: Rule::Kemeny,
        election,
        action: ControlAction::DeleteCandidatesRestricted {
            deletable: deletable.clone(),
        },
        limit: *limit as u64,
        preferred: *target,
    };
    Ok((out, trace))
}

/// Feedback-Arc-Set-Member-Add to Kemeny control by adding candidates.
/// Candidates are renumbered registered-first (the numbering the ASP fact
/// format requires); the trace records the new id of every old vertex.
pub fn fasma_to_kemeny_ccac(
    inst: &GraphControlInstance,
) -> Result<(ControlInstance, ReductionTrace)> {
    let GraphControlInstance::Fasma {
        digraph,
        addable,
        limit,
        target,
    } = inst
    else {
        return Err(Error::invalid("expected a fasma instance"));
    };
    let n = digraph.n();
    let registered_old: Vec<usize> = (0..n).filter(|v| !addable.contains(v)).collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in registered_old.iter().enumerate() {
        new_id[v] = i;
    }
    let mut sorted_addable = addable.clone();
    sorted_addable.sort_unstable();
    for (i, &v) in sorted_addable.iter().enumerate() {
        new_id[v] = registered_old.len() + i;
    }
    let (raw, _) = mcgarvey(digraph)?;
    let votes = raw
        .votes()
        .iter()
        .map(|v| {
            Vote::complete(
                v.count,
                v.ranking.order().iter().map(|&c| new_id[c]).collect(),
            )
        })
        .collect();
    let election = Election::new(n, votes)?;
    let unregistered: Vec<usize> = (registered_old.len()..n).collect();
    let trace = ReductionTrace::new("fasma-to-kemeny-ccac")
        .count("registered", registered_old.len() as u64)
        .count("unregistered", unregistered.len() as u64)
        .count("voters", election.num_voters())
        .part("old-to-new", new_id.clone())
        .part("preferred", vec![new_id[*target]]);
    let out = ControlInstance {
        rule: Rule::Kemeny,
        election,
        action: ControlAction::AddCandidates { unregistered },
        limit: *limit as u64,
        preferred: new_id[*target],
    };
    Ok((out, trace))
}

/// Feedback-Arc-Set-Member-Add-Arcs to Kemeny' control by adding voters:
/// one registered partial vote "u > w" per base arc, one addable per
/// addable arc.
pub fn fasmaa_to_kemeny_prime_ccav(
    inst: &GraphControlInstance,
) -> Result<(ControlInstance, ReductionTrace)> {
    let GraphControlInstance::Fasmaa {
        digraph,
        addable_arcs,
        limit,
        target,
    } = inst
    else {
        return Err(Error::invalid("expected a fasmaa instance"));
    };
    let registered: Vec<Vote> = digraph.arcs().map(|(u, w)| Vote::partial(1, vec![u, w])).collect();
    let addable: Vec<Vote> = addable_arcs
        .iter()
        .map(|&(u, w)| Vote::partial(1, vec![u, w]))
        .collect();
    let election = Election::new(digraph.n(), registered)?;
    let trace = ReductionTrace::new("fasmaa-to-kemeny-prime-ccav")
        .count("candidates", digraph.n() as u64)
        .count("registered-voters", election.num_voters())
        .count("addable-voters", addable.len() as u64)
        .part("preferred", vec![*target]);
    let out = ControlInstance {
        rule: Rule::KemenyPrime,
        election,
        action: ControlAction::AddVoters { addable },
        limit: *limit as u64,
        preferred: *target,
    };
    Ok((out, trace))
}
