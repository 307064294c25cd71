//! Instance facts in the Democratix style: each distinct vote i over the
//! full candidate set is a bundle of p(i, j, c) atoms plus votecount(i, k).

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::control::{ControlAction, ControlInstance, Rule};
use crate::elections::{Election, Vote};
use crate::{Error, Result};

/// The fact-level view of a Kemeny-CCAC instance. Candidate ids are
/// 0-based here and 1-based on the wire; registered candidates must occupy
/// the low ids, unregistered the high ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactBase {
    pub registered: usize,
    pub unregistered: usize,
    pub limit: u64,
    pub preferred: usize,
    /// Distinct complete rankings over all candidates with multiplicities,
    /// numbered by first occurrence.
    pub votes: Vec<(Vec<usize>, u64)>,
}

impl FactBase {
    pub fn voternum(&self) -> u64 {
        self.votes.iter().map(|(_, k)| k).sum()
    }

    /// Renders the fact text, deterministically.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "rcandnum({}).", self.registered);
        let _ = writeln!(out, "ucandnum({}).", self.unregistered);
        let _ = writeln!(out, "limit({}).", self.limit);
        let _ = writeln!(out, "preferredCand({}).", self.preferred + 1);
        let _ = writeln!(out, "prefnum({}).", self.votes.len());
        let _ = writeln!(out, "voternum({}).", self.voternum());
        for (i, (ranking, count)) in self.votes.iter().enumerate() {
            let _ = writeln!(out, "votecount({},{}).", i + 1, count);
            for (j, &c) in ranking.iter().enumerate() {
                let _ = writeln!(out, "p({},{},{}).", i + 1, j + 1, c + 1);
            }
        }
        out
    }
}

/// Builds the fact base for a Kemeny-CCAC instance. Preconditions: complete
/// votes, and the unregistered candidates are exactly the ids above the
/// registered block (the numbering the encoding's `ucandidate((M+1)..(M+N))`
/// rule assumes).
pub fn facts_from_ccac(inst: &ControlInstance) -> Result<FactBase> {
    if inst.rule != Rule::Kemeny {
        return Err(Error::invalid(format!(
            "the encoding covers the kemeny rule, not {}",
            inst.rule.name()
        )));
    }
    let ControlAction::AddCandidates { unregistered } = &inst.action else {
        return Err(Error::invalid("the encoding covers ccac instances only"));
    };
    inst.validate()?;
    if inst.election.has_partial_votes() {
        return Err(Error::invalid("the fact format requires complete votes"));
    }
    let m = inst.election.num_candidates();
    let registered = m - unregistered.len();
    let mut sorted = unregistered.clone();
    sorted.sort_unstable();
    if sorted != (registered..m).collect::<Vec<_>>() {
        return Err(Error::invalid(
            "unregistered candidates must occupy the highest ids; renumber the instance",
        ));
    }
    let mut index: HashMap<&[usize], usize> = HashMap::new();
    let mut votes: Vec<(Vec<usize>, u64)> = Vec::new();
    for vote in inst.election.votes() {
        let order = vote.ranking.order();
        match index.get(order) {
            Some(&i) => votes[i].1 += vote.count,
            None => {
                index.insert(order, votes.len());
                votes.push((order.to_vec(), vote.count));
            }
        }
    }
    Ok(FactBase {
        registered,
        unregistered: unregistered.len(),
        limit: inst.limit,
        preferred: inst.preferred,
        votes,
    })
}

/// Reconstructs the control instance a fact base describes.
pub fn fact_base_to_control(f: &FactBase) -> Result<ControlInstance> {
    let m = f.registered + f.unregistered;
    let votes = f
        .votes
        .iter()
        .map(|(ranking, count)| Vote::complete(*count, ranking.clone()))
        .collect();
    let inst = ControlInstance {
        rule: Rule::Kemeny,
        election: Election::new(m, votes)?,
        action: ControlAction::AddCandidates {
            unregistered: (f.registered..m).collect(),
        },
        limit: f.limit,
        preferred: f.preferred,
    };
    inst.validate()?;
    Ok(inst)
}

/// Parses fact text produced by [`FactBase::render`] (whitespace and `%`
/// comments tolerated).
pub fn parse_facts(text: &str) -> Result<FactBase> {
    let mut registered = None;
    let mut unregistered = None;
    let mut limit = None;
    let mut preferred = None;
    let mut prefnum = None;
    let mut voternum = None;
    let mut counts: HashMap<usize, u64> = HashMap::new();
    let mut positions: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('%').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = lineno + 1;
        let fact = line
            .strip_suffix('.')
            .ok_or_else(|| Error::parse(lineno, "facts must end with '.'"))?;
        let (name, args) = fact
            .split_once('(')
            .ok_or_else(|| Error::parse(lineno, "expected name(args)"))?;
        let args = args
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(lineno, "missing ')'"))?;
        let nums: Vec<u64> = args
            .split(',')
            .map(|a| {
                a.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::parse(lineno, format!("bad argument '{a}'")))
            })
            .collect::<Result<_>>()?;
        match (name.trim(), nums.as_slice()) {
            ("rcandnum", [v]) => registered = Some(*v as usize),
            ("ucandnum", [v]) => unregistered = Some(*v as usize),
            ("limit", [v]) => limit = Some(*v),
            ("preferredCand", [v]) => preferred = Some(*v as usize),
            ("prefnum", [v]) => prefnum = Some(*v as usize),
            ("voternum", [v]) => voternum = Some(*v),
            ("votecount", [i, k]) => {
                counts.insert(*i as usize, *k);
            }
            ("p", [i, j, c]) => {
                positions
                    .entry(*i as usize)
                    .or_default()
                    .push((*j as usize, *c as usize));
            }
            other => {
                return Err(Error::parse(lineno, format!("unexpected fact {}", other.0)));
            }
        }
    }

    let registered = registered.ok_or_else(|| Error::parse(0, "missing rcandnum"))?;
    let unregistered = unregistered.ok_or_else(|| Error::parse(0, "missing ucandnum"))?;
    let limit = limit.ok_or_else(|| Error::parse(0, "missing limit"))?;
    let preferred = preferred.ok_or_else(|| Error::parse(0, "missing preferredCand"))?;
    let prefnum = prefnum.ok_or_else(|| Error::parse(0, "missing prefnum"))?;
    let voternum = voternum.ok_or_else(|| Error::parse(0, "missing voternum"))?;
    if preferred == 0 || preferred > registered {
        return Err(Error::invalid("preferredCand must be a registered candidate"));
    }
    let m = registered + unregistered;
    let mut votes = Vec::with_capacity(prefnum);
    for i in 1..=prefnum {
        let count = *counts
            .get(&i)
            .ok_or_else(|| Error::invalid(format!("missing votecount for vote {i}")))?;
        let mut pos = positions
            .remove(&i)
            .ok_or_else(|| Error::invalid(format!("missing p atoms for vote {i}")))?;
        pos.sort_unstable();
        if pos.len() != m {
            return Err(Error::invalid(format!(
                "vote {i} has {} p atoms, expected {m}",
                pos.len()
            )));
        }
        let mut ranking = Vec::with_capacity(m);
        for (expect, (j, c)) in pos.into_iter().enumerate() {
            if j != expect + 1 || c == 0 || c > m {
                return Err(Error::invalid(format!("vote {i} has malformed p atoms")));
            }
            ranking.push(c - 1);
        }
        votes.push((ranking, count));
    }
    if !positions.is_empty() || counts.len() != prefnum {
        return Err(Error::invalid("stray vote facts outside 1..prefnum"));
    }
    let base = FactBase {
        registered,
        unregistered,
        limit,
        preferred: preferred - 1,
        votes,
    };
    if base.voternum() != voternum {
        return Err(Error::invalid(format!(
            "voternum({voternum}) does not match the votecount sum {}",
            base.voternum()
        )));
    }
    Ok(base)
}
