//! PrefLib strict-complete-order (SOC) ingestion and the control experiment
//! built on it.
//!
//! Both SOC dialects are accepted: the legacy layout (candidate count, name
//! lines, a `voters,sum,distinct` line, then `count,c1,c2,...` vote lines)
//! and the modern one (`# KEY: value` metadata plus `count: c1,c2,...` vote
//! lines). Serialization emits the modern dialect.

mod experiment;

pub use experiment::{
    build_experiment_instance, run_experiment, ExperimentOutcome, ExperimentReport, ExperimentRow,
};

use std::fmt::Write as _;

use crate::elections::{Election, Vote};
use crate::{Error, Result};

/// A parsed SOC file: complete strict orders with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocFile {
    /// Instance identifier (file name metadata when present).
    pub source: String,
    pub candidate_names: Vec<String>,
    /// Distinct votes: (count, ranking over 0-based candidate ids).
    pub votes: Vec<(u64, Vec<usize>)>,
}

impl SocFile {
    pub fn num_candidates(&self) -> usize {
        self.candidate_names.len()
    }

    pub fn num_voters(&self) -> u64 {
        self.votes.iter().map(|(k, _)| k).sum()
    }

    pub fn to_election(&self) -> Result<Election> {
        Election::new(
            self.num_candidates(),
            self.votes
                .iter()
                .map(|(count, order)| Vote::complete(*count, order.clone()))
                .collect(),
        )?
        .with_names(
            self.candidate_names
                .iter()
                .enumerate()
                .map(|(i, n)| (i, n.clone()))
                .collect(),
        )
    }
}

fn check_ranking(line: usize, order: &[usize], m: usize) -> Result<()> {
    if order.len() != m {
        return Err(Error::parse(
            line,
            format!("ranking lists {} of {m} candidates", order.len()),
        ));
    }
    let mut seen = vec![false; m];
    for &c in order {
        if seen[c] {
            return Err(Error::parse(line, format!("candidate {} ranked twice", c + 1)));
        }
        seen[c] = true;
    }
    Ok(())
}

/// Parses either SOC dialect.
pub fn parse_soc(text: &str) -> Result<SocFile> {
    if text.lines().any(|l| l.trim_start().starts_with('#')) {
        parse_modern(text)
    } else {
        parse_legacy(text)
    }
}

fn parse_ranking_csv(line: usize, text: &str, m: usize) -> Result<Vec<usize>> {
    let order: Vec<usize> = text
        .split(',')
        .map(|tok| {
            let id: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::parse(line, format!("bad candidate id '{tok}'")))?;
            if id == 0 || id > m {
                return Err(Error::parse(line, format!("candidate id {id} out of range")));
            }
            Ok(id - 1)
        })
        .collect::<Result<_>>()?;
    check_ranking(line, &order, m)?;
    Ok(order)
}

fn parse_modern(text: &str) -> Result<SocFile> {
    let mut source = String::new();
    let mut num_candidates = None;
    let mut declared_voters = None;
    let mut declared_distinct = None;
    let mut names: Vec<(usize, String)> = Vec::new();
    let mut votes = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(meta) = line.strip_prefix('#') {
            let Some((key, value)) = meta.split_once(':') else {
                continue;
            };
            let key = key.trim().to_ascii_uppercase();
            let value = value.trim();
            match key.as_str() {
                "FILE NAME" => source = value.to_string(),
                "NUMBER ALTERNATIVES" => {
                    num_candidates = Some(value.parse::<usize>().map_err(|_| {
                        Error::parse(lineno, "bad NUMBER ALTERNATIVES value")
                    })?);
                }
                "NUMBER VOTERS" => {
                    declared_voters = Some(
                        value
                            .parse::<u64>()
                            .map_err(|_| Error::parse(lineno, "bad NUMBER VOTERS value"))?,
                    );
                }
                "NUMBER UNIQUE ORDERS" => {
                    declared_distinct = Some(
                        value
                            .parse::<usize>()
                            .map_err(|_| Error::parse(lineno, "bad NUMBER UNIQUE ORDERS value"))?,
                    );
                }
                _ => {
                    if let Some(id_text) = key.strip_prefix("ALTERNATIVE NAME") {
                        let id: usize = id_text.trim().parse().map_err(|_| {
                            Error::parse(lineno, "bad ALTERNATIVE NAME index")
                        })?;
                        names.push((id, value.to_string()));
                    }
                }
            }
            continue;
        }
        let m = num_candidates
            .ok_or_else(|| Error::parse(lineno, "vote line before NUMBER ALTERNATIVES"))?;
        let (count_text, ranking_text) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(lineno, "expected '<count>: <ranking>'"))?;
        let count: u64 = count_text
            .trim()
            .parse()
            .map_err(|_| Error::parse(lineno, "bad vote count"))?;
        if count == 0 {
            return Err(Error::parse(lineno, "vote count must be positive"));
        }
        votes.push((count, parse_ranking_csv(lineno, ranking_text, m)?));
    }

    let m = num_candidates.ok_or_else(|| Error::parse(0, "missing NUMBER ALTERNATIVES"))?;
    let mut candidate_names = vec![String::new(); m];
    for (id, name) in names {
        if id == 0 || id > m {
            return Err(Error::invalid(format!("ALTERNATIVE NAME {id} out of range")));
        }
        candidate_names[id - 1] = name;
    }
    for (i, slot) in candidate_names.iter_mut().enumerate() {
        if slot.is_empty() {
            *slot = format!("Candidate {}", i + 1);
        }
    }
    let soc = SocFile {
        source,
        candidate_names,
        votes,
    };
    if let Some(v) = declared_voters {
        if v != soc.num_voters() {
            return Err(Error::invalid(format!(
                "NUMBER VOTERS is {v} but the votes sum to {}",
                soc.num_voters()
            )));
        }
    }
    if let Some(d) = declared_distinct {
        if d != soc.votes.len() {
            return Err(Error::invalid(format!(
                "NUMBER UNIQUE ORDERS is {d} but there are {} vote lines",
                soc.votes.len()
            )));
        }
    }
    Ok(soc)
}

fn parse_legacy(text: &str) -> Result<SocFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (lineno, first) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "empty SOC file"))?;
    let m: usize = first
        .parse()
        .map_err(|_| Error::parse(lineno, "expected the candidate count"))?;
    let mut candidate_names = Vec::with_capacity(m);
    for _ in 0..m {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| Error::parse(0, "missing candidate name lines"))?;
        let (id_text, name) = line
            .split_once(',')
            .ok_or_else(|| Error::parse(lineno, "expected '<id>,<name>'"))?;
        let id: usize = id_text
            .trim()
            .parse()
            .map_err(|_| Error::parse(lineno, "bad candidate id"))?;
        if id != candidate_names.len() + 1 {
            return Err(Error::parse(lineno, "candidate names out of order"));
        }
        candidate_names.push(name.trim().to_string());
    }
    let (lineno, totals) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing totals line"))?;
    let parts: Vec<&str> = totals.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::parse(lineno, "expected '<voters>,<sum>,<distinct>'"));
    }
    let declared_voters: u64 = parts[0]
        .parse()
        .map_err(|_| Error::parse(lineno, "bad voter count"))?;
    let declared_distinct: usize = parts[2]
        .parse()
        .map_err(|_| Error::parse(lineno, "bad distinct count"))?;
    let mut votes = Vec::new();
    for (lineno, line) in lines {
        let (count_text, ranking_text) = line
            .split_once(',')
            .ok_or_else(|| Error::parse(lineno, "expected '<count>,<ranking>'"))?;
        let count: u64 = count_text
            .trim()
            .parse()
            .map_err(|_| Error::parse(lineno, "bad vote count"))?;
        if count == 0 {
            return Err(Error::parse(lineno, "vote count must be positive"));
        }
        votes.push((count, parse_ranking_csv(lineno, ranking_text, m)?));
    }
    let soc = SocFile {
        source: String::new(),
        candidate_names,
        votes,
    };
    if declared_voters != soc.num_voters() {
        return Err(Error::invalid(format!(
            "totals line declares {declared_voters} voters but the votes sum to {}",
            soc.num_voters()
        )));
    }
    if declared_distinct != soc.votes.len() {
        return Err(Error::invalid(format!(
            "totals line declares {declared_distinct} distinct votes, found {}",
            soc.votes.len()
        )));
    }
    Ok(soc)
}

/// Canonical serialization (modern dialect).
pub fn serialize_soc(soc: &SocFile) -> String {
    let mut out = String::new();
    if !soc.source.is_empty() {
        let _ = writeln!(out, "# FILE NAME: {}", soc.source);
    }
    let _ = writeln!(out, "# NUMBER ALTERNATIVES: {}", soc.num_candidates());
    let _ = writeln!(out, "# NUMBER VOTERS: {}", soc.num_voters());
    let _ = writeln!(out, "# NUMBER UNIQUE ORDERS: {}", soc.votes.len());
    for (i, name) in soc.candidate_names.iter().enumerate() {
        let _ = writeln!(out, "# ALTERNATIVE NAME {}: {}", i + 1, name);
    }
    for (count, order) in &soc.votes {
        let rendered: Vec<String> = order.iter().map(|c| (c + 1).to_string()).collect();
        let _ = writeln!(out, "{count}: {}", rendered.join(","));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const LEGACY: &str = "3\n1,red\n2,green\n3,blue\n5,4,2\n3,1,2,3\n2,3,2,1\n";

    #[test]
    fn legacy_parses_and_round_trips() {
        let soc = parse_soc(LEGACY).unwrap();
        assert_eq!(soc.num_candidates(), 3);
        assert_eq!(soc.num_voters(), 5);
        assert_eq!(soc.votes.len(), 2);
        assert_eq!(soc.candidate_names[0], "red");
        let canonical = serialize_soc(&soc);
        let again = parse_soc(&canonical).unwrap();
        assert_eq!(again, soc);
        assert_eq!(serialize_soc(&again), canonical);
    }

    #[test]
    fn modern_parses_with_metadata_checks() {
        let text = "# FILE NAME: toy.soc\n# NUMBER ALTERNATIVES: 2\n# NUMBER VOTERS: 3\n# NUMBER UNIQUE ORDERS: 2\n# ALTERNATIVE NAME 1: a\n# ALTERNATIVE NAME 2: b\n2: 1,2\n1: 2,1\n";
        let soc = parse_soc(text).unwrap();
        assert_eq!(soc.source, "toy.soc");
        assert_eq!(soc.num_voters(), 3);
        // declared voter count must match
        let bad = text.replace("# NUMBER VOTERS: 3", "# NUMBER VOTERS: 4");
        assert!(parse_soc(&bad).is_err());
    }

    #[test]
    fn incomplete_or_duplicate_rankings_are_rejected() {
        let dup = "3\n1,a\n2,b\n3,c\n1,1,1\n1,1,1,2\n";
        match parse_soc(dup) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 6),
            other => panic!("expected a parse error, got {other:?}"),
        }
        let short = "3\n1,a\n2,b\n3,c\n1,1,1\n1,1,2\n";
        assert!(parse_soc(short).is_err());
    }

    #[test]
    fn to_election_keeps_names() {
        let soc = parse_soc(LEGACY).unwrap();
        let e = soc.to_election().unwrap();
        assert_eq!(e.candidate_label(2), "blue");
        assert_eq!(e.num_voters(), 5);
    }
}
