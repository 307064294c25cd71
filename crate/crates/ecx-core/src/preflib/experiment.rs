//! The Kemeny-CCAC experiment over a directory of SOC files: the first
//! candidate is preferred, the last fifth of the candidates (rounded up) is
//! held out as unregistered, and the addition limit is a third of the
//! held-out count (rounded up).
//!
//! The ceiling rules are reverse-engineered conventions: they are the unique
//! simple rounding reproducing every registered/unregistered split reported
//! for the reference instances, and ceiling the limit avoids a degenerate
//! zero addition budget at two unregistered candidates.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use crate::asp::{facts_from_ccac, run_external, AspArtifact, SolveStatus, SolverConfig};
use crate::control::{solve_control, ControlAction, ControlInstance, Rule};
use crate::{Error, Limits, Result};

use super::{parse_soc, SocFile};

/// How one instance ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExperimentOutcome {
    Solved,
    Timeout,
    OutOfMemory,
    /// Not attempted; the payload explains why (too few candidates, no
    /// decision path available, parse failure).
    Skipped(String),
}

/// One table row.
#[derive(Debug, Clone)]
pub struct ExperimentRow {
    pub instance: String,
    pub registered: usize,
    pub unregistered: usize,
    pub voters: u64,
    pub decision: Option<bool>,
    pub seconds: f64,
    pub outcome: ExperimentOutcome,
}

/// Builds the experiment instance from a SOC file: preferred candidate 1,
/// the last ceil(m/5) candidates unregistered, limit ceil(u/3). Requires at
/// least four candidates.
pub fn build_experiment_instance(soc: &SocFile) -> Result<ControlInstance> {
    let m = soc.num_candidates();
    if m < 4 {
        return Err(Error::invalid(format!(
            "the experiment needs at least 4 candidates, got {m}"
        )));
    }
    let unregistered_count = m.div_ceil(5);
    let limit = unregistered_count.div_ceil(3) as u64;
    let inst = ControlInstance {
        rule: Rule::Kemeny,
        election: soc.to_election()?,
        action: ControlAction::AddCandidates {
            unregistered: (m - unregistered_count..m).collect(),
        },
        limit,
        preferred: 0,
    };
    inst.validate()?;
    Ok(inst)
}

/// Full experiment report.
#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub rows: Vec<ExperimentRow>,
}

impl ExperimentReport {
    pub fn solved(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.outcome == ExperimentOutcome::Solved)
            .count()
    }

    pub fn timeouts(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.outcome == ExperimentOutcome::Timeout)
            .count()
    }

    pub fn out_of_memory(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.outcome == ExperimentOutcome::OutOfMemory)
            .count()
    }

    /// Aligned text table mirroring the reference columns.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<24} {:>6} {:>8} {:>8} {:>10}  {}",
            "Instance", "#Reg.", "#Unreg.", "#Voters", "Seconds", "Control Possible"
        );
        for row in &self.rows {
            let decision = match (&row.outcome, row.decision) {
                (ExperimentOutcome::Solved, Some(true)) => "Yes".to_string(),
                (ExperimentOutcome::Solved, Some(false)) => "No".to_string(),
                (ExperimentOutcome::Timeout, _) => "timeout".to_string(),
                (ExperimentOutcome::OutOfMemory, _) => "oom".to_string(),
                (ExperimentOutcome::Skipped(reason), _) => format!("skipped: {reason}"),
                (ExperimentOutcome::Solved, None) => "?".to_string(),
            };
            let _ = writeln!(
                out,
                "{:<24} {:>6} {:>8} {:>8} {:>10.3}  {}",
                row.instance, row.registered, row.unregistered, row.voters, row.seconds, decision
            );
        }
        let _ = writeln!(
            out,
            "solved {} of {} ({} timeout, {} out of memory)",
            self.solved(),
            self.rows.len(),
            self.timeouts(),
            self.out_of_memory()
        );
        out
    }

    /// Machine-readable rows: tab-separated, one per instance.
    pub fn render_delimited(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "instance\tregistered\tunregistered\tvoters\tseconds\tdecision\toutcome");
        for row in &self.rows {
            let decision = match row.decision {
                Some(true) => "yes",
                Some(false) => "no",
                None => "-",
            };
            let outcome = match &row.outcome {
                ExperimentOutcome::Solved => "solved".to_string(),
                ExperimentOutcome::Timeout => "timeout".to_string(),
                ExperimentOutcome::OutOfMemory => "oom".to_string(),
                ExperimentOutcome::Skipped(reason) => format!("skipped:{reason}"),
            };
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{:.3}\t{}\t{}",
                row.instance, row.registered, row.unregistered, row.voters, row.seconds, decision, outcome
            );
        }
        out
    }
}

/// Runs the experiment over every `.soc` file in `dir`, in file-name order.
/// Decisions come from the external solver when configured, otherwise from
/// the brute-force path for instances with at most `brute_candidate_cap`
/// candidates. A file that fails to parse becomes a skipped row; it never
/// aborts the run.
pub fn run_experiment(
    dir: &Path,
    solver: Option<&SolverConfig>,
    limits: &Limits,
    brute_candidate_cap: usize,
) -> Result<ExperimentReport> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "soc"))
        .collect();
    paths.sort();
    let mut rows = Vec::new();
    for path in paths {
        let name = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        rows.push(run_one(&path, name, solver, limits, brute_candidate_cap));
    }
    Ok(ExperimentReport { rows })
}

fn run_one(
    path: &Path,
    name: String,
    solver: Option<&SolverConfig>,
    limits: &Limits,
    brute_candidate_cap: usize,
) -> ExperimentRow {
    let skipped = |reason: String, m: usize, u: usize, voters: u64| ExperimentRow {
        instance: name.clone(),
        registered: m.saturating_sub(u),
        unregistered: u,
        voters,
        decision: None,
        seconds: 0.0,
        outcome: ExperimentOutcome::Skipped(reason),
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return skipped(format!("read error: {e}"), 0, 0, 0),
    };
    let soc = match parse_soc(&text) {
        Ok(s) => s,
        Err(e) => return skipped(format!("parse error: {e}"), 0, 0, 0),
    };
    let m = soc.num_candidates();
    let voters = soc.num_voters();
    let inst = match build_experiment_instance(&soc) {
        Ok(i) => i,
        Err(e) => return skipped(format!("{e}"), m, 0, voters),
    };
    let unregistered = m.div_ceil(5);
    let registered = m - unregistered;

    let start = Instant::now();
    let (decision, outcome) = if let Some(config) = solver {
        match asp_decide(&inst, config) {
            Ok(SolveStatus::Sat) => (Some(true), ExperimentOutcome::Solved),
            Ok(SolveStatus::Unsat) => (Some(false), ExperimentOutcome::Solved),
            Ok(SolveStatus::Timeout) => (None, ExperimentOutcome::Timeout),
            Ok(SolveStatus::OutOfMemory) => (None, ExperimentOutcome::OutOfMemory),
            Ok(SolveStatus::SolverError(e)) => {
                (None, ExperimentOutcome::Skipped(format!("solver error: {e}")))
            }
            Err(e) => (None, ExperimentOutcome::Skipped(format!("{e}"))),
        }
    } else if m <= brute_candidate_cap {
        match solve_control(&inst, limits) {
            Ok(out) => (Some(out.decision), ExperimentOutcome::Solved),
            Err(e) => (None, ExperimentOutcome::Skipped(format!("{e}"))),
        }
    } else {
        (
            None,
            ExperimentOutcome::Skipped(format!(
                "no solver configured and {m} candidates exceed the brute-force cap {brute_candidate_cap}"
            )),
        )
    };
    ExperimentRow {
        instance: name,
        registered,
        unregistered,
        voters,
        decision,
        seconds: start.elapsed().as_secs_f64(),
        outcome,
    }
}

fn asp_decide(inst: &ControlInstance, config: &SolverConfig) -> Result<SolveStatus> {
    let facts = facts_from_ccac(inst)?;
    let artifact = AspArtifact::new(&facts);
    let dir = std::env::temp_dir().join(format!("ecx-experiment-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("instance.lp");
    artifact.write_to(&path)?;
    run_external(&path, config)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn soc_with_m(m: usize, voters: u64) -> SocFile {
        SocFile {
            source: format!("toy-{m}.soc"),
            candidate_names: (0..m).map(|i| format!("c{}", i + 1)).collect(),
            votes: vec![(voters, (0..m).collect())],
        }
    }

    #[test]
    fn split_rule_matches_reference_shapes() {
        // (candidates, expected registered, expected unregistered)
        for (m, reg, unreg) in [(7, 5, 2), (9, 7, 2), (10, 8, 2), (12, 9, 3), (14, 11, 3)] {
            let inst = build_experiment_instance(&soc_with_m(m, 4)).unwrap();
            let ControlAction::AddCandidates { unregistered } = &inst.action else {
                panic!("wrong action")
            };
            assert_eq!(unregistered.len(), unreg, "m={m}");
            assert_eq!(m - unregistered.len(), reg, "m={m}");
            assert_eq!(unregistered, &(m - unreg..m).collect::<Vec<_>>());
            assert_eq!(inst.limit, unreg.div_ceil(3) as u64);
            assert_eq!(inst.preferred, 0);
        }
    }

    #[test]
    fn minimum_size_and_below() {
        let inst = build_experiment_instance(&soc_with_m(4, 1)).unwrap();
        let ControlAction::AddCandidates { unregistered } = &inst.action else {
            panic!("wrong action")
        };
        assert_eq!(unregistered, &vec![3]);
        assert_eq!(inst.limit, 1);
        assert!(build_experiment_instance(&soc_with_m(3, 1)).is_err());
    }
}
