//! Driving an external ASP system (Clingo 4 or compatible) on an emitted
//! artifact, and cross-checking its verdict against the brute-force solver.
//!
//! The binary comes from an explicit [`SolverConfig`] or the
//! `ECX_ASP_SOLVER` environment variable. Everything else in the crate
//! works without any solver installed.

use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use crate::control::{solve_control, ControlInstance};
use crate::{Error, Limits, Result};

use super::{facts_from_ccac, AspArtifact};

/// Classified outcome of one external solver run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveStatus {
    /// An answer set exists: control is possible.
    Sat,
    /// No answer set: control is impossible.
    Unsat,
    Timeout,
    OutOfMemory,
    /// Unclassifiable exit; the payload carries the solver's output tail.
    SolverError(String),
}

impl SolveStatus {
    pub fn decision(&self) -> Option<bool> {
        match self {
            SolveStatus::Sat => Some(true),
            SolveStatus::Unsat => Some(false),
            _ => None,
        }
    }
}

/// External solver invocation parameters.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub binary: PathBuf,
    pub time_limit: Duration,
    /// Address-space cap applied via `ulimit -v` in the spawning shell.
    pub mem_limit_mb: Option<u64>,
}

impl SolverConfig {
    pub fn new(binary: impl Into<PathBuf>) -> Self {
        SolverConfig {
            binary: binary.into(),
            time_limit: Duration::from_secs(3600),
            mem_limit_mb: Some(16 * 1024),
        }
    }
}

/// Reads the solver binary path from `ECX_ASP_SOLVER`, if set and nonempty.
pub fn solver_from_env() -> Option<PathBuf> {
    match std::env::var("ECX_ASP_SOLVER") {
        Ok(path) if !path.trim().is_empty() => Some(PathBuf::from(path)),
        _ => None,
    }
}

/// Runs the solver on an artifact file already written to disk and
/// classifies the outcome by output tokens first ("UNSATISFIABLE" before
/// "SATISFIABLE", which it contains), then by the clasp exit-code
/// convention (10/30 satisfiable, 20 unsatisfiable).
pub fn run_external(artifact_path: &Path, config: &SolverConfig) -> Result<SolveStatus> {
    if !config.binary.exists() && which(&config.binary).is_none() {
        return Err(Error::Config(format!(
            "solver binary '{}' not found",
            config.binary.display()
        )));
    }
    let mut cmd = match config.mem_limit_mb {
        Some(mb) => {
            let mut c = Command::new("sh");
            c.arg("-c").arg(format!(
                "ulimit -v {}; exec \"$0\" \"$1\"",
                mb.saturating_mul(1024)
            ));
            c.arg(&config.binary).arg(artifact_path);
            c
        }
        None => {
            let mut c = Command::new(&config.binary);
            c.arg(artifact_path);
            c
        }
    };
    cmd.stdout(Stdio::piped()).stderr(Stdio::piped());
    let start = Instant::now();
    let mut child = cmd.spawn()?;
    let status = loop {
        match child.try_wait()? {
            Some(status) => break status,
            None => {
                if start.elapsed() > config.time_limit {
                    let _ = child.kill();
                    let _ = child.wait();
                    return Ok(SolveStatus::Timeout);
                }
                std::thread::sleep(Duration::from_millis(20));
            }
        }
    };
    let output = child.wait_with_output()?;
    let stdout = String::from_utf8_lossy(&output.stdout);
    let stderr = String::from_utf8_lossy(&output.stderr);
    if stdout.contains("UNSATISFIABLE") {
        return Ok(SolveStatus::Unsat);
    }
    if stdout.contains("SATISFIABLE") {
        return Ok(SolveStatus::Sat);
    }
    if stderr.contains("bad_alloc") || stderr.contains("out of memory") {
        return Ok(SolveStatus::OutOfMemory);
    }
    match status.code() {
        Some(10) | Some(30) => Ok(SolveStatus::Sat),
        Some(20) => Ok(SolveStatus::Unsat),
        code => {
            let tail: String = stdout
                .lines()
                .chain(stderr.lines())
                .rev()
                .take(5)
                .collect::<Vec<_>>()
                .join(" | ");
            Ok(SolveStatus::SolverError(format!(
                "exit {code:?}: {tail}"
            )))
        }
    }
}

/// Agreement report between the external solver and the brute-force path.
#[derive(Debug, Clone)]
pub struct CrossCheckReport {
    pub asp_status: SolveStatus,
    pub asp_seconds: f64,
    pub brute_decision: bool,
    pub brute_seconds: f64,
}

impl CrossCheckReport {
    pub fn agree(&self) -> bool {
        self.asp_status.decision() == Some(self.brute_decision)
    }
}

/// Emits the artifact for `inst`, runs both deciders, and fails hard on
/// disagreement (dumping both verdicts in the error).
pub fn cross_check(
    inst: &ControlInstance,
    config: &SolverConfig,
    workdir: &Path,
    limits: &Limits,
) -> Result<CrossCheckReport> {
    let facts = facts_from_ccac(inst)?;
    let artifact = AspArtifact::new(&facts);
    let path = workdir.join("cross_check.lp");
    artifact.write_to(&path)?;

    let asp_start = Instant::now();
    let asp_status = run_external(&path, config)?;
    let asp_seconds = asp_start.elapsed().as_secs_f64();

    let brute_start = Instant::now();
    let brute = solve_control(inst, limits)?;
    let brute_seconds = brute_start.elapsed().as_secs_f64();

    let report = CrossCheckReport {
        asp_status,
        asp_seconds,
        brute_decision: brute.decision,
        brute_seconds,
    };
    match report.asp_status.decision() {
        Some(asp) if asp != brute.decision => Err(Error::Internal(format!(
            "cross-check mismatch: asp={:?} brute={} witness={:?}",
            report.asp_status, brute.decision, brute.witness
        ))),
        _ => Ok(report),
    }
}

fn which(binary: &Path) -> Option<PathBuf> {
    if binary.components().count() > 1 {
        return binary.exists().then(|| binary.to_path_buf());
    }
    let path = std::env::var_os("PATH")?;
    std::env::split_paths(&path)
        .map(|dir| dir.join(binary))
        .find(|candidate| candidate.is_file())
}
