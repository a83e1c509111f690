//! Library half of the `tenscat` binary.
//!
//! A [`JobSpec`] describes one batch job; [`run`] executes it and returns a
//! [`Report`] whose JSON body is the single source of truth. Text output is
//! rendered from that JSON.

pub mod args;
mod commands;
pub mod render;
mod suites;

use std::path::PathBuf;

use serde_json::{json, Value};
use tenscat_core::homology::{default_rank, Cache, OracleOptions};
use tenscat_core::{Label, LieType};

pub use render::render_text;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// A group of identities checked by `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Relations,
    Duality,
    Koszul,
    Ext,
    Blocks,
    SchurWeyl,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Relations, Suite::Duality, Suite::Koszul, Suite::Ext, Suite::Blocks, Suite::SchurWeyl];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Duality => "duality",
            Suite::Koszul => "koszul",
            Suite::Ext => "ext",
            Suite::Blocks => "blocks",
            Suite::SchurWeyl => "schur-weyl",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Ext,
    Socle,
    Blocks,
    /// Build `A^r_g`, or its quadratic dual when `dual` is set, and dump it.
    Algebra { dual: bool },
    Dual,
    Verify(Vec<Suite>),
    CacheList,
    CacheClear,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Ext => "ext",
            Command::Socle => "socle",
            Command::Blocks => "blocks",
            Command::Algebra { .. } => "algebra",
            Command::Dual => "dual",
            Command::Verify(_) => "verify",
            Command::CacheList => "cache list",
            Command::CacheClear => "cache clear",
        }
    }

    fn uses_oracle_tables(&self) -> bool {
        match self {
            Command::Ext | Command::Socle => true,
            Command::Verify(s) => s.contains(&Suite::Ext),
            _ => false,
        }
    }
}

/// Everything needed to run one job.
#[derive(Clone, Debug)]
pub struct JobSpec {
    pub command: Command,
    pub g: Option<LieType>,
    /// Largest label size in tables and block decompositions.
    pub max_size: usize,
    /// Truncation `T^{≤r}` for algebra-level commands.
    pub r: usize,
    /// Highest socle layer / Ext degree.
    pub max_layer: usize,
    pub rank: Option<usize>,
    pub allow_unsafe_rank: bool,
    pub format: Format,
    pub cache: Option<PathBuf>,
}

impl JobSpec {
    pub fn new(command: Command, g: Option<LieType>) -> Self {
        Self {
            command,
            g,
            max_size: 3,
            r: 4,
            max_layer: 1,
            rank: None,
            allow_unsafe_rank: false,
            format: Format::Json,
            cache: None,
        }
    }

    /// Checks the invariants of a job before anything is computed.
    pub fn validate(&self) -> Result<(), String> {
        let needs_g = !matches!(self.command, Command::CacheList | Command::CacheClear);
        if needs_g && self.g.is_none() {
            return Err(format!("`{}` needs --g sl|o|sp", self.command.name()));
        }
        if !needs_g && self.cache.is_none() {
            return Err("cache commands need --cache DIR or TENSCAT_CACHE".into());
        }
        for (name, v) in [("--max-size", self.max_size), ("--r", self.r), ("--max-layer", self.max_layer)] {
            if v == 0 {
                return Err(format!("{name} must be positive"));
            }
        }
        if let (Some(g), Some(rank)) = (self.g, self.rank) {
            if rank == 0 {
                return Err("--rank must be positive".into());
            }
            let needed = self.required_rank(g);
            if self.command.uses_oracle_tables() && rank < needed && !self.allow_unsafe_rank {
                return Err(format!(
                    "--rank {rank} is below the stable rank {needed} for labels of size {}; pass --unsafe-rank to force it",
                    self.max_size
                ));
            }
        }
        Ok(())
    }

    /// Smallest rank that is safe for every label up to `max_size`.
    pub fn required_rank(&self, g: LieType) -> usize {
        Label::all_up_to(g, self.max_size).iter().map(default_rank).max().unwrap_or(1)
    }

    fn oracle_options(&self) -> Result<OracleOptions, tenscat_core::Error> {
        Ok(OracleOptions {
            rank: self.rank,
            allow_unsafe_rank: self.allow_unsafe_rank,
            cache: self.cache.as_ref().map(Cache::new).transpose()?,
        })
    }
}

/// How a job ended; maps onto the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    VerificationFailed,
    UsageError,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::VerificationFailed => 1,
            Status::UsageError => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub status: Status,
    pub body: Value,
}

impl Report {
    fn usage(command: &Command, msg: String) -> Self {
        Report { status: Status::UsageError, body: json!({ "command": command.name(), "error": msg, "kind": "usage" }) }
    }

    fn failure(command: &Command, err: &tenscat_core::Error) -> Self {
        Report {
            status: Status::VerificationFailed,
            body: json!({ "command": command.name(), "error": err.to_string(), "kind": "computation" }),
        }
    }

    /// Output in the requested format; JSON is pretty-printed with sorted keys.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.body).expect("JSON values always serialize");
                s.push('\n');
                s
            }
            Format::Text => render_text(&self.body),
        }
    }
}

/// Runs a job. Never panics on bad input: usage problems and computation
/// errors come back as reports with the matching status.
pub fn run(spec: &JobSpec) -> Report {
    if let Err(msg) = spec.validate() {
        return Report::usage(&spec.command, msg);
    }
    match commands::dispatch(spec) {
        Ok((holds, body)) => Report { status: if holds { Status::Success } else { Status::VerificationFailed }, body },
        Err(e @ tenscat_core::Error::InsufficientRank { .. }) => Report::usage(&spec.command, e.to_string()),
        Err(e) => Report::failure(&spec.command, &e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let mut spec = JobSpec::new(Command::Ext, Some(LieType::O));
        assert!(spec.validate().is_ok());
        assert_eq!(spec.required_rank(LieType::O), 6);
        spec.rank = Some(5);
        assert!(spec.validate().unwrap_err().contains("unsafe"));
        spec.allow_unsafe_rank = true;
        assert!(spec.validate().is_ok());
        // the rank only matters for oracle tables
        let mut blocks = JobSpec::new(Command::Blocks, Some(LieType::Sl));
        blocks.rank = Some(1);
        assert!(blocks.validate().is_ok());
        assert!(JobSpec::new(Command::Dual, None).validate().is_err());
        assert!(JobSpec::new(Command::CacheClear, None).validate().is_err());
    }

    #[test]
    fn usage_reports_carry_status_two() {
        let r = run(&JobSpec::new(Command::Socle, None));
        assert_eq!(r.status.code(), 2);
        assert_eq!(r.body["kind"], "usage");
    }
}
