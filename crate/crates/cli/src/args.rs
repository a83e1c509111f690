//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tenscat_core::LieType;

use crate::{Command, Format, JobSpec, Suite};

#[derive(Debug, Parser)]
#[command(name = "tenscat", version, about = "Tables, presentations and checks for the categories of tensor modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Cmd,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Args)]
pub struct Opts {
    /// Lie algebra: sl, o or sp.
    #[arg(long, global = true, value_parser = parse_g)]
    pub g: Option<LieType>,
    /// Largest label size in tables and block decompositions.
    #[arg(long = "max-size", global = true, default_value_t = 3)]
    pub max_size: usize,
    /// Truncation degree for algebra commands and suites.
    #[arg(long, global = true, default_value_t = 4)]
    pub r: usize,
    /// Highest socle layer / Ext degree.
    #[arg(long = "max-layer", global = true, default_value_t = 1)]
    pub max_layer: usize,
    /// Oracle rank override (a second run at rank + 1 is always made).
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    /// Accept a rank override below the stable rank.
    #[arg(long = "unsafe-rank", global = true)]
    pub unsafe_rank: bool,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    /// Cache directory for oracle tables.
    #[arg(long, global = true, env = "TENSCAT_CACHE")]
    pub cache: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SuiteArg {
    Relations,
    Duality,
    Koszul,
    Ext,
    Blocks,
    SchurWeyl,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Ext dimensions between simple objects.
    Ext,
    /// Socle layers of the injective hulls.
    Socle,
    /// Block decomposition of the labels up to --max-size.
    Blocks,
    /// Build and dump the truncated algebra.
    Algebra {
        /// Dump the quadratic dual instead.
        #[arg(long)]
        dual: bool,
    },
    /// Self-duality (sl) or the o/sp exchange.
    Dual,
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Inspect or empty the cache directory.
    Cache {
        #[command(subcommand)]
        action: CacheCmd,
    },
}

#[derive(Clone, Copy, Debug, Subcommand)]
pub enum CacheCmd {
    List,
    Clear,
}

fn parse_g(s: &str) -> Result<LieType, String> {
    s.parse().map_err(|e: tenscat_core::Error| e.to_string())
}

impl From<Cli> for JobSpec {
    fn from(cli: Cli) -> Self {
        let command = match cli.command {
            Cmd::Ext => Command::Ext,
            Cmd::Socle => Command::Socle,
            Cmd::Blocks => Command::Blocks,
            Cmd::Algebra { dual } => Command::Algebra { dual },
            Cmd::Dual => Command::Dual,
            Cmd::Verify { suite } => Command::Verify(match suite {
                SuiteArg::Relations => vec![Suite::Relations],
                SuiteArg::Duality => vec![Suite::Duality],
                SuiteArg::Koszul => vec![Suite::Koszul],
                SuiteArg::Ext => vec![Suite::Ext],
                SuiteArg::Blocks => vec![Suite::Blocks],
                SuiteArg::SchurWeyl => vec![Suite::SchurWeyl],
                SuiteArg::All => Suite::ALL.to_vec(),
            }),
            Cmd::Cache { action: CacheCmd::List } => Command::CacheList,
            Cmd::Cache { action: CacheCmd::Clear } => Command::CacheClear,
        };
        let o = cli.opts;
        JobSpec {
            command,
            g: o.g,
            max_size: o.max_size,
            r: o.r,
            max_layer: o.max_layer,
            rank: o.rank,
            allow_unsafe_rank: o.unsafe_rank,
            format: match o.format {
                FormatArg::Text => Format::Text,
                FormatArg::Json => Format::Json,
            },
            cache: o.cache,
        }
    }
}
