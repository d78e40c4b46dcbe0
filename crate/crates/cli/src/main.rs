//! `homcat` command line: KL data, pd tables, certificates, characters and
//! the fixture harness.
//!
//! Exit status: 0 when every executed check passes, 1 when a check fails,
//! 2 on usage or input errors.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(name = "homcat", version, about = "Kazhdan-Lusztig combinatorics and homological invariants of category O")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Largest group the enumerator accepts.
    #[arg(long, global = true, default_value_t = homcat::DEFAULT_CAP)]
    pub cap: usize,
    /// Fixture directory; the embedded A2 fixtures are used when unset.
    #[arg(long, global = true, env = homcat::fixtures::ENV_VAR)]
    pub fixtures: Option<PathBuf>,
    /// Fail when the command runs longer than this.
    #[arg(long, global = true)]
    pub budget_seconds: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Elements, lengths and (optionally) the Bruhat order.
    Elements {
        system: String,
        #[arg(long)]
        bruhat: bool,
    },
    /// Kazhdan-Lusztig data.
    Kl { system: String, what: KlWhat },
    /// Projective dimension tables.
    Table {
        system: String,
        family: TableFamily,
        /// Generator subset for `parabolic` and `s-subcat`, e.g. `s` or `{s1,s3}`.
        subset: Option<String>,
    },
    /// Regularity certificates.
    Certify {
        system: String,
        which: CertifyWhich,
        /// Subset for `parabolic` and `twisted-levi`, generator for `shuffle`.
        arg: Option<String>,
    },
    /// Graded composition factors of a twisted projective or tilting module.
    Character { system: String, x: String, y: String, family: CharacterFamily },
    /// Conjecture checks against fixtures, or against computed values when
    /// the system has none.
    Conjectures { system: String },
    /// Recompute and diff fixtures, or list them.
    Fixtures { system: String, action: FixtureAction },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KlWhat {
    Polys,
    Mu,
    Structure,
    Cells,
    Afun,
    Bfun,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFamily {
    Structural,
    Parabolic,
    #[value(name = "s-subcat")]
    SSubcat,
    TwistedP,
    TwistedT,
    ShuffledP,
    ShuffledT,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CertifyWhich {
    Ringel,
    Auslander,
    Parabolic,
    Shuffle,
    TwistedLevi,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CharacterFamily {
    TwistedP,
    TwistedT,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FixtureAction {
    Verify,
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = std::time::Instant::now();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            let mut ok = out.ok;
            if let Some(budget) = cli.budget_seconds {
                let took = start.elapsed().as_secs_f64();
                if took > budget {
                    eprintln!("homcat: exceeded budget of {budget} s ({took:.2} s)");
                    ok = false;
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("homcat: {e}");
            ExitCode::from(2)
        }
    }
}
