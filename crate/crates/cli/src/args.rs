use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Exact analysis of Lie algebras and their solvable extensions.
///
/// A <SRC> is a catalog name (`abelian:4`, `heisenberg:5`, `filiform:6`, `favre7`,
/// `r2`, `sl2`, `sl2_plane`, `so2_torus_extension`, `diagonal_torus_extension`) or a
/// path to a catalog JSON file.
#[derive(Debug, Parser)]
#[command(name = "lie-ext", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for the randomized searches (Cartan subalgebras, tori, splittings).
    #[arg(long, global = true, default_value_t = lie_ext::random::DEFAULT_SEED)]
    pub seed: u64,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Include wall-clock timing in the report (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structure constants and basic invariants.
    Info { src: String },
    /// The derivation algebra.
    Der { src: String },
    /// The largest nilpotent ideal.
    Nilradical { src: String },
    /// A Cartan subalgebra.
    Cartan { src: String },
    /// A maximal torus of the derivation algebra.
    Torus { src: String },
    /// Solvable extension of a nilpotent algebra.
    Extend {
        /// Adjoin a maximal torus of the derivation algebra.
        #[arg(long, conflicts_with = "by", required_unless_present = "by")]
        standard: bool,
        /// Adjoin the derivations listed in this JSON file.
        #[arg(long, value_name = "DERIVATION_FILE")]
        by: Option<PathBuf>,
        src: String,
    },
    /// Malcev splitting of a solvable algebra.
    Split { src: String },
    /// Isomorphism invariants.
    Fingerprint { src: String },
    /// Bound checks.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Worked examples.
    Demo {
        #[command(subcommand)]
        demo: DemoCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Toric rank of L/N against the number of generators of the nilradical N.
    RankBound { src: String },
    /// Derivation dimension of a direct sum against its block decomposition.
    Togo { src_a: String, src_b: String },
}

#[derive(Debug, Subcommand)]
pub enum DemoCommand {
    /// Two non-isomorphic maximal solvable extensions with the same nilradical.
    Snobl,
}
