use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use fusion_ring::embed::DEFAULT_CONDUCTOR_BOUND;
use quantum_group::sweep::DEFAULT_SWEEP_RANK;
use quantum_group::DEFAULT_WEYL_CAP;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Table {
    #[value(name = "figK")]
    FigK,
    #[value(name = "figA")]
    FigA,
    #[value(name = "figB")]
    FigB,
}

#[derive(Debug, Parser)]
#[command(name = "fusionforge", version, about = "Dimension fields, modular data and central charge bounds for fusion rings")]
pub struct RunConfig {
    /// Bits of precision for printed floating-point values
    #[arg(long, global = true, default_value_t = 128, value_parser = clap::value_parser!(u32).range(64..))]
    pub precision: u32,
    /// Largest conductor tried when embedding ring dimensions
    #[arg(long, global = true, default_value_t = DEFAULT_CONDUCTOR_BOUND)]
    pub conductor_bound: u64,
    /// Largest rank for which Weyl groups are enumerated
    #[arg(long, global = true, default_value_t = DEFAULT_WEYL_CAP)]
    pub weyl_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the fusion ring axioms; violations are printed one per line
    Validate { path: PathBuf },
    /// Dimensions, dimension fields, subrings and gradings of a ring
    Analyze { path: PathBuf },
    /// Report on the category of type TYPE, rank RANK at level LEVEL
    Quantum {
        #[arg(value_name = "TYPE")]
        lie_type: String,
        rank: usize,
        level: i64,
        /// Also compute S, T, the Verlinde field and the fusion rules
        #[arg(long)]
        modular: bool,
        /// Write the extracted fusion ring here (implies --modular)
        #[arg(long, value_name = "PATH")]
        write_ring: Option<PathBuf>,
    },
    /// Regenerate a table and compare with the published copy
    Tables {
        which: Table,
        /// Alcove size limit of the figB sweep
        #[arg(long, default_value_t = 2000)]
        max_alcove: u64,
        /// Classical rank limit of the figB sweep
        #[arg(long, default_value_t = DEFAULT_SWEEP_RANK)]
        max_rank: usize,
    },
    /// Central charge order bounds
    Bound {
        /// Exponent N of the Galois group of the dimension field
        #[arg(long)]
        exponent: Option<u64>,
        /// Read the dimension fields off a ring file
        #[arg(long, value_name = "PATH")]
        ring: Option<PathBuf>,
        /// A factor TYPE RANK LEVEL of a Deligne product; repeatable
        #[arg(long, num_args = 3, value_names = ["TYPE", "RANK", "LEVEL"], action = clap::ArgAction::Append)]
        quantum: Vec<String>,
    },
}
