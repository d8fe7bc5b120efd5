//! Command-line configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubic_core::CubicCode;

use crate::codefile;
use crate::report::Format;
use crate::CliError;

pub const MIN_MEMORY_MIB: u64 = 256;

#[derive(Debug, Parser)]
#[command(name = "cubic", version, about = "Cubic translation-invariant stabilizer codes: classification, k(L) tables, logical operators, string segments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "tsv", global = true)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Memory budget for dense eliminations, in MiB.
    #[arg(long, default_value_t = 4096, global = true)]
    pub mem: u64,
    /// Worker threads; results are merged in input order.
    #[arg(long, default_value_t = 1, global = true)]
    pub threads: usize,
}

#[derive(Debug, Args, Clone)]
pub struct CodeSelector {
    /// Catalog code id (0 to 17).
    #[arg(long, conflicts_with = "code_file")]
    pub code: Option<u8>,
    /// Code definition file.
    #[arg(long)]
    pub code_file: Option<PathBuf>,
}

impl CodeSelector {
    pub fn resolve(&self) -> Result<CubicCode, CliError> {
        match (&self.code, &self.code_file) {
            (Some(id), _) => CubicCode::table(*id).ok_or(CliError::UnknownCode(*id)),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e.to_string()))?;
                codefile::parse(&text).map_err(|e| CliError::CodeFile(path.display().to_string(), e))
            }
            (None, None) => Err(CliError::Usage("give --code or --code-file".into())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Css,
    Noncss,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AxisArg {
    X,
    Y,
    Z,
}

impl AxisArg {
    pub fn index(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify commutation matrices and realize one code per class.
    ///
    /// Columns: class, table_id, orbit, generator, rank, passed, dual_consistent, canonical.
    Enumerate {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Qubits per site.
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Number of logical qubits on Z_L^3 for each L in a range.
    ///
    /// Columns: L, k_computed, k_predicted, match. Exits nonzero on a mismatch.
    Ktable {
        #[command(flatten)]
        code: CodeSelector,
        #[arg(long = "L", default_value_t = 2)]
        l: usize,
        #[arg(long = "L-max")]
        l_max: Option<usize>,
    },
    /// Whether an operator is logical and, if so, whether it is trivial.
    ///
    /// Columns: L, operator, logical, trivial, witness.
    Verify {
        #[command(flatten)]
        code: CodeSelector,
        #[arg(long = "L")]
        l: usize,
        /// Operator expression, e.g. `ZZ[z](0,0,0) ZI[z](1,0,0)` or `sigma[1,0,0]_IX(0,0,0)`.
        #[arg(long)]
        op: String,
    },
    /// Disconnectability scan of flat string segments.
    ///
    /// Columns: code, w, direction, length, verdict, certificate.
    Segments {
        #[command(flatten)]
        code: CodeSelector,
        #[arg(long, default_value_t = 2)]
        width: usize,
        /// Scan widths from --width up to this value.
        #[arg(long)]
        width_max: Option<usize>,
        #[arg(long)]
        length_max: Option<usize>,
        /// Restrict to one axis; the default depends on the code.
        #[arg(long, value_enum)]
        axis: Option<AxisArg>,
        /// Build and re-verify an explicit certificate for every basis segment.
        #[arg(long)]
        certify: bool,
    },
    /// Relations, basic strings and gauge accounting of the non-CSS code.
    ///
    /// Columns: L, k, relations, lower_bound, k_h, k_i, gauge_bound, residual, check.
    Code0 {
        #[arg(long = "L", default_value_t = 5)]
        l: usize,
        #[arg(long = "L-max")]
        l_max: Option<usize>,
    },
    /// Exhaustive minimum distance on a tiny lattice, in two search orders.
    ///
    /// Columns: order, distance, candidates, witness.
    Distance {
        #[command(flatten)]
        code: CodeSelector,
        #[arg(long = "L", default_value_t = 2)]
        l: usize,
    },
    /// Generator placements that anticommute with an operator.
    ///
    /// Columns: generator, x, y, z.
    Syndrome {
        #[command(flatten)]
        code: CodeSelector,
        #[arg(long = "L")]
        l: usize,
        #[arg(long)]
        op: String,
    },
}

impl Common {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.mem < MIN_MEMORY_MIB {
            return Err(CliError::Usage(format!("--mem must be at least {MIN_MEMORY_MIB} MiB")));
        }
        if self.threads == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        Ok(())
    }

    pub fn budget_bytes(&self) -> u64 {
        self.mem << 20
    }
}
