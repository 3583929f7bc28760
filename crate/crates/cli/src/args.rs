//! Command-line surface.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Inclusive integer range `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub lo: i64,
    pub hi: i64,
}

impl Range {
    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn label(&self) -> String {
        format!("{}..{}", self.lo, self.hi)
    }
}

impl std::str::FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected inclusive range a..b, got {s:?}"))?;
        let lo: i64 = lo
            .trim()
            .parse()
            .map_err(|_| format!("bad range start in {s:?}"))?;
        let hi: i64 = hi
            .trim()
            .parse()
            .map_err(|_| format!("bad range end in {s:?}"))?;
        if lo > hi {
            return Err(format!("empty range {s:?} (need a <= b)"));
        }
        if lo < 0 {
            return Err(format!("range {s:?} must be non-negative"));
        }
        Ok(Range { lo, hi })
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "arcfib",
    version,
    about = "Exact verifier and certified evaluator for arctangent identities over Fibonacci and Lucas numbers"
)]
pub struct Cli {
    /// Output format for reports (stdout).
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every catalog identity with its arity, parity and kind.
    List,

    /// Verify one identity instance (exactly for finite identities,
    /// to a certified digit count for infinite ones).
    Verify(VerifyArgs),

    /// Verify a finite identity across a parameter grid.
    Sweep(SweepArgs),

    /// Evaluate an infinite identity to a certified digit count.
    Eval(EvalArgs),

    /// Check an algebraic identity family on an (m, n) grid.
    Algebraic(AlgebraicArgs),

    /// Run the built-in verification suites.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity id, e.g. T3-c, L1-5, HR63-T5, I-E7.
    pub id: String,

    /// Shift parameter m.
    #[arg(long)]
    pub m: Option<i64>,

    /// Truncation parameter t (summed identities).
    #[arg(long)]
    pub t: Option<i64>,

    /// Single index n >= 1 (per-index identities).
    #[arg(long)]
    pub n: Option<i64>,

    /// Certified decimal digits for infinite identities (default 30).
    #[arg(long)]
    pub digits: Option<u32>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Finite identity id.
    pub id: String,

    /// Inclusive range for m, e.g. 0..12.
    #[arg(long, value_name = "A..B")]
    pub m_range: Option<Range>,

    /// Inclusive range for t, e.g. 0..32. For per-index identities this
    /// is the n range (alias: --n-range).
    #[arg(long, value_name = "A..B")]
    pub t_range: Option<Range>,

    /// Inclusive range for n (per-index identities).
    #[arg(long, value_name = "A..B", conflicts_with = "t_range")]
    pub n_range: Option<Range>,

    /// Worker threads (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Infinite identity id.
    pub id: String,

    /// Shift parameter m.
    #[arg(long)]
    pub m: Option<i64>,

    /// Certified decimal digits.
    #[arg(long)]
    pub digits: u32,
}

#[derive(Debug, Args)]
pub struct AlgebraicArgs {
    /// Family name, ALG-09 .. ALG-22.
    pub family: String,

    /// Inclusive range for m.
    #[arg(long, value_name = "A..B")]
    pub m_range: Range,

    /// Inclusive range for n.
    #[arg(long, value_name = "A..B")]
    pub n_range: Range,

    /// Worker threads (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Small grids, finishes in a few seconds (default).
    #[arg(long, conflicts_with = "full")]
    pub quick: bool,

    /// The complete verification grids.
    #[arg(long)]
    pub full: bool,

    /// Test-only: inject a perturbed instance to exercise the
    /// falsification path (compiled in only with the perturb-hook
    /// feature).
    #[cfg(feature = "perturb-hook")]
    #[arg(long, hide = true)]
    pub perturb: bool,
}

impl SelftestArgs {
    pub fn perturb_enabled(&self) -> bool {
        #[cfg(feature = "perturb-hook")]
        {
            self.perturb
        }
        #[cfg(not(feature = "perturb-hook"))]
        {
            false
        }
    }
}
