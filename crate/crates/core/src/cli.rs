//! Command-line front end. [`run`] never exits the process; it returns the
//! exit code (0 success, 1 domain error, 2 usage error).

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::basis::{compute_basis, SearchOptions};
use crate::check;
use crate::enumerate::{cumulative, table_bruteforce, table_recurrence, TierTable};
use crate::error::{Error, Result};
use crate::machine::{sort_with_trace, tier_by_simulation};
use crate::parker::{parker_to_perm, perm_to_parker, ParkerSequence};
use crate::perm::Permutation;
use crate::series::{table_gf, tier_series, DEFAULT_ORDER};
use crate::tier::{max_tier, max_tier_witness, tier};

#[derive(Debug, Parser)]
#[command(name = "tiersort", version, about = "Multi-pass stack sorting and tier enumeration")]
struct Cli {
    /// Worker threads for exhaustive searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tier of a permutation.
    Tier {
        perm: String,
        #[arg(long, value_enum, default_value_t = TierMethod::Pairs)]
        method: TierMethod,
    },
    /// Pass-by-pass run through the stack.
    Sort {
        perm: String,
        /// Print every push and pop.
        #[arg(long)]
        trace: bool,
    },
    /// Separated pairs with their leftmost separators.
    Pairs { perm: String },
    /// Permutation counts by length and tier.
    Table(TableArgs),
    /// Basis of the permutations of tier at most t.
    Basis {
        #[arg(long = "tier")]
        tier: usize,
        #[arg(long, default_value_t = 9)]
        max_len: usize,
        /// Permit searching lengths 11 and 12.
        #[arg(long)]
        allow_large: bool,
        /// Print counts per length instead of elements.
        #[arg(long)]
        counts: bool,
        #[arg(long)]
        json: bool,
    },
    /// Maximum tier over all permutations of length n.
    Maxtier {
        n: usize,
        #[arg(long)]
        witness: bool,
    },
    /// Parker sequence <-> permutation.
    Bijection(BijectionArgs),
    /// Terms of the generating function of tier-t permutations.
    Gf {
        #[arg(long = "tier")]
        tier: usize,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Run the cross-oracle validation suite.
    Check {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TierMethod {
    Pairs,
    Sim,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableMethod {
    Brute,
    Recurrence,
    Gf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    /// Counts of tier at most t instead of exactly t.
    #[arg(long)]
    cumulative: bool,
    #[arg(long, value_enum, default_value_t = TableMethod::Recurrence)]
    method: TableMethod,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
    /// With `--format bfile`, emit only column t as `n value` lines.
    #[arg(long)]
    column: Option<usize>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct BijectionArgs {
    /// Parker sequence to map to a permutation.
    #[arg(long)]
    to_perm: Option<String>,
    /// Permutation to map to a Parker sequence.
    #[arg(long)]
    to_seq: Option<String>,
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.threads {
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| execute(cli.command)),
            Err(e) => Err(Error::Inconsistent(e.to_string())),
        },
        None => execute(cli.command),
    };
    match result {
        Ok(Output { text, ok }) => {
            let _ = out.write_all(text.as_bytes());
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

struct Output {
    text: String,
    ok: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn execute(command: Command) -> Result<Output> {
    match command {
        Command::Tier { perm, method } => {
            let p: Permutation = perm.parse()?;
            let t = match method {
                TierMethod::Pairs => tier(&p),
                TierMethod::Sim => tier_by_simulation(p.values()),
                TierMethod::Both => {
                    let (a, b) = (tier(&p), tier_by_simulation(p.values()));
                    if a != b {
                        return Err(Error::Inconsistent(format!("separated pairs give {a}, simulation gives {b}")));
                    }
                    a
                }
            };
            Ok(format!("{t}\n").into())
        }
        Command::Sort { perm, trace } => {
            let p: Permutation = perm.parse()?;
            let st = sort_with_trace(&p);
            if trace {
                return Ok(st.render().into());
            }
            let mut text = String::new();
            for (k, pass) in st.passes.iter().enumerate() {
                let popped: Vec<String> = pass.popped().map(|v| v.to_string()).collect();
                text += &format!("pass {}: {}\n", k + 1, popped.join(" "));
            }
            text += &format!("tier {}\n", st.tier());
            Ok(text.into())
        }
        Command::Pairs { perm } => {
            let p: Permutation = perm.parse()?;
            let text: String = p
                .separated_pairs()
                .iter()
                .map(|sp| format!("{sp} separated by {} at position {}\n", p.at(sp.witness_position), sp.witness_position))
                .collect();
            Ok(text.into())
        }
        Command::Table(args) => table(args),
        Command::Basis { tier, max_len, allow_large, counts, json } => {
            let basis = compute_basis(tier, max_len, SearchOptions { allow_large })?;
            let text = if counts {
                basis.counts_by_length().iter().map(|(len, c)| format!("{len} {c}\n")).collect()
            } else if json {
                basis.to_json() + "\n"
            } else {
                basis.to_lines()
            };
            Ok(text.into())
        }
        Command::Maxtier { n, witness } => {
            let mut text = format!("{}\n", max_tier(n)?);
            if witness {
                text += &format!("{}\n", max_tier_witness(n)?);
            }
            Ok(text.into())
        }
        Command::Bijection(BijectionArgs { to_perm, to_seq }) => {
            if let Some(seq) = to_perm {
                let s: ParkerSequence = seq.parse()?;
                let p = parker_to_perm(&s);
                Ok(format!("{}\n", p.to_compact().unwrap_or_else(|| p.to_string())).into())
            } else {
                let p: Permutation = to_seq.unwrap_or_default().parse()?;
                Ok(format!("{}\n", perm_to_parker(&p)).into())
            }
        }
        Command::Gf { tier, order } => Ok(tier_series(tier, order)?.render_terms("z").into()),
        Command::Check { max_n } => {
            let outcomes = check::run_all(max_n);
            let ok = outcomes.iter().all(|o| o.passed);
            let text = outcomes
                .iter()
                .map(|o| format!("{} {} ({})\n", if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail))
                .collect();
            Ok(Output { text, ok })
        }
    }
}

fn table(args: TableArgs) -> Result<Output> {
    let exact: TierTable = match args.method {
        TableMethod::Brute => table_bruteforce(args.max_n)?,
        TableMethod::Recurrence => table_recurrence(args.max_n)?.0,
        TableMethod::Gf => table_gf(args.max_n)?,
    };
    let table = if args.cumulative { cumulative(&exact) } else { exact };
    let text = match (args.format, args.column) {
        (TableFormat::Bfile, Some(t)) => table.column_bfile(t),
        (TableFormat::Bfile, None) => table.to_bfile(),
        (_, Some(_)) => return Err(Error::Inconsistent("--column requires --format bfile".into())),
        (TableFormat::Text, None) => table.to_text(),
        (TableFormat::Csv, None) => table.to_csv(),
        (TableFormat::Json, None) => table.to_json(),
    };
    Ok(text.into())
}
