//! Subcommand dispatch.
//!
//! Exit codes: 0 success, 2 parse error (or usage), 3 validation failure or
//! malformed document, 4 theorem violation, 70 internal error.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use semifree_core::classifier::{
    check_structure, count_positive_genus, decide_hamiltonian, enumerate_configurations,
    validate_action_data, ActionData,
};
use semifree_core::constraints::FixedComponent;
use semifree_core::dh::dh_volume_corrected;
use semifree_core::homology::{h2_symplectomorphism_actions, Bundle, RuledSurface};
use semifree_core::{rat, Rat};

use crate::format::parse_action;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_THEOREM: i32 = 4;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Parser)]
#[command(
    name = "semifree",
    about = "Validate, decide, and enumerate fixed-point data of semifree circle actions \
             whose reduced spaces are ruled surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BundleArg {
    Trivial,
    Nontrivial,
}

impl From<BundleArg> for Bundle {
    fn from(b: BundleArg) -> Bundle {
        match b {
            BundleArg::Trivial => Bundle::Trivial,
            BundleArg::Nontrivial => Bundle::Nontrivial,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check a document against every law; exit 0 iff it passes.
    Validate { file: PathBuf },
    /// For circle-domain data: hunt for the inconsistency that forces the
    /// action to be Hamiltonian.
    Decide { file: PathBuf },
    /// Exhaustively enumerate admissible interior configurations.
    Enumerate {
        #[arg(long)]
        surface: BundleArg,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        bound: i64,
        #[arg(long = "max-walls")]
        max_walls: usize,
    },
    /// Print the Duistermaat–Heckman volume as CSV (t, f, one-sided slopes).
    Dh {
        file: PathBuf,
        /// Sample at n+1 evenly spaced points (breakpoints are always added).
        #[arg(long, default_value_t = 16)]
        samples: usize,
        /// Print floating-point values instead of exact rationals.
        #[arg(long)]
        float: bool,
    },
    /// Print the pairing-preserving H² matrices and the filtered final set.
    Actions {
        #[arg(long)]
        surface: BundleArg,
        #[arg(long)]
        genus: u32,
    },
}

/// Runs the CLI on explicit arguments, writing to the given sinks.  Returns
/// the process exit code.
pub fn run<I, S>(args: I, out: &mut dyn std::io::Write, err: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successful exits; real usage errors are 2.
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_PARSE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        // A closed pipe (e.g. `semifree dh … | head`) is a normal way for the
        // consumer to stop reading, not a failure of ours.
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "internal error: {e}");
            EXIT_INTERNAL
        }
    }
}

fn dispatch(
    command: Command,
    out: &mut dyn std::io::Write,
    err: &mut dyn std::io::Write,
) -> std::io::Result<i32> {
    match command {
        Command::Validate { file } => {
            let data = match load(&file, err)? {
                Ok(d) => d,
                Err(code) => return Ok(code),
            };
            cmd_validate(&data, out, err)
        }
        Command::Decide { file } => {
            let data = match load(&file, err)? {
                Ok(d) => d,
                Err(code) => return Ok(code),
            };
            cmd_decide(&data, out, err)
        }
        Command::Enumerate { surface, genus, bound, max_walls } => {
            let surface = RuledSurface::new(surface.into(), genus);
            cmd_enumerate(surface, bound, max_walls, out, err)
        }
        Command::Dh { file, samples, float } => {
            let data = match load(&file, err)? {
                Ok(d) => d,
                Err(code) => return Ok(code),
            };
            cmd_dh(&data, samples, float, out, err)
        }
        Command::Actions { surface, genus } => {
            let surface = RuledSurface::new(surface.into(), genus);
            cmd_actions(surface, out)
        }
    }
}

/// Reads and parses a document; maps IO problems to parse-class failures.
fn load(
    path: &PathBuf,
    err: &mut dyn std::io::Write,
) -> std::io::Result<Result<ActionData, i32>> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "{}: {e}", path.display())?;
            return Ok(Err(EXIT_PARSE));
        }
    };
    match parse_action(&text) {
        Ok(data) => Ok(Ok(data)),
        Err(e) => {
            writeln!(err, "{}: {e}", path.display())?;
            Ok(Err(EXIT_PARSE))
        }
    }
}

fn cmd_validate(
    data: &ActionData,
    out: &mut dyn std::io::Write,
    err: &mut dyn std::io::Write,
) -> std::io::Result<i32> {
    let report = match validate_action_data(data) {
        Ok(r) => r,
        Err(m) => {
            writeln!(err, "{m}")?;
            return Ok(EXIT_VALIDATION);
        }
    };
    if !report.passed() {
        for v in &report.violations {
            writeln!(out, "violation: {v}")?;
        }
        let n = report.violations.len();
        writeln!(out, "FAIL ({n} violation{})", if n == 1 { "" } else { "s" })?;
        return Ok(EXIT_VALIDATION);
    }
    let count = match count_positive_genus(data) {
        Ok(c) => c,
        Err(t) => {
            writeln!(err, "{t}")?;
            return Ok(EXIT_THEOREM);
        }
    };
    let mut line = format!(
        "PASS ({} positive-genus surface{}",
        count.count,
        if count.count == 1 { "" } else { "s" }
    );
    if count.count == 4 {
        let _ = write!(line, ", all genus {}", data.surface.genus);
    }
    line.push(')');
    writeln!(out, "{line}")?;
    Ok(EXIT_OK)
}

fn cmd_decide(
    data: &ActionData,
    out: &mut dyn std::io::Write,
    err: &mut dyn std::io::Write,
) -> std::io::Result<i32> {
    if !data.domain.is_circle() {
        writeln!(
            err,
            "decide needs circle-domain data; an interval domain presents a moment map, \
             so the action is Hamiltonian by construction"
        )?;
        return Ok(EXIT_VALIDATION);
    }
    match decide_hamiltonian(data) {
        Ok(verdict) => {
            writeln!(out, "{verdict}")?;
            Ok(EXIT_OK)
        }
        Err(m) => {
            writeln!(err, "{m}")?;
            Ok(EXIT_VALIDATION)
        }
    }
}

fn cmd_enumerate(
    surface: RuledSurface,
    bound: i64,
    max_walls: usize,
    out: &mut dyn std::io::Write,
    err: &mut dyn std::io::Write,
) -> std::io::Result<i32> {
    let enumeration = match enumerate_configurations(surface, bound, max_walls) {
        Ok(e) => e,
        Err(e) => {
            writeln!(err, "{e}")?;
            return Ok(EXIT_VALIDATION);
        }
    };
    for config in &enumeration.configurations {
        let mut parts = Vec::new();
        for c in &config.components {
            match c {
                FixedComponent::Surface { genus, dual } => {
                    parts.push(format!("genus {genus} dual ({}, {})", dual.u, dual.v))
                }
                FixedComponent::Isolated { weights } => {
                    parts.push(format!("isolated {weights:?}"))
                }
            }
        }
        writeln!(
            out,
            "config total={}: {}",
            config.positive_genus_total,
            parts.join("; ")
        )?;
    }
    writeln!(out, "configurations: {}", enumeration.configurations.len())?;
    let totals: Vec<String> =
        enumeration.achievable_totals.iter().map(|t| t.to_string()).collect();
    writeln!(out, "achievable positive-genus totals: {{{}}}", totals.join(", "))?;
    writeln!(out, "maximum positive-genus total: {}", enumeration.max_total)?;
    Ok(EXIT_OK)
}

fn format_rat(x: &Rat, float: bool) -> String {
    if float {
        format!("{}", x.to_f64().unwrap_or(f64::NAN))
    } else {
        format!("{x}")
    }
}

fn cmd_dh(
    data: &ActionData,
    samples: usize,
    float: bool,
    out: &mut dyn std::io::Write,
    err: &mut dyn std::io::Write,
) -> std::io::Result<i32> {
    if let Err(m) = check_structure(data) {
        writeln!(err, "{m}")?;
        return Ok(EXIT_VALIDATION);
    }
    if samples == 0 {
        writeln!(err, "--samples must be at least 1")?;
        return Ok(EXIT_PARSE);
    }
    let f = dh_volume_corrected(data.surface, &data.pieces, &data.isolated_corrections());
    let (lo, hi) = data.domain.bounds();
    let mut points: BTreeSet<Rat> = f.internal_breaks().into_iter().collect();
    let width = hi - lo;
    for i in 0..=samples {
        points.insert(lo + &width * rat(i as i64) / rat(samples as i64));
    }
    writeln!(out, "t,f,slope_left,slope_right")?;
    for t in points {
        let value = f.eval(&t).expect("sample points lie in the domain");
        let left = f.slope_left_of(&t);
        let right = f.slope_right_of(&t);
        let left = left.or_else(|| right.clone()).expect("one-sided slope exists");
        let right = right.unwrap_or_else(|| left.clone());
        writeln!(
            out,
            "{},{},{},{}",
            format_rat(&t, float),
            format_rat(&value, float),
            format_rat(&left, float),
            format_rat(&right, float)
        )?;
    }
    Ok(EXIT_OK)
}

fn cmd_actions(surface: RuledSurface, out: &mut dyn std::io::Write) -> std::io::Result<i32> {
    let actions = h2_symplectomorphism_actions(surface);
    for m in &actions.stage1 {
        writeln!(out, "stage1: {m}")?;
    }
    for m in &actions.finals {
        writeln!(out, "final: {m}")?;
    }
    Ok(EXIT_OK)
}
