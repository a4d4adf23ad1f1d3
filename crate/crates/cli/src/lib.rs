//! Command-line front end: reads a self-describing JSON job, runs one
//! computation, and writes a JSON (or plain text) report.
//!
//! Exit codes: 0 success, 1 a hypothesis, corona or split failure (a
//! structured verdict is still written), 2 a parse or validation error,
//! 3 an internal error.

mod commands;
mod ringio;
mod text;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use thiserror::Error;
use whfactor_core::rings::Half;
use whfactor_core::Error as CoreError;

pub use commands::execute;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Upper bound on the size of an input file.
pub const MAX_INPUT_BYTES: u64 = 4 << 20;

#[derive(Parser, Debug)]
#[command(name = "whfactor", version, about = "Exact Wiener–Hopf factorization and Toeplitz diagnostics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandName {
    Minors,
    LeftInverse,
    RightInverse,
    Complete,
    Corona,
    WhScalar,
    WhMatrix,
    ApFactor,
    Report,
    Verify,
    Winding,
    Project,
    ApplyInverse,
}

impl CommandName {
    pub const ALL: [CommandName; 13] = [
        CommandName::Minors,
        CommandName::LeftInverse,
        CommandName::RightInverse,
        CommandName::Complete,
        CommandName::Corona,
        CommandName::WhScalar,
        CommandName::WhMatrix,
        CommandName::ApFactor,
        CommandName::Report,
        CommandName::Verify,
        CommandName::Winding,
        CommandName::Project,
        CommandName::ApplyInverse,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            CommandName::Minors => "minors",
            CommandName::LeftInverse => "left-inverse",
            CommandName::RightInverse => "right-inverse",
            CommandName::Complete => "complete",
            CommandName::Corona => "corona",
            CommandName::WhScalar => "wh-scalar",
            CommandName::WhMatrix => "wh-matrix",
            CommandName::ApFactor => "ap-factor",
            CommandName::Report => "report",
            CommandName::Verify => "verify",
            CommandName::Winding => "winding",
            CommandName::Project => "project",
            CommandName::ApplyInverse => "apply-inverse",
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Maximal minors with their row (or column) subsets.
    Minors(Options),
    /// One-sided inverse of a tall matrix from a Bezout certificate on its minors.
    LeftInverse(Options),
    /// One-sided inverse of a wide matrix.
    RightInverse(Options),
    /// Square completion of Φ (n×(n−1)) and its left inverse Ψ.
    Complete(Options),
    /// Corona problem for a tuple of rational or almost periodic functions.
    Corona(Options),
    /// Scalar factorization f = γ₋ r^k γ₊.
    WhScalar(Options),
    /// Matrix factorization G = G₋ D G₊ by the row, column or RH route.
    WhMatrix(Options),
    /// Almost periodic factorization by the row or RH route.
    ApFactor(Options),
    /// Fredholm report for T_G.
    Report(Options),
    /// Recheck an emitted factorization.
    Verify(Options),
    /// Winding number (rational) or mean motion (almost periodic).
    Winding(Options),
    /// Riesz projections of a rational function or frequency split of an AP polynomial.
    Project(Options),
    /// Solve T_G x = φ from a canonical factorization.
    ApplyInverse(Options),
}

impl Command {
    pub fn split(self) -> (CommandName, Options) {
        match self {
            Command::Minors(o) => (CommandName::Minors, o),
            Command::LeftInverse(o) => (CommandName::LeftInverse, o),
            Command::RightInverse(o) => (CommandName::RightInverse, o),
            Command::Complete(o) => (CommandName::Complete, o),
            Command::Corona(o) => (CommandName::Corona, o),
            Command::WhScalar(o) => (CommandName::WhScalar, o),
            Command::WhMatrix(o) => (CommandName::WhMatrix, o),
            Command::ApFactor(o) => (CommandName::ApFactor, o),
            Command::Report(o) => (CommandName::Report, o),
            Command::Verify(o) => (CommandName::Verify, o),
            Command::Winding(o) => (CommandName::Winding, o),
            Command::Project(o) => (CommandName::Project, o),
            Command::ApplyInverse(o) => (CommandName::ApplyInverse, o),
        }
    }
}

#[derive(clap::Args, Debug, Clone)]
pub struct Options {
    /// JSON job file.
    #[arg(long, short)]
    pub input: PathBuf,
    /// Construction route (wh-matrix: row|col|rh; ap-factor: row|rh; report: row|col|rh).
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    /// Half-plane for corona problems and one-sided inverses.
    #[arg(long, value_enum)]
    pub half: Option<HalfArg>,
    /// Root snapping and contour tolerance.
    #[arg(long, env = "WHFACTOR_TOLERANCE")]
    pub tolerance: Option<f64>,
    /// Base grid size for numeric winding.
    #[arg(long)]
    pub grid: Option<usize>,
    /// Omitted row (row route) or column (column route), 0-based.
    #[arg(long)]
    pub omitted: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Row,
    Col,
    Rh,
}

impl Mode {
    pub fn tag(self) -> &'static str {
        match self {
            Mode::Row => "row",
            Mode::Col => "col",
            Mode::Rh => "rh",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfArg {
    Plus,
    Minus,
}

impl From<HalfArg> for Half {
    fn from(h: HalfArg) -> Half {
        match h {
            HalfArg::Plus => Half::Plus,
            HalfArg::Minus => Half::Minus,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_GRID: usize = 1024;

/// Options after per-command validation.
#[derive(Debug, Clone)]
pub struct Settings {
    pub mode: Option<Mode>,
    pub half: Half,
    pub tolerance: f64,
    pub grid: usize,
    pub omitted: Option<usize>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    /// A mathematical verdict; `report` is written to stdout.
    #[error("{message}")]
    Verdict { message: String, report: Value },
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Verdict { .. } => EXIT_VERDICT,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

/// Whether a core error stems from malformed or out-of-contract input rather
/// than from a mathematical hypothesis failing.
fn is_input_error(e: &CoreError) -> bool {
    matches!(e, CoreError::Decode(_) | CoreError::ZeroDenominator | CoreError::ShapeMismatch(_) | CoreError::ZeroInput)
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        if is_input_error(&e) {
            CliError::Input(e.to_string())
        } else {
            CliError::Verdict { message: e.to_string(), report: commands::error_report(&e) }
        }
    }
}

fn validate(name: CommandName, o: &Options) -> Result<Settings, CliError> {
    let allowed_modes: &[Mode] = match name {
        CommandName::WhMatrix | CommandName::Report => &[Mode::Row, Mode::Col, Mode::Rh],
        CommandName::ApFactor => &[Mode::Row, Mode::Rh],
        _ => &[],
    };
    if let Some(m) = o.mode {
        if !allowed_modes.contains(&m) {
            return Err(CliError::Input(format!("--mode {} is not valid for {}", m.tag(), name.tag())));
        }
    }
    if o.omitted.is_some() && !matches!(name, CommandName::WhMatrix | CommandName::ApFactor | CommandName::Report) {
        return Err(CliError::Input(format!("--omitted is not valid for {}", name.tag())));
    }
    if o.grid.is_some() && name != CommandName::Winding {
        return Err(CliError::Input(format!("--grid is not valid for {}", name.tag())));
    }
    let tolerance = o.tolerance.unwrap_or(DEFAULT_TOLERANCE);
    if !(tolerance.is_finite() && tolerance > 0.0 && tolerance < 1.0) {
        return Err(CliError::Input(format!("tolerance must lie in (0, 1), got {tolerance}")));
    }
    let grid = o.grid.unwrap_or(DEFAULT_GRID);
    if !(16..=1 << 20).contains(&grid) {
        return Err(CliError::Input(format!("grid must lie in [16, 2^20], got {grid}")));
    }
    Ok(Settings { mode: o.mode, half: o.half.map(Half::from).unwrap_or(Half::Plus), tolerance, grid, omitted: o.omitted })
}

fn read_input(path: &PathBuf) -> Result<Value, CliError> {
    let meta = std::fs::metadata(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    if meta.len() > MAX_INPUT_BYTES {
        return Err(CliError::Input(format!("{}: input exceeds {} bytes", path.display(), MAX_INPUT_BYTES)));
    }
    let bytes = std::fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_slice(&bytes).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Deterministic rendering: sorted keys (serde_json's default map) and a
/// trailing newline.
pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
            s.push('\n');
            s
        }
        Format::Text => text::render(v),
    }
}

/// Parses `argv`, runs the command and writes its report; returns the exit
/// code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    let (name, options) = cli.command.split();
    let format = options.format;
    let result = std::panic::catch_unwind(|| -> Result<Value, CliError> {
        let settings = validate(name, &options)?;
        let doc = read_input(&options.input)?;
        execute(name, &doc, &settings)
    });
    let result = result.unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| p.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "panic".into());
        Err(CliError::Internal(msg))
    });
    match result {
        Ok(v) => {
            let _ = out.write_all(render(&v, format).as_bytes());
            EXIT_OK
        }
        Err(e) => {
            if let CliError::Verdict { report, .. } = &e {
                let _ = out.write_all(render(report, format).as_bytes());
            }
            let _ = writeln!(err, "whfactor {}: {e}", name.tag());
            e.exit_code()
        }
    }
}
