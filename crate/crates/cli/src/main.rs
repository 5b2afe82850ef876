mod commands;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use laumon::{Caps, Error};

#[derive(Parser, Debug)]
#[command(
    name = "laumon",
    version,
    about = "Laumon spaces, Kostant partitions and their identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the Kostant partitions of a coroot vector.
    Kostant {
        #[command(flatten)]
        common: Common,
        /// Coordinates g1,...,g_{n-1}.
        #[arg(long, value_delimiter = ',', required = true)]
        gamma: Vec<u32>,
    },
    /// Poincare polynomial of the Laumon space.
    Poincare {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<u32>,
        /// Re-centre around degree zero and print in q = t^(1/2).
        #[arg(long)]
        shifted: bool,
    },
    /// Coefficients of the closed generating function.
    Genfunc {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        degree: u32,
    },
    /// Torus-fixed points and their cells.
    Cells {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<u32>,
        /// Add the conjectured cell dimension.
        #[arg(long)]
        dims: bool,
    },
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(suite_names()))]
        suite: String,
        /// Treat failed conjecture checks as failures.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Override an enumeration limit: kostant=W, weyl=N or filtration=D. Repeatable.
    #[arg(long = "cap", value_parser = parse_cap)]
    caps: Vec<(CapKind, u32)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, Debug)]
enum CapKind {
    Kostant,
    Weyl,
    Filtration,
}

fn suite_names() -> Vec<&'static str> {
    let mut names = vec!["all"];
    names.extend(laumon::suites::SUITES);
    names
}

fn parse_cap(s: &str) -> Result<(CapKind, u32), String> {
    let (key, value) = s.split_once('=').ok_or("expected KEY=VALUE")?;
    let kind = match key {
        "kostant" => CapKind::Kostant,
        "weyl" => CapKind::Weyl,
        "filtration" => CapKind::Filtration,
        other => {
            return Err(format!(
                "unknown cap {other}; expected kostant, weyl or filtration"
            ))
        }
    };
    let value = value.parse().map_err(|e| format!("{e}"))?;
    Ok((kind, value))
}

impl Common {
    fn caps(&self) -> Caps {
        let mut caps = Caps::default();
        for &(kind, value) in &self.caps {
            match kind {
                CapKind::Kostant => caps.kostant_weight = value,
                CapKind::Weyl => caps.weyl_rank = value as usize,
                CapKind::Filtration => caps.filtration_dim = value,
            }
        }
        caps
    }
}

/// Errors caused by the arguments rather than by the mathematics.
fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidRank(_)
            | Error::IndexOutOfRange { .. }
            | Error::DimensionMismatch { .. }
            | Error::CapExceeded { .. }
            | Error::DegreeBoundMismatch(..)
            | Error::DegreeTooSmall { .. }
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, result) = match &cli.command {
        Command::Kostant { common, gamma } => {
            (common, commands::kostant(common.n, gamma, &common.caps()))
        }
        Command::Poincare {
            common,
            alpha,
            shifted,
        } => (
            common,
            commands::poincare(common.n, alpha, *shifted, &common.caps()),
        ),
        Command::Genfunc { common, degree } => (common, commands::genfunc(common.n, *degree)),
        Command::Cells {
            common,
            alpha,
            dims,
        } => (
            common,
            commands::cells(common.n, alpha, *dims, &common.caps()),
        ),
        Command::Verify {
            common,
            degree,
            suite,
            strict,
        } => (
            common,
            commands::verify(common.n, *degree, suite, *strict, &common.caps()),
        ),
    };
    match result {
        Ok(out) => {
            print!("{}", render::render(&out, common.format));
            ExitCode::from(out.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage_error(&e) { 2 } else { 1 })
        }
    }
}
