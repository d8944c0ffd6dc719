use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dicyclic_cli::{
    cmd_autos, cmd_elements, cmd_multable, cmd_spaces, cmd_verify, AutoFilters, CliError, Fault,
    Format, Selector,
};

/// Dicyclic groups, their automorphisms and generalized symmetric spaces.
#[derive(Debug, Parser)]
#[command(name = "dicyclic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Group parameter; Dc_n has order 4n.
    #[arg(long)]
    n: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the elements with their orders, marking the center.
    Elements(Common),
    /// Print the Cayley table.
    Multable(Common),
    /// List the automorphisms.
    Autos {
        #[command(flatten)]
        common: Common,
        /// Keep automorphisms of exactly this order.
        #[arg(long)]
        order: Option<u64>,
        #[arg(long, conflicts_with = "outer")]
        inner: bool,
        #[arg(long)]
        outer: bool,
        #[arg(long)]
        involutions: bool,
    },
    /// Fixed-point groups, symmetric spaces and orbits.
    Spaces {
        #[command(flatten)]
        common: Common,
        #[arg(long, group = "selector")]
        all: bool,
        /// The automorphism x -> x^R, y -> yx^S.
        #[arg(long, value_name = "R,S", group = "selector", value_parser = parse_rs)]
        rs: Option<(i64, i64)>,
        /// Position in the `autos` listing.
        #[arg(long, group = "selector")]
        index: Option<usize>,
    },
    /// Check every criterion against brute force over a range of n.
    Verify {
        #[arg(long, default_value_t = 2)]
        n_min: i64,
        #[arg(long, default_value_t = 8)]
        n_max: i64,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
}

fn parse_rs(text: &str) -> Result<(i64, i64), String> {
    let (r, s) = text
        .split_once(',')
        .ok_or_else(|| format!("expected R,S, got {text:?}"))?;
    let parse = |v: &str| v.trim().parse::<i64>().map_err(|e| format!("{v:?}: {e}"));
    Ok((parse(r)?, parse(s)?))
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let text = match cli.command {
        Command::Elements(c) => cmd_elements(c.n, c.format)?,
        Command::Multable(c) => cmd_multable(c.n, c.format)?,
        Command::Autos {
            common,
            order,
            inner,
            outer,
            involutions,
        } => {
            let filters = AutoFilters {
                order,
                inner,
                outer,
                involutions,
            };
            cmd_autos(common.n, filters, common.format)?
        }
        Command::Spaces {
            common,
            all,
            rs,
            index,
        } => {
            let selector = match (all, rs, index) {
                (_, Some((r, s)), _) => Selector::Rs(r, s),
                (_, _, Some(i)) => Selector::Index(i),
                (true, _, _) => Selector::All,
                _ => {
                    return Err(CliError::Usage(
                        "give one of --all, --rs R,S, --index I".into(),
                    ))
                }
            };
            cmd_spaces(common.n, selector, common.format)?
        }
        Command::Verify {
            n_min,
            n_max,
            inject_fault,
        } => {
            let summary = cmd_verify(n_min, n_max, inject_fault)?;
            return Ok((summary.render(), summary.all_passed()));
        }
    };
    Ok((text, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
