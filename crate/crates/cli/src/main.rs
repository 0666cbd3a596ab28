//! `lines27`: command-line front end. Results go to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 when every certificate passes, 1 on a failed certificate or
//! an aborted computation, 2 on a usage error.

mod commands;
mod envelope;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "lines27", version, about = "Exact computations on the 27 lines of a cubic surface and W(E6)")]
struct Cli {
    /// Output format. JSON is canonical and byte-stable; text is for reading.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Omit certificates from text output.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// The 27 lines with their classes and pairing matrix.
    Lines,
    /// The 72 roots of the E6 lattice.
    Roots,
    /// The 45 triangles.
    Triangles,
    /// W(E6): order, stabilizer chain, conjugacy classes, orbitals.
    Group,
    /// Isotypic decomposition of the permutation representation.
    Decompose,
    /// Triangle span, relation space, invariant subspaces, tautological ring.
    Equivalences,
    /// Constraint filter over the invariant subspaces, with audit trail and corollary checks.
    Theorem,
    /// Run every certificate in dependency order.
    VerifyAll {
        /// Flip meeting-matrix entry I,J before decomposing (failure-path testing).
        #[arg(long, value_name = "I,J", value_parser = parse_pair, hide = true)]
        inject_fault: Option<(usize, usize)>,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected I,J")?;
    let parse = |x: &str| -> Result<usize, String> {
        let v: usize = x.trim().parse().map_err(|e| format!("{x:?}: {e}"))?;
        if v >= lines27::N_LINES {
            return Err(format!("{v} is not a line index"));
        }
        Ok(v)
    };
    Ok((parse(a)?, parse(b)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, outcome) = match cli.command {
        Command::Lines => ("lines", commands::lines()),
        Command::Roots => ("roots", commands::roots()),
        Command::Triangles => ("triangles", commands::triangles()),
        Command::Group => ("group", commands::group()),
        Command::Decompose => ("decompose", commands::decompose()),
        Command::Equivalences => ("equivalences", commands::equivalences()),
        Command::Theorem => ("theorem", commands::theorem()),
        Command::VerifyAll { inject_fault } => ("verify-all", Ok(commands::verify_all(inject_fault))),
    };
    let envelope = outcome.unwrap_or_else(|e| {
        eprintln!("lines27 {name}: {e}");
        commands::aborted(name, &e)
    });
    match cli.format {
        Format::Json => print!("{}", envelope.render_json()),
        Format::Text => print!("{}", envelope.render_text(cli.quiet)),
    }
    if let Some(c) = envelope.certificates.first_failure() {
        eprintln!("lines27 {name}: certificate `{}` failed: {}", c.name, c.detail);
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
